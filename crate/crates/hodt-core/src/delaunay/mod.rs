//! Delaunay triangulation of a general-position point set, with the edge-flip
//! and adjacency machinery the order-k analysis builds on.
//!
//! Construction is incremental in lexicographic order: each new point lies
//! outside the hull of its predecessors, gets fanned to the visible hull
//! chain, and the new edges are legalized by recursive flips. The acceptance
//! contract is the empty-circle audit, not the construction path.

use std::collections::{HashMap, VecDeque};

use crate::error::Error;
use crate::geom::{self, count_in_circumcircle, orient, CirclePosition, Grid, Orientation};
use crate::pointset::PointSet;
use crate::Result;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
struct Tri {
    v: [u32; 3],
    nb: [u32; 3], // nb[i] faces edge (v[i+1], v[i+2]), NONE on the hull
}

/// An index-based triangulation over an immutable [`PointSet`].
///
/// Triangles are counterclockwise; adjacency is symmetric; hull edges have no
/// neighbor. Cloning produces an independent snapshot.
#[derive(Debug, Clone)]
pub struct Triangulation {
    n: usize,
    tris: Vec<Tri>,
}

/// An undirected edge as an ordered pair of vertex indices.
pub type Edge = (usize, usize);

/// Normalizes an undirected edge to `(min, max)`.
pub fn edge_key(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Triangulation {
    /// Rebuilds a triangulation from a bare triangle list, restoring
    /// orientation and adjacency. Fails if the list is not an edge-manifold
    /// complex or contains a degenerate triangle.
    pub fn from_triangles(ps: &PointSet, triangles: &[[usize; 3]]) -> Result<Triangulation> {
        let n = ps.len();
        let mut tris = Vec::with_capacity(triangles.len());
        for &[a, b, c] in triangles {
            let t = match orient(ps[a], ps[b], ps[c]) {
                Orientation::CounterClockwise => [a as u32, b as u32, c as u32],
                Orientation::Clockwise => [a as u32, c as u32, b as u32],
                Orientation::Collinear => return Err(Error::DegenerateCollinear(a, b, c)),
            };
            tris.push(Tri { v: t, nb: [NONE; 3] });
        }
        let mut by_edge: HashMap<(u32, u32), Vec<(u32, u8)>> = HashMap::new();
        for (ti, t) in tris.iter().enumerate() {
            for i in 0..3 {
                let a = t.v[(i + 1) % 3];
                let b = t.v[(i + 2) % 3];
                let key = (a.min(b), a.max(b));
                by_edge.entry(key).or_default().push((ti as u32, i as u8));
            }
        }
        for (key, users) in &by_edge {
            match users.len() {
                1 => {}
                2 => {
                    let (t0, s0) = users[0];
                    let (t1, s1) = users[1];
                    tris[t0 as usize].nb[s0 as usize] = t1;
                    tris[t1 as usize].nb[s1 as usize] = t0;
                }
                k => {
                    return Err(Error::InternalConsistency(format!(
                        "edge {key:?} used by {k} triangles"
                    )))
                }
            }
        }
        Ok(Triangulation { n, tris })
    }

    pub fn num_points(&self) -> usize {
        self.n
    }

    pub fn num_triangles(&self) -> usize {
        self.tris.len()
    }

    /// Triangle vertex triples, counterclockwise.
    pub fn triangles(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        self.tris
            .iter()
            .map(|t| [t.v[0] as usize, t.v[1] as usize, t.v[2] as usize])
    }

    pub fn triangle(&self, t: usize) -> [usize; 3] {
        let t = &self.tris[t];
        [t.v[0] as usize, t.v[1] as usize, t.v[2] as usize]
    }

    /// Neighbor triangle across edge slot `i` of triangle `t`.
    pub fn neighbor(&self, t: usize, i: usize) -> Option<usize> {
        let nb = self.tris[t].nb[i];
        (nb != NONE).then_some(nb as usize)
    }

    /// Undirected edge set, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = Vec::with_capacity(self.tris.len() * 3 / 2 + 3);
        for t in &self.tris {
            for i in 0..3 {
                let a = t.v[(i + 1) % 3] as usize;
                let b = t.v[(i + 2) % 3] as usize;
                if a < b {
                    out.push((a, b));
                } else if t.nb[i] == NONE {
                    out.push((b, a)); // hull edge seen from its only triangle
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.find_edge(u, v).is_some()
    }

    /// Number of hull (boundary) edges, which equals the number of hull
    /// vertices.
    pub fn hull_size(&self) -> usize {
        self.tris
            .iter()
            .map(|t| t.nb.iter().filter(|&&n| n == NONE).count())
            .sum()
    }

    /// Locates the triangle and slot such that the edge opposite that slot is
    /// `{u, v}`.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        let (u, v) = (u as u32, v as u32);
        for (ti, t) in self.tris.iter().enumerate() {
            for i in 0..3 {
                let a = t.v[(i + 1) % 3];
                let b = t.v[(i + 2) % 3];
                if (a == u && b == v) || (a == v && b == u) {
                    return Some((ti, i));
                }
            }
        }
        None
    }

    /// Adjacency lists of the 1-skeleton.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Flips the interior edge `{u, v}` and returns the opposite diagonal.
    ///
    /// Errors with `BoundaryEdge` if the edge is on the hull and
    /// `NonConvexQuad` if the two adjacent triangles do not form a strictly
    /// convex quadrilateral.
    pub fn flip_diagonal(&mut self, ps: &PointSet, u: usize, v: usize) -> Result<Edge> {
        let (t, i) = self
            .find_edge(u, v)
            .ok_or_else(|| Error::InvalidParameter(format!("({u}, {v}) is not an edge")))?;
        let o = self.tris[t].nb[i];
        if o == NONE {
            return Err(Error::BoundaryEdge(u, v));
        }
        let o = o as usize;
        let c = self.tris[t].v[i] as usize;
        let j = self.slot_facing(o, t);
        let d = self.tris[o].v[j] as usize;
        let oc = orient(ps[c], ps[d], ps[u]);
        let od = orient(ps[c], ps[d], ps[v]);
        if oc == Orientation::Collinear {
            return Err(Error::DegenerateCollinear(c, d, u));
        }
        if od == Orientation::Collinear {
            return Err(Error::DegenerateCollinear(c, d, v));
        }
        if oc == od {
            return Err(Error::NonConvexQuad(u, v));
        }
        self.flip(t, i);
        Ok(edge_key(c, d))
    }

    fn slot_facing(&self, t: usize, other: usize) -> usize {
        let other = other as u32;
        (0..3)
            .find(|&i| self.tris[t].nb[i] == other)
            .expect("adjacency must be symmetric")
    }

    /// Flips the edge opposite slot `i` of triangle `t`. The caller must have
    /// established that the quadrilateral is strictly convex.
    fn flip(&mut self, t: usize, i: usize) {
        let o = self.tris[t].nb[i] as usize;
        let j = self.slot_facing(o, t);
        let c = self.tris[t].v[i];
        let a = self.tris[t].v[(i + 1) % 3];
        let b = self.tris[t].v[(i + 2) % 3];
        let d = self.tris[o].v[j];
        debug_assert_eq!(self.tris[o].v[(j + 1) % 3], b);
        debug_assert_eq!(self.tris[o].v[(j + 2) % 3], a);
        let t1 = self.tris[t].nb[(i + 1) % 3]; // across (b, c)
        let t2 = self.tris[t].nb[(i + 2) % 3]; // across (c, a)
        let o1 = self.tris[o].nb[(j + 1) % 3]; // across (a, d)
        let o2 = self.tris[o].nb[(j + 2) % 3]; // across (d, b)
        self.tris[t] = Tri { v: [c, a, d], nb: [o1, o as u32, t2] };
        self.tris[o] = Tri { v: [c, d, b], nb: [o2, t1, t as u32] };
        if o1 != NONE {
            let s = self.slot_facing(o1 as usize, o);
            self.tris[o1 as usize].nb[s] = t as u32;
        }
        if t1 != NONE {
            let s = self.slot_facing(t1 as usize, t);
            self.tris[t1 as usize].nb[s] = o as u32;
        }
    }

    /// Structural audit: triangle orientation, adjacency symmetry and shared
    /// vertices, and the Euler counts for a triangulated convex region.
    pub fn validate(&self, ps: &PointSet) -> Result<()> {
        for (ti, t) in self.tris.iter().enumerate() {
            let [a, b, c] = [t.v[0] as usize, t.v[1] as usize, t.v[2] as usize];
            if orient(ps[a], ps[b], ps[c]) != Orientation::CounterClockwise {
                return Err(Error::InternalConsistency(format!(
                    "triangle {ti} not counterclockwise"
                )));
            }
            for i in 0..3 {
                let nb = t.nb[i];
                if nb != NONE {
                    let o = &self.tris[nb as usize];
                    if !o.nb.contains(&(ti as u32)) {
                        return Err(Error::InternalConsistency(format!(
                            "asymmetric adjacency {ti} -> {nb}"
                        )));
                    }
                    let e = [t.v[(i + 1) % 3], t.v[(i + 2) % 3]];
                    if !(o.v.contains(&e[0]) && o.v.contains(&e[1])) {
                        return Err(Error::InternalConsistency(format!(
                            "neighbor {nb} of {ti} does not share its edge"
                        )));
                    }
                }
            }
        }
        let h = self.hull_size();
        let expected_t = 2 * self.n - h - 2;
        if self.tris.len() != expected_t {
            return Err(Error::InternalConsistency(format!(
                "triangle count {} does not match Euler count {} (n={}, h={})",
                self.tris.len(),
                expected_t,
                self.n,
                h
            )));
        }
        let expected_e = 3 * self.n - h - 3;
        if self.edges().len() != expected_e {
            return Err(Error::InternalConsistency(format!(
                "edge count {} does not match Euler count {}",
                self.edges().len(),
                expected_e
            )));
        }
        Ok(())
    }
}

/// Graph distance between `u` and `v` in the triangulation's 1-skeleton,
/// truncated at `limit`. Returns `None` when the distance exceeds the limit.
pub fn hop_distance(t: &Triangulation, u: usize, v: usize, limit: usize) -> Option<usize> {
    if u == v {
        return Some(0);
    }
    let adj = t.adjacency();
    bfs_distance(&adj, u, v, limit)
}

pub(crate) fn bfs_distance(adj: &[Vec<usize>], u: usize, v: usize, limit: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(w) = queue.pop_front() {
        if dist[w] >= limit {
            continue;
        }
        for &x in &adj[w] {
            if dist[x] == usize::MAX {
                dist[x] = dist[w] + 1;
                if x == v {
                    return Some(dist[x]);
                }
                queue.push_back(x);
            }
        }
    }
    (dist[v] != usize::MAX).then_some(dist[v])
}

/// Builds the Delaunay triangulation of `ps`.
///
/// Unique in general position; collinear triples met during hull construction
/// and cocircular quadruples met during legalization raise degeneracy errors.
pub fn delaunay_triangulate(ps: &PointSet) -> Result<Triangulation> {
    let n = ps.len();
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "need at least 3 points, got {n}"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        ps[i]
            .x
            .total_cmp(&ps[j].x)
            .then_with(|| ps[i].y.total_cmp(&ps[j].y))
    });
    for w in order.windows(2) {
        if ps[w[0]] == ps[w[1]] {
            return Err(Error::DuplicatePoint(w[0], w[1]));
        }
    }

    let (i0, i1, i2) = (order[0], order[1], order[2]);
    let first = match orient(ps[i0], ps[i1], ps[i2]) {
        Orientation::CounterClockwise => [i0 as u32, i1 as u32, i2 as u32],
        Orientation::Clockwise => [i0 as u32, i2 as u32, i1 as u32],
        Orientation::Collinear => return Err(Error::DegenerateCollinear(i0, i1, i2)),
    };
    let mut t = Triangulation {
        n,
        tris: vec![Tri { v: first, nb: [NONE; 3] }],
    };
    // Doubly linked hull in counterclockwise order, plus for each hull vertex
    // the triangle inside its outgoing directed edge.
    let mut next = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    let mut edge_tri: Vec<(u32, u8)> = vec![(NONE, 0); n];
    let [a, b, c] = first.map(|x| x as usize);
    next[a] = b;
    next[b] = c;
    next[c] = a;
    prev[b] = a;
    prev[c] = b;
    prev[a] = c;
    edge_tri[a] = (0, 2); // edge (a,b) is opposite v[2]=c
    edge_tri[b] = (0, 0);
    edge_tri[c] = (0, 1);

    for &p in order.iter().skip(3) {
        insert_point(ps, &mut t, &mut next, &mut prev, &mut edge_tri, p)?;
    }
    Ok(t)
}

fn insert_point(
    ps: &PointSet,
    t: &mut Triangulation,
    next: &mut [usize],
    prev: &mut [usize],
    edge_tri: &mut [(u32, u8)],
    p: usize,
) -> Result<()> {
    // Collect the contiguous chain of hull edges visible from p.
    let start = {
        let anchor = (0..next.len()).find(|&u| next[u] != usize::MAX).unwrap();
        let mut u = anchor;
        let mut visible_at = None;
        loop {
            let v = next[u];
            match orient(ps[u], ps[v], ps[p]) {
                Orientation::Clockwise => {
                    visible_at = Some(u);
                    break;
                }
                Orientation::Collinear => return Err(Error::DegenerateCollinear(u, v, p)),
                Orientation::CounterClockwise => {}
            }
            u = v;
            if u == anchor {
                break;
            }
        }
        let hit = visible_at.ok_or_else(|| {
            Error::InternalConsistency("no hull edge visible from inserted point".into())
        })?;
        // rewind to the first visible edge of the contiguous chain
        let mut w = hit;
        loop {
            let pw = prev[w];
            match orient(ps[pw], ps[w], ps[p]) {
                Orientation::Clockwise => w = pw,
                Orientation::Collinear => return Err(Error::DegenerateCollinear(pw, w, p)),
                Orientation::CounterClockwise => break,
            }
            if w == hit {
                return Err(Error::InternalConsistency(
                    "entire hull visible from an inserted point".into(),
                ));
            }
        }
        w
    };

    // Fan new triangles over the visible chain.
    let mut u = start;
    let mut new_tris: Vec<u32> = Vec::new();
    let mut legalize_stack: Vec<(usize, usize)> = Vec::new();
    loop {
        let v = next[u];
        let visible = match orient(ps[u], ps[v], ps[p]) {
            Orientation::Clockwise => true,
            Orientation::Collinear => return Err(Error::DegenerateCollinear(u, v, p)),
            Orientation::CounterClockwise => false,
        };
        if !visible {
            break;
        }
        // Hull hints go stale when legalization hands a boundary edge to a
        // different triangle, so verify and fall back to a scan.
        let (inner, inner_slot) = hull_triangle_of(t, edge_tri[u], u, v)?;
        let ti = t.tris.len() as u32;
        // triangle [p, v, u]: edge 0 = (v, u) faces the old interior triangle
        t.tris.push(Tri {
            v: [p as u32, v as u32, u as u32],
            nb: [inner, NONE, NONE],
        });
        t.tris[inner as usize].nb[inner_slot as usize] = ti;
        if let Some(&prev_ti) = new_tris.last() {
            // consecutive fan triangles [p, u, w] and [p, v, u] share edge (p, u)
            t.tris[prev_ti as usize].nb[2] = ti;
            t.tris[ti as usize].nb[1] = prev_ti;
        }
        new_tris.push(ti);
        legalize_stack.push((ti as usize, 0));
        u = v;
    }
    let chain_end = u;

    // Splice p into the hull between `start` and `chain_end`.
    let mut w = next[start];
    while w != chain_end {
        let nw = next[w];
        next[w] = usize::MAX;
        prev[w] = usize::MAX;
        edge_tri[w] = (NONE, 0);
        w = nw;
    }
    next[start] = p;
    prev[p] = start;
    next[p] = chain_end;
    prev[chain_end] = p;
    // first fan triangle [p, v1, start]: its edge 1 = (start, p)
    edge_tri[start] = (new_tris[0], 1);
    // last fan triangle [p, chain_end, u_k]: its edge 2 = (p, chain_end)
    edge_tri[p] = (*new_tris.last().unwrap(), 2);

    while let Some((ti, slot)) = legalize_stack.pop() {
        legalize(ps, t, ti, slot, &mut legalize_stack)?;
    }
    Ok(())
}

/// Resolves the triangle carrying hull edge `{u, v}`, trusting the hint when
/// it still matches.
fn hull_triangle_of(
    t: &Triangulation,
    hint: (u32, u8),
    u: usize,
    v: usize,
) -> Result<(u32, u8)> {
    let (ti, slot) = hint;
    if ti != NONE {
        let tri = &t.tris[ti as usize];
        let a = tri.v[(slot as usize + 1) % 3] as usize;
        let b = tri.v[(slot as usize + 2) % 3] as usize;
        if tri.nb[slot as usize] == NONE && ((a == u && b == v) || (a == v && b == u)) {
            return Ok(hint);
        }
    }
    for (i, tri) in t.tris.iter().enumerate() {
        for s in 0..3 {
            let a = tri.v[(s + 1) % 3] as usize;
            let b = tri.v[(s + 2) % 3] as usize;
            if tri.nb[s] == NONE && ((a == u && b == v) || (a == v && b == u)) {
                return Ok((i as u32, s as u8));
            }
        }
    }
    Err(Error::InternalConsistency(format!(
        "no triangle carries hull edge ({u}, {v})"
    )))
}

fn legalize(
    ps: &PointSet,
    t: &mut Triangulation,
    ti: usize,
    slot: usize,
    stack: &mut Vec<(usize, usize)>,
) -> Result<()> {
    let o = t.tris[ti].nb[slot];
    if o == NONE {
        return Ok(());
    }
    let o = o as usize;
    let j = t.slot_facing(o, ti);
    let [a, b, c] = t.tris[ti].v.map(|x| x as usize);
    let d = t.tris[o].v[j] as usize;
    match geom::in_circle(ps[a], ps[b], ps[c], ps[d])? {
        CirclePosition::Inside => {
            t.flip(ti, slot);
            // the two edges of the rebuilt triangles facing away from the
            // flipped diagonal may now be illegal
            stack.push((ti, 0));
            stack.push((o, 0));
            Ok(())
        }
        CirclePosition::On => {
            let e = [a, b, c];
            Err(Error::DegenerateCocircular(e[0], e[1], e[2], d))
        }
        CirclePosition::Outside => Ok(()),
    }
}

/// Empty-circle audit: every triangle's circumcircle contains no other point.
pub fn audit_delaunay(t: &Triangulation, ps: &PointSet, grid: Option<&Grid>) -> Result<()> {
    for tri in t.triangles() {
        let c = count_in_circumcircle(ps, tri, Some(0), grid)?;
        if c != 0 {
            return Err(Error::InternalConsistency(format!(
                "triangle {tri:?} has {c} points inside its circumcircle"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_set(n: usize, seed: u64) -> PointSet {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        PointSet::new(
            (0..n)
                .map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn four_point_diagonal_choice() {
        let ps = PointSet::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(0.9, 0.95),
        ])
        .unwrap();
        let t = delaunay_triangulate(&ps).unwrap();
        assert_eq!(t.num_triangles(), 2);
        t.validate(&ps).unwrap();
        audit_delaunay(&t, &ps, None).unwrap();
    }

    #[test]
    fn random_sets_pass_empty_circle_audit() {
        for seed in 0..10 {
            let ps = random_set(10 + (seed as usize % 30), seed);
            let t = delaunay_triangulate(&ps).unwrap();
            t.validate(&ps).unwrap();
            audit_delaunay(&t, &ps, None).unwrap();
        }
    }

    #[test]
    fn deterministic_construction() {
        let ps = random_set(60, 99);
        let t1 = delaunay_triangulate(&ps).unwrap();
        let t2 = delaunay_triangulate(&ps).unwrap();
        let mut a: Vec<_> = t1.triangles().collect();
        let mut b: Vec<_> = t2.triangles().collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn flip_is_involutive_and_valid() {
        let ps = random_set(25, 5);
        let t0 = delaunay_triangulate(&ps).unwrap();
        let interior: Vec<Edge> = t0
            .edges()
            .into_iter()
            .filter(|&(u, v)| {
                let (ti, i) = t0.find_edge(u, v).unwrap();
                t0.neighbor(ti, i).is_some()
            })
            .collect();
        let mut flipped = 0;
        for (u, v) in interior {
            let mut t = t0.clone();
            match t.flip_diagonal(&ps, u, v) {
                Ok((w, z)) => {
                    t.validate(&ps).unwrap();
                    assert!(!t.is_edge(u, v));
                    assert!(t.is_edge(w, z));
                    let back = t.flip_diagonal(&ps, w, z).unwrap();
                    assert_eq!(back, edge_key(u, v));
                    t.validate(&ps).unwrap();
                    let mut orig: Vec<_> = t0.triangles().map(|mut x| {
                        x.sort();
                        x
                    }).collect();
                    let mut now: Vec<_> = t.triangles().map(|mut x| {
                        x.sort();
                        x
                    }).collect();
                    orig.sort();
                    now.sort();
                    assert_eq!(orig, now);
                    flipped += 1;
                }
                Err(Error::NonConvexQuad(..)) => {}
                Err(e) => panic!("unexpected flip error: {e}"),
            }
        }
        assert!(flipped > 0);
    }

    #[test]
    fn hull_edge_flip_errors() {
        let ps = random_set(12, 3);
        let t = delaunay_triangulate(&ps).unwrap();
        let hull_edge = t
            .edges()
            .into_iter()
            .find(|&(u, v)| {
                let (ti, i) = t.find_edge(u, v).unwrap();
                t.neighbor(ti, i).is_none()
            })
            .unwrap();
        let mut t = t.clone();
        match t.flip_diagonal(&ps, hull_edge.0, hull_edge.1) {
            Err(Error::BoundaryEdge(..)) => {}
            other => panic!("expected BoundaryEdge, got {other:?}"),
        }
    }

    #[test]
    fn hop_distance_basics() {
        let ps = random_set(20, 11);
        let t = delaunay_triangulate(&ps).unwrap();
        assert_eq!(hop_distance(&t, 4, 4, 10), Some(0));
        let (u, v) = t.edges()[0];
        assert_eq!(hop_distance(&t, u, v, 10), Some(1));
    }

    #[test]
    fn hop_distance_matches_independent_bfs() {
        // perturbed 3x3 grid; oracle is a from-scratch BFS over the edge list
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pts: Vec<Point> = (0..9)
            .map(|i| {
                Point::new(
                    (i % 3) as f64 + rng.gen::<f64>() * 1e-3,
                    (i / 3) as f64 + rng.gen::<f64>() * 1e-3,
                )
            })
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let t = delaunay_triangulate(&ps).unwrap();
        let edges = t.edges();
        let oracle = |s: usize, g: usize| -> usize {
            let mut dist = vec![usize::MAX; 9];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(w) = q.pop_front() {
                for &(a, b) in &edges {
                    for (x, y) in [(a, b), (b, a)] {
                        if x == w && dist[y] == usize::MAX {
                            dist[y] = dist[w] + 1;
                            q.push_back(y);
                        }
                    }
                }
            }
            dist[g]
        };
        for u in 0..9 {
            for v in 0..9 {
                assert_eq!(hop_distance(&t, u, v, 16), Some(oracle(u, v)));
            }
        }
    }

    #[test]
    fn convex_polygon_triangulates() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let pts: Vec<Point> = (0..12)
            .map(|i| {
                let a = i as f64 / 12.0 * std::f64::consts::TAU;
                Point::new(
                    a.cos() + rng.gen::<f64>() * 1e-6,
                    a.sin() + rng.gen::<f64>() * 1e-6,
                )
            })
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let t = delaunay_triangulate(&ps).unwrap();
        t.validate(&ps).unwrap();
        audit_delaunay(&t, &ps, None).unwrap();
        assert_eq!(t.hull_size(), 12);
    }

    #[test]
    fn collinear_input_is_detected() {
        let ps = PointSet::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(3.0, 5.0),
        ])
        .unwrap();
        match delaunay_triangulate(&ps) {
            Err(Error::DegenerateCollinear(..)) => {}
            other => panic!("expected collinear degeneracy, got {other:?}"),
        }
    }

    #[test]
    fn cocircular_input_is_detected() {
        let ps = PointSet::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
            Point::new(0.5, 2.0),
        ])
        .unwrap();
        match delaunay_triangulate(&ps) {
            Err(Error::DegenerateCocircular(..)) => {}
            Ok(_) => panic!("expected cocircular degeneracy"),
            Err(e) => panic!("unexpected error {e:?}"),
        }
    }
}
