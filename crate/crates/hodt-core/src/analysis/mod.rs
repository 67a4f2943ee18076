//! Order-k analysis: triangle and edge orders, witness triangles, flippable
//! quadrilaterals, the exact `2^q` order-1 count, and enumeration of the
//! order-1 class.
//!
//! The useful order of an edge `{u, v}` is computed from its two witness
//! triangles: `s1` is the point left of the directed edge whose circle
//! through `u, v` is empty of left points (the maximum-angle point on that
//! side), `s2` the symmetric point on the right. The edge is useful-k exactly
//! when both witness triangles are order-k, so the useful order is the larger
//! of the two triangle orders.

mod census;
mod hull;

pub use census::{edge_mask_of, enumerate_all_triangulations, Census, CensusEntry};
pub use hull::{
    construct_orderk, edge_hull, select_disjoint_hulls, EdgeHull, LowerBoundCertificate,
};

use num_bigint::BigUint;

use crate::delaunay::{delaunay_triangulate, edge_key, Edge, Triangulation};
use crate::error::Error;
use crate::geom::{self, count_in_circumcircle, orient, CirclePosition, Grid, Orientation};
use crate::pointset::PointSet;
use crate::Result;

/// Number of points of `ps` strictly inside the circumcircle of the triangle
/// `(a, b, c)`.
pub fn triangle_order(ps: &PointSet, tri: [usize; 3], grid: Option<&Grid>) -> Result<usize> {
    count_in_circumcircle(ps, tri, None, grid)
}

/// Maximum triangle order over a triangulation; zero exactly for the Delaunay
/// triangulation.
pub fn triangulation_order(ps: &PointSet, t: &Triangulation, grid: Option<&Grid>) -> Result<usize> {
    let mut best = 0;
    for tri in t.triangles() {
        best = best.max(triangle_order(ps, tri, grid)?);
    }
    Ok(best)
}

/// Witness data determining the useful order of an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWitness {
    pub edge: Edge,
    /// Maximum-angle point strictly left of the directed edge `v -> u`, if the
    /// left halfplane holds any point.
    pub s1: Option<usize>,
    /// Symmetric witness on the right side.
    pub s2: Option<usize>,
    pub left_order: Option<usize>,
    pub right_order: Option<usize>,
    /// Larger of the present triangle orders.
    pub useful_order: usize,
}

/// Finds the witness on one side of the directed edge: the point whose circle
/// through `u, v` contains no other point on that side.
///
/// `want_left` selects the halfplane; sides are measured against `orient(u, v, w)`.
fn side_witness(ps: &PointSet, u: usize, v: usize, want_left: bool) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    for w in 0..ps.len() {
        if w == u || w == v {
            continue;
        }
        let side = match orient(ps[u], ps[v], ps[w]) {
            Orientation::CounterClockwise => true,
            Orientation::Clockwise => false,
            Orientation::Collinear => return Err(Error::DegenerateCollinear(u, v, w)),
        };
        if side != want_left {
            continue;
        }
        best = Some(match best {
            None => w,
            Some(b) => {
                // w beats b when w lies strictly inside the circle through
                // (u, v, b): larger inscribed angle, smaller empty circle.
                match geom::in_circle(ps[u], ps[v], ps[b], ps[w])? {
                    CirclePosition::Inside => w,
                    CirclePosition::Outside => b,
                    CirclePosition::On => return Err(Error::DegenerateCocircular(u, v, b, w)),
                }
            }
        });
    }
    Ok(best)
}

/// Grid-accelerated witness search. Starts from any point on the wanted side
/// and repeatedly jumps to a point strictly inside the current empty-circle
/// candidate until the circle holds no same-side point; every comparison is
/// an exact predicate, the grid only narrows candidates.
fn side_witness_grid(
    ps: &PointSet,
    grid: &Grid,
    u: usize,
    v: usize,
    want_left: bool,
) -> Result<Option<usize>> {
    let side_of = |w: usize| -> Result<Option<bool>> {
        if w == u || w == v {
            return Ok(None);
        }
        match orient(ps[u], ps[v], ps[w]) {
            Orientation::CounterClockwise => Ok(Some(true)),
            Orientation::Clockwise => Ok(Some(false)),
            Orientation::Collinear => Err(Error::DegenerateCollinear(u, v, w)),
        }
    };
    // Seed with any point on the wanted side, searching outward from the
    // segment midpoint.
    let (bx0, by0, bx1, by1) = ps.bounding_box();
    let mx = 0.5 * (ps[u].x + ps[v].x);
    let my = 0.5 * (ps[u].y + ps[v].y);
    let mut r = (ps[u].dist_sq(&ps[v]).sqrt() * 0.5).max(1e-9);
    let mut seed: Option<usize> = None;
    loop {
        let mut found = None;
        grid.for_each_in_box(mx - r, my - r, mx + r, my + r, |w| {
            if found.is_none() && side_of(w)? == Some(want_left) {
                found = Some(w);
            }
            Ok(())
        })?;
        if let Some(w) = found {
            seed = Some(w);
            break;
        }
        if mx - r <= bx0 && my - r <= by0 && mx + r >= bx1 && my + r >= by1 {
            break;
        }
        r *= 2.0;
    }
    let Some(mut best) = seed else { return Ok(None) };
    // Refine: while some same-side point lies strictly inside C(u, v, best),
    // jump to the best of those.
    loop {
        let Ok(circle) = geom::circumcircle(ps[u], ps[v], ps[best]) else {
            return side_witness(ps, u, v, want_left);
        };
        if !circle.center.is_finite() || !circle.radius_squared.is_finite() {
            return side_witness(ps, u, v, want_left);
        }
        let cr = circle.radius_squared.sqrt();
        let pad = 1e-6 * (circle.center.x.abs() + circle.center.y.abs() + cr) + 1e-300;
        let mut improved: Option<usize> = None;
        let mut err: Option<Error> = None;
        grid.for_each_in_box(
            circle.center.x - cr - pad,
            circle.center.y - cr - pad,
            circle.center.x + cr + pad,
            circle.center.y + cr + pad,
            |w| {
                if err.is_some() || w == best {
                    return Ok(());
                }
                if side_of(w)? != Some(want_left) {
                    return Ok(());
                }
                let against = improved.unwrap_or(best);
                match geom::in_circle(ps[u], ps[v], ps[against], ps[w])? {
                    CirclePosition::Inside => improved = Some(w),
                    CirclePosition::Outside => {}
                    CirclePosition::On => {
                        err = Some(Error::DegenerateCocircular(u, v, against, w))
                    }
                }
                Ok(())
            },
        )?;
        if let Some(e) = err {
            return Err(e);
        }
        match improved {
            Some(w) => best = w,
            None => return Ok(Some(best)),
        }
    }
}

/// Computes both witnesses and the exact useful order of `{u, v}`.
///
/// A hull-supporting edge has one empty side; its useful order is the order of
/// the single present witness triangle. Errors if both sides are empty.
pub fn edge_witness(ps: &PointSet, u: usize, v: usize, grid: Option<&Grid>) -> Result<EdgeWitness> {
    if u == v {
        return Err(Error::InvalidParameter("edge endpoints must differ".into()));
    }
    let s1 = side_witness(ps, u, v, true)?;
    let s2 = side_witness(ps, u, v, false)?;
    if s1.is_none() && s2.is_none() {
        return Err(Error::InvalidParameter(format!(
            "edge ({u}, {v}) has no witness on either side"
        )));
    }
    let left_order = match s1 {
        Some(w) => Some(triangle_order(ps, [u, v, w], grid)?),
        None => None,
    };
    let right_order = match s2 {
        Some(w) => Some(triangle_order(ps, [u, v, w], grid)?),
        None => None,
    };
    let useful_order = left_order.unwrap_or(0).max(right_order.unwrap_or(0));
    Ok(EdgeWitness { edge: edge_key(u, v), s1, s2, left_order, right_order, useful_order })
}

/// Useful order of `{u, v}` with an early exit: returns `None` as soon as the
/// order is known to exceed `cap`.
pub fn useful_order_capped(
    ps: &PointSet,
    u: usize,
    v: usize,
    cap: usize,
    grid: Option<&Grid>,
) -> Result<Option<usize>> {
    let (s1, s2) = match grid {
        Some(g) => (
            side_witness_grid(ps, g, u, v, true)?,
            side_witness_grid(ps, g, u, v, false)?,
        ),
        None => (side_witness(ps, u, v, true)?, side_witness(ps, u, v, false)?),
    };
    if s1.is_none() && s2.is_none() {
        return Err(Error::InvalidParameter(format!(
            "edge ({u}, {v}) has no witness on either side"
        )));
    }
    let mut uo = 0usize;
    for w in [s1, s2].into_iter().flatten() {
        let c = count_in_circumcircle(ps, [u, v, w], Some(cap), grid)?;
        if c > cap {
            return Ok(None);
        }
        uo = uo.max(c);
    }
    Ok(Some(uo))
}

/// A convex quadrilateral of two Delaunay triangles whose both diagonals give
/// order-at-most-1 triangles. Flipping its Delaunay diagonal is exactly the
/// degree of freedom of the order-1 class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlippableQuad {
    /// Quad corners in cyclic order `u, w, v, t` with `{u, v}` the Delaunay
    /// diagonal.
    pub quad: [usize; 4],
    pub delaunay_diagonal: Edge,
    pub alternative_diagonal: Edge,
    /// The four 1-fixed boundary edges, present in every order-1 triangulation.
    pub boundary: [Edge; 4],
}

/// Finds all flippable quadrilaterals of the Delaunay triangulation.
///
/// An interior Delaunay edge with a strictly convex surrounding quad is
/// flippable iff both triangles produced by the flip have order at most 1.
/// The returned quads are pairwise triangle-disjoint.
pub fn flippable_quads(
    ps: &PointSet,
    t: &Triangulation,
    grid: Option<&Grid>,
) -> Result<Vec<FlippableQuad>> {
    let mut out = Vec::new();
    let mut slots: Vec<(usize, usize, usize, usize)> = Vec::new(); // (u, v, tri, slot)
    for ti in 0..t.num_triangles() {
        let tri = t.triangle(ti);
        for i in 0..3 {
            let a = tri[(i + 1) % 3];
            let b = tri[(i + 2) % 3];
            if a < b {
                slots.push((a, b, ti, i));
            }
        }
    }
    slots.sort_unstable();
    for (u, v, ti, i) in slots {
        let Some(o) = t.neighbor(ti, i) else { continue };
        let tri = t.triangle(ti);
        let w = tri[i]; // apex on one side
        let otri = t.triangle(o);
        let z = otri
            .into_iter()
            .find(|&x| x != u && x != v)
            .expect("neighbor shares the edge");
        // strict convexity: u and v on opposite sides of w-z
        let ou = orient(ps[w], ps[z], ps[u]);
        let ov = orient(ps[w], ps[z], ps[v]);
        if ou == Orientation::Collinear {
            return Err(Error::DegenerateCollinear(w, z, u));
        }
        if ov == Orientation::Collinear {
            return Err(Error::DegenerateCollinear(w, z, v));
        }
        if ou == ov {
            continue;
        }
        let o1 = count_in_circumcircle(ps, [u, w, z], Some(1), grid)?;
        if o1 > 1 {
            continue;
        }
        let o2 = count_in_circumcircle(ps, [v, w, z], Some(1), grid)?;
        if o2 > 1 {
            continue;
        }
        out.push(FlippableQuad {
            quad: [u, w, v, z],
            delaunay_diagonal: edge_key(u, v),
            alternative_diagonal: edge_key(w, z),
            boundary: [
                edge_key(u, w),
                edge_key(w, v),
                edge_key(v, z),
                edge_key(z, u),
            ],
        });
    }
    Ok(out)
}

/// Exact number of order-1 Delaunay triangulations: `2^q` for `q` flippable
/// quadrilaterals.
pub fn count_order1(ps: &PointSet, grid: Option<&Grid>) -> Result<(usize, BigUint)> {
    let t = delaunay_triangulate(ps)?;
    let q = flippable_quads(ps, &t, grid)?.len();
    Ok((q, BigUint::from(1u8) << q))
}

/// Streams all `2^q` order-1 triangulations, each obtained from the Delaunay
/// triangulation by flipping a subset of the flippable quads.
pub struct Order1Enumeration {
    ps: PointSet,
    base: Triangulation,
    quads: Vec<FlippableQuad>,
    next_mask: u64,
    total: u64,
}

impl Order1Enumeration {
    pub fn num_quads(&self) -> usize {
        self.quads.len()
    }
}

impl Iterator for Order1Enumeration {
    type Item = Triangulation;

    fn next(&mut self) -> Option<Triangulation> {
        if self.next_mask >= self.total {
            return None;
        }
        let mask = self.next_mask;
        self.next_mask += 1;
        let mut t = self.base.clone();
        for (i, q) in self.quads.iter().enumerate() {
            if mask & (1u64 << i) != 0 {
                let (u, v) = q.delaunay_diagonal;
                t.flip_diagonal(&self.ps, u, v)
                    .expect("flippable quad diagonals are interior and convex");
            }
        }
        Some(t)
    }
}

/// Enumerates the order-1 class. Errors with `CapExceeded` when the number of
/// flippable quads exceeds `cap` (default 30).
pub fn enumerate_order1(ps: &PointSet, cap: Option<usize>) -> Result<Order1Enumeration> {
    let cap = cap.unwrap_or(30);
    let t = delaunay_triangulate(ps)?;
    let grid = Grid::build(ps);
    let quads = flippable_quads(ps, &t, Some(&grid))?;
    if quads.len() > cap {
        return Err(Error::CapExceeded(format!(
            "{} flippable quads exceed the enumeration cap {cap}",
            quads.len()
        )));
    }
    let total = 1u64 << quads.len();
    Ok(Order1Enumeration { ps: ps.clone(), base: t, quads, next_mask: 0, total })
}

/// How candidate pairs are generated for the useful-k edge search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// All point pairs; the reference mode.
    Exhaustive,
    /// Pairs within Delaunay hop distance `2k + 2`; validated against the
    /// exhaustive mode on small inputs.
    Pruned,
    /// Exhaustive up to 200 points, pruned beyond.
    Auto,
}

/// All non-Delaunay edges of useful order exactly `k`.
pub fn useful_k_edges(
    ps: &PointSet,
    t: &Triangulation,
    k: usize,
    mode: SearchMode,
    grid: Option<&Grid>,
) -> Result<Vec<(Edge, usize)>> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = ps.len();
    let pruned = match mode {
        SearchMode::Exhaustive => false,
        SearchMode::Pruned => true,
        SearchMode::Auto => n > 200,
    };
    let mut out = Vec::new();
    let delaunay_edges: std::collections::HashSet<Edge> = t.edges().into_iter().collect();
    let mut consider = |u: usize, v: usize, out: &mut Vec<(Edge, usize)>| -> Result<()> {
        if delaunay_edges.contains(&edge_key(u, v)) {
            return Ok(());
        }
        if let Some(uo) = useful_order_capped(ps, u, v, k, grid)? {
            if uo == k {
                out.push((edge_key(u, v), uo));
            }
        }
        Ok(())
    };
    if pruned {
        let adj = t.adjacency();
        let limit = 2 * k + 2;
        for u in 0..n {
            let reached = bfs_ball(&adj, u, limit);
            for v in reached {
                if v > u {
                    consider(u, v, &mut out)?;
                }
            }
        }
    } else {
        for u in 0..n {
            for v in (u + 1)..n {
                consider(u, v, &mut out)?;
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn bfs_ball(adj: &[Vec<usize>], u: usize, limit: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[u] = 0;
    let mut queue = std::collections::VecDeque::from([u]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        if dist[w] >= limit {
            continue;
        }
        for &x in &adj[w] {
            if dist[x] == usize::MAX {
                dist[x] = dist[w] + 1;
                out.push(x);
                queue.push_back(x);
            }
        }
    }
    out
}

/// Hop-limited variant used by tests to confirm the pruning radius; exposed
/// for the CLI's audit output.
pub fn hop_limited_pairs(t: &Triangulation, limit: usize) -> Vec<Edge> {
    let adj = t.adjacency();
    let mut out = Vec::new();
    for u in 0..adj.len() {
        for v in bfs_ball(&adj, u, limit) {
            if v > u {
                out.push((u, v));
            }
        }
    }
    out.sort_unstable();
    out
}

/// The Delaunay edges that are 1-fixed: present in every order-1
/// triangulation. These are exactly the Delaunay edges not interior to any
/// flippable quadrilateral.
pub fn one_fixed_edges(ps: &PointSet, t: &Triangulation, grid: Option<&Grid>) -> Result<Vec<Edge>> {
    let quads = flippable_quads(ps, t, grid)?;
    let flippable: std::collections::HashSet<Edge> =
        quads.iter().map(|q| q.delaunay_diagonal).collect();
    Ok(t.edges().into_iter().filter(|e| !flippable.contains(e)).collect())
}

#[allow(unused)]
pub(crate) fn edge_crosses(ps: &PointSet, a: Edge, b: Edge) -> bool {
    segments_cross(ps, a.0, a.1, b.0, b.1)
}

/// Proper crossing test for open segments on distinct endpoints.
pub fn segments_cross(ps: &PointSet, a: usize, b: usize, c: usize, d: usize) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let o1 = orient(ps[a], ps[b], ps[c]);
    let o2 = orient(ps[a], ps[b], ps[d]);
    let o3 = orient(ps[c], ps[d], ps[a]);
    let o4 = orient(ps[c], ps[d], ps[b]);
    o1 != o2
        && o3 != o4
        && o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delaunay::audit_delaunay;
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
    fn delaunay_triangles_have_order_zero() {
        let ps = random_set(12, 1);
        let t = delaunay_triangulate(&ps).unwrap();
        assert_eq!(triangulation_order(&ps, &t, None).unwrap(), 0);
    }

    #[test]
    fn triangle_order_matches_naive_scan() {
        let ps = random_set(8, 2);
        for i in 0..8 {
            for j in (i + 1)..8 {
                for k in (j + 1)..8 {
                    let fast = triangle_order(&ps, [i, j, k], None).unwrap();
                    let mut naive = 0;
                    for l in 0..8 {
                        if l == i || l == j || l == k {
                            continue;
                        }
                        if geom::in_circle(ps[i], ps[j], ps[k], ps[l]).unwrap()
                            == CirclePosition::Inside
                        {
                            naive += 1;
                        }
                    }
                    assert_eq!(fast, naive);
                }
            }
        }
    }

    #[test]
    fn delaunay_edge_witnesses_are_its_apexes() {
        let ps = random_set(15, 3);
        let t = delaunay_triangulate(&ps).unwrap();
        for (u, v) in t.edges() {
            let w = edge_witness(&ps, u, v, None).unwrap();
            assert_eq!(w.useful_order, 0, "Delaunay edge ({u},{v})");
            let (ti, i) = t.find_edge(u, v).unwrap();
            let apex1 = t.triangle(ti)[i];
            let mut apexes = vec![apex1];
            if let Some(o) = t.neighbor(ti, i) {
                let a2 = t
                    .triangle(o)
                    .into_iter()
                    .find(|&x| x != u && x != v)
                    .unwrap();
                apexes.push(a2);
            }
            let mut found: Vec<usize> = [w.s1, w.s2].into_iter().flatten().collect();
            apexes.sort_unstable();
            found.sort_unstable();
            assert_eq!(found, apexes);
        }
    }

    #[test]
    fn flipping_one_quad_gives_order_one() {
        for seed in 0..20 {
            let ps = random_set(10, seed);
            let t = delaunay_triangulate(&ps).unwrap();
            let quads = flippable_quads(&ps, &t, None).unwrap();
            for q in &quads {
                let mut t2 = t.clone();
                let (u, v) = q.delaunay_diagonal;
                t2.flip_diagonal(&ps, u, v).unwrap();
                assert_eq!(triangulation_order(&ps, &t2, None).unwrap(), 1);
            }
        }
    }

    #[test]
    fn flippable_quads_are_triangle_disjoint() {
        for seed in 0..20 {
            let ps = random_set(14, seed + 100);
            let t = delaunay_triangulate(&ps).unwrap();
            let quads = flippable_quads(&ps, &t, None).unwrap();
            let mut seen = std::collections::HashSet::new();
            for q in &quads {
                let (u, v) = q.delaunay_diagonal;
                let (ti, i) = t.find_edge(u, v).unwrap();
                let o = t.neighbor(ti, i).unwrap();
                assert!(seen.insert(ti), "quads share a Delaunay triangle");
                assert!(seen.insert(o), "quads share a Delaunay triangle");
            }
        }
    }

    #[test]
    fn perturbed_cocircular_square_has_one_quad() {
        let ps = PointSet::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 1e-9),
            Point::new(1.0 - 1e-9, 1.0),
            Point::new(-1e-9, 1.0),
        ])
        .unwrap();
        let t = delaunay_triangulate(&ps).unwrap();
        audit_delaunay(&t, &ps, None).unwrap();
        let quads = flippable_quads(&ps, &t, None).unwrap();
        assert_eq!(quads.len(), 1);
        let (q, count) = count_order1(&ps, None).unwrap();
        assert_eq!(q, 1);
        assert_eq!(count, BigUint::from(2u8));
    }

    #[test]
    fn enumerate_order1_yields_audited_triangulations() {
        let ps = random_set(9, 7);
        let en = enumerate_order1(&ps, None).unwrap();
        let q = en.num_quads();
        let mut seen = std::collections::HashSet::new();
        let mut count = 0usize;
        for t in en {
            t.validate(&ps).unwrap();
            assert!(triangulation_order(&ps, &t, None).unwrap() <= 1);
            let mut key: Vec<[usize; 3]> = t
                .triangles()
                .map(|mut x| {
                    x.sort();
                    x
                })
                .collect();
            key.sort();
            assert!(seen.insert(key), "duplicate triangulation in enumeration");
            count += 1;
        }
        assert_eq!(count, 1 << q);
    }

    #[test]
    fn pruned_and_exhaustive_useful_edges_agree() {
        for seed in 0..10 {
            let ps = random_set(10, seed + 40);
            let t = delaunay_triangulate(&ps).unwrap();
            for k in 1..=2 {
                let a = useful_k_edges(&ps, &t, k, SearchMode::Exhaustive, None).unwrap();
                let b = useful_k_edges(&ps, &t, k, SearchMode::Pruned, None).unwrap();
                assert_eq!(a, b, "seed {seed} k {k}");
            }
        }
    }

    #[test]
    fn useful_1_edges_are_alternative_diagonals() {
        for seed in 0..15 {
            let ps = random_set(11, seed + 400);
            let t = delaunay_triangulate(&ps).unwrap();
            let quads = flippable_quads(&ps, &t, None).unwrap();
            let mut alt: Vec<Edge> = quads.iter().map(|q| q.alternative_diagonal).collect();
            alt.sort_unstable();
            let u1: Vec<Edge> = useful_k_edges(&ps, &t, 1, SearchMode::Exhaustive, None)
                .unwrap()
                .into_iter()
                .map(|(e, _)| e)
                .collect();
            assert_eq!(u1, alt, "seed {seed}");
        }
    }

    #[test]
    fn order_monotonicity() {
        // an order-k triangle is order-k' for k' >= k: counts are single
        // numbers, so the check is that capped queries are consistent
        let ps = random_set(9, 5);
        for i in 0..9 {
            for j in (i + 1)..9 {
                for k in (j + 1)..9 {
                    let full = triangle_order(&ps, [i, j, k], None).unwrap();
                    for cap in 0..=full {
                        let capped =
                            count_in_circumcircle(&ps, [i, j, k], Some(cap), None).unwrap();
                        if cap >= full {
                            assert_eq!(capped, full);
                        } else {
                            assert!(capped > cap);
                        }
                    }
                }
            }
        }
    }
}
