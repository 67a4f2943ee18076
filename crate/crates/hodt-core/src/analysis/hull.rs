//! Edge hulls and the lower-bound construction for the order-k class.
//!
//! The hull of a non-Delaunay edge is the union of Delaunay triangles whose
//! interiors the open segment crosses: a strip walked from one endpoint to the
//! other, bounded by a simple polygon of at most `2k + 2` vertices for a
//! useful-k edge. Picking pairwise triangle-disjoint hulls and retriangulating
//! each one around its edge yields `2^|E'| - 1` distinct triangulations of
//! order exactly k.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;

use crate::delaunay::{edge_key, Edge, Triangulation};
use crate::error::Error;
use crate::geom::{orient, Grid, Orientation};
use crate::pointset::PointSet;
use crate::Result;

use super::{segments_cross, triangle_order};

/// The strip of Delaunay triangles crossed by an edge, with its boundary
/// polygon.
#[derive(Debug, Clone)]
pub struct EdgeHull {
    pub edge: Edge,
    /// Indices of the crossed triangles in the Delaunay triangulation, in walk
    /// order from `edge.0` to `edge.1`.
    pub triangle_ids: Vec<usize>,
    /// Vertex triples of the crossed triangles.
    pub triangles: Vec<[usize; 3]>,
    /// Boundary polygon as a counterclockwise vertex cycle starting at
    /// `edge.0`.
    pub boundary: Vec<usize>,
}

/// Walks the Delaunay strip crossed by the open segment `{u, v}`.
///
/// Errors with `EdgeIsDelaunay` if the segment is a Delaunay edge, and with
/// degeneracy errors if the segment interior meets a vertex.
pub fn edge_hull(ps: &PointSet, t: &Triangulation, u: usize, v: usize) -> Result<EdgeHull> {
    if t.is_edge(u, v) {
        return Err(Error::EdgeIsDelaunay(u, v));
    }
    // triangle at u whose wedge contains the direction u -> v
    let mut start = None;
    for ti in 0..t.num_triangles() {
        let tri = t.triangle(ti);
        let Some(iu) = tri.iter().position(|&x| x == u) else {
            continue;
        };
        let a = tri[(iu + 1) % 3];
        let b = tri[(iu + 2) % 3];
        let oa = orient(ps[u], ps[a], ps[v]);
        let ob = orient(ps[u], ps[v], ps[b]);
        if oa == Orientation::Collinear {
            return Err(Error::DegenerateCollinear(u, a, v));
        }
        if ob == Orientation::Collinear {
            return Err(Error::DegenerateCollinear(u, v, b));
        }
        if oa == Orientation::CounterClockwise && ob == Orientation::CounterClockwise {
            start = Some(ti);
            break;
        }
    }
    let Some(mut cur) = start else {
        return Err(Error::InternalConsistency(format!(
            "no triangle at {u} faces {v}"
        )));
    };

    let mut ids = Vec::new();
    let mut guard = 0usize;
    loop {
        guard += 1;
        if guard > t.num_triangles() + 2 {
            return Err(Error::InternalConsistency(
                "hull walk failed to terminate".into(),
            ));
        }
        ids.push(cur);
        let tri = t.triangle(cur);
        if tri.contains(&v) {
            break;
        }
        let mut advanced = false;
        for i in 0..3 {
            let a = tri[(i + 1) % 3];
            let b = tri[(i + 2) % 3];
            if segments_cross(ps, u, v, a, b) {
                let prev = ids.len().checked_sub(2).map(|j| ids[j]);
                let next = t.neighbor(cur, i).ok_or_else(|| {
                    Error::InternalConsistency("segment crossed a hull boundary edge".into())
                })?;
                if Some(next) != prev {
                    cur = next;
                    advanced = true;
                    break;
                }
            }
        }
        if !advanced {
            return Err(Error::InternalConsistency(
                "no exit edge found during hull walk".into(),
            ));
        }
    }

    // boundary = triangle edges used exactly once within the strip
    let mut edge_count: HashMap<Edge, usize> = HashMap::new();
    for &ti in &ids {
        let tri = t.triangle(ti);
        for i in 0..3 {
            let e = edge_key(tri[(i + 1) % 3], tri[(i + 2) % 3]);
            *edge_count.entry(e).or_insert(0) += 1;
        }
    }
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut boundary_edges = 0usize;
    for (&(a, b), &c) in &edge_count {
        if c == 1 {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
            boundary_edges += 1;
        }
    }
    for (vx, nbrs) in &adj {
        if nbrs.len() != 2 {
            return Err(Error::InternalConsistency(format!(
                "hull boundary is not a simple polygon: vertex {vx} has degree {}",
                nbrs.len()
            )));
        }
    }
    let mut cycle = vec![u];
    let mut prev = usize::MAX;
    let mut cur_v = u;
    loop {
        let nbrs = &adj[&cur_v];
        let next = if nbrs[0] != prev { nbrs[0] } else { nbrs[1] };
        if next == u {
            break;
        }
        cycle.push(next);
        prev = cur_v;
        cur_v = next;
        if cycle.len() > boundary_edges {
            return Err(Error::InternalConsistency(
                "hull boundary is not a single cycle".into(),
            ));
        }
    }
    if cycle.len() != boundary_edges || cycle.len() != adj.len() {
        return Err(Error::InternalConsistency(
            "hull boundary is not a single simple cycle".into(),
        ));
    }
    // orient counterclockwise: at the lowest-leftmost vertex the turn is CCW
    let low = (0..cycle.len())
        .min_by(|&i, &j| {
            let (p, q) = (ps[cycle[i]], ps[cycle[j]]);
            p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y))
        })
        .unwrap();
    let m = cycle.len();
    let before = cycle[(low + m - 1) % m];
    let at = cycle[low];
    let after = cycle[(low + 1) % m];
    if orient(ps[before], ps[at], ps[after]) == Orientation::Clockwise {
        cycle[1..].reverse();
    }
    let triangles = ids.iter().map(|&ti| t.triangle(ti)).collect();
    Ok(EdgeHull {
        edge: edge_key(u, v),
        triangle_ids: ids,
        triangles,
        boundary: cycle,
    })
}

/// A greedy certificate for the `2^{e_k / C_k} - 1` lower bound.
#[derive(Debug, Clone)]
pub struct LowerBoundCertificate {
    pub k: usize,
    /// All useful-exactly-k edges that entered the selection.
    pub all_edges: Vec<Edge>,
    /// The pairwise hull-disjoint subset, in selection order.
    pub selected: Vec<Edge>,
    /// Hulls of the selected edges.
    pub hulls: Vec<EdgeHull>,
    /// `2^|selected| - 1`.
    pub bound: BigUint,
    /// `(4k + 1)(2k + 1)^2 + 1`.
    pub c_k: u64,
}

/// Greedy selection of edges with pairwise triangle-disjoint hulls.
///
/// Edges are processed by (useful order, squared length, endpoint order) for
/// reproducibility; any order satisfies the counting bound
/// `|selected| * C_k >= |all|`, which is asserted.
pub fn select_disjoint_hulls(
    ps: &PointSet,
    t: &Triangulation,
    edges: &[(Edge, usize)],
    k: usize,
) -> Result<LowerBoundCertificate> {
    let mut ordered: Vec<(Edge, usize)> = edges.to_vec();
    ordered.sort_by(|a, b| {
        a.1.cmp(&b.1)
            .then_with(|| {
                let la = ps[a.0 .0].dist_sq(&ps[a.0 .1]);
                let lb = ps[b.0 .0].dist_sq(&ps[b.0 .1]);
                la.total_cmp(&lb)
            })
            .then_with(|| a.0.cmp(&b.0))
    });
    let mut used: HashSet<usize> = HashSet::new();
    let mut selected = Vec::new();
    let mut hulls = Vec::new();
    for &((u, v), _) in &ordered {
        let hull = edge_hull(ps, t, u, v)?;
        if hull.triangle_ids.iter().any(|ti| used.contains(ti)) {
            continue;
        }
        used.extend(hull.triangle_ids.iter().copied());
        selected.push((u, v));
        hulls.push(hull);
    }
    let c_k = (4 * k as u64 + 1) * (2 * k as u64 + 1).pow(2) + 1;
    if selected.len() as u64 * c_k < edges.len() as u64 {
        return Err(Error::InternalConsistency(format!(
            "greedy selection kept {} of {} edges, below the 1/C_k share",
            selected.len(),
            edges.len()
        )));
    }
    let bound = (BigUint::from(1u8) << selected.len()) - 1u8;
    Ok(LowerBoundCertificate {
        k,
        all_edges: edges.iter().map(|&(e, _)| e).collect(),
        selected,
        hulls,
        bound,
        c_k,
    })
}

/// Validity test for a diagonal (or boundary edge) of a simple polygon given
/// as a counterclockwise cycle: endpoints adjacent, or in-cone at both ends
/// with no proper crossing of the boundary.
fn polygon_diagonal_ok(ps: &PointSet, cycle: &[usize], ia: usize, ib: usize) -> bool {
    let m = cycle.len();
    if (ia + 1) % m == ib || (ib + 1) % m == ia {
        return true; // boundary edge
    }
    let in_cone = |i: usize, j: usize| -> bool {
        let a = cycle[i];
        let b = cycle[j];
        let prev = cycle[(i + m - 1) % m];
        let next = cycle[(i + 1) % m];
        let left = |x: usize, y: usize, z: usize| orient(ps[x], ps[y], ps[z]) == Orientation::CounterClockwise;
        if left(prev, a, next) || orient(ps[prev], ps[a], ps[next]) == Orientation::Collinear {
            left(a, b, prev) && left(b, a, next)
        } else {
            !(left(a, b, next) && left(b, a, prev))
        }
    };
    if !in_cone(ia, ib) || !in_cone(ib, ia) {
        return false;
    }
    let (a, b) = (cycle[ia], cycle[ib]);
    for i in 0..m {
        let (c, d) = (cycle[i], cycle[(i + 1) % m]);
        if segments_cross(ps, a, b, c, d) {
            return false;
        }
    }
    true
}

/// All triangulations of a simple polygon (counterclockwise cycle), as sorted
/// triangle lists. Catalan-bounded; intended for hull polygons of at most a
/// dozen vertices.
pub fn enumerate_polygon_triangulations(
    ps: &PointSet,
    cycle: &[usize],
) -> Result<Vec<Vec<[usize; 3]>>> {
    let m = cycle.len();
    if m < 3 {
        return Ok(vec![Vec::new()]);
    }
    let mut out = Vec::new();
    // every triangulation has a triangle on the boundary edge (last, first)
    for i in 1..(m - 1) {
        let (a, b, c) = (cycle[m - 1], cycle[0], cycle[i]);
        if orient(ps[a], ps[b], ps[c]) != Orientation::CounterClockwise {
            continue;
        }
        if !polygon_diagonal_ok(ps, cycle, 0, i) || !polygon_diagonal_ok(ps, cycle, i, m - 1) {
            continue;
        }
        let left_chain: Vec<usize> = cycle[0..=i].to_vec();
        let right_chain: Vec<usize> = cycle[i..m].to_vec();
        let lefts = enumerate_polygon_triangulations(ps, &left_chain)?;
        let rights = enumerate_polygon_triangulations(ps, &right_chain)?;
        for l in &lefts {
            for r in &rights {
                let mut tris = vec![{
                    let mut t = [a, b, c];
                    t.sort_unstable();
                    t
                }];
                tris.extend(l.iter().copied());
                tris.extend(r.iter().copied());
                tris.sort_unstable();
                out.push(tris);
            }
        }
    }
    Ok(out)
}

/// Retriangulates the hull of `edge` with the edge forced in, choosing among
/// all hull triangulations the one of minimal maximum order (which must equal
/// `k`), ties broken by the lexicographically smallest triangle list.
fn retriangulate_hull(
    ps: &PointSet,
    hull: &EdgeHull,
    k: usize,
    grid: &Grid,
    memo: &mut HashMap<[usize; 3], usize>,
) -> Result<Vec<[usize; 3]>> {
    let (u, v) = hull.edge;
    let cycle = &hull.boundary;
    let m = cycle.len();
    let iu = cycle.iter().position(|&x| x == u).unwrap();
    let rotated: Vec<usize> = (0..m).map(|i| cycle[(iu + i) % m]).collect();
    let iv = rotated
        .iter()
        .position(|&x| x == v)
        .ok_or_else(|| Error::InternalConsistency("hull boundary misses an endpoint".into()))?;
    // the chord u-v splits the cycle into two counterclockwise sub-polygons
    let side_a: Vec<usize> = rotated[0..=iv].to_vec();
    let side_b: Vec<usize> = {
        let mut s: Vec<usize> = rotated[iv..m].to_vec();
        s.push(u);
        s
    };
    let tri_a = enumerate_polygon_triangulations(ps, &side_a)?;
    let tri_b = enumerate_polygon_triangulations(ps, &side_b)?;
    if tri_a.is_empty() || tri_b.is_empty() {
        return Err(Error::InternalConsistency(
            "hull side polygon admits no triangulation".into(),
        ));
    }
    let mut order_of = |tri: [usize; 3]| -> Result<usize> {
        if let Some(&o) = memo.get(&tri) {
            return Ok(o);
        }
        let o = triangle_order(ps, tri, Some(grid))?;
        memo.insert(tri, o);
        Ok(o)
    };
    let mut best: Option<(usize, Vec<[usize; 3]>)> = None;
    for l in &tri_a {
        for r in &tri_b {
            let mut tris: Vec<[usize; 3]> = l.iter().chain(r.iter()).copied().collect();
            tris.sort_unstable();
            let mut worst = 0usize;
            for &tri in &tris {
                worst = worst.max(order_of(tri)?);
            }
            let better = match &best {
                None => true,
                Some((bo, bt)) => worst < *bo || (worst == *bo && tris < *bt),
            };
            if better {
                best = Some((worst, tris));
            }
        }
    }
    let (worst, tris) = best.unwrap();
    if worst != k {
        return Err(Error::InternalConsistency(format!(
            "hull of ({u}, {v}) retriangulates at order {worst}, expected {k}"
        )));
    }
    Ok(tris)
}

/// Builds the order-exactly-k triangulation determined by a nonempty subset of
/// a certificate's selected edges: each chosen hull is retriangulated around
/// its edge, every other Delaunay triangle is kept.
pub fn construct_orderk(
    ps: &PointSet,
    t: &Triangulation,
    cert: &LowerBoundCertificate,
    subset: &[Edge],
) -> Result<Triangulation> {
    if subset.is_empty() {
        return Err(Error::InvalidParameter("subset must be nonempty".into()));
    }
    let mut chosen_hulls = Vec::new();
    for e in subset {
        let idx = cert
            .selected
            .iter()
            .position(|s| s == e)
            .ok_or_else(|| Error::InvalidParameter(format!("edge {e:?} is not in the certificate")))?;
        chosen_hulls.push(&cert.hulls[idx]);
    }
    let mut removed: HashSet<usize> = HashSet::new();
    for h in &chosen_hulls {
        for &ti in &h.triangle_ids {
            if !removed.insert(ti) {
                return Err(Error::InvalidParameter(
                    "subset hulls share a Delaunay triangle".into(),
                ));
            }
        }
    }
    let grid = Grid::build(ps);
    let mut memo: HashMap<[usize; 3], usize> = HashMap::new();
    let mut triangles: Vec<[usize; 3]> = (0..t.num_triangles())
        .filter(|ti| !removed.contains(ti))
        .map(|ti| t.triangle(ti))
        .collect();
    for h in &chosen_hulls {
        triangles.extend(retriangulate_hull(ps, h, cert.k, &grid, &mut memo)?);
    }
    let result = Triangulation::from_triangles(ps, &triangles)?;
    result.validate(ps)?;
    let order = super::triangulation_order(ps, &result, Some(&grid))?;
    if order != cert.k {
        return Err(Error::InternalConsistency(format!(
            "constructed triangulation has order {order}, expected {}",
            cert.k
        )));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{flippable_quads, useful_k_edges, SearchMode};
    use crate::delaunay::delaunay_triangulate;
    use crate::geom::Point;
    use crate::pointset::PointSet;
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
    fn flipped_quad_hull_is_the_quad() {
        for seed in 0..30 {
            let ps = random_set(10, seed);
            let t = delaunay_triangulate(&ps).unwrap();
            for q in flippable_quads(&ps, &t, None).unwrap() {
                let (w, z) = q.alternative_diagonal;
                let hull = edge_hull(&ps, &t, w, z).unwrap();
                assert_eq!(hull.triangle_ids.len(), 2);
                assert_eq!(hull.boundary.len(), 4, "2k+2 with k = 1");
            }
        }
    }

    #[test]
    fn hull_triangles_match_brute_force_crossing() {
        for seed in 0..12 {
            let ps = random_set(10, seed + 50);
            let t = delaunay_triangulate(&ps).unwrap();
            for u in 0..ps.len() {
                for v in (u + 1)..ps.len() {
                    if t.is_edge(u, v) {
                        continue;
                    }
                    let hull = edge_hull(&ps, &t, u, v).unwrap();
                    // oracle: a Delaunay triangle is crossed iff the open
                    // segment properly crosses one of its edges or an endpoint
                    // wedge contains it; equivalently its interior meets the
                    // segment. Test via edge crossings plus endpoint triangles.
                    let mut expected: Vec<usize> = Vec::new();
                    for ti in 0..t.num_triangles() {
                        let tri = t.triangle(ti);
                        let crossed = (0..3).any(|i| {
                            segments_cross(&ps, u, v, tri[(i + 1) % 3], tri[(i + 2) % 3])
                        });
                        let at_endpoint = tri.contains(&u) || tri.contains(&v);
                        let inside = crossed
                            || (at_endpoint && {
                                // wedge containment at the endpoint
                                let p = if tri.contains(&u) { u } else { v };
                                let other = if p == u { v } else { u };
                                let ip = tri.iter().position(|&x| x == p).unwrap();
                                let a = tri[(ip + 1) % 3];
                                let b = tri[(ip + 2) % 3];
                                orient(ps[p], ps[a], ps[other]) == Orientation::CounterClockwise
                                    && orient(ps[p], ps[other], ps[b])
                                        == Orientation::CounterClockwise
                            });
                        if inside {
                            expected.push(ti);
                        }
                    }
                    let mut got = hull.triangle_ids.clone();
                    got.sort_unstable();
                    expected.sort_unstable();
                    assert_eq!(got, expected, "seed {seed} edge ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn disjoint_selection_and_construction() {
        let mut built = 0;
        for seed in 0..10 {
            let ps = random_set(12, seed + 300);
            let t = delaunay_triangulate(&ps).unwrap();
            let edges = useful_k_edges(&ps, &t, 2, SearchMode::Exhaustive, None).unwrap();
            let cert = select_disjoint_hulls(&ps, &t, &edges, 2).unwrap();
            assert!(cert.selected.len() as u64 * cert.c_k >= cert.all_edges.len() as u64);
            if !cert.selected.is_empty() {
                let subset = vec![cert.selected[0]];
                let t2 = construct_orderk(&ps, &t, &cert, &subset).unwrap();
                t2.validate(&ps).unwrap();
                built += 1;
            }
        }
        assert!(built > 0, "no instance exercised the construction");
    }

    #[test]
    fn single_useful1_subset_is_the_flip() {
        for seed in 0..20 {
            let ps = random_set(10, seed + 700);
            let t = delaunay_triangulate(&ps).unwrap();
            let quads = flippable_quads(&ps, &t, None).unwrap();
            if quads.is_empty() {
                continue;
            }
            let edges = useful_k_edges(&ps, &t, 1, SearchMode::Exhaustive, None).unwrap();
            let cert = select_disjoint_hulls(&ps, &t, &edges, 1).unwrap();
            let e = cert.selected[0];
            let built = construct_orderk(&ps, &t, &cert, &[e]).unwrap();
            // oracle: flip the corresponding quad diagonal directly
            let q = quads
                .iter()
                .find(|q| q.alternative_diagonal == e)
                .expect("useful-1 edge must be a quad's alternative diagonal");
            let mut flipped = t.clone();
            flipped
                .flip_diagonal(&ps, q.delaunay_diagonal.0, q.delaunay_diagonal.1)
                .unwrap();
            let norm = |t: &Triangulation| {
                let mut v: Vec<[usize; 3]> = t
                    .triangles()
                    .map(|mut x| {
                        x.sort_unstable();
                        x
                    })
                    .collect();
                v.sort_unstable();
                v
            };
            assert_eq!(norm(&built), norm(&flipped), "seed {seed}");
            return;
        }
        panic!("no instance with a flippable quad");
    }
}
