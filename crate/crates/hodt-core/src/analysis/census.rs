//! Exhaustive enumeration of all triangulations of a small point set: the
//! brute-force oracle behind every combinatorial claim.
//!
//! The flip graph of the triangulations of a planar point set is connected
//! (any triangulation reaches the Delaunay triangulation by legal flips), so a
//! breadth-first search over diagonal flips starting from the Delaunay
//! triangulation visits every triangulation exactly once. Triangulations are
//! keyed by their edge set packed into a 128-bit mask, which is unique because
//! the edge set of a maximal planar subdivision determines its faces.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::delaunay::{delaunay_triangulate, Edge, Triangulation};
use crate::error::Error;
use crate::geom::{orient, Grid, Orientation};
use crate::pointset::PointSet;
use crate::Result;

use super::triangle_order;

/// One triangulation of the census.
#[derive(Debug, Clone)]
pub struct CensusEntry {
    /// Bit `i * n + j` (for `i < j`) marks edge `{i, j}`.
    pub edge_mask: u128,
    /// Sorted triangle list.
    pub triangles: Vec<[usize; 3]>,
    /// Maximum triangle order.
    pub order: usize,
}

/// All triangulations of a point set, annotated with their orders.
#[derive(Debug, Clone)]
pub struct Census {
    pub n: usize,
    pub entries: Vec<CensusEntry>,
    masks: HashSet<u128>,
}

impl Census {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `R_k` table: number of triangulations of order exactly `k`, for each
    /// order that occurs.
    pub fn order_histogram(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            *out.entry(e.order).or_insert(0) += 1;
        }
        out
    }

    /// Number of triangulations of order exactly `k`.
    pub fn count_order_exactly(&self, k: usize) -> u64 {
        self.entries.iter().filter(|e| e.order == k).count() as u64
    }

    /// Number of triangulations of order at most `k`.
    pub fn count_order_at_most(&self, k: usize) -> u64 {
        self.entries.iter().filter(|e| e.order <= k).count() as u64
    }

    /// Smallest triangulation order among census triangulations containing the
    /// edge `{u, v}`; this is the useful order of the edge by definition.
    pub fn min_order_containing_edge(&self, u: usize, v: usize) -> Option<usize> {
        let bit = edge_bit(self.n, u, v);
        self.entries
            .iter()
            .filter(|e| e.edge_mask & bit != 0)
            .map(|e| e.order)
            .min()
    }

    /// Whether a triangulation with exactly this edge set was enumerated.
    pub fn contains_edge_set(&self, mask: u128) -> bool {
        self.masks.contains(&mask)
    }

    pub fn contains(&self, t: &Triangulation) -> bool {
        self.contains_edge_set(edge_mask_of(self.n, &t.edges()))
    }
}

pub(crate) fn edge_bit(n: usize, u: usize, v: usize) -> u128 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    // triangular index over unordered pairs: C(n, 2) bits suffice for n <= 16
    1u128 << (a * n - a * (a + 1) / 2 + (b - a - 1))
}

pub fn edge_mask_of(n: usize, edges: &[Edge]) -> u128 {
    edges.iter().fold(0u128, |m, &(u, v)| m | edge_bit(n, u, v))
}

/// Enumerates all triangulations of the convex hull of `ps` using every point
/// as a vertex.
///
/// `n_cap` bounds the input size (default 12; the mask packing itself allows
/// 16 at most). Each triangulation is annotated with its order; triangle
/// orders are memoized across the census.
pub fn enumerate_all_triangulations(ps: &PointSet, n_cap: Option<usize>) -> Result<Census> {
    let n = ps.len();
    let cap = n_cap.unwrap_or(12);
    if n > cap {
        return Err(Error::CapExceeded(format!(
            "census requested for {n} points, cap is {cap}"
        )));
    }
    if n * (n - 1) / 2 > 128 {
        return Err(Error::CapExceeded(format!(
            "census edge mask cannot address {n} points"
        )));
    }
    let grid = Grid::build(ps);
    let start = delaunay_triangulate(ps)?;
    let mut order_memo: HashMap<[usize; 3], usize> = HashMap::new();
    let mut order_of = |tri: [usize; 3]| -> Result<usize> {
        let mut key = tri;
        key.sort_unstable();
        if let Some(&o) = order_memo.get(&key) {
            return Ok(o);
        }
        let o = triangle_order(ps, key, Some(&grid))?;
        order_memo.insert(key, o);
        Ok(o)
    };

    let mut masks: HashSet<u128> = HashSet::new();
    let mut entries: Vec<CensusEntry> = Vec::new();
    let mut queue: VecDeque<Triangulation> = VecDeque::new();
    masks.insert(edge_mask_of(n, &start.edges()));
    queue.push_back(start);

    while let Some(t) = queue.pop_front() {
        let mut triangles: Vec<[usize; 3]> = t
            .triangles()
            .map(|mut x| {
                x.sort_unstable();
                x
            })
            .collect();
        triangles.sort_unstable();
        let mut order = 0;
        for &tri in &triangles {
            order = order.max(order_of(tri)?);
        }
        entries.push(CensusEntry {
            edge_mask: edge_mask_of(n, &t.edges()),
            triangles,
            order,
        });

        // expand: flip every interior convex diagonal
        for ti in 0..t.num_triangles() {
            let tri = t.triangle(ti);
            for i in 0..3 {
                let Some(o) = t.neighbor(ti, i) else { continue };
                let (a, b) = (tri[(i + 1) % 3], tri[(i + 2) % 3]);
                if a > b {
                    continue; // visit each interior edge once
                }
                let w = tri[i];
                let z = t
                    .triangle(o)
                    .into_iter()
                    .find(|&x| x != a && x != b)
                    .expect("neighbor shares the edge");
                let ou = orient(ps[w], ps[z], ps[a]);
                let ov = orient(ps[w], ps[z], ps[b]);
                if ou == Orientation::Collinear {
                    return Err(Error::DegenerateCollinear(w, z, a));
                }
                if ov == Orientation::Collinear {
                    return Err(Error::DegenerateCollinear(w, z, b));
                }
                if ou == ov {
                    continue;
                }
                let mut t2 = t.clone();
                t2.flip_diagonal(ps, a, b)?;
                let mask = edge_mask_of(n, &t2.edges());
                if masks.insert(mask) {
                    queue.push_back(t2);
                }
            }
        }
    }

    entries.sort_by_key(|e| e.edge_mask);
    Ok(Census { n, entries, masks })
}
