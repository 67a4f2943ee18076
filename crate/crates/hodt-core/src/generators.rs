//! Point-set generators: the two extremal constructions and uniform random
//! instances. Both extremal families are built degenerate on purpose (clusters
//! on shared circles, cocircular quadrilaterals) and then perturbed by an
//! explicit seeded jitter; exact-predicate audits gate the output, retrying
//! with half the jitter on failure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::flippable_quads;
use crate::delaunay::delaunay_triangulate;
use crate::error::Error;
use crate::geom::{self, CirclePosition, Grid, Point};
use crate::pointset::PointSet;
use crate::Result;

const RETRY_CAP: usize = 8;

/// Which generator to run, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub k: Option<usize>,
    pub seed: u64,
    pub epsilon: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Only1,
    Maxfodt,
    Uniform,
}

pub fn generate(spec: &GeneratorSpec) -> Result<PointSet> {
    match spec.kind {
        GeneratorKind::Uniform => gen_uniform(spec.n, spec.seed),
        GeneratorKind::Maxfodt => gen_maxfodt(spec.n, spec.seed, spec.epsilon),
        GeneratorKind::Only1 => gen_only1(
            spec.n,
            spec.k
                .ok_or_else(|| Error::InvalidParameter("only1 requires k".into()))?,
            spec.seed,
            spec.epsilon,
        ),
    }
}

/// `n` i.i.d. uniform points in the unit square; identical output per seed.
pub fn gen_uniform(n: usize, seed: u64) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "uniform generator needs n >= 3, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PointSet::new(
        (0..n)
            .map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>()))
            .collect(),
    )
}

fn perturb(points: &[Point], seed: u64, attempt: usize, epsilon: f64) -> Result<PointSet> {
    let base = PointSet::new(points.to_vec())?;
    let scale = epsilon * base.min_pairwise_distance() / 4.0;
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed ^ (attempt as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    PointSet::new(
        points
            .iter()
            .map(|p| {
                let ang = rng.gen::<f64>() * std::f64::consts::TAU;
                let r = rng.gen::<f64>() * scale;
                Point::new(p.x + r * ang.cos(), p.y + r * ang.sin())
            })
            .collect(),
    )
}

/// Concentric-squares construction: `n/4` axis-aligned squares whose
/// ring-to-ring trapezoids (and the innermost square) are cocircular before
/// perturbation, giving exactly `n - 3` flippable quadrilaterals after it.
pub fn gen_maxfodt(n: usize, seed: u64, epsilon: f64) -> Result<PointSet> {
    if n % 4 != 0 || n < 8 {
        return Err(Error::InvalidParameter(format!(
            "maxfodt needs n a multiple of 4, n >= 8, got {n}"
        )));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be in (0, 1), got {epsilon}"
        )));
    }
    let rings = n / 4;
    let ratio = 1.6f64;
    let mut base = Vec::with_capacity(n);
    for j in 0..rings {
        let r = ratio.powi(j as i32);
        for c in 0..4 {
            let a = std::f64::consts::FRAC_PI_4 + c as f64 * std::f64::consts::FRAC_PI_2;
            base.push(Point::new(r * a.cos(), r * a.sin()));
        }
    }
    let mut eps = epsilon;
    let mut last_err: Option<Error> = None;
    for attempt in 0..RETRY_CAP {
        match try_maxfodt(&base, n, seed, attempt, eps) {
            Ok(ps) => return Ok(ps),
            Err(e) => {
                last_err = Some(e);
                eps /= 2.0;
            }
        }
    }
    Err(Error::AuditFailed(
        RETRY_CAP,
        format!("maxfodt(n={n}): {}", last_err.unwrap()),
    ))
}

fn try_maxfodt(base: &[Point], n: usize, seed: u64, attempt: usize, eps: f64) -> Result<PointSet> {
    let ps = perturb(base, seed, attempt, eps)?;
    let t = delaunay_triangulate(&ps)?;
    let grid = Grid::build(&ps);
    let quads = flippable_quads(&ps, &t, Some(&grid))?;
    if quads.len() != n - 3 {
        return Err(Error::InternalConsistency(format!(
            "expected {} flippable quads, found {}",
            n - 3,
            quads.len()
        )));
    }
    Ok(ps)
}

/// Tuned base layout for the single-triangulation construction.
///
/// Point order: `s1, s2, s3, p1..p_m, q1..q_k, r1..r_{k-1}` with
/// `m = n - 2k - 2` and `k = floor(n/3) - 1`.
fn only1_base(n: usize) -> Vec<Point> {
    match n {
        6 => vec![
            Point::new(2.920291, 0.175043),  // s1
            Point::new(0.166985, 0.586054),  // s2
            Point::new(0.479488, 0.879585),  // s3
            Point::new(1.001286, -0.002421), // p1
            Point::new(0.628770, 0.777393),  // p2
            Point::new(0.323727, 0.661978),  // q1
        ],
        9 => vec![
            Point::new(2.043782, 0.270561),  // s1
            Point::new(0.488129, 1.130836),  // s2
            Point::new(1.425112, 0.638300),  // s3
            Point::new(0.336436, -1.175878), // p1
            Point::new(0.583296, -1.040020), // p2
            Point::new(1.269405, -0.510807), // p3
            Point::new(0.699459, 0.845152),  // q1
            Point::new(0.386858, 0.928271),  // q2
            Point::new(0.369112, -0.808821), // r1
        ],
        _ => only1_parametric(n, 0),
    }
}

/// Knob presets for the parametric layout; together they pass the audits for
/// every size up to the low thirties, alternated across retry attempts.
const ONLY1_PRESETS: [[f64; 11]; 2] = [
    // span, gap_s3, q_arc, q_depth, psi_q, r_arc, r_depth, psi_r, delta, s1_ang, s1_out
    [0.7047, 0.2521, 0.1996, 0.2157, 0.9603, 0.2716, 0.45, -0.5871, 0.0252, 0.15, 2.2719],
    [0.5915, 0.1141, 0.1698, 0.1680, 0.9265, 0.0266, 0.3897, -1.5, 0.0217, -0.3742, 2.7121],
];

/// Parametric fallback layout: the p-chain on a reference circle, s3 past the
/// chain on the same circle, then the q and r clusters as tiny tilted batches
/// pulled inward, s1 far outside. Audits gate the output; the
/// single-triangulation property itself is pinned by census tests on the
/// tuned sizes.
fn only1_parametric(n: usize, preset: usize) -> Vec<Point> {
    let m0 = n / 3;
    let k = m0 - 1;
    let mp = n - 2 * k - 2;
    let at = |phi: f64, depth: f64| Point::new((1.0 - depth) * phi.cos(), (1.0 - depth) * phi.sin());
    let [span, gap_s3, q_arc, q_depth, psi_q, r_arc, r_depth, psi_r, delta, s1_ang, s1_out] =
        ONLY1_PRESETS[preset % ONLY1_PRESETS.len()];
    let phi_s3 = span + gap_s3;
    let batch = |center_arc: f64, depth: f64, psi: f64, count: usize| -> Vec<Point> {
        let tang = (-center_arc.sin(), center_arc.cos());
        let rad = (-center_arc.cos(), -center_arc.sin());
        let dir = (
            psi.cos() * tang.0 + psi.sin() * rad.0,
            psi.cos() * tang.1 + psi.sin() * rad.1,
        );
        let c = at(center_arc, depth);
        (0..count)
            .map(|i| {
                let t = (i as f64 - (count as f64 - 1.0) / 2.0) * delta;
                Point::new(c.x + t * dir.0, c.y + t * dir.1)
            })
            .collect()
    };
    let rbatch = batch(phi_s3 + q_arc + r_arc, r_depth, psi_r, k);
    let qbatch = batch(phi_s3 + q_arc, q_depth, psi_q, k);
    let mut pts = Vec::with_capacity(n);
    pts.push(at(s1_ang, -s1_out)); // s1, far outside the reference circle
    pts.push(rbatch[0]); // s2
    pts.push(at(phi_s3, 0.0)); // s3
    for i in 0..mp {
        let phi = if mp > 1 {
            span * i as f64 / (mp as f64 - 1.0)
        } else {
            0.0
        };
        pts.push(at(phi, 0.0));
    }
    pts.extend(qbatch);
    pts.extend(rbatch.into_iter().skip(1));
    pts
}

/// Point set whose only order-k Delaunay triangulation is the Delaunay
/// triangulation itself.
///
/// Internally the construction always uses `k_eff = floor(n/3) - 1`: a set
/// with a unique order-`k_eff` triangulation has a unique order-k one for
/// every smaller k, so any requested `k <= k_eff` is covered. Group sizes are
/// `m = n - 2 k_eff - 2` chain points, `k_eff` q-cluster points and
/// `k_eff - 1` r-cluster points besides the three anchors; a remainder
/// `n mod 3` goes to the chain. The circle-containment properties of the
/// construction are audited with exact predicates after perturbation; on
/// failure the jitter is halved and the construction retried.
pub fn gen_only1(n: usize, k: usize, seed: u64, epsilon: f64) -> Result<PointSet> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!(
            "only1 needs n >= 6, got {n}"
        )));
    }
    let k_eff = n / 3 - 1;
    if k < 1 || k > k_eff {
        return Err(Error::InvalidParameter(format!(
            "only1 needs 1 <= k <= floor(n/3) - 1 = {k_eff}, got {k}"
        )));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be in (0, 1), got {epsilon}"
        )));
    }
    let tuned = matches!(n, 6 | 9);
    let mut eps = epsilon;
    let mut last_err: Option<Error> = None;
    for attempt in 0..RETRY_CAP {
        let base = if tuned {
            only1_base(n)
        } else {
            only1_parametric(n, attempt)
        };
        debug_assert_eq!(base.len(), n);
        match try_only1(&base, n, seed, attempt, eps) {
            Ok(ps) => return Ok(ps),
            Err(e) => {
                last_err = Some(e);
                if tuned || attempt % ONLY1_PRESETS.len() == ONLY1_PRESETS.len() - 1 {
                    eps /= 2.0;
                }
            }
        }
    }
    Err(Error::AuditFailed(
        RETRY_CAP,
        format!("only1(n={n}, k={k}): {}", last_err.unwrap()),
    ))
}

fn try_only1(base: &[Point], n: usize, seed: u64, attempt: usize, eps: f64) -> Result<PointSet> {
    let ps = perturb(base, seed, attempt, eps)?;
    audit_only1(&ps, n)?;
    delaunay_triangulate(&ps)?; // surfaces residual degeneracies
    Ok(ps)
}

/// Exact-predicate audit of the construction's circle-containment properties,
/// on proxy circles through perturbed representatives:
/// (i) the chain circle contains s2, every r and every q;
/// (ii) the q-cluster circle (through s3) and the r-cluster circle (through
///     s2) contain every chain point, when the cluster has enough points to
///     pin a circle;
/// (iii) the circle through s1, s2, p1 contains s3 and every q.
fn audit_only1(ps: &PointSet, n: usize) -> Result<()> {
    let k = n / 3 - 1;
    let mp = n - 2 * k - 2;
    let (s1, s2, s3) = (0usize, 1usize, 2usize);
    let p: Vec<usize> = (3..3 + mp).collect();
    let q: Vec<usize> = (3 + mp..3 + mp + k).collect();
    let r: Vec<usize> = (3 + mp + k..n).collect();
    let strictly_inside = |a: usize, b: usize, c: usize, x: usize| -> Result<bool> {
        Ok(geom::in_circle(ps[a], ps[b], ps[c], ps[x])? == CirclePosition::Inside)
    };
    let chain_proxy: [usize; 3] = if mp >= 3 {
        [p[0], p[mp / 2], p[mp - 1]]
    } else {
        [p[0], p[mp - 1], s3]
    };
    for &x in std::iter::once(&s2).chain(r.iter()).chain(q.iter()) {
        if !strictly_inside(chain_proxy[0], chain_proxy[1], chain_proxy[2], x)? {
            return Err(Error::InternalConsistency(format!(
                "audit (i): point {x} escaped the chain circle"
            )));
        }
    }
    if k >= 2 {
        for &x in &p {
            if !strictly_inside(s3, q[0], q[k - 1], x)? {
                return Err(Error::InternalConsistency(format!(
                    "audit (ii): chain point {x} escaped the q-cluster circle"
                )));
            }
        }
    }
    if k >= 3 {
        for &x in &p {
            if !strictly_inside(s2, r[0], r[k - 2], x)? {
                return Err(Error::InternalConsistency(format!(
                    "audit (ii): chain point {x} escaped the r-cluster circle"
                )));
            }
        }
    }
    for &x in std::iter::once(&s3).chain(q.iter()) {
        if !strictly_inside(s1, s2, p[0], x)? {
            return Err(Error::InternalConsistency(format!(
                "audit (iii): point {x} escaped C(s1, s2, p1)"
            )));
        }
    }
    Ok(())
}
