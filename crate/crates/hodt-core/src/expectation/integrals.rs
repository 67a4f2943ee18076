//! The event-probability integrals behind the expected useful-edge counts.
//!
//! After the substitutions `l/2 = a/sqrt(n)`, `r_t = b/sqrt(n)`,
//! `r_w = c/sqrt(n)` and then `b = a/sin(sigma/2)`, `c = a/sin(theta/2)`, the
//! three-variable integrals reduce to a common shape: a polynomial-in-`a^2`
//! prefactor times `exp(-p(theta, sigma) a^2)`. The `a`-integral then has the
//! closed form `int_0^inf a^(2j+1) e^(-p a^2) da = j! / (2 p^(j+1))`, leaving
//! a two-dimensional integral per term. The reduction is validated against
//! direct three-dimensional quadrature.
//!
//! Scalar building blocks, for `x` in `(0, pi)`:
//!   `h1(x) = (x sin x - 2(1 - cos x)) / (1 - cos x)^2`       (density factor)
//!   `h2(x) = ((x - 2 pi) sin x - 2(1 - cos x)) / (1 - cos x)^2`
//!   `mu(x) = (x - sin x) / (1 - cos x)`       (scaled minor-cap area)
//!   `q(x)  = (2 pi - x + sin x) / (1 - cos x)` (scaled major-cap complement)
//! with the empty-region exponents `p1 = q(theta) + q(sigma)` (both witness
//! angles obtuse) and `p2 = mu(theta) + q(sigma)` (mixed case, sigma < theta),
//! and the occupied-region areas in units of `a^2`:
//!   event 1: `w_t = q(sigma) - mu(theta)`, `w_w = q(theta) - mu(sigma)`
//!   event 2: `w_t = q(sigma) - q(theta)`,  `w_w = mu(theta) - mu(sigma)`.

use std::f64::consts::PI;

use super::quad::adaptive_quad;
use super::IntegralConfig;
use crate::error::Error;
use crate::Result;

/// `(x sin x - 2(1 - cos x)) / (1 - cos x)^2`, evaluated through half-angle
/// forms as `(x cos(x/2) - 2 sin(x/2)) / (2 sin(x/2)^3)` to dodge the
/// catastrophic cancellation of the raw formula near zero.
pub fn h1(x: f64) -> f64 {
    if x < 1e-3 {
        // series: -1/3 - x^2/30 + O(x^4)
        return -1.0 / 3.0 - x * x / 30.0;
    }
    let s = (0.5 * x).sin();
    let c = (0.5 * x).cos();
    (x * c - 2.0 * s) / (2.0 * s * s * s)
}

/// `((x - 2 pi) sin x - 2(1 - cos x)) / (1 - cos x)^2`; diverges like
/// `-8 pi / x^3` at zero, which the `sigma < theta` domain keeps integrable.
pub fn h2(x: f64) -> f64 {
    let s = (0.5 * x).sin();
    let c = (0.5 * x).cos();
    ((x - 2.0 * PI) * c - 2.0 * s) / (2.0 * s * s * s)
}

/// `(x - sin x) / (1 - cos x)`: the minor-cap area in units of `a^2`.
pub fn mu(x: f64) -> f64 {
    if x < 1e-3 {
        return x / 3.0 + x * x * x / 90.0;
    }
    let s = (0.5 * x).sin();
    (x - x.sin()) / (2.0 * s * s)
}

/// `(2 pi - x + sin x) / (1 - cos x)`: full disk minus minor cap, in `a^2`.
pub fn qfun(x: f64) -> f64 {
    let s = (0.5 * x).sin();
    (2.0 * PI - x + x.sin()) / (2.0 * s * s)
}

/// Which of the disjoint events is being integrated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventCase {
    /// Both witness angles obtuse; square domain `(0, pi)^2`.
    BothObtuse,
    /// Left witness acute, right obtuse; triangular domain `sigma < theta`.
    Mixed,
}

struct EventShape {
    case: EventCase,
}

impl EventShape {
    fn h_theta(&self, th: f64) -> f64 {
        match self.case {
            EventCase::BothObtuse => h1(th),
            EventCase::Mixed => h2(th),
        }
    }

    fn p(&self, th: f64, sg: f64) -> f64 {
        match self.case {
            EventCase::BothObtuse => qfun(th) + qfun(sg),
            EventCase::Mixed => mu(th) + qfun(sg),
        }
    }

    fn w_t(&self, th: f64, sg: f64) -> f64 {
        match self.case {
            EventCase::BothObtuse => qfun(sg) - mu(th),
            EventCase::Mixed => qfun(sg) - qfun(th),
        }
    }

    fn w_w(&self, th: f64, sg: f64) -> f64 {
        match self.case {
            EventCase::BothObtuse => qfun(th) - mu(sg),
            EventCase::Mixed => mu(th) - mu(sg),
        }
    }

    fn sigma_upper(&self, th: f64) -> f64 {
        match self.case {
            EventCase::BothObtuse => PI,
            EventCase::Mixed => th,
        }
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// One term of the general-k sum: occupied-region powers `(m_t, m_w)` for the
/// given event, reduced to a 2D integral by the closed-form `a`-integral.
pub fn event_term_2d(
    case: EventCase,
    m_t: usize,
    m_w: usize,
    cfg: &IntegralConfig,
) -> Result<(f64, f64)> {
    let shape = EventShape { case };
    let m = m_t + m_w;
    let pref =
        8.0 * PI * factorial(m + 2) / (2.0 * factorial(m_t) * factorial(m_w));
    let inner_tol = cfg.tolerance / 40.0;
    let outer = adaptive_quad(
        |th| {
            let f = |sg: f64| {
                let p = shape.p(th, sg);
                let mut v = shape.h_theta(th) * h1(sg) / p.powi(m as i32 + 3);
                if m_t > 0 {
                    v *= shape.w_t(th, sg).powi(m_t as i32);
                }
                if m_w > 0 {
                    v *= shape.w_w(th, sg).powi(m_w as i32);
                }
                v
            };
            let hi = shape.sigma_upper(th);
            adaptive_quad(f, 0.0, hi, inner_tol, cfg.max_intervals)
                .map(|(v, _)| v)
                .unwrap_or(f64::NAN)
        },
        0.0,
        PI,
        cfg.tolerance / 2.0,
        cfg.max_intervals,
    )?;
    let (value, outer_err) = outer;
    if !value.is_finite() {
        return Err(Error::NonConvergence(
            "inner quadrature failed inside the 2D event integral".into(),
        ));
    }
    let err = pref * (outer_err + inner_tol * PI);
    Ok((pref * value, err))
}

/// The same term evaluated by direct 3D quadrature over `(a, theta, sigma)`,
/// with the `a`-range truncated where the Gaussian tail drops below a tenth of
/// the tolerance. Cross-validates the analytic `a`-reduction.
pub fn event_term_3d(
    case: EventCase,
    m_t: usize,
    m_w: usize,
    cfg: &IntegralConfig,
) -> Result<(f64, f64)> {
    let shape = EventShape { case };
    let m = m_t + m_w;
    let pref = 8.0 * PI / (factorial(m_t) * factorial(m_w));
    // p >= pi over both domains; pick a_max so the closed-form tail bound of
    // the a-integral stays below tol / 10.
    let p_min = PI;
    let mut a_max = 2.0f64;
    while a_tail_bound(p_min, a_max, m) > cfg.tolerance / 10.0 {
        a_max += 0.5;
        if a_max > 40.0 {
            return Err(Error::NonConvergence("a-range truncation failed".into()));
        }
    }
    let inner_tol = cfg.tolerance / 60.0;
    let mid_tol = cfg.tolerance / 20.0;
    let outer = adaptive_quad(
        |th| {
            let sg_hi = shape.sigma_upper(th);
            adaptive_quad(
                |sg| {
                    let p = shape.p(th, sg);
                    let coeff = shape.h_theta(th)
                        * h1(sg)
                        * if m_t > 0 { shape.w_t(th, sg).powi(m_t as i32) } else { 1.0 }
                        * if m_w > 0 { shape.w_w(th, sg).powi(m_w as i32) } else { 1.0 };
                    adaptive_quad(
                        |a| a.powi(5 + 2 * m as i32) * (-p * a * a).exp(),
                        0.0,
                        a_max,
                        inner_tol / coeff.abs().max(1.0),
                        cfg.max_intervals,
                    )
                    .map(|(v, _)| coeff * v)
                    .unwrap_or(f64::NAN)
                },
                0.0,
                sg_hi,
                mid_tol,
                cfg.max_intervals,
            )
            .map(|(v, _)| v)
            .unwrap_or(f64::NAN)
        },
        0.0,
        PI,
        cfg.tolerance / 2.0,
        cfg.max_intervals,
    )?;
    let (value, outer_err) = outer;
    if !value.is_finite() {
        return Err(Error::NonConvergence(
            "nested quadrature failed inside the 3D event integral".into(),
        ));
    }
    let err = pref * (outer_err + mid_tol * PI) + cfg.tolerance / 10.0;
    Ok((pref * value, err))
}

/// Exact tail `int_A^inf a^(5 + 2m) e^(-p a^2) da` bounded with `p = p_min`.
fn a_tail_bound(p: f64, a: f64, m: usize) -> f64 {
    // for m = 0: e^(-p A^2) (A^4/(2p) + A^2/p^2 + 1/p^3); higher m gain
    // polynomial factors, bounded crudely by (A^2/p + 1)^m times the m = 0 tail
    let base = (-p * a * a).exp() * (a.powi(4) / (2.0 * p) + a * a / (p * p) + 1.0 / p.powi(3));
    base * (a * a / p + 1.0).powi(m as i32)
}

/// Sum of general-k occupied-region terms for one event: the region toward the
/// right witness holds exactly `k - 1` points while the mirror region holds
/// `i <= k - 1`, plus the mirrored sum with `i <= k - 2`.
pub fn event_constant_k(case: EventCase, k: usize, cfg: &IntegralConfig) -> Result<(f64, f64)> {
    let mut total = 0.0;
    let mut err = 0.0;
    for i in 0..k {
        let (v, e) = event_term_2d(case, k - 1, i, cfg)?;
        total += v;
        err += e;
    }
    for i in 0..k.saturating_sub(1) {
        let (v, e) = event_term_2d(case, i, k - 1, cfg)?;
        total += v;
        err += e;
    }
    Ok((total, err))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> IntegralConfig {
        IntegralConfig::default()
    }

    #[test]
    fn scalar_helpers_match_series_and_limits() {
        assert!((h1(PI) - (-1.0)).abs() < 1e-12);
        assert!((h1(1e-6) - (-1.0 / 3.0)).abs() < 1e-9);
        assert!((mu(PI) - PI / 2.0).abs() < 1e-12);
        assert!((qfun(PI) - PI / 2.0).abs() < 1e-12);
        // continuity across the series switch point
        for f in [h1 as fn(f64) -> f64, mu as fn(f64) -> f64] {
            let lo = f(1e-3 - 1e-9);
            let hi = f(1e-3 + 1e-9);
            assert!((lo - hi).abs() < 1e-8);
        }
    }

    #[test]
    fn region_areas_are_nonnegative() {
        for case in [EventCase::BothObtuse, EventCase::Mixed] {
            let shape = EventShape { case };
            let mut th = 0.05;
            while th < PI {
                let hi = shape.sigma_upper(th);
                let mut sg = 0.04 * hi.max(1e-3);
                while sg < hi {
                    assert!(shape.p(th, sg) > 0.0);
                    assert!(shape.w_t(th, sg) >= -1e-9, "case {case:?} th {th} sg {sg}");
                    assert!(shape.w_w(th, sg) >= -1e-9, "case {case:?} th {th} sg {sg}");
                    sg += 0.1 * hi;
                }
                th += 0.1;
            }
        }
    }

    #[test]
    fn mixed_integrand_is_nonnegative_on_grid() {
        // probability density pieces: h2(theta) h1(sigma) / p^3 >= 0
        let shape = EventShape { case: EventCase::Mixed };
        let mut th = 0.1f64;
        while th < PI {
            let mut sg = th * 0.05;
            while sg < th {
                let v = shape.h_theta(th) * h1(sg) / shape.p(th, sg).powi(3);
                assert!(v >= 0.0, "negative integrand at ({th}, {sg})");
                sg += th * 0.1;
            }
            th += 0.15;
        }
    }

    #[test]
    fn reduction_matches_3d_quadrature() {
        let config = cfg();
        for case in [EventCase::BothObtuse, EventCase::Mixed] {
            let (v2, e2) = event_term_2d(case, 0, 0, &config).unwrap();
            let (v3, e3) = event_term_3d(case, 0, 0, &config).unwrap();
            assert!(
                (v2 - v3).abs() <= (e2 + e3).max(1e-6),
                "case {case:?}: 2d {v2} vs 3d {v3} (errors {e2:e}, {e3:e})"
            );
        }
    }
}
