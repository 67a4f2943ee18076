//! Expected-count machinery for uniform random points: the event-probability
//! constants `c1`, `c2`, the useful-edge densities `d_k`, the exponent
//! constants `rho_k`, and Monte Carlo measurement of the useful-k edge count
//! `U_k`.

mod integrals;
mod lune;
mod monte_carlo;
mod quad;

pub use integrals::{event_constant_k, event_term_2d, event_term_3d, EventCase};
pub use lune::{minor_cap_area, LuneGeometry, WitnessCase};
pub use monte_carlo::{monte_carlo_uk, MonteCarloReport};
pub use quad::adaptive_quad;

use serde::Serialize;

use crate::error::Error;
use crate::Result;

/// Quadrature configuration for the constant computations.
#[derive(Debug, Clone, Copy)]
pub struct IntegralConfig {
    /// Absolute tolerance per computed constant.
    pub tolerance: f64,
    /// Interval budget per 1D quadrature.
    pub max_intervals: usize,
    /// Largest k accepted by [`integrate_dk`]; the term count and quadrature
    /// cost grow with k.
    pub k_cap: usize,
}

impl Default for IntegralConfig {
    fn default() -> Self {
        IntegralConfig {
            tolerance: 1e-7,
            max_intervals: 20_000,
            k_cap: 8,
        }
    }
}

/// A computed constant with its error estimate.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ValueWithError {
    pub value: f64,
    pub error: f64,
}

/// The constants for one order: event constants (k = 1 only), the density
/// `d_k` with `E[U_k] ~ d_k n`, and the exponent `rho_k` with
/// `E[R_k] >= 2^(rho_k n (1 + o(1)))`.
#[derive(Debug, Clone, Serialize)]
pub struct ExpectationConstants {
    pub k: usize,
    pub c1: Option<ValueWithError>,
    pub c2: Option<ValueWithError>,
    pub d_k: ValueWithError,
    pub rho_k: ValueWithError,
    /// `(4k + 1)(2k + 1)^2 + 1`; divides `d_k` in `rho_k` for k > 1.
    pub c_k: u64,
}

/// `c1`: the both-witness-angles-obtuse event constant.
pub fn integrate_c1(cfg: &IntegralConfig) -> Result<ValueWithError> {
    let (value, error) = event_term_2d(EventCase::BothObtuse, 0, 0, cfg)?;
    Ok(ValueWithError { value, error })
}

/// `c2`: the mixed-angles event constant (the third event is its mirror).
pub fn integrate_c2(cfg: &IntegralConfig) -> Result<ValueWithError> {
    let (value, error) = event_term_2d(EventCase::Mixed, 0, 0, cfg)?;
    Ok(ValueWithError { value, error })
}

pub fn c_k_constant(k: usize) -> u64 {
    (4 * k as u64 + 1) * (2 * k as u64 + 1).pow(2) + 1
}

/// `d1 = (c1 + 2 c2) / 2` and `rho_1 = d1`.
pub fn compute_d1(cfg: &IntegralConfig) -> Result<ExpectationConstants> {
    let c1 = integrate_c1(cfg)?;
    let c2 = integrate_c2(cfg)?;
    let d = ValueWithError {
        value: (c1.value + 2.0 * c2.value) / 2.0,
        error: (c1.error + 2.0 * c2.error) / 2.0,
    };
    Ok(ExpectationConstants {
        k: 1,
        c1: Some(c1),
        c2: Some(c2),
        d_k: d,
        rho_k: d,
        c_k: c_k_constant(1),
    })
}

/// General-k density `d_k` and exponent `rho_k = d_k / C_k` (k > 1).
///
/// `k = 1` degenerates to [`compute_d1`]. There is no published value for
/// `k >= 2`; the result carries the quadrature error estimate and is
/// cross-checked against Monte Carlo densities, not treated as ground truth.
pub fn integrate_dk(k: usize, cfg: &IntegralConfig) -> Result<ExpectationConstants> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if k > cfg.k_cap {
        return Err(Error::CapExceeded(format!(
            "k = {k} above the quadrature cap {}",
            cfg.k_cap
        )));
    }
    if k == 1 {
        return compute_d1(cfg);
    }
    let (c1k, e1) = event_constant_k(EventCase::BothObtuse, k, cfg)?;
    let (c2k, e2) = event_constant_k(EventCase::Mixed, k, cfg)?;
    let d = ValueWithError {
        value: (c1k + 2.0 * c2k) / 2.0,
        error: (e1 + 2.0 * e2) / 2.0,
    };
    let ck = c_k_constant(k);
    Ok(ExpectationConstants {
        k,
        c1: None,
        c2: None,
        d_k: d,
        rho_k: ValueWithError {
            value: d.value / ck as f64,
            error: d.error / ck as f64,
        },
        c_k: ck,
    })
}

/// The exponent statement `E[R_k] >= 2^(rho_k n (1 + o(1)))`.
#[derive(Debug, Clone, Serialize)]
pub struct ExponentBound {
    pub k: usize,
    pub rho_k: ValueWithError,
    pub c_k: u64,
    pub statement: String,
}

/// Packages `rho_k` from a computed `d_k`: `rho_1 = d_1`, otherwise
/// `rho_k = d_k / C_k`.
pub fn expected_count_bound(k: usize, d_k: ValueWithError) -> ExponentBound {
    let ck = c_k_constant(k);
    let rho = if k == 1 {
        d_k
    } else {
        ValueWithError {
            value: d_k.value / ck as f64,
            error: d_k.error / ck as f64,
        }
    };
    ExponentBound {
        k,
        rho_k: rho,
        c_k: ck,
        statement: format!(
            "E[R_{k}] >= 2^(rho_{k} n (1 + o(1))), rho_{k} = {:.6}",
            rho.value
        ),
    }
}
