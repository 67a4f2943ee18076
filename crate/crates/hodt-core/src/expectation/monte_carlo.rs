//! Monte Carlo measurement of `U_k`, the number of useful-exactly-k
//! non-Delaunay edges of a uniform random point set.

use serde::Serialize;

use crate::analysis::{useful_k_edges, SearchMode};
use crate::delaunay::delaunay_triangulate;
use crate::error::Error;
use crate::generators::gen_uniform;
use crate::geom::Grid;
use crate::Result;

/// Per-trial counts and summary statistics of `U_k / n`.
#[derive(Debug, Clone, Serialize)]
pub struct MonteCarloReport {
    pub n: usize,
    pub k: usize,
    pub trials: usize,
    pub seed: u64,
    pub counts: Vec<usize>,
    /// Mean of `U_k / n` over trials.
    pub mean_density: f64,
    /// Sample standard deviation of `U_k / n`.
    pub std_density: f64,
    /// Standard error of the mean density.
    pub stderr_density: f64,
    /// The quadrature density `d_k` the run is compared against, if given.
    pub target_d_k: Option<f64>,
    /// `|mean - d_k| / d_k` when a target is given.
    pub relative_deviation: Option<f64>,
}

/// Runs `trials` independent experiments: sample `n` uniform points, build the
/// Delaunay triangulation, count useful-exactly-k edges.
///
/// Each trial derives its own sub-seed from `(seed, trial)`, so reports are
/// identical regardless of evaluation order or worker count.
pub fn monte_carlo_uk(
    n: usize,
    k: usize,
    trials: usize,
    seed: u64,
    target_d_k: Option<f64>,
) -> Result<MonteCarloReport> {
    if n < 10 || k < 1 || trials < 1 {
        return Err(Error::InvalidParameter(
            "monte carlo needs n >= 10, k >= 1, trials >= 1".into(),
        ));
    }
    let mut counts = Vec::with_capacity(trials);
    for trial in 0..trials {
        let sub_seed = seed
            .wrapping_add((trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
            .wrapping_add(1);
        let ps = gen_uniform(n, sub_seed)?;
        let t = delaunay_triangulate(&ps)?;
        let grid = Grid::build(&ps);
        let edges = useful_k_edges(&ps, &t, k, SearchMode::Auto, Some(&grid))?;
        counts.push(edges.len());
    }
    let densities: Vec<f64> = counts.iter().map(|&c| c as f64 / n as f64).collect();
    let mean = densities.iter().sum::<f64>() / trials as f64;
    let var = if trials > 1 {
        densities.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>() / (trials as f64 - 1.0)
    } else {
        0.0
    };
    let std = var.sqrt();
    Ok(MonteCarloReport {
        n,
        k,
        trials,
        seed,
        counts,
        mean_density: mean,
        std_density: std,
        stderr_density: std / (trials as f64).sqrt(),
        target_d_k,
        relative_deviation: target_d_k.map(|d| (mean - d).abs() / d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = monte_carlo_uk(40, 1, 3, 9, None).unwrap();
        let b = monte_carlo_uk(40, 1, 3, 9, None).unwrap();
        assert_eq!(a.counts, b.counts);
        let c = monte_carlo_uk(40, 1, 3, 10, None).unwrap();
        assert_ne!(a.counts, c.counts);
    }

    #[test]
    fn small_run_is_plausible() {
        let r = monte_carlo_uk(120, 1, 5, 3, Some(0.5258)).unwrap();
        // boundary effects push the density below the asymptotic constant at
        // this size, but it must be in the right ballpark
        assert!(r.mean_density > 0.2 && r.mean_density < 0.7, "{}", r.mean_density);
    }
}
