use hodt_core::expectation::monte_carlo_uk;
use std::time::Instant;

#[test]
fn mc_timing() {
    for (n, k, trials) in [(500usize, 1usize, 3usize), (2000, 1, 3), (4000, 1, 2), (2000, 2, 2)] {
        let t0 = Instant::now();
        let r = monte_carlo_uk(n, k, trials, 42, Some(0.5258)).unwrap();
        println!(
            "n={n} k={k} trials={trials}: mean U_k/n = {:.4} (std {:.4}) in {:?}",
            r.mean_density, r.std_density, t0.elapsed()
        );
    }
}
