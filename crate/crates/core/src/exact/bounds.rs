//! Closed-form recovery guarantees for uniformly placed supports.

use std::f64::consts::E;

/// Upper bound on the probability that some bin of a stride-`d` view holds
/// more than `a_max` of the `K` frequencies:
/// `(N/d) · (d e K / (N (a_max + 1)))^(a_max + 1)`.
pub fn overflow_bound(n: usize, d: usize, k: usize, a_max: usize) -> f64 {
    let (n, d, k) = (n as f64, d as f64, k as f64);
    let a1 = (a_max + 1) as f64;
    n / d * (d * E * k / (n * a1)).powf(a1)
}

/// Lower bound on the probability of perfect recovery.
pub fn perfect_recovery_probability(n: usize, d: usize, k: usize, a_max: usize) -> f64 {
    (1.0 - overflow_bound(n, d, k, a_max)).max(0.0)
}

/// Lower bound on the probability that at most
/// [`unrecovered_allowance`] frequencies are lost, with `τK` overflowing
/// bins as the failure event:
/// `1 - ((dK/N)^a_max e^(a_max+2) / (τ (a_max+1)^(a_max+1)))^(τK)`.
pub fn partial_recovery_probability(n: usize, d: usize, k: usize, a_max: usize, tau: f64) -> f64 {
    let (nf, df, kf) = (n as f64, d as f64, k as f64);
    let am = a_max as f64;
    let base = (df * kf / nf).powf(am) * E.powf(am + 2.0) / (tau * (am + 1.0).powf(am + 1.0));
    (1.0 - base.powf(tau * kf)).max(0.0)
}

/// `(τ/μ - 1/(μK)) · N`, the number of frequencies the partial guarantee
/// allows to be wrong.
pub fn unrecovered_allowance(n: usize, k: usize, mu: usize, tau: f64) -> f64 {
    let mu = mu as f64;
    (tau / mu - 1.0 / (mu * k as f64)) * n as f64
}

/// Bound on the probability that pass `l ≥ 1` of the iterative solver
/// merges previously separate frequencies into one bin, given `k_l`
/// frequencies still unsolved: `2^(l-1) (d/N) k_l^2`, with `d` the initial
/// stride.
pub fn new_aliasing_bound(n: usize, d: usize, k_l: usize, l: u32) -> f64 {
    2f64.powi(l as i32 - 1) * d as f64 / n as f64 * (k_l as f64).powi(2)
}

/// Exact probability that one bin holds more than `a_max` frequencies when
/// each of its `d` slots is occupied independently with probability `K/N`.
pub fn bin_overflow_probability(n: usize, d: usize, k: usize, a_max: usize) -> f64 {
    use statrs::distribution::{Binomial, DiscreteCDF};
    let p = (k as f64 / n as f64).min(1.0);
    let bin = Binomial::new(p, d as u64).expect("valid binomial");
    1.0 - bin.cdf(a_max as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_grid_values() {
        let n = 1 << 14;
        let k = 1 << 7;
        let d = n / (4 * k);
        // (N/d)(deK/5N)^5 with deK/N = e/4.
        let direct = 512.0 * (E / 20.0).powi(5);
        assert!((overflow_bound(n, d, k, 4) - direct).abs() < 1e-15);
        assert!((perfect_recovery_probability(n, d, k, 4) - (1.0 - direct)).abs() < 1e-15);
        let base: f64 = 0.25f64.powi(4) * E.powi(6) / (0.01 * 3125.0);
        let rho2 = 1.0 - base.powf(1.28);
        assert!((partial_recovery_probability(n, d, k, 4, 0.01) - rho2).abs() < 1e-12);
        assert!((unrecovered_allowance(n, k, 4, 0.01) - (0.0025 - 1.0 / 512.0) * n as f64).abs() < 1e-9);
    }

    #[test]
    fn bin_overflow_is_below_union_bound() {
        let (n, k) = (1 << 14, 1 << 7);
        for d in [8, 16, 32, 64] {
            let exact = bin_overflow_probability(n, d, k, 4);
            let per_bin_bound = overflow_bound(n, d, k, 4) * d as f64 / n as f64;
            assert!(exact <= per_bin_bound, "d={d}: {exact} > {per_bin_bound}");
        }
    }

    #[test]
    fn probabilities_clamp_at_zero() {
        assert_eq!(perfect_recovery_probability(1 << 10, 1 << 9, 1 << 8, 1), 0.0);
    }
}
