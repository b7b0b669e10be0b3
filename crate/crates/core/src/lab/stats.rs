use num_complex::Complex64;
use statrs::distribution::{Binomial, DiscreteCDF};

use crate::spectral::SparseSpectrum;

/// One-sided binomial test of `H0: success rate ≥ p`: holds unless the
/// observed count falls in the lower `alpha` tail.
pub fn binomial_floor_holds(successes: u64, trials: u64, p: f64, alpha: f64) -> bool {
    if p <= 0.0 || trials == 0 {
        return true;
    }
    let dist = Binomial::new(p.min(1.0), trials).expect("valid binomial");
    dist.cdf(successes) >= alpha
}

/// Central `confidence` interval of `Binomial(trials, p)` counts.
pub fn binomial_interval(trials: u64, p: f64, confidence: f64) -> (u64, u64) {
    let dist = Binomial::new(p.clamp(0.0, 1.0), trials).expect("valid binomial");
    let tail = (1.0 - confidence) / 2.0;
    (dist.inverse_cdf(tail), dist.inverse_cdf(1.0 - tail))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecoveryCounts {
    /// Truth entries reproduced to within the tolerance.
    pub correct: usize,
    /// Indices where output and truth disagree: missing, spurious or off
    /// in value.
    pub wrong: usize,
}

/// Compares an output spectrum against the truth entry by entry.
pub fn recovery_counts(truth: &SparseSpectrum, output: &SparseSpectrum, rel_tol: f64) -> RecoveryCounts {
    let mut correct = 0;
    let mut wrong = 0;
    for (s, want) in truth.iter() {
        match output.get(s) {
            Some(got) if (got - want).norm() <= rel_tol * want.norm() => correct += 1,
            _ => wrong += 1,
        }
    }
    wrong += output.indices().filter(|&s| !truth.contains(s)).count();
    RecoveryCounts { correct, wrong }
}

/// `‖x̂ - x̂_out‖₂ / ‖x̂_ns‖₂` with `x̂_ns` everything outside the
/// significant set.
pub fn error_ratio(full: &[Complex64], significant: &SparseSpectrum, output: &SparseSpectrum) -> f64 {
    let mut err = 0.0;
    let mut ns = 0.0;
    for (i, v) in full.iter().enumerate() {
        err += match output.get(i) {
            Some(o) => (v - o).norm_sqr(),
            None => v.norm_sqr(),
        };
        if !significant.contains(i) {
            ns += v.norm_sqr();
        }
    }
    (err / ns).sqrt()
}
