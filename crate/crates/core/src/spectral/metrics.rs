use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::SparseSpectrum;

/// Returned by [`snr`] when the estimate matches the reference exactly.
pub const SNR_PERFECT: f64 = f64::INFINITY;

pub fn rms(x: &[Complex64]) -> f64 {
    if x.is_empty() {
        return 0.0;
    }
    (x.iter().map(|v| v.norm_sqr()).sum::<f64>() / x.len() as f64).sqrt()
}

/// `10·log10( mean|x̄|² / mean|x̂ − x̄|² )` with `x̂ = reference` and
/// `x̄ = estimate`. Returns [`SNR_PERFECT`] for zero error.
pub fn snr(reference: &[Complex64], estimate: &[Complex64]) -> Result<f64> {
    if reference.len() != estimate.len() {
        return Err(Error::LengthMismatch(reference.len(), estimate.len()));
    }
    let signal: f64 = estimate.iter().map(|v| v.norm_sqr()).sum();
    let error: f64 = reference.iter().zip(estimate).map(|(a, b)| (a - b).norm_sqr()).sum();
    Ok(ratio_db(signal, error))
}

/// [`snr`] against a sparse estimate without densifying it.
pub fn snr_sparse(reference: &[Complex64], estimate: &SparseSpectrum) -> Result<f64> {
    if reference.len() != estimate.len() {
        return Err(Error::LengthMismatch(reference.len(), estimate.len()));
    }
    let mut error = 0.0;
    let mut signal = 0.0;
    let mut next = estimate.iter().peekable();
    for (i, r) in reference.iter().enumerate() {
        match next.peek() {
            Some(&(s, v)) if s == i => {
                signal += v.norm_sqr();
                error += (r - v).norm_sqr();
                next.next();
            }
            _ => error += r.norm_sqr(),
        }
    }
    Ok(ratio_db(signal, error))
}

fn ratio_db(signal: f64, error: f64) -> f64 {
    if error == 0.0 {
        SNR_PERFECT
    } else {
        10.0 * (signal / error).log10()
    }
}
