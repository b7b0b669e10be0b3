use num_complex::Complex64;

use super::{DecodeError, MAX_COLLISIONS, SINGULARITY_TOLERANCE};
use crate::linalg::{determinant, CMat};
use crate::spectral::SyndromeSet;

/// Coefficients `c_0..c_{a-1}` of the monic locator polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCoefficients {
    pub c: Vec<Complex64>,
}

impl PolyCoefficients {
    #[inline]
    pub fn degree(&self) -> usize {
        self.c.len()
    }

    pub fn max_abs(&self) -> f64 {
        self.c.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Solves the Hankel system by Cramer's rule over the first `2a` syndromes.
///
/// Returns [`DecodeError::NearSingular`] when `|det H|` is below
/// `1e-10 · max|m|^a`, i.e. the bin holds fewer than `a` frequencies.
pub fn solve_coefficients(m: &SyndromeSet, a: usize) -> Result<PolyCoefficients, DecodeError> {
    if a == 0 || a > MAX_COLLISIONS {
        return Err(DecodeError::InvalidInput(format!("collision count {a} outside 1..=4")));
    }
    if m.len() < 2 * a {
        return Err(DecodeError::InvalidInput(format!(
            "{} syndromes, need {}",
            m.len(),
            2 * a
        )));
    }
    if m.shifts.iter().take(2 * a).enumerate().any(|(j, &l)| j != l) {
        return Err(DecodeError::InvalidInput("syndromes not at consecutive shifts".into()));
    }
    let vals = &m.values[..2 * a];
    if vals.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(DecodeError::InvalidInput("non-finite syndrome".into()));
    }
    let scale = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let hankel = CMat::hankel(vals, a);
    let cd = determinant(&hankel);
    // Negated so that a NaN determinant also counts as singular.
    if !(cd.norm() > SINGULARITY_TOLERANCE * scale.powi(a as i32)) {
        return Err(DecodeError::NearSingular);
    }
    let rhs: Vec<Complex64> = (0..a).map(|i| -vals[a + i]).collect();
    let c = (0..a).map(|j| determinant(&hankel.with_column(j, &rhs)) / cd).collect();
    Ok(PolyCoefficients { c })
}
