use num_complex::Complex64;

use super::{DecodeError, SINGULARITY_TOLERANCE};
use crate::linalg::{determinant, least_squares, CMat};
use crate::spectral::{root_power, SyndromeSet};

/// Solves `Σ_j p_j z_j^l = m_l` for `l = 0..a-1` by Cramer's rule. The last
/// value is taken from `Σ_j p_j = m_0` instead of its own determinant.
pub fn solve_values(m: &SyndromeSet, roots: &[Complex64]) -> Result<Vec<Complex64>, DecodeError> {
    let a = roots.len();
    if a == 0 {
        return Ok(Vec::new());
    }
    if m.len() < a || m.shifts.iter().take(a).enumerate().any(|(j, &l)| j != l) {
        return Err(DecodeError::InvalidInput("values need syndromes at shifts 0..a".into()));
    }
    let rhs = &m.values[..a];
    let vander = CMat::from_fn(a, a, |i, j| roots[j].powu(i as u32));
    let scale = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let pd = determinant(&vander);
    // Negated so that a NaN determinant also counts as singular.
    if !(pd.norm() > SINGULARITY_TOLERANCE * scale.powi(a as i32)) {
        return Err(DecodeError::IllConditioned);
    }
    let mut p: Vec<Complex64> = (0..a - 1)
        .map(|j| determinant(&vander.with_column(j, rhs)) / pd)
        .collect();
    let rest: Complex64 = p.iter().sum();
    p.push(rhs[0] - rest);
    Ok(p)
}

/// Refits values with the roots pinned to the exact grid points of
/// `locations`, by least squares over every syndrome. Close roots make the
/// square solve lose digits; the snapped roots carry none of that error.
pub fn refit_values(m: &SyndromeSet, locations: &[usize], n: usize) -> Option<Vec<Complex64>> {
    if locations.is_empty() || m.len() < locations.len() {
        return None;
    }
    let vander = CMat::from_fn(m.len(), locations.len(), |i, j| {
        root_power(locations[j], m.shifts[i], n)
    });
    let ls = least_squares(&vander, &m.values);
    ls.dropped.is_empty().then_some(ls.coeffs)
}
