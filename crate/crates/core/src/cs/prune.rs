use num_complex::Complex64;

use super::SensingMatrix;
use crate::poly::{evaluate, solve_coefficients};
use crate::spectral::{root_power, SyndromeSet};

#[derive(Debug, Clone, PartialEq)]
pub struct PrunedColumns {
    /// Kept column indices of the full matrix, ascending.
    pub columns: Vec<usize>,
    /// The locator solve was singular and columns were chosen by
    /// correlation with `y` instead.
    pub fallback: bool,
}

/// Keeps the `keep·a` candidates where the locator polynomial fitted to the
/// observed syndromes `m_0..m_{2a-1}` is smallest in magnitude.
///
/// `phi` is the full sensing matrix of the bin and `y` its random-shift
/// syndromes, used only by the correlation fallback.
pub fn prune_columns(
    m: &SyndromeSet,
    a: usize,
    phi: &SensingMatrix,
    y: &[Complex64],
    keep: usize,
    n: usize,
) -> PrunedColumns {
    let count = (keep * a).min(phi.cols());
    let coeffs = match solve_coefficients(m, a) {
        Ok(c) => c,
        Err(_) => {
            return PrunedColumns {
                columns: correlation_columns(phi, y, count),
                fallback: true,
            }
        }
    };
    let mut scored: Vec<(f64, usize)> = phi
        .column_locations
        .iter()
        .enumerate()
        .map(|(t, &s)| (evaluate(&coeffs.c, root_power(s, 1, n)).0.norm(), t))
        .collect();
    if count < scored.len() && count > 0 {
        scored.select_nth_unstable_by(count - 1, |a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    }
    let mut columns: Vec<usize> = scored[..count].iter().map(|&(_, t)| t).collect();
    columns.sort_unstable();
    PrunedColumns {
        columns,
        fallback: false,
    }
}

/// The `count` columns with the largest `|⟨Φ_t, y⟩|`, ascending.
pub fn correlation_columns(phi: &SensingMatrix, y: &[Complex64], count: usize) -> Vec<usize> {
    let corr = phi.matrix.adjoint_mul_vec(y);
    let mut columns = super::sp::top_indices(&corr, count);
    columns.sort_unstable();
    columns
}
