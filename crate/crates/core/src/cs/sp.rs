use num_complex::Complex64;

use crate::linalg::{least_squares, norm, CMat};

pub const SP_MAX_ITERATIONS: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct SpResult {
    /// One coefficient per column of `Φ`, at most `a` nonzero.
    pub coeffs: Vec<Complex64>,
    /// Chosen columns, ascending.
    pub support: Vec<usize>,
    pub residual_norm: f64,
    pub iterations: usize,
    /// Columns dropped as linearly dependent in any least-squares step.
    pub dropped_columns: usize,
}

/// Indices of the `count` largest-magnitude entries, ties to the lower
/// index, in descending magnitude order.
pub(crate) fn top_indices(v: &[Complex64], count: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&a, &b| v[b].norm_sqr().total_cmp(&v[a].norm_sqr()).then(a.cmp(&b)));
    idx.truncate(count);
    idx
}

struct Fit {
    support: Vec<usize>,
    coeffs: Vec<Complex64>,
    residual: Vec<Complex64>,
    dropped: usize,
}

fn fit(phi: &CMat, y: &[Complex64], support: Vec<usize>) -> Fit {
    let sub = phi.select_columns(&support);
    let ls = least_squares(&sub, y);
    if !ls.dropped.is_empty() {
        log::warn!("subspace pursuit: {} dependent columns dropped", ls.dropped.len());
    }
    let approx = sub.mul_vec(&ls.coeffs);
    let residual = y.iter().zip(&approx).map(|(a, b)| a - b).collect();
    Fit {
        support,
        coeffs: ls.coeffs,
        residual,
        dropped: ls.dropped.len(),
    }
}

/// Subspace pursuit for an `a`-sparse `s` with `y ≈ Φ s`.
///
/// Starts from the `a` columns most correlated with `y`; each round merges
/// the `a` columns most correlated with the residual, solves least squares
/// on the union, keeps the `a` largest coefficients and refits. Stops when
/// the residual no longer shrinks or after [`SP_MAX_ITERATIONS`] rounds.
pub fn subspace_pursuit(y: &[Complex64], phi: &CMat, a: usize) -> SpResult {
    let a = a.min(phi.cols()).min(phi.rows());
    let zero = Complex64::new(0.0, 0.0);
    if a == 0 {
        return SpResult {
            coeffs: vec![zero; phi.cols()],
            support: Vec::new(),
            residual_norm: norm(y),
            iterations: 0,
            dropped_columns: 0,
        };
    }
    let mut best = fit(phi, y, top_indices(&phi.adjoint_mul_vec(y), a));
    let mut best_norm = norm(&best.residual);
    let mut dropped = best.dropped;
    let mut iterations = 0;
    while iterations < SP_MAX_ITERATIONS && best_norm > 0.0 {
        iterations += 1;
        let mut merged = best.support.clone();
        for t in top_indices(&phi.adjoint_mul_vec(&best.residual), a) {
            if !merged.contains(&t) {
                merged.push(t);
            }
        }
        let wide = fit(phi, y, merged);
        dropped += wide.dropped;
        let keep: Vec<usize> = top_indices(&wide.coeffs, a)
            .into_iter()
            .map(|j| wide.support[j])
            .collect();
        let next = fit(phi, y, keep);
        dropped += next.dropped;
        let next_norm = norm(&next.residual);
        if next_norm >= best_norm {
            break;
        }
        best = next;
        best_norm = next_norm;
    }

    let mut coeffs = vec![zero; phi.cols()];
    for (&t, &c) in best.support.iter().zip(&best.coeffs) {
        coeffs[t] = c;
    }
    let mut support = best.support;
    support.sort_unstable();
    SpResult {
        coeffs,
        support,
        residual_norm: best_norm,
        iterations,
        dropped_columns: dropped,
    }
}
