use num_complex::Complex64;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::CMat;
use crate::spectral::root_power;

/// `r` distinct shifts drawn uniformly from `0..d`, reproducible from `seed`.
pub fn draw_shifts(d: usize, r: usize, seed: u64) -> Result<Vec<usize>> {
    if r > d {
        return Err(Error::Config(format!("cannot draw {r} distinct shifts below {d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample(&mut rng, d, r).into_vec())
}

/// Sensing matrix of one bin: `Φ[j][t] = e^{i2π s_t n_j / N}` for shift
/// `n_j` and candidate frequency `s_t = k + t·N/d`.
#[derive(Debug, Clone, PartialEq)]
pub struct SensingMatrix {
    pub shifts: Vec<usize>,
    /// Frequency index represented by each column.
    pub column_locations: Vec<usize>,
    pub matrix: CMat,
}

impl SensingMatrix {
    /// Full matrix over all `d` candidates of bin `k`.
    pub fn for_bin(n: usize, d: usize, k: usize, shifts: &[usize]) -> Self {
        let bins = n / d;
        let locs: Vec<usize> = (0..d).map(|t| k + t * bins).collect();
        Self::for_locations(n, shifts, locs)
    }

    pub fn for_locations(n: usize, shifts: &[usize], column_locations: Vec<usize>) -> Self {
        let matrix = CMat::from_fn(shifts.len(), column_locations.len(), |j, t| {
            root_power(column_locations[t], shifts[j], n)
        });
        Self {
            shifts: shifts.to_vec(),
            column_locations,
            matrix,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// Keeps the given columns, in order.
    pub fn select(&self, columns: &[usize]) -> Self {
        Self {
            shifts: self.shifts.clone(),
            column_locations: columns.iter().map(|&t| self.column_locations[t]).collect(),
            matrix: self.matrix.select_columns(columns),
        }
    }
}

/// `max_{i≠j} |⟨Φ_i, Φ_j⟩| / r`.
pub fn mutual_coherence(phi: &CMat) -> f64 {
    let cols: Vec<Vec<Complex64>> = (0..phi.cols()).map(|j| phi.column(j)).collect();
    let mut worst: f64 = 0.0;
    for i in 0..cols.len() {
        for j in i + 1..cols.len() {
            let ip: Complex64 = cols[i].iter().zip(&cols[j]).map(|(a, b)| a.conj() * b).sum();
            worst = worst.max(ip.norm());
        }
    }
    worst / phi.rows() as f64
}
