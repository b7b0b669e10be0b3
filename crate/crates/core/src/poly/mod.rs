//! Syndrome decoding of one aliased bin.
//!
//! Given syndromes `m_l = Σ_j p_j z_j^l` for `l = 0..2a-1`:
//!
//! 1. the monic locator `P(z) = z^a + c_{a-1} z^{a-1} + … + c_0` follows from
//!    the Hankel system `Σ_j c_j m_{i+j} = -m_{a+i}` ([`solve_coefficients`]);
//! 2. its roots are found in closed form for `a ≤ 4` ([`roots_closed_form`]);
//! 3. the values come from the Vandermonde system ([`solve_values`]), then
//!    are refit by least squares on the snapped grid roots when that
//!    reproduces the syndromes at least as well ([`refit_values`]).
//!
//! Each root `z = e^{i2πs/N}` maps back to a frequency index `s`
//! ([`root_to_location`]). [`decode_bin`] chains all of this and reports the
//! checks a caller needs to decide whether the decode is trustworthy.

mod coefficients;
mod location;
mod roots;
mod values;

use num_complex::Complex64;
use thiserror::Error;

pub use coefficients::{solve_coefficients, PolyCoefficients};
pub use location::root_to_location;
pub use roots::{evaluate, roots_closed_form};
pub use values::{refit_values, solve_values};

use crate::spectral::{root_power, SyndromeSet};

/// Hankel / Vandermonde determinants below `SINGULARITY_TOLERANCE ·
/// scale^order` are treated as singular.
pub const SINGULARITY_TOLERANCE: f64 = 1e-10;
/// Largest accepted distance from the nearest integer frequency, in bins.
pub const SNAP_TOLERANCE: f64 = 0.25;
/// Largest accepted relative syndrome reproduction error.
pub const CONSISTENCY_TOLERANCE: f64 = 1e-6;
/// Largest accepted `||z| - 1|` for a decoded root.
pub const MODULUS_TOLERANCE: f64 = 1e-6;
/// Most collisions the closed-form root solver handles.
pub const MAX_COLLISIONS: usize = 4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecodeError {
    #[error("Hankel system is near singular; fewer collisions than assumed")]
    NearSingular,
    #[error("Vandermonde system is ill conditioned; roots not distinct")]
    IllConditioned,
    #[error("closed-form root branch degenerated")]
    DegenerateBranch,
    #[error("invalid decode input: {0}")]
    InvalidInput(String),
}

/// Outcome of decoding one bin under an assumed collision count.
#[derive(Debug, Clone, PartialEq)]
pub struct DecodedBin {
    pub roots: Vec<Complex64>,
    pub values: Vec<Complex64>,
    pub locations: Vec<usize>,
    /// Largest distance of `arg(z)·N/2π` from an integer.
    pub snap_error: f64,
    /// Largest `||z| - 1|`.
    pub modulus_error: f64,
    /// Every location satisfies `s ≡ k (mod N/d)`.
    pub membership: bool,
    /// Largest `|m_l - Σ p_j z_j^l|` over all given syndromes, relative to
    /// the largest syndrome magnitude.
    pub consistency_error: f64,
}

impl DecodedBin {
    pub fn locations_distinct(&self) -> bool {
        let mut seen = self.locations.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// All checks pass: membership, on-grid unit-modulus roots, distinct
    /// locations, and reproduction of every syndrome.
    pub fn is_valid(&self) -> bool {
        self.membership
            && self.snap_error < SNAP_TOLERANCE
            && self.modulus_error <= MODULUS_TOLERANCE
            && self.consistency_error <= CONSISTENCY_TOLERANCE
            && self.locations_distinct()
    }
}

/// Decodes bin `k` of a stride-`d` downsampling of a length-`n` signal
/// assuming exactly `a` collisions. The first `2a` syndromes must sit at
/// shifts `0..2a`; any further syndromes only feed the consistency check.
pub fn decode_bin(m: &SyndromeSet, a: usize, n: usize, d: usize, k: usize) -> Result<DecodedBin, DecodeError> {
    if d == 0 || n % d != 0 {
        return Err(DecodeError::InvalidInput(format!("stride {d} does not divide {n}")));
    }
    let coeffs = solve_coefficients(m, a)?;
    let roots = roots_closed_form(&coeffs)?;
    let values = solve_values(m, &roots)?;

    let bins = n / d;
    let mut locations = Vec::with_capacity(a);
    let mut snap_error: f64 = 0.0;
    let mut modulus_error: f64 = 0.0;
    for z in &roots {
        let (s, snap) = root_to_location(*z, n);
        locations.push(s);
        snap_error = snap_error.max(snap);
        modulus_error = modulus_error.max((z.norm() - 1.0).abs());
    }
    let membership = locations.iter().all(|&s| s % bins == k % bins);
    let mut values = values;
    let mut consistency_error = consistency(m, &roots, &values);
    if membership && snap_error < SNAP_TOLERANCE {
        if let Some(refit) = refit_values(m, &locations, n) {
            let grid: Vec<Complex64> = locations.iter().map(|&s| root_power(s, 1, n)).collect();
            let refit_error = consistency(m, &grid, &refit);
            if refit_error <= consistency_error {
                values = refit;
                consistency_error = refit_error;
            }
        }
    }
    Ok(DecodedBin {
        roots,
        values,
        locations,
        snap_error,
        modulus_error,
        membership,
        consistency_error,
    })
}

fn consistency(m: &SyndromeSet, roots: &[Complex64], values: &[Complex64]) -> f64 {
    let scale = m.max_magnitude();
    if scale == 0.0 {
        return 0.0;
    }
    let worst = m
        .values
        .iter()
        .zip(&m.shifts)
        .map(|(&mv, &l)| {
            let fit: Complex64 = roots.iter().zip(values).map(|(z, p)| p * z.powu(l as u32)).sum();
            (mv - fit).norm()
        })
        .fold(0.0, f64::max);
    worst / scale
}
