//! Signal and spectrum data model, DFT conventions and the downsampling
//! machinery shared by both solvers.
//!
//! Conventions: `x̂[k] = (1/N) Σ_n x[n] e^{-i2πkn/N}` and
//! `x[n] = Σ_k x̂[k] e^{+i2πkn/N}`. A downsampled view `x[dk + l]` of length
//! `L = N/d` is transformed with `1/L` normalization, which makes each of its
//! bins the plain sum of the aliased frequencies (see [`downsample`]).

mod downsample;
mod fft;
mod metrics;
mod oracle;
mod signal;

pub use downsample::{downsample, syndromes_for_bin, transform_view, DownsampleView, SyndromeSet, ViewSpectrum};
pub use fft::{fft, fft_in_place, synthesize_dense, Normalization};
pub use metrics::{rms, snr, snr_sparse, SNR_PERFECT};
pub use oracle::{forward_dft_oracle, synthesis_oracle};
pub use signal::{is_power_of_two, ComplexSignal, SparseSpectrum, SpectrumEntry};

/// Unit-circle root `e^{i2π s l / N}` for frequency `s` and shift `l`.
#[inline]
pub fn root_power(s: usize, l: usize, n: usize) -> num_complex::Complex64 {
    // (s·l) mod N keeps the angle argument small and exact.
    let e = ((s as u128 * l as u128) % n as u128) as f64;
    num_complex::Complex64::cis(2.0 * std::f64::consts::PI * e / n as f64)
}
