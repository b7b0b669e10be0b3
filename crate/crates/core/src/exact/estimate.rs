use super::noniterative::solve_at;
use super::{ExactConfig, SolverTrace};
use crate::error::Result;
use crate::spectral::{fft, rms, ComplexSignal, Normalization, SparseSpectrum};

#[derive(Debug, Clone, PartialEq)]
pub struct SparsityEstimate {
    pub spectrum: SparseSpectrum,
    /// Number of recovered frequencies.
    pub k_hat: usize,
    /// Stride at which every bin decoded.
    pub d: usize,
    /// No stride down to `d = 1` decoded fully; the spectrum comes from a
    /// plain FFT instead.
    pub dense_fallback: bool,
    /// FFT samples summed over every stride tried.
    pub fft_samples: usize,
    /// Trace of the final attempt.
    pub trace: SolverTrace,
}

/// Solves without knowing `K`: runs the fixed-stride solver at
/// `d = N, N/2, …` and stops at the first stride where every active bin
/// decodes. `cfg.k` and `cfg.d` are ignored.
pub fn estimate_sparsity_and_solve(x: &ComplexSignal, cfg: &ExactConfig) -> Result<SparsityEstimate> {
    let cfg = ExactConfig { d: None, ..cfg.clone() };
    cfg.validate()?;
    cfg.check_signal(x.len())?;
    let n = x.len();
    let mut fft_samples = 0;
    let mut d = n;
    loop {
        let sol = solve_at(x, &cfg, d)?;
        fft_samples += sol.trace.total_fft_samples;
        if sol.fully_solved() {
            return Ok(SparsityEstimate {
                k_hat: sol.spectrum.nnz(),
                spectrum: sol.spectrum,
                d,
                dense_fallback: false,
                fft_samples,
                trace: sol.trace,
            });
        }
        if d == 1 {
            log::warn!("no stride decoded every bin; using a full FFT");
            let dense = fft(x.samples(), Normalization::OneOverN)?;
            let spectrum = SparseSpectrum::support_of_dense(&dense, cfg.zero_threshold * rms(x.samples()));
            return Ok(SparsityEstimate {
                k_hat: spectrum.nnz(),
                spectrum,
                d: 1,
                dense_fallback: true,
                fft_samples: fft_samples + n,
                trace: sol.trace,
            });
        }
        d /= 2;
    }
}
