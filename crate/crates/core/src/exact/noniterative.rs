use super::bank::{decode_bins, ViewBank};
use super::{ExactConfig, ExactSolution, IterationTrace, SolverTrace};
use crate::error::Result;
use crate::spectral::{ComplexSignal, SparseSpectrum};

/// Fixed-stride solver: `2·a_max` consecutive shifts, every active bin
/// decoded with `a = 1, 2, …` until one passes.
pub fn solve_noniterative(x: &ComplexSignal, cfg: &ExactConfig) -> Result<ExactSolution> {
    cfg.check_signal(x.len())?;
    let d = cfg.initial_d()?;
    solve_at(x, cfg, d)
}

pub(crate) fn solve_at(x: &ComplexSignal, cfg: &ExactConfig, d: usize) -> Result<ExactSolution> {
    let mut bank = ViewBank::new(x.samples(), d);
    for shift in 0..2 * cfg.a_max {
        bank.add_shift(shift)?;
    }
    let threshold = bank.threshold(cfg.zero_threshold);
    let active: Vec<usize> = (0..bank.bins()).filter(|&k| bank.is_active(k, threshold)).collect();
    let orders: Vec<usize> = (1..=cfg.a_max).collect();

    let mut spectrum = SparseSpectrum::new(x.len());
    let mut unresolved = Vec::new();
    let mut solved = Vec::new();
    for (k, found) in decode_bins(&bank, &active, &orders) {
        match found {
            Some(dec) => {
                for (&s, &v) in dec.locations.iter().zip(&dec.values) {
                    spectrum.insert(s, v)?;
                    solved.push(s);
                }
            }
            None => unresolved.push(k),
        }
    }
    solved.sort_unstable();
    let pass = IterationTrace {
        iteration: 0,
        d,
        active_bins: active.len(),
        bins_attempted: active.len(),
        bins_solved: active.len() - unresolved.len(),
        bins_deferred: unresolved.len(),
        syndromes_computed: bank.views.len(),
        fft_samples: bank.fft_samples,
        solved,
    };
    let trace = SolverTrace {
        iterations: vec![pass],
        total_fft_samples: bank.fft_samples,
        final_d: d,
        unresolved_bins: unresolved,
        warnings: Vec::new(),
    };
    Ok(ExactSolution { spectrum, trace })
}
