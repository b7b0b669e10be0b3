use std::collections::BTreeSet;

use super::bank::{decode_bins, ViewBank};
use super::{ExactConfig, ExactSolution, IterationTrace, SolverTrace};
use crate::error::Result;
use crate::spectral::{ComplexSignal, SparseSpectrum};

/// Iterative solver. Pass `l` reads shifts `2l` and `2l + 1`, removes every
/// frequency solved so far, and decodes each active bin assuming `l + 1`
/// collisions (falling back to fewer). Bins that fail are deferred; the
/// stride doubles before the next pass, at most up to `N`.
pub fn solve_iterative(x: &ComplexSignal, cfg: &ExactConfig) -> Result<ExactSolution> {
    cfg.check_signal(x.len())?;
    let n = x.len();
    let mut bank = ViewBank::new(x.samples(), cfg.initial_d()?);
    let mut spectrum = SparseSpectrum::new(n);
    let mut deferred: BTreeSet<usize> = BTreeSet::new();
    let mut trace = SolverTrace::default();

    for l in 0..cfg.a_max {
        if l > 0 && bank.d < n {
            bank.double();
            let bins = bank.bins();
            deferred = deferred.into_iter().map(|k| k % bins).collect();
        }
        let samples_before = bank.fft_samples;
        let first_new = bank.views.len();
        bank.add_shift(2 * l)?;
        bank.add_shift(2 * l + 1)?;
        for (s, v) in spectrum.iter() {
            bank.subtract_from(first_new, s, v);
        }

        let threshold = bank.threshold(cfg.zero_threshold);
        let active: Vec<usize> = (0..bank.bins())
            .filter(|&k| deferred.contains(&k) || bank.is_active(k, threshold))
            .collect();
        let orders: Vec<usize> = (1..=l + 1).rev().collect();

        let mut solved = Vec::new();
        for (k, found) in decode_bins(&bank, &active, &orders) {
            let Some(dec) = found else {
                deferred.insert(k);
                continue;
            };
            deferred.remove(&k);
            for (&s, &v) in dec.locations.iter().zip(&dec.values) {
                if spectrum.insert(s, v)?.is_some() {
                    let msg = format!("frequency {s} decoded twice; keeping the later value");
                    log::warn!("{msg}");
                    trace.warnings.push(msg);
                }
                bank.subtract(s, v);
                solved.push(s);
            }
        }
        solved.sort_unstable();
        trace.iterations.push(IterationTrace {
            iteration: l,
            d: bank.d,
            active_bins: active.len(),
            bins_attempted: active.len(),
            bins_solved: active.len() - deferred.len(),
            bins_deferred: deferred.len(),
            syndromes_computed: 2,
            fft_samples: bank.fft_samples - samples_before,
            solved,
        });
    }

    trace.total_fft_samples = bank.fft_samples;
    trace.final_d = bank.d;
    trace.unresolved_bins = deferred.into_iter().collect();
    Ok(ExactSolution { spectrum, trace })
}
