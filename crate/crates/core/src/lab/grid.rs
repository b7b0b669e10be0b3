use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::generate::{calibrate_sigma_off, gen_exact, gen_mixture, ExactSparseSpec, MixtureSpec, ValueDistribution};
use super::stats::{error_ratio, recovery_counts};
use super::trial_seed;
use crate::cs::{solve_general, GeneralConfig};
use crate::error::{Error, Result};
use crate::exact::{estimate_sparsity_and_solve, solve_iterative, solve_noniterative, ExactConfig};
use crate::spectral::snr_sparse;

/// Relative per-entry tolerance for counting a frequency as recovered.
const EXACT_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExactMethod {
    Iterative,
    NonIterative,
    Estimate,
}

impl ExactMethod {
    pub fn name(self) -> &'static str {
        match self {
            Self::Iterative => "iterative",
            Self::NonIterative => "non-iterative",
            Self::Estimate => "estimate",
        }
    }
}

/// One trial of one grid cell; the CSV row shape.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRow {
    pub cell: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub method: String,
    pub prune: Option<bool>,
    pub target_snr_db: Option<f64>,
    pub trial: usize,
    pub seed: u64,
    pub perfect: Option<bool>,
    pub recovered_fraction: Option<f64>,
    pub wrong_frequencies: Option<usize>,
    pub k_hat: Option<usize>,
    pub snr_s_db: Option<f64>,
    pub snr_out_db: Option<f64>,
    pub error_ratio: Option<f64>,
    pub fft_samples: usize,
    pub micros: f64,
}

/// Aggregates over the trials of one cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellSummary {
    pub cell: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub method: String,
    pub prune: Option<bool>,
    pub target_snr_db: Option<f64>,
    pub trials: usize,
    pub seeds: Vec<u64>,
    pub perfect_rate: Option<f64>,
    pub mean_recovered_fraction: Option<f64>,
    pub mean_snr_s_db: Option<f64>,
    pub mean_snr_out_db: Option<f64>,
    pub max_error_ratio: Option<f64>,
    pub mean_fft_samples: f64,
    pub median_micros: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub seed: u64,
    pub cells: Vec<CellSummary>,
    #[serde(skip)]
    pub rows: Vec<TrialRow>,
}

fn mean(values: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, count) = values.fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    (count > 0).then(|| sum / count as f64)
}

fn median(mut values: Vec<f64>) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    }
}

impl ExperimentReport {
    fn from_rows(experiment: &str, seed: u64, mut rows: Vec<TrialRow>) -> Self {
        rows.sort_by_key(|r| (r.cell, r.trial));
        let mut cells = Vec::new();
        for group in rows.chunk_by(|a, b| a.cell == b.cell) {
            let first = &group[0];
            cells.push(CellSummary {
                cell: first.cell,
                n: first.n,
                k: first.k,
                d: first.d,
                method: first.method.clone(),
                prune: first.prune,
                target_snr_db: first.target_snr_db,
                trials: group.len(),
                seeds: group.iter().map(|r| r.seed).collect(),
                perfect_rate: mean(group.iter().filter_map(|r| r.perfect.map(|p| p as u8 as f64))),
                mean_recovered_fraction: mean(group.iter().filter_map(|r| r.recovered_fraction)),
                mean_snr_s_db: mean(group.iter().filter_map(|r| r.snr_s_db)),
                mean_snr_out_db: mean(group.iter().filter_map(|r| r.snr_out_db)),
                max_error_ratio: group.iter().filter_map(|r| r.error_ratio).reduce(f64::max),
                mean_fft_samples: mean(group.iter().map(|r| r.fft_samples as f64)).unwrap_or(0.0),
                median_micros: median(group.iter().map(|r| r.micros).collect()),
            });
        }
        Self {
            experiment: experiment.to_string(),
            seed,
            cells,
            rows,
        }
    }

    /// One CSV row per cell and trial, with a header.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        for row in &self.rows {
            out.serialize(row).map_err(|e| Error::Format(e.to_string()))?;
        }
        out.flush().map_err(|e| Error::Format(e.to_string()))
    }

    /// Per-cell summary as JSON.
    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactGridSpec {
    pub n_values: Vec<usize>,
    pub k_values: Vec<usize>,
    pub trials: usize,
    pub mu: usize,
    pub a_max: usize,
    pub method: ExactMethod,
    pub values: ValueDistribution,
    pub seed: u64,
}

/// Runs the exact-sparse solver over an `N × K` grid (cells with `K > N`
/// are skipped).
pub fn run_exact_grid(spec: &ExactGridSpec) -> Result<ExperimentReport> {
    let cells: Vec<(usize, usize)> = spec
        .n_values
        .iter()
        .flat_map(|&n| spec.k_values.iter().filter(move |&&k| k <= n).map(move |&k| (n, k)))
        .collect();
    let jobs: Vec<(usize, usize)> = (0..cells.len())
        .flat_map(|c| (0..spec.trials).map(move |t| (c, t)))
        .collect();
    let rows = jobs
        .par_iter()
        .map(|&(c, t)| {
            let (n, k) = cells[c];
            let seed = trial_seed(spec.seed, (c * spec.trials + t) as u64);
            exact_trial(spec, c, n, k, t, seed)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport::from_rows("exact", spec.seed, rows))
}

fn exact_trial(spec: &ExactGridSpec, cell: usize, n: usize, k: usize, trial: usize, seed: u64) -> Result<TrialRow> {
    let (x, truth) = gen_exact(&ExactSparseSpec {
        n,
        k,
        values: spec.values,
        seed,
    })?;
    let cfg = ExactConfig::new(n, Some(k)).with_mu(spec.mu).with_a_max(spec.a_max);
    let start = Instant::now();
    let (spectrum, d, fft_samples, k_hat) = match spec.method {
        ExactMethod::Iterative => {
            let sol = solve_iterative(&x, &cfg)?;
            (sol.spectrum, cfg.initial_d()?, sol.trace.total_fft_samples, None)
        }
        ExactMethod::NonIterative => {
            let sol = solve_noniterative(&x, &cfg)?;
            (sol.spectrum, sol.trace.final_d, sol.trace.total_fft_samples, None)
        }
        ExactMethod::Estimate => {
            let est = estimate_sparsity_and_solve(&x, &cfg)?;
            (est.spectrum, est.d, est.fft_samples, Some(est.k_hat))
        }
    };
    let micros = start.elapsed().as_secs_f64() * 1e6;
    let counts = recovery_counts(&truth, &spectrum, EXACT_TOLERANCE);
    Ok(TrialRow {
        cell,
        n,
        k,
        d,
        method: spec.method.name().to_string(),
        prune: None,
        target_snr_db: None,
        trial,
        seed,
        perfect: Some(counts.wrong == 0),
        recovered_fraction: Some(if k == 0 { 1.0 } else { counts.correct as f64 / k as f64 }),
        wrong_frequencies: Some(counts.wrong),
        k_hat,
        snr_s_db: None,
        snr_out_db: None,
        error_ratio: None,
        fft_samples,
        micros,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralGridSpec {
    pub n: usize,
    pub k_values: Vec<usize>,
    pub snr_db: Vec<f64>,
    /// Pruning settings to compare on identical signals.
    pub prune_modes: Vec<bool>,
    pub trials: usize,
    pub a_max: usize,
    /// Stride is `N / (d_divisor · K)`.
    pub d_divisor: usize,
    pub sigma_on: f64,
    /// Draws used to calibrate `σ_off` per cell.
    pub calibration_trials: usize,
    pub seed: u64,
}

/// Runs the general-sparse solver over `K × SNR × pruning`; every pruning
/// mode sees the same signals.
pub fn run_general_grid(spec: &GeneralGridSpec) -> Result<ExperimentReport> {
    let n = spec.n;
    let settings: Vec<(usize, f64)> = spec
        .k_values
        .iter()
        .flat_map(|&k| spec.snr_db.iter().map(move |&s| (k, s)))
        .collect();
    let sigma_off: Vec<f64> = settings
        .par_iter()
        .map(|&(k, snr)| calibrate_sigma_off(n, k, spec.sigma_on, snr, spec.calibration_trials, spec.seed))
        .collect();
    let modes = spec.prune_modes.len();
    let jobs: Vec<(usize, usize)> = (0..settings.len())
        .flat_map(|c| (0..spec.trials).map(move |t| (c, t)))
        .collect();
    let rows: Vec<Vec<TrialRow>> = jobs
        .par_iter()
        .map(|&(c, t)| {
            let (k, snr) = settings[c];
            let seed = trial_seed(spec.seed, (c * spec.trials + t) as u64);
            let mix = gen_mixture(&MixtureSpec {
                n,
                k,
                sigma_on: spec.sigma_on,
                sigma_off: sigma_off[c],
                seed,
            })?;
            let snr_s = snr_sparse(&mix.full, &mix.significant)?;
            spec.prune_modes
                .iter()
                .enumerate()
                .map(|(m, &prune)| {
                    let d = n / (spec.d_divisor * k).min(n);
                    let cfg = GeneralConfig::new(n, k)
                        .with_a_max(spec.a_max)
                        .with_d(d.max(1))
                        .with_seed(seed)
                        .with_prune(prune);
                    let start = Instant::now();
                    let sol = solve_general(&mix.signal, &cfg)?;
                    let micros = start.elapsed().as_secs_f64() * 1e6;
                    Ok(TrialRow {
                        cell: c * modes + m,
                        n,
                        k,
                        d: sol.d,
                        method: "general".to_string(),
                        prune: Some(prune),
                        target_snr_db: Some(snr),
                        trial: t,
                        seed,
                        perfect: None,
                        recovered_fraction: None,
                        wrong_frequencies: None,
                        k_hat: None,
                        snr_s_db: Some(snr_s),
                        snr_out_db: Some(snr_sparse(&mix.full, &sol.spectrum)?),
                        error_ratio: Some(error_ratio(&mix.full, &mix.significant, &sol.spectrum)),
                        fft_samples: sol.fft_samples,
                        micros,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport::from_rows(
        "general",
        spec.seed,
        rows.into_iter().flatten().collect(),
    ))
}
