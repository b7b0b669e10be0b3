use std::error::Error;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use sfft_dt::cs::{solve_general, GeneralConfig};
use sfft_dt::exact::{estimate_sparsity_and_solve, solve_iterative, solve_noniterative, ExactConfig};
use sfft_dt::format::{read_signal, spectrum_to_json, write_signal};
use sfft_dt::lab::{
    calibrate_sigma_off, gen_exact, gen_mixture, run_collision_census, run_exact_grid, run_general_grid,
    write_census_csv, ExactGridSpec, ExactMethod, ExactSparseSpec, ExperimentReport, GeneralGridSpec, MixtureSpec,
    ValueDistribution,
};
use sfft_dt::spectral::{fft, snr_sparse, Normalization};
use sfft_dt::{ComplexSignal, SparseSpectrum};

use crate::args::{
    Bench, Census, EstimateK, Format, Generate, Grid, Method, SignalKind, TransformExact, TransformGeneral,
};
use crate::Outcome;

type CmdResult = Result<Outcome, Box<dyn Error>>;

/// Draws used to calibrate the mixture noise level for `generate`.
const CALIBRATION_DRAWS: usize = 32;

fn sink(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_text(out: Option<&Path>, text: &str) -> io::Result<()> {
    let mut w = sink(out)?;
    w.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        w.write_all(b"\n")?;
    }
    w.flush()
}

/// Writes a side report to `path`, or to stderr.
fn write_report(path: Option<&Path>, text: &str) -> io::Result<()> {
    match path {
        Some(_) => write_text(path, text),
        None => {
            eprintln!("{text}");
            Ok(())
        }
    }
}

fn read_input(path: &Path, n: Option<usize>) -> Result<ComplexSignal, Box<dyn Error>> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let x = read_signal(io::BufReader::new(file)).map_err(|e| format!("{}: {e}", path.display()))?;
    if let Some(n) = n {
        if n != x.len() {
            return Err(format!("--n {n} does not match the file length {}", x.len()).into());
        }
    }
    Ok(x)
}

fn write_spectrum(out: Option<&Path>, format: Format, spectrum: &SparseSpectrum) -> Result<(), Box<dyn Error>> {
    match format {
        Format::Json => write_text(out, &spectrum_to_json(spectrum))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink(out)?);
            for entry in spectrum.to_entries() {
                w.serialize(entry)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

pub fn transform_exact(args: &TransformExact) -> CmdResult {
    let x = read_input(&args.input, args.n)?;
    let mut cfg = ExactConfig::new(x.len(), args.k)
        .with_mu(args.mu)
        .with_a_max(args.a_max);
    if let Some(d) = args.d {
        cfg = cfg.with_d(d);
    }
    if args.k.is_none() && args.d.is_none() {
        return Err("transform-exact needs --k or --d; use estimate-k when K is unknown".into());
    }
    cfg.validate()?;
    let sol = if args.non_iterative {
        solve_noniterative(&x, &cfg)?
    } else {
        solve_iterative(&x, &cfg)?
    };
    write_spectrum(args.output.out.as_deref(), args.output.format, &sol.spectrum)?;
    write_report(args.trace.as_deref(), &to_json(&sol.trace))?;
    if sol.fully_solved() {
        Ok(Outcome::Complete)
    } else {
        eprintln!(
            "partial recovery: {} unresolved bins at d = {}",
            sol.trace.unresolved_bins.len(),
            sol.trace.final_d
        );
        Ok(Outcome::Partial)
    }
}

#[derive(Serialize)]
struct GeneralSummary {
    n: usize,
    k: usize,
    d: usize,
    prune: bool,
    shifts: Vec<usize>,
    estimated_collisions: usize,
    recovered: usize,
    fallback_bins: usize,
    dropped_columns: usize,
    fft_samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    snr_db: Option<f64>,
}

pub fn transform_general(args: &TransformGeneral) -> CmdResult {
    let x = read_input(&args.input, args.n)?;
    let mut cfg = GeneralConfig::new(x.len(), args.k)
        .with_a_max(args.a_max)
        .with_seed(args.seed)
        .with_prune(!args.no_prune);
    if let Some(d) = args.d {
        cfg = cfg.with_d(d);
    }
    cfg.validate()?;
    let sol = solve_general(&x, &cfg)?;
    let snr_db = if args.snr {
        let dense = fft(x.samples(), Normalization::OneOverN)?;
        Some(snr_sparse(&dense, &sol.spectrum)?)
    } else {
        None
    };
    write_spectrum(args.output.out.as_deref(), args.output.format, &sol.spectrum)?;
    let summary = GeneralSummary {
        n: x.len(),
        k: args.k,
        d: sol.d,
        prune: cfg.prune,
        estimated_collisions: if cfg.prune { sol.collisions.total() } else { 0 },
        recovered: sol.spectrum.nnz(),
        fallback_bins: sol.fallback_bins,
        dropped_columns: sol.dropped_columns,
        fft_samples: sol.fft_samples,
        shifts: sol.shifts,
        snr_db,
    };
    write_report(args.trace.as_deref(), &to_json(&summary))?;
    Ok(Outcome::Complete)
}

#[derive(Serialize)]
struct EstimateSummary {
    n: usize,
    k_hat: usize,
    d: usize,
    dense_fallback: bool,
    fft_samples: usize,
}

pub fn estimate_k(args: &EstimateK) -> CmdResult {
    let x = read_input(&args.input, args.n)?;
    let cfg = ExactConfig::new(x.len(), None).with_a_max(args.a_max);
    let est = estimate_sparsity_and_solve(&x, &cfg)?;
    let summary = EstimateSummary {
        n: x.len(),
        k_hat: est.k_hat,
        d: est.d,
        dense_fallback: est.dense_fallback,
        fft_samples: est.fft_samples,
    };
    let out = args.output.out.as_deref();
    match args.output.format {
        Format::Json => write_text(out, &to_json(&summary))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink(out)?);
            w.serialize(&summary)?;
            w.flush()?;
        }
    }
    if let Some(path) = &args.spectrum {
        write_text(Some(path), &spectrum_to_json(&est.spectrum))?;
    }
    Ok(Outcome::Complete)
}

fn exact_grid(args: &Bench, n_values: Vec<usize>, k_values: Vec<usize>, trials: usize) -> ExactGridSpec {
    ExactGridSpec {
        n_values,
        k_values,
        trials: args.trials.unwrap_or(trials),
        mu: args.mu,
        a_max: args.a_max.unwrap_or(4),
        method: match args.method {
            Method::Iterative => ExactMethod::Iterative,
            Method::NonIterative => ExactMethod::NonIterative,
            Method::Estimate => ExactMethod::Estimate,
        },
        values: ValueDistribution::UnitPhase,
        seed: args.seed,
    }
}

fn general_grid(args: &Bench, n: usize, k_values: Vec<usize>, trials: usize) -> GeneralGridSpec {
    let prune_modes = if args.prune_only {
        vec![true]
    } else if args.no_prune {
        vec![false]
    } else {
        vec![true, false]
    };
    GeneralGridSpec {
        n,
        k_values,
        snr_db: vec![10.0, 20.0, 30.0],
        prune_modes,
        trials: args.trials.unwrap_or(trials),
        a_max: args.a_max.unwrap_or(3),
        d_divisor: 32,
        sigma_on: 1.0,
        calibration_trials: 64,
        seed: args.seed,
    }
}

pub fn bench(args: &Bench) -> CmdResult {
    let report: ExperimentReport = match args.grid {
        Grid::ExactSmall => run_exact_grid(&exact_grid(args, vec![1 << 10, 1 << 12], vec![4, 16, 64], 20))?,
        Grid::ExactCurve => {
            let ks = (4..=12).map(|e| 1usize << e).collect();
            run_exact_grid(&exact_grid(args, vec![1 << 16], ks, 100))?
        }
        Grid::GeneralSmall => run_general_grid(&general_grid(args, 1 << 12, vec![16, 64], 10))?,
        Grid::GeneralTables => {
            let n = 1usize << 16;
            let ks = [6, 8, 10, 12, 14].iter().map(|&e| n >> e).collect();
            run_general_grid(&general_grid(args, n, ks, 50))?
        }
    };
    let out = args.out.as_deref();
    match args.format {
        Format::Csv => report.write_csv(sink(out)?)?,
        Format::Json => write_text(out, &report.summary_json())?,
    }
    Ok(Outcome::Complete)
}

pub fn census(args: &Census) -> CmdResult {
    let mut all = Vec::with_capacity(args.mu.len());
    for &mu in &args.mu {
        let per_bin = mu.checked_mul(args.k).filter(|&m| m > 0 && args.n % m == 0);
        let Some(d) = per_bin.map(|m| args.n / m) else {
            return Err(format!("μK = {mu}·{} does not divide N = {}", args.k, args.n).into());
        };
        all.push(run_collision_census(args.n, args.k, d, args.trials, args.seed)?);
    }
    let out = args.out.as_deref();
    match args.format {
        Format::Csv => write_census_csv(&all, sink(out)?)?,
        Format::Json => write_text(out, &to_json(&all))?,
    }
    Ok(Outcome::Complete)
}

pub fn generate(args: &Generate) -> CmdResult {
    let (signal, truth) = match args.kind {
        SignalKind::Exact => gen_exact(&ExactSparseSpec {
            n: args.n,
            k: args.k,
            values: ValueDistribution::UnitPhase,
            seed: args.seed,
        })?,
        SignalKind::Mixture => {
            let sigma_off = calibrate_sigma_off(args.n, args.k, 1.0, args.snr_db, CALIBRATION_DRAWS, args.seed);
            let mix = gen_mixture(&MixtureSpec {
                n: args.n,
                k: args.k,
                sigma_on: 1.0,
                sigma_off,
                seed: args.seed,
            })?;
            (mix.signal, mix.significant)
        }
    };
    let file = File::create(&args.out).map_err(|e| format!("{}: {e}", args.out.display()))?;
    let mut w = BufWriter::new(file);
    write_signal(&mut w, &signal)?;
    w.flush()?;
    if let Some(path) = &args.truth {
        write_text(Some(path), &spectrum_to_json(&truth))?;
    }
    Ok(Outcome::Complete)
}
