use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sfft-dt", version, about = "Sparse FFT by downsampling in time")]
pub struct Cli {
    /// Worker threads; defaults to every available core.
    #[arg(long, global = true, env = "SFFT_DT_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recover an exactly K-sparse spectrum by syndrome decoding.
    TransformExact(TransformExact),
    /// Recover the K largest frequencies of a generally sparse spectrum.
    TransformGeneral(TransformGeneral),
    /// Recover an exactly sparse spectrum without knowing K.
    EstimateK(EstimateK),
    /// Run a Monte Carlo recovery grid.
    Bench(Bench),
    /// Count per-bin collisions of uniformly placed frequencies.
    Census(Census),
    /// Write a test signal in the binary signal format.
    Generate(Generate),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TransformExact {
    /// Signal file in the binary signal format.
    pub input: PathBuf,
    /// Expected signal length; checked against the file header.
    #[arg(long)]
    pub n: Option<usize>,
    /// Sparsity, used to pick the initial stride N/(μK).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub mu: usize,
    #[arg(long, default_value_t = 4)]
    pub a_max: usize,
    /// Initial stride, overriding N/(μK).
    #[arg(long)]
    pub d: Option<usize>,
    /// Decode once at the initial stride instead of doubling it per pass.
    #[arg(long)]
    pub non_iterative: bool,
    /// Write the solver trace as JSON here; stderr when absent.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct TransformGeneral {
    pub input: PathBuf,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 3)]
    pub a_max: usize,
    /// Stride; defaults to N/(32K).
    #[arg(long)]
    pub d: Option<usize>,
    /// Seed for the random sensing shifts.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip the collision vote and column pruning.
    #[arg(long)]
    pub no_prune: bool,
    /// Report SNR of the output against a full FFT of the input.
    #[arg(long)]
    pub snr: bool,
    /// Write the run summary as JSON here; stderr when absent.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct EstimateK {
    pub input: PathBuf,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub a_max: usize,
    /// Also write the recovered spectrum as JSON here.
    #[arg(long)]
    pub spectrum: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Grid {
    /// A few small exact cells, seconds to run.
    ExactSmall,
    /// N = 2^16, K = 2^4..2^12: the recovery-rate curve.
    ExactCurve,
    /// A few small general cells with and without pruning.
    GeneralSmall,
    /// N = 2^16, N/K = 2^6..2^14, SNR 10/20/30 dB, pruning on and off.
    GeneralTables,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Iterative,
    NonIterative,
    Estimate,
}

#[derive(Debug, Args)]
pub struct Bench {
    #[arg(long, value_enum)]
    pub grid: Grid,
    /// Trials per cell, overriding the grid default.
    #[arg(long)]
    pub trials: Option<usize>,
    /// Solver for exact grids.
    #[arg(long, value_enum, default_value_t = Method::Iterative)]
    pub method: Method,
    #[arg(long, default_value_t = 4)]
    pub mu: usize,
    /// Most collisions per bin; defaults to 4 for exact grids, 3 for general.
    #[arg(long)]
    pub a_max: Option<usize>,
    /// Run general grids with pruning only, not both modes.
    #[arg(long, conflicts_with = "no_prune")]
    pub prune_only: bool,
    /// Run general grids without pruning only.
    #[arg(long)]
    pub no_prune: bool,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Census {
    #[arg(long, default_value_t = 1 << 14)]
    pub n: usize,
    #[arg(long, default_value_t = 1 << 7)]
    pub k: usize,
    /// Oversampling factors N/(dK); one census per value.
    #[arg(long, value_delimiter = ',', default_values_t = [1usize, 2, 4, 8])]
    pub mu: Vec<usize>,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignalKind {
    /// Exactly K nonzero frequencies with unit modulus.
    Exact,
    /// Two-component Gaussian mixture with K expected strong terms.
    Mixture,
}

#[derive(Debug, Args)]
pub struct Generate {
    #[arg(value_enum)]
    pub kind: SignalKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Significant-to-rest energy ratio for mixtures.
    #[arg(long, default_value_t = 30.0)]
    pub snr_db: f64,
    /// Signal file to write.
    #[arg(long)]
    pub out: PathBuf,
    /// Also write the true (or significant) spectrum as JSON here.
    #[arg(long)]
    pub truth: Option<PathBuf>,
}
