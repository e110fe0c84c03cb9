//! Command-line harness: `gen`, `bench` and `verify`.
//!
//! Exit codes: 0 success, 1 usage or parameter error, 2 verification failure.

mod bench;
mod gen;
mod harness;
mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use bench::BenchReport;
pub use harness::StructureKind;

#[derive(Debug, Parser)]
#[command(name = "biased-pred", version, about = "Biased predecessor search harness")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a keys file, or a weights file over a support list.
    Gen(GenArgs),
    /// Build a structure, run a verified workload and emit a report.
    Bench(BenchArgs),
    /// Exhaustively check a structure against the oracle on a small universe.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistKind {
    Uniform,
    Geometric,
    Zipf,
    Pointmass,
}

impl DistKind {
    pub fn name(self) -> &'static str {
        match self {
            DistKind::Uniform => "uniform",
            DistKind::Geometric => "geometric",
            DistKind::Zipf => "zipf",
            DistKind::Pointmass => "pointmass",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Weight-generation flags shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    /// Ratio for the geometric distribution.
    #[arg(long, default_value_t = 0.5)]
    pub ratio: f64,
    /// Exponent for the Zipf distribution.
    #[arg(long, default_value_t = 1.0)]
    pub s: f64,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = 16)]
    pub universe_bits: u32,
    /// Number of keys to draw.
    #[arg(long)]
    pub n: Option<usize>,
    /// Write weights of this kind instead of keys.
    #[arg(long = "dist", visible_alias = "dist-kind", value_enum)]
    pub dist: Option<DistKind>,
    #[command(flatten)]
    pub weights: WeightArgs,
    /// Support keys in rank order, one per line (weights mode).
    #[arg(long)]
    pub support: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

/// Instance flags shared by `bench` and `verify`.
#[derive(Debug, Clone, Args)]
pub struct InstanceArgs {
    #[arg(long, value_enum)]
    pub structure: StructureKind,
    /// Threshold exponent for the hash-front structures.
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 16)]
    pub universe_bits: u32,
    /// Number of random keys when no keys file is given.
    #[arg(long, default_value_t = 1024)]
    pub n: usize,
    /// Keys file; overrides --n.
    #[arg(long)]
    pub keys: Option<PathBuf>,
    /// Weights file.
    #[arg(long, conflicts_with = "dist_kind")]
    pub dist: Option<PathBuf>,
    /// Generated distribution, over the support (default: the key set).
    #[arg(long, value_enum)]
    pub dist_kind: Option<DistKind>,
    #[command(flatten)]
    pub weights: WeightArgs,
    /// Support keys file for --dist-kind, in rank order.
    #[arg(long, conflicts_with = "support_size")]
    pub support: Option<PathBuf>,
    /// Random support of this many universe keys for --dist-kind.
    #[arg(long)]
    pub support_size: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Number of sampled queries.
    #[arg(long, default_value_t = 10_000, conflicts_with = "query_file")]
    pub queries: usize,
    /// Replay these queries instead of sampling.
    #[arg(long)]
    pub query_file: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Access script for layered-ws (default: every query in ascending order).
    #[arg(long)]
    pub query_file: Option<PathBuf>,
}

/// Errors carry their exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verification(_) => 2,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(args) => gen::run(&args),
        Command::Bench(args) => bench::run(&args),
        Command::Verify(args) => verify::run(&args),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
