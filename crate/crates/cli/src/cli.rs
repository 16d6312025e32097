use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use oddzeta::rapid::SeriesFamily;

pub const CACHE_ENV: &str = "ODDZETA_CACHE";

#[derive(Debug, Parser)]
#[command(
    name = "oddzeta",
    version,
    about = "Rapidly converging series for odd zeta values"
)]
pub struct Cli {
    /// Bernoulli cache file; loaded before computing when given.
    #[arg(long, global = true, env = CACHE_ENV, value_name = "PATH")]
    pub cache_path: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub output: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate zeta(3), one odd zeta value, or a ladder of them.
    Compute(ComputeArgs),
    /// Check Fourier-series identities numerically.
    Verify(VerifyArgs),
    /// Compare the terms each family needs for a digit target.
    Bench(BenchArgs),
    /// Print the validity table of every identity.
    Table,
    /// Inspect or fill the Bernoulli cache.
    Cache(CacheArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Zeta3,
    ZetaOdd,
    Ladder,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub target: Target,

    /// Order r of zeta(2r+1) for `zeta-odd`.
    pub r: Option<u32>,

    /// Highest order of the ladder.
    #[arg(long)]
    pub rmax: Option<u32>,

    #[arg(long, value_parser = parse_family, default_value = "m6")]
    pub family: SeriesFamily,

    #[arg(long, default_value_t = 50)]
    pub digits: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity names such as T4.1, L4.2 or T3.5-cos; T3.5, L3.2, L4.1
    /// and T4.9 select every form.
    #[arg(long, required = true, value_delimiter = ',')]
    pub identity: Vec<String>,

    /// Rational parameters as p/q or decimals.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x: Vec<String>,

    /// Integer orders.
    #[arg(long, value_delimiter = ',')]
    pub r: Vec<u32>,

    /// Complex orders such as 3, 2.5+1.5i or 1/2-i.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub s: Vec<String>,

    /// Run the modular zeta(3) series for every m in {3, 4, 6}.
    #[arg(long)]
    pub all_m: bool,

    /// Fourier-side truncation.
    #[arg(long = "N", default_value_t = 10_000)]
    pub n: u64,

    /// Power-side truncation.
    #[arg(long = "K", default_value_t = 60)]
    pub k: u32,

    #[arg(long, default_value_t = 50)]
    pub digits: u32,

    /// Also fail any case whose residual exceeds this absolute value.
    #[arg(long)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', value_parser = parse_family, default_value = "ewell,ck,m3,m4,m6")]
    pub families: Vec<SeriesFamily>,

    #[arg(long, default_value_t = 50)]
    pub digits: u32,

    /// Order r of zeta(2r+1).
    #[arg(long, default_value_t = 1)]
    pub r: u32,
}

#[derive(Debug, Args)]
pub struct CacheArgs {
    /// Extend the cache to every B_n with n <= N and save it.
    #[arg(long, value_name = "N")]
    pub precompute: Option<usize>,
}

fn parse_family(s: &str) -> Result<SeriesFamily, String> {
    s.parse().map_err(|e: oddzeta::Error| e.to_string())
}
