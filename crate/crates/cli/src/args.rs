use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "qspec", version, about = "Signless Laplacian spectra and bound verification for simple graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree invariants, diameter, spectra and energies of each graph.
    Invariants(CommonArgs),
    /// Evaluate every bound, structural check and conjecture on each graph.
    Verify(CommonArgs),
    /// Track the smallest Brouwer/Ashraf slack over an ensemble.
    Hunt(HuntArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FamilyKind {
    Complete,
    Star,
    Path,
    Cycle,
    CompleteBipartite,
    Gnp,
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConjectureArg {
    Brouwer,
    Ashraf,
}

#[derive(Debug, Clone, Args)]
#[group(skip)]
pub struct SourceArgs {
    /// File of newline-separated graph6 records (`-` for stdin); `#` lines are comments.
    #[arg(long, value_name = "PATH", group = "source")]
    pub input: Option<PathBuf>,
    /// Inline graph6 record (repeatable).
    #[arg(long, value_name = "STRING", group = "source")]
    pub g6: Vec<String>,
    /// Generated family.
    #[arg(long, value_enum, group = "source")]
    pub family: Option<FamilyKind>,
    /// Order, or inclusive range `a..b`. For complete_bipartite this is the first part.
    #[arg(long, value_name = "RANGE", value_parser = parse_range, requires = "family", conflicts_with_all = ["input", "g6"])]
    pub n: Option<RangeInclusive<usize>>,
    /// Second part of complete_bipartite.
    #[arg(long, requires = "family", conflicts_with_all = ["input", "g6"])]
    pub b: Option<usize>,
    /// Edge probability for gnp.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// PRNG seed for gnp.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Samples per order for gnp.
    #[arg(long, default_value_t = 1)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Relative tolerance for equality (tightness) detection.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Worker threads; output order never depends on it.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Analyze disconnected graphs too (bounds are reported as skipped).
    #[arg(long)]
    pub allow_disconnected: bool,
    /// Include eigensolve wall-clock milliseconds (breaks byte-identical output).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
pub struct CommonArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct HuntArgs {
    #[arg(long, value_enum)]
    pub conjecture: ConjectureArg,
    #[command(flatten)]
    pub common: CommonArgs,
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("invalid order {t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let n = parse(s)?;
            Ok(n..=n)
        }
    }
}
