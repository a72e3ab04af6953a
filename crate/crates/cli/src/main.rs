//! `logparadox`: command-line reports over the mean-gap library.
//!
//! Every command emits one [`report::ExperimentReport`] — as pretty JSON by
//! default, or as a flat CSV table with `--format csv`. Randomized commands
//! embed their master seed, so re-running a report with its recorded seed and
//! parameters reproduces it bit for bit.
//!
//! Exit codes: 0 on success (including `--help`/`--version`), 64 for
//! structurally invalid invocations, 2 for data or validation failures.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit code for data and validation failures.
pub const EXIT_DATA: u8 = 2;
/// Exit code for structurally invalid invocations.
pub const EXIT_USAGE: u8 = 64;

/// A failure the command bodies report instead of printing and exiting.
#[derive(Debug)]
pub enum CliError {
    /// Bad input data or a failed domain validation; exits [`EXIT_DATA`].
    Data(String),
    /// A structurally invalid request; exits [`EXIT_USAGE`].
    Usage(String),
}

/// Inspect how arithmetic and geometric means disagree, and when a
/// log-transform flips a comparison outright.
#[derive(Debug, Parser)]
#[command(name = "logparadox", version, propagate_version = true)]
pub struct Cli {
    /// Master seed for every randomized element.
    #[arg(long, global = true, env = "LOGPARADOX_SEED")]
    pub seed: Option<u64>,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

/// How a report is rendered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Pretty-printed JSON report with full structure.
    Json,
    /// Flat table with a header row; wide payloads keep only their rows.
    Csv,
}

/// Where a command reads its data from.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// CSV file holding the data.
    #[arg(long, value_name = "PATH")]
    pub input: PathBuf,

    /// Column to read: a 0-based index or a header name.
    #[arg(long, default_value = "0")]
    pub column: String,
}

/// The edit a `diff` invocation applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiffOp {
    /// Append the `--y` values.
    Concat,
    /// Remove the `--y` values (multiset semantics).
    Delete,
    /// Insert the `--y` values and remove the `--z` values.
    Replace,
}

/// Which edit an `induce` step applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InduceMode {
    /// Append the midpoint of the two means.
    Insert,
    /// Swap both extremes for the midpoint (needs at least 3 elements).
    ReplaceMinmax,
    /// Swap a random element for a random value between the means.
    ReplaceRandom,
}

/// Top-level commands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summarize a column: both means, their gap, flatness, and
    /// log-transform diagnostics.
    Summary {
        #[command(flatten)]
        input: InputArgs,

        /// Log base for the transform diagnostics (finite, > 1).
        #[arg(long, default_value_t = 10.0)]
        base: f64,

        /// Subtract this floor before taking logs; must stay below the
        /// column minimum.
        #[arg(long, conflicts_with = "clamp_epsilon")]
        offset: Option<f64>,

        /// Clamp values up to this floor before taking logs.
        #[arg(long)]
        clamp_epsilon: Option<f64>,
    },

    /// Exact closed-form differences of both means under one edit, checked
    /// against brute-force recomputation.
    Diff {
        #[command(flatten)]
        input: InputArgs,

        /// The edit to apply.
        #[arg(long, value_enum)]
        op: DiffOp,

        /// Values the edit appends (concat, replace) or removes (delete).
        #[arg(long, value_delimiter = ',', required = true, value_name = "V,V,...")]
        y: Vec<f64>,

        /// Values a replacement removes.
        #[arg(long, value_delimiter = ',', value_name = "V,V,...")]
        z: Option<Vec<f64>>,

        /// Absolute tolerance when matching removal values against the
        /// data; 0 requires exact matches.
        #[arg(long, default_value_t = 0.0)]
        match_tolerance: f64,
    },

    /// Repeatedly edit the data toward the midpoint of its means and log
    /// the trajectory of both means.
    Induce {
        #[command(flatten)]
        input: InputArgs,

        /// The edit each step applies.
        #[arg(long, value_enum)]
        mode: InduceMode,

        /// Number of steps (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        steps: u32,
    },

    /// Replace growing batches of extreme elements by the midpoint of the
    /// means and bootstrap both means at each point, reporting where each
    /// statistic first turns significant in the reversal direction.
    BootstrapSweep {
        #[command(flatten)]
        input: InputArgs,

        /// Bootstrap sample sizes, one sweep per size.
        #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
        sample_sizes: Vec<usize>,

        /// Bootstrap resamples per sweep point (at least 1).
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
        resamples: u32,

        /// Largest fraction of the data to replace, in (0, 0.5].
        #[arg(long, default_value_t = 0.1, value_parser = parse_fraction)]
        max_fraction: f64,

        /// Replacement-count increment between sweep points (at least 1).
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        step: u32,

        /// Add trailing 10-point moving averages of the p-values to the CSV
        /// table.
        #[arg(long)]
        smooth: bool,
    },

    /// Simulate two cell populations over shared discrete size classes and
    /// compare their per-cell mean volumes under both means.
    Markov {
        /// Structure counts per size class for population A.
        #[arg(long, value_delimiter = ',', default_value = "300,100,30,7")]
        model_a: Vec<u64>,

        /// Structure counts per size class for population B.
        #[arg(long, value_delimiter = ',', default_value = "240,147,30,4")]
        model_b: Vec<u64>,

        /// Volume of each size class, shared by both populations.
        #[arg(long, value_delimiter = ',', default_value = "1,3,9,27")]
        states: Vec<u64>,

        /// Cells simulated per population (at least 1).
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
        cells: u32,

        /// Structures sampled per cell (at least 1).
        #[arg(long, default_value_t = 525, value_parser = clap::value_parser!(u32).range(1..))]
        per_cell: u32,
    },

    /// Score how much room every (min, max) range pair on a grid leaves for
    /// a reversal: (min + max)/2 - sqrt(min * max).
    SweepSurface {
        /// Row grid: comma-separated values, or start:stop:count for an
        /// inclusive linear range.
        #[arg(long, value_name = "GRID")]
        min_grid: String,

        /// Column grid: comma-separated values, or start:stop:count for an
        /// inclusive linear range.
        #[arg(long, value_name = "GRID")]
        max_grid: String,
    },

    /// Emit a seeded synthetic dataset (CSV output feeds straight back into
    /// --input).
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
}

/// Synthetic dataset families.
#[derive(Debug, Subcommand)]
pub enum GenerateKind {
    /// Long-tailed positive data: 10 + 1000 * Exp(1), redrawing any
    /// non-positive values.
    Exponential {
        /// Number of values (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Normal bulk around a center with sqrt(center) and center^2 appended
    /// as symmetric outliers.
    SymmetricTails {
        /// Center of the bulk (at least 10).
        #[arg(long)]
        mu: f64,

        /// Standard deviation of the bulk (non-negative).
        #[arg(long, default_value_t = 2.0)]
        sigma: f64,

        /// Bulk size, excluding the two outliers (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
}

/// Validates `--max-fraction`: finite and in (0, 0.5].
fn parse_fraction(text: &str) -> Result<f64, String> {
    let value: f64 = text
        .parse()
        .map_err(|_| format!("'{text}' is not a number"))?;
    if value.is_finite() && value > 0.0 && value <= 0.5 {
        Ok(value)
    } else {
        Err(format!("{value} must lie in (0, 0.5]"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            // Help and version go to stdout, parse errors to stderr.
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Data(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_DATA)
        }
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
