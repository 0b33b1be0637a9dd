mod commands;
mod render;
mod target;
mod verify;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Pattern-avoiding permutations and inversion sequences: counting,
/// statistic distributions, bijections and exact generating-function checks.
#[derive(Debug, Parser)]
#[command(name = "quintperm", version)]
pub struct Cli {
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, env = "QUINTPERM_THREADS")]
    pub threads: Option<usize>,

    /// Largest n accepted by commands that enumerate a whole class.
    #[arg(long, global = true, default_value_t = 12)]
    pub limit: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class sizes, one line per n.
    Count {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Joint distribution of statistics over a class.
    Distribution {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        range: RangeArgs,
        /// Comma-separated statistic names, e.g. `ides,lrmax,rlmax`.
        #[arg(long, value_delimiter = ',', required = true)]
        stats: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Applies a bijection to one permutation.
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        /// Space-separated letters, e.g. "3 1 4 2 5".
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Runs an exhaustive check suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest length (or series order) checked.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coefficients of the common counting series.
    Series {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Method::Succession)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Writes class sizes `1..=n_max` as a b-file.
    Export {
        /// Defaults to I201210, counted by the succession rule.
        #[arg(long, conflicts_with = "patterns")]
        class: Option<String>,
        #[arg(long)]
        patterns: Option<String>,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Lists the class aliases.
    Classes,
}

#[derive(Debug, Clone, Args)]
pub struct ClassArgs {
    /// Class alias: I201210, C31243214, C31423241, K01..K13 or C<first pattern>.
    #[arg(long, conflicts_with = "patterns", required_unless_present = "patterns")]
    pub class: Option<String>,
    /// Explicit comma-separated patterns, e.g. `3124,3214`.
    #[arg(long)]
    pub patterns: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct RangeArgs {
    /// A single length.
    #[arg(long, conflicts_with = "n_max", required_unless_present = "n_max")]
    pub n: Option<usize>,
    /// Every length from 1 to this one.
    #[arg(long)]
    pub n_max: Option<usize>,
}

impl RangeArgs {
    pub fn lengths(&self) -> RangeInclusive<usize> {
        match (self.n, self.n_max) {
            (Some(n), _) => n..=n,
            (None, Some(m)) => 1..=m,
            (None, None) => unreachable!("clap requires one of --n and --n-max"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bijection {
    Phi,
    Psi,
    Alpha,
    Beta,
    Lehmer,
    Ms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Roundtrip,
    StatisticPreservation,
    Succession,
    Algebraic,
    Saturated,
    #[value(name = "conjecture-13")]
    Thirteen,
    TypeTwo,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Succession,
    ClosedForm,
}

pub fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        bail!("n = {n} exceeds the enumeration limit {limit}; raise it with --limit");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let limit = cli.limit;
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Count { class, range, format } => commands::count(&mut out, &class, range.lengths(), format, limit)?,
        Command::Distribution { class, range, stats, format } => {
            commands::distribution(&mut out, &class, range.lengths(), &stats, format, limit)?
        }
        Command::Map { bijection, input, format } => commands::map(&mut out, bijection, &input, format)?,
        Command::Verify { suite, n, format } => return verify::run(&mut out, suite, n, format, limit),
        Command::Series { n_max, method, format } => commands::series(&mut out, n_max, method, format)?,
        Command::Export { class, patterns, n_max, output } => {
            commands::export(&ClassArgs { class, patterns }, n_max, &output, limit)?
        }
        Command::Classes => commands::classes(&mut out)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
