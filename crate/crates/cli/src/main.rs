//! `recon`: compute and verify reconstruction parameters from the command
//! line. Exit codes: 0 success, 1 mismatch, 2 budget exhausted, 3 bad input.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod cmd;
mod error;
mod range;
mod report;

use error::Failure;
use report::{Format, Outcome};

#[derive(Parser, Debug)]
#[command(name = "recon", version, about = "Reconstruction parameters N(Γ, r) of error graphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct GlobalOpts {
    /// Print the run report as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Print results as CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Seed for random choices (default 0).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Element budget for brute-force sweeps.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// N(Γ, r) with per-distance breakdown and witness.
    #[command(group(ArgGroup::new("method").args(["closed", "brute", "both"])))]
    N(NArgs),
    /// The radius-2 intersection table for Sym_n(T), checked by direct counts.
    Table1(Table1Args),
    /// Sample observations around a centre and reconstruct it.
    Reconstruct(ReconstructArgs),
    /// Tables of exact counting numbers.
    Numbers(NumbersArgs),
    /// Run verification checks of the closed forms against brute force.
    Verify(VerifyArgs),
    /// Write a graph as an adjacency list.
    Export(ExportArgs),
}

/// Graph descriptors: `symt:<n>`, `hamming:<n>:<q>`, `johnson:<n>:<w>`,
/// `srg:<family>:<params>`, `file:<path>`.
#[derive(Args, Debug)]
pub struct NArgs {
    /// Graph descriptor.
    pub graph: String,
    /// Radius.
    pub r: usize,
    /// Closed form; also brute force when within budget, with a verdict.
    #[arg(long)]
    pub closed: bool,
    /// Brute force only (default).
    #[arg(long)]
    pub brute: bool,
    /// Closed form and brute force; fails when brute force is infeasible.
    #[arg(long)]
    pub both: bool,
}

#[derive(Args, Debug)]
pub struct Table1Args {
    /// Degree of the symmetric group (at least 4).
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    /// Intersection of all observation balls.
    Intersect,
    /// Coordinatewise plurality (Hamming graphs).
    Majority,
    /// Most frequent elements (Johnson graphs).
    Threshold,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").args(["center", "random", "observations"]).required(true).multiple(true)))]
pub struct ReconstructArgs {
    /// Graph descriptor.
    pub graph: String,
    /// Radius of the channel.
    pub r: usize,
    /// Hidden centre, in the graph's vertex format.
    #[arg(long, allow_hyphen_values = true)]
    pub center: Option<String>,
    /// Draw the hidden centre at random from the seed.
    #[arg(long, conflicts_with = "center")]
    pub random: bool,
    /// Number of distinct observations to draw.
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, value_enum, default_value_t = Algo::Intersect)]
    pub algo: Algo,
    /// Read observations from a file instead of sampling.
    #[arg(long)]
    pub observations: Option<PathBuf>,
    /// Write the sampled observations to a file.
    #[arg(long)]
    pub save_observations: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NumberKind {
    /// Signless Stirling numbers of the first kind c(n, k); `--i` ranges over k.
    Stirling,
    /// c_{3^1}(n, n-i): 1, 2, 3 in one cycle.
    #[value(name = "restricted-3cycle")]
    Restricted3Cycle,
    /// c_{2^2}(n, n-i): 1, 2 in one cycle and 3, 4 in one cycle.
    #[value(name = "restricted-2x2")]
    Restricted2x2,
    /// Minimal transposition factorizations per cycle type.
    Denes,
    /// Coefficients of the Poincaré polynomial.
    Poincare,
    /// Ball sizes b(n, r); `--i` ranges over r.
    Ballsize,
    /// Edges between consecutive spheres; `--i` ranges over r.
    Edgecount,
}

#[derive(Args, Debug)]
pub struct NumbersArgs {
    #[arg(value_enum)]
    pub kind: NumberKind,
    /// Values of n: `a`, `a..b` (inclusive).
    #[arg(long, value_parser = range::parse_range)]
    pub n: std::ops::RangeInclusive<usize>,
    /// Second index (inclusive range); defaults to every valid value.
    #[arg(long, value_parser = range::parse_range)]
    pub i: Option<std::ops::RangeInclusive<usize>>,
    /// Cycle lengths for `denes`, e.g. `4` or `2,2`.
    #[arg(long)]
    pub class: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Checks to run (see `--list`).
    pub checks: Vec<String>,
    /// Run every check.
    #[arg(long)]
    pub all: bool,
    /// Use reduced sizes.
    #[arg(long)]
    pub small: bool,
    /// List the available checks.
    #[arg(long)]
    pub list: bool,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    /// Graph descriptor.
    pub graph: String,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<(report::Output, Format), Failure> {
    if let Some(k) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| Failure::BadInput(format!("cannot set up {k} threads: {e}")))?;
    }
    let format = if cli.global.json {
        Format::Json
    } else if cli.global.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let start = Instant::now();
    let g = &cli.global;
    let mut out = match &cli.command {
        Command::N(a) => cmd::n::run(a, g)?,
        Command::Table1(a) => cmd::table1::run(a, g)?,
        Command::Reconstruct(a) => cmd::reconstruct::run(a, g)?,
        Command::Numbers(a) => cmd::numbers::run(a, g)?,
        Command::Verify(a) => cmd::verify::run(a, g)?,
        Command::Export(a) => cmd::export::run(a, g)?,
    };
    out.report.elapsed_us = start.elapsed().as_micros().try_into().unwrap_or(u64::MAX);
    Ok((out, format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((out, format)) => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            if let Err(e) = out.emit(format, &mut lock).and_then(|_| Ok(lock.flush()?)) {
                eprintln!("error: {e}");
                return ExitCode::from(e.exit_code());
            }
            match out.outcome {
                Outcome::Success => ExitCode::SUCCESS,
                Outcome::Mismatch => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
