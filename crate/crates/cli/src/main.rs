//! `skewpoly`: runs interpolation, verification and independence tasks on
//! TOML problem files over skew polynomial rings.

mod problem;
mod report;
mod tasks;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use skew_core::ring::{GaussianRationals, RationalQuaternions, Rationals};
use skew_core::Side;

use problem::{RingSpec, Source};
use report::{CliError, Report};
use tasks::{Options, Task};

#[derive(Parser)]
#[command(
    name = "skewpoly",
    version,
    about = "Exact computations in skew polynomial rings F[x; sigma, delta]"
)]
struct Cli {
    /// Side of evaluation; overrides the file's `side` key.
    #[arg(long, value_enum, global = true)]
    side: Option<SideArg>,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampling the twist laws before use.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

#[derive(Subcommand)]
enum Command {
    /// Hermite interpolation through the given derivative targets.
    Interpolate { file: PathBuf },
    /// Recompute every constraint value of `polynomial` and compare.
    Verify { file: PathBuf },
    /// Decide DP-independence of the points with their chains.
    Independence { file: PathBuf },
    /// Evaluate `polynomial` at each point.
    Eval { file: PathBuf },
    /// Partial derivatives of `polynomial` along each chain.
    Derive { file: PathBuf },
    /// The confluent Vandermonde matrix of order `order` (default N).
    Vandermonde { file: PathBuf },
    /// The monic generator of the constraint ideal (one variable).
    MinimalPoly { file: PathBuf },
    /// Run the task named by the file's `task` key.
    Run { file: PathBuf },
}

impl Command {
    fn split(&self) -> (Option<Task>, &PathBuf) {
        match self {
            Command::Interpolate { file } => (Some(Task::Interpolate), file),
            Command::Verify { file } => (Some(Task::Verify), file),
            Command::Independence { file } => (Some(Task::Independence), file),
            Command::Eval { file } => (Some(Task::Eval), file),
            Command::Derive { file } => (Some(Task::Derive), file),
            Command::Vandermonde { file } => (Some(Task::Vandermonde), file),
            Command::MinimalPoly { file } => (Some(Task::MinimalPoly), file),
            Command::Run { file } => (None, file),
        }
    }
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let (task, path) = cli.command.split();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let src = Source(&text);
    let file = problem::parse(&text)?;
    let task = match task {
        Some(t) => t,
        None => Task::from_file(&file, src)?,
    };
    let opts = Options {
        side: cli.side.map(|s| match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }),
        seed: cli.seed,
    };
    match problem::ring_spec(&file, src)? {
        RingSpec::Rationals => tasks::run(Rationals, &file, src, task, &opts),
        RingSpec::GaussianRationals => tasks::run(GaussianRationals, &file, src, task, &opts),
        RingSpec::Quaternions => tasks::run(RationalQuaternions, &file, src, task, &opts),
        RingSpec::Gf(field) => tasks::run(field, &file, src, task, &opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match execute(&cli) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("JSON values serialize")
                );
            } else {
                for line in &report.lines {
                    println!("{line}");
                }
            }
            report.exit_code()
        }
        Err(e) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&e.to_json()).expect("JSON values serialize")
                );
            } else {
                eprintln!("error: {e}");
            }
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
