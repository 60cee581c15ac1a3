//! Command-line front end: runs checks and prints verification reports.

mod builtins;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, ValueEnum};
use simploid::budget::Budget;
use simploid::Error;

use commands::{Command, Context, Outcome};
use report::{RunConfig, Timings};

#[derive(Parser, Debug)]
#[command(name = "simploid", version, about = "Exact checks on finite simplicial sets and Maurer–Cartan nerves")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Dimension parameter of k-groupoid and k-category checks.
    #[arg(long, global = true, default_value_t = 1)]
    k: usize,
    /// Highest simplicial level verified.
    #[arg(long, global = true, default_value_t = 3)]
    depth: usize,
    /// Truncation of thick simplices.
    #[arg(long, global = true, default_value_t = 3)]
    trunc: usize,
    /// Seed of every randomized sample.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of sampled points.
    #[arg(long, global = true, default_value_t = 10)]
    sample: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Wall-clock budget for searches and suites.
    #[arg(long, global = true, env = "SIMPLOID_BUDGET_MS")]
    budget_ms: Option<u64>,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    /// Include wall-clock timings (reports are then no longer byte-stable).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

/// Exit status: 0 pass, 1 fail, 2 usage, 3 malformed input, 4 insufficient
/// truncation, 5 timeout, 6 rejected input, 7 internal invariant.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::Malformed(_) => 3,
        Error::InsufficientTruncation { .. } => 4,
        Error::Timeout { .. } => 5,
        Error::Invariant(_) => 7,
        _ => 6,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let (command, inputs, params) = commands::params(&cli.command);
    let config = RunConfig {
        command,
        inputs,
        k: g.k,
        depth: g.depth,
        trunc: g.trunc,
        sample: g.sample,
        seed: g.seed,
        output: g.output.as_ref().map(|p| p.display().to_string()),
        params,
    };
    let budget = g.budget_ms.map(Budget::millis).unwrap_or_default();
    let ctx = Context { config, budget };
    let start = Instant::now();
    let outcome = match commands::run(&cli.command, &ctx) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    };
    let mut report = match outcome {
        Outcome::Raw(text) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Outcome::Report(r) => r,
    };
    if g.timings {
        report.timings = Some(Timings { total_ms: start.elapsed().as_millis() });
    }
    if let Some(path) = &g.output {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }
    match g.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
