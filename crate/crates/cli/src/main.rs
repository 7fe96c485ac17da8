//! `kdec`: batch front end for the complexity-based bandwidth toolkit.
//!
//! Every subcommand is deterministic given its flags, writes data to files
//! or standard output only, reports errors on standard error only, and
//! stamps each output with a manifest of the exact configuration used.
//! Exit codes: 0 success, 2 flag misuse, 1 computation or file error.

use std::process::ExitCode;

use clap::Parser;

mod commands;
mod error;
mod flags;
mod input;
mod manifest;
mod output;

use commands::{curve, density, efficiency, select, simulate};

#[derive(Parser)]
#[command(
    name = "kdec",
    version,
    about = "Kernel density bandwidth selection by complexity maximization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Subcommand)]
enum Command {
    /// Draw a seeded sample from a reference distribution
    Simulate(simulate::SimulateArgs),
    /// Run bandwidth selectors and report each bandwidth with its complexity
    Select(select::SelectArgs),
    /// Tabulate the complexity curve as CSV
    Curve(curve::CurveArgs),
    /// Evaluate the kernel density on a grid
    Density(density::DensityArgs),
    /// Per-year sign-dynamics and memory statistics of a return series
    Efficiency(efficiency::EfficiencyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Simulate(args) => simulate::run(args),
        Command::Select(args) => select::run(args),
        Command::Curve(args) => curve::run(args),
        Command::Density(args) => density::run(args),
        Command::Efficiency(args) => efficiency::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kdec: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
