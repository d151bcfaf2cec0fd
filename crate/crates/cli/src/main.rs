//! `spdsolve`: solve, generate, check, bench and profile from the command line.
//!
//! Exit codes: 0 success, 1 condition does not hold (`check`), 2 iteration
//! limit reached (`solve`), 3 invalid input or I/O failure, 4 numerical breakdown.

mod commands;

use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "spdsolve", version, about = "SPD solutions of nonlinear matrix equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one equation from matrix files or a manifest.
    Solve(commands::solve::SolveArgs),
    /// Write seeded random problems (or a fixture) as matrix files plus a manifest.
    Generate(commands::generate::GenerateArgs),
    /// Evaluate a sufficient solvability condition.
    Check(commands::check::CheckArgs),
    /// Run a solver × problem suite and write performance records.
    Bench(commands::bench::BenchArgs),
    /// Compute performance profiles from records.
    Profile(commands::profile::ProfileArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(commands::EXIT_INVALID),
            };
        }
    };
    let result = match cli.command {
        Command::Solve(a) => commands::solve::run(a),
        Command::Generate(a) => commands::generate::run(a),
        Command::Check(a) => commands::check::run(a),
        Command::Bench(a) => commands::bench::run(a),
        Command::Profile(a) => commands::profile::run(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
