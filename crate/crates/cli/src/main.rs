mod args;
mod commands;
mod io;
mod suite;

use args::{Cli, Command};
use clap::Parser;
use io::{CliError, CliResult};
use std::process::ExitCode;

/// Exit status: 0 when every assertion held, 1 on assertion or numerical
/// failure, 2 on configuration errors. Diagnostics go to standard error.
fn exit_status(result: CliResult<Vec<String>>) -> u8 {
    match result {
        Ok(failures) if failures.is_empty() => 0,
        Ok(failures) => {
            for f in failures {
                eprintln!("assertion failed: {f}");
            }
            1
        }
        Err(CliError::Runtime(m)) => {
            eprintln!("error: {m}");
            1
        }
        Err(CliError::Config(m)) => {
            eprintln!("error: {m}");
            2
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => commands::analyze(a),
        Command::Prox(a) => commands::prox(a),
        Command::Duality(a) => commands::duality(a),
        Command::SolutionMap(a) => commands::solution_map(a),
        Command::Suite(a) => suite::suite(a),
    };
    ExitCode::from(exit_status(result))
}
