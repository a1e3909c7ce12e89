mod args;
mod commands;
mod error;
mod format;
mod svg;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::EXIT_USAGE;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Centrality(a) => commands::centrality(a),
        Command::Sweep(a) => commands::sweep(a),
        Command::Triangles(a) => commands::triangles(a),
        Command::Connectivity(a) => commands::connectivity(a),
        Command::Stats(a) => commands::stats(a),
        Command::Compare(a) => commands::compare(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
