//! `lefschetz`: command-line front end for the fibration, diamond, category
//! and mirror computations.
//!
//! Exit codes: 0 success, 2 input error, 3 orbit cap exceeded, 4 degenerate
//! input (the partial report is still printed).

mod args;
mod commands;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::commands::{run, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.body) {
                // A closed downstream pipe (e.g. `| head`) is not an error.
                if e.kind() == io::ErrorKind::BrokenPipe {
                    return ExitCode::from(outcome.code);
                }
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            ExitCode::from(outcome.code)
        }
        Err(CliError { message, code }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn emit(cli: &Cli, body: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, format!("{body}\n")),
        None => {
            let mut out = io::stdout().lock();
            writeln!(out, "{body}")?;
            out.flush()
        }
    }
}
