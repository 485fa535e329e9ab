//! `mbn` - generate motif-based networks, count motifs, evaluate structure
//! metrics, and reproduce the promotion / small-worldness / modularity
//! experiments as seeded, machine-readable sweeps.

mod commands;
mod input;
mod output;

use clap::error::ErrorKind;
use clap::Parser;
use std::process::ExitCode;

/// Exit code 1: invalid flags or malformed inputs. Exit code 2: runtime
/// failures (I/O, degenerate metrics).
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Runtime(String),
}

impl CliError {
    fn validation(e: impl std::fmt::Display) -> Self {
        CliError::Validation(e.to_string())
    }

    fn runtime(e: impl std::fmt::Display) -> Self {
        CliError::Runtime(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "mbn", version, about = "Motif-based network design toolkit")]
enum Cli {
    Generate(commands::generate::Args),
    Census(commands::census::Args),
    Metrics(commands::metrics::Args),
    Sweep(commands::sweep::Args),
    EmptyCompare(commands::empty_compare::Args),
    GlobalEval(commands::global_eval::Args),
    Continuum(commands::continuum::Args),
    Optimize(commands::optimize::Args),
    CatalogDump(commands::catalog_dump::Args),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    return ExitCode::SUCCESS;
                }
                _ => ExitCode::from(1),
            };
            eprint!("{e}");
            return code;
        }
    };
    let invocation = std::env::args().collect::<Vec<_>>().join(" ");
    let outcome = match cli {
        Cli::Generate(args) => commands::generate::run(args),
        Cli::Census(args) => commands::census::run(args, &invocation),
        Cli::Metrics(args) => commands::metrics::run(args, &invocation),
        Cli::Sweep(args) => commands::sweep::run(args, &invocation),
        Cli::EmptyCompare(args) => commands::empty_compare::run(args, &invocation),
        Cli::GlobalEval(args) => commands::global_eval::run(args, &invocation),
        Cli::Continuum(args) => commands::continuum::run(args, &invocation),
        Cli::Optimize(args) => commands::optimize::run(args, &invocation),
        Cli::CatalogDump(args) => commands::catalog_dump::run(args, &invocation),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
