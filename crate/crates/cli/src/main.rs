//! `hyperpv` — exact principal-value computations for central hyperplane
//! arrangements, driven by single-file JSON jobs.

mod job;
mod run;

use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    run::execute(run::Cli::parse())
}
