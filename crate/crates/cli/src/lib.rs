//! Library behind the `wgeom` binary.
//!
//! Every subcommand writes to caller-supplied streams and returns an [`Outcome`],
//! so the binary is a thin wrapper and tests can run commands in-process.

pub mod args;
pub mod commands;
mod error;
pub mod format;
pub mod input;

use std::io::Write;

pub use args::{Cli, Command};
pub use error::CliError;

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    /// Methods disagree beyond tolerance, or verification checks failed.
    Mismatch,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::Mismatch => 2,
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Pmax(a) => commands::pmax::run(a, out, err),
        Command::Sweep(a) => commands::sweep::run(a, out),
        Command::Nearest(a) => commands::nearest::run(a, out, err),
        Command::Verify(a) => commands::verify::run(a, out),
    }
}
