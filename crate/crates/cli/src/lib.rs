//! Command-line front end for the `lerch` crate.
//!
//! Every command renders into an [`Outcome`] so the binary is a thin shell
//! and tests can inspect stdout and the exit code directly.

pub mod args;
pub mod commands;
pub mod format;
pub mod records;

use args::{Cli, Command};
use clap::Parser;
use lerch::LerchError;
use std::ffi::OsString;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_ACCURACY: u8 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    pub fn with_code(stdout: String, code: u8) -> Self {
        Self { stdout, stderr: String::new(), code }
    }

    pub fn fail(code: u8, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self { stdout: String::new(), stderr, code }
    }
}

/// Exit status for a library error: input problems are domain errors,
/// numerical shortfalls are accuracy failures.
pub fn exit_code_for(e: &LerchError) -> u8 {
    if e.is_domain() {
        EXIT_DOMAIN
    } else {
        EXIT_ACCURACY
    }
}

pub fn error_outcome(e: &LerchError) -> Outcome {
    Outcome::fail(exit_code_for(e), format!("error: {e}"))
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Eval(a) => commands::eval::run(&a),
        Command::Table1(a) => commands::table1::run(&a),
        Command::Sweep(a) => commands::sweep::run(&a),
        Command::Coeffs(a) => commands::coeffs::run(&a),
    }
}
