//! Front end for the `mseg` binary: argument parsing, dispatch and output.
//!
//! [`run`] never touches the process streams, so it can be driven from tests;
//! the binary prints its [`Outcome`] and exits with its code.

pub mod commands;
pub mod dsl;
pub mod render;

use clap::Parser;

pub use commands::Cli;
pub use dsl::{parse_multisegment, parse_segment, parse_tower, ParseError};

/// Success.
pub const EXIT_OK: i32 = 0;
/// Malformed arguments or DSL text.
pub const EXIT_PARSE: i32 = 1;
/// Well-formed input rejected by the mathematics.
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<mseg_core::Error> for CliError {
    fn from(e: mseg_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<mseg_hecke::HeckeError> for CliError {
    fn from(e: mseg_hecke::HeckeError) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let table = cli.table;
    match commands::dispatch(cli.command) {
        Ok(doc) => Outcome {
            code: EXIT_OK,
            stdout: if table { render::table(&doc) } else { render::json(&doc) },
            stderr: String::new(),
        },
        Err(CliError::Parse(msg)) => Outcome {
            code: EXIT_PARSE,
            stdout: String::new(),
            stderr: format!("parse error: {msg}\n"),
        },
        Err(CliError::Domain(msg)) => Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}
