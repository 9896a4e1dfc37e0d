//! Command-line front end for `parsimonious-core`.
//!
//! Every subcommand prints a plain text report, or with `--json` a single
//! [`Envelope`] object. Exit codes are fixed: 0 success, 1 a checked property
//! failed, 2 invalid input, 3 the exhaustive oracle refused the game size.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use parsimonious_core::{ExpansionError, OracleError, ReprError, DEFAULT_EXHAUSTIVE_BOUND};

pub mod commands;
pub mod format;
pub mod parallel;

use format::ParseError;

/// Bumped on any change to the JSON payloads.
pub const FORMAT_VERSION: u32 = 1;

pub const EXIT_OK: u8 = 0;
pub const EXIT_PROPERTY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "parsimony",
    version,
    about = "Minimal winning quotas of parsimonious games"
)]
pub struct Cli {
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// List every addend of the polynomial expansion (quota).
    #[arg(long, global = true)]
    pub breakdown: bool,

    /// Largest player count the exhaustive verifier accepts (verify).
    #[arg(long, global = true, default_value_t = DEFAULT_EXHAUSTIVE_BOUND)]
    pub bound: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal winning quota by the recurrence and by the polynomial expansion.
    Quota {
        /// Free type representation, e.g. 3,1,2,2
        #[arg(allow_hyphen_values = true)]
        repr: String,
    },
    /// Minimal homogeneous representation (q;w_1,...,w_n).
    Expand {
        #[arg(allow_hyphen_values = true)]
        repr: String,
    },
    /// k-Fibonacci numbers F_0(k) ... F_nmax(k).
    Kfib { k: u64, n_max: u32 },
    /// Rows 1..=n_max of the modified Pascal triangle.
    Triangle { n_max: usize },
    /// Feasible index sequences of the quota expansion for h types.
    Addends { h: usize },
    /// The twin (reversed) representation and both quotas.
    Twin {
        #[arg(allow_hyphen_values = true)]
        repr: String,
    },
    /// Exhaustive coalition check that the expanded game is parsimonious.
    Verify {
        #[arg(allow_hyphen_values = true)]
        repr: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Quota { .. } => "quota",
            Command::Expand { .. } => "expand",
            Command::Kfib { .. } => "kfib",
            Command::Triangle { .. } => "triangle",
            Command::Addends { .. } => "addends",
            Command::Twin { .. } => "twin",
            Command::Verify { .. } => "verify",
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse representation: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid representation: {0}")]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Argument(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Oracle(_) => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        }
    }
}

/// What a command produced: the text report, the JSON payload and the exit
/// code (non-zero when a checked property failed).
#[derive(Debug, Clone)]
pub struct Response {
    pub input: Value,
    pub text: String,
    pub result: Value,
    pub exit: u8,
}

#[derive(Debug, Serialize)]
pub struct Envelope<'a> {
    pub command: &'a str,
    pub format_version: u32,
    pub input: &'a Value,
    pub result: &'a Value,
}

/// Runs the command line `args` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };

    match commands::dispatch(&cli) {
        Ok(response) => {
            let written = if cli.json {
                let envelope = Envelope {
                    command: cli.command.name(),
                    format_version: FORMAT_VERSION,
                    input: &response.input,
                    result: &response.result,
                };
                serde_json::to_string(&envelope)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}"))
            } else {
                write!(out, "{}", response.text)
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_RESOURCE;
            }
            response.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if cli.json {
                let envelope = serde_json::json!({
                    "command": cli.command.name(),
                    "format_version": FORMAT_VERSION,
                    "error": e.to_string(),
                    "exit_code": e.exit_code(),
                });
                let _ = writeln!(out, "{envelope}");
            }
            e.exit_code()
        }
    }
}
