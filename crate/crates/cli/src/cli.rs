//! Argument grammar and top-level dispatch.

use std::ffi::OsString;
use std::io::Read;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::app::{self, CliError, SubspaceKind};
use crate::doc::InputDocument;
use crate::selftest;

#[derive(Debug, Parser)]
#[command(
    name = "hermangle",
    version,
    about = "Angle reports for vectors, complex lines, and 2-planes of complex vector spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Five-angle report for a named pair of complex vectors
    Angles {
        /// Input document path; '-' reads stdin
        file: String,
        /// Two comma-separated vector names, e.g. a,b
        #[arg(long)]
        pair: String,
        /// Report angles in degrees instead of radians
        #[arg(long)]
        degrees: bool,
        /// Absolute tolerance on cosine/sine values (default 1e-9)
        #[arg(long)]
        tol: Option<f64>,
        /// Fold the Kähler angle into [0, pi/2]
        #[arg(long)]
        unoriented: bool,
    },
    /// Plane-pair geometry of the underlying real space
    Subspace {
        #[command(subcommand)]
        op: SubspaceCmd,
    },
    /// Deterministic identity and subspace self-checks on random data
    Selftest {
        /// Number of random samples per check family
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SubspaceCmd {
    /// Stationary angles between two named planes
    PrincipalAngles {
        /// Input document path; '-' reads stdin
        file: String,
        /// Two comma-separated plane names, e.g. p,q
        #[arg(long)]
        planes: String,
        #[arg(long)]
        degrees: bool,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Isocliny verdict with both stationary angles
    Isoclinic {
        /// Input document path; '-' reads stdin
        file: String,
        /// Two comma-separated plane names, e.g. p,q
        #[arg(long)]
        planes: String,
        #[arg(long)]
        degrees: bool,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Image of a named plane under the complex structure J
    JImage {
        /// Input document path; '-' reads stdin
        file: String,
        /// A single plane name
        #[arg(long)]
        planes: String,
        #[arg(long)]
        degrees: bool,
        #[arg(long)]
        tol: Option<f64>,
        /// Fold the reported Kähler angle into [0, pi/2]
        #[arg(long)]
        unoriented: bool,
    },
}

/// Output of one CLI invocation; strings carry no trailing newline.
#[derive(Debug)]
pub struct RunResult {
    pub stdout: Option<String>,
    pub stderr: Option<String>,
    pub code: u8,
}

/// Parses and runs a full argument vector (including argv[0]). Never
/// panics on malformed input; errors map onto the exit-code contract.
pub fn run_args<I, T>(args: I) -> RunResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli.command),
        Err(err) => {
            let rendered = err.render().to_string().trim_end().to_string();
            if err.use_stderr() {
                RunResult {
                    stdout: None,
                    stderr: Some(rendered),
                    code: 2,
                }
            } else {
                // --help / --version
                RunResult {
                    stdout: Some(rendered),
                    stderr: None,
                    code: 0,
                }
            }
        }
    }
}

pub fn run_command(command: &Command) -> RunResult {
    let outcome = match command {
        Command::Selftest { samples, seed } => {
            let report = selftest::run(*samples, *seed);
            return RunResult {
                stdout: Some(to_pretty(&report)),
                stderr: None,
                code: if report.pass { 0 } else { 1 },
            };
        }
        Command::Angles {
            file,
            pair,
            degrees,
            tol,
            unoriented,
        } => read_document(file)
            .and_then(|doc| app::cmd_angles(&doc, pair, *degrees, *tol, *unoriented))
            .map(|report| to_pretty(&report)),
        Command::Subspace { op } => {
            let (file, kind, planes, degrees, tol, unoriented) = match op {
                SubspaceCmd::PrincipalAngles {
                    file,
                    planes,
                    degrees,
                    tol,
                } => (
                    file,
                    SubspaceKind::PrincipalAngles,
                    planes,
                    *degrees,
                    *tol,
                    false,
                ),
                SubspaceCmd::Isoclinic {
                    file,
                    planes,
                    degrees,
                    tol,
                } => (file, SubspaceKind::Isoclinic, planes, *degrees, *tol, false),
                SubspaceCmd::JImage {
                    file,
                    planes,
                    degrees,
                    tol,
                    unoriented,
                } => (
                    file,
                    SubspaceKind::JImage,
                    planes,
                    *degrees,
                    *tol,
                    *unoriented,
                ),
            };
            read_document(file)
                .and_then(|doc| app::cmd_subspace(&doc, kind, planes, degrees, tol, unoriented))
                .map(|report| to_pretty(&report))
        }
    };

    match outcome {
        Ok(json) => RunResult {
            stdout: Some(json),
            stderr: None,
            code: 0,
        },
        Err(err) => RunResult {
            stdout: None,
            stderr: Some(format!("hermangle: {}", err.message())),
            code: err.exit_code(),
        },
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

fn read_document(path: &str) -> Result<InputDocument, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read '{path}': {e}")))?
    };
    parse_document(&text)
}

/// Parses an input document from JSON text; non-finite numbers anywhere in
/// vectors or planes are rejected up front.
pub fn parse_document(text: &str) -> Result<InputDocument, CliError> {
    let doc: InputDocument = serde_json::from_str(text)
        .map_err(|e| CliError::Usage(format!("cannot parse input document: {e}")))?;
    for (name, entries) in &doc.vectors {
        if entries.iter().flatten().any(|x| !x.is_finite()) {
            return Err(CliError::Usage(format!(
                "vector '{name}' contains a non-finite entry"
            )));
        }
    }
    for (name, pair) in &doc.planes {
        if pair.iter().flatten().any(|x| !x.is_finite()) {
            return Err(CliError::Usage(format!(
                "plane '{name}' contains a non-finite entry"
            )));
        }
    }
    Ok(doc)
}
