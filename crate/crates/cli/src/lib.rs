//! Command-line front end for the complex-vector-space angle library.
//!
//! The binary is a thin wrapper over [`run_args`], which keeps every code
//! path (argument parsing, document validation, report generation, exit
//! codes) drivable in-process by tests.

pub mod app;
pub mod cli;
pub mod doc;
pub mod sampling;
pub mod selftest;

pub use cli::{parse_document, run_args, run_command, Cli, Command, RunResult};
