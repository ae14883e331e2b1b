//! Command line, file formats and parallel scans on top of `lieball-core`.

pub mod commands;
pub mod error;
pub mod formats;
pub mod parallel;

pub use commands::{run, Cli, Command, Outcome, RunConfig};
pub use error::{exit, CliError};
