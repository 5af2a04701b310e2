//! Library side of the `gramp` command-line harness.

pub mod config;
pub mod run;
pub mod verify;

pub use config::RunConfig;
pub use run::{run, CliError, SearchReport};
