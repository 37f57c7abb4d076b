//! File formats, verification suites and subcommands behind the `fraclap` binary.

pub mod app;
pub mod bench;
pub mod format;
pub mod verify;

pub use app::{run, CliError};
