//! Command implementations behind the `morse-pencil` binary.
//!
//! Every command returns an [`Outcome`]: an exit code and a [`Report`] that
//! renders either as plain text or as deterministic JSON.

pub mod commands;
pub mod config;
pub mod input;
pub mod report;

pub use commands::Outcome;
pub use config::{OutputFormat, RunConfig};
pub use report::{ExitCode, Report};
