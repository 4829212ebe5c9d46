//! File formats and subcommands behind the `polyhopf` binary.

pub mod args;
pub mod commands;
mod error;
pub mod format;

pub use error::{CliError, Result};
