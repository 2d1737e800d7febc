//! Command-line interface and HTTP play server for the `pml` toolkit.

pub mod args;
pub mod commands;
mod error;
pub mod server;

pub use error::{CliError, CliResult};
