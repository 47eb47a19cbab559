//! Library backing the `romlab` binary: file formats and command drivers.
//!
//! Everything the binary does is callable from here so the integration
//! tests can exercise commands without spawning processes (they spawn the
//! binary as well for the end-to-end paths).

pub mod commands;
pub mod error;
pub mod formats;

pub use error::{CliError, CliResult};
