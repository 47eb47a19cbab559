//! Command definitions and dispatch.

pub mod adversarial;
pub mod analyze;
pub mod bounds;
pub mod example;
pub mod pseudospectra;
pub mod reduce;
pub mod stabilize;
pub mod transient;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::CliResult;

/// Reduced-order modeling workbench: projection ROMs of LTI systems,
/// spectral and pseudospectral diagnostics, rigorous unstable-mode bounds,
/// adversarial constructions, and filter-restart stabilization.
#[derive(Debug, Parser)]
#[command(name = "romlab", version, about)]
pub struct Cli {
    /// Directory for file outputs (matrices, CSV tables, trace JSON).
    /// Created if missing; files are written atomically.
    #[arg(long, global = true)]
    pub output_dir: Option<PathBuf>,

    /// Emit machine-readable JSON on stdout instead of text reports.
    #[arg(long, global = true)]
    pub json: bool,

    /// Reserved for reproducibility of randomized features; accepted for
    /// interface stability, currently unused.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a built-in example system document.
    Example(example::ExampleArgs),
    /// Spectral summary plus strip/disk bounds of a system.
    Analyze(analyze::AnalyzeArgs),
    /// Strip and disk bound tables (optionally the strips of an order-k ROM).
    Bounds(bounds::BoundsArgs),
    /// Build a reduced-order model and report its stability and moments.
    Reduce(reduce::ReduceArgs),
    /// Resolvent-norm grid with pseudospectral abscissa/radius estimates.
    Pseudospectra(pseudospectra::PseudospectraArgs),
    /// Transient envelope of the full model.
    Transient(transient::TransientArgs),
    /// Adversarial constructions: prescribed Ritz values or prescribed
    /// bi-Lanczos recurrences.
    #[command(subcommand)]
    Adversarial(adversarial::AdversarialCommand),
    /// Filter-restart stabilization loop.
    Stabilize(stabilize::StabilizeArgs),
}

pub fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Example(args) => example::run(cli, args),
        Command::Analyze(args) => analyze::run(cli, args),
        Command::Bounds(args) => bounds::run(cli, args),
        Command::Reduce(args) => reduce::run(cli, args),
        Command::Pseudospectra(args) => pseudospectra::run(cli, args),
        Command::Transient(args) => transient::run(cli, args),
        Command::Adversarial(cmd) => adversarial::run(cli, cmd),
        Command::Stabilize(args) => stabilize::run(cli, args),
    }
}

/// Parses a comma-separated list of f64 values.
pub(crate) fn parse_f64_list(text: &str, flag: &str) -> CliResult<Vec<f64>> {
    text.split(',')
        .map(|t| {
            t.trim().parse::<f64>().map_err(|_| {
                crate::error::CliError::Input(format!("{flag}: bad number {:?}", t.trim()))
            })
        })
        .collect()
}

/// Parses "re" or "re,im" into a complex number.
pub(crate) fn parse_complex(text: &str, flag: &str) -> CliResult<num_complex::Complex64> {
    let parts = parse_f64_list(text, flag)?;
    match parts.len() {
        1 => Ok(num_complex::Complex64::new(parts[0], 0.0)),
        2 => Ok(num_complex::Complex64::new(parts[0], parts[1])),
        _ => Err(crate::error::CliError::Input(format!(
            "{flag}: expected \"re\" or \"re,im\""
        ))),
    }
}
