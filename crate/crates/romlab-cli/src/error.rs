//! CLI error type and exit-code mapping.

use thiserror::Error;

/// Process exit codes: 0 success, 1 computational failure, 2 input error,
/// 3 stabilization did not converge within the round budget.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable, unparseable, or semantically invalid input.
    #[error("input error: {0}")]
    Input(String),
    /// A computation failed (singularity, no convergence, overflow, ...).
    #[error("computation failed: {0}")]
    Compute(#[from] romlab_core::Error),
    /// Output could not be written.
    #[error("output error: {0}")]
    Output(String),
    /// The stabilization loop hit its round budget with unstable modes left.
    #[error("stabilization did not converge within the round budget")]
    NotConverged,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) | CliError::Output(_) => 1,
            CliError::NotConverged => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
