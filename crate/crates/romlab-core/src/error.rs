//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by matrix kernels, factorizations, and model-reduction
/// routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Matrix construction rejected the input (dimensions or non-finite entries).
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    /// Operand shapes are incompatible.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A symmetry check failed before a Hermitian eigensolve.
    #[error("matrix is not Hermitian (defect {defect:.3e} > tol {tol:.3e})")]
    NotHermitian { defect: f64, tol: f64 },
    /// An iterative eigenvalue or singular value sweep ran out of budget.
    #[error("iteration budget exhausted in {0}")]
    NoConvergence(&'static str),
    /// A linear solve met a pivot below the singularity threshold.
    #[error("matrix is numerically singular (pivot {pivot:.3e})")]
    Singular { pivot: f64 },
    /// A matrix exponential or power left the representable range.
    #[error("overflow: result contains non-finite entries")]
    Overflow,
    /// Projection basis failed the orthonormality precondition.
    #[error("basis is not orthonormal (defect {defect:.3e} > tol {tol:.3e})")]
    NotOrthonormal { defect: f64, tol: f64 },
    /// Test/trial bases failed the biorthogonality precondition.
    #[error("bases are not biorthogonal (defect {defect:.3e} > tol {tol:.3e})")]
    NotBiorthogonal { defect: f64, tol: f64 },
    /// A Krylov factorization was started from a zero vector.
    #[error("starting vector is zero")]
    ZeroStartVector,
    /// Bi-Lanczos cannot start because the two starting vectors are orthogonal.
    #[error("immediate bi-Lanczos breakdown: c*b = 0")]
    ImmediateBreakdown,
    /// A polynomial filter annihilated the starting vector.
    #[error("filtered starting vector is numerically zero (factor {factor})")]
    FilteredToZero { factor: usize },
    /// The prescribed three-term recurrence produced a vanishing norm.
    #[error("recurrence breakdown at step {step} (norm {norm:.3e})")]
    RecurrenceBreakdown { step: usize, norm: f64 },
    /// The projected left starting vector is unusable.
    #[error("degenerate output vector c: {0}")]
    DegenerateC(&'static str),
    /// An operation requiring an orthogonal ROM received an oblique one.
    #[error("operation requires an orthogonal projection ROM")]
    WrongProjectionKind,
    /// Index arguments violate 1 <= j <= k <= n.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    /// Construction coefficients exceeded the representable safety bound.
    #[error("prescribed-Ritz construction is ill-conditioned (|h| = {magnitude:.3e})")]
    IllConditioned { magnitude: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
