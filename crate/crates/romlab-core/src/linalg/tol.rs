//! Centralized numerical tolerances.
//!
//! Every invariant in the crate cites one of these constants; none of the
//! kernels hides an ad-hoc magic number. Tolerances are relative to the
//! Frobenius norm of the operand unless noted otherwise.

/// Eigenvalue residual budget: `||A v - lambda v|| <= TOL_EIG * ||A||_F`.
pub const TOL_EIG: f64 = 1e-10;

/// Orthonormality defect budget: `||Q*Q - I||_F <= TOL_ORTH`.
pub const TOL_ORTH: f64 = 1e-12;

/// Hermitian symmetry check: `||A - A*||_F <= TOL_HERM * ||A||_F`.
pub const TOL_HERM: f64 = 1e-12;

/// Column deflation threshold in Gram-Schmidt and Krylov recurrences,
/// relative to the incoming column scale.
pub const TOL_DEFLATE: f64 = 1e-12;

/// Biorthogonality defect budget for oblique projections, relative to the
/// column norms of the test/trial bases.
pub const TOL_BIORTH: f64 = 1e-10;

/// Krylov factorization residual budget:
/// `||A V_k - V_{k+1} H|| <= TOL_ARN * ||A||_F`.
pub const TOL_ARN: f64 = 1e-10;

/// Serious bi-Lanczos breakdown: `|w~* v~| < TOL_BREAKDOWN * ||v~|| ||w~||`.
pub const TOL_BREAKDOWN: f64 = 1e-12;

/// Near-breakdown warning band upper edge for bi-Lanczos.
pub const TOL_NEAR_BREAKDOWN: f64 = 1e-8;

/// LU pivot threshold, relative to the largest entry magnitude of the input.
pub const TOL_SINGULAR: f64 = 1e-13;

/// Linear solve residual budget: `||AX - B||_F <= TOL_SOLVE * ||A||_F ||X||_F`.
pub const TOL_SOLVE: f64 = 1e-10;

/// Magnitude cap on prescribed-Ritz construction coefficients before the
/// result is reported as ill-conditioned.
pub const TOL_ILL_CONDITIONED: f64 = 1e15;

/// Guard floor for relative-error denominators.
pub const TINY_FLOOR: f64 = 1e-300;
