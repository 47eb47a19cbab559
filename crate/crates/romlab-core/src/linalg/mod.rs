//! Dense complex linear algebra kernels.
//!
//! Everything else in the crate builds on this module: matrix storage,
//! Hermitian and general eigensolvers, one-sided Jacobi SVD, LU solves,
//! Gram-Schmidt orthonormalization, and the scaled Pade matrix exponential.
//! All kernels are deterministic; nothing here draws random numbers.

// dense index arithmetic is the natural idiom in these kernels
#![allow(clippy::needless_range_loop)]

pub mod dense;
pub mod eigen;
pub mod expm;
pub mod gram;
pub mod lu;
pub mod svd;
pub mod tol;

pub use dense::{vec_axpy, vec_dot, vec_norm, ComplexMatrix};
pub use eigen::{
    canonical_cmp, general_eigen, general_eigenvalues, hermitian_eigen, hermitian_eigenvalues,
    hermitian_lambda_max, schur, EigenDecomposition, SchurDecomposition,
};
pub use expm::matrix_exponential;
pub use gram::{orthonormalize, project_complement};
pub use lu::{solve_linear, LuFactorization};
pub use svd::{operator_norm, sigma_min, singular_values, svd, Svd};
