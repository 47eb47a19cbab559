//! Projection-based reduced-order modeling of LTI systems.
//!
//! The crate builds Galerkin and Petrov-Galerkin reduced-order models of
//! dense linear time-invariant systems and answers one question about them:
//! where can the reduced eigenvalues land, and how many of them can be
//! unstable? It provides:
//!
//! - dense complex linear algebra kernels ([`linalg`]);
//! - LTI system and reduced-model types with projection, moments, transfer
//!   functions, and simulation ([`system`]);
//! - Krylov basis engines: Arnoldi, shift-invert, block Arnoldi, bi-Lanczos,
//!   POD, and polynomial-filtered starting vectors ([`krylov`]);
//! - spectral diagnostics: numerical range, pseudospectra grids, transient
//!   envelopes ([`spectral`]);
//! - rigorous unstable-mode bounds from Hermitian-part means and singular
//!   value geometric means ([`bounds`]);
//! - adversarial constructions with prescribed Ritz values or prescribed
//!   bi-Lanczos recurrences ([`adversarial`]);
//! - the restarted-Arnoldi stabilization loop with filtered starting
//!   vectors ([`stabilize`]).

pub mod adversarial;
pub mod bounds;
pub mod error;
pub mod krylov;
pub mod linalg;
pub mod spectral;
pub mod stabilize;
pub mod system;
#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
