//! Krylov basis engines.
//!
//! Arnoldi (plain, shift-invert, block), the two-sided bi-Lanczos
//! tridiagonalization with breakdown detection, POD bases from snapshot
//! SVDs, and polynomial-filtered starting vectors for restarting.

mod arnoldi;
mod bilanczos;
mod filter;
mod pod;

pub use arnoldi::{arnoldi, block_arnoldi, shift_invert_basis, ArnoldiFactorization};
pub use bilanczos::{bilanczos, BiLanczosFactorization, BreakdownKind};
pub use filter::filtered_start_vector;
pub use pod::pod_basis;
