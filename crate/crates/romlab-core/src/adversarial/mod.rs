//! Adversarial constructions: systems whose reduced models misbehave by
//! design.
//!
//! Two constructions are built here. The first produces a matrix and
//! starting vector whose successive Krylov projection eigenvalues equal any
//! prescribed stage spectra while the full spectrum is also prescribed — the
//! departure from normality absorbs the contradiction. The second fixes the
//! matrix and input and designs only the output vector so that bi-Lanczos
//! executes an arbitrary prescribed three-term recurrence.

mod greenbaum;
mod ritz;

pub use greenbaum::{
    greenbaum_system, prescribed_tridiagonal, verify_greenbaum, GreenbaumPrescription,
    GreenbaumSystem, GreenbaumVerifyReport,
};
pub use ritz::{
    prescribed_ritz_system, verify_prescribed_ritz, RitzPrescription, RitzVerifyReport,
};
