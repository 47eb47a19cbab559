//! Transient-growth envelopes.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{matrix_exponential, operator_norm, ComplexMatrix};

/// Operator-norm envelope `||exp(t A)||` at the given times (ascending,
/// nonnegative). The slope of this envelope at zero is the numerical
/// abscissa.
pub fn transient_envelope_continuous(a: &ComplexMatrix, times: &[f64]) -> Result<Vec<f64>> {
    let mut prev = f64::NEG_INFINITY;
    for &t in times {
        if t < 0.0 || t < prev {
            return Err(Error::IndexOutOfRange(
                "times must be nonnegative and ascending".into(),
            ));
        }
        prev = t;
    }
    times
        .iter()
        .map(|&t| operator_norm(&matrix_exponential(&a.scale(Complex64::new(t, 0.0)))?))
        .collect()
}

/// Power envelope `||A^k||` for `k = 0..=steps`.
pub fn transient_envelope_discrete(a: &ComplexMatrix, steps: usize) -> Result<Vec<f64>> {
    assert!(a.is_square());
    let mut out = Vec::with_capacity(steps + 1);
    let mut power = ComplexMatrix::identity(a.rows());
    out.push(1.0);
    for _ in 0..steps {
        power = power.mul(a);
        if !power.all_finite() {
            return Err(Error::Overflow);
        }
        out.push(operator_norm(&power)?);
    }
    Ok(out)
}

/// Pseudospectral lower bound on peak transient growth:
/// `sup_t ||exp(tA)|| >= alpha_eps / eps`. The caller compares the returned
/// bound against an envelope maximum; a nonpositive abscissa makes the bound
/// vacuous.
pub fn transient_lower_bound(eps: f64, alpha_eps: f64) -> f64 {
    assert!(eps > 0.0);
    alpha_eps / eps
}
