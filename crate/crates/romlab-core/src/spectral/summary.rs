//! Scalar spectral indicators.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::linalg::{
    general_eigenvalues, hermitian_eigenvalues, hermitian_lambda_max, singular_values,
    ComplexMatrix,
};
use crate::spectral::range::rotated_hermitian_part;

/// The six spectrum-derived quantities the stability analysis runs on.
///
/// `alpha`/`rho` govern asymptotics, `omega`/`nu` bound where projected
/// eigenvalues can land, `mu` are the Hermitian-part eigenvalues feeding the
/// strip bounds, and `s` the singular values feeding the disk bounds.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    /// Spectral abscissa `max Re sigma(A)`.
    pub alpha: f64,
    /// Spectral radius `max |sigma(A)|`.
    pub rho: f64,
    /// Numerical abscissa `max Re W(A) = mu_1`.
    pub omega: f64,
    /// Numerical radius `max |W(A)|`.
    pub nu: f64,
    /// Hermitian-part eigenvalues, descending.
    pub mu: Vec<f64>,
    /// Singular values, descending.
    pub s: Vec<f64>,
}

/// `(A + A*) / 2`.
pub fn hermitian_part(a: &ComplexMatrix) -> ComplexMatrix {
    a.add(&a.adjoint()).scale(Complex64::new(0.5, 0.0))
}

/// Numerical radius by angle sweep with golden-section refinement.
///
/// `nu(A) = max_theta lambda_max(H_theta)`: the sweep locates the best
/// direction among `angles` samples and a golden-section pass tightens the
/// angle to 1e-8, which the five-digit reference values require.
pub fn numerical_radius(a: &ComplexMatrix, angles: usize) -> Result<f64> {
    use rayon::prelude::*;
    let thetas: Vec<f64> = (0..angles)
        .map(|m| 2.0 * std::f64::consts::PI * m as f64 / angles as f64)
        .collect();
    let values: Vec<f64> = thetas
        .par_iter()
        .map(|&t| hermitian_lambda_max(&rotated_hermitian_part(a, t)))
        .collect::<Result<Vec<_>>>()?;
    let (best_idx, best_val) =
        values
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |(bi, bv), (i, &v)| {
                if v > bv {
                    (i, v)
                } else {
                    (bi, bv)
                }
            });

    // golden-section refinement on the bracketing interval
    let delta = 2.0 * std::f64::consts::PI / angles as f64;
    let eval = |t: f64| hermitian_lambda_max(&rotated_hermitian_part(a, t));
    let mut lo = thetas[best_idx] - delta;
    let mut hi = thetas[best_idx] + delta;
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c_pt = hi - phi * (hi - lo);
    let mut d_pt = lo + phi * (hi - lo);
    let mut fc = eval(c_pt)?;
    let mut fd = eval(d_pt)?;
    let mut best = best_val.max(fc).max(fd);
    while hi - lo > 1e-8 {
        if fc > fd {
            hi = d_pt;
            d_pt = c_pt;
            fd = fc;
            c_pt = hi - phi * (hi - lo);
            fc = eval(c_pt)?;
        } else {
            lo = c_pt;
            c_pt = d_pt;
            fc = fd;
            d_pt = lo + phi * (hi - lo);
            fd = eval(d_pt)?;
        }
        best = best.max(fc).max(fd);
    }
    Ok(best)
}

/// Computes all six indicators.
pub fn spectral_summary(a: &ComplexMatrix) -> Result<SpectralSummary> {
    let eig = general_eigenvalues(a)?;
    let alpha = eig.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    let rho = eig.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mu = hermitian_eigenvalues(&hermitian_part(a))?;
    let omega = mu[0];
    let s = singular_values(a)?;
    let nu = numerical_radius(a, 720)?;
    Ok(SpectralSummary {
        alpha,
        rho,
        omega,
        nu,
        mu,
        s,
    })
}
