//! Numerical range (field of values) machinery.
//!
//! Everything here runs through one primitive: for the rotated Hermitian
//! part `H_theta = (e^{i theta} A + e^{-i theta} A*) / 2`, the largest
//! eigenvalue is the support function of `W(A)` in direction `theta`.
//! Sampling it over a sweep of angles gives boundary points (via the leading
//! eigenvectors), a one-sided membership test (supporting hyperplanes), and
//! distance estimates, all without any point-in-polygon geometry.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::Result;
use crate::linalg::{hermitian_eigen, hermitian_lambda_max, ComplexMatrix};

/// `(e^{i theta} A + e^{-i theta} A*) / 2`.
pub fn rotated_hermitian_part(a: &ComplexMatrix, theta: f64) -> ComplexMatrix {
    let phase = Complex64::from_polar(1.0, theta);
    let rotated = a.scale(phase);
    rotated
        .add(&rotated.adjoint())
        .scale(Complex64::new(0.5, 0.0))
}

/// Sampled support function of the numerical range.
///
/// Precomputing the sweep once makes batch membership tests (hundreds of
/// Ritz values against one matrix) cheap.
#[derive(Debug, Clone)]
pub struct NumericalRangeSupport {
    angles: Vec<f64>,
    support: Vec<f64>,
}

impl NumericalRangeSupport {
    /// Samples `lambda_max(H_theta)` at `angles` uniform directions.
    pub fn new(a: &ComplexMatrix, angles: usize) -> Result<Self> {
        assert!(angles >= 3, "need at least 3 directions");
        let thetas: Vec<f64> = (0..angles)
            .map(|m| 2.0 * std::f64::consts::PI * m as f64 / angles as f64)
            .collect();
        let support: Vec<f64> = thetas
            .par_iter()
            .map(|&t| hermitian_lambda_max(&rotated_hermitian_part(a, t)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            angles: thetas,
            support,
        })
    }

    /// Supporting-hyperplane membership: `z` passes when
    /// `Re(e^{i theta} z) <= h(theta) + tol` for every sampled direction.
    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        self.angles
            .iter()
            .zip(&self.support)
            .all(|(&t, &h)| (Complex64::from_polar(1.0, t) * z).re <= h + tol)
    }

    /// Lower estimate of the distance from `z` to the numerical range
    /// (exact as the angle sampling refines; zero for interior points).
    pub fn distance(&self, z: Complex64) -> f64 {
        self.angles
            .iter()
            .zip(&self.support)
            .map(|(&t, &h)| (Complex64::from_polar(1.0, t) * z).re - h)
            .fold(0.0f64, f64::max)
    }

    /// Largest support value, i.e. the numerical radius.
    pub fn max_support(&self) -> f64 {
        self.support
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Sampled directions and support values.
    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.angles
            .iter()
            .cloned()
            .zip(self.support.iter().cloned())
    }
}

/// Membership test with the default 360-direction sweep.
///
/// For repeated queries against the same matrix build a
/// [`NumericalRangeSupport`] once and call [`NumericalRangeSupport::contains`].
pub fn in_numerical_range(a: &ComplexMatrix, z: Complex64, tol: f64) -> Result<bool> {
    Ok(NumericalRangeSupport::new(a, 360)?.contains(z, tol))
}

/// Boundary points of the numerical range from the rotated-Hermitian-part
/// sweep: for each direction the leading eigenvector `u` of `H_theta` yields
/// the boundary point `u* A u`. The convex hull of the returned points is an
/// inner approximation of `W(A)`.
pub fn numerical_range_boundary(a: &ComplexMatrix, angles: usize) -> Result<Vec<Complex64>> {
    assert!(angles >= 3, "need at least 3 directions");
    let thetas: Vec<f64> = (0..angles)
        .map(|m| 2.0 * std::f64::consts::PI * m as f64 / angles as f64)
        .collect();
    thetas
        .par_iter()
        .map(|&t| {
            let h = rotated_hermitian_part(a, t);
            let dec = hermitian_eigen(&h, true)?;
            let u = dec.vectors.as_ref().expect("vectors requested").column(0);
            let au = a.mul_vec(&u);
            Ok(crate::linalg::vec_dot(&u, &au))
        })
        .collect()
}
