//! Polynomial-filtered starting vectors for Arnoldi restarts.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::dense::{vec_norm, ComplexMatrix};
use crate::linalg::tol::TOL_DEFLATE;

/// Applies the monic filter `prod_i (A - root_i I)` to `x0`, renormalizing
/// to unit length after every linear factor, and returns the final unit
/// vector.
///
/// A root sitting exactly on an eigenvalue whose eigenvector carries all of
/// the remaining weight annihilates the vector; that surfaces as
/// `FilteredToZero` with the offending factor index.
pub fn filtered_start_vector(
    a: &ComplexMatrix,
    x0: &[Complex64],
    roots: &[Complex64],
) -> Result<Vec<Complex64>> {
    if !a.is_square() || a.rows() != x0.len() {
        return Err(Error::DimensionMismatch(format!(
            "filter needs square A matching x0, got {}x{} and |x0| = {}",
            a.rows(),
            a.cols(),
            x0.len()
        )));
    }
    let norm0 = vec_norm(x0);
    if norm0 == 0.0 {
        return Err(Error::ZeroStartVector);
    }
    let mut x: Vec<Complex64> = x0.iter().map(|z| z / norm0).collect();
    let anorm = a.norm_frobenius();
    for (idx, &root) in roots.iter().enumerate() {
        let mut y = a.mul_vec(&x);
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi -= root * xi;
        }
        let ny = vec_norm(&y);
        // the factor maps a unit vector to one of norm at most ||A|| + |root|
        if ny < TOL_DEFLATE * (anorm + root.norm()).max(f64::MIN_POSITIVE) {
            return Err(Error::FilteredToZero { factor: idx });
        }
        for z in y.iter_mut() {
            *z /= ny;
        }
        x = y;
    }
    Ok(x)
}
