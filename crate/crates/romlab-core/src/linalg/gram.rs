//! Column orthonormalization by modified Gram-Schmidt.

use num_complex::Complex64;

use crate::linalg::dense::{vec_dot, vec_norm, ComplexMatrix};
use crate::linalg::tol::TOL_DEFLATE;

/// Orthonormalizes the columns of the input with rank detection.
///
/// Modified Gram-Schmidt with exactly one reorthogonalization pass per
/// column. A column whose remainder falls below `TOL_DEFLATE` relative to its
/// incoming norm is dropped and does not count toward the rank. The returned
/// basis spans the detected range of the input; rank 0 yields no basis.
pub fn orthonormalize(columns: &ComplexMatrix) -> (Option<ComplexMatrix>, usize) {
    let mut kept: Vec<Vec<Complex64>> = Vec::new();
    for j in 0..columns.cols() {
        let mut v = columns.column(j);
        let scale = vec_norm(&v);
        if scale == 0.0 {
            continue;
        }
        for _pass in 0..2 {
            for q in &kept {
                let coef = vec_dot(q, &v);
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= coef * qi;
                }
            }
        }
        let rem = vec_norm(&v);
        if rem < TOL_DEFLATE * scale {
            continue;
        }
        for z in v.iter_mut() {
            *z /= rem;
        }
        kept.push(v);
    }
    let rank = kept.len();
    if rank == 0 {
        (None, 0)
    } else {
        (Some(ComplexMatrix::from_columns(&kept)), rank)
    }
}

/// Projects `x` onto the orthogonal complement of the span of `q`'s columns,
/// with one reorthogonalization pass.
pub fn project_complement(q: &ComplexMatrix, x: &[Complex64]) -> Vec<Complex64> {
    let mut v = x.to_vec();
    for _pass in 0..2 {
        for j in 0..q.cols() {
            let col = q.column(j);
            let coef = vec_dot(&col, &v);
            for (vi, ci) in v.iter_mut().zip(&col) {
                *vi -= coef * ci;
            }
        }
    }
    v
}
