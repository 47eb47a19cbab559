//! POD bases from snapshot matrices.

use crate::error::{Error, Result};
use crate::linalg::{svd, ComplexMatrix};

/// Leading `k` left singular vectors of the snapshot matrix: the
/// rank-`k` subspace minimizing the snapshot projection error.
pub fn pod_basis(snapshots: &ComplexMatrix, k: usize) -> Result<ComplexMatrix> {
    let rmin = snapshots.rows().min(snapshots.cols());
    if k == 0 || k > rmin {
        return Err(Error::IndexOutOfRange(format!(
            "pod basis size must satisfy 1 <= k <= min(dims) = {rmin}, got {k}"
        )));
    }
    let f = svd(snapshots)?;
    Ok(f.u.column_block(0, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn orthogonal_snapshots_ordered_by_norm() {
        let cols = vec![
            vec![c(0.0, 0.0), c(3.0, 0.0), c(0.0, 0.0)],
            vec![c(5.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ];
        let s = ComplexMatrix::from_columns(&cols);
        let v = pod_basis(&s, 3).unwrap();
        // descending snapshot norms: 5 (e_1), 3 (e_2), 1 (e_3)
        assert!((v[(0, 0)].norm() - 1.0).abs() < 1e-14);
        assert!((v[(1, 1)].norm() - 1.0).abs() < 1e-14);
        assert!((v[(2, 2)].norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rank_one_snapshots() {
        let b = vec![c(1.0, 0.0), c(2.0, 0.0), c(-2.0, 0.0)];
        let cols: Vec<Vec<Complex64>> = (1..=4)
            .map(|s| b.iter().map(|z| z * c(s as f64, 0.0)).collect())
            .collect();
        let snap = ComplexMatrix::from_columns(&cols);
        let v = pod_basis(&snap, 1).unwrap();
        let overlap = crate::linalg::vec_dot(&v.column(0), &b).norm() / crate::linalg::vec_norm(&b);
        assert!((overlap - 1.0).abs() < 1e-12);
    }

    #[test]
    fn projection_error_equals_tail_energy() {
        let s = ComplexMatrix::from_fn(10, 6, |i, j| {
            let k = (i * 6 + j) as u64;
            c(
                (k.wrapping_mul(69621).wrapping_add(11) % 2048) as f64 / 1024.0 - 1.0,
                (k.wrapping_mul(48271).wrapping_add(23) % 2048) as f64 / 1024.0 - 1.0,
            )
        });
        let k = 3;
        let v = pod_basis(&s, k).unwrap();
        let proj = v.mul(&v.adjoint().mul(&s));
        let err = s.sub(&proj).norm_frobenius();
        let svals = crate::linalg::singular_values(&s).unwrap();
        let tail: f64 = svals[k..].iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(
            (err - tail).abs() < 1e-10,
            "projection error {err} vs tail energy {tail}"
        );
    }

    #[test]
    fn oversized_basis_rejected() {
        let s = ComplexMatrix::zeros(4, 2);
        assert!(pod_basis(&s, 3).is_err());
    }
}
