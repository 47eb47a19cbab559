//! Singular value decomposition by one-sided Jacobi rotations.
//!
//! One-sided Jacobi delivers high relative accuracy even for the smallest
//! singular values, which the pseudospectra sweeps depend on: grid values are
//! `sigma_min(zI - A)` and the interesting contours sit many orders of
//! magnitude below `||A||`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::dense::ComplexMatrix;

/// Thin singular value decomposition `A = U diag(s) V*`.
///
/// `u` is `m x r` and `v` is `n x r` with `r = min(m, n)`; singular values
/// are nonnegative and descending.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: ComplexMatrix,
    pub s: Vec<f64>,
    pub v: ComplexMatrix,
}

/// Singular values only, descending.
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(svd(a)?.s)
}

/// Operator 2-norm, `s_1(A)`.
pub fn operator_norm(a: &ComplexMatrix) -> Result<f64> {
    let s = singular_values(a)?;
    Ok(s[0])
}

/// Smallest singular value.
pub fn sigma_min(a: &ComplexMatrix) -> Result<f64> {
    let s = singular_values(a)?;
    Ok(*s.last().unwrap())
}

/// Full thin SVD.
pub fn svd(a: &ComplexMatrix) -> Result<Svd> {
    if a.rows() >= a.cols() {
        svd_tall(a)
    } else {
        // work on the adjoint and swap factors
        let t = svd_tall(&a.adjoint())?;
        Ok(Svd {
            u: t.v,
            s: t.s,
            v: t.u,
        })
    }
}

fn svd_tall(a: &ComplexMatrix) -> Result<Svd> {
    let m = a.rows();
    let n = a.cols();
    debug_assert!(m >= n);
    let mut b = a.clone();
    let mut v = ComplexMatrix::identity(n);

    let tol = 1e-15;
    let max_sweeps = 60;
    let mut converged = false;
    for _sweep in 0..max_sweeps {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = Complex64::default();
                for i in 0..m {
                    let bp = b[(i, p)];
                    let bq = b[(i, q)];
                    app += bp.norm_sqr();
                    aqq += bq.norm_sqr();
                    apq += bp.conj() * bq;
                }
                let denom = (app * aqq).sqrt();
                if denom == 0.0 || apq.norm() <= tol * denom {
                    continue;
                }
                off = off.max(apq.norm() / denom);

                // Complex Jacobi rotation: pull the phase of the coupling
                // into column q, then apply the real rotation diagonalizing
                // [[app, |apq|], [|apq|, aqq]].
                let mag = apq.norm();
                let phase = apq / mag;
                let zeta = (aqq - app) / (2.0 * mag);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * cs;
                // columns: b_p' = cs*b_p - sn*conj(phase)... derived below
                // with b_q~ = conj(phase) * b_q so that b_p* b_q~ = |apq|.
                for i in 0..m {
                    let bp = b[(i, p)];
                    let bq = b[(i, q)] * phase.conj();
                    b[(i, p)] = cs * bp - sn * bq;
                    b[(i, q)] = sn * bp + cs * bq;
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)] * phase.conj();
                    v[(i, p)] = cs * vp - sn * vq;
                    v[(i, q)] = sn * vp + cs * vq;
                }
            }
        }
        if off <= tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence("one-sided Jacobi SVD"));
    }

    // singular values = column norms; sort descending
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|i| b[(i, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());

    let mut u = ComplexMatrix::zeros(m, n);
    let mut vs = ComplexMatrix::zeros(n, n);
    let mut s = vec![0.0; n];
    for (jnew, &jold) in order.iter().enumerate() {
        s[jnew] = norms[jold];
        let mut col = b.column(jold);
        if norms[jold] > 0.0 {
            for z in col.iter_mut() {
                *z /= norms[jold];
            }
        }
        u.set_column(jnew, &col);
        let vcol = v.column(jold);
        vs.set_column(jnew, &vcol);
    }
    // deterministic orthonormal completion for exactly-zero columns
    complete_null_columns(&mut u, &s);
    Ok(Svd { u, s, v: vs })
}

/// Replaces `U` columns whose singular value vanished with unit vectors
/// orthogonal to the rest, built from identity columns.
fn complete_null_columns(u: &mut ComplexMatrix, s: &[f64]) {
    let m = u.rows();
    for j in 0..s.len() {
        if s[j] > 0.0 {
            continue;
        }
        let mut chosen = None;
        for seed in 0..m {
            let mut cand = vec![Complex64::default(); m];
            cand[seed] = Complex64::new(1.0, 0.0);
            for _pass in 0..2 {
                for k in 0..s.len() {
                    if k == j {
                        continue;
                    }
                    let col = u.column(k);
                    let coef = crate::linalg::dense::vec_dot(&col, &cand);
                    for i in 0..m {
                        cand[i] -= coef * col[i];
                    }
                }
            }
            let nrm = cand.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if nrm > 1e-3 {
                for z in cand.iter_mut() {
                    *z /= nrm;
                }
                chosen = Some(cand);
                break;
            }
        }
        if let Some(cand) = chosen {
            u.set_column(j, &cand);
        }
    }
}
