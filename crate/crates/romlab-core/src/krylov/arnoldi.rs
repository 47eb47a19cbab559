//! Arnoldi factorizations: plain, shift-invert, and block.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::dense::{vec_dot, vec_norm, ComplexMatrix};
use crate::linalg::tol::TOL_DEFLATE;
use crate::linalg::{operator_norm, LuFactorization};

/// Arnoldi relation `A V_m = V_{m+1} Hess` built with modified Gram-Schmidt
/// plus one full reorthogonalization pass per step.
///
/// Without breakdown, `v` is `n x (m+1)` and `hess` is `(m+1) x m` for the
/// requested `m = k` steps. When the residual direction at step `j` falls
/// below the deflation threshold an invariant subspace has been found:
/// `breakdown_step = Some(j)`, `v` is `n x j`, and `hess` is the square
/// `j x j` reduced matrix (the relation then holds with zero residual).
/// Subdiagonal entries are kept real nonnegative; entries below the first
/// subdiagonal are exactly zero.
#[derive(Debug, Clone)]
pub struct ArnoldiFactorization {
    pub v: ComplexMatrix,
    pub hess: ComplexMatrix,
    pub breakdown_step: Option<usize>,
}

impl ArnoldiFactorization {
    /// Number of completed steps `m`.
    pub fn steps(&self) -> usize {
        self.hess.cols()
    }

    /// Orthonormal basis `V_m` of the Krylov subspace (first `m` columns).
    pub fn basis(&self) -> ComplexMatrix {
        self.v.column_block(0, self.steps())
    }

    /// Leading `m x m` block of the Hessenberg factor, equal to `V_m* A V_m`.
    pub fn reduced(&self) -> ComplexMatrix {
        self.hess.principal_submatrix(self.steps(), self.steps())
    }
}

fn arnoldi_operator(
    apply: &mut dyn FnMut(&[Complex64]) -> Vec<Complex64>,
    n: usize,
    b: &[Complex64],
    k: usize,
    scale_hint: Option<f64>,
) -> Result<ArnoldiFactorization> {
    let bnorm = vec_norm(b);
    if bnorm == 0.0 {
        return Err(Error::ZeroStartVector);
    }
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange(format!(
            "arnoldi steps must satisfy 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(k + 1);
    basis.push(b.iter().map(|z| z / bnorm).collect());
    let mut h = vec![vec![Complex64::default(); k]; k + 1];
    let mut scale = scale_hint.unwrap_or(0.0);
    let mut breakdown_step = None;
    let mut steps = 0;

    for j in 0..k {
        let mut w = apply(&basis[j]);
        scale = scale.max(vec_norm(&w));
        // MGS plus one reorthogonalization pass
        for _pass in 0..2 {
            for (i, q) in basis.iter().enumerate() {
                let coef = vec_dot(q, &w);
                h[i][j] += coef;
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= coef * qi;
                }
            }
        }
        let res = vec_norm(&w);
        steps = j + 1;
        if res < TOL_DEFLATE * scale.max(f64::MIN_POSITIVE) {
            breakdown_step = Some(j + 1);
            break;
        }
        h[j + 1][j] = Complex64::new(res, 0.0);
        for z in w.iter_mut() {
            *z /= res;
        }
        basis.push(w);
    }

    let rows = if breakdown_step.is_some() {
        steps
    } else {
        steps + 1
    };
    let v = ComplexMatrix::from_columns(&basis[..rows]);
    let hess = ComplexMatrix::from_fn(rows, steps, |i, j| h[i][j]);
    Ok(ArnoldiFactorization {
        v,
        hess,
        breakdown_step,
    })
}

/// Arnoldi factorization of `K_k(A, b)`.
pub fn arnoldi(a: &ComplexMatrix, b: &[Complex64], k: usize) -> Result<ArnoldiFactorization> {
    if !a.is_square() || a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "arnoldi needs square A matching b, got {}x{} and |b| = {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    let scale = operator_norm(a)?;
    arnoldi_operator(&mut |x| a.mul_vec(x), a.rows(), b, k, Some(scale))
}

/// Arnoldi factorization of `K_k((mu I - A)^{-1}, b)`, applying the
/// resolvent implicitly through one LU factorization.
pub fn shift_invert_basis(
    a: &ComplexMatrix,
    b: &[Complex64],
    mu: Complex64,
    k: usize,
) -> Result<ArnoldiFactorization> {
    if !a.is_square() || a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "shift_invert_basis needs square A matching b, got {}x{} and |b| = {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    let shifted = a.scale(Complex64::new(-1.0, 0.0)).shift(-mu); // mu I - A
    let lu = LuFactorization::new(&shifted)?;
    arnoldi_operator(&mut |x| lu.solve_vec(x), a.rows(), b, k, None)
}

/// Orthonormal basis of the block Krylov subspace
/// `range([B, AB, ..., A^{blocks-1} B])` with rank-revealing deflation.
pub fn block_arnoldi(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    blocks: usize,
) -> Result<(ComplexMatrix, usize)> {
    if !a.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "block_arnoldi needs square A matching B, got {}x{} and B with {} rows",
            a.rows(),
            a.cols(),
            b.rows()
        )));
    }
    if blocks == 0 {
        return Err(Error::IndexOutOfRange("blocks must be >= 1".into()));
    }
    let scale = operator_norm(a)?.max(f64::MIN_POSITIVE);

    let mut accepted: Vec<Vec<Complex64>> = Vec::new();
    let mut current: Vec<Vec<Complex64>> = Vec::new();
    // seed block
    for j in 0..b.cols() {
        let mut col = b.column(j);
        let norm0 = vec_norm(&col);
        if norm0 == 0.0 {
            continue;
        }
        for _pass in 0..2 {
            for q in &accepted {
                let coef = vec_dot(q, &col);
                for (ci, qi) in col.iter_mut().zip(q) {
                    *ci -= coef * qi;
                }
            }
        }
        let rem = vec_norm(&col);
        if rem < TOL_DEFLATE * norm0 {
            continue;
        }
        for z in col.iter_mut() {
            *z /= rem;
        }
        accepted.push(col.clone());
        current.push(col);
    }
    if accepted.is_empty() {
        return Err(Error::ZeroStartVector);
    }

    for _step in 1..blocks {
        let mut next: Vec<Vec<Complex64>> = Vec::new();
        for col in &current {
            let mut w = a.mul_vec(col);
            for _pass in 0..2 {
                for q in &accepted {
                    let coef = vec_dot(q, &w);
                    for (wi, qi) in w.iter_mut().zip(q) {
                        *wi -= coef * qi;
                    }
                }
            }
            let rem = vec_norm(&w);
            if rem < TOL_DEFLATE * scale {
                continue; // this direction deflated into the current span
            }
            for z in w.iter_mut() {
                *z /= rem;
            }
            accepted.push(w.clone());
            next.push(w);
        }
        if next.is_empty() {
            break; // invariant subspace reached
        }
        current = next;
    }

    let rank = accepted.len();
    Ok((ComplexMatrix::from_columns(&accepted), rank))
}
