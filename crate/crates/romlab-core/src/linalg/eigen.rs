//! Dense complex eigensolvers.
//!
//! Two paths serve the whole crate: a Hermitian solver (Householder
//! tridiagonalization followed by implicit-shift QL) and a general solver
//! (radix-2 balancing, Householder Hessenberg reduction, single-shift complex
//! QR down to Schur form, eigenvectors by back-substitution on the triangular
//! factor). Both are O(n^3) dense algorithms; the crate targets n up to a few
//! hundred.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::dense::ComplexMatrix;
use crate::linalg::tol::TOL_HERM;

/// Eigenvalues in canonical order with optional unit-norm eigenvectors.
///
/// Canonical order is descending real part with ties broken by descending
/// imaginary part; Hermitian results are therefore descending by value.
/// `residual` is `max_j ||A v_j - lambda_j v_j||` over the returned
/// eigenpairs, or 0 when vectors were not requested.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<Complex64>,
    pub vectors: Option<ComplexMatrix>,
    pub residual: f64,
}

/// Unitary Schur factorization `A = Q T Q*` with `T` upper triangular.
#[derive(Debug, Clone)]
pub struct SchurDecomposition {
    pub q: ComplexMatrix,
    pub t: ComplexMatrix,
}

/// Total order used for eigenvalue output: descending real part, ties by
/// descending imaginary part.
pub fn canonical_cmp(a: &Complex64, b: &Complex64) -> std::cmp::Ordering {
    b.re.partial_cmp(&a.re)
        .unwrap()
        .then(b.im.partial_cmp(&a.im).unwrap())
}

fn max_residual(a: &ComplexMatrix, values: &[Complex64], vectors: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut worst = 0.0f64;
    for (j, lam) in values.iter().enumerate() {
        let v = vectors.column(j);
        let av = a.mul_vec(&v);
        let mut acc = 0.0;
        for i in 0..n {
            acc += (av[i] - lam * v[i]).norm_sqr();
        }
        worst = worst.max(acc.sqrt());
    }
    worst
}

// ---------------------------------------------------------------------------
// Hermitian path
// ---------------------------------------------------------------------------

/// Eigendecomposition of a Hermitian matrix.
///
/// Checks the symmetry defect against `TOL_HERM * ||M||_F` first. Eigenvalues
/// come back real (as complex values with zero imaginary part) in descending
/// order; eigenvectors, when requested, are orthonormal columns.
pub fn hermitian_eigen(m: &ComplexMatrix, want_vectors: bool) -> Result<EigenDecomposition> {
    let scale = m.norm_frobenius();
    let defect = hermitian_defect_checked(m)?;
    if defect > TOL_HERM * scale.max(1.0) {
        return Err(Error::NotHermitian {
            defect,
            tol: TOL_HERM * scale.max(1.0),
        });
    }
    let (mut d, mut e, mut q) = tridiagonalize(m, want_vectors);
    tql2(&mut d, &mut e, q.as_mut())?;

    // sort descending, permuting vectors alongside
    let n = d.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[j].partial_cmp(&d[i]).unwrap());
    let values: Vec<Complex64> = order.iter().map(|&i| Complex64::new(d[i], 0.0)).collect();
    let vectors = q.map(|qm| {
        let mut sorted = ComplexMatrix::zeros(n, n);
        for (jnew, &jold) in order.iter().enumerate() {
            let col = qm.column(jold);
            sorted.set_column(jnew, &col);
        }
        sorted
    });
    let residual = vectors
        .as_ref()
        .map(|v| max_residual(m, &values, v))
        .unwrap_or(0.0);
    Ok(EigenDecomposition {
        values,
        vectors,
        residual,
    })
}

/// Descending real eigenvalues of a Hermitian matrix (no vectors).
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let dec = hermitian_eigen(m, false)?;
    Ok(dec.values.iter().map(|z| z.re).collect())
}

/// Largest eigenvalue of a Hermitian matrix. Used heavily by the numerical
/// range angle sweeps, so it skips eigenvector accumulation.
pub fn hermitian_lambda_max(m: &ComplexMatrix) -> Result<f64> {
    let (mut d, mut e, _) = tridiagonalize(m, false);
    tql2(&mut d, &mut e, None)?;
    Ok(d.iter().cloned().fold(f64::NEG_INFINITY, f64::max))
}

fn hermitian_defect_checked(m: &ComplexMatrix) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "hermitian_eigen needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m.hermitian_defect())
}

/// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
/// form. Returns the diagonal, the (nonnegative real) subdiagonal, and the
/// accumulated unitary when requested.
fn tridiagonalize(m: &ComplexMatrix, want_q: bool) -> (Vec<f64>, Vec<f64>, Option<ComplexMatrix>) {
    let n = m.rows();
    let mut w = m.clone();
    let mut q = want_q.then(|| ComplexMatrix::identity(n));
    let mut e = vec![Complex64::default(); n.saturating_sub(1)];

    let mut u = vec![Complex64::default(); n];
    let mut p = vec![Complex64::default(); n];
    for k in 0..n.saturating_sub(1) {
        // Householder vector for column k below the diagonal
        let mut xnorm_sq = 0.0;
        for i in k + 1..n {
            xnorm_sq += w[(i, k)].norm_sqr();
        }
        let xnorm = xnorm_sq.sqrt();
        if xnorm == 0.0 {
            e[k] = Complex64::default();
            continue;
        }
        let x0 = w[(k + 1, k)];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let beta = -phase * xnorm;
        e[k] = beta;

        for i in k + 1..n {
            u[i] = w[(i, k)];
        }
        u[k + 1] -= beta;
        let unorm_sq: f64 = (k + 1..n).map(|i| u[i].norm_sqr()).sum();
        if unorm_sq == 0.0 {
            continue;
        }
        let tau = 2.0 / unorm_sq;

        // Hermitian rank-2 update: W <- W - u q* - q u* restricted to the
        // trailing block, with p = tau W u and q = p - (tau/2)(u* p) u.
        for i in k + 1..n {
            let mut acc = Complex64::default();
            for j in k + 1..n {
                acc += w[(i, j)] * u[j];
            }
            p[i] = acc * tau;
        }
        let upd: Complex64 = (k + 1..n)
            .map(|i| u[i].conj() * p[i])
            .fold(Complex64::default(), |a, b| a + b);
        let kappa = upd * (tau / 2.0);
        for i in k + 1..n {
            p[i] -= kappa * u[i];
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let delta = u[i] * p[j].conj() + p[i] * u[j].conj();
                w[(i, j)] -= delta;
            }
        }
        w[(k + 1, k)] = beta;
        for i in k + 2..n {
            w[(i, k)] = Complex64::default();
        }

        if let Some(qm) = q.as_mut() {
            // Q <- Q (I - tau u u*)
            for r in 0..n {
                let mut acc = Complex64::default();
                for i in k + 1..n {
                    acc += qm[(r, i)] * u[i];
                }
                acc *= tau;
                for i in k + 1..n {
                    let ui = u[i];
                    qm[(r, i)] -= acc * ui.conj();
                }
            }
        }
    }

    // phase-scrub the complex subdiagonal to nonnegative real entries
    let mut d = vec![0.0; n];
    for i in 0..n {
        d[i] = w[(i, i)].re;
    }
    let mut e_real = vec![0.0; n.saturating_sub(1)];
    let mut cumulative = Complex64::new(1.0, 0.0);
    for j in 0..n.saturating_sub(1) {
        let mag = e[j].norm();
        e_real[j] = mag;
        let phase = if mag == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            e[j] / mag
        };
        // column j+1 of the similarity picks up the cumulative phase
        cumulative *= phase;
        if let Some(qm) = q.as_mut() {
            for r in 0..n {
                let val = qm[(r, j + 1)] * cumulative;
                qm[(r, j + 1)] = val;
            }
        }
    }
    (d, e_real, q)
}

/// Implicit-shift QL iteration on a real symmetric tridiagonal matrix,
/// accumulating the (complex) transform columns when given.
fn tql2(d: &mut [f64], e: &mut [f64], mut q: Option<&mut ComplexMatrix>) -> Result<()> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    let mut work_e = vec![0.0; n];
    work_e[..n - 1].copy_from_slice(e);

    for l in 0..n {
        let mut iter = 0;
        loop {
            // find small subdiagonal element
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if work_e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::NoConvergence("tridiagonal QL iteration"));
            }
            // shift
            let mut g = (d[l + 1] - d[l]) / (2.0 * work_e[l]);
            let mut r = g.hypot(1.0);
            let sign_r = if g >= 0.0 { r } else { -r };
            g = d[m] - d[l] + work_e[l] / (g + sign_r);
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            for i in (l..m).rev() {
                let mut f = s * work_e[i];
                let b = c * work_e[i];
                r = f.hypot(g);
                work_e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    work_e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(qm) = q.as_deref_mut() {
                    let rows = qm.rows();
                    for row in 0..rows {
                        f = qm[(row, i + 1)].re;
                        let fim = qm[(row, i + 1)].im;
                        let vre = qm[(row, i)].re;
                        let vim = qm[(row, i)].im;
                        qm[(row, i + 1)] = Complex64::new(s * vre + c * f, s * vim + c * fim);
                        qm[(row, i)] = Complex64::new(c * vre - s * f, c * vim - s * fim);
                    }
                }
            }
            if r == 0.0 && m > l + 1 {
                continue;
            }
            d[l] -= p;
            work_e[l] = g;
            work_e[m] = 0.0;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// General path
// ---------------------------------------------------------------------------

/// Eigendecomposition of a general square complex matrix.
///
/// The matrix is balanced by a radix-2 diagonal similarity, reduced to upper
/// Hessenberg form, then iterated to Schur form with Wilkinson shifts.
/// Eigenvectors come from back-substitution on the triangular factor; for
/// defective matrices the reported residual exposes the loss of accuracy.
pub fn general_eigen(a: &ComplexMatrix) -> Result<EigenDecomposition> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "general_eigen needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let (balanced, scaling) = balance(a);
    let (mut h, mut q) = hessenberg(&balanced, true);
    qr_to_schur(&mut h, q.as_mut())?;
    let q = q.unwrap();

    // eigenvectors of the triangular factor, transformed back
    let tnorm = h.norm_max().max(f64::MIN_POSITIVE);
    let mut vectors = ComplexMatrix::zeros(n, n);
    let mut y = vec![Complex64::default(); n];
    for idx in 0..n {
        let lam = h[(idx, idx)];
        for yi in y.iter_mut() {
            *yi = Complex64::default();
        }
        y[idx] = Complex64::new(1.0, 0.0);
        for j in (0..idx).rev() {
            let mut s = Complex64::default();
            for m in j + 1..=idx {
                s += h[(j, m)] * y[m];
            }
            let mut den = h[(j, j)] - lam;
            if den.norm() < f64::EPSILON * tnorm {
                den = Complex64::new(f64::EPSILON * tnorm, 0.0);
            }
            y[j] = -s / den;
        }
        // v = Q y, then undo balancing and normalize
        let mut v = vec![Complex64::default(); n];
        for m in 0..=idx {
            let ym = y[m];
            if ym == Complex64::default() {
                continue;
            }
            for r in 0..n {
                v[r] += q[(r, m)] * ym;
            }
        }
        for r in 0..n {
            v[r] *= scaling[r];
        }
        let nv = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if nv > 0.0 {
            for z in v.iter_mut() {
                *z /= nv;
            }
        }
        vectors.set_column(idx, &v);
    }

    let mut pairs: Vec<(Complex64, Vec<Complex64>)> =
        (0..n).map(|j| (h[(j, j)], vectors.column(j))).collect();
    pairs.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    let values: Vec<Complex64> = pairs.iter().map(|p| p.0).collect();
    let mut sorted = ComplexMatrix::zeros(n, n);
    for (j, p) in pairs.iter().enumerate() {
        sorted.set_column(j, &p.1);
    }
    let residual = max_residual(a, &values, &sorted);
    Ok(EigenDecomposition {
        values,
        vectors: Some(sorted),
        residual,
    })
}

/// Eigenvalues only, canonical order.
pub fn general_eigenvalues(a: &ComplexMatrix) -> Result<Vec<Complex64>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigenvalues need a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let (balanced, _) = balance(a);
    let (mut h, _) = hessenberg(&balanced, false);
    qr_to_schur(&mut h, None)?;
    let mut values: Vec<Complex64> = (0..h.rows()).map(|j| h[(j, j)]).collect();
    values.sort_by(canonical_cmp);
    Ok(values)
}

/// Unitary Schur factorization (no balancing, so `T` is unitarily similar to
/// `A`; singular values of `zI - A` equal those of `zI - T`).
pub fn schur(a: &ComplexMatrix) -> Result<SchurDecomposition> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "schur needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let (mut h, mut q) = hessenberg(a, true);
    qr_to_schur(&mut h, q.as_mut())?;
    Ok(SchurDecomposition {
        q: q.unwrap(),
        t: h,
    })
}

/// Radix-2 balancing by diagonal similarity. Returns the balanced matrix and
/// the per-row scale factors `s` with `A = S B S^{-1}`, `S = diag(s)`.
fn balance(a: &ComplexMatrix) -> (ComplexMatrix, Vec<f64>) {
    let n = a.rows();
    let mut b = a.clone();
    let mut scale = vec![1.0f64; n];
    let radix: f64 = 2.0;
    for _pass in 0..64 {
        let mut converged = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    r += b[(i, j)].norm();
                    c += b[(j, i)].norm();
                }
            }
            if r == 0.0 || c == 0.0 {
                continue;
            }
            let mut f = 1.0;
            let s = c + r;
            let mut cc = c;
            let mut rr = r;
            while cc < rr / radix {
                cc *= radix;
                rr /= radix;
                f *= radix;
            }
            while cc >= rr * radix {
                cc /= radix;
                rr *= radix;
                f /= radix;
            }
            if (cc + rr) < 0.95 * s && f != 1.0 {
                converged = false;
                scale[i] *= f;
                let inv = 1.0 / f;
                for j in 0..n {
                    b[(i, j)] *= inv;
                }
                for j in 0..n {
                    b[(j, i)] *= f;
                }
            }
        }
        if converged {
            break;
        }
    }
    (b, scale)
}

/// Householder reduction to upper Hessenberg form, optionally accumulating
/// the unitary `Q` with `A = Q H Q*`.
fn hessenberg(a: &ComplexMatrix, want_q: bool) -> (ComplexMatrix, Option<ComplexMatrix>) {
    let n = a.rows();
    let mut h = a.clone();
    let mut q = want_q.then(|| ComplexMatrix::identity(n));
    let mut u = vec![Complex64::default(); n];

    for k in 0..n.saturating_sub(2) {
        let mut xnorm_sq = 0.0;
        for i in k + 1..n {
            xnorm_sq += h[(i, k)].norm_sqr();
        }
        let xnorm = xnorm_sq.sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let beta = -phase * xnorm;
        for i in k + 1..n {
            u[i] = h[(i, k)];
        }
        u[k + 1] -= beta;
        let unorm_sq: f64 = (k + 1..n).map(|i| u[i].norm_sqr()).sum();
        if unorm_sq == 0.0 {
            continue;
        }
        let tau = 2.0 / unorm_sq;

        // left: H <- (I - tau u u*) H on rows k+1.., all columns
        for j in k..n {
            let mut acc = Complex64::default();
            for i in k + 1..n {
                acc += u[i].conj() * h[(i, j)];
            }
            acc *= tau;
            for i in k + 1..n {
                let ui = u[i];
                h[(i, j)] -= ui * acc;
            }
        }
        // right: H <- H (I - tau u u*) on all rows, columns k+1..
        for r in 0..n {
            let mut acc = Complex64::default();
            for i in k + 1..n {
                acc += h[(r, i)] * u[i];
            }
            acc *= tau;
            for i in k + 1..n {
                let ui = u[i];
                h[(r, i)] -= acc * ui.conj();
            }
        }
        if let Some(qm) = q.as_mut() {
            for r in 0..n {
                let mut acc = Complex64::default();
                for i in k + 1..n {
                    acc += qm[(r, i)] * u[i];
                }
                acc *= tau;
                for i in k + 1..n {
                    let ui = u[i];
                    qm[(r, i)] -= acc * ui.conj();
                }
            }
        }
        h[(k + 1, k)] = beta;
        for i in k + 2..n {
            h[(i, k)] = Complex64::default();
        }
    }
    (h, q)
}

/// Complex Givens rotation `[c s; -conj(s) c] [f; g] = [r; 0]` with real `c`.
fn givens(f: Complex64, g: Complex64) -> (f64, Complex64) {
    let gn = g.norm();
    if gn == 0.0 {
        return (1.0, Complex64::default());
    }
    let fn_ = f.norm();
    if fn_ == 0.0 {
        // r = |g|, s takes the phase of conj(g)
        return (0.0, g.conj() / gn);
    }
    let d = (fn_ * fn_ + gn * gn).sqrt();
    let c = fn_ / d;
    let s = (f / fn_) * (g.conj() / d);
    (c, s)
}

/// Single-shift QR iteration driving an upper Hessenberg matrix to upper
/// triangular (Schur) form in place.
fn qr_to_schur(h: &mut ComplexMatrix, mut q: Option<&mut ComplexMatrix>) -> Result<()> {
    let n = h.rows();
    if n == 1 {
        return Ok(());
    }
    let anorm = h.norm_max().max(f64::MIN_POSITIVE);
    let mut hi = n - 1;
    let mut total_iter = 0usize;
    let max_iter = 60 * n;
    let mut since_deflation = 0usize;

    while hi > 0 {
        // deflation scan
        let mut l = hi;
        while l > 0 {
            let s = h[(l - 1, l - 1)].norm() + h[(l, l)].norm();
            let s = if s == 0.0 { anorm } else { s };
            if h[(l, l - 1)].norm() <= f64::EPSILON * s {
                h[(l, l - 1)] = Complex64::default();
                break;
            }
            l -= 1;
        }
        if l == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        total_iter += 1;
        since_deflation += 1;
        if total_iter > max_iter {
            return Err(Error::NoConvergence("Hessenberg QR iteration"));
        }

        // shift selection
        let mu = if since_deflation.is_multiple_of(12) {
            // exceptional shift
            h[(hi, hi)] + Complex64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };

        // implicit single-shift sweep over the active window
        let mut x = h[(l, l)] - mu;
        let mut y = h[(l + 1, l)];
        for k in l..hi {
            let (c, s) = givens(x, y);
            let cstart = if k == l { l } else { k - 1 };
            // left rotation on rows k, k+1
            for col in cstart..n {
                let t1 = h[(k, col)];
                let t2 = h[(k + 1, col)];
                h[(k, col)] = c * t1 + s * t2;
                h[(k + 1, col)] = -s.conj() * t1 + c * t2;
            }
            // right rotation on columns k, k+1
            let rend = hi.min(k + 2);
            for row in 0..=rend {
                let t1 = h[(row, k)];
                let t2 = h[(row, k + 1)];
                h[(row, k)] = c * t1 + t2 * s.conj();
                h[(row, k + 1)] = -t1 * s + c * t2;
            }
            if let Some(qm) = q.as_deref_mut() {
                for row in 0..n {
                    let t1 = qm[(row, k)];
                    let t2 = qm[(row, k + 1)];
                    qm[(row, k)] = c * t1 + t2 * s.conj();
                    qm[(row, k + 1)] = -t1 * s + c * t2;
                }
            }
            if k + 1 < hi {
                x = h[(k + 1, k)];
                y = h[(k + 2, k)];
            }
        }
    }

    // enforce exact triangularity below the diagonal
    for i in 1..n {
        for j in 0..i {
            h[(i, j)] = Complex64::default();
        }
    }
    Ok(())
}

/// Eigenvalue of `[[a, b], [c, d]]` closer to `d`.
fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let tr_half = (a + d) * 0.5;
    let det = a * d - b * c;
    let disc = (tr_half * tr_half - det).sqrt();
    let r1 = tr_half + disc;
    let r2 = tr_half - disc;
    if (r1 - d).norm() <= (r2 - d).norm() {
        r1
    } else {
        r2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::dense::vec_norm;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn toeplitz_tridiag(n: usize, sub: f64, diag: f64, sup: f64) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, n, |i, j| {
            if i == j {
                c(diag, 0.0)
            } else if j == i + 1 {
                c(sup, 0.0)
            } else if i == j + 1 {
                c(sub, 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
    }

    #[test]
    fn hermitian_small_known_spectrum() {
        // [[ -1, 2], [2, -1]] has spectrum {1, -3}
        let m = ComplexMatrix::from_real(2, 2, &[-1.0, 2.0, 2.0, -1.0]).unwrap();
        let dec = hermitian_eigen(&m, true).unwrap();
        assert!((dec.values[0].re - 1.0).abs() < 1e-12);
        assert!((dec.values[1].re + 3.0).abs() < 1e-12);
        assert!(dec.residual < 1e-12);
    }

    #[test]
    fn hermitian_identity() {
        let dec = hermitian_eigen(&ComplexMatrix::identity(3), true).unwrap();
        for v in &dec.values {
            assert!((v.re - 1.0).abs() < 1e-14 && v.im == 0.0);
        }
        // vectors orthonormal
        let q = dec.vectors.unwrap();
        let g = q.adjoint().mul(&q).sub(&ComplexMatrix::identity(3));
        assert!(g.norm_frobenius() < 1e-12);
    }

    #[test]
    fn hermitian_part_of_toeplitz_matches_cosines() {
        // Hermitian part of the 8x8 tridiagonal Toeplitz test matrix has
        // eigenvalues -2 + (5/2) cos(j pi / 9).
        let a = toeplitz_tridiag(8, 0.5, -2.0, 2.0);
        let h = a.add(&a.adjoint()).scale(c(0.5, 0.0));
        let vals = hermitian_eigenvalues(&h).unwrap();
        for (j, v) in vals.iter().enumerate() {
            let expect = -2.0 + 2.5 * ((j as f64 + 1.0) * std::f64::consts::PI / 9.0).cos();
            assert!(
                (v - expect).abs() < 1e-10,
                "mu_{} = {v}, expected {expect}",
                j + 1
            );
        }
    }

    #[test]
    fn hermitian_complex_entries() {
        let m = ComplexMatrix::new(
            2,
            2,
            vec![c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)],
        )
        .unwrap();
        let dec = hermitian_eigen(&m, true).unwrap();
        assert!((dec.values[0].re - 3.0).abs() < 1e-12);
        assert!((dec.values[1].re - 1.0).abs() < 1e-12);
        assert!(dec.residual < 1e-12);
    }

    #[test]
    fn hermitian_vectors_orthonormal_on_dense_input() {
        let raw = ComplexMatrix::from_fn(9, 9, |i, j| {
            let k = (i * 9 + j) as u64;
            c(
                (k.wrapping_mul(2654435761).wrapping_add(7) % 4096) as f64 / 2048.0 - 1.0,
                (k.wrapping_mul(40503).wrapping_add(13) % 4096) as f64 / 2048.0 - 1.0,
            )
        });
        let h = raw.add(&raw.adjoint()).scale(c(0.5, 0.0));
        let dec = hermitian_eigen(&h, true).unwrap();
        let q = dec.vectors.unwrap();
        let defect = q.adjoint().mul(&q).sub(&ComplexMatrix::identity(9));
        assert!(defect.norm_frobenius() < 1e-12);
        assert!(dec.residual < 1e-12 * h.norm_frobenius().max(1.0));
        // descending order
        for w in dec.values.windows(2) {
            assert!(w[0].re >= w[1].re);
        }
    }

    #[test]
    fn hermitian_rejects_asymmetric() {
        let m = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            hermitian_eigen(&m, false),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn general_toeplitz_matches_cosines() {
        let a = toeplitz_tridiag(8, 0.5, -2.0, 2.0);
        let dec = general_eigen(&a).unwrap();
        for (j, v) in dec.values.iter().enumerate() {
            let expect = -2.0 + 2.0 * ((j as f64 + 1.0) * std::f64::consts::PI / 9.0).cos();
            assert!(
                (v.re - expect).abs() < 1e-10 && v.im.abs() < 1e-10,
                "lambda_{} = {v}",
                j + 1
            );
        }
    }

    #[test]
    fn general_triangular_reads_diagonal() {
        let a = ComplexMatrix::new(
            3,
            3,
            vec![
                c(3.0, 1.0),
                c(5.0, 0.0),
                c(-2.0, 0.0),
                c(0.0, 0.0),
                c(1.0, -1.0),
                c(4.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(-2.0, 0.5),
            ],
        )
        .unwrap();
        let vals = general_eigenvalues(&a).unwrap();
        let mut expect = vec![c(3.0, 1.0), c(1.0, -1.0), c(-2.0, 0.5)];
        expect.sort_by(canonical_cmp);
        for (v, e) in vals.iter().zip(&expect) {
            assert!((v - e).norm() < 1e-10);
        }
    }

    #[test]
    fn general_conjugate_pairs_for_real_input() {
        let a = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, -1.0, 0.0]).unwrap();
        let vals = general_eigenvalues(&a).unwrap();
        assert!((vals[0] - c(0.0, 1.0)).norm() < 1e-12);
        assert!((vals[1] - c(0.0, -1.0)).norm() < 1e-12);
    }

    #[test]
    fn schur_reconstructs() {
        let a = ComplexMatrix::new(
            4,
            4,
            (0..16)
                .map(|k| {
                    c(
                        ((k * 7 + 3) % 11) as f64 - 5.0,
                        ((k * 5 + 1) % 7) as f64 - 3.0,
                    )
                })
                .collect(),
        )
        .unwrap();
        let s = schur(&a).unwrap();
        let recon = s.q.mul(&s.t).mul(&s.q.adjoint());
        assert!(recon.sub(&a).norm_frobenius() < 1e-10 * a.norm_frobenius().max(1.0));
        // T strictly upper triangular below diagonal
        for i in 1..4 {
            for j in 0..i {
                assert_eq!(s.t[(i, j)], Complex64::default());
            }
        }
        // Q unitary
        let g = s.q.adjoint().mul(&s.q).sub(&ComplexMatrix::identity(4));
        assert!(g.norm_frobenius() < 1e-12);
    }

    #[test]
    fn eigenvector_residuals_small_for_diagonalizable() {
        let a = ComplexMatrix::new(
            5,
            5,
            (0..25)
                .map(|k| {
                    c(
                        ((k * 13 + 5) % 17) as f64 - 8.0,
                        ((k * 3 + 2) % 5) as f64 - 2.0,
                    )
                })
                .collect(),
        )
        .unwrap();
        let dec = general_eigen(&a).unwrap();
        assert!(
            dec.residual < 1e-10 * a.norm_frobenius(),
            "residual {} too large",
            dec.residual
        );
        let v = dec.vectors.unwrap();
        for j in 0..5 {
            assert!((vec_norm(&v.column(j)) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn jordan_block_eigenvalues() {
        // defective matrix: eigenvalues still fine even if vectors are not
        let mut a = ComplexMatrix::zeros(6, 6);
        for i in 0..5 {
            a[(i, i + 1)] = c(1.0, 0.0);
        }
        let vals = general_eigenvalues(&a).unwrap();
        for v in vals {
            assert!(v.norm() < 1e-2, "Jordan eigenvalue {v} too far from zero");
        }
    }
}
