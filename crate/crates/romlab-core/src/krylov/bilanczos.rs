//! Two-sided (bi-orthogonal) Lanczos tridiagonalization.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::dense::{vec_dot, vec_norm, ComplexMatrix};
use crate::linalg::tol::{TOL_BREAKDOWN, TOL_DEFLATE, TOL_NEAR_BREAKDOWN};

/// How a bi-Lanczos run ended early or nearly did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BreakdownKind {
    /// A residual vector vanished: an invariant subspace was found and the
    /// factorization up to that step is exact.
    Lucky,
    /// The biorthogonality product `w~* v~` vanished while both residuals
    /// were healthy; the recurrence cannot continue.
    Serious,
    /// The product came within the warning band; the run completed but the
    /// factors deserve suspicion.
    NearBreakdown,
}

/// Bi-Lanczos factorization of the pair `(K_k(A, b), K_k(A*, c))`.
///
/// Columns of `v` and `w` are the two bases with `w_j* v_i = delta_ij`;
/// `v_1 = b/||b||` and `w_1` is `c` scaled so `w_1* v_1 = 1`. The recurrence
/// normalization keeps every `gamma_j` real positive (`gamma_j = ||v~||`) and
/// lets `beta_j` carry the remaining scaling. On completion `v` and `w` hold
/// `k+1` columns and the coefficient lists hold `k` entries each; `t` is the
/// `k x k` tridiagonal with diagonal `alphas`, superdiagonal `betas`, and
/// subdiagonal `gammas` (the trailing `beta_k`/`gamma_k` belong to the
/// residual terms of the factorization identities). On breakdown at step `j`
/// the bases hold `j` columns and `t` is `j x j`.
#[derive(Debug, Clone)]
pub struct BiLanczosFactorization {
    pub v: ComplexMatrix,
    pub w: ComplexMatrix,
    pub alphas: Vec<Complex64>,
    pub betas: Vec<Complex64>,
    pub gammas: Vec<f64>,
    pub t: ComplexMatrix,
    pub breakdown_step: Option<usize>,
    pub breakdown_kind: Option<BreakdownKind>,
}

impl BiLanczosFactorization {
    pub fn steps(&self) -> usize {
        self.t.rows()
    }

    /// First `m` columns of the right basis.
    pub fn basis_v(&self) -> ComplexMatrix {
        self.v.column_block(0, self.steps())
    }

    /// First `m` columns of the left basis.
    pub fn basis_w(&self) -> ComplexMatrix {
        self.w.column_block(0, self.steps())
    }
}

/// Runs `k` steps of bi-Lanczos on `(A, b, c)`.
///
/// Fails with `ImmediateBreakdown` when `c* b = 0` (no biorthogonal bases
/// exist for the two one-dimensional starting spaces). Encountered
/// breakdowns are reported in the factorization rather than as errors: they
/// are legitimate outcomes of the recurrence.
pub fn bilanczos(
    a: &ComplexMatrix,
    b: &[Complex64],
    c: &[Complex64],
    k: usize,
) -> Result<BiLanczosFactorization> {
    let n = a.rows();
    if !a.is_square() || b.len() != n || c.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "bilanczos needs square A with matching b, c; got {}x{}, |b| = {}, |c| = {}",
            a.rows(),
            a.cols(),
            b.len(),
            c.len()
        )));
    }
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange(format!(
            "bilanczos steps must satisfy 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    let bnorm = vec_norm(b);
    let cnorm = vec_norm(c);
    if bnorm == 0.0 || cnorm == 0.0 {
        return Err(Error::ZeroStartVector);
    }
    let cb = vec_dot(c, b);
    if cb.norm() < TOL_BREAKDOWN * bnorm * cnorm {
        return Err(Error::ImmediateBreakdown);
    }
    let scale = a.norm_frobenius().max(f64::MIN_POSITIVE);

    let v1: Vec<Complex64> = b.iter().map(|z| z / bnorm).collect();
    // w_1 = s c with w_1* v_1 = 1
    let s = (Complex64::new(1.0, 0.0) / vec_dot(c, &v1)).conj();
    let w1: Vec<Complex64> = c.iter().map(|z| z * s).collect();

    let mut vs: Vec<Vec<Complex64>> = vec![v1];
    let mut ws: Vec<Vec<Complex64>> = vec![w1];
    let mut alphas: Vec<Complex64> = Vec::with_capacity(k);
    let mut betas: Vec<Complex64> = Vec::with_capacity(k);
    let mut gammas: Vec<f64> = Vec::with_capacity(k);
    let mut breakdown_step = None;
    let mut breakdown_kind = None;

    for j in 0..k {
        let vj = &vs[j];
        let wj = &ws[j];
        let av = a.mul_vec(vj);
        let alpha = vec_dot(wj, &av);
        alphas.push(alpha);

        // residuals of the three-term recurrences
        let mut vt = av;
        for (x, vi) in vt.iter_mut().zip(vj) {
            *x -= alpha * vi;
        }
        if j > 0 {
            let beta_prev = betas[j - 1];
            for (x, vi) in vt.iter_mut().zip(&vs[j - 1]) {
                *x -= beta_prev * vi;
            }
        }
        let mut wt = a.adjoint_mul_vec(wj);
        for (x, wi) in wt.iter_mut().zip(wj) {
            *x -= alpha.conj() * wi;
        }
        if j > 0 {
            let gamma_prev = Complex64::new(gammas[j - 1], 0.0);
            for (x, wi) in wt.iter_mut().zip(&ws[j - 1]) {
                *x -= gamma_prev * wi;
            }
        }

        let nv = vec_norm(&vt);
        let nw = vec_norm(&wt);
        if nv < TOL_DEFLATE * scale || nw < TOL_DEFLATE * scale * vec_norm(wj) {
            breakdown_step = Some(j + 1);
            breakdown_kind = Some(BreakdownKind::Lucky);
            break;
        }
        let delta = vec_dot(&wt, &vt);
        // Breakdown scale: the coupling is numerically zero when it falls
        // below the attainable accuracy of its own inner product, which is
        // set by the summand magnitudes, not by ||v~|| ||w~||. Legitimate
        // biorthogonal pairs can be arbitrarily unbalanced, so the norm
        // product would flag healthy recurrences.
        let coupling_scale: f64 = wt
            .iter()
            .zip(&vt)
            .map(|(w, v)| w.norm() * v.norm())
            .sum::<f64>()
            .max(f64::MIN_POSITIVE);
        let rel = delta.norm() / coupling_scale;
        if rel < TOL_BREAKDOWN {
            breakdown_step = Some(j + 1);
            breakdown_kind = Some(BreakdownKind::Serious);
            break;
        }
        if rel < TOL_NEAR_BREAKDOWN && breakdown_kind.is_none() {
            breakdown_step = Some(j + 1);
            breakdown_kind = Some(BreakdownKind::NearBreakdown);
        }

        let gamma = nv;
        let beta = delta / gamma;
        gammas.push(gamma);
        betas.push(beta);
        vs.push(vt.iter().map(|z| z / gamma).collect());
        let conj_beta = beta.conj();
        ws.push(wt.iter().map(|z| z / conj_beta).collect());
    }

    let m = alphas.len();
    let t = ComplexMatrix::from_fn(m, m, |i, j| {
        if i == j {
            alphas[i]
        } else if j == i + 1 {
            betas[i]
        } else if i == j + 1 {
            Complex64::new(gammas[j], 0.0)
        } else {
            Complex64::default()
        }
    });
    // on early termination the last attempted residual pair never became
    // basis vectors, so the stored bases end at column m; otherwise they
    // carry the trailing v_{k+1}, w_{k+1}
    let v = ComplexMatrix::from_columns(&vs);
    let w = ComplexMatrix::from_columns(&ws);
    Ok(BiLanczosFactorization {
        v,
        w,
        alphas,
        betas,
        gammas,
        t,
        breakdown_step,
        breakdown_kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::tol::TOL_ARN;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn e1(n: usize) -> Vec<Complex64> {
        let mut v = vec![Complex64::default(); n];
        v[0] = c(1.0, 0.0);
        v
    }

    fn hermitian_tridiag(n: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, n, |i, j| {
            if i == j {
                c(-2.0, 0.0)
            } else if i.abs_diff(j) == 1 {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
    }

    #[test]
    fn orthogonal_starting_vectors_break_immediately() {
        let a = hermitian_tridiag(4);
        let b = e1(4);
        let mut cv = vec![Complex64::default(); 4];
        cv[1] = c(1.0, 0.0);
        // c* b = 0
        assert!(matches!(
            bilanczos(&a, &b, &cv, 2),
            Err(Error::ImmediateBreakdown)
        ));
    }

    #[test]
    fn hermitian_with_equal_vectors_reduces_to_symmetric_lanczos() {
        let n = 12;
        let a = hermitian_tridiag(n);
        let b: Vec<Complex64> = (0..n)
            .map(|i| c(((i * i + 1) as f64).sin() + 1.5, 0.0))
            .collect();
        let f = bilanczos(&a, &b, &b, 5).unwrap();
        assert!(f.breakdown_step.is_none());
        // W = V to high accuracy
        assert!(f.w.sub(&f.v).norm_frobenius() < 1e-10 * f.v.norm_frobenius());
        // T Hermitian tridiagonal
        assert!(f.t.hermitian_defect() < 1e-10 * f.t.norm_frobenius());
        // factorization identity (17a): A V_k = V_k T + gamma_k v_{k+1} e_k*
        let m = f.steps();
        let av = a.mul(&f.basis_v());
        let mut rhs = f.basis_v().mul(&f.t);
        let vk1 = f.v.column(m);
        let gk = f.gammas[m - 1];
        for i in 0..n {
            rhs[(i, m - 1)] += c(gk, 0.0) * vk1[i];
        }
        assert!(av.sub(&rhs).norm_frobenius() <= TOL_ARN * a.norm_frobenius());
    }

    #[test]
    fn adjoint_side_identity_holds() {
        // (17b): A* W_k = W_k T* + conj(beta_k) w_{k+1} e_k*
        let n = 10;
        let a = ComplexMatrix::from_fn(n, n, |i, j| {
            let k = (i * n + j) as u64;
            c(
                (k.wrapping_mul(48271).wrapping_add(7) % 512) as f64 / 256.0 - 1.0,
                (k.wrapping_mul(69621).wrapping_add(13) % 512) as f64 / 256.0 - 1.0,
            )
        });
        let b: Vec<Complex64> = (0..n).map(|i| c(1.0 + i as f64 * 0.1, -0.2)).collect();
        let cv: Vec<Complex64> = (0..n).map(|i| c(0.5, 0.3 * (i as f64 + 1.0))).collect();
        let f = bilanczos(&a, &b, &cv, 4).unwrap();
        assert!(f.breakdown_step.is_none(), "{:?}", f.breakdown_kind);
        let m = f.steps();
        let ah_w = a.adjoint().mul(&f.basis_w());
        let mut rhs = f.basis_w().mul(&f.t.adjoint());
        let wk1 = f.w.column(m);
        let bk = f.betas[m - 1].conj();
        for i in 0..n {
            rhs[(i, m - 1)] += bk * wk1[i];
        }
        assert!(
            ah_w.sub(&rhs).norm_frobenius() <= 1e-8 * ah_w.norm_frobenius().max(1.0),
            "adjoint identity defect {}",
            ah_w.sub(&rhs).norm_frobenius()
        );
        // biorthogonality of the full bases
        let prod = f.w.adjoint().mul(&f.v);
        let g = prod.sub(&ComplexMatrix::identity(m + 1));
        let wv_scale = (0..=m)
            .map(|j| vec_norm(&f.w.column(j)) * vec_norm(&f.v.column(j)))
            .fold(1.0f64, f64::max);
        assert!(g.norm_frobenius() < 1e-9 * wv_scale);
    }

    #[test]
    fn gammas_real_positive_and_unit_v_columns() {
        let n = 9;
        let a = ComplexMatrix::from_fn(n, n, |i, j| {
            let k = (i * n + j) as u64;
            c(
                (k.wrapping_mul(2654435761).wrapping_add(3) % 256) as f64 / 128.0 - 1.0,
                0.0,
            )
        });
        let b: Vec<Complex64> = (0..n)
            .map(|i| c((i as f64 * 0.7).cos() + 1.2, 0.0))
            .collect();
        let cv: Vec<Complex64> = (0..n).map(|i| c(1.0 / (1.0 + i as f64), 0.0)).collect();
        let f = bilanczos(&a, &b, &cv, 4).unwrap();
        for g in &f.gammas {
            assert!(*g > 0.0);
        }
        for j in 0..f.v.cols() {
            assert!((vec_norm(&f.v.column(j)) - 1.0).abs() < 1e-13);
        }
        // w_j* v_j = 1
        for j in 0..f.steps() {
            let d = vec_dot(&f.w.column(j), &f.v.column(j));
            assert!((d - c(1.0, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn oblique_projection_reproduces_tridiagonal() {
        // project_oblique with the bi-Lanczos bases must rebuild T; on the
        // Hermitian reference matrix with b = c = e_1 this is the symmetric
        // Lanczos factorization
        let n = 16;
        let a = hermitian_tridiag(n);
        let f = bilanczos(&a, &e1(n), &e1(n), 6).unwrap();
        assert!(f.breakdown_step.is_none());
        let sys = crate::system::LtiSystem::siso(
            a.clone(),
            &e1(n),
            &e1(n),
            crate::system::Domain::Continuous,
        )
        .unwrap();
        let rom = crate::system::project_oblique(&sys, &f.basis_v(), &f.basis_w()).unwrap();
        assert!(
            rom.ar.sub(&f.t).norm_frobenius() <= 1e-10 * a.norm_frobenius(),
            "projected matrix deviates from T by {}",
            rom.ar.sub(&f.t).norm_frobenius()
        );

        // and on a generic complex pair
        let m = 10;
        let b: Vec<Complex64> = (0..m).map(|i| c(1.0 + 0.3 * i as f64, -0.1)).collect();
        let cv: Vec<Complex64> = (0..m).map(|i| c(0.4, 0.2 * (i as f64 - 3.0))).collect();
        let g = ComplexMatrix::from_fn(m, m, |i, j| {
            let k = (i * m + j) as u64;
            c(
                (k.wrapping_mul(48271).wrapping_add(19) % 512) as f64 / 256.0 - 1.0,
                (k.wrapping_mul(69621).wrapping_add(5) % 512) as f64 / 256.0 - 1.0,
            )
        });
        let f = bilanczos(&g, &b, &cv, 4).unwrap();
        assert!(f.breakdown_step.is_none(), "{:?}", f.breakdown_kind);
        let sysg =
            crate::system::LtiSystem::siso(g.clone(), &b, &cv, crate::system::Domain::Continuous)
                .unwrap();
        let rom = crate::system::project_oblique(&sysg, &f.basis_v(), &f.basis_w()).unwrap();
        assert!(rom.ar.sub(&f.t).norm_frobenius() <= 1e-10 * g.norm_frobenius());
    }

    #[test]
    fn invariant_subspace_is_lucky_breakdown() {
        let a = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
        let b = vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)];
        // span{b, Ab} = span{e_1, e_2} is invariant, so the residual at the
        // second step vanishes
        let f = bilanczos(&a, &b, &b, 3).unwrap();
        assert_eq!(f.breakdown_kind, Some(BreakdownKind::Lucky));
        assert_eq!(f.breakdown_step, Some(2));
        assert_eq!(f.steps(), 2);
    }
}
