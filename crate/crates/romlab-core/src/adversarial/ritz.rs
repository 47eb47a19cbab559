//! Unit-subdiagonal Hessenberg systems with prescribed stage spectra.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::krylov::arnoldi;
use crate::linalg::tol::TOL_ILL_CONDITIONED;
use crate::linalg::{general_eigenvalues, ComplexMatrix};

/// Stage spectra for the prescribed-Ritz construction: the final spectrum
/// (n values) plus an arbitrary k-element spectrum for every Krylov stage
/// `k = 1..n-1`. No conjugation closure is required; complex stages yield a
/// complex matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RitzPrescription {
    pub final_spectrum: Vec<Complex64>,
    pub stage_spectra: Vec<Vec<Complex64>>,
}

impl RitzPrescription {
    pub fn order(&self) -> usize {
        self.final_spectrum.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        if n < 2 {
            return Err(Error::IndexOutOfRange(
                "prescription needs order n >= 2".into(),
            ));
        }
        if self.stage_spectra.len() != n - 1 {
            return Err(Error::IndexOutOfRange(format!(
                "expected {} stage spectra, got {}",
                n - 1,
                self.stage_spectra.len()
            )));
        }
        for (k, stage) in self.stage_spectra.iter().enumerate() {
            if stage.len() != k + 1 {
                return Err(Error::IndexOutOfRange(format!(
                    "stage {} must hold {} values, got {}",
                    k + 1,
                    k + 1,
                    stage.len()
                )));
            }
        }
        Ok(())
    }
}

/// Monic polynomial coefficients (highest degree first) from roots.
fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::default(); coeffs.len() + 1];
        for (i, &ci) in coeffs.iter().enumerate() {
            next[i] += ci;
            next[i + 1] -= ci * r;
        }
        coeffs = next;
    }
    coeffs
}

/// Builds the matrix/vector pair realizing a prescription.
///
/// The matrix is upper Hessenberg with unit subdiagonal and `b = e_1`, so
/// `K_k(A, b) = span{e_1..e_k}` and the stage-`k` projection is the leading
/// principal submatrix. Writing `p_k` for the monic stage characteristic
/// polynomials, the Hessenberg column `k` holds the coordinates of
/// `lambda p_{k-1} - p_k` in the basis `{p_0, ..., p_{k-1}}`; the final
/// column comes from the degree-`n` target polynomial. Coordinates are found
/// by back-substitution on the degrees, exact for integer-coefficient data.
pub fn prescribed_ritz_system(p: &RitzPrescription) -> Result<(ComplexMatrix, Vec<Complex64>)> {
    p.validate()?;
    let n = p.order();

    // polys[k] = char poly of stage k (polys[0] = 1)
    let mut polys: Vec<Vec<Complex64>> = Vec::with_capacity(n + 1);
    polys.push(vec![Complex64::new(1.0, 0.0)]);
    for stage in &p.stage_spectra {
        polys.push(poly_from_roots(stage));
    }
    polys.push(poly_from_roots(&p.final_spectrum));

    let mut a = ComplexMatrix::zeros(n, n);
    for k in 1..=n {
        // q = lambda * p_{k-1} - p_k, degree <= k-1 (leading terms cancel)
        let pk1 = &polys[k - 1];
        let pk = &polys[k];
        let mut q: Vec<Complex64> = vec![Complex64::default(); k];
        // lambda * p_{k-1} contributes its coefficient of lambda^{k-1-i} at
        // q[i]; the leading lambda^k terms of both polynomials cancel
        for (i, &ci) in pk1.iter().enumerate().skip(1) {
            q[i - 1] += ci;
        }
        for (i, &ci) in pk.iter().enumerate().skip(1) {
            q[i - 1] -= ci;
        }
        // q[i] now holds the coefficient of lambda^{k-1-i}

        // expand q in {p_0..p_{k-1}} by degree-descending back-substitution
        let mut coords = vec![Complex64::default(); k];
        for deg in (0..k).rev() {
            let ci = q[k - 1 - deg];
            coords[deg] = ci;
            if ci != Complex64::default() {
                let pd = &polys[deg];
                for (t, &pc) in pd.iter().enumerate() {
                    // pd has degree `deg`; its coefficient of lambda^{deg-t}
                    q[k - 1 - (deg - t)] -= ci * pc;
                }
            }
        }
        for (i, &h) in coords.iter().enumerate() {
            if h.norm() > TOL_ILL_CONDITIONED {
                return Err(Error::IllConditioned {
                    magnitude: h.norm(),
                });
            }
            a[(i, k - 1)] = h;
        }
        if k < n {
            a[(k, k - 1)] = Complex64::new(1.0, 0.0);
        }
    }
    let mut b = vec![Complex64::default(); n];
    b[0] = Complex64::new(1.0, 0.0);
    Ok((a, b))
}

/// Stage-by-stage verification of a prescribed-Ritz system.
#[derive(Debug, Clone, Serialize)]
pub struct RitzVerifyReport {
    /// Max multiset mismatch between the stage-k Ritz values and the
    /// prescribed stage spectrum, for `k = 1..n-1`.
    pub stage_mismatches: Vec<f64>,
    /// Multiset mismatch between the full spectrum and the prescription.
    pub final_mismatch: f64,
}

impl RitzVerifyReport {
    pub fn max_stage_mismatch(&self) -> f64 {
        self.stage_mismatches.iter().cloned().fold(0.0f64, f64::max)
    }
}

/// Greedy multiset distance: repeatedly pairs the globally closest
/// remaining values. Robust against ordering ambiguity of conjugate pairs.
fn multiset_mismatch(computed: &[Complex64], target: &[Complex64]) -> f64 {
    let mut comp: Vec<Complex64> = computed.to_vec();
    let mut targ: Vec<Complex64> = target.to_vec();
    let mut worst = 0.0f64;
    while !comp.is_empty() && !targ.is_empty() {
        let mut best = (0usize, 0usize, f64::INFINITY);
        for (i, &x) in comp.iter().enumerate() {
            for (j, &y) in targ.iter().enumerate() {
                let d = (x - y).norm();
                if d < best.2 {
                    best = (i, j, d);
                }
            }
        }
        worst = worst.max(best.2);
        comp.swap_remove(best.0);
        targ.swap_remove(best.1);
    }
    worst
}

/// Runs Arnoldi on `(A, b)` and compares the stage Ritz values against the
/// prescription, plus the full spectrum against the target.
pub fn verify_prescribed_ritz(
    a: &ComplexMatrix,
    b: &[Complex64],
    p: &RitzPrescription,
) -> Result<RitzVerifyReport> {
    p.validate()?;
    let n = p.order();
    let fact = arnoldi(a, b, n - 1)?;
    let steps = fact.steps();
    let mut stage_mismatches = Vec::with_capacity(n - 1);
    for k in 1..n {
        if k > steps {
            stage_mismatches.push(f64::INFINITY);
            continue;
        }
        let hk = fact.hess.principal_submatrix(k, k);
        let ritz = general_eigenvalues(&hk)?;
        stage_mismatches.push(multiset_mismatch(&ritz, &p.stage_spectra[k - 1]));
    }
    let full = general_eigenvalues(a)?;
    let final_mismatch = multiset_mismatch(&full, &p.final_spectrum);
    Ok(RitzVerifyReport {
        stage_mismatches,
        final_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Stage spectra {1..k}, final {-1..-n}: the worked example of the
    /// construction.
    fn demo_prescription(n: usize) -> RitzPrescription {
        RitzPrescription {
            final_spectrum: (1..=n).map(|i| c(-(i as f64), 0.0)).collect(),
            stage_spectra: (1..n)
                .map(|k| (1..=k).map(|i| c(i as f64, 0.0)).collect())
                .collect(),
        }
    }

    #[test]
    fn printed_matrix_reproduced_exactly() {
        let (a, b) = prescribed_ritz_system(&demo_prescription(8)).unwrap();
        let last = [
            -362880.0, -1451520.0, -1693440.0, -846720.0, -211680.0, -28224.0, -2016.0, -64.0,
        ];
        for i in 0..8 {
            for j in 0..8 {
                let expect = if j == 7 {
                    last[i]
                } else if i == j {
                    (i + 1) as f64
                } else if i == j + 1 {
                    1.0
                } else {
                    0.0
                };
                assert_eq!(a[(i, j)], c(expect, 0.0), "entry ({i},{j})");
            }
        }
        assert_eq!(b[0], c(1.0, 0.0));
        assert!(b[1..].iter().all(|z| *z == Complex64::default()));
    }

    #[test]
    fn two_by_two_recurrence() {
        let p = RitzPrescription {
            final_spectrum: vec![c(-1.0, 0.0), c(-2.0, 0.0)],
            stage_spectra: vec![vec![c(1.0, 0.0)]],
        };
        let (a, _) = prescribed_ritz_system(&p).unwrap();
        assert_eq!(a[(0, 0)], c(1.0, 0.0));
        assert_eq!(a[(0, 1)], c(-6.0, 0.0));
        assert_eq!(a[(1, 0)], c(1.0, 0.0));
        assert_eq!(a[(1, 1)], c(-4.0, 0.0));
        let vals = general_eigenvalues(&a).unwrap();
        assert!((vals[0] - c(-1.0, 0.0)).norm() < 1e-12);
        assert!((vals[1] - c(-2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn stage_ritz_values_match() {
        let p = demo_prescription(8);
        let (a, b) = prescribed_ritz_system(&p).unwrap();
        let report = verify_prescribed_ritz(&a, &b, &p).unwrap();
        assert!(
            report.max_stage_mismatch() < 1e-8,
            "stage mismatches {:?}",
            report.stage_mismatches
        );
        assert!(
            report.final_mismatch < 1e-5,
            "final {}",
            report.final_mismatch
        );
    }

    #[test]
    fn complex_stage_spectra_supported() {
        let p = RitzPrescription {
            final_spectrum: vec![c(-1.0, 0.5), c(-2.0, 0.0), c(-1.0, -2.0), c(-3.0, 1.0)],
            stage_spectra: vec![
                vec![c(1.0, 1.0)],
                vec![c(0.5, -1.0), c(2.0, 0.0)],
                vec![c(1.0, 0.0), c(0.0, 2.0), c(-0.5, 0.5)],
            ],
        };
        let (a, b) = prescribed_ritz_system(&p).unwrap();
        let report = verify_prescribed_ritz(&a, &b, &p).unwrap();
        assert!(
            report.max_stage_mismatch() < 1e-8,
            "stage mismatches {:?}",
            report.stage_mismatches
        );
        assert!(report.final_mismatch < 1e-6);
    }

    #[test]
    fn stage_polynomials_annihilate_prescribed_values() {
        let p = demo_prescription(6);
        let (a, _) = prescribed_ritz_system(&p).unwrap();
        for k in 1..6 {
            let hk = a.principal_submatrix(k, k);
            // char poly evaluated at each prescribed value via det(theta I - H_k)
            for &theta in &p.stage_spectra[k - 1] {
                let shifted = hk.scale(c(-1.0, 0.0)).shift(-theta);
                // determinant by LU-free expansion: use eigenvalue product
                let vals = general_eigenvalues(&shifted).unwrap();
                let det: Complex64 = vals.iter().product();
                let scale: f64 = p.stage_spectra[k - 1]
                    .iter()
                    .map(|z| z.norm().max(1.0))
                    .product();
                assert!(det.norm() <= 1e-6 * scale.max(1.0), "stage {k} det {det}");
            }
        }
    }

    #[test]
    fn perturbation_shows_in_report() {
        let p = demo_prescription(5);
        let (mut a, b) = prescribed_ritz_system(&p).unwrap();
        a[(0, 2)] += c(1e-3, 0.0);
        let report = verify_prescribed_ritz(&a, &b, &p).unwrap();
        assert!(report.max_stage_mismatch() > 1e-6);
    }

    #[test]
    fn exploding_coefficients_rejected() {
        let p = RitzPrescription {
            final_spectrum: vec![c(1e8, 0.0), c(-1e8, 0.0), c(1.0, 0.0)],
            stage_spectra: vec![vec![c(0.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]],
        };
        assert!(matches!(
            prescribed_ritz_system(&p),
            Err(Error::IllConditioned { .. })
        ));
    }

    #[test]
    fn prescription_json_format() {
        // wire format: {"final_spectrum": [[re, im], ...],
        //               "stage_spectra": [[[re, im], ...], ...]}
        let text = r#"{
            "final_spectrum": [[-1.0, 0.0], [-2.0, 0.5]],
            "stage_spectra": [[[1.0, -1.0]]]
        }"#;
        let p: RitzPrescription = serde_json::from_str(text).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(p.final_spectrum[1], c(-2.0, 0.5));
        assert_eq!(p.stage_spectra[0][0], c(1.0, -1.0));
        let back = serde_json::to_string(&p).unwrap();
        let p2: RitzPrescription = serde_json::from_str(&back).unwrap();
        assert_eq!(p2.final_spectrum, p.final_spectrum);
        assert_eq!(p2.stage_spectra, p.stage_spectra);
    }

    #[test]
    fn invalid_shapes_rejected() {
        let p = RitzPrescription {
            final_spectrum: vec![c(1.0, 0.0)],
            stage_spectra: vec![],
        };
        assert!(prescribed_ritz_system(&p).is_err());
        let p = RitzPrescription {
            final_spectrum: vec![c(1.0, 0.0), c(2.0, 0.0)],
            stage_spectra: vec![vec![c(1.0, 0.0), c(2.0, 0.0)]],
        };
        assert!(prescribed_ritz_system(&p).is_err());
    }
}
