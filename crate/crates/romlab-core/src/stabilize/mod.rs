//! Restarted-Arnoldi stabilization with polynomial-filtered starting
//! vectors.
//!
//! Each round builds the orthogonal Krylov ROM, collects its unstable
//! eigenvalues, and restarts with those eigenvalues as fresh filter roots
//! applied to the current starting vector. The cumulative filter therefore
//! has roots at every unstable mode encountered so far. Convergence is not
//! guaranteed and a round-capped run is a first-class outcome, not an error.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::krylov::{arnoldi, filtered_start_vector};
use crate::linalg::dense::{vec_norm, ComplexMatrix};
use crate::linalg::{general_eigenvalues, hermitian_lambda_max};
use crate::spectral::{hermitian_part, transient_envelope_continuous, transient_envelope_discrete};
use crate::system::{Domain, ReducedModel};

/// One round of the restart loop.
#[derive(Debug, Clone, Serialize)]
pub struct StabilizationRound {
    /// Roots filtered out of the starting vector before this round's ROM
    /// was built; empty for round zero.
    pub filter_roots: Vec<Complex64>,
    /// Reduced eigenvalues of this round's ROM.
    pub ritz_values: Vec<Complex64>,
    /// How many of them are unstable under the chosen threshold.
    pub unstable_count_after: usize,
}

/// Full trace of a stabilization run.
#[derive(Debug, Clone, Serialize)]
pub struct StabilizationTrace {
    pub rounds: Vec<StabilizationRound>,
    #[serde(skip)]
    pub final_basis: ComplexMatrix,
    pub converged: bool,
}

impl StabilizationTrace {
    /// Total degree of the cumulative filter applied across all rounds.
    pub fn cumulative_filter_degree(&self) -> usize {
        self.rounds.iter().map(|r| r.filter_roots.len()).sum()
    }
}

fn is_unstable(theta: Complex64, threshold: Domain) -> bool {
    match threshold {
        Domain::Continuous => theta.re >= 0.0,
        Domain::Discrete => theta.norm() >= 1.0,
    }
}

/// Pairs the non-real roots of a conjugate-symmetric multiset into exact
/// conjugate pairs so that the filtered vector of a real system stays real.
fn symmetrize_conjugate_roots(roots: &[Complex64], scale: f64) -> Vec<Complex64> {
    let real_tol = 1e-10 * scale.max(1.0);
    let mut out = Vec::with_capacity(roots.len());
    let mut pending: Vec<Complex64> = Vec::new();
    for &r in roots {
        if r.im.abs() <= real_tol {
            out.push(Complex64::new(r.re, 0.0));
        } else {
            pending.push(r);
        }
    }
    let mut used = vec![false; pending.len()];
    for i in 0..pending.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        // closest remaining root with opposite imaginary sign
        let mut partner: Option<usize> = None;
        let mut best = f64::INFINITY;
        for (j, &q) in pending.iter().enumerate() {
            if used[j] || q.im.signum() == pending[i].im.signum() {
                continue;
            }
            let d = (q.conj() - pending[i]).norm();
            if d < best {
                best = d;
                partner = Some(j);
            }
        }
        match partner {
            Some(j) => {
                used[j] = true;
                let z = (pending[i] + pending[j].conj()) * 0.5;
                out.push(z);
                out.push(z.conj());
            }
            None => out.push(pending[i]),
        }
    }
    out
}

/// Runs the restart loop on `K_k(A, x0)`.
///
/// Round zero projects onto the plain Krylov subspace; round `r >= 1`
/// filters the previous starting vector at the unstable eigenvalues of the
/// round `r-1` ROM and rebuilds. Stops at the first stable ROM or after
/// round `max_rounds`. For real `A` and `x0`, unstable roots are applied as
/// exact conjugate pairs and the iterate is kept real.
pub fn stabilize_by_restart(
    a: &ComplexMatrix,
    x0: &[Complex64],
    k: usize,
    max_rounds: usize,
    threshold: Domain,
) -> Result<StabilizationTrace> {
    if max_rounds == 0 {
        return Err(Error::IndexOutOfRange("max_rounds must be >= 1".into()));
    }
    if vec_norm(x0) == 0.0 {
        return Err(Error::ZeroStartVector);
    }
    let real_system = a.is_real(0.0) && x0.iter().all(|z| z.im == 0.0);
    let scale = a.norm_frobenius();

    let mut current: Vec<Complex64> = x0.to_vec();
    let mut pending_roots: Vec<Complex64> = Vec::new();
    let mut rounds = Vec::new();
    let mut converged = false;
    let mut final_basis = None;

    for round in 0..=max_rounds {
        let fact = arnoldi(a, &current, k)?;
        let basis = fact.basis();
        let ritz = general_eigenvalues(&fact.reduced())?;
        let unstable: Vec<Complex64> = ritz
            .iter()
            .cloned()
            .filter(|&t| is_unstable(t, threshold))
            .collect();
        rounds.push(StabilizationRound {
            filter_roots: pending_roots.clone(),
            ritz_values: ritz,
            unstable_count_after: unstable.len(),
        });
        final_basis = Some(basis);
        if unstable.is_empty() {
            converged = true;
            break;
        }
        if round == max_rounds {
            break;
        }
        let roots = if real_system {
            symmetrize_conjugate_roots(&unstable, scale)
        } else {
            unstable
        };
        let mut next = filtered_start_vector(a, &current, &roots)?;
        if real_system {
            // exact conjugate pairing keeps the product real; drop the
            // rounding residue in the imaginary parts
            for z in next.iter_mut() {
                *z = Complex64::new(z.re, 0.0);
            }
            let n = vec_norm(&next);
            if n == 0.0 {
                return Err(Error::FilteredToZero {
                    factor: roots.len(),
                });
            }
            for z in next.iter_mut() {
                *z /= n;
            }
        }
        current = next;
        pending_roots = roots;
    }

    Ok(StabilizationTrace {
        rounds,
        final_basis: final_basis.expect("at least one round runs"),
        converged,
    })
}

/// Transient envelopes of the full model and a family of ROMs on a shared
/// time (or step) grid.
#[derive(Debug, Clone, Serialize)]
pub struct TransientTable {
    pub times: Vec<f64>,
    /// `||exp(tA)||` (or `||A^k||`) of the full model.
    pub full: Vec<f64>,
    /// One envelope column per reduced model.
    pub reduced: Vec<Vec<f64>>,
}

/// Tabulates the operator-norm envelopes of `A` and each ROM. Continuous
/// models evaluate `exp(t A)`; discrete models interpret the grid as integer
/// step counts.
pub fn compare_transients(
    a: &ComplexMatrix,
    roms: &[&ReducedModel],
    times: &[f64],
    domain: Domain,
) -> Result<TransientTable> {
    for rom in roms {
        if rom.domain != domain {
            return Err(Error::DimensionMismatch(
                "all reduced models must share the evaluation domain".into(),
            ));
        }
    }
    match domain {
        Domain::Continuous => {
            let full = transient_envelope_continuous(a, times)?;
            let reduced = roms
                .iter()
                .map(|r| transient_envelope_continuous(&r.ar, times))
                .collect::<Result<Vec<_>>>()?;
            Ok(TransientTable {
                times: times.to_vec(),
                full,
                reduced,
            })
        }
        Domain::Discrete => {
            let steps: Vec<usize> = times
                .iter()
                .map(|&t| {
                    if t < 0.0 || t.fract() != 0.0 {
                        Err(Error::IndexOutOfRange(
                            "discrete comparison needs nonnegative integer steps".into(),
                        ))
                    } else {
                        Ok(t as usize)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let max_step = steps.iter().cloned().max().unwrap_or(0);
            let sample = |env: Vec<f64>| -> Vec<f64> { steps.iter().map(|&s| env[s]).collect() };
            let full = sample(transient_envelope_discrete(a, max_step)?);
            let reduced = roms
                .iter()
                .map(|r| Ok(sample(transient_envelope_discrete(&r.ar, max_step)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(TransientTable {
                times: times.to_vec(),
                full,
                reduced,
            })
        }
    }
}

/// Numerical abscissas of the full matrix and each ROM, in order: the
/// stabilization story in one row of numbers. For orthogonal ROMs the
/// reduced value never exceeds the full one.
pub fn numerical_abscissa_comparison(
    a: &ComplexMatrix,
    roms: &[&ReducedModel],
) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(roms.len() + 1);
    out.push(hermitian_lambda_max(&hermitian_part(a))?);
    for rom in roms {
        out.push(hermitian_lambda_max(&hermitian_part(&rom.ar))?);
    }
    Ok(out)
}
