//! Rigorous bounds on reduced-model eigenvalues.
//!
//! Continuous time: the partial arithmetic means of the Hermitian-part
//! eigenvalues pin each projected eigenvalue (sorted by real part) inside a
//! vertical strip, capping the number of eigenvalues with nonnegative real
//! part. Discrete time: geometric means of the leading singular values bound
//! each projected eigenvalue modulus (sorted by magnitude), capping the
//! number with modulus at least one. Both caps hold for every orthogonal
//! projection, whatever subspace produced it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    canonical_cmp, general_eigenvalues, hermitian_eigen, hermitian_eigenvalues, singular_values,
    ComplexMatrix,
};
use crate::spectral::hermitian_part;
use crate::system::{ProjectionKind, ReducedModel};

/// Slack applied to the strip/disk comparisons.
const CHECK_SLACK: f64 = 1e-8;

/// Vertical-strip data: partial means of the Hermitian-part eigenvalues.
///
/// `m[j-1]` is the mean of the `j` largest, `m_neg[j-1]` the mean of the `j`
/// smallest; `p_cap` is the largest `p` with `M_p >= 0` (zero when even
/// `M_1 < 0`), the cap on unstable modes of any orthogonal ROM.
#[derive(Debug, Clone, Serialize)]
pub struct StripBounds {
    pub m: Vec<f64>,
    pub m_neg: Vec<f64>,
    pub p_cap: usize,
}

/// Disk data: geometric means of the leading singular values.
#[derive(Debug, Clone, Serialize)]
pub struct DiskBounds {
    pub g: Vec<f64>,
    pub p_cap: usize,
}

/// Computes the strip bounds of a square matrix.
pub fn strip_bounds(a: &ComplexMatrix) -> Result<StripBounds> {
    let mu = hermitian_eigenvalues(&hermitian_part(a))?;
    Ok(strip_bounds_from_mu(&mu))
}

/// Strip bounds from precomputed, descending Hermitian-part eigenvalues.
pub fn strip_bounds_from_mu(mu: &[f64]) -> StripBounds {
    let n = mu.len();
    let mut m = Vec::with_capacity(n);
    let mut m_neg = Vec::with_capacity(n);
    let mut acc = 0.0;
    for (j, &v) in mu.iter().enumerate() {
        acc += v;
        m.push(acc / (j + 1) as f64);
    }
    acc = 0.0;
    for j in 0..n {
        acc += mu[n - 1 - j];
        m_neg.push(acc / (j + 1) as f64);
    }
    let p_cap = m.iter().take_while(|&&v| v >= 0.0).count();
    StripBounds { m, m_neg, p_cap }
}

impl StripBounds {
    pub fn order(&self) -> usize {
        self.m.len()
    }
}

/// The vertical strip for the `j`-th rightmost eigenvalue of an order-`k`
/// ROM: `(M_{-(k-j+1)}, M_j)` with `1 <= j <= k <= n`.
pub fn strip_interval(bounds: &StripBounds, k: usize, j: usize) -> Result<(f64, f64)> {
    let n = bounds.order();
    if j < 1 || j > k || k > n {
        return Err(Error::IndexOutOfRange(format!(
            "need 1 <= j <= k <= n, got j = {j}, k = {k}, n = {n}"
        )));
    }
    Ok((bounds.m_neg[k - j], bounds.m[j - 1]))
}

/// Computes the disk bounds of a square matrix. Geometric means accumulate
/// in log space so that order-128 products neither overflow nor underflow.
pub fn disk_bounds(a: &ComplexMatrix) -> Result<DiskBounds> {
    let s = singular_values(a)?;
    Ok(disk_bounds_from_singular_values(&s))
}

/// Disk bounds from precomputed, descending singular values.
pub fn disk_bounds_from_singular_values(s: &[f64]) -> DiskBounds {
    let mut g = Vec::with_capacity(s.len());
    let mut log_acc = 0.0;
    for (j, &sv) in s.iter().enumerate() {
        if sv == 0.0 {
            // the geometric mean collapses once a zero appears
            g.push(0.0);
            log_acc = f64::NEG_INFINITY;
            continue;
        }
        log_acc += sv.ln();
        g.push(if log_acc.is_finite() {
            (log_acc / (j + 1) as f64).exp()
        } else {
            0.0
        });
    }
    let p_cap = g.iter().take_while(|&&v| v >= 1.0).count();
    DiskBounds { g, p_cap }
}

/// Per-eigenvalue outcome of a strip check.
#[derive(Debug, Clone, Serialize)]
pub struct StripCheckRow {
    pub theta: (f64, f64),
    pub lo: f64,
    pub hi: f64,
    pub pass: bool,
}

/// Strip-check report for one ROM against one full matrix.
#[derive(Debug, Clone, Serialize)]
pub struct StripCheckReport {
    pub rows: Vec<StripCheckRow>,
    pub all_pass: bool,
    /// Number of ROM eigenvalues with nonnegative real part.
    pub unstable_count: usize,
    /// Cap from the bounds; the unstable count can never legitimately
    /// exceed it.
    pub p_cap: usize,
}

/// Checks every eigenvalue of an orthogonal ROM against its strip.
pub fn check_rom_strips(a: &ComplexMatrix, rom: &ReducedModel) -> Result<StripCheckReport> {
    if rom.kind != ProjectionKind::Orthogonal {
        return Err(Error::WrongProjectionKind);
    }
    let bounds = strip_bounds(a)?;
    let mut thetas = general_eigenvalues(&rom.ar)?;
    thetas.sort_by(canonical_cmp); // descending real part
    let k = thetas.len();
    let mut rows = Vec::with_capacity(k);
    let mut all_pass = true;
    for (idx, th) in thetas.iter().enumerate() {
        let (lo, hi) = strip_interval(&bounds, k, idx + 1)?;
        let pass = th.re >= lo - CHECK_SLACK && th.re <= hi + CHECK_SLACK;
        all_pass &= pass;
        rows.push(StripCheckRow {
            theta: (th.re, th.im),
            lo,
            hi,
            pass,
        });
    }
    let unstable_count = thetas.iter().filter(|t| t.re >= 0.0).count();
    Ok(StripCheckReport {
        rows,
        all_pass,
        unstable_count,
        p_cap: bounds.p_cap,
    })
}

/// Per-eigenvalue outcome of a disk check.
#[derive(Debug, Clone, Serialize)]
pub struct DiskCheckRow {
    pub theta: (f64, f64),
    pub modulus: f64,
    pub bound: f64,
    pub pass: bool,
}

/// Disk-check report for one ROM against one full matrix.
#[derive(Debug, Clone, Serialize)]
pub struct DiskCheckReport {
    pub rows: Vec<DiskCheckRow>,
    pub all_pass: bool,
    /// Number of ROM eigenvalues with modulus at least one.
    pub unstable_count: usize,
    pub p_cap: usize,
}

/// Checks every eigenvalue of an orthogonal ROM against its modulus bound.
pub fn check_rom_disks(a: &ComplexMatrix, rom: &ReducedModel) -> Result<DiskCheckReport> {
    if rom.kind != ProjectionKind::Orthogonal {
        return Err(Error::WrongProjectionKind);
    }
    let bounds = disk_bounds(a)?;
    let mut thetas = general_eigenvalues(&rom.ar)?;
    thetas.sort_by(|x, y| y.norm().partial_cmp(&x.norm()).unwrap());
    let mut rows = Vec::with_capacity(thetas.len());
    let mut all_pass = true;
    for (idx, th) in thetas.iter().enumerate() {
        let bound = bounds.g[idx];
        let pass = th.norm() <= bound + CHECK_SLACK;
        all_pass &= pass;
        rows.push(DiskCheckRow {
            theta: (th.re, th.im),
            modulus: th.norm(),
            bound,
            pass,
        });
    }
    let unstable_count = rows.iter().filter(|r| r.modulus >= 1.0).count();
    Ok(DiskCheckReport {
        rows,
        all_pass,
        unstable_count,
        p_cap: bounds.p_cap,
    })
}

/// Result of the positive-eigenvalue subspace construction.
///
/// When the Hermitian part has `q >= 1` strictly positive eigenvalues, the
/// associated eigenvectors span a subspace on which every projected
/// eigenvalue has real part at least `mu_q > 0`: an orthogonal ROM that is
/// entirely unstable. `q = 0` is reported with an empty basis, not an error.
#[derive(Debug, Clone)]
pub struct UnstableSubspace {
    pub basis: Option<ComplexMatrix>,
    pub count: usize,
    /// `mu_q`, the smallest positive Hermitian-part eigenvalue used.
    pub mu_q: Option<f64>,
}

/// Builds the guaranteed-unstable projection subspace from the positive
/// eigenvalues of the Hermitian part. Strictly positive eigenvalues only;
/// zeros do not count toward `q`.
pub fn unstable_subspace(a: &ComplexMatrix) -> Result<UnstableSubspace> {
    let h = hermitian_part(a);
    let dec = hermitian_eigen(&h, true)?;
    let q = dec.values.iter().filter(|v| v.re > 0.0).count();
    if q == 0 {
        return Ok(UnstableSubspace {
            basis: None,
            count: 0,
            mu_q: None,
        });
    }
    let vectors = dec.vectors.expect("vectors requested");
    Ok(UnstableSubspace {
        basis: Some(vectors.column_block(0, q)),
        count: q,
        mu_q: Some(dec.values[q - 1].re),
    })
}

impl std::fmt::Display for StripCheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{:>4}  {:>24}  {:>14}  {:>14}  {:>5}",
            "j", "theta_j", "lo", "hi", "pass"
        )?;
        for (j, r) in self.rows.iter().enumerate() {
            writeln!(
                f,
                "{:>4}  {:>10.5}{:+10.5}i  {:>14.5}  {:>14.5}  {:>5}",
                j + 1,
                r.theta.0,
                r.theta.1,
                r.lo,
                r.hi,
                if r.pass { "yes" } else { "NO" }
            )?;
        }
        writeln!(
            f,
            "unstable: {} (cap {}), all strips {}",
            self.unstable_count,
            self.p_cap,
            if self.all_pass { "pass" } else { "FAIL" }
        )
    }
}

impl std::fmt::Display for DiskCheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{:>4}  {:>24}  {:>12}  {:>12}  {:>5}",
            "j", "theta_j", "|theta_j|", "G_j", "pass"
        )?;
        for (j, r) in self.rows.iter().enumerate() {
            writeln!(
                f,
                "{:>4}  {:>10.5}{:+10.5}i  {:>12.5}  {:>12.5}  {:>5}",
                j + 1,
                r.theta.0,
                r.theta.1,
                r.modulus,
                r.bound,
                if r.pass { "yes" } else { "NO" }
            )?;
        }
        writeln!(
            f,
            "unstable: {} (cap {}), all disks {}",
            self.unstable_count,
            self.p_cap,
            if self.all_pass { "pass" } else { "FAIL" }
        )
    }
}
