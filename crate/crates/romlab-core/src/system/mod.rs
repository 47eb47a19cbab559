//! LTI systems, reduced-order models, projection, moments, and simulation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::dense::vec_norm;
use crate::linalg::tol::{TINY_FLOOR, TOL_BIORTH, TOL_ORTH};
use crate::linalg::{matrix_exponential, ComplexMatrix, LuFactorization};

/// Whether the state equation is a differential or a difference equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Continuous,
    Discrete,
}

/// How a reduced model was projected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProjectionKind {
    Orthogonal,
    Oblique,
}

/// State-space system `x' = A x + B u`, `y = C x + d u` (continuous) or the
/// analogous difference equations (discrete). SISO systems store `b` as an
/// `n x 1` matrix and `c*` as a `1 x n` matrix.
#[derive(Debug, Clone)]
pub struct LtiSystem {
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
    pub c: ComplexMatrix,
    pub d: ComplexMatrix,
    pub domain: Domain,
}

impl LtiSystem {
    pub fn new(
        a: ComplexMatrix,
        b: ComplexMatrix,
        c: ComplexMatrix,
        d: ComplexMatrix,
        domain: Domain,
    ) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "A must be square, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        if b.rows() != a.rows() {
            return Err(Error::DimensionMismatch(format!(
                "B must have {} rows, got {}",
                a.rows(),
                b.rows()
            )));
        }
        if c.cols() != a.rows() {
            return Err(Error::DimensionMismatch(format!(
                "C must have {} columns, got {}",
                a.rows(),
                c.cols()
            )));
        }
        if d.rows() != c.rows() || d.cols() != b.cols() {
            return Err(Error::DimensionMismatch(format!(
                "D must be {}x{}, got {}x{}",
                c.rows(),
                b.cols(),
                d.rows(),
                d.cols()
            )));
        }
        Ok(Self { a, b, c, d, domain })
    }

    /// SISO convenience: `b` and `c` as vectors (the output map is `c*x`),
    /// zero feedthrough.
    pub fn siso(
        a: ComplexMatrix,
        b: &[Complex64],
        c: &[Complex64],
        domain: Domain,
    ) -> Result<Self> {
        let bm = ComplexMatrix::column_vector(b);
        let cm = ComplexMatrix::column_vector(c).adjoint();
        let d = ComplexMatrix::zeros(1, 1);
        Self::new(a, bm, cm, d, domain)
    }

    pub fn order(&self) -> usize {
        self.a.rows()
    }
}

/// Reduced model with its projection bases.
///
/// Orthogonal models satisfy `V*V = I` and store `W = V`; oblique models
/// satisfy `W*V = I`. `ar = W* A V`, `br = W* B`, `cr = C V`, and `d` carries
/// over unchanged.
#[derive(Debug, Clone)]
pub struct ReducedModel {
    pub v: ComplexMatrix,
    pub w: ComplexMatrix,
    pub ar: ComplexMatrix,
    pub br: ComplexMatrix,
    pub cr: ComplexMatrix,
    pub d: ComplexMatrix,
    pub kind: ProjectionKind,
    pub domain: Domain,
}

impl ReducedModel {
    pub fn order(&self) -> usize {
        self.ar.rows()
    }

    /// Reduced model viewed as a standalone system.
    pub fn as_system(&self) -> LtiSystem {
        LtiSystem {
            a: self.ar.clone(),
            b: self.br.clone(),
            c: self.cr.clone(),
            d: self.d.clone(),
            domain: self.domain,
        }
    }
}

/// Galerkin projection onto the range of `v` (orthonormal columns required).
pub fn project_orthogonal(sys: &LtiSystem, v: &ComplexMatrix) -> Result<ReducedModel> {
    if v.rows() != sys.order() {
        return Err(Error::DimensionMismatch(format!(
            "V must have {} rows, got {}",
            sys.order(),
            v.rows()
        )));
    }
    let gram = v.adjoint().mul(v);
    let defect = gram
        .sub(&ComplexMatrix::identity(v.cols()))
        .norm_frobenius();
    let tol = TOL_ORTH * (v.cols() as f64).sqrt().max(1.0);
    if defect > tol {
        return Err(Error::NotOrthonormal { defect, tol });
    }
    let vh = v.adjoint();
    Ok(ReducedModel {
        ar: vh.mul(&sys.a).mul(v),
        br: vh.mul(&sys.b),
        cr: sys.c.mul(v),
        d: sys.d.clone(),
        v: v.clone(),
        w: v.clone(),
        kind: ProjectionKind::Orthogonal,
        domain: sys.domain,
    })
}

/// Petrov-Galerkin projection with trial basis `v` and test basis `w`,
/// biorthogonal in the sense `W*V = I`.
pub fn project_oblique(
    sys: &LtiSystem,
    v: &ComplexMatrix,
    w: &ComplexMatrix,
) -> Result<ReducedModel> {
    if v.rows() != sys.order() || w.rows() != sys.order() || v.cols() != w.cols() {
        return Err(Error::DimensionMismatch(format!(
            "bases must be {}xk with matching k, got {}x{} and {}x{}",
            sys.order(),
            v.rows(),
            v.cols(),
            w.rows(),
            w.cols()
        )));
    }
    let prod = w.adjoint().mul(v);
    let defect = prod
        .sub(&ComplexMatrix::identity(v.cols()))
        .norm_frobenius();
    // Tolerance scales with the basis column norms: biorthogonal bases may be
    // ill-conditioned while satisfying W*V = I exactly.
    let scale = (0..v.cols())
        .map(|j| vec_norm(&w.column(j)) * vec_norm(&v.column(j)))
        .fold(1.0f64, f64::max);
    let tol = TOL_BIORTH * scale * (v.cols() as f64).sqrt();
    if defect > tol {
        return Err(Error::NotBiorthogonal { defect, tol });
    }
    let wh = w.adjoint();
    Ok(ReducedModel {
        ar: wh.mul(&sys.a).mul(v),
        br: wh.mul(&sys.b),
        cr: sys.c.mul(v),
        d: sys.d.clone(),
        v: v.clone(),
        w: w.clone(),
        kind: ProjectionKind::Oblique,
        domain: sys.domain,
    })
}

/// Expansion point for transfer-function moments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MomentExpansion {
    /// Moments `C A^s B` of the expansion about infinity.
    Infinity,
    /// Moments `C (mu I - A)^{-(s+1)} B` about a finite point.
    At(Complex64),
}

/// First `count` transfer-function moments of the system, `s = 0..count-1`.
pub fn moments(
    sys: &LtiSystem,
    count: usize,
    expansion: MomentExpansion,
) -> Result<Vec<ComplexMatrix>> {
    if count == 0 {
        return Err(Error::IndexOutOfRange("moment count must be >= 1".into()));
    }
    let mut out = Vec::with_capacity(count);
    match expansion {
        MomentExpansion::Infinity => {
            let mut power_b = sys.b.clone();
            for _s in 0..count {
                out.push(sys.c.mul(&power_b));
                power_b = sys.a.mul(&power_b);
            }
        }
        MomentExpansion::At(mu) => {
            // mu I - A, factored once
            let shifted = sys.a.scale(Complex64::new(-1.0, 0.0)).shift(-mu);
            let lu = LuFactorization::new(&shifted)?;
            let mut resolvent_b = lu.solve(&sys.b);
            for _s in 0..count {
                out.push(sys.c.mul(&resolvent_b));
                resolvent_b = lu.solve(&resolvent_b);
            }
        }
    }
    Ok(out)
}

/// Relative moment-match errors between a system and one of its ROMs.
///
/// Entry `s` is `||m_s(full) - m_s(rom)|| / max(||m_s(full)||, floor)`.
/// Moments whose full-model norm exceeds 1e12 are flagged in `guarded`
/// rather than failed: factorially growing moments are a property of the
/// data, not of the reduction.
#[derive(Debug, Clone, Serialize)]
pub struct MomentMatchReport {
    pub relative_errors: Vec<f64>,
    pub guarded: Vec<bool>,
}

pub fn verify_moment_match(
    full: &LtiSystem,
    rom: &ReducedModel,
    count: usize,
) -> Result<MomentMatchReport> {
    let m_full = moments(full, count, MomentExpansion::Infinity)?;
    let rom_sys = rom.as_system();
    let m_rom = moments(&rom_sys, count, MomentExpansion::Infinity)?;
    let mut relative_errors = Vec::with_capacity(count);
    let mut guarded = Vec::with_capacity(count);
    for (mf, mr) in m_full.iter().zip(&m_rom) {
        let scale = mf.norm_frobenius();
        relative_errors.push(mf.sub(mr).norm_frobenius() / scale.max(TINY_FLOOR));
        guarded.push(scale > 1e12);
    }
    Ok(MomentMatchReport {
        relative_errors,
        guarded,
    })
}

/// Transfer function value `C (zI - A)^{-1} B + d`.
pub fn transfer_function(sys: &LtiSystem, z: Complex64) -> Result<ComplexMatrix> {
    let shifted = sys.a.scale(Complex64::new(-1.0, 0.0)).shift(-z); // zI - A
    let lu = LuFactorization::new(&shifted)?;
    let x = lu.solve(&sys.b);
    Ok(sys.c.mul(&x).add(&sys.d))
}

/// Sampled trajectory: per-sample state vectors and their 2-norms.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub states: Vec<Vec<Complex64>>,
    pub norms: Vec<f64>,
}

/// Homogeneous continuous evolution `x(t) = exp(tA) x0` at the given times.
///
/// Each time evaluates a fresh exponential of `t A`; no ODE stepping, so the
/// only error is that of the exponential itself.
pub fn simulate_homogeneous(
    a: &ComplexMatrix,
    x0: &[Complex64],
    times: &[f64],
) -> Result<Trajectory> {
    if x0.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "x0 must have length {}, got {}",
            a.rows(),
            x0.len()
        )));
    }
    let mut prev = f64::NEG_INFINITY;
    for &t in times {
        if t < 0.0 || t < prev {
            return Err(Error::IndexOutOfRange(
                "times must be nonnegative and ascending".into(),
            ));
        }
        prev = t;
    }
    let mut states = Vec::with_capacity(times.len());
    let mut norms = Vec::with_capacity(times.len());
    for &t in times {
        let et = matrix_exponential(&a.scale(Complex64::new(t, 0.0)))?;
        let x = et.mul_vec(x0);
        norms.push(vec_norm(&x));
        states.push(x);
    }
    Ok(Trajectory { states, norms })
}

/// Discrete evolution `x_{j+1} = A x_j`, returning `steps + 1` samples
/// starting at `x0`.
pub fn simulate_discrete(a: &ComplexMatrix, x0: &[Complex64], steps: usize) -> Result<Trajectory> {
    if x0.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "x0 must have length {}, got {}",
            a.rows(),
            x0.len()
        )));
    }
    let mut states = Vec::with_capacity(steps + 1);
    let mut norms = Vec::with_capacity(steps + 1);
    let mut x = x0.to_vec();
    norms.push(vec_norm(&x));
    states.push(x.clone());
    for _ in 0..steps {
        x = a.mul_vec(&x);
        if x.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Overflow);
        }
        norms.push(vec_norm(&x));
        states.push(x.clone());
    }
    Ok(Trajectory { states, norms })
}
