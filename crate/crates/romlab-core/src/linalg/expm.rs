//! Matrix exponential by scaling and squaring.
//!
//! Fixed-order diagonal Pade approximant (degree 13) with radix-2 scaling,
//! sized from the 1-norm. The transient envelopes evaluate `exp(tA)` for
//! matrices whose numerical abscissa reaches 1e6, so the scaled/squared path
//! is the only viable one; a truncated Taylor series serves as the
//! independent test oracle at small norms.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::dense::ComplexMatrix;
use crate::linalg::lu::LuFactorization;

const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// Threshold on the scaled 1-norm for the degree-13 approximant.
const THETA13: f64 = 5.371920351148152;

/// Computes `exp(A)` for square `A`. Returns `Overflow` when the result
/// leaves the representable range.
pub fn matrix_exponential(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "matrix_exponential needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let norm = a.norm_one();
    if !norm.is_finite() {
        return Err(Error::Overflow);
    }
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as i32
    } else {
        0
    };
    let scaled = a.scale(Complex64::new((0.5f64).powi(s), 0.0));

    let ident = ComplexMatrix::identity(n);
    let a2 = scaled.mul(&scaled);
    let a4 = a2.mul(&a2);
    let a6 = a4.mul(&a2);

    // U = A (A6 (b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I)
    let b = |k: usize| Complex64::new(PADE13[k], 0.0);
    let inner_u = a6.scale(b(13)).add(&a4.scale(b(11))).add(&a2.scale(b(9)));
    let u = scaled.mul(
        &a6.mul(&inner_u)
            .add(&a6.scale(b(7)))
            .add(&a4.scale(b(5)))
            .add(&a2.scale(b(3)))
            .add(&ident.scale(b(1))),
    );
    // V = A6 (b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    let inner_v = a6.scale(b(12)).add(&a4.scale(b(10))).add(&a2.scale(b(8)));
    let v = a6
        .mul(&inner_v)
        .add(&a6.scale(b(6)))
        .add(&a4.scale(b(4)))
        .add(&a2.scale(b(2)))
        .add(&ident.scale(b(0)));

    // solve (V - U) X = (V + U)
    let lhs = v.sub(&u);
    let rhs = v.add(&u);
    let mut x = LuFactorization::new(&lhs)
        .map_err(|_| Error::Overflow)?
        .solve(&rhs);

    for _ in 0..s {
        x = x.mul(&x);
        if !x.all_finite() {
            return Err(Error::Overflow);
        }
    }
    if !x.all_finite() {
        return Err(Error::Overflow);
    }
    Ok(x)
}
