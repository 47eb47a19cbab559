//! Seeded deterministic matrix generators shared by the unit tests.

use num_complex::Complex64;

use crate::linalg::{orthonormalize, ComplexMatrix};

/// SplitMix64 avalanche step: full-width mixing so low bits are usable.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Uniform value in [-1, 1) from a counter and seed.
pub fn unit_f64(seed: u64, counter: u64) -> f64 {
    let bits = mix64(seed.wrapping_mul(0x2545f4914f6cdd1d).wrapping_add(counter));
    (bits >> 11) as f64 / (1u64 << 52) as f64 - 1.0
}

/// Dense complex matrix with entries uniform in the unit square.
pub fn random_complex(rows: usize, cols: usize, seed: u64) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |i, j| {
        let k = (i * cols + j) as u64;
        Complex64::new(unit_f64(seed, 2 * k), unit_f64(seed, 2 * k + 1))
    })
}

/// Orthonormal `n x k` basis from a seeded dense matrix. Panics if the
/// random draw is rank deficient, which the mixer makes vanishingly rare.
pub fn random_orthonormal(n: usize, k: usize, seed: u64) -> ComplexMatrix {
    let (q, rank) = orthonormalize(&random_complex(n, k, seed));
    assert_eq!(rank, k, "seeded draw was rank deficient (seed {seed})");
    q.unwrap()
}
