//! Shared fixtures for the integration suites.
#![allow(dead_code)]

use num_complex::Complex64;
use romlab_core::linalg::{orthonormalize, ComplexMatrix};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn e1(n: usize) -> Vec<Complex64> {
    let mut v = vec![Complex64::default(); n];
    v[0] = c(1.0, 0.0);
    v
}

/// Tridiagonal Toeplitz reference matrix (subdiagonal 1/2, diagonal -2,
/// superdiagonal 2).
pub fn toeplitz_tridiag(n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            c(-2.0, 0.0)
        } else if j == i + 1 {
            c(2.0, 0.0)
        } else if i == j + 1 {
            c(0.5, 0.0)
        } else {
            c(0.0, 0.0)
        }
    })
}

/// Discrete-time reference matrix: diagonal 1/2, subdiagonal 1/8,
/// superdiagonal gamma^j.
pub fn geometric_superdiag(n: usize, gamma: f64) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            c(0.5, 0.0)
        } else if j == i + 1 {
            c(gamma.powi(j as i32), 0.0)
        } else if i == j + 1 {
            c(0.125, 0.0)
        } else {
            c(0.0, 0.0)
        }
    })
}

/// Stable Hermitian reference matrix tridiag(1, -2, 1).
pub fn hermitian_tridiag(n: usize) -> ComplexMatrix {
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

/// SplitMix64 avalanche mixing.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

pub fn unit_f64(seed: u64, counter: u64) -> f64 {
    let bits = mix64(seed.wrapping_mul(0x2545f4914f6cdd1d).wrapping_add(counter));
    (bits >> 11) as f64 / (1u64 << 52) as f64 - 1.0
}

pub fn random_complex(rows: usize, cols: usize, seed: u64) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |i, j| {
        let k = (i * cols + j) as u64;
        c(unit_f64(seed, 2 * k), unit_f64(seed, 2 * k + 1))
    })
}

pub fn random_real(rows: usize, cols: usize, seed: u64) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |i, j| {
        let k = (i * cols + j) as u64;
        c(unit_f64(seed, k), 0.0)
    })
}

pub fn random_orthonormal(n: usize, k: usize, seed: u64) -> ComplexMatrix {
    let (q, rank) = orthonormalize(&random_complex(n, k, seed));
    assert_eq!(rank, k, "seeded draw was rank deficient (seed {seed})");
    q.unwrap()
}

pub fn random_vector(n: usize, seed: u64) -> Vec<Complex64> {
    (0..n)
        .map(|i| {
            c(
                unit_f64(seed, 3 * i as u64),
                unit_f64(seed, 3 * i as u64 + 1),
            )
        })
        .collect()
}
