//! Acceptance suite: every shipped claim, one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.
//! Criterion 4 documents a known double-precision limit (see the assertion
//! message for the analysis); it is asserted at its stated tolerance anyway.

mod common;

use std::sync::OnceLock;

use common::*;
use num_complex::Complex64;

use romlab_core::adversarial::{
    greenbaum_system, prescribed_ritz_system, prescribed_tridiagonal, verify_greenbaum,
    verify_prescribed_ritz, GreenbaumPrescription, RitzPrescription,
};
use romlab_core::bounds::{
    check_rom_disks, check_rom_strips, disk_bounds, strip_bounds, unstable_subspace,
};
use romlab_core::krylov::{arnoldi, bilanczos};
use romlab_core::linalg::{
    general_eigenvalues, hermitian_eigenvalues, matrix_exponential, operator_norm, ComplexMatrix,
};
use romlab_core::spectral::{
    hermitian_part, pseudo_abscissa_estimate, pseudospectra_grid, spectral_summary,
    stone_bound_check, NumericalRangeSupport,
};
use romlab_core::stabilize::stabilize_by_restart;
use romlab_core::system::{
    project_oblique, project_orthogonal, verify_moment_match, Domain, LtiSystem, ReducedModel,
};

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} - {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

// ---------------------------------------------------------------------------
// 1. Strip-bound golden values on the tridiagonal Toeplitz matrix
// ---------------------------------------------------------------------------
#[test]
fn criterion_01_strip_bound_golden_values() {
    let a = toeplitz_tridiag(8);
    let bounds = strip_bounds(&a).unwrap();
    let m_expect = [0.34923, 0.13217, -0.16189, -0.51288];
    let mneg_expect = [-4.34923, -4.13217, -3.83811, -3.48712];
    let mut ok = true;
    for j in 0..4 {
        ok &= (bounds.m[j] - m_expect[j]).abs() <= 1e-5;
        ok &= (bounds.m_neg[j] - mneg_expect[j]).abs() <= 1e-5;
    }
    ok &= bounds.p_cap == 2;

    let eig = general_eigenvalues(&a).unwrap();
    let mu = hermitian_eigenvalues(&hermitian_part(&a)).unwrap();
    for j in 0..8 {
        let angle = (j as f64 + 1.0) * std::f64::consts::PI / 9.0;
        let lam = -2.0 + 2.0 * angle.cos();
        let h = -2.0 + 2.5 * angle.cos();
        ok &= (eig[j].re - lam).abs() <= 1e-10 && eig[j].im.abs() <= 1e-10;
        ok &= (mu[j] - h).abs() <= 1e-10;
    }
    report(
        "01",
        ok,
        &format!(
            "M_1..4 = {:?}, p_cap = {}, spectra match closed-form cosines",
            &bounds.m[..4],
            bounds.p_cap
        ),
    );
    assert!(ok);
}

// ---------------------------------------------------------------------------
// 2. Disk-bound golden values on the order-128 superdiagonal-decay matrix
// ---------------------------------------------------------------------------
#[test]
fn criterion_02_disk_bound_golden_values() {
    let a = geometric_superdiag(128, 0.75);
    let summary = spectral_summary(&a).unwrap();
    let bounds = disk_bounds(&a).unwrap();
    let g_expect = [1.13227, 0.99258, 0.90029, 0.83738];
    let mut ok = (summary.rho - 0.94822).abs() <= 1e-5;
    ok &= (summary.nu - 1.09127).abs() <= 1e-5;
    for (g, e) in bounds.g.iter().zip(&g_expect) {
        ok &= (g - e).abs() <= 1e-5;
    }
    ok &= bounds.p_cap == 1;
    report(
        "02",
        ok,
        &format!(
            "rho = {:.5}, nu = {:.5}, G_1..4 = {:?}, p_cap = {}",
            summary.rho,
            summary.nu,
            &bounds.g[..4],
            bounds.p_cap
        ),
    );
    assert!(ok);
}

// ---------------------------------------------------------------------------
// 3. Prescribed-Ritz reconstruction of the order-8 demo system
// ---------------------------------------------------------------------------
#[test]
fn criterion_03_prescribed_ritz_reconstruction() {
    let p = RitzPrescription {
        final_spectrum: (1..=8).map(|i| c(-(i as f64), 0.0)).collect(),
        stage_spectra: (1..8)
            .map(|k| (1..=k).map(|i| c(i as f64, 0.0)).collect())
            .collect(),
    };
    let (a, b) = prescribed_ritz_system(&p).unwrap();

    let last = [
        -362880.0, -1451520.0, -1693440.0, -846720.0, -211680.0, -28224.0, -2016.0, -64.0,
    ];
    let mut exact = true;
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
            exact &= a[(i, j)] == c(expect, 0.0);
        }
    }

    let verify = verify_prescribed_ritz(&a, &b, &p).unwrap();
    let stages_ok = verify.max_stage_mismatch() <= 1e-8;
    let spectrum_ok = verify.final_mismatch <= 1e-5;

    let omega = hermitian_eigenvalues(&hermitian_part(&a)).unwrap()[0];
    let omega_ok = (omega - 1.211e6).abs() / 1.211e6 <= 1e-3;

    let grid = pseudospectra_grid(&a, (-10.0, 5.0), (-5.0, 5.0), (151, 101), &[1e-4]).unwrap();
    let alpha_est = pseudo_abscissa_estimate(&grid, 1e-4);
    let alpha_ok = alpha_est > 0.0;

    let ok = exact && stages_ok && spectrum_ok && omega_ok && alpha_ok;
    report(
        "03",
        ok,
        &format!(
            "matrix exact = {exact}, stage mismatch = {:.2e}, sigma(A) mismatch = {:.2e}, omega = {omega:.4e}, alpha_1e-4 estimate = {alpha_est:.3}",
            verify.max_stage_mismatch(),
            verify.final_mismatch
        ),
    );
    assert!(ok);
}

// ---------------------------------------------------------------------------
// 4. Prescribed-recurrence golden values on the order-16 Hermitian system
// ---------------------------------------------------------------------------
#[test]
fn criterion_04_prescribed_recurrence_golden_values() {
    let a = hermitian_tridiag(16);
    let b = e1(16);
    let p = GreenbaumPrescription {
        alphas: vec![c(2.0, 0.0); 8],
        betas: vec![c(1.0, 0.0); 7],
    };
    let sys = greenbaum_system(&a, &b, &p).unwrap();

    let gamma_expect = [
        4.12311, 3.68474, 4.12603, 4.31536, 4.43571, 4.52257, 4.58628,
    ];
    let gammas_ok = sys
        .gammas
        .iter()
        .zip(&gamma_expect)
        .all(|(g, e)| (g - e).abs() <= 1e-5);
    report(
        "04a",
        gammas_ok,
        &format!("gamma_1..7 = {:?}", &sys.gammas[..7]),
    );

    let verify = verify_greenbaum(&a, &b, &sys.c, &p, &sys.gammas).unwrap();
    let reproduction_ok = verify.breakdown.is_none() && verify.max_entry_error <= 1e-8;
    report(
        "04b",
        reproduction_ok,
        &format!(
            "bi-Lanczos reproduction error = {:.3e} against tolerance 1e-8 (double-precision floor: rounding the exact c to f64 already perturbs the tridiagonal by ~5e-8)",
            verify.max_entry_error
        ),
    );

    let mut modes_ok = true;
    for k in [7usize, 8usize] {
        let t = prescribed_tridiagonal(&p, &sys.gammas, k);
        let unstable = general_eigenvalues(&t)
            .unwrap()
            .iter()
            .filter(|z| z.re > 0.0)
            .count();
        modes_ok &= unstable == 5;
    }
    report(
        "04c",
        modes_ok,
        "sigma(T_7) and sigma(T_8) each hold five unstable modes",
    );

    assert!(gammas_ok, "gamma table deviates from the reference values");
    assert!(modes_ok, "unstable mode counts of T_7/T_8 are wrong");
    assert!(
        reproduction_ok,
        "bi-Lanczos reproduced the prescribed tridiagonal to {:.3e}, not 1e-8: \
         the map (A, b, c) -> T has condition ~1e12 here (biorthogonal basis \
         norms reach 1e16), so rounding c to f64 alone floors the error near \
         5e-8 and any f64 pipeline lands around 1e-4; the stated tolerance is \
         unreachable in double precision",
        verify.max_entry_error
    );
}

// ---------------------------------------------------------------------------
// 5-7. Property sweep over seeded (A, V) pairs
// ---------------------------------------------------------------------------
struct SweepOutcome {
    range_violations: usize,
    strip_violations: usize,
    strip_cap_violations: usize,
    disk_violations: usize,
    disk_cap_violations: usize,
    pairs: usize,
    ritz_checked: usize,
}

fn sweep() -> &'static SweepOutcome {
    static SWEEP: OnceLock<SweepOutcome> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let mut out = SweepOutcome {
            range_violations: 0,
            strip_violations: 0,
            strip_cap_violations: 0,
            disk_violations: 0,
            disk_cap_violations: 0,
            pairs: 0,
            ritz_checked: 0,
        };
        for pair in 0..200u64 {
            let n = 5 + (mix64(pair) % 26) as usize; // 5..=30
            let kmax = n.min(10);
            let k = 1 + (mix64(pair ^ 0xabcd) % kmax as u64) as usize;
            let a = random_complex(n, n, 1000 + pair);
            let v = random_orthonormal(n, k, 2000 + pair);
            let ones = vec![c(1.0, 0.0); n];
            let sys = LtiSystem::siso(a.clone(), &ones, &ones, Domain::Continuous).unwrap();
            let rom = project_orthogonal(&sys, &v).unwrap();

            // criterion 5: every Ritz value passes the membership test
            let support = NumericalRangeSupport::new(&a, 360).unwrap();
            let ritz = general_eigenvalues(&rom.ar).unwrap();
            for &theta in &ritz {
                out.ritz_checked += 1;
                if !support.contains(theta, 1e-8) {
                    out.range_violations += 1;
                }
            }
            // criterion 6: strips with slack 1e-8 plus the counting cap
            let strip_report = check_rom_strips(&a, &rom).unwrap();
            if !strip_report.all_pass {
                out.strip_violations += 1;
            }
            if strip_report.unstable_count > strip_report.p_cap {
                out.strip_cap_violations += 1;
            }
            // criterion 7: modulus bounds plus the discrete counting cap
            let disk_report = check_rom_disks(&a, &rom).unwrap();
            if !disk_report.all_pass {
                out.disk_violations += 1;
            }
            if disk_report.unstable_count > disk_report.p_cap {
                out.disk_cap_violations += 1;
            }
            out.pairs += 1;
        }
        out
    })
}

#[test]
fn criterion_05_numerical_range_membership_sweep() {
    let s = sweep();
    let ok = s.range_violations == 0 && s.pairs == 200;
    report(
        "05",
        ok,
        &format!(
            "{} Ritz values over {} pairs inside the numerical range (tol 1e-8), {} violations",
            s.ritz_checked, s.pairs, s.range_violations
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_06_strip_bounds_sweep() {
    let s = sweep();
    let ok = s.strip_violations == 0 && s.strip_cap_violations == 0;
    report(
        "06",
        ok,
        &format!(
            "strip violations {} / cap violations {} over {} pairs",
            s.strip_violations, s.strip_cap_violations, s.pairs
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_07_disk_bounds_sweep() {
    let s = sweep();
    let ok = s.disk_violations == 0 && s.disk_cap_violations == 0;
    report(
        "07",
        ok,
        &format!(
            "disk violations {} / cap violations {} over {} pairs",
            s.disk_violations, s.disk_cap_violations, s.pairs
        ),
    );
    assert!(ok);
}

// ---------------------------------------------------------------------------
// 8. Guaranteed-unstable subspace construction
// ---------------------------------------------------------------------------
#[test]
fn criterion_08_unstable_subspace_construction() {
    let mut ok = true;
    let mut built = 0;
    let mut detail = String::new();
    for seed in 0..20u64 {
        let n = 6 + (mix64(seed ^ 0x5151) % 35) as usize; // 6..=40
        let a = random_complex(n, n, 3000 + seed);
        let mu = hermitian_eigenvalues(&hermitian_part(&a)).unwrap();
        if !(mu[0] > 0.0 && mu[n - 1] < 0.0) {
            detail = format!("seed {seed} gave a definite Hermitian part");
            ok = false;
            break;
        }
        let sub = unstable_subspace(&a).unwrap();
        let q = sub.count;
        if q == 0 {
            detail = format!("seed {seed} produced q = 0 despite mu_1 > 0");
            ok = false;
            break;
        }
        let v = sub.basis.unwrap();
        let rom = v.adjoint().mul(&a).mul(&v);
        let min_re = general_eigenvalues(&rom)
            .unwrap()
            .iter()
            .map(|z| z.re)
            .fold(f64::INFINITY, f64::min);
        if min_re < sub.mu_q.unwrap() - 1e-8 {
            detail = format!(
                "seed {seed}: min Re sigma(V*AV) = {min_re} below mu_q = {}",
                sub.mu_q.unwrap()
            );
            ok = false;
            break;
        }
        built += 1;
    }
    report(
        "08",
        ok,
        &format!("{built}/20 indefinite seeds verified min Re >= mu_q - 1e-8 {detail}"),
    );
    assert!(ok, "{detail}");
}

// ---------------------------------------------------------------------------
// 9. Initial-slope identity of the transient envelope
// ---------------------------------------------------------------------------
#[test]
fn criterion_09_envelope_slope_identity() {
    let h = 1e-6;
    let mut ok = true;
    let mut worst = 0.0f64;
    let mut cases: Vec<ComplexMatrix> = vec![toeplitz_tridiag(8)];
    for seed in 0..5u64 {
        cases.push(random_real(10, 10, 4000 + seed));
    }
    for a in &cases {
        let omega = hermitian_eigenvalues(&hermitian_part(a)).unwrap()[0];
        assert!(
            omega.abs() > 1e-2,
            "fixture produced a near-zero numerical abscissa"
        );
        let e = matrix_exponential(&a.scale(c(h, 0.0))).unwrap();
        let fd = (operator_norm(&e).unwrap() - 1.0) / h;
        let rel = (fd - omega).abs() / omega.abs();
        worst = worst.max(rel);
        ok &= rel <= 1e-3;
    }
    report(
        "09",
        ok,
        &format!(
            "forward difference of ||exp(tA)|| at h = 1e-6 matches omega; worst relative error {worst:.2e}"
        ),
    );
    assert!(ok);
}

// ---------------------------------------------------------------------------
// 10. Moment matching of Krylov and bi-Lanczos reductions
// ---------------------------------------------------------------------------
fn krylov_rom(sys: &LtiSystem, k: usize) -> ReducedModel {
    let b = sys.b.column(0);
    let fact = arnoldi(&sys.a, &b, k).unwrap();
    assert!(fact.breakdown_step.is_none());
    project_orthogonal(sys, &fact.basis()).unwrap()
}

#[test]
fn criterion_10_moment_matching() {
    let mut ok = true;
    let mut worst_orth = 0.0f64;
    let mut worst_bl = 0.0f64;

    // orthogonal Krylov: k moments on well-conditioned dense systems
    for seed in 0..6u64 {
        let n = 12 + (mix64(seed) % 9) as usize; // 12..=20
        let mut a = random_complex(n, n, 5000 + seed).scale(c(0.5, 0.0));
        for i in 0..n {
            a[(i, i)] -= c(1.5, 0.0);
        }
        let b = random_vector(n, 6000 + seed);
        let cv = random_vector(n, 7000 + seed);
        let sys = LtiSystem::siso(a, &b, &cv, Domain::Continuous).unwrap();
        for k in [2usize, 4, 6] {
            let rom = krylov_rom(&sys, k);
            let rep = verify_moment_match(&sys, &rom, k).unwrap();
            for err in rep.relative_errors {
                worst_orth = worst_orth.max(err);
                ok &= err <= 1e-8;
            }
        }
    }

    // bi-Lanczos: 2k moments on Hermitian systems with generic b = c
    for seed in 0..4u64 {
        let n = 16;
        let a = hermitian_tridiag(n);
        let b: Vec<Complex64> = (0..n)
            .map(|i| c(unit_f64(8000 + seed, i as u64) + 1.5, 0.0))
            .collect();
        let sys = LtiSystem::siso(a.clone(), &b, &b, Domain::Continuous).unwrap();
        for k in [3usize, 5] {
            let fact = bilanczos(&a, &b, &b, k).unwrap();
            assert!(fact.breakdown_step.is_none());
            let rom = project_oblique(&sys, &fact.basis_v(), &fact.basis_w()).unwrap();
            let rep = verify_moment_match(&sys, &rom, 2 * k).unwrap();
            for err in rep.relative_errors {
                worst_bl = worst_bl.max(err);
                ok &= err <= 1e-6;
            }
        }
    }
    report(
        "10",
        ok,
        &format!(
            "worst Krylov k-moment error {worst_orth:.2e} (tol 1e-8), worst bi-Lanczos 2k-moment error {worst_bl:.2e} (tol 1e-6)"
        ),
    );
    assert!(ok);
}

// ---------------------------------------------------------------------------
// 11. Containment of the pseudospectrum in the fattened numerical range
// ---------------------------------------------------------------------------
#[test]
fn criterion_11_stone_containment() {
    let mut ok = true;
    let mut detail = String::new();

    let toeplitz = toeplitz_tridiag(8);
    let mut jordan = ComplexMatrix::zeros(8, 8);
    for i in 0..7 {
        jordan[(i, i + 1)] = c(1.0, 0.0);
    }
    // random normal matrix: seeded diagonal conjugated by a seeded unitary
    let lambda: Vec<Complex64> = (0..6)
        .map(|i| c(unit_f64(42, i as u64), unit_f64(43, i as u64)))
        .collect();
    let q = random_orthonormal(6, 6, 4242);
    let normal = q
        .mul(&ComplexMatrix::from_diagonal(&lambda))
        .mul(&q.adjoint());

    #[allow(clippy::type_complexity)]
    let cases: [(&str, &ComplexMatrix, (f64, f64), (f64, f64)); 3] = [
        ("toeplitz", &toeplitz, (-5.5, 1.5), (-3.0, 3.0)),
        ("jordan-8", &jordan, (-1.4, 1.4), (-1.4, 1.4)),
        ("normal", &normal, (-2.5, 2.5), (-2.5, 2.5)),
    ];
    for (name, a, re, im) in cases {
        for eps in [1e-1, 1e-2] {
            let grid = pseudospectra_grid(a, re, im, (81, 81), &[eps]).unwrap();
            let pass = stone_bound_check(a, &grid, eps).unwrap();
            if !pass {
                detail = format!("{name} at eps {eps} escaped W(A) + eps");
            }
            ok &= pass;
        }
    }
    report(
        "11",
        ok,
        if detail.is_empty() {
            "containment holds for the Toeplitz, Jordan, and normal cases at eps 1e-1 and 1e-2"
        } else {
            &detail
        },
    );
    assert!(ok, "{detail}");
}

// ---------------------------------------------------------------------------
// 12. Stabilization loop behavior (external flutter matrix optional)
// ---------------------------------------------------------------------------
#[test]
fn criterion_12_stabilization_loop() {
    // deterministic trace, caps respected each round
    let p = RitzPrescription {
        final_spectrum: (1..=8).map(|i| c(-(i as f64), 0.0)).collect(),
        stage_spectra: (1..8)
            .map(|k| (1..=k).map(|i| c(i as f64, 0.0)).collect())
            .collect(),
    };
    let (a, b) = prescribed_ritz_system(&p).unwrap();
    let t1 = stabilize_by_restart(&a, &b, 4, 10, Domain::Continuous).unwrap();
    let t2 = stabilize_by_restart(&a, &b, 4, 10, Domain::Continuous).unwrap();
    let mut ok = t1.rounds.len() == t2.rounds.len();
    for (r1, r2) in t1.rounds.iter().zip(&t2.rounds) {
        ok &= r1.unstable_count_after == r2.unstable_count_after;
        ok &= r1.filter_roots == r2.filter_roots;
        ok &= r1.ritz_values == r2.ritz_values;
    }
    let cap = strip_bounds(&a).unwrap().p_cap;
    for round in &t1.rounds {
        ok &= round.unstable_count_after <= cap;
    }
    ok &= t1.rounds[0].unstable_count_after == 4;

    // Hermitian input converges in round zero
    let ah = hermitian_tridiag(16);
    let x0: Vec<Complex64> = (0..16).map(|i| c(1.0 + 0.2 * i as f64, 0.0)).collect();
    let th = stabilize_by_restart(&ah, &x0, 5, 10, Domain::Continuous).unwrap();
    ok &= th.converged && th.rounds.len() == 1 && th.rounds[0].filter_roots.is_empty();

    report(
        "12",
        ok,
        &format!(
            "demo trace deterministic over {} rounds (cap {cap}), Hermitian input stable in round zero",
            t1.rounds.len()
        ),
    );
    assert!(ok);

    // optional external flutter-model check, gated on the file being supplied
    match std::env::var("ROMLAB_B767_FILE") {
        Err(_) => {
            println!(
                "criterion 12 (optional flutter model): SKIPPED - set ROMLAB_B767_FILE to a Matrix Market file to enable"
            );
        }
        Ok(path) => {
            let a = read_matrix_market_file(&path);
            assert_eq!(a.rows(), 55, "expected the 55x55 flutter matrix");
            let n = a.rows();
            let x0 = vec![c(1.0 / (n as f64).sqrt(), 0.0); n];
            let trace = stabilize_by_restart(&a, &x0, 20, 10, Domain::Continuous).unwrap();
            let counts: Vec<usize> = trace
                .rounds
                .iter()
                .map(|r| r.unstable_count_after)
                .collect();
            let counts_ok = counts == vec![5, 3, 1, 0];

            let ones = vec![c(1.0, 0.0); n];
            let sys = LtiSystem::siso(a.clone(), &ones, &ones, Domain::Continuous).unwrap();
            let round0 = arnoldi(&a, &x0, 20).unwrap().basis();
            let rom0 = project_orthogonal(&sys, &round0).unwrap();
            let rom_final = project_orthogonal(&sys, &trace.final_basis).unwrap();
            let omegas =
                romlab_core::stabilize::numerical_abscissa_comparison(&a, &[&rom0, &rom_final])
                    .unwrap();
            let expect = [8.45603e6, 2.24872e6, 8.90589e4];
            let omega_ok = omegas
                .iter()
                .zip(&expect)
                .all(|(w, e)| (w - e).abs() / e <= 1e-3);
            report(
                "12 (optional flutter model)",
                counts_ok && omega_ok,
                &format!("counts {counts:?}, omegas {omegas:?}"),
            );
            assert!(counts_ok && omega_ok);
        }
    }
}

/// Minimal Matrix Market reader for the optional external matrix (array or
/// coordinate layout, real/integer/complex fields, general symmetry).
fn read_matrix_market_file(path: &str) -> ComplexMatrix {
    let text = std::fs::read_to_string(path).expect("readable ROMLAB_B767_FILE");
    let mut lines = text.lines();
    let header = lines.next().expect("header").to_lowercase();
    let coordinate = header.contains("coordinate");
    let complex = header.contains("complex");
    let body: Vec<&str> = lines
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('%'))
        .collect();
    let dims: Vec<usize> = body[0]
        .split_whitespace()
        .map(|t| t.parse().expect("size line"))
        .collect();
    let (rows, cols) = (dims[0], dims[1]);
    let mut m = ComplexMatrix::zeros(rows, cols);
    if coordinate {
        for line in &body[1..] {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let i: usize = toks[0].parse().unwrap();
            let j: usize = toks[1].parse().unwrap();
            let re: f64 = toks[2].parse().unwrap();
            let im: f64 = if complex {
                toks[3].parse().unwrap()
            } else {
                0.0
            };
            m[(i - 1, j - 1)] = c(re, im);
        }
    } else {
        for (idx, line) in body[1..].iter().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let re: f64 = toks[0].parse().unwrap();
            let im: f64 = if complex {
                toks[1].parse().unwrap()
            } else {
                0.0
            };
            m[(idx % rows, idx / rows)] = c(re, im);
        }
    }
    m
}
