//! Built-in example generators.

use clap::Args;
use num_complex::Complex64;

use romlab_core::adversarial::{prescribed_ritz_system, GreenbaumPrescription, RitzPrescription};
use romlab_core::system::Domain;
use romlab_core::ComplexMatrix;

use crate::commands::Cli;
use crate::error::{CliError, CliResult};
use crate::formats::sysdoc::{document_json, MatrixSpec, SystemDocument};
use crate::formats::write_atomic;

#[derive(Debug, Args)]
pub struct ExampleArgs {
    /// One of: toeplitz-tridiag, geometric-superdiag, dm12-demo,
    /// greenbaum-demo.
    pub name: String,

    /// Matrix order (toeplitz-tridiag, geometric-superdiag).
    #[arg(long)]
    pub n: Option<usize>,

    /// Subdiagonal entry (toeplitz-tridiag; default 0.5).
    #[arg(long, allow_hyphen_values = true)]
    pub sub: Option<f64>,

    /// Diagonal entry (toeplitz-tridiag; default -2).
    #[arg(long, allow_hyphen_values = true)]
    pub diag: Option<f64>,

    /// Superdiagonal entry (toeplitz-tridiag; default 2).
    #[arg(long = "super")]
    pub superdiag: Option<f64>,

    /// Superdiagonal decay ratio (geometric-superdiag; default 0.75).
    #[arg(long)]
    pub gamma: Option<f64>,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Tridiagonal Toeplitz matrix with the given bands.
pub fn toeplitz_tridiag(n: usize, sub: f64, diag: f64, superdiag: f64) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            c(diag)
        } else if j == i + 1 {
            c(superdiag)
        } else if i == j + 1 {
            c(sub)
        } else {
            c(0.0)
        }
    })
}

/// Discrete-time test matrix: diagonal 1/2, subdiagonal 1/8, superdiagonal
/// entries gamma^j.
pub fn geometric_superdiag(n: usize, gamma: f64) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            c(0.5)
        } else if j == i + 1 {
            c(gamma.powi(j as i32))
        } else if i == j + 1 {
            c(0.125)
        } else {
            c(0.0)
        }
    })
}

/// The prescription whose realization is the dm12-demo matrix: stage
/// spectra {1..k}, final spectrum {-1..-8}.
pub fn dm12_prescription() -> RitzPrescription {
    RitzPrescription {
        final_spectrum: (1..=8).map(|i| c(-(i as f64))).collect(),
        stage_spectra: (1..8)
            .map(|k| (1..=k).map(|i| c(i as f64)).collect())
            .collect(),
    }
}

/// The prescribed recurrence of the greenbaum-demo: all diagonal values 2,
/// all superdiagonal values 1, order 8.
pub fn greenbaum_demo_prescription() -> GreenbaumPrescription {
    GreenbaumPrescription {
        alphas: vec![c(2.0); 8],
        betas: vec![c(1.0); 7],
    }
}

fn unit_e1(n: usize) -> ComplexMatrix {
    let mut v = vec![Complex64::default(); n];
    v[0] = c(1.0);
    ComplexMatrix::column_vector(&v)
}

fn label(name: &str) -> Option<std::collections::BTreeMap<String, String>> {
    let mut m = std::collections::BTreeMap::new();
    m.insert("name".to_string(), name.to_string());
    Some(m)
}

/// Builds the named example document.
pub fn build(args: &ExampleArgs) -> CliResult<SystemDocument> {
    match args.name.as_str() {
        "toeplitz-tridiag" => {
            let n = args.n.unwrap_or(8);
            if n < 2 {
                return Err(CliError::Input("toeplitz-tridiag needs n >= 2".into()));
            }
            let a = toeplitz_tridiag(
                n,
                args.sub.unwrap_or(0.5),
                args.diag.unwrap_or(-2.0),
                args.superdiag.unwrap_or(2.0),
            );
            Ok(SystemDocument {
                a: MatrixSpec::inline(&a),
                b: Some(MatrixSpec::inline(&unit_e1(n))),
                c: Some(MatrixSpec::inline(&unit_e1(n))),
                d: None,
                domain: Domain::Continuous,
                labels: label("toeplitz-tridiag"),
                greenbaum: None,
            })
        }
        "geometric-superdiag" => {
            let n = args.n.unwrap_or(128);
            if n < 2 {
                return Err(CliError::Input("geometric-superdiag needs n >= 2".into()));
            }
            let a = geometric_superdiag(n, args.gamma.unwrap_or(0.75));
            Ok(SystemDocument {
                a: MatrixSpec::inline(&a),
                b: Some(MatrixSpec::inline(&unit_e1(n))),
                c: Some(MatrixSpec::inline(&unit_e1(n))),
                d: None,
                domain: Domain::Discrete,
                labels: label("geometric-superdiag"),
                greenbaum: None,
            })
        }
        "dm12-demo" => {
            let (a, b) = prescribed_ritz_system(&dm12_prescription())
                .map_err(CliError::Compute)?;
            Ok(SystemDocument {
                a: MatrixSpec::inline(&a),
                b: Some(MatrixSpec::inline(&ComplexMatrix::column_vector(&b))),
                c: Some(MatrixSpec::inline(&ComplexMatrix::column_vector(&b))),
                d: None,
                domain: Domain::Continuous,
                labels: label("dm12-demo"),
                greenbaum: None,
            })
        }
        "greenbaum-demo" => {
            let a = toeplitz_tridiag(16, 1.0, -2.0, 1.0);
            Ok(SystemDocument {
                a: MatrixSpec::inline(&a),
                b: Some(MatrixSpec::inline(&unit_e1(16))),
                c: None,
                d: None,
                domain: Domain::Continuous,
                labels: label("greenbaum-demo"),
                greenbaum: Some(greenbaum_demo_prescription()),
            })
        }
        other => Err(CliError::Input(format!(
            "unknown example {other:?}; known: toeplitz-tridiag, geometric-superdiag, dm12-demo, greenbaum-demo"
        ))),
    }
}

pub fn run(cli: &Cli, args: &ExampleArgs) -> CliResult<()> {
    let doc = build(args)?;
    let text = document_json(&doc);
    match &cli.output_dir {
        Some(dir) => {
            let path = dir.join(format!("{}.json", args.name));
            write_atomic(&path, text.as_bytes())?;
            if cli.json {
                println!("{{\"written\": {:?}}}", path.to_string_lossy());
            } else {
                println!("wrote {}", path.display());
            }
        }
        None => println!("{text}"),
    }
    Ok(())
}
