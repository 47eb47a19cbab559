//! Reduced-order model construction and reporting.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use romlab_core::krylov::{arnoldi, bilanczos, pod_basis, shift_invert_basis, BreakdownKind};
use romlab_core::linalg::{canonical_cmp, general_eigenvalues};
use romlab_core::system::{
    project_oblique, project_orthogonal, verify_moment_match, Domain, LtiSystem, ReducedModel,
};

use crate::commands::{parse_complex, Cli};
use crate::error::{CliError, CliResult};
use crate::formats::matrix_market;
use crate::formats::sysdoc::read_document;
use crate::formats::write_atomic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Arnoldi,
    ShiftInvert,
    Bilanczos,
    Pod,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    /// System document (JSON).
    #[arg(long)]
    pub input: PathBuf,

    /// Basis construction method.
    #[arg(long, value_enum)]
    pub method: Method,

    /// Reduced order.
    #[arg(long)]
    pub k: usize,

    /// Expansion point "re" or "re,im" (shift-invert only).
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,

    /// Snapshot matrix file in Matrix Market format (pod only).
    #[arg(long)]
    pub snapshots: Option<PathBuf>,

    /// Number of moments in the match table (default: k, or 2k for
    /// bilanczos).
    #[arg(long)]
    pub moments: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct ReduceReport {
    pub method: String,
    pub requested_order: usize,
    pub achieved_order: usize,
    pub eigenvalues: Vec<Complex64>,
    pub unstable_count: usize,
    pub domain: Domain,
    pub moment_relative_errors: Vec<f64>,
    pub moment_guarded: Vec<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<(usize, String)>,
}

fn unstable_count(values: &[Complex64], domain: Domain) -> usize {
    values
        .iter()
        .filter(|t| match domain {
            Domain::Continuous => t.re >= 0.0,
            Domain::Discrete => t.norm() >= 1.0,
        })
        .count()
}

/// Builds the ROM and its report.
pub fn build_rom(
    sys: &LtiSystem,
    method: Method,
    k: usize,
    mu: Option<Complex64>,
    snapshots: Option<&romlab_core::ComplexMatrix>,
) -> CliResult<(ReducedModel, Option<(usize, String)>)> {
    let b = sys.b.column(0);
    match method {
        Method::Arnoldi => {
            let fact = arnoldi(&sys.a, &b, k)?;
            let rom = project_orthogonal(sys, &fact.basis())?;
            Ok((
                rom,
                fact.breakdown_step
                    .map(|s| (s, "invariant-subspace".to_string())),
            ))
        }
        Method::ShiftInvert => {
            let mu = mu.ok_or_else(|| {
                CliError::Input("--mu is required for the shift-invert method".into())
            })?;
            let fact = shift_invert_basis(&sys.a, &b, mu, k)?;
            let rom = project_orthogonal(sys, &fact.basis())?;
            Ok((
                rom,
                fact.breakdown_step
                    .map(|s| (s, "invariant-subspace".to_string())),
            ))
        }
        Method::Bilanczos => {
            let c = sys.c.adjoint().column(0);
            let fact = bilanczos(&sys.a, &b, &c, k)?;
            let m = fact.steps();
            let rom = project_oblique(sys, &fact.basis_v(), &fact.basis_w())?;
            let breakdown = fact.breakdown_step.map(|s| {
                let kind = match fact.breakdown_kind {
                    Some(BreakdownKind::Lucky) => "lucky",
                    Some(BreakdownKind::Serious) => "serious",
                    Some(BreakdownKind::NearBreakdown) => "near",
                    None => "unknown",
                };
                (s, kind.to_string())
            });
            debug_assert_eq!(rom.order(), m);
            Ok((rom, breakdown))
        }
        Method::Pod => {
            let snaps = snapshots.ok_or_else(|| {
                CliError::Input("--snapshots is required for the pod method".into())
            })?;
            if snaps.rows() != sys.order() {
                return Err(CliError::Input(format!(
                    "snapshot rows {} do not match system order {}",
                    snaps.rows(),
                    sys.order()
                )));
            }
            let v = pod_basis(snaps, k)?;
            let rom = project_orthogonal(sys, &v)?;
            Ok((rom, None))
        }
    }
}

pub fn run(cli: &Cli, args: &ReduceArgs) -> CliResult<()> {
    let (_, resolved) = read_document(&args.input)?;
    let sys = resolved.to_lti()?;
    if args.k == 0 || args.k > sys.order() {
        return Err(CliError::Input(format!(
            "--k must satisfy 1 <= k <= {}, got {}",
            sys.order(),
            args.k
        )));
    }
    let mu = match &args.mu {
        Some(text) => Some(parse_complex(text, "--mu")?),
        None => None,
    };
    let snapshots = match &args.snapshots {
        Some(path) => Some(matrix_market::read_file(path)?),
        None => None,
    };
    let (rom, breakdown) = build_rom(&sys, args.method, args.k, mu, snapshots.as_ref())?;

    let mut eigenvalues = general_eigenvalues(&rom.ar)?;
    eigenvalues.sort_by(canonical_cmp);
    let default_moments = match args.method {
        Method::Bilanczos => 2 * rom.order(),
        _ => rom.order(),
    };
    let mcount = args.moments.unwrap_or(default_moments).max(1);
    let match_report = verify_moment_match(&sys, &rom, mcount)?;

    let method_name = match args.method {
        Method::Arnoldi => "arnoldi",
        Method::ShiftInvert => "shift-invert",
        Method::Bilanczos => "bilanczos",
        Method::Pod => "pod",
    };
    let report = ReduceReport {
        method: method_name.to_string(),
        requested_order: args.k,
        achieved_order: rom.order(),
        unstable_count: unstable_count(&eigenvalues, sys.domain),
        eigenvalues,
        domain: sys.domain,
        moment_relative_errors: match_report.relative_errors,
        moment_guarded: match_report.guarded,
        breakdown,
    };

    if let Some(dir) = &cli.output_dir {
        write_atomic(
            &dir.join("rom_a.mtx"),
            matrix_market::write_string(&rom.ar).as_bytes(),
        )?;
        write_atomic(
            &dir.join("rom_v.mtx"),
            matrix_market::write_string(&rom.v).as_bytes(),
        )?;
        if rom.kind == romlab_core::system::ProjectionKind::Oblique {
            write_atomic(
                &dir.join("rom_w.mtx"),
                matrix_market::write_string(&rom.w).as_bytes(),
            )?;
        }
    }

    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!(
            "method {} order {} (requested {})",
            report.method, report.achieved_order, report.requested_order
        );
        if let Some((step, kind)) = &report.breakdown {
            println!("breakdown at step {step} ({kind})");
        }
        println!("eigenvalues (descending real part):");
        for t in &report.eigenvalues {
            println!("  {:+.8e} {:+.8e}i", t.re, t.im);
        }
        println!(
            "unstable modes ({}): {}",
            match report.domain {
                Domain::Continuous => "Re >= 0",
                Domain::Discrete => "|.| >= 1",
            },
            report.unstable_count
        );
        println!("moment match (relative errors):");
        for (s, (err, guarded)) in report
            .moment_relative_errors
            .iter()
            .zip(&report.moment_guarded)
            .enumerate()
        {
            let mark = if *guarded { "  [>1e12 scale]" } else { "" };
            println!("  s={s}: {err:.3e}{mark}");
        }
    }
    Ok(())
}
