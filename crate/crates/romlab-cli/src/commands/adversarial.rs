//! Adversarial construction commands.

use std::path::PathBuf;

use clap::{Args, Subcommand};
use serde::Serialize;

use romlab_core::adversarial::{
    greenbaum_system, prescribed_ritz_system, verify_greenbaum, verify_prescribed_ritz,
    GreenbaumPrescription, GreenbaumVerifyReport, RitzPrescription, RitzVerifyReport,
};
use romlab_core::system::Domain;
use romlab_core::ComplexMatrix;

use crate::commands::Cli;
use crate::error::{CliError, CliResult};
use crate::formats::sysdoc::{document_json, read_document, MatrixSpec, SystemDocument};
use crate::formats::write_atomic;

#[derive(Debug, Subcommand)]
pub enum AdversarialCommand {
    /// Realize prescribed Krylov stage spectra (matrix + starting vector).
    Ritz(RitzArgs),
    /// Design the left starting vector realizing a prescribed bi-Lanczos
    /// recurrence.
    Greenbaum(GreenbaumArgs),
}

#[derive(Debug, Args)]
pub struct RitzArgs {
    /// Prescription JSON: {"final_spectrum": [[re,im],...],
    /// "stage_spectra": [[[re,im],...],...]}.
    #[arg(long)]
    pub prescription: PathBuf,
}

#[derive(Debug, Args)]
pub struct GreenbaumArgs {
    /// System document with A and b.
    #[arg(long)]
    pub input: PathBuf,

    /// Prescription JSON: {"alphas": [[re,im],...], "betas": [[re,im],...]}.
    /// Falls back to the document's bundled prescription.
    #[arg(long)]
    pub prescription: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct RitzOutput {
    system: SystemDocument,
    verify: RitzVerifyReport,
}

#[derive(Debug, Serialize)]
struct GreenbaumOutput {
    system: SystemDocument,
    gammas: Vec<f64>,
    verify: GreenbaumVerifyReport,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf, what: &str) -> CliResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{what} {}: {e}", path.display())))
}

pub fn run(cli: &Cli, cmd: &AdversarialCommand) -> CliResult<()> {
    match cmd {
        AdversarialCommand::Ritz(args) => run_ritz(cli, args),
        AdversarialCommand::Greenbaum(args) => run_greenbaum(cli, args),
    }
}

fn run_ritz(cli: &Cli, args: &RitzArgs) -> CliResult<()> {
    let p: RitzPrescription = read_json(&args.prescription, "prescription")?;
    let (a, b) = prescribed_ritz_system(&p)?;
    let verify = verify_prescribed_ritz(&a, &b, &p)?;
    let system = SystemDocument {
        a: MatrixSpec::inline(&a),
        b: Some(MatrixSpec::inline(&ComplexMatrix::column_vector(&b))),
        c: None,
        d: None,
        domain: Domain::Continuous,
        labels: None,
        greenbaum: None,
    };
    if let Some(dir) = &cli.output_dir {
        write_atomic(
            &dir.join("ritz-system.json"),
            document_json(&system).as_bytes(),
        )?;
    }
    let out = RitzOutput { system, verify };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("constructed order-{} system (b = e_1)", p.order());
        println!(
            "max stage Ritz mismatch: {:.3e}",
            out.verify.max_stage_mismatch()
        );
        println!("final spectrum mismatch: {:.3e}", out.verify.final_mismatch);
        if cli.output_dir.is_none() {
            println!("{}", document_json(&out.system));
        }
    }
    Ok(())
}

fn run_greenbaum(cli: &Cli, args: &GreenbaumArgs) -> CliResult<()> {
    let (doc, resolved) = read_document(&args.input)?;
    let p: GreenbaumPrescription = match &args.prescription {
        Some(path) => read_json(path, "prescription")?,
        None => resolved.greenbaum.clone().ok_or_else(|| {
            CliError::Input("no --prescription given and the document carries none".into())
        })?,
    };
    let b = resolved.b_vector()?;
    let sys = greenbaum_system(&resolved.a, &b, &p)?;
    let verify = verify_greenbaum(&resolved.a, &b, &sys.c, &p, &sys.gammas)?;
    let mut system = doc.clone();
    system.c = Some(MatrixSpec::inline(&ComplexMatrix::column_vector(&sys.c)));
    system.greenbaum = Some(p);
    if let Some(dir) = &cli.output_dir {
        write_atomic(
            &dir.join("greenbaum-system.json"),
            document_json(&system).as_bytes(),
        )?;
    }
    let out = GreenbaumOutput {
        system,
        gammas: sys.gammas,
        verify,
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("gammas:");
        for (j, g) in out.gammas.iter().enumerate() {
            println!("  gamma_{} = {:.6}", j + 1, g);
        }
        match &out.verify.breakdown {
            Some((step, kind)) => println!("bi-Lanczos breakdown at step {step} ({kind})"),
            None => println!(
                "bi-Lanczos completed; max tridiagonal deviation {:.3e} (tolerance {:.3e})",
                out.verify.max_entry_error, out.verify.tolerance
            ),
        }
        if cli.output_dir.is_none() {
            println!("{}", document_json(&out.system));
        }
    }
    Ok(())
}
