//! Filter-restart stabilization command.

use std::path::PathBuf;

use clap::Args;
use num_complex::Complex64;
use serde::Serialize;

use romlab_core::krylov::arnoldi;
use romlab_core::stabilize::{
    compare_transients, numerical_abscissa_comparison, stabilize_by_restart, StabilizationRound,
};
use romlab_core::system::{project_orthogonal, Domain};

use crate::commands::{parse_f64_list, Cli};
use crate::error::{CliError, CliResult};
use crate::formats::sysdoc::read_document;
use crate::formats::write_atomic;

#[derive(Debug, Args)]
pub struct StabilizeArgs {
    /// System document (JSON); the starting vector is b unless
    /// --ones-start is given.
    #[arg(long)]
    pub input: PathBuf,

    /// Reduced order.
    #[arg(long)]
    pub k: usize,

    /// Maximum number of filter rounds after round zero.
    #[arg(long, default_value_t = 10)]
    pub rounds: usize,

    /// Start from the normalized all-ones vector instead of b.
    #[arg(long)]
    pub ones_start: bool,

    /// Envelope comparison grid: times for continuous systems, integer
    /// steps for discrete ones (default 41 points on [0, 2] / steps 0..40).
    #[arg(long)]
    pub times: Option<String>,
}

#[derive(Debug, Serialize)]
struct StabilizeReport {
    rounds: Vec<StabilizationRound>,
    converged: bool,
    /// omega of the full model, the round-0 ROM, and the final ROM.
    omega: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace_file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    envelope_file: Option<String>,
}

pub fn run(cli: &Cli, args: &StabilizeArgs) -> CliResult<()> {
    let (_, resolved) = read_document(&args.input)?;
    let sys = resolved.to_lti().or_else(|e| {
        if args.ones_start {
            // --ones-start does not need b; synthesize it for the system
            let n = resolved.a.rows();
            let ones = vec![Complex64::new(1.0, 0.0); n];
            romlab_core::system::LtiSystem::siso(resolved.a.clone(), &ones, &ones, resolved.domain)
                .map_err(|e2| CliError::Input(format!("system document: {e2}")))
        } else {
            Err(e)
        }
    })?;
    let n = sys.order();
    if args.k == 0 || args.k > n {
        return Err(CliError::Input(format!(
            "--k must satisfy 1 <= k <= {n}, got {}",
            args.k
        )));
    }
    let x0: Vec<Complex64> = if args.ones_start {
        let scale = 1.0 / (n as f64).sqrt();
        vec![Complex64::new(scale, 0.0); n]
    } else {
        resolved.b_vector()?
    };

    let trace = stabilize_by_restart(&sys.a, &x0, args.k, args.rounds, sys.domain)?;

    // round-0 ROM and final ROM for the envelope and abscissa comparisons
    let round0_basis = arnoldi(&sys.a, &x0, args.k)?.basis();
    let rom0 = project_orthogonal(&sys, &round0_basis)?;
    let rom_final = project_orthogonal(&sys, &trace.final_basis)?;
    let omega = numerical_abscissa_comparison(&sys.a, &[&rom0, &rom_final])?;

    let grid: Vec<f64> = match &args.times {
        Some(t) => parse_f64_list(t, "--times")?,
        None => match sys.domain {
            Domain::Continuous => (0..=40).map(|i| i as f64 * 0.05).collect(),
            Domain::Discrete => (0..=40).map(|i| i as f64).collect(),
        },
    };
    let table = compare_transients(&sys.a, &[&rom0, &rom_final], &grid, sys.domain)?;

    let mut trace_file = None;
    let mut envelope_file = None;
    if let Some(dir) = &cli.output_dir {
        let trace_json = serde_json::json!({
            "rounds": trace.rounds,
            "converged": trace.converged,
        });
        let tp = dir.join("trace.json");
        write_atomic(
            &tp,
            serde_json::to_string_pretty(&trace_json)
                .unwrap()
                .as_bytes(),
        )?;
        trace_file = Some(tp.to_string_lossy().into_owned());

        let mut csv = String::from("t,full,rom_round0,rom_final\n");
        for (i, t) in table.times.iter().enumerate() {
            csv.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                t, table.full[i], table.reduced[0][i], table.reduced[1][i]
            ));
        }
        let ep = dir.join("envelopes.csv");
        write_atomic(&ep, csv.as_bytes())?;
        envelope_file = Some(ep.to_string_lossy().into_owned());
    }

    let report = StabilizeReport {
        rounds: trace.rounds.clone(),
        converged: trace.converged,
        omega,
        trace_file,
        envelope_file,
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        for (r, round) in report.rounds.iter().enumerate() {
            println!(
                "round {r}: {} filter roots applied, {} unstable modes",
                round.filter_roots.len(),
                round.unstable_count_after
            );
        }
        println!(
            "converged: {} | omega full {:.6e}, round-0 ROM {:.6e}, final ROM {:.6e}",
            report.converged, report.omega[0], report.omega[1], report.omega[2]
        );
        if let Some(f) = &report.trace_file {
            println!("trace written to {f}");
        }
        if let Some(f) = &report.envelope_file {
            println!("envelopes written to {f}");
        }
    }
    if !trace.converged {
        return Err(CliError::NotConverged);
    }
    Ok(())
}
