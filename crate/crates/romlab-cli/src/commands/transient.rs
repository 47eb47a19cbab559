//! Transient envelopes of the full model.

use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use romlab_core::spectral::{transient_envelope_continuous, transient_envelope_discrete};
use romlab_core::system::Domain;

use crate::commands::{parse_f64_list, Cli};
use crate::error::CliResult;
use crate::formats::sysdoc::read_document;
use crate::formats::write_atomic;

#[derive(Debug, Args)]
pub struct TransientArgs {
    /// System document (JSON).
    #[arg(long)]
    pub input: PathBuf,

    /// Comma-separated evaluation times (continuous systems; default
    /// 41 points on [0, 2]).
    #[arg(long)]
    pub times: Option<String>,

    /// Number of powers (discrete systems; default 100).
    #[arg(long)]
    pub steps: Option<usize>,
}

#[derive(Debug, Serialize)]
struct TransientReport {
    domain: Domain,
    grid: Vec<f64>,
    envelope: Vec<f64>,
    peak: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    csv: Option<String>,
}

pub fn run(cli: &Cli, args: &TransientArgs) -> CliResult<()> {
    let (_, resolved) = read_document(&args.input)?;
    let (grid, envelope) = match resolved.domain {
        Domain::Continuous => {
            let times = match &args.times {
                Some(t) => parse_f64_list(t, "--times")?,
                None => (0..=40).map(|i| i as f64 * 0.05).collect(),
            };
            let env = transient_envelope_continuous(&resolved.a, &times)?;
            (times, env)
        }
        Domain::Discrete => {
            let steps = args.steps.unwrap_or(100);
            let env = transient_envelope_discrete(&resolved.a, steps)?;
            ((0..=steps).map(|k| k as f64).collect(), env)
        }
    };
    let peak = envelope.iter().cloned().fold(0.0, f64::max);

    let csv_path = match &cli.output_dir {
        Some(dir) => {
            let path = dir.join("transient.csv");
            let mut text = String::from("t,envelope\n");
            for (t, v) in grid.iter().zip(&envelope) {
                text.push_str(&format!("{t:.16e},{v:.16e}\n"));
            }
            write_atomic(&path, text.as_bytes())?;
            Some(path.to_string_lossy().into_owned())
        }
        None => None,
    };

    let report = TransientReport {
        domain: resolved.domain,
        grid,
        envelope,
        peak,
        csv: csv_path,
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("peak envelope value: {:.6e}", report.peak);
        for (t, v) in report.grid.iter().zip(&report.envelope) {
            println!("{t:>12.5}  {v:.8e}");
        }
        if let Some(path) = &report.csv {
            println!("envelope written to {path}");
        }
    }
    Ok(())
}
