//! Strip/disk bound tables and per-position intervals.

use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use romlab_core::bounds::{disk_bounds, strip_bounds, strip_interval, DiskBounds, StripBounds};

use crate::commands::Cli;
use crate::error::{CliError, CliResult};
use crate::formats::sysdoc::read_document;

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// System document (JSON).
    #[arg(long)]
    pub input: PathBuf,

    /// ROM order: also print the strip interval for each eigenvalue
    /// position j = 1..k.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Serialize)]
struct BoundsReport {
    strip: StripBounds,
    disk: DiskBounds,
    #[serde(skip_serializing_if = "Option::is_none")]
    intervals: Option<Vec<(f64, f64)>>,
}

pub fn run(cli: &Cli, args: &BoundsArgs) -> CliResult<()> {
    let (_, resolved) = read_document(&args.input)?;
    let strip = strip_bounds(&resolved.a)?;
    let disk = disk_bounds(&resolved.a)?;
    let intervals = match args.k {
        None => None,
        Some(k) => {
            if k < 1 || k > strip.order() {
                return Err(CliError::Input(format!(
                    "--k must satisfy 1 <= k <= {}, got {k}",
                    strip.order()
                )));
            }
            Some(
                (1..=k)
                    .map(|j| strip_interval(&strip, k, j))
                    .collect::<Result<Vec<_>, _>>()?,
            )
        }
    };
    let report = BoundsReport {
        strip,
        disk,
        intervals,
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("{:>4}  {:>14}  {:>14}  {:>14}", "j", "M_j", "M_-j", "G_j");
        for j in 0..report.strip.m.len() {
            println!(
                "{:>4}  {:>14.5}  {:>14.5}  {:>14.5}",
                j + 1,
                report.strip.m[j],
                report.strip.m_neg[j],
                report.disk.g[j]
            );
        }
        println!(
            "strip cap p = {}, disk cap p = {}",
            report.strip.p_cap, report.disk.p_cap
        );
        if let Some(iv) = &report.intervals {
            println!("\nstrips for a ROM of order {}:", iv.len());
            for (j, (lo, hi)) in iv.iter().enumerate() {
                println!("  Re theta_{} in [{:>12.5}, {:>12.5}]", j + 1, lo, hi);
            }
        }
    }
    Ok(())
}
