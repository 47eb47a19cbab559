//! Spectral summary and bound tables for a system.

use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use romlab_core::bounds::{
    disk_bounds_from_singular_values, strip_bounds_from_mu, DiskBounds, StripBounds,
};
use romlab_core::spectral::{spectral_summary, SpectralSummary};

use crate::commands::Cli;
use crate::error::CliResult;
use crate::formats::sysdoc::read_document;

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// System document (JSON).
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub alpha: f64,
    pub rho: f64,
    pub omega: f64,
    pub nu: f64,
    pub mu: Vec<f64>,
    pub singular_values: Vec<f64>,
    pub strip: StripBounds,
    pub disk: DiskBounds,
}

pub fn analyze(summary: &SpectralSummary) -> AnalyzeReport {
    AnalyzeReport {
        alpha: summary.alpha,
        rho: summary.rho,
        omega: summary.omega,
        nu: summary.nu,
        mu: summary.mu.clone(),
        singular_values: summary.s.clone(),
        strip: strip_bounds_from_mu(&summary.mu),
        disk: disk_bounds_from_singular_values(&summary.s),
    }
}

pub fn render_text(report: &AnalyzeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "spectral abscissa  alpha = {:+.6e}\nspectral radius    rho   = {:+.6e}\n",
        report.alpha, report.rho
    ));
    out.push_str(&format!(
        "numerical abscissa omega = {:+.6e}\nnumerical radius   nu    = {:+.6e}\n",
        report.omega, report.nu
    ));
    out.push_str(&format!(
        "\n{:>4}  {:>14}  {:>14}  {:>14}\n",
        "j", "M_j", "M_-j", "G_j"
    ));
    let n = report.mu.len();
    for j in 0..n.min(12) {
        out.push_str(&format!(
            "{:>4}  {:>14.5}  {:>14.5}  {:>14.5}\n",
            j + 1,
            report.strip.m[j],
            report.strip.m_neg[j],
            report.disk.g[j]
        ));
    }
    if n > 12 {
        out.push_str("   ...\n");
    }
    out.push_str(&format!(
        "\nstrip cap (continuous unstable modes) p = {}\ndisk cap  (discrete unstable modes)   p = {}\n",
        report.strip.p_cap, report.disk.p_cap
    ));
    out
}

pub fn run(cli: &Cli, args: &AnalyzeArgs) -> CliResult<()> {
    let (_, resolved) = read_document(&args.input)?;
    let summary = spectral_summary(&resolved.a)?;
    let report = analyze(&summary);
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print!("{}", render_text(&report));
    }
    Ok(())
}
