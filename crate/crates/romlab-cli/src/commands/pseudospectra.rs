//! Pseudospectra grids and abscissa/radius estimates.

use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use romlab_core::spectral::{
    numerical_range_boundary, pseudo_abscissa_estimate, pseudo_radius_estimate, pseudospectra_grid,
    PseudospectraGrid,
};

use crate::commands::{parse_f64_list, Cli};
use crate::error::{CliError, CliResult};
use crate::formats::sysdoc::read_document;
use crate::formats::write_atomic;

#[derive(Debug, Args)]
pub struct PseudospectraArgs {
    /// System document (JSON).
    #[arg(long)]
    pub input: PathBuf,

    /// Real-axis range "lo,hi" (default: 1.2x the numerical-range box).
    #[arg(long, allow_hyphen_values = true)]
    pub re_range: Option<String>,

    /// Imaginary-axis range "lo,hi" (default: 1.2x the numerical-range box).
    #[arg(long, allow_hyphen_values = true)]
    pub im_range: Option<String>,

    /// Grid points per axis.
    #[arg(long, default_value_t = 101)]
    pub resolution: usize,

    /// Comma-separated epsilon contour levels.
    #[arg(long, default_value = "1e-1,1e-2,1e-3,1e-4")]
    pub eps: String,
}

#[derive(Debug, Serialize)]
struct EpsEstimate {
    eps: f64,
    /// Grid estimate of the pseudospectral abscissa; null when no grid
    /// point lies inside the level set.
    alpha_estimate: Option<f64>,
    /// Grid estimate of the pseudospectral radius.
    rho_estimate: Option<f64>,
}

#[derive(Debug, Serialize)]
struct PseudospectraReport {
    re_range: (f64, f64),
    im_range: (f64, f64),
    resolution: usize,
    grid_spacing: f64,
    estimates: Vec<EpsEstimate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    csv: Option<String>,
}

fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

/// Default region: the numerical-range bounding box scaled by 1.2 about its
/// center, so that every epsilon level the check cares about is covered.
fn default_region(a: &romlab_core::ComplexMatrix) -> CliResult<((f64, f64), (f64, f64))> {
    let pts = numerical_range_boundary(a, 72)?;
    let (mut re_lo, mut re_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut im_lo, mut im_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in pts {
        re_lo = re_lo.min(p.re);
        re_hi = re_hi.max(p.re);
        im_lo = im_lo.min(p.im);
        im_hi = im_hi.max(p.im);
    }
    let expand = |lo: f64, hi: f64| {
        let mid = 0.5 * (lo + hi);
        let half = (0.5 * (hi - lo)).max(1e-3 * mid.abs().max(1.0));
        (mid - 1.2 * half, mid + 1.2 * half)
    };
    Ok((expand(re_lo, re_hi), expand(im_lo, im_hi)))
}

pub fn compute_grid(
    a: &romlab_core::ComplexMatrix,
    args: &PseudospectraArgs,
) -> CliResult<(PseudospectraGrid, Vec<f64>)> {
    let eps_levels = parse_f64_list(&args.eps, "--eps")?;
    if eps_levels.iter().any(|&e| e <= 0.0) {
        return Err(CliError::Input("--eps levels must be positive".into()));
    }
    if args.resolution < 2 {
        return Err(CliError::Input("--resolution must be at least 2".into()));
    }
    let (default_re, default_im) = if args.re_range.is_none() || args.im_range.is_none() {
        default_region(a)?
    } else {
        ((0.0, 0.0), (0.0, 0.0))
    };
    let parse_range =
        |text: &Option<String>, flag: &str, default: (f64, f64)| -> CliResult<(f64, f64)> {
            match text {
                None => Ok(default),
                Some(t) => {
                    let v = parse_f64_list(t, flag)?;
                    if v.len() != 2 || v[0] >= v[1] {
                        return Err(CliError::Input(format!("{flag}: expected \"lo,hi\"")));
                    }
                    Ok((v[0], v[1]))
                }
            }
        };
    let re_range = parse_range(&args.re_range, "--re-range", default_re)?;
    let im_range = parse_range(&args.im_range, "--im-range", default_im)?;
    let grid = pseudospectra_grid(
        a,
        re_range,
        im_range,
        (args.resolution, args.resolution),
        &eps_levels,
    )?;
    Ok((grid, eps_levels))
}

pub fn run(cli: &Cli, args: &PseudospectraArgs) -> CliResult<()> {
    let (_, resolved) = read_document(&args.input)?;
    let (grid, eps_levels) = compute_grid(&resolved.a, args)?;

    let csv_path = match &cli.output_dir {
        Some(dir) => {
            let path = dir.join("pseudospectra.csv");
            let mut buf = Vec::new();
            grid.write_csv(&mut buf)
                .map_err(|e| CliError::Output(format!("serializing grid: {e}")))?;
            write_atomic(&path, &buf)?;
            Some(path.to_string_lossy().into_owned())
        }
        None => None,
    };

    let estimates = eps_levels
        .iter()
        .map(|&eps| EpsEstimate {
            eps,
            alpha_estimate: finite(pseudo_abscissa_estimate(&grid, eps)),
            rho_estimate: finite(pseudo_radius_estimate(&grid, eps)),
        })
        .collect();
    let report = PseudospectraReport {
        re_range: (grid.real_axis[0], *grid.real_axis.last().unwrap()),
        im_range: (grid.imag_axis[0], *grid.imag_axis.last().unwrap()),
        resolution: args.resolution,
        grid_spacing: grid.spacing(),
        estimates,
        csv: csv_path,
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!(
            "grid [{:.4e}, {:.4e}] x [{:.4e}, {:.4e}] at {} points/axis (spacing {:.3e})",
            report.re_range.0,
            report.re_range.1,
            report.im_range.0,
            report.im_range.1,
            report.resolution,
            report.grid_spacing
        );
        for e in &report.estimates {
            let fmt = |v: Option<f64>| match v {
                Some(x) => format!("{x:+.6e}"),
                None => "none".to_string(),
            };
            println!(
                "eps {:>9.3e}: alpha_eps >= {}, rho_eps >= {}",
                e.eps,
                fmt(e.alpha_estimate),
                fmt(e.rho_estimate)
            );
        }
        if let Some(path) = &report.csv {
            println!("grid written to {path}");
        }
    }
    Ok(())
}
