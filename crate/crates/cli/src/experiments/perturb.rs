use num_complex::Complex64;
use planar_ortho::measures::MeasureExpr;
use planar_ortho::orthopoly::orthonormalize;
use planar_ortho::perturbation::{
    decimal, default_probes, perturbation_report, toeplitz_diagnostic, PerturbationSetup,
};
use planar_ortho::zeros::{scatter_svg, Series};
use rug::Float;
use serde_json::json;

use super::{context, pentagon_measures, unit_disk, zeros_at};
use crate::config::ExperimentConfig;
use crate::error::CliError;
use crate::output::{Artifacts, Check};

/// Tolerance for the disk subdiagonal `√((n+1)/(n+2))`.
pub const TOEPLITZ_DISK_TOL: f64 = 1e-25;

/// Full perturbation report for `μ0 = μ1 + μ2`; the pentagon example when no
/// measures are configured.
pub fn ps_report(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let ctx = context(cfg)?;
    let (mu1, mu2) = match (&cfg.mu1, &cfg.mu2) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => pentagon_measures(),
    };
    let n_max = cfg.max_degree();
    let setup = PerturbationSetup::new(mu1, mu2, n_max, &ctx)?;
    let probes = match &cfg.probe_points {
        Some(p) => p.clone(),
        None => default_probes(&setup.mu1.support_hull()),
    };
    let report = perturbation_report(&setup, &probes)?;
    let header = report.csv_header();
    let rows = report
        .to_csv(&[])
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    let z0 = zeros_at(&setup.fam0, &[n_max], &ctx)?.remove(0).to_c64();
    let z1 = zeros_at(&setup.fam1, &[n_max], &ctx)?.remove(0).to_c64();
    let plot = scatter_svg(
        &format!("zeros of p_{n_max}(mu0) and p_{n_max}(mu1)"),
        &setup.mu1.outline_paths(256),
        &[
            Series { label: "mu0".into(), points: &z0 },
            Series { label: "mu1".into(), points: &z1 },
            Series { label: "probes".into(), points: &probes },
        ],
    );
    let beta_half = report.beta[n_max / 2].to_f64();
    let beta_end = report.beta[n_max].to_f64();
    let checks = vec![Check::new(
        "beta_N below beta_(N/2)",
        beta_end < beta_half,
        format!("{beta_end:.3e} < {beta_half:.3e}"),
    )];
    Ok(Artifacts {
        columns: header,
        rows,
        json: json!({
            "mu1": setup.mu1,
            "mu2": setup.mu2,
            "report": report.to_json(),
        }),
        plots: vec![("plot.svg".into(), plot)],
        checks,
    })
}

/// Hessenberg diagonals: the disk subdiagonal against its closed form and
/// the pentagon `μ0` diagonals `k = -1, 0, 1` with their last-quarter spread.
pub fn toeplitz(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let ctx = context(cfg)?;
    let n_max = cfg.max_degree();
    let prec = ctx.bits();
    let disk = orthonormalize(&MeasureExpr::area(unit_disk()), n_max, &ctx)?;
    let (disk_sub, _) = toeplitz_diagnostic(&disk, -1, (0, n_max - 1))?;
    let mut worst = 0.0f64;
    let mut rows = Vec::new();
    for (n, b) in disk_sub.iter().enumerate() {
        let exact = Float::with_val(prec, Float::with_val(prec, n as u32 + 1) / (n as u32 + 2)).sqrt();
        let dev = (b - &planar_ortho::numerics::Complex::from_real(exact.clone())).abs().to_f64();
        worst = worst.max(dev);
        rows.push(vec![
            "disk".into(),
            "-1".into(),
            n.to_string(),
            decimal(&b.re),
            decimal(&b.im),
            decimal(&exact),
        ]);
    }
    let (mu1, mu2) = pentagon_measures();
    let mu0 = MeasureExpr::sum(vec![mu1, mu2]);
    let fam = orthonormalize(&mu0, n_max, &ctx)?;
    let mut spreads = Vec::new();
    let mut plot_points: Vec<(String, Vec<Complex64>)> = Vec::new();
    for k in [-1isize, 0, 1] {
        let start = k.max(0) as usize;
        let (seq, osc) = toeplitz_diagnostic(&fam, k, (start, n_max - 1))?;
        spreads.push(json!({"k": k, "last_quarter_oscillation": osc, "last": [seq.last().map(|z| decimal(&z.re)), seq.last().map(|z| decimal(&z.im))]}));
        for (i, b) in seq.iter().enumerate() {
            rows.push(vec![
                "pentagon_mu0".into(),
                k.to_string(),
                (start + i).to_string(),
                decimal(&b.re),
                decimal(&b.im),
                String::new(),
            ]);
        }
        plot_points.push((format!("k = {k}"), seq.iter().map(|z| z.to_c64()).collect()));
    }
    let series: Vec<Series> = plot_points
        .iter()
        .map(|(l, p)| Series { label: l.clone(), points: p })
        .collect();
    let plot = scatter_svg("Hessenberg diagonals of the pentagon family", &[], &series);
    let checks = vec![Check::new(
        "disk subdiagonal equals sqrt((n+1)/(n+2))",
        worst <= TOEPLITZ_DISK_TOL,
        format!("max deviation {worst:.3e} <= {TOEPLITZ_DISK_TOL:.0e}"),
    )];
    Ok(Artifacts {
        columns: ["family", "k", "n", "re", "im", "exact"].map(String::from).to_vec(),
        rows,
        json: json!({
            "disk_subdiagonal_max_deviation": worst,
            "pentagon_mu0": spreads,
        }),
        plots: vec![("plot.svg".into(), plot)],
        checks,
    })
}
