use planar_ortho::geometry::{Curve, Region};
use planar_ortho::measures::MeasureExpr;
use planar_ortho::orthopoly::orthonormalize;
use planar_ortho::perturbation::{
    beta_bounds, beta_sequence, decimal, perturbation_report, ps_norms, PerturbationSetup,
};
use planar_ortho::zeros::{circle_grid, hull_check, scatter_svg, Series};
use rug::Float;
use serde_json::json;

use super::{c, context, ln, ls_slope, short, unit_disk, zeros_at};
use crate::config::ExperimentConfig;
use crate::error::CliError;
use crate::output::{Artifacts, Check};

/// Largest admissible off-monomial coefficient and relative `γ_n` error for
/// the disk family.
pub const DISK_EXACT_TOL: f64 = 1e-30;
/// Relative `γ_n` tolerance for the concentric lake closed form.
pub const LAKE_GAMMA_TOL: f64 = 1e-25;
/// Allowed distance of the fitted `log β_n` slope from `2 log r`.
pub const LAKE_SLOPE_TOL: f64 = 0.05;
/// Degree window of the slope fits.
pub const SLOPE_WINDOW: (usize, usize) = (20, 60);
/// Relative tolerance for `‖p_n(circle)‖²_{A|D} = 1/(2(n+1))`.
pub const CIRCLE_AREA_TOL: f64 = 1e-20;

/// Area measure on the unit disk against `√((n+1)/π) z^n`.
pub fn disk_exact(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let ctx = context(cfg)?;
    let n_max = cfg.max_degree();
    let mu = MeasureExpr::area(unit_disk());
    let fam = orthonormalize(&mu, n_max, &ctx)?;
    let pi = ctx.pi();
    let mut rows = Vec::new();
    let (mut worst_off, mut worst_gamma) = (0.0f64, 0.0f64);
    for n in 0..=n_max {
        let exact = Float::with_val(ctx.bits(), Float::with_val(ctx.bits(), n as u32 + 1) / &pi).sqrt();
        let gamma = fam.gamma(n)?;
        let rel = Float::with_val(ctx.bits(), gamma - &exact).abs() / &exact;
        let coeffs = fam.coeffs(n)?;
        let off = coeffs[..n].iter().map(|a| a.abs()).fold(Float::new(ctx.bits()), |m, x| m.max(&x));
        worst_off = worst_off.max(off.to_f64());
        worst_gamma = worst_gamma.max(rel.to_f64());
        rows.push(vec![n.to_string(), decimal(gamma), decimal(&exact), short(&rel), short(&off)]);
    }
    let zs = zeros_at(&fam, &[n_max], &ctx)?.remove(0);
    let inside = hull_check(&zs, &mu.support_hull(), &ctx);
    let at_origin = zs.zeros.iter().all(|z| z.is_zero());
    let checks = vec![
        Check::new(
            "off-monomial coefficients",
            worst_off <= DISK_EXACT_TOL,
            format!("max {worst_off:.3e} <= {DISK_EXACT_TOL:.0e}"),
        ),
        Check::new(
            "leading coefficients",
            worst_gamma <= DISK_EXACT_TOL,
            format!("max relative error {worst_gamma:.3e} <= {DISK_EXACT_TOL:.0e}"),
        ),
        Check::new("zeros inside hull", inside, format!("n = {n_max}")),
    ];
    let pts = zs.to_c64();
    let plot = scatter_svg(
        &format!("zeros of p_{n_max} for area measure on the unit disk"),
        &mu.outline_paths(256),
        &[Series { label: format!("n = {n_max}"), points: &pts }],
    );
    Ok(Artifacts {
        columns: ["n", "gamma", "gamma_exact", "gamma_rel_err", "off_monomial_max"]
            .map(String::from)
            .to_vec(),
        rows,
        json: json!({
            "max_off_monomial": worst_off,
            "max_gamma_rel_err": worst_gamma,
            "zeros_degree": n_max,
            "zeros_all_at_origin": at_origin,
            "ortho_residual": fam.ortho_residual(),
        }),
        plots: vec![("plot.svg".into(), plot)],
        checks,
    })
}

/// Unit disk with the lake `|z - a| <= rho` removed, perturbed back by the
/// lake's area measure; decay rates against `r = |a| + rho`.
pub fn lake_rates(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let ctx = context(cfg)?;
    let n_max = cfg.max_degree();
    let lake = Region::disk(c(cfg.a, 0.0), cfg.rho)?;
    let mu1 = MeasureExpr::lake_difference(unit_disk(), lake.clone())?;
    let setup = PerturbationSetup::new(mu1, MeasureExpr::area(lake), n_max, &ctx)?;
    let probes = cfg.probe_points.clone().unwrap_or_else(|| vec![c(2.0, 0.0)]);
    let report = perturbation_report(&setup, &probes)?;
    let r = cfg.a.abs() + cfg.rho;
    let concentric = cfg.a == 0.0;
    let prec = ctx.bits();
    let pi = ctx.pi();

    // max over the closed disk of |p_n(μ1) - p_n(μ0)| is attained on |z| = 1.
    let circle = circle_grid(c(0.0, 0.0), 1.0, 256, 0.0);
    let mut sup = vec![0.0f64; n_max + 1];
    for z in &circle {
        let z = planar_ortho::numerics::Complex::from_c64(prec, *z);
        let v0 = setup.fam0.evaluate_all(n_max, &z)?;
        let v1 = setup.fam1.evaluate_all(n_max, &z)?;
        for n in 0..=n_max {
            sup[n] = sup[n].max((&v1[n] - &v0[n]).abs().to_f64());
        }
    }

    let mut rows = Vec::new();
    let mut worst_gamma = 0.0f64;
    for n in 0..=n_max {
        let diff = Float::with_val(prec, report.diff.diff0[n].sqrt_ref());
        let mut row = vec![
            n.to_string(),
            decimal(&report.beta[n]),
            decimal(&report.beta_lo[n]),
            decimal(&report.beta_hi[n]),
            decimal(&diff),
            format!("{:e}", sup[n]),
            decimal(setup.fam1.gamma(n)?),
        ];
        if concentric {
            let base = Float::with_val(prec, Float::with_val(prec, n as u32 + 1) / &pi).sqrt();
            let r2 = Float::with_val(prec, cfg.rho).square();
            let tail = Float::with_val(prec, rug::ops::Pow::pow(&r2, n as u32 + 1));
            let exact = base / Float::with_val(prec, 1u32 - tail).sqrt();
            let rel = Float::with_val(prec, setup.fam1.gamma(n)? - &exact).abs() / &exact;
            worst_gamma = worst_gamma.max(rel.to_f64());
            row.push(decimal(&exact));
            row.push(short(&rel));
        }
        for p in &report.probes {
            row.push(format!("{:e}", p.deviation[n]));
        }
        rows.push(row);
    }

    let window: Vec<usize> = (SLOPE_WINDOW.0..=SLOPE_WINDOW.1.min(n_max)).collect();
    let fit = |f: &dyn Fn(usize) -> f64| {
        if window.len() < 3 {
            return None;
        }
        let xs: Vec<f64> = window.iter().map(|&n| n as f64).collect();
        let ys: Vec<f64> = window.iter().map(|&n| f(n)).collect();
        ys.iter().all(|y| y.is_finite()).then(|| ls_slope(&xs, &ys))
    };
    let slope_beta = fit(&|n| ln(&report.beta[n]));
    let slope_diff = fit(&|n| ln(&report.diff.diff0[n]) / 2.0);
    let slope_ratio = fit(&|n| report.probes.first().map_or(f64::NAN, |p| p.deviation[n].ln()));
    let slope_sup = fit(&|n| (sup[n] / n as f64).ln());

    let mut checks = Vec::new();
    if concentric {
        checks.push(Check::new(
            "closed-form leading coefficients",
            worst_gamma <= LAKE_GAMMA_TOL,
            format!("max relative error {worst_gamma:.3e} <= {LAKE_GAMMA_TOL:.0e}"),
        ));
        let target = 2.0 * r.ln();
        checks.push(match slope_beta {
            Some(s) => Check::new(
                "sharp rate of beta_n",
                (s - target).abs() <= LAKE_SLOPE_TOL,
                format!("slope {s:.5} vs 2 log r = {target:.5}"),
            ),
            None => Check::new("sharp rate of beta_n", false, "degree window too short".into()),
        });
    }

    let beta_pts: Vec<_> = (0..=n_max)
        .map(|n| c(n as f64, ln(&report.beta[n]) / std::f64::consts::LN_10))
        .collect();
    let diff_pts: Vec<_> = (0..=n_max)
        .map(|n| c(n as f64, ln(&report.diff.diff0[n]) / 2.0 / std::f64::consts::LN_10))
        .collect();
    let plot = scatter_svg(
        "log10 beta_n and log10 of the L2 difference against n",
        &[],
        &[
            Series { label: "log10 beta_n".into(), points: &beta_pts },
            Series { label: "log10 diff".into(), points: &diff_pts },
        ],
    );

    let mut columns: Vec<String> = ["n", "beta", "beta_lo", "beta_hi", "l2_diff", "sup_diff", "gamma1"]
        .map(String::from)
        .to_vec();
    if concentric {
        columns.push("gamma1_exact".into());
        columns.push("gamma1_rel_err".into());
    }
    for k in 0..report.probes.len() {
        columns.push(format!("ratio_dev_{k}"));
    }
    Ok(Artifacts {
        columns,
        rows,
        json: json!({
            "r": r,
            "concentric": concentric,
            "slope_window": [SLOPE_WINDOW.0, SLOPE_WINDOW.1.min(n_max)],
            "slopes": {
                "log_beta": slope_beta, "expected_log_beta": 2.0 * r.ln(),
                "log_l2_diff": slope_diff, "log_ratio_dev": slope_ratio,
                "log_sup_diff_over_n": slope_sup, "expected_log_r": r.ln(),
            },
            "max_gamma_rel_err": if concentric { Some(worst_gamma) } else { None },
            "report": report.to_json(),
        }),
        plots: vec![("plot.svg".into(), plot)],
        checks,
    })
}

/// Arclength on the unit circle perturbed by area measure on the unit disk.
pub fn circle_vs_area(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let ctx = context(cfg)?;
    let n_max = cfg.max_degree();
    let mu1 = MeasureExpr::arclength(Curve::Circle { center: c(0.0, 0.0), radius: 1.0 });
    let setup = PerturbationSetup::new(mu1, MeasureExpr::area(unit_disk()), n_max, &ctx)?;
    let (ps, ps0) = ps_norms(&setup)?;
    let beta = beta_sequence(&setup)?;
    let (lo, hi) = beta_bounds(&setup)?;
    let prec = ctx.bits();
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    let mut measured = Vec::new();
    let mut expected = Vec::new();
    for n in 0..=n_max {
        let ps2 = Float::with_val(prec, ps[n].square_ref());
        let exact = Float::with_val(prec, 1u32) / (2 * (n as u32 + 1));
        let rel = Float::with_val(prec, &ps2 - &exact).abs() / &exact;
        worst = worst.max(rel.to_f64());
        measured.push(c(n as f64, ln(&ps2) / std::f64::consts::LN_10));
        expected.push(c(n as f64, ln(&exact) / std::f64::consts::LN_10));
        rows.push(vec![
            n.to_string(),
            decimal(&ps2),
            decimal(&exact),
            short(&rel),
            decimal(&Float::with_val(prec, ps0[n].square_ref())),
            decimal(&beta[n]),
            decimal(&lo[n]),
            decimal(&hi[n]),
        ]);
    }
    let checks = vec![Check::new(
        "squared PS norm equals 1/(2(n+1))",
        worst <= CIRCLE_AREA_TOL,
        format!("max relative error {worst:.3e} <= {CIRCLE_AREA_TOL:.0e}"),
    )];
    let plot = scatter_svg(
        "log10 of the squared PS norm against n",
        &[],
        &[
            Series { label: "computed".into(), points: &measured },
            Series { label: "1/(2(n+1))".into(), points: &expected },
        ],
    );
    Ok(Artifacts {
        columns: ["n", "ps_norm_sq", "ps_norm_sq_exact", "rel_err", "ps_norm0_sq", "beta", "beta_lo", "beta_hi"]
            .map(String::from)
            .to_vec(),
        rows,
        json: json!({
            "max_rel_err": worst,
            "ps_norm_sq": ps.iter().map(|x| decimal(&Float::with_val(prec, x.square_ref()))).collect::<Vec<_>>(),
            "beta": beta.iter().map(decimal).collect::<Vec<_>>(),
        }),
        plots: vec![("plot.svg".into(), plot)],
        checks,
    })
}
