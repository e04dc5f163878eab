use num_complex::Complex64;
use planar_ortho::geometry::{Hull, Region};
use planar_ortho::measures::MeasureExpr;
use planar_ortho::numerics::PrecisionContext;
use planar_ortho::orthopoly::{orthonormalize, OrthoFamily};
use planar_ortho::perturbation::{beta_sequence, decimal, PerturbationSetup};
use planar_ortho::zeros::{
    circle_grid, conjugation_gap, equilibrium_circle_compare, hull_check, inverse_points,
    potential_identity_gap, scatter_svg, zero_stats, Series, ZeroSet,
};
use serde_json::{json, Value};

use super::{
    c, context, max_f64, pentagon_measures, sector_geometry, unit_disk, zero_rows, zeros_at, ZERO_COLUMNS,
};
use crate::config::ExperimentConfig;
use crate::error::CliError;
use crate::output::{Artifacts, Check};

/// Modulus band around `|z1|` counted as clustering.
pub const CLUSTER_BAND: f64 = 0.05;
/// Fraction of zeros required in the band at the best degree.
pub const CLUSTER_FRACTION: f64 = 0.85;
/// Largest admissible KS distance of the zero arguments at the best degree.
pub const CLUSTER_KS: f64 = 0.15;
/// Largest admissible potential gap on `|z| = 2` at the best degree.
pub const POTENTIAL_GAP_TOL: f64 = 0.05;
/// Distance from the sector boundary counted as nearby.
pub const SECTOR_BAND: f64 = 0.1;
/// Required fraction of zeros near the sector boundary at `n = 120`.
pub const SECTOR_FRACTION: f64 = 0.3;
pub const SECTOR_DEGREE: usize = 120;

/// Per-degree zero diagnostics shared by the figure experiments.
fn describe(zs: &ZeroSet, hull: &Hull, ctx: &PrecisionContext, checks: &mut Vec<Check>, label: &str) -> Value {
    let inside = hull_check(zs, hull, ctx);
    let conj = conjugation_gap(zs);
    checks.push(Check::new(
        &format!("{label} zeros inside hull, n = {}", zs.degree),
        inside,
        format!("inflation 2^(-bits/4) = {:.3e}", ctx.slack(4.0)),
    ));
    checks.push(Check::new(
        &format!("{label} zeros closed under conjugation, n = {}", zs.degree),
        conj <= ctx.root_tol(),
        format!("matched gap {conj:.3e} <= {:.3e}", ctx.root_tol()),
    ));
    json!({
        "degree": zs.degree,
        "hull_check": inside,
        "conjugation_gap": conj,
        "cross_check_gap": zs.cross_check_gap,
        "max_residual_ratio": max_f64(zs.residual_ratios.iter().copied()),
    })
}

fn series<'a>(degrees: &[usize], points: &'a [Vec<Complex64>]) -> Vec<Series<'a>> {
    degrees
        .iter()
        .zip(points)
        .map(|(n, p)| Series { label: format!("n = {n}"), points: p })
        .collect()
}

/// Zeros of both families of the pentagon-with-lake perturbation.
pub fn pentagon(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let ctx = context(cfg)?;
    let (mu1, mu2) = pentagon_measures();
    let setup = PerturbationSetup::new(mu1, mu2, cfg.max_degree(), &ctx)?;
    let beta = beta_sequence(&setup)?;
    let outline = setup.mu1.outline_paths(256);
    let mut rows = Vec::new();
    let mut checks = Vec::new();
    let mut families = serde_json::Map::new();
    let mut plots = Vec::new();
    for (label, fam, mu, file) in [
        ("mu0", &setup.fam0, &setup.mu0, "plot.svg"),
        ("mu1", &setup.fam1, &setup.mu1, "plot_mu1.svg"),
    ] {
        let sets = zeros_at(fam, &cfg.degrees, &ctx)?;
        let hull = mu.support_hull();
        let stats: Vec<Value> = sets.iter().map(|zs| describe(zs, &hull, &ctx, &mut checks, label)).collect();
        families.insert(label.into(), Value::Array(stats));
        for zs in &sets {
            rows.extend(zero_rows(label, zs));
        }
        let pts: Vec<Vec<Complex64>> = sets.iter().map(ZeroSet::to_c64).collect();
        plots.push((
            file.to_string(),
            scatter_svg(&format!("zeros of p_n({label})"), &outline, &series(&cfg.degrees, &pts)),
        ));
    }
    Ok(Artifacts {
        columns: ZERO_COLUMNS.map(String::from).to_vec(),
        rows,
        json: json!({
            "families": families,
            "beta": cfg.degrees.iter().map(|&n| json!({"degree": n, "beta": decimal(&beta[n])})).collect::<Vec<_>>(),
        }),
        plots,
        checks,
    })
}

/// Zeros for area measure on the unit disk minus `|z - a| <= rho` against
/// the circle `|z| = |z1|`.
pub fn disk_hole_zeros(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let ctx = context(cfg)?;
    let pair = inverse_points(cfg.a, cfg.rho, &ctx)?;
    let radius = pair.z1.abs().to_f64();
    let lake = Region::disk(c(cfg.a, 0.0), cfg.rho)?;
    let mu = MeasureExpr::lake_difference(unit_disk(), lake)?;
    let fam: OrthoFamily = orthonormalize(&mu, cfg.max_degree(), &ctx)?;
    let sets = zeros_at(&fam, &cfg.degrees, &ctx)?;
    let hull = mu.support_hull();
    let grid = circle_grid(c(0.0, 0.0), 2.0, 64, 0.1);
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let mut per_degree = Vec::new();
    let mut best: Option<(usize, f64, f64, f64)> = None;
    let identity_tol = ctx.slack(3.0);
    for zs in &sets {
        let mut entry = describe(zs, &hull, &ctx, &mut checks, "mu");
        let stats = zero_stats(zs, &grid)?;
        let near = zs
            .zeros
            .iter()
            .filter(|z| (z.abs().to_f64() - radius).abs() < CLUSTER_BAND)
            .count() as f64
            / zs.degree as f64;
        let gap = equilibrium_circle_compare(zs, radius, &grid)?;
        let identity = grid
            .iter()
            .map(|&z| potential_identity_gap(&fam, zs, z))
            .collect::<Result<Vec<_>, _>>()?;
        let identity = max_f64(identity);
        checks.push(Check::new(
            &format!("potential identity, n = {}", zs.degree),
            identity <= identity_tol,
            format!("max gap {identity:.3e} <= {identity_tol:.3e}"),
        ));
        let obj = entry.as_object_mut().expect("object");
        obj.insert("fraction_near_circle".into(), json!(near));
        obj.insert("moduli_median".into(), json!(stats.moduli_median));
        obj.insert("moduli_mad".into(), json!(stats.moduli_mad));
        obj.insert("angle_ks".into(), json!(stats.angle_ks));
        obj.insert("near_origin".into(), json!(stats.near_origin));
        obj.insert("potential_gap".into(), json!(gap));
        obj.insert("potential_identity_gap".into(), json!(identity));
        per_degree.push(entry);
        let better = match best {
            None => true,
            Some((_, f, k, _)) => near > f || (near == f && stats.angle_ks < k),
        };
        if better {
            best = Some((zs.degree, near, stats.angle_ks, gap));
        }
        for row in zero_rows("mu", zs) {
            rows.push(row);
        }
    }
    let (best_n, best_near, best_ks, best_gap) = best.expect("at least one degree");
    checks.push(Check::new(
        "zeros cluster on |z| = |z1| at the best degree",
        best_near >= CLUSTER_FRACTION && best_ks < CLUSTER_KS,
        format!(
            "n = {best_n}: fraction {best_near:.3} >= {CLUSTER_FRACTION}, KS {best_ks:.4} < {CLUSTER_KS}"
        ),
    ));
    checks.push(Check::new(
        "potential gap to the uniform circle measure",
        best_gap <= POTENTIAL_GAP_TOL,
        format!("n = {best_n}: gap {best_gap:.3e} <= {POTENTIAL_GAP_TOL}"),
    ));
    let mut outline = mu.outline_paths(256);
    outline.push(circle_grid(c(0.0, 0.0), radius, 256, 0.0));
    let pts: Vec<Vec<Complex64>> = sets.iter().map(ZeroSet::to_c64).collect();
    let plot = scatter_svg(
        &format!("zeros for a = {}, rho = {}", cfg.a, cfg.rho),
        &outline,
        &series(&cfg.degrees, &pts),
    );
    Ok(Artifacts {
        columns: ZERO_COLUMNS.map(String::from).to_vec(),
        rows,
        json: json!({
            "inverse_points": {
                "z1": [decimal(&pair.z1.re), decimal(&pair.z1.im)],
                "z2": pair.z2.as_ref().map(|z| [decimal(&z.re), decimal(&z.im)]),
                "module_r": decimal(&pair.module_r),
                "concentric": pair.concentric,
            },
            "circle_radius": radius,
            "degrees": per_degree,
            "best_degree": best_n,
        }),
        plots: vec![("plot.svg".into(), plot)],
        checks,
    })
}

/// Zeros for area measure on the sector-and-disk archipelago minus a lake in
/// the sector, with their proximity to the sector boundary.
pub fn sector(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let ctx = context(cfg)?;
    let (g1, g, k) = sector_geometry();
    let mu = MeasureExpr::lake_difference(g, k)?;
    let fam = orthonormalize(&mu, cfg.max_degree(), &ctx)?;
    let sets = zeros_at(&fam, &cfg.degrees, &ctx)?;
    let hull = mu.support_hull();
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let mut per_degree = Vec::new();
    for zs in &sets {
        let mut entry = describe(zs, &hull, &ctx, &mut checks, "mu");
        let near = zs
            .to_c64()
            .iter()
            .filter(|z| g1.dist_to_boundary(**z) < SECTOR_BAND)
            .count() as f64
            / zs.degree as f64;
        entry
            .as_object_mut()
            .expect("object")
            .insert("fraction_near_sector_boundary".into(), json!(near));
        if zs.degree == SECTOR_DEGREE {
            checks.push(Check::new(
                "zeros approach the sector boundary",
                near >= SECTOR_FRACTION,
                format!("n = {SECTOR_DEGREE}: fraction within {SECTOR_BAND} is {near:.3} >= {SECTOR_FRACTION}"),
            ));
        }
        per_degree.push(entry);
        rows.extend(zero_rows("mu", zs));
    }
    let pts: Vec<Vec<Complex64>> = sets.iter().map(ZeroSet::to_c64).collect();
    let plot = scatter_svg(
        "zeros for the sector and disk with a lake",
        &mu.outline_paths(256),
        &series(&cfg.degrees, &pts),
    );
    Ok(Artifacts {
        columns: ZERO_COLUMNS.map(String::from).to_vec(),
        rows,
        json: json!({ "degrees": per_degree }),
        plots: vec![("plot.svg".into(), plot)],
        checks,
    })
}
