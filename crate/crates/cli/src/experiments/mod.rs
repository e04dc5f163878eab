//! One function per experiment, each returning its artifacts.

mod disk;
mod figures;
mod perturb;

use num_complex::Complex64;
use planar_ortho::geometry::Region;
use planar_ortho::measures::MeasureExpr;
use planar_ortho::numerics::PrecisionContext;
use planar_ortho::orthopoly::OrthoFamily;
use planar_ortho::perturbation::decimal;
use planar_ortho::zeros::{zeros_of, ZeroSet};
use rug::Float;

use crate::config::{Experiment, ExperimentConfig};
use crate::error::CliError;
use crate::output::Artifacts;

pub use disk::{circle_vs_area, disk_exact, lake_rates};
pub use figures::{disk_hole_zeros, pentagon, sector};
pub use perturb::{ps_report, toeplitz};

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    match cfg.experiment {
        Experiment::DiskExact => disk_exact(cfg),
        Experiment::LakeRates => lake_rates(cfg),
        Experiment::PsReport => ps_report(cfg),
        Experiment::Pentagon => pentagon(cfg),
        Experiment::DiskHoleZeros => disk_hole_zeros(cfg),
        Experiment::Sector => sector(cfg),
        Experiment::Toeplitz => toeplitz(cfg),
        Experiment::CircleVsArea => circle_vs_area(cfg),
    }
}

pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub(crate) fn context(cfg: &ExperimentConfig) -> Result<PrecisionContext, CliError> {
    Ok(PrecisionContext::new(cfg.precision_bits)?)
}

pub fn unit_disk() -> Region {
    Region::disk(c(0.0, 0.0), 1.0).expect("unit disk")
}

/// Pentagon with corners at the fifth roots of unity together with the disk
/// `|z - 3.5| <= 2/3`, and the lake `|z - 1/2| <= 1/4` inside the pentagon.
pub fn pentagon_geometry() -> (Region, Region) {
    let g = Region::union(vec![
        Region::unit_pentagon(),
        Region::disk(c(3.5, 0.0), 2.0 / 3.0).expect("disk"),
    ])
    .expect("separated parts");
    (g, Region::disk(c(0.5, 0.0), 0.25).expect("disk"))
}

/// `μ1 = A|_{G \ B}` and `μ2 = 2 A|_B` on the pentagon geometry.
pub fn pentagon_measures() -> (MeasureExpr, MeasureExpr) {
    let (g, b) = pentagon_geometry();
    let mu1 = MeasureExpr::lake_difference(g, b.clone()).expect("lake inside pentagon");
    (mu1, MeasureExpr::scaled(2.0, MeasureExpr::area(b)))
}

/// Sector of radius 1 and opening `3π/2` symmetric about the positive axis,
/// the disk `|z - 3.5| <= 2/3`, and the lake `|z - 1/2| <= 1/4`.
pub fn sector_geometry() -> (Region, Region, Region) {
    let g1 = Region::sector(c(0.0, 0.0), 1.0, -0.75, 0.75).expect("sector");
    let g = Region::union(vec![g1.clone(), Region::disk(c(3.5, 0.0), 2.0 / 3.0).expect("disk")])
        .expect("separated parts");
    (g1, g, Region::disk(c(0.5, 0.0), 0.25).expect("disk"))
}

/// Zeros of `p_n` at each requested degree, one thread per degree.
pub(crate) fn zeros_at(fam: &OrthoFamily, degrees: &[usize], ctx: &PrecisionContext) -> Result<Vec<ZeroSet>, CliError> {
    std::thread::scope(|s| {
        let handles: Vec<_> = degrees
            .iter()
            .map(|&n| s.spawn(move || zeros_of(fam, n, ctx)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("zero solver thread panicked").map_err(CliError::from))
            .collect()
    })
}

pub(crate) const ZERO_COLUMNS: [&str; 5] = ["family", "degree", "re", "im", "residual"];

pub(crate) fn zero_rows(label: &str, zs: &ZeroSet) -> Vec<Vec<String>> {
    zs.zeros
        .iter()
        .zip(&zs.residuals)
        .map(|(z, r)| {
            vec![
                label.to_string(),
                zs.degree.to_string(),
                decimal(&z.re),
                decimal(&z.im),
                short(r),
            ]
        })
        .collect()
}

/// Seventeen significant digits.
pub(crate) fn short(x: &Float) -> String {
    x.to_string_radix(10, Some(17))
}

pub(crate) fn max_f64(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, f64::max)
}

/// Least-squares slope of `ys` against `xs`.
pub fn ls_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Natural log of a positive multiprecision value, exact in range beyond f64.
pub(crate) fn ln(x: &Float) -> f64 {
    Float::with_val(x.prec(), x.ln_ref()).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_a_line() {
        let xs: Vec<f64> = (0..10).map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 - 0.5 * x).collect();
        assert!((ls_slope(&xs, &ys) + 0.5).abs() < 1e-14);
    }

    #[test]
    fn example_geometries_are_valid() {
        let (mu1, mu2) = pentagon_measures();
        mu1.validate().unwrap();
        mu2.validate().unwrap();
        let (g1, g, k) = sector_geometry();
        assert!(g1.contains(c(0.5, 0.0)) && !g1.contains(c(-0.5, 0.0)));
        MeasureExpr::lake_difference(g, k).unwrap();
    }
}
