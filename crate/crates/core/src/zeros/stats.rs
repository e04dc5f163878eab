use num_complex::Complex64;
use rug::Float;
use serde::Serialize;

use super::zeroset::ZeroSet;
use crate::error::{Error, Result};
use crate::numerics::Complex;
use crate::orthopoly::OrthoFamily;

/// Zeros of modulus below this are left out of the angular statistic.
pub const ANGLE_EXCLUSION_RADIUS: f64 = 1e-15;

/// Empirical statistics of a zero set.
#[derive(Clone, Debug, Serialize)]
pub struct ZeroStats {
    pub moduli_median: f64,
    pub moduli_mad: f64,
    /// Kolmogorov–Smirnov distance of the arguments from the uniform law;
    /// 1 when every zero is excluded.
    pub angle_ks: f64,
    /// Zeros excluded from the angular statistic.
    pub near_origin: usize,
    /// `(z, U(z))` with `U(z) = -(1/n) Σ log|z - z_k|`.
    pub potential_samples: Vec<(Complex64, f64)>,
}

pub fn zero_stats(zs: &ZeroSet, grid: &[Complex64]) -> Result<ZeroStats> {
    let moduli: Vec<f64> = zs.zeros.iter().map(|z| z.abs().to_f64()).collect();
    let med = median(&moduli);
    let dev: Vec<f64> = moduli.iter().map(|m| (m - med).abs()).collect();
    let mut angles: Vec<f64> = zs
        .zeros
        .iter()
        .filter(|z| z.abs().to_f64() >= ANGLE_EXCLUSION_RADIUS)
        .map(|z| z.to_c64().arg().rem_euclid(std::f64::consts::TAU))
        .collect();
    let near_origin = zs.zeros.len() - angles.len();
    let angle_ks = ks_uniform(&mut angles);
    let potential_samples = grid
        .iter()
        .map(|&z| Ok((z, potential(zs, z)?)))
        .collect::<Result<_>>()?;
    Ok(ZeroStats {
        moduli_median: med,
        moduli_mad: median(&dev),
        angle_ks,
        near_origin,
        potential_samples,
    })
}

fn median(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Exact KS distance of a sample on `[0, 2π)` from the uniform law.
pub fn ks_uniform(angles: &mut [f64]) -> f64 {
    if angles.is_empty() {
        return 1.0;
    }
    angles.sort_by(f64::total_cmp);
    let n = angles.len() as f64;
    angles
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let f = a / std::f64::consts::TAU;
            ((i as f64 + 1.0) / n - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

/// Logarithmic potential of the normalized counting measure at `z`.
pub fn potential(zs: &ZeroSet, z: Complex64) -> Result<f64> {
    potential_mp(zs, &Complex::from_c64(zero_prec(zs), z)).map(|u| u.to_f64())
}

fn zero_prec(zs: &ZeroSet) -> u32 {
    zs.zeros.first().map(Complex::prec).unwrap_or(64)
}

fn potential_mp(zs: &ZeroSet, z: &Complex) -> Result<Float> {
    let prec = z.prec();
    let floor = 2f64.powf(-(prec as f64) / 2.0) * z.abs().to_f64().max(1.0);
    let mut acc = Float::new(prec);
    for zk in &zs.zeros {
        let d = (z - zk).abs();
        if d.to_f64() <= floor {
            return Err(Error::PotentialAtZero);
        }
        acc += d.ln();
    }
    Ok(-(acc / zs.zeros.len() as u32))
}

/// Largest gap between the counting-measure potential and that of the
/// uniform measure on `|z| = radius` (`-log|z|` outside, `-log radius` inside).
pub fn equilibrium_circle_compare(zs: &ZeroSet, radius: f64, grid: &[Complex64]) -> Result<f64> {
    let prec = zero_prec(zs);
    let radius = Float::with_val(prec, radius);
    let mut worst = 0.0f64;
    for &z in grid {
        let zz = Complex::from_c64(prec, z);
        let u = potential_mp(zs, &zz)?;
        let reference = -zz.abs().max(&radius).ln();
        worst = worst.max(Float::with_val(prec, u - reference).abs().to_f64());
    }
    Ok(worst)
}

/// `|U(z) + (1/n) log|p_n(z)/γ_n||`, comparing roots with coefficients.
pub fn potential_identity_gap(fam: &OrthoFamily, zs: &ZeroSet, z: Complex64) -> Result<f64> {
    let n = zs.degree;
    let prec = fam.prec();
    let zz = Complex::from_c64(prec, z);
    let monic = Float::with_val(prec, fam.evaluate(n, &zz)?.abs() / fam.gamma(n)?);
    let mut acc = Float::new(prec);
    for zk in &zs.zeros {
        acc += (&zz - zk).abs().ln();
    }
    let gap = Float::with_val(prec, acc - monic.ln()) / n as u32;
    Ok(gap.abs().to_f64())
}

/// `count` points on the circle `|z - center| = radius`, starting at angle `phase`.
pub fn circle_grid(center: Complex64, radius: f64, count: usize, phase: f64) -> Vec<Complex64> {
    (0..count)
        .map(|k| center + Complex64::from_polar(radius, phase + std::f64::consts::TAU * k as f64 / count as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[Complex64]) -> ZeroSet {
        ZeroSet {
            degree: points.len(),
            zeros: points.iter().map(|z| Complex::from_c64(212, *z)).collect(),
            residuals: vec![Float::new(212); points.len()],
            residual_ratios: vec![0.0; points.len()],
            cross_check_gap: None,
        }
    }

    #[test]
    fn cluster_at_origin() {
        let zs = set(&[Complex64::new(0.0, 0.0); 5]);
        let u = potential(&zs, Complex64::new(2.0, 0.0)).unwrap();
        assert!((u + 2f64.ln()).abs() < 1e-15);
        let st = zero_stats(&zs, &[Complex64::new(2.0, 0.0)]).unwrap();
        assert_eq!(st.near_origin, 5);
        assert_eq!(st.angle_ks, 1.0);
        let gap = equilibrium_circle_compare(&zs, 0.2, &circle_grid(Complex64::new(0.0, 0.0), 2.0, 16, 0.1)).unwrap();
        assert!(gap < 1e-15);
        assert!(matches!(potential(&zs, Complex64::new(0.0, 0.0)), Err(Error::PotentialAtZero)));
    }

    #[test]
    fn equally_spaced_circle() {
        let n = 24;
        let rho = 0.5;
        let pts = circle_grid(Complex64::new(0.0, 0.0), rho, n, 0.0);
        let zs = set(&pts);
        let st = zero_stats(&zs, &[]).unwrap();
        assert!((st.moduli_median - rho).abs() < 1e-15 && st.moduli_mad < 1e-15);
        assert!(st.angle_ks <= 1.0 / n as f64 + 1e-12);
        let z = Complex64::new(2.0, 0.3);
        // Π (z - z_k) = z^n - ρ^n
        let exact = -(z.powu(n as u32) - rho.powi(n as i32)).norm().ln() / n as f64;
        assert!((potential(&zs, z).unwrap() - exact).abs() < 1e-14);
    }
}
