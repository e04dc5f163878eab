use num_complex::Complex64;
use planar_ortho::geometry::{Curve, Region};
use planar_ortho::measures::MeasureExpr;
use planar_ortho::numerics::{Complex, PrecisionContext};
use planar_ortho::orthopoly::{orthonormalize, OrthoFamily};
use planar_ortho::zeros::{
    circle_grid, conjugation_gap, equilibrium_circle_compare, hull_check, inverse_points, inverse_points_complex,
    potential_identity_gap, zeros_of, ZeroSet,
};
use proptest::prelude::*;
use rug::Float;

const BITS: u32 = 212;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(BITS).unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Families of measures symmetric about the real axis.
fn symmetric_families(n: usize) -> Vec<(&'static str, OrthoFamily)> {
    let ctx = ctx();
    let unit = Region::disk(c(0.0, 0.0), 1.0).unwrap();
    [
        (
            "disk with lake",
            MeasureExpr::lake_difference(unit, Region::disk(c(0.2, 0.0), 0.25).unwrap()).unwrap(),
        ),
        ("pentagon", MeasureExpr::area(Region::unit_pentagon())),
        ("sector", MeasureExpr::area(Region::sector(c(0.0, 0.0), 1.0, -0.75, 0.75).unwrap())),
        (
            "ellipse arclength",
            MeasureExpr::arclength(Curve::Ellipse { center: c(0.1, 0.0), semi_axes: [1.0, 0.5] }),
        ),
    ]
    .into_iter()
    .map(|(name, mu)| (name, orthonormalize(&mu, n, &ctx).unwrap()))
    .collect()
}

#[test]
fn zero_sets_are_certified_symmetric_and_in_the_hull() {
    let ctx = ctx();
    for (name, fam) in symmetric_families(40) {
        let hull = fam.measure().support_hull();
        for n in [10, 25, 40] {
            let zs = zeros_of(&fam, n, &ctx).unwrap();
            assert_eq!(zs.zeros.len(), n);
            let gap = zs.cross_check_gap.expect("cross-checked up to degree 40");
            assert!(gap <= 10.0 * ctx.root_tol(), "{name} n = {n}: QR gap {gap:e}");
            for r in &zs.residual_ratios {
                assert!(*r <= ctx.root_tol(), "{name} n = {n}: residual ratio {r:e}");
            }
            assert!(hull_check(&zs, &hull, &ctx), "{name} n = {n}: zero outside hull");
            let conj = conjugation_gap(&zs);
            assert!(conj <= ctx.root_tol(), "{name} n = {n}: conjugation gap {conj:e}");
        }
    }
}

#[test]
fn hull_check_rejects_a_displaced_zero() {
    let ctx = ctx();
    let (_, fam) = symmetric_families(20).remove(1);
    let mut zs = zeros_of(&fam, 20, &ctx).unwrap();
    let hull = fam.measure().support_hull();
    assert!(hull_check(&zs, &hull, &ctx));
    zs.zeros[0] = Complex::from_f64(BITS, 10.0, 0.0);
    assert!(!hull_check(&zs, &hull, &ctx));
}

#[test]
fn potential_matches_the_polynomial() {
    let ctx = ctx();
    let tol = ctx.slack(3.0);
    let grid: Vec<Complex64> = circle_grid(c(0.0, 0.0), 2.0, 16, 0.1)
        .into_iter()
        .chain(circle_grid(c(0.1, 0.0), 0.6, 8, 0.3))
        .collect();
    for (name, fam) in symmetric_families(30) {
        let zs = zeros_of(&fam, 30, &ctx).unwrap();
        for &z in &grid {
            let gap = potential_identity_gap(&fam, &zs, z).unwrap();
            assert!(gap <= tol, "{name} z = {z}: {gap:e}");
        }
    }
}

#[test]
fn zeros_at_the_origin_are_invisible_outside_the_circle() {
    let zs = ZeroSet {
        degree: 50,
        zeros: vec![Complex::zero(BITS); 50],
        residuals: vec![Float::new(BITS); 50],
        residual_ratios: vec![0.0; 50],
        cross_check_gap: None,
    };
    let grid = circle_grid(c(0.0, 0.0), 2.0, 64, 0.1);
    let gap = equilibrium_circle_compare(&zs, 0.2, &grid).unwrap();
    assert!(gap <= 1e-25, "{gap:e}");
}

#[test]
fn concentric_hole_is_flagged() {
    let p = inverse_points(0.0, 0.4, &ctx()).unwrap();
    assert!(p.concentric && p.z2.is_none() && p.residuals().is_none());
    assert!(p.z1.is_zero());
    assert_eq!(p.module_r.to_f64(), 0.4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn inverse_pair_invariants(
        a in 0.001..0.9f64,
        frac in 0.01..0.99f64,
        theta in 0.0..std::f64::consts::TAU,
    ) {
        let rho = (0.95 - a) * frac;
        let ctx = ctx();
        let tol = ctx.root_tol();
        let center = Complex64::from_polar(a, theta);
        let p = inverse_points_complex(center, rho, &ctx).unwrap();
        prop_assert!(!p.concentric);
        let z2 = p.z2.clone().unwrap();
        let res = p.residuals().unwrap();
        let scale = z2.abs().to_f64().max(1.0);
        prop_assert!(res.unit_circle <= tol, "unit residual {:e}", res.unit_circle);
        prop_assert!(res.hole_circle <= tol * scale, "hole residual {:e}", res.hole_circle);

        let z1 = p.z1.to_c64();
        prop_assert!((z1 - center).norm() < rho, "z1 = {z1} outside the hole");
        prop_assert!(z2.abs().to_f64() > 1.0);
        // z1 lies on the ray through the center.
        prop_assert!((z1 * center.conj()).im.abs() <= 1e-12 && (z1 * center.conj()).re > 0.0);

        let r = p.module_r.to_f64();
        prop_assert!(r > 0.0 && r < 1.0);
        // φ(z) = (z - z1)/(1 - conj(z1) z) maps the hole circle onto |w| = r.
        for k in 0..16 {
            let t = center + Complex64::from_polar(rho, k as f64 * 0.39);
            let w = (t - z1) / (1.0 - z1.conj() * t);
            prop_assert!((w.norm() - r).abs() <= 1e-9 * (1.0 + 1.0 / (1.0 - a - rho)), "|φ| = {} vs {r}", w.norm());
        }

        // Rotating the center rotates the pair and leaves the module alone.
        let real = inverse_points(a, rho, &ctx).unwrap();
        let rot = Complex::from_c64(BITS, Complex64::from_polar(1.0, theta));
        let rotated = &real.z1 * &rot;
        prop_assert!((&rotated - &p.z1).abs().to_f64() <= 1e-14);
        prop_assert!((real.module_r.to_f64() - r).abs() <= 1e-14);
    }
}
