use num_complex::Complex64;
use planar_ortho::geometry::{Curve, Region};
use planar_ortho::measures::MeasureExpr;
use planar_ortho::numerics::{Complex, PrecisionContext};
use planar_ortho::perturbation::{
    beta_bounds, beta_sequence, christoffel_ratios, christoffel_sandwich, diff_norms, ps_norms, ratio_at,
    PerturbationSetup,
};
use rug::ops::CompleteRound;
use rug::Float;

const BITS: u32 = 212;
const N: usize = 30;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(BITS).unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn unit_disk() -> Region {
    Region::disk(c(0.0, 0.0), 1.0).unwrap()
}

fn lake_setup(center: f64, radius: f64, n: usize) -> PerturbationSetup {
    let lake = Region::disk(c(center, 0.0), radius).unwrap();
    let mu1 = MeasureExpr::lake_difference(unit_disk(), lake.clone()).unwrap();
    PerturbationSetup::new(mu1, MeasureExpr::area(lake), n, &ctx()).unwrap()
}

struct Case {
    name: &'static str,
    setup: PerturbationSetup,
    /// `β_n > 0` for every `n`, so the decay check is meaningful.
    strictly_perturbed: bool,
}

fn cases() -> Vec<Case> {
    let ctx = ctx();
    let pentagon = Region::union(vec![Region::unit_pentagon(), Region::disk(c(3.5, 0.0), 2.0 / 3.0).unwrap()]).unwrap();
    let pentagon_lake = Region::disk(c(0.5, 0.0), 0.25).unwrap();
    vec![
        Case { name: "concentric lake", setup: lake_setup(0.0, 0.5, N), strictly_perturbed: true },
        Case { name: "shifted lake", setup: lake_setup(0.2, 0.25, N), strictly_perturbed: true },
        Case {
            name: "pentagon with lake",
            setup: PerturbationSetup::new(
                MeasureExpr::lake_difference(pentagon, pentagon_lake.clone()).unwrap(),
                MeasureExpr::scaled(2.0, MeasureExpr::area(pentagon_lake)),
                N,
                &ctx,
            )
            .unwrap(),
            strictly_perturbed: true,
        },
        Case {
            name: "atom at the origin",
            setup: PerturbationSetup::new(MeasureExpr::area(unit_disk()), MeasureExpr::atom(c(0.0, 0.0), 1.0), N, &ctx)
                .unwrap(),
            strictly_perturbed: false,
        },
        Case {
            name: "circle plus disk",
            setup: PerturbationSetup::new(
                MeasureExpr::arclength(Curve::Circle { center: c(0.0, 0.0), radius: 1.0 }),
                MeasureExpr::area(unit_disk()),
                N,
                &ctx,
            )
            .unwrap(),
            strictly_perturbed: true,
        },
    ]
}

fn probes(setup: &PerturbationSetup) -> Vec<Complex64> {
    let hull = setup.mu1.support_hull();
    let (lo, hi) = (-1.5, 5.0);
    (0..12)
        .map(|k| c(lo + (hi - lo) * k as f64 / 11.0, if k % 2 == 0 { 1.7 } else { -0.4 }))
        .chain([c(0.0, 0.0), c(0.3, 0.2)])
        .filter(|z| hull.dist(*z) > 0.05 || hull.contains(*z, 0.0))
        .collect()
}

#[test]
fn leading_coefficients_and_christoffel_functions_compare() {
    let tol = ctx().slack(3.0);
    for case in cases() {
        let s = &case.setup;
        for n in 0..=N {
            let g0 = s.fam0.gamma(n).unwrap().to_f64();
            let g1 = s.fam1.gamma(n).unwrap().to_f64();
            assert!(g0 <= g1 * (1.0 + tol), "{}: γ_{n}(μ0) > γ_{n}(μ1)", case.name);
        }
        for z in probes(s) {
            let zz = Complex::from_c64(BITS, z);
            let l0 = s.fam0.christoffel_all(N, &zz).unwrap();
            let l1 = s.fam1.christoffel_all(N, &zz).unwrap();
            for n in 0..=N {
                let excess = ((&l1[n] - &l0[n]).complete(BITS) / &l0[n]).to_f64();
                assert!(excess <= tol, "{}: λ_{n}(μ1, {z}) > λ_{n}(μ0, {z})", case.name);
            }
            christoffel_ratios(s, z).unwrap();
        }
    }
}

#[test]
fn beta_sits_between_its_bounds() {
    for case in cases() {
        let s = &case.setup;
        let beta = beta_sequence(s).unwrap();
        let (lo, hi) = beta_bounds(s).unwrap();
        let slack = s.slack();
        for n in 0..=N {
            assert!((&lo[n] - &beta[n]).complete(BITS).to_f64() <= slack, "{} n = {n}", case.name);
            assert!((&beta[n] - &hi[n]).complete(BITS).to_f64() <= slack, "{} n = {n}", case.name);
        }
        if case.strictly_perturbed {
            assert!(beta[N] < beta[N / 2], "{}: β_N = {} not below β_(N/2) = {}", case.name, beta[N], beta[N / 2]);
        }
    }
}

#[test]
fn norm_identities_hold() {
    for case in cases() {
        let s = &case.setup;
        let d = diff_norms(s).unwrap();
        let slack = s.slack();
        for n in 0..=N {
            for dev in [d.dev0[n], d.dev1[n], d.parseval_dev[n], d.additivity_dev[n]] {
                assert!(dev <= slack, "{} n = {n}: {dev:e}", case.name);
            }
        }
        let (ps, ps0) = ps_norms(s).unwrap();
        for n in 0..=N {
            assert!(ps0[n].to_f64() <= ps[n].to_f64() * (1.0 + slack) + slack, "{} n = {n}", case.name);
        }
    }
}

#[test]
fn ratio_bound_holds_outside_the_hull() {
    for case in cases() {
        let s = &case.setup;
        let hull = s.mu1.support_hull();
        for z in probes(s).into_iter().filter(|z| hull.dist(*z) > 0.05) {
            for n in [5, 15, N] {
                let sample = ratio_at(s, z, n).unwrap();
                let bound = sample.bound.expect("outside the hull");
                assert!(sample.deviation <= bound + s.slack(), "{} n = {n} z = {z}", case.name);
            }
        }
    }
}

#[test]
fn christoffel_sandwich_holds() {
    for case in cases() {
        let s = &case.setup;
        let (ps, _) = ps_norms(s).unwrap();
        for z in probes(s) {
            for (n, m) in [(10, 3), (N, 10), (N, 25)] {
                christoffel_sandwich(s, &ps, z, n, m, None)
                    .unwrap_or_else(|e| panic!("{} n = {n} m = {m} z = {z}: {e}", case.name));
            }
        }
    }
}

#[test]
fn circle_norms_in_the_disk_have_closed_form() {
    let s = &cases().into_iter().find(|c| c.name == "circle plus disk").unwrap().setup;
    let (ps, _) = ps_norms(s).unwrap();
    for (n, p) in ps.iter().enumerate() {
        let exact = Float::with_val(BITS, 2 * (n as u32 + 1)).recip();
        let rel = ((p.clone().square() - &exact) / &exact).to_f64().abs();
        assert!(rel <= 1e-20, "n = {n}: {rel:e}");
    }
}

#[test]
fn kernel_diverges_off_the_disk() {
    let s = lake_setup(0.0, 0.5, 80);
    for z in [c(1.1, 0.0), c(0.0, -1.2), Complex64::from_polar(1.5, 2.0)] {
        let vals = s.fam1.evaluate_all(80, &Complex::from_c64(BITS, z)).unwrap();
        let sum: f64 = vals.iter().map(|v| v.norm_sqr().to_f64()).sum();
        assert!(sum > 1e6, "z = {z}: Σ|p_k(μ1, z)|² = {sum:e}");
    }
}
