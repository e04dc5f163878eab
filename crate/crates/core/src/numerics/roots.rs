//! Simultaneous root extraction (Aberth–Ehrlich) at working precision.

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::numerics::{Complex, Polynomial, PrecisionContext};

/// Roots of a polynomial together with their certified residual ratios.
#[derive(Clone, Debug)]
pub struct RootReport {
    pub roots: Vec<Complex>,
    /// `|p(z_k)| / (max_j |c_j| · max(1, |z_k|)^d)` for each root.
    pub residual_ratios: Vec<f64>,
    /// Absolute residuals `|p(z_k)|`.
    pub residuals: Vec<Float>,
    pub sweeps: usize,
}

/// All `d` roots of `p`, with multiplicity.
pub fn poly_roots(p: &Polynomial, ctx: &PrecisionContext) -> Result<Vec<Complex>> {
    poly_roots_report(p, ctx).map(|r| r.roots)
}

pub fn poly_roots_report(p: &Polynomial, ctx: &PrecisionContext) -> Result<RootReport> {
    let bits = ctx.bits();
    if p.degree() == 0 || p.leading().is_zero() {
        return Err(Error::DegeneratePolynomial);
    }
    let original = Polynomial::new(p.coeffs().iter().map(|c| c.with_prec(bits)).collect());

    // Exact zero constant terms give exact roots at the origin.
    let zeros_at_origin = original.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut roots: Vec<Complex> = vec![Complex::zero(bits); zeros_at_origin];
    let reduced = Polynomial::new(original.coeffs()[zeros_at_origin..].to_vec()).to_monic();

    let mut sweeps = 0;
    match reduced.degree() {
        0 => {}
        1 => roots.push(-&reduced.coeffs()[0]),
        _ => {
            let (found, used) = aberth(&reduced, ctx)?;
            sweeps = used;
            roots.extend(found);
        }
    }

    for k in zeros_at_origin..roots.len() {
        let separation = nearest_other(&roots, k);
        polish(&reduced, &mut roots[k], separation.as_ref());
    }

    certify(&original, roots, sweeps, ctx)
}

fn certify(
    p: &Polynomial,
    roots: Vec<Complex>,
    sweeps: usize,
    ctx: &PrecisionContext,
) -> Result<RootReport> {
    let bits = ctx.bits();
    let d = p.degree() as u32;
    let cmax = p.max_abs_coeff();
    let mut residual_ratios = Vec::with_capacity(roots.len());
    let mut residuals = Vec::with_capacity(roots.len());
    let mut worst = 0.0f64;
    let tol = Float::with_val(bits, ctx.root_tol());
    for z in &roots {
        let r = p.eval(z).abs();
        let mut scale = z.abs();
        if scale < 1 {
            scale = Float::with_val(bits, 1);
        }
        let scale = Float::with_val(bits, (&scale).pow(d)) * &cmax;
        let ratio = Float::with_val(bits, &r / &scale);
        if ratio > tol {
            worst = worst.max(ratio.to_f64());
        }
        residual_ratios.push(ratio.to_f64());
        residuals.push(r);
    }
    if worst > 0.0 {
        return Err(Error::NonConvergence {
            iterations: sweeps,
            worst: worst / ctx.root_tol(),
        });
    }
    Ok(RootReport {
        roots,
        residual_ratios,
        residuals,
        sweeps,
    })
}

/// Aberth–Ehrlich iteration on a monic polynomial of degree ≥ 2 with nonzero
/// constant term, Gauss–Seidel style updates.
fn aberth(p: &Polynomial, ctx: &PrecisionContext) -> Result<(Vec<Complex>, usize)> {
    let bits = ctx.bits();
    let d = p.degree();
    let mut z = initial_guesses(p, bits);
    let mut done = vec![false; d];
    let step_tol = Float::with_val(bits, Float::i_exp(1, -(bits as i32) + 8));
    let tiny = Float::with_val(bits, Float::i_exp(1, -(bits as i32) * 2));
    let one = Complex::one(bits);

    for sweep in 1..=ctx.max_sweeps() {
        let mut active = false;
        for k in 0..d {
            if done[k] {
                continue;
            }
            let (v, dv) = p.eval_with_derivative(&z[k]);
            if v.is_zero() {
                done[k] = true;
                continue;
            }
            if v.abs() <= Float::with_val(bits, p.eval_error_bound(&z[k]) * 2u32) {
                done[k] = true;
                continue;
            }
            active = true;
            let newton = &v / &dv;
            let mut repulsion = Complex::zero(bits);
            for j in 0..d {
                if j != k {
                    let diff = &z[k] - &z[j];
                    if !diff.is_zero() {
                        repulsion += &diff.recip();
                    }
                }
            }
            let denom = &one - &(&newton * &repulsion);
            let step = if denom.is_zero() { newton } else { &newton / &denom };
            if !step.is_finite() {
                return Err(Error::NonConvergence {
                    iterations: sweep,
                    worst: f64::INFINITY,
                });
            }
            z[k] -= &step;
            let mut scale = z[k].abs();
            if scale < tiny {
                scale = tiny.clone();
            }
            if step.abs() <= Float::with_val(bits, &step_tol * &scale) {
                done[k] = true;
            }
        }
        if !active || done.iter().all(|&x| x) {
            return Ok((z, sweep));
        }
    }
    Ok((z, ctx.max_sweeps()))
}

/// Points on a slightly perturbed circle whose radius is the geometric mean
/// of the root moduli.
fn initial_guesses(p: &Polynomial, bits: u32) -> Vec<Complex> {
    let d = p.degree();
    let c0 = p.coeffs()[0].abs();
    let log_radius = if c0.is_zero() {
        0.0
    } else {
        c0.ln().to_f64() / d as f64
    };
    let radius = log_radius.exp();
    let radius = if radius.is_finite() && radius > 0.0 { radius } else { 1.0 };
    (0..d)
        .map(|k| {
            let theta = std::f64::consts::TAU * (k as f64 + 0.25) / d as f64 + 0.4 / d as f64;
            let wobble = 1.0 + 0.05 * ((k as f64) * 1.618_033_988_7).sin();
            let r = radius * wobble;
            Complex::from_f64(bits, r * theta.cos(), r * theta.sin())
        })
        .collect()
}

fn nearest_other(roots: &[Complex], k: usize) -> Option<Float> {
    roots
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .map(|(_, w)| (&roots[k] - w).abs())
        .min_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal))
}

/// A few Newton steps, each kept only if it lowers the residual and stays
/// well inside half the distance to the nearest other root.
fn polish(p: &Polynomial, z: &mut Complex, separation: Option<&Float>) {
    let mut best = p.eval(z).abs();
    for _ in 0..3 {
        if best.is_zero() {
            return;
        }
        let (v, dv) = p.eval_with_derivative(z);
        if dv.is_zero() {
            return;
        }
        let step = &v / &dv;
        if let Some(sep) = separation {
            if Float::with_val(sep.prec(), step.abs() * 4u32) >= *sep {
                return;
            }
        }
        let candidate = &*z - &step;
        let r = p.eval(&candidate).abs();
        if r < best {
            best = r;
            *z = candidate;
        } else {
            return;
        }
    }
}
