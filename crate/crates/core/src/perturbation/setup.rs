use num_complex::Complex64;
use rug::Float;

use crate::error::{Error, Result};
use crate::geometry::Hull;
use crate::measures::{build_moment_table, inner_product, MeasureExpr, MomentTable};
use crate::numerics::{Complex, Polynomial, PrecisionContext};
use crate::orthopoly::{orthonormalize, OrthoFamily};

/// A measure `μ1`, a perturbation `μ2`, their sum `μ0 = μ1 + μ2`, and both
/// orthonormal families to a common degree.
#[derive(Clone, Debug)]
pub struct PerturbationSetup {
    pub mu1: MeasureExpr,
    pub mu2: MeasureExpr,
    pub mu0: MeasureExpr,
    pub fam0: OrthoFamily,
    pub fam1: OrthoFamily,
    pub table2: MomentTable,
    ctx: PrecisionContext,
}

impl PerturbationSetup {
    pub fn new(mu1: MeasureExpr, mu2: MeasureExpr, n_max: usize, ctx: &PrecisionContext) -> Result<Self> {
        mu1.validate()?;
        mu2.validate()?;
        let mu0 = MeasureExpr::sum(vec![mu1.clone(), mu2.clone()]);
        let fam1 = orthonormalize(&mu1, n_max, ctx)?;
        let fam0 = orthonormalize(&mu0, n_max, ctx)?;
        let table2 = build_moment_table(&mu2, n_max, ctx)?;
        if table2.mass().is_zero() {
            return Err(Error::InvalidMeasure("perturbation has zero mass".into()));
        }
        Ok(Self {
            mu1,
            mu2,
            mu0,
            fam0,
            fam1,
            table2,
            ctx: ctx.clone(),
        })
    }

    pub fn max_degree(&self) -> usize {
        self.fam0.max_degree()
    }

    pub fn ctx(&self) -> &PrecisionContext {
        &self.ctx
    }

    pub(crate) fn prec(&self) -> u32 {
        self.ctx.bits()
    }

    /// `2^(-bits/3)`, the slack used by every inequality and identity check.
    pub fn slack(&self) -> f64 {
        self.ctx.slack(3.0)
    }

    pub(crate) fn p0(&self, n: usize) -> Polynomial {
        self.fam0.poly(n).expect("degree in range")
    }

    pub(crate) fn p1(&self, n: usize) -> Polynomial {
        self.fam1.poly(n).expect("degree in range")
    }
}

fn self_norm2(p: &Polynomial, table: &MomentTable) -> Float {
    inner_product(p, p, table).expect("table covers family").re
}

/// `‖p_n(μ1)‖_{L²(μ2)}` and `‖p_n(μ0)‖_{L²(μ2)}` for `n = 0..=N`; checks that
/// the second never exceeds the first.
pub fn ps_norms(setup: &PerturbationSetup) -> Result<(Vec<Float>, Vec<Float>)> {
    let mut ps = Vec::new();
    let mut ps0 = Vec::new();
    for n in 0..=setup.max_degree() {
        let a = clamp_sqrt(self_norm2(&setup.p1(n), &setup.table2));
        let b = clamp_sqrt(self_norm2(&setup.p0(n), &setup.table2));
        let excess = Float::with_val(setup.prec(), &b - &a).to_f64();
        if excess > setup.slack() {
            return Err(Error::BoundViolated {
                n,
                detail: format!("‖p_n(μ0)‖_μ2 exceeds ‖p_n(μ1)‖_μ2 by {excess:.3e}"),
            });
        }
        ps.push(a);
        ps0.push(b);
    }
    Ok((ps, ps0))
}

fn clamp_sqrt(x: Float) -> Float {
    if x.is_sign_negative() {
        Float::new(x.prec())
    } else {
        x.sqrt()
    }
}

/// `β_n = γ_n(μ1)/γ_n(μ0) - 1`, checked nonnegative and against
/// `⟨p_n(μ1), p_n(μ0)⟩_{μ0} = 1 + β_n`.
pub fn beta_sequence(setup: &PerturbationSetup) -> Result<Vec<Float>> {
    let prec = setup.prec();
    let slack = setup.slack();
    (0..=setup.max_degree())
        .map(|n| {
            let g1 = setup.fam1.gamma(n)?;
            let g0 = setup.fam0.gamma(n)?;
            let beta = Float::with_val(prec, g1 / g0) - 1u32;
            if beta.to_f64() < -slack {
                return Err(Error::BoundViolated {
                    n,
                    detail: format!("γ_n(μ0) > γ_n(μ1): β_n = {:.3e}", beta.to_f64()),
                });
            }
            let ip = inner_product(&setup.p1(n), &setup.p0(n), setup.fam0.table())?;
            let dev = (&ip - &Complex::from_real(Float::with_val(prec, &beta + 1u32))).abs().to_f64();
            if dev > slack {
                return Err(Error::IdentityViolated {
                    identity: "<p_n(mu1), p_n(mu0)>_mu0 = 1 + beta_n",
                    n,
                    deviation: dev,
                    tolerance: slack,
                });
            }
            Ok(beta)
        })
        .collect()
}

/// Lower and upper bounds `(1 - ps0²)^{-1/2} - 1 <= β_n <= (1 + ps²)^{1/2} - 1`,
/// asserted entrywise.
pub fn beta_bounds(setup: &PerturbationSetup) -> Result<(Vec<Float>, Vec<Float>)> {
    let (ps, ps0) = ps_norms(setup)?;
    let beta = beta_sequence(setup)?;
    beta_bounds_from(&ps, &ps0, &beta, setup.slack())
}

pub(crate) fn beta_bounds_from(
    ps: &[Float],
    ps0: &[Float],
    beta: &[Float],
    slack: f64,
) -> Result<(Vec<Float>, Vec<Float>)> {
    let mut lo = Vec::with_capacity(beta.len());
    let mut hi = Vec::with_capacity(beta.len());
    for n in 0..beta.len() {
        let prec = beta[n].prec();
        let one_minus = Float::with_val(prec, 1u32 - Float::with_val(prec, ps0[n].square_ref()));
        if !one_minus.is_sign_positive() || one_minus.is_zero() {
            return Err(Error::BoundViolated {
                n,
                detail: format!("‖p_n(μ0)‖_μ2 = {:.3e} is not below 1", ps0[n].to_f64()),
            });
        }
        let l = one_minus.recip_sqrt() - 1u32;
        let h = Float::with_val(prec, 1u32 + Float::with_val(prec, ps[n].square_ref())).sqrt() - 1u32;
        let below = Float::with_val(prec, &l - &beta[n]).to_f64();
        let above = Float::with_val(prec, &beta[n] - &h).to_f64();
        if below > slack || above > slack {
            return Err(Error::BoundViolated {
                n,
                detail: format!(
                    "β_n = {:.6e} outside [{:.6e}, {:.6e}]",
                    beta[n].to_f64(),
                    l.to_f64(),
                    h.to_f64()
                ),
            });
        }
        lo.push(l);
        hi.push(h);
    }
    Ok((lo, hi))
}

/// Squared difference norms and the deviations of the identities they satisfy.
#[derive(Clone, Debug)]
pub struct DiffNorms {
    /// `‖p_n(μ0) - p_n(μ1)‖²_{L²(μ0)}`
    pub diff0: Vec<Float>,
    /// `‖p_n(μ0) - p_n(μ1)‖²_{L²(μ1)}`
    pub diff1: Vec<Float>,
    /// `|diff0 - (ps² - 2β)|`
    pub dev0: Vec<f64>,
    /// `|diff1 - (2β/(1+β) - ps0²)|`
    pub dev1: Vec<f64>,
    /// `|‖p_n(μ1)‖²_{μ0} - Σ_k |⟨p_n(μ1), p_k(μ0)⟩_{μ0}|²|`
    pub parseval_dev: Vec<f64>,
    /// `|‖p_n(μ1)‖²_{μ0} - (1 + ps²)|`
    pub additivity_dev: Vec<f64>,
}

/// Difference norms with both norm identities, the `diff1 <= 2β` bound, and
/// the Parseval and additivity identities asserted at every degree.
pub fn diff_norms(setup: &PerturbationSetup) -> Result<DiffNorms> {
    let (ps, ps0) = ps_norms(setup)?;
    let beta = beta_sequence(setup)?;
    diff_norms_from(setup, &ps, &ps0, &beta)
}

pub(crate) fn diff_norms_from(
    setup: &PerturbationSetup,
    ps: &[Float],
    ps0: &[Float],
    beta: &[Float],
) -> Result<DiffNorms> {
    let prec = setup.prec();
    let slack = setup.slack();
    let mut out = DiffNorms {
        diff0: Vec::new(),
        diff1: Vec::new(),
        dev0: Vec::new(),
        dev1: Vec::new(),
        parseval_dev: Vec::new(),
        additivity_dev: Vec::new(),
    };
    let t0 = setup.fam0.table();
    let t1 = setup.fam1.table();
    for n in 0..=setup.max_degree() {
        let p0 = setup.p0(n);
        let p1 = setup.p1(n);
        let d = Polynomial::new(
            p0.coeffs()
                .iter()
                .zip(p1.coeffs().iter().chain(std::iter::repeat(&Complex::zero(prec))))
                .map(|(a, b)| a - b)
                .collect(),
        );
        let d0 = self_norm2(&d, t0);
        let d1 = self_norm2(&d, t1);
        let ps2 = Float::with_val(prec, ps[n].square_ref());
        let ps02 = Float::with_val(prec, ps0[n].square_ref());
        let two_beta = Float::with_val(prec, &beta[n] * 2u32);
        let id0 = Float::with_val(prec, &ps2 - &two_beta);
        let id1 = Float::with_val(prec, &two_beta / Float::with_val(prec, &beta[n] + 1u32)) - &ps02;
        let dev0 = Float::with_val(prec, &d0 - &id0).abs().to_f64();
        let dev1 = Float::with_val(prec, &d1 - &id1).abs().to_f64();
        for (identity, dev) in [
            ("‖p_n(μ0)-p_n(μ1)‖²_μ0 = ps² - 2β", dev0),
            ("‖p_n(μ0)-p_n(μ1)‖²_μ1 = 2β/(1+β) - ps0²", dev1),
        ] {
            if dev > slack {
                return Err(Error::IdentityViolated {
                    identity,
                    n,
                    deviation: dev,
                    tolerance: slack,
                });
            }
        }
        let excess = Float::with_val(prec, &d1 - &two_beta).to_f64();
        if excess > slack {
            return Err(Error::BoundViolated {
                n,
                detail: format!("‖p_n(μ0)-p_n(μ1)‖²_μ1 exceeds 2β_n by {excess:.3e}"),
            });
        }
        let full = self_norm2(&p1, t0);
        let mut parseval = Float::new(prec);
        for k in 0..=n {
            parseval += inner_product(&p1, &setup.p0(k), t0)?.norm_sqr();
        }
        let pdev = Float::with_val(prec, &full - &parseval).abs().to_f64();
        let adev = Float::with_val(prec, &full - Float::with_val(prec, &ps2 + 1u32)).abs().to_f64();
        for (identity, dev) in [("Parseval", pdev), ("‖p_n(μ1)‖²_μ0 = 1 + ps²", adev)] {
            if dev > slack {
                return Err(Error::IdentityViolated {
                    identity,
                    n,
                    deviation: dev,
                    tolerance: slack,
                });
            }
        }
        out.diff0.push(d0);
        out.diff1.push(d1);
        out.dev0.push(dev0);
        out.dev1.push(dev1);
        out.parseval_dev.push(pdev);
        out.additivity_dev.push(adev);
    }
    Ok(out)
}

/// Pointwise ratio `p_n(μ1, z)/p_n(μ0, z)` with the bound
/// `sqrt(2β_n)·[1 + diam(S1)/dist(z, Co(S1))]²` on `|p_n(μ0,z)/p_n(μ1,z) - 1|`.
#[derive(Clone, Debug)]
pub struct RatioSample {
    pub ratio: Complex,
    /// `None` when `z` lies in the hull and the bound does not apply.
    pub bound: Option<f64>,
    /// `|p_n(μ0,z)/p_n(μ1,z) - 1|`
    pub deviation: f64,
}

pub fn ratio_at(setup: &PerturbationSetup, z: Complex64, n: usize) -> Result<RatioSample> {
    let beta = {
        let g1 = setup.fam1.gamma(n)?;
        let g0 = setup.fam0.gamma(n)?;
        Float::with_val(setup.prec(), g1 / g0) - 1u32
    };
    ratio_with_beta(setup, &setup.mu1.support_hull(), z, n, &beta)
}

pub(crate) fn ratio_with_beta(
    setup: &PerturbationSetup,
    hull: &Hull,
    z: Complex64,
    n: usize,
    beta: &Float,
) -> Result<RatioSample> {
    let prec = setup.prec();
    let zz = Complex::from_c64(prec, z);
    let v0 = setup.fam0.evaluate(n, &zz)?;
    let v1 = setup.fam1.evaluate(n, &zz)?;
    if v0.is_zero() || v1.is_zero() {
        return Err(Error::ZeroDenominator { n });
    }
    let ratio = &v1 / &v0;
    let inverse = &v0 / &v1;
    let deviation = (&inverse - &Complex::one(prec)).abs().to_f64();
    let dist = hull.dist(z);
    let bound = (dist > 0.0).then(|| {
        let b = beta.to_f64().max(0.0);
        (2.0 * b).sqrt() * (1.0 + hull.diameter() / dist).powi(2)
    });
    if let Some(b) = bound {
        if deviation > b + setup.slack() {
            return Err(Error::BoundViolated {
                n,
                detail: format!("|p_n(μ0,z)/p_n(μ1,z) - 1| = {deviation:.3e} exceeds {b:.3e} at z = {z}"),
            });
        }
    }
    Ok(RatioSample {
        ratio,
        bound,
        deviation,
    })
}

/// `λ_n(μ0,z)/λ_n(μ1,z)` for `n = 0..=N`, each checked `>= 1 - slack`.
pub fn christoffel_ratios(setup: &PerturbationSetup, z: Complex64) -> Result<Vec<Float>> {
    let prec = setup.prec();
    let zz = Complex::from_c64(prec, z);
    let n = setup.max_degree();
    let l0 = setup.fam0.christoffel_all(n, &zz)?;
    let l1 = setup.fam1.christoffel_all(n, &zz)?;
    l0.iter()
        .zip(&l1)
        .enumerate()
        .map(|(k, (a, b))| {
            let r = Float::with_val(prec, a / b);
            if r.to_f64() < 1.0 - setup.slack() {
                return Err(Error::BoundViolated {
                    n: k,
                    detail: format!("λ_n(μ0)/λ_n(μ1) = {:.6e} < 1 at z = {z}", r.to_f64()),
                });
            }
            Ok(r)
        })
        .collect()
}

pub fn christoffel_ratio(setup: &PerturbationSetup, z: Complex64, n: usize) -> Result<Float> {
    setup.fam0.gamma(n)?;
    Ok(christoffel_ratios(setup, z)?.swap_remove(n))
}

/// `ε_m = Σ_{j=m}^{N} ps[j]²`, truncated at the last available degree.
pub fn epsilon_tail(ps: &[Float], m: usize) -> Float {
    let prec = ps[0].prec();
    let mut acc = Float::new(prec);
    for x in &ps[m.min(ps.len())..] {
        acc += x * x;
    }
    acc
}

/// One instance of the Christoffel sandwich
/// `λ_n(μ1,z) <= λ_n(μ0,z) <= λ_n(μ1,z)(1 + D_n(z))`.
#[derive(Clone, Debug)]
pub struct Sandwich {
    pub lambda0: Float,
    pub lambda1: Float,
    pub d_n: Float,
    /// The constant `M`; the head sum `Σ_{j=m}^{n} |p_j(μ1,z)|²` must exceed it.
    pub big_m: Float,
}

/// Evaluates and asserts the sandwich for `m < n`. The tail uses
/// `Σ_{j=m}^{n}` of `ps[j]²`; `big_m` defaults to the head sum itself.
pub fn christoffel_sandwich(
    setup: &PerturbationSetup,
    ps: &[Float],
    z: Complex64,
    n: usize,
    m: usize,
    big_m: Option<f64>,
) -> Result<Sandwich> {
    if m >= n {
        return Err(Error::DegreeOutOfRange { degree: m, max: n.saturating_sub(1) });
    }
    let prec = setup.prec();
    let zz = Complex::from_c64(prec, z);
    let vals = setup.fam1.evaluate_all(n, &zz)?;
    let mut low = Float::new(prec);
    let mut head = Float::new(prec);
    for (j, v) in vals.iter().enumerate() {
        if j < m {
            low += v.norm_sqr();
        } else {
            head += v.norm_sqr();
        }
    }
    let big_m = match big_m {
        Some(x) => {
            let x = Float::with_val(prec, x);
            if head <= x {
                return Err(Error::BoundViolated {
                    n,
                    detail: format!("head sum {:.3e} does not exceed M = {:.3e}", head.to_f64(), x.to_f64()),
                });
            }
            x
        }
        None => head.clone(),
    };
    let eps = epsilon_tail(&ps[..=n], m);
    let d_n = Float::with_val(prec, &eps + Float::with_val(prec, &eps + 1u32) * low / &big_m);
    let lambda0 = setup.fam0.christoffel(n, &zz)?;
    let lambda1 = setup.fam1.christoffel(n, &zz)?;
    let upper = Float::with_val(prec, &lambda1 * Float::with_val(prec, &d_n + 1u32));
    let rel = |a: &Float, b: &Float| Float::with_val(prec, a - b).to_f64() / b.to_f64();
    if rel(&lambda1, &lambda0) > setup.slack() || rel(&lambda0, &upper) > setup.slack() {
        return Err(Error::BoundViolated {
            n,
            detail: format!(
                "λ0 = {:.6e} outside [{:.6e}, {:.6e}] at z = {z}",
                lambda0.to_f64(),
                lambda1.to_f64(),
                upper.to_f64()
            ),
        });
    }
    Ok(Sandwich {
        lambda0,
        lambda1,
        d_n,
        big_m,
    })
}

/// Largest gap between consecutive terms.
pub fn max_step(seq: &[Complex]) -> f64 {
    seq.windows(2)
        .map(|w| (&w[1] - &w[0]).abs().to_f64())
        .fold(0.0, f64::max)
}

/// The diagonal `n -> b_{n-k,n}` over `window` (inclusive) and its
/// last-quarter oscillation (largest pairwise gap).
pub fn toeplitz_diagnostic(fam: &OrthoFamily, k: isize, window: (usize, usize)) -> Result<(Vec<Complex>, f64)> {
    let (lo, hi) = window;
    let first = k.max(0) as usize;
    let last = fam.max_degree().saturating_sub(1);
    if lo > hi || lo < first || hi > last {
        return Err(Error::DegreeOutOfRange { degree: hi, max: last });
    }
    let seq: Vec<Complex> = (lo..=hi)
        .map(|n| fam.hess((n as isize - k) as usize, n))
        .collect::<Result<_>>()?;
    let tail = &seq[seq.len() - seq.len().div_ceil(4)..];
    let mut osc = 0.0f64;
    for (i, a) in tail.iter().enumerate() {
        for b in &tail[i + 1..] {
            osc = osc.max((a - b).abs().to_f64());
        }
    }
    Ok((seq, osc))
}
