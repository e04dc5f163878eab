use num_complex::Complex64;
use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{Complex, PrecisionContext};

/// The pair of points inverse both to the unit circle and to the circle
/// `|z - a| = rho`, and the inner radius of the annulus `φ` maps the
/// disk-with-hole onto.
#[derive(Clone, Debug)]
pub struct InversePair {
    /// Hole center.
    pub a: Complex,
    pub rho: Float,
    /// Inverse point inside the hole; the origin in the concentric case.
    pub z1: Complex,
    /// `1/conj(z1)`; `None` (infinity) in the concentric case.
    pub z2: Option<Complex>,
    pub module_r: Float,
    pub concentric: bool,
}

/// Inverse points for a hole centered at the real point `a`.
pub fn inverse_points(a: f64, rho: f64, ctx: &PrecisionContext) -> Result<InversePair> {
    inverse_points_complex(Complex64::new(a, 0.0), rho, ctx)
}

/// Inverse points for a hole with complex center: the problem is rotated so
/// that the center is real, solved, and rotated back.
pub fn inverse_points_complex(center: Complex64, rho: f64, ctx: &PrecisionContext) -> Result<InversePair> {
    if !(rho > 0.0) || center.norm() + rho >= 1.0 || !center.re.is_finite() || !center.im.is_finite() {
        return Err(Error::GeometryInvalid(format!(
            "hole |z - {center}| <= {rho} must lie inside the unit disk"
        )));
    }
    let prec = ctx.bits();
    let c = Complex::from_c64(prec, center);
    let rho_mp = Float::with_val(prec, rho);
    if c.is_zero() {
        return Ok(InversePair {
            a: c,
            rho: rho_mp.clone(),
            z1: Complex::zero(prec),
            z2: None,
            module_r: rho_mp,
            concentric: true,
        });
    }
    let a = c.abs();
    let rotation = c.unscale(&a);
    // a z² - (1 + a² - ρ²) z + a = 0; the root of modulus < 1 is
    // 2a / (B + sqrt(B² - 4a²)), free of cancellation.
    let a2 = Float::with_val(prec, a.square_ref());
    let b = Float::with_val(prec, &a2 + 1u32) - Float::with_val(prec, rho_mp.square_ref());
    let disc = Float::with_val(prec, b.square_ref()) - Float::with_val(prec, &a2 * 4u32);
    let x1 = Float::with_val(prec, &a * 2u32) / (Float::with_val(prec, &b + disc.sqrt()));
    let x2 = Float::with_val(prec, x1.recip_ref());
    // φ(t) = (t - x1)/(1 - t x1) at t = a + ρ, on the hole circle.
    let t = Float::with_val(prec, &a + &rho_mp);
    let num = Float::with_val(prec, &t - &x1);
    let den = Float::with_val(prec, 1u32 - Float::with_val(prec, &t * &x1));
    let module_r = Float::with_val(prec, num / den).abs();
    Ok(InversePair {
        a: c,
        rho: rho_mp,
        z1: rotation.scale(&x1),
        z2: Some(rotation.scale(&x2)),
        module_r,
        concentric: false,
    })
}

/// Deviations of the defining relations `z1·conj(z2) = 1` and
/// `(z1 - a)·conj(z2 - a) = ρ²`.
#[derive(Clone, Debug, Serialize)]
pub struct InverseResiduals {
    pub unit_circle: f64,
    pub hole_circle: f64,
}

impl InversePair {
    pub fn residuals(&self) -> Option<InverseResiduals> {
        let z2 = self.z2.as_ref()?;
        let prec = self.z1.prec();
        let one = Complex::one(prec);
        let unit = (&(&self.z1 * &z2.conj()) - &one).abs().to_f64();
        let lhs = &(&self.z1 - &self.a) * &(z2 - &self.a).conj();
        let rho2 = Complex::from_real(Float::with_val(prec, self.rho.square_ref()));
        let hole = (&lhs - &rho2).abs().to_f64();
        Some(InverseResiduals {
            unit_circle: unit,
            hole_circle: hole,
        })
    }
}
