use std::f64::consts::PI as PI_F64;

use rug::float::Constant;
use rug::Float;

use super::expr::MeasureExpr;
use crate::error::{Error, Result};
use crate::geometry::{Curve, Region};
use crate::numerics::{Complex, GaussLegendre, Polynomial, PrecisionContext};

/// Default largest moment index.
pub const DEFAULT_MOMENT_CAP: usize = 200;

/// Lower-triangular working storage: `tri[m][n]` for `n <= m`.
type Tri = Vec<Vec<Complex>>;

/// Hermitian table of moments `c[m][n] = ∫ z^m conj(z)^n dμ` for `m, n <= N`.
#[derive(Clone, Debug)]
pub struct MomentTable {
    measure: MeasureExpr,
    entries: Vec<Vec<Complex>>,
    prec: u32,
}

impl MomentTable {
    pub fn measure(&self) -> &MeasureExpr {
        &self.measure
    }

    /// Largest index `N`.
    pub fn capacity(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn get(&self, m: usize, n: usize) -> Result<&Complex> {
        let cap = self.capacity();
        if m > cap || n > cap {
            return Err(Error::CapacityExceeded { m, n, cap });
        }
        Ok(&self.entries[m][n])
    }

    pub fn rows(&self) -> &[Vec<Complex>] {
        &self.entries
    }

    /// Total mass `c[0][0]`.
    pub fn mass(&self) -> &Float {
        &self.entries[0][0].re
    }

    /// Leading `(n+1) x (n+1)` block.
    pub fn section(&self, n: usize) -> Result<Vec<Vec<Complex>>> {
        self.get(n, n)?;
        Ok(self.entries[..=n].iter().map(|row| row[..=n].to_vec()).collect())
    }
}

/// Builds the moment table of `mu` through index `n_max`.
pub fn build_moment_table(mu: &MeasureExpr, n_max: usize, ctx: &PrecisionContext) -> Result<MomentTable> {
    mu.validate()?;
    let work = ctx.bits() + 32;
    let tri = term_table(mu, n_max, work)?;
    let prec = ctx.bits();
    let mut entries = vec![vec![Complex::zero(prec); n_max + 1]; n_max + 1];
    for (m, row) in tri.iter().enumerate() {
        for (n, v) in row.iter().enumerate() {
            let v = v.with_prec(prec);
            if m == n {
                entries[m][m] = Complex::from_real(v.re);
            } else {
                entries[n][m] = v.conj();
                entries[m][n] = v;
            }
        }
    }
    if !entries[0][0].re.is_sign_positive() || entries[0][0].re.is_zero() {
        return Err(Error::InvalidMeasure("total mass is not positive".into()));
    }
    Ok(MomentTable {
        measure: mu.clone(),
        entries,
        prec,
    })
}

/// Single moment `∫ z^m conj(z)^n dμ`.
pub fn moment(mu: &MeasureExpr, m: usize, n: usize, ctx: &PrecisionContext) -> Result<Complex> {
    if m > DEFAULT_MOMENT_CAP || n > DEFAULT_MOMENT_CAP {
        return Err(Error::CapacityExceeded {
            m,
            n,
            cap: DEFAULT_MOMENT_CAP,
        });
    }
    let table = build_moment_table(mu, m.max(n), ctx)?;
    Ok(table.get(m, n)?.clone())
}

/// `⟨p, q⟩ = Σ a_j conj(b_k) c[j][k]`.
pub fn inner_product(p: &Polynomial, q: &Polynomial, table: &MomentTable) -> Result<Complex> {
    inner_product_coeffs(p.coeffs(), q.coeffs(), table)
}

pub(crate) fn inner_product_coeffs(a: &[Complex], b: &[Complex], table: &MomentTable) -> Result<Complex> {
    let cap = table.capacity();
    if a.len() > cap + 1 || b.len() > cap + 1 {
        return Err(Error::CapacityExceeded {
            m: a.len().saturating_sub(1),
            n: b.len().saturating_sub(1),
            cap,
        });
    }
    let prec = table.prec();
    let mut acc = Complex::zero(prec);
    let mut row = Complex::zero(prec);
    for (j, aj) in a.iter().enumerate() {
        if aj.is_zero() {
            continue;
        }
        row.re.assign_zero();
        row.im.assign_zero();
        for (k, bk) in b.iter().enumerate() {
            row.add_mul_conj(&table.entries[j][k], bk);
        }
        acc.add_mul(aj, &row);
    }
    Ok(acc)
}

/// `‖p‖ = sqrt⟨p, p⟩`.
pub fn norm(p: &Polynomial, table: &MomentTable) -> Result<Float> {
    let ip = inner_product(p, p, table)?;
    let c = p.coeffs();
    let mut scale = 0.0;
    for (j, a) in c.iter().enumerate() {
        let aj = a.abs().to_f64();
        for (k, b) in c.iter().enumerate() {
            scale += aj * b.abs().to_f64() * table.entries[j][k].abs().to_f64();
        }
    }
    let tol = 2f64.powf(-(table.prec() as f64) / 2.0) * scale;
    let (re, im) = (ip.re.to_f64(), ip.im.to_f64());
    if re < -tol {
        return Err(Error::NegativeSelfProduct(re));
    }
    if im.abs() > tol.max(2f64.powf(-(table.prec() as f64) / 2.0) * re.abs()) {
        return Err(Error::IdentityViolated {
            identity: "real self inner product",
            n: p.degree(),
            deviation: im.abs(),
            tolerance: tol,
        });
    }
    if ip.re.is_sign_negative() {
        return Ok(Float::new(table.prec()));
    }
    Ok(ip.re.sqrt())
}

trait AssignZero {
    fn assign_zero(&mut self);
}

impl AssignZero for Float {
    fn assign_zero(&mut self) {
        *self = Float::new(self.prec());
    }
}

fn zero_tri(n_max: usize, prec: u32) -> Tri {
    (0..=n_max).map(|m| vec![Complex::zero(prec); m + 1]).collect()
}

fn add_into(acc: &mut Tri, other: &Tri, weight: Option<&Float>) {
    for (ra, rb) in acc.iter_mut().zip(other) {
        for (a, b) in ra.iter_mut().zip(rb) {
            match weight {
                Some(w) => a.add_mul_real(b, w),
                None => *a += b,
            }
        }
    }
}

fn term_table(mu: &MeasureExpr, n_max: usize, prec: u32) -> Result<Tri> {
    match mu {
        MeasureExpr::Area { region } => region_table(region, n_max, prec),
        MeasureExpr::Arclength { curve } => curve_table(curve, n_max, prec),
        MeasureExpr::Atom { point, mass } => {
            let z = Complex::from_c64(prec, *point);
            let zb = z.conj();
            let zp = powers(&z, n_max);
            let zbp = powers(&zb, n_max);
            let mass = Float::with_val(prec, *mass);
            Ok((0..=n_max)
                .map(|m| (0..=m).map(|n| (&zp[m] * &zbp[n]).scale(&mass)).collect())
                .collect())
        }
        MeasureExpr::Scaled { weight, inner } => {
            let t = term_table(inner, n_max, prec)?;
            let mut out = zero_tri(n_max, prec);
            add_into(&mut out, &t, Some(&Float::with_val(prec, *weight)));
            Ok(out)
        }
        MeasureExpr::Sum { terms } => {
            let mut out = zero_tri(n_max, prec);
            for t in terms {
                add_into(&mut out, &term_table(t, n_max, prec)?, None);
            }
            Ok(out)
        }
        MeasureExpr::LakeDifference { outer, lake } => {
            let mut out = region_table(outer, n_max, prec)?;
            let minus_one = Float::with_val(prec, -1);
            add_into(&mut out, &region_table(lake, n_max, prec)?, Some(&minus_one));
            Ok(out)
        }
    }
}

fn region_table(region: &Region, n_max: usize, prec: u32) -> Result<Tri> {
    match region {
        Region::Disk { center, radius } => {
            let pi = Float::with_val(prec, Constant::Pi);
            let r2 = Float::with_val(prec, *radius).square();
            let mut rp = Float::with_val(prec, &r2 * &pi);
            let diag: Vec<Float> = (0..=n_max)
                .map(|j| {
                    let d = Float::with_val(prec, &rp / (j as u32 + 1));
                    rp *= &r2;
                    d
                })
                .collect();
            Ok(shifted_diagonal(&Complex::from_c64(prec, *center), &diag, prec))
        }
        Region::Sector {
            center,
            radius,
            start_pi,
            end_pi,
        } => {
            let vertex = sector_at_vertex(*radius, *start_pi, *end_pi, n_max, prec);
            Ok(shift_table(&vertex, &Complex::from_c64(prec, *center), prec))
        }
        Region::Polygon { vertices } => Ok(polygon_table(vertices, n_max, prec)),
        Region::Union { parts } => {
            let mut out = zero_tri(n_max, prec);
            for p in parts {
                add_into(&mut out, &region_table(p, n_max, prec)?, None);
            }
            Ok(out)
        }
    }
}

fn curve_table(curve: &Curve, n_max: usize, prec: u32) -> Result<Tri> {
    match curve {
        Curve::Circle { center, radius } => {
            let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
            let r = Float::with_val(prec, *radius);
            let r2 = Float::with_val(prec, &r * &r);
            let mut rp = Float::with_val(prec, &r * &two_pi);
            let diag: Vec<Float> = (0..=n_max)
                .map(|_| {
                    let d = rp.clone();
                    rp *= &r2;
                    d
                })
                .collect();
            Ok(shifted_diagonal(&Complex::from_c64(prec, *center), &diag, prec))
        }
        Curve::PolygonBoundary { vertices } => {
            let gl = GaussLegendre::new(n_max + 1, prec);
            let (t, w) = gl.unit_interval();
            let mut acc = zero_tri(n_max, prec);
            for (k, a) in vertices.iter().enumerate() {
                let b = vertices[(k + 1) % vertices.len()];
                let a_mp = Complex::from_c64(prec, *a);
                let edge = &Complex::from_c64(prec, b) - &a_mp;
                let len = edge.abs();
                for (ti, wi) in t.iter().zip(&w) {
                    let z = &a_mp + &edge.scale(ti);
                    let weight = Complex::from_real(Float::with_val(prec, wi * &len));
                    accumulate(&mut acc, &z, &weight, 0);
                }
            }
            Ok(acc)
        }
        Curve::Ellipse { center, semi_axes } => ellipse_table(*center, *semi_axes, n_max, prec),
    }
}

fn powers(z: &Complex, n: usize) -> Vec<Complex> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Complex::one(z.prec()));
    for k in 1..=n {
        let next = &out[k - 1] * z;
        out.push(next);
    }
    out
}

/// Pascal triangle rows `0..=n` at precision `prec`.
fn binomials(n: usize, prec: u32) -> Vec<Vec<Float>> {
    let mut rows: Vec<Vec<Float>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = vec![Float::with_val(prec, 1); m + 1];
        for j in 1..m {
            row[j] = Float::with_val(prec, &rows[m - 1][j - 1] + &rows[m - 1][j]);
        }
        rows.push(row);
    }
    rows
}

/// Moments of a rotation-invariant measure about `c` with radial moments
/// `diag[j] = ∫ |w|^{2j}`, translated to be about the origin.
fn shifted_diagonal(c: &Complex, diag: &[Float], prec: u32) -> Tri {
    let n_max = diag.len() - 1;
    if c.is_zero() {
        return (0..=n_max)
            .map(|m| {
                let mut row = vec![Complex::zero(prec); m + 1];
                row[m] = Complex::from_real(diag[m].clone());
                row
            })
            .collect();
    }
    let binom = binomials(n_max, prec);
    let cp = powers(c, n_max);
    let cbp = powers(&c.conj(), n_max);
    let mut out = zero_tri(n_max, prec);
    for m in 0..=n_max {
        for n in 0..=m {
            let acc = &mut out[m][n];
            for j in 0..=n {
                let coef = Float::with_val(prec, &binom[m][j] * &binom[n][j]) * &diag[j];
                let term = &cp[m - j] * &cbp[n - j];
                acc.add_mul_real(&term, &coef);
            }
        }
    }
    out
}

/// Translates a moment table by `c`: moments of the pushforward under
/// `w -> w + c`.
fn shift_table(d: &Tri, c: &Complex, prec: u32) -> Tri {
    if c.is_zero() {
        return d.clone();
    }
    let n_max = d.len() - 1;
    let full = |j: usize, k: usize| if k <= j { d[j][k].clone() } else { d[k][j].conj() };
    let binom = binomials(n_max, prec);
    let cp = powers(c, n_max);
    let cbp = powers(&c.conj(), n_max);
    // e[m][k] = Σ_j C(m,j) c^{m-j} d[j][k]
    let mut e = vec![vec![Complex::zero(prec); n_max + 1]; n_max + 1];
    for k in 0..=n_max {
        let col: Vec<Complex> = (0..=n_max).map(|j| full(j, k)).collect();
        for m in 0..=n_max {
            let acc = &mut e[m][k];
            for j in 0..=m {
                let t = cp[m - j].scale(&binom[m][j]);
                acc.add_mul(&t, &col[j]);
            }
        }
    }
    let mut out = zero_tri(n_max, prec);
    for m in 0..=n_max {
        for n in 0..=m {
            let acc = &mut out[m][n];
            for k in 0..=n {
                let t = cbp[n - k].scale(&binom[n][k]);
                acc.add_mul(&t, &e[m][k]);
            }
        }
    }
    out
}

/// Area moments of the sector `{r e^{iθ}: r <= R, θ ∈ [απ, βπ]}` about its
/// vertex: `R^{j+k+2}/(j+k+2) ∫ e^{i(j-k)θ} dθ`.
fn sector_at_vertex(radius: f64, start_pi: f64, end_pi: f64, n_max: usize, prec: u32) -> Tri {
    let pi = Float::with_val(prec, Constant::Pi);
    let r = Float::with_val(prec, radius);
    let opening = Float::with_val(prec, end_pi - start_pi) * &pi;
    // angular[l] = ∫ e^{ilθ} dθ for l = 0..=n_max
    let angular: Vec<Complex> = (0..=n_max)
        .map(|l| {
            if l == 0 {
                return Complex::from_real(opening.clone());
            }
            let at = |t: f64| Complex::cis(&(Float::with_val(prec, t) * l as u32 * &pi));
            let diff = &at(end_pi) - &at(start_pi);
            // divide by i·l
            let l = Float::with_val(prec, l);
            Complex::new(Float::with_val(prec, &diff.im / &l), -Float::with_val(prec, &diff.re / &l))
        })
        .collect();
    let mut rpow = vec![Float::with_val(prec, 1)];
    for k in 1..=2 * n_max + 2 {
        let next = Float::with_val(prec, &rpow[k - 1] * &r);
        rpow.push(next);
    }
    (0..=n_max)
        .map(|j| {
            (0..=j)
                .map(|k| {
                    let radial = Float::with_val(prec, &rpow[j + k + 2] / (j + k + 2) as u32);
                    angular[j - k].scale(&radial)
                })
                .collect()
        })
        .collect()
}

/// Adds `weight * z^m * conj(z)^(n + shift)` into `acc[m][n]`.
fn accumulate(acc: &mut Tri, z: &Complex, weight: &Complex, shift: usize) {
    let n_max = acc.len() - 1;
    let zb = z.conj();
    let zbp = powers(&zb, n_max + shift);
    let mut a = weight.clone();
    for (m, row) in acc.iter_mut().enumerate() {
        for (n, cell) in row.iter_mut().enumerate() {
            cell.add_mul(&a, &zbp[n + shift]);
        }
        if m < n_max {
            a = &a * z;
        }
    }
}

/// Green's identity: `∫∫ z^m conj(z)^n dA = (1/(2i(n+1))) ∮ z^m conj(z)^{n+1} dz`,
/// integrated edge by edge with a rule exact for the polynomial integrand.
fn polygon_table(vertices: &[num_complex::Complex64], n_max: usize, prec: u32) -> Tri {
    let gl = GaussLegendre::new(n_max + 2, prec);
    let (t, w) = gl.unit_interval();
    let mut acc = zero_tri(n_max, prec);
    for (k, a) in vertices.iter().enumerate() {
        let b = vertices[(k + 1) % vertices.len()];
        let a_mp = Complex::from_c64(prec, *a);
        let edge = &Complex::from_c64(prec, b) - &a_mp;
        for (ti, wi) in t.iter().zip(&w) {
            let z = &a_mp + &edge.scale(ti);
            accumulate(&mut acc, &z, &edge.scale(wi), 1);
        }
    }
    for row in acc.iter_mut() {
        for (n, cell) in row.iter_mut().enumerate() {
            // cell / (2i(n+1)) = -i cell / (2(n+1))
            let d = 2 * (n as u32 + 1);
            let re = Float::with_val(prec, &cell.im / d);
            let im = -Float::with_val(prec, &cell.re / d);
            *cell = Complex { re, im };
        }
    }
    acc
}

const ELLIPSE_MAX_PANELS: usize = 4096;

fn ellipse_table(center: num_complex::Complex64, axes: [f64; 2], n_max: usize, prec: u32) -> Result<Tri> {
    let order = (n_max + 2).max(32);
    let gl = GaussLegendre::new(order, prec);
    let (t, w) = gl.unit_interval();
    let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
    let c = Complex::from_c64(prec, center);
    let (a, b) = (Float::with_val(prec, axes[0]), Float::with_val(prec, axes[1]));
    let rule = |panels: usize| {
        let mut acc = zero_tri(n_max, prec);
        let h = Float::with_val(prec, &two_pi / panels as u32);
        for p in 0..panels {
            for (ti, wi) in t.iter().zip(&w) {
                let theta = Float::with_val(prec, ti + p as u32) * &h;
                let (s, co) = theta.sin_cos(Float::new(prec));
                let z = &c + &Complex::new(Float::with_val(prec, &a * &co), Float::with_val(prec, &b * &s));
                let speed = Float::with_val(
                    prec,
                    Float::with_val(prec, &a * &s).square() + Float::with_val(prec, &b * &co).square(),
                )
                .sqrt();
                let weight = Complex::from_real(Float::with_val(prec, wi * &h) * speed);
                accumulate(&mut acc, &z, &weight, 0);
            }
        }
        acc
    };
    let tol = 2f64.powi(-(prec as i32) + 32 + 8);
    let reach = center.norm() + axes[0].max(axes[1]);
    let length = 2.0 * PI_F64 * axes[0].max(axes[1]);
    let mut panels = 4;
    let mut prev = rule(panels);
    while panels < ELLIPSE_MAX_PANELS {
        panels *= 2;
        let next = rule(panels);
        let converged = prev.iter().zip(&next).enumerate().all(|(m, (ra, rb))| {
            ra.iter().zip(rb).enumerate().all(|(n, (x, y))| {
                let scale = length * reach.powi((m + n) as i32).max(1.0);
                (x - y).abs().to_f64() <= tol * scale
            })
        });
        if converged {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::QuadratureNonConvergence { panels })
}
