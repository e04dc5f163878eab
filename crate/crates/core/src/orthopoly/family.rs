use rug::Float;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::measures::{build_moment_table, MeasureExpr, MomentTable};
use crate::numerics::{hermitian_solve, Complex, Polynomial, PrecisionContext};

/// Orthonormal polynomials `p_0..p_N` of one measure in the monomial basis,
/// with the Hessenberg matrix of multiplication by `z`.
#[derive(Clone, Debug)]
pub struct OrthoFamily {
    table: MomentTable,
    n_max: usize,
    coeff: Vec<Vec<Complex>>,
    gamma: Vec<Float>,
    hess: Vec<Vec<Complex>>,
    ortho_residual: f64,
}

/// Builds the moment table to `n_max + 1` and orthonormalizes.
pub fn orthonormalize(mu: &MeasureExpr, n_max: usize, ctx: &PrecisionContext) -> Result<OrthoFamily> {
    if let Some(atoms) = mu.atom_count() {
        return Err(Error::FiniteSupport { atoms, degree: n_max });
    }
    let table = build_moment_table(mu, n_max + 1, ctx)?;
    orthonormalize_table(table, n_max, ctx)
}

/// Arnoldi-type construction: `p_{j+1}` is `z p_j` orthogonalized twice
/// against `p_0..p_j` (classical Gram–Schmidt with one reorthogonalization).
pub fn orthonormalize_table(table: MomentTable, n_max: usize, ctx: &PrecisionContext) -> Result<OrthoFamily> {
    if let Some(atoms) = table.measure().atom_count() {
        return Err(Error::FiniteSupport { atoms, degree: n_max });
    }
    let cap = table.capacity();
    if n_max > cap {
        return Err(Error::CapacityExceeded { m: n_max, n: n_max, cap });
    }
    let prec = ctx.bits();
    let c = table.rows();
    let unit = 2f64.powi(-(prec as i32));
    let ortho_tol = ctx.ortho_tol();

    let p0 = Complex::from_real(Float::with_val(prec, table.mass().recip_ref()).sqrt());
    let mut coeff: Vec<Vec<Complex>> = vec![vec![p0.clone()]];
    let mut gamma = vec![p0.re.clone()];
    let mut hess: Vec<Vec<Complex>> = Vec::with_capacity(n_max);
    // u[k][a] = Σ_b conj(p_k[b]) c[a][b], so that ⟨f, p_k⟩ = Σ_a f[a] u[k][a].
    let mut u: Vec<Vec<Complex>> = vec![dual_row(&coeff[0], c, n_max)];

    for j in 0..n_max {
        let mut q = Vec::with_capacity(j + 2);
        q.push(Complex::zero(prec));
        q.extend(coeff[j].iter().cloned());
        let (qq, q_scale) = self_product(&q, c);
        let q_norm = qq.to_f64().max(0.0).sqrt();

        let mut b = vec![Complex::zero(prec); j + 2];
        for _pass in 0..2 {
            let h: Vec<Complex> = (0..=j).map(|k| pair(&q, &u[k], prec)).collect();
            for (k, hk) in h.iter().enumerate() {
                for (qa, pa) in q.iter_mut().zip(&coeff[k]) {
                    qa.sub_mul(hk, pa);
                }
                b[k] += hk;
            }
        }
        let (rr, r_scale) = self_product(&q, c);
        let degree = j + 1;
        if !rr.is_sign_positive() || rr.is_zero() {
            return Err(Error::PrecisionExhausted {
                degree,
                detail: "residual has nonpositive squared norm".into(),
            });
        }
        let rr_f = rr.to_f64();
        if unit * r_scale.max(q_scale) * (degree + 1) as f64 > ortho_tol * rr_f {
            return Err(Error::PrecisionExhausted {
                degree,
                detail: format!(
                    "cancellation: squared residual {rr_f:.3e} against coefficient scale {r_scale:.3e}"
                ),
            });
        }
        let sub = rr.sqrt();
        if sub.to_f64() <= ortho_tol.sqrt() * q_norm {
            return Err(Error::PrecisionExhausted {
                degree,
                detail: format!("subdiagonal {:.3e} below sqrt(ortho_tol)·‖z p_j‖", sub.to_f64()),
            });
        }
        for qa in q.iter_mut() {
            *qa = qa.unscale(&sub);
        }
        let lead = q[degree].re.clone();
        let recurrence = Float::with_val(prec, &gamma[j] / &sub);
        let dev = Float::with_val(prec, &lead - &recurrence).abs() / &recurrence;
        let rec_tol = ctx.slack(2.0);
        if dev.to_f64() > rec_tol || !q[degree].im.is_zero() && q[degree].im.to_f64().abs() > rec_tol * lead.to_f64() {
            return Err(Error::IdentityViolated {
                identity: "leading coefficient recurrence",
                n: degree,
                deviation: dev.to_f64(),
                tolerance: rec_tol,
            });
        }
        q[degree] = Complex::from_real(lead.clone());
        b[j + 1] = Complex::from_real(sub);
        hess.push(b);
        gamma.push(lead);
        u.push(dual_row(&q, c, n_max));
        coeff.push(q);
    }

    let mut worst = 0.0f64;
    let mut worst_n = 0;
    for m in 0..=n_max {
        for (n, un) in u.iter().enumerate().take(m + 1) {
            let mut g = pair(&coeff[m], un, prec);
            if m == n {
                g.re -= 1u32;
            }
            let d = g.abs().to_f64();
            if d > worst {
                worst = d;
                worst_n = m;
            }
        }
    }
    if worst > ortho_tol {
        return Err(Error::PrecisionExhausted {
            degree: worst_n,
            detail: format!("orthonormality residual {worst:.3e} exceeds {ortho_tol:.3e}"),
        });
    }
    Ok(OrthoFamily {
        table,
        n_max,
        coeff,
        gamma,
        hess,
        ortho_residual: worst,
    })
}

fn dual_row(p: &[Complex], c: &[Vec<Complex>], n_max: usize) -> Vec<Complex> {
    let prec = p[0].prec();
    (0..=n_max + 1)
        .map(|a| {
            let mut acc = Complex::zero(prec);
            for (pb, cab) in p.iter().zip(&c[a]) {
                acc.add_mul_conj(cab, pb);
            }
            acc
        })
        .collect()
}

fn pair(f: &[Complex], u: &[Complex], prec: u32) -> Complex {
    let mut acc = Complex::zero(prec);
    for (fa, ua) in f.iter().zip(u) {
        acc.add_mul(fa, ua);
    }
    acc
}

/// `⟨f, f⟩` (real part) and the magnitude scale `Σ |f_a||f_b||c_ab|`.
fn self_product(f: &[Complex], c: &[Vec<Complex>]) -> (Float, f64) {
    let prec = f[0].prec();
    let mut acc = Complex::zero(prec);
    let abs: Vec<f64> = f.iter().map(|x| x.abs().to_f64()).collect();
    let mut scale = 0.0;
    for (a, fa) in f.iter().enumerate() {
        let mut row = Complex::zero(prec);
        for (b, fb) in f.iter().enumerate() {
            row.add_mul_conj(&c[a][b], fb);
            scale += abs[a] * abs[b] * c[a][b].abs().to_f64();
        }
        acc.add_mul(fa, &row);
    }
    (acc.re, scale)
}

impl OrthoFamily {
    pub fn measure(&self) -> &MeasureExpr {
        self.table.measure()
    }

    pub fn table(&self) -> &MomentTable {
        &self.table
    }

    /// Largest degree `N`.
    pub fn max_degree(&self) -> usize {
        self.n_max
    }

    pub fn prec(&self) -> u32 {
        self.table.prec()
    }

    /// `max |⟨p_m, p_n⟩ - δ_mn|` over the family.
    pub fn ortho_residual(&self) -> f64 {
        self.ortho_residual
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            Err(Error::DegreeOutOfRange { degree: n, max: self.n_max })
        } else {
            Ok(())
        }
    }

    /// Coefficients `a_{n,0..=n}` of `p_n`.
    pub fn coeffs(&self, n: usize) -> Result<&[Complex]> {
        self.check(n)?;
        Ok(&self.coeff[n])
    }

    pub fn poly(&self, n: usize) -> Result<Polynomial> {
        Ok(Polynomial::new(self.coeffs(n)?.to_vec()))
    }

    /// Leading coefficient `γ_n > 0`.
    pub fn gamma(&self, n: usize) -> Result<&Float> {
        self.check(n)?;
        Ok(&self.gamma[n])
    }

    pub fn gammas(&self) -> &[Float] {
        &self.gamma
    }

    /// `b_{k,j} = ⟨z p_j, p_k⟩` for `k <= j + 1`, `j < N`; zero above the subdiagonal band.
    pub fn hess(&self, k: usize, j: usize) -> Result<Complex> {
        if j >= self.n_max {
            return Err(Error::DegreeOutOfRange { degree: j, max: self.n_max - 1 });
        }
        Ok(self.hess[j].get(k).cloned().unwrap_or_else(|| Complex::zero(self.prec())))
    }

    /// Leading `n x n` section `[b_{k,j}]` of the Hessenberg matrix; its
    /// eigenvalues are the zeros of `p_n`.
    pub fn hessenberg_section(&self, n: usize) -> Result<Vec<Vec<Complex>>> {
        self.check(n)?;
        let prec = self.prec();
        Ok((0..n)
            .map(|k| {
                (0..n)
                    .map(|j| {
                        if k <= j + 1 {
                            self.hess[j][k].clone()
                        } else {
                            Complex::zero(prec)
                        }
                    })
                    .collect()
            })
            .collect())
    }

    /// Diagonal `n -> b_{n-k, n}` for `k >= -1`, listed for `n = max(k, 0)..N-1`.
    pub fn hessenberg_row(&self, k_offset: isize) -> Vec<Complex> {
        assert!(k_offset >= -1, "diagonals below the subdiagonal vanish");
        let start = k_offset.max(0) as usize;
        (start..self.n_max)
            .map(|n| self.hess[n][(n as isize - k_offset) as usize].clone())
            .collect()
    }

    pub fn evaluate(&self, n: usize, z: &Complex) -> Result<Complex> {
        Ok(self.poly(n)?.eval(z))
    }

    /// `p_0(z), ..., p_n(z)`.
    pub fn evaluate_all(&self, n: usize, z: &Complex) -> Result<Vec<Complex>> {
        self.check(n)?;
        Ok(self.coeff[..=n]
            .iter()
            .map(|c| Polynomial::new(c.clone()).eval(z))
            .collect())
    }

    /// `K_n(z, ζ) = Σ_{k<=n} conj(p_k(ζ)) p_k(z)`.
    pub fn kernel_eval(&self, n: usize, z: &Complex, zeta: &Complex) -> Result<Complex> {
        let pz = self.evaluate_all(n, z)?;
        let pw = self.evaluate_all(n, zeta)?;
        let mut acc = Complex::zero(self.prec());
        for (a, b) in pz.iter().zip(&pw) {
            acc.add_mul_conj(a, b);
        }
        Ok(acc)
    }

    /// `λ_n(z) = 1 / K_n(z, z)`.
    pub fn christoffel(&self, n: usize, z: &Complex) -> Result<Float> {
        Ok(self.christoffel_all(n, z)?.pop().expect("nonempty"))
    }

    /// `λ_0(z), ..., λ_n(z)`.
    pub fn christoffel_all(&self, n: usize, z: &Complex) -> Result<Vec<Float>> {
        let prec = self.prec();
        let mut sum = Float::new(prec);
        Ok(self
            .evaluate_all(n, z)?
            .iter()
            .map(|p| {
                sum += p.norm_sqr();
                Float::with_val(prec, sum.recip_ref())
            })
            .collect())
    }

    /// JSON export with full-precision decimal strings.
    pub fn to_json(&self) -> Value {
        let dec = |x: &Float| x.to_string_radix(10, None);
        let cplx = |z: &Complex| json!([dec(&z.re), dec(&z.im)]);
        json!({
            "measure": self.measure(),
            "N": self.n_max,
            "bits": self.prec(),
            "gamma": self.gamma.iter().map(dec).collect::<Vec<_>>(),
            "coeff": self.coeff.iter().map(|row| row.iter().map(cplx).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "hess": {
                "layout": "column j lists b_{k,j} for k = 0..=j+1",
                "columns": self.hess.iter().map(|col| col.iter().map(cplx).collect::<Vec<_>>()).collect::<Vec<_>>(),
            },
            "ortho_residual": self.ortho_residual,
        })
    }
}

/// `λ_n(z) = 1 / (v^H G^{-1} v)` with `G = [c_{j,k}]` and `v = (z^j)`, solved
/// directly from the moment table.
pub fn christoffel_oracle_table(table: &MomentTable, n: usize, z: &Complex) -> Result<Float> {
    let g = table.section(n)?;
    let prec = table.prec();
    let mut v = Vec::with_capacity(n + 1);
    let mut zp = Complex::one(prec);
    for _ in 0..=n {
        v.push(zp.clone());
        zp = &zp * z;
    }
    let x = hermitian_solve(&g, &v)?;
    let mut q = Complex::zero(prec);
    for (vi, xi) in v.iter().zip(&x) {
        q.add_mul_conj(xi, vi);
    }
    Ok(Float::with_val(prec, q.re.recip_ref()))
}

pub fn christoffel_oracle(mu: &MeasureExpr, n: usize, z: &Complex, ctx: &PrecisionContext) -> Result<Float> {
    let table = build_moment_table(mu, n, ctx)?;
    christoffel_oracle_table(&table, n, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Curve, Region};
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(212).unwrap()
    }

    fn disk() -> MeasureExpr {
        MeasureExpr::area(Region::disk(c(0.0, 0.0), 1.0).unwrap())
    }

    fn circle() -> MeasureExpr {
        MeasureExpr::arclength(Curve::Circle { center: c(0.0, 0.0), radius: 1.0 })
    }

    fn mp(z: Complex64) -> Complex {
        Complex::from_c64(212, z)
    }

    #[test]
    fn disk_family_is_monomial() {
        let fam = orthonormalize(&disk(), 20, &ctx()).unwrap();
        let pi = std::f64::consts::PI;
        for n in 0..=20 {
            let co = fam.coeffs(n).unwrap();
            for (k, a) in co.iter().enumerate() {
                if k < n {
                    assert!(a.abs().to_f64() < 1e-55);
                }
            }
            let expected = ((n as f64 + 1.0) / pi).sqrt();
            assert!((fam.gamma(n).unwrap().to_f64() / expected - 1.0).abs() < 1e-15);
        }
        assert!(fam.ortho_residual() < ctx().ortho_tol());
        let v = fam.evaluate(1, &mp(c(1.0, 0.0))).unwrap();
        assert!((v.re.to_f64() - (2.0 / pi).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn circle_family_and_rows() {
        let fam = orthonormalize(&circle(), 10, &ctx()).unwrap();
        let v = fam.evaluate(4, &mp(c(0.0, 1.0))).unwrap();
        let inv = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
        assert!((v.re.to_f64() - inv).abs() < 1e-15 && v.im.to_f64().abs() < 1e-15);
        for b in fam.hessenberg_row(-1) {
            assert!((b.re.to_f64() - 1.0).abs() < 1e-15);
        }
        let fam = orthonormalize(&disk(), 10, &ctx()).unwrap();
        for (n, b) in fam.hessenberg_row(-1).iter().enumerate() {
            let e = ((n as f64 + 1.0) / (n as f64 + 2.0)).sqrt();
            assert!((b.re.to_f64() - e).abs() < 1e-15);
        }
        assert!(fam.hessenberg_row(0).iter().all(|b| b.abs().to_f64() < 1e-55));
        assert_eq!(fam.hessenberg_row(1).len(), 9);
    }

    #[test]
    fn concentric_lake_gamma() {
        let mu = MeasureExpr::lake_difference(
            Region::disk(c(0.0, 0.0), 1.0).unwrap(),
            Region::disk(c(0.0, 0.0), 0.5).unwrap(),
        )
        .unwrap();
        let fam = orthonormalize(&mu, 30, &ctx()).unwrap();
        for n in 0..=30 {
            let np1 = n as i32 + 1;
            let e = (np1 as f64 / std::f64::consts::PI).sqrt() / (1.0 - 0.5f64.powi(2 * np1)).sqrt();
            assert!((fam.gamma(n).unwrap().to_f64() / e - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn kernel_and_christoffel_values() {
        let fam = orthonormalize(&disk(), 5, &ctx()).unwrap();
        let pi = std::f64::consts::PI;
        let two = mp(c(2.0, 0.0));
        let k = fam.kernel_eval(2, &two, &two).unwrap();
        assert!((k.re.to_f64() - 57.0 / pi).abs() < 1e-13);
        let k0 = fam.kernel_eval(4, &mp(c(0.0, 0.0)), &mp(c(0.0, 0.0))).unwrap();
        assert!((k0.re.to_f64() - 1.0 / pi).abs() < 1e-15);
        assert!((fam.christoffel(2, &two).unwrap().to_f64() - pi / 57.0).abs() < 1e-15);
        assert!((fam.christoffel(0, &mp(c(0.3, 0.7))).unwrap().to_f64() - pi).abs() < 1e-15);
        let oracle = christoffel_oracle(&disk(), 2, &two, &ctx()).unwrap();
        assert!((oracle.to_f64() - pi / 57.0).abs() < 1e-15);
        let o0 = christoffel_oracle(&disk(), 1, &mp(c(0.0, 0.0)), &ctx()).unwrap();
        assert!((o0.to_f64() - pi).abs() < 1e-15);
    }

    #[test]
    fn atoms_rejected() {
        let atoms = MeasureExpr::sum(vec![
            MeasureExpr::atom(c(0.0, 0.0), 1.0),
            MeasureExpr::atom(c(1.0, 0.0), 1.0),
        ]);
        assert!(matches!(orthonormalize(&atoms, 3, &ctx()), Err(Error::FiniteSupport { atoms: 2, .. })));
    }

    #[test]
    fn json_export_has_full_precision() {
        let fam = orthonormalize(&disk(), 2, &ctx()).unwrap();
        let v = fam.to_json();
        assert_eq!(v["N"], 2);
        let g0 = v["gamma"][0].as_str().unwrap();
        assert!(g0.len() > 60, "{g0}");
        assert_eq!(v["hess"]["columns"][1].as_array().unwrap().len(), 3);
    }
}
