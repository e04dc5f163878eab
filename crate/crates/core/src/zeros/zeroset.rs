use num_complex::Complex64;
use rug::Float;

use super::matching::min_cost_assignment;
use crate::error::{Error, Result};
use crate::geometry::Hull;
use crate::numerics::{hessenberg_section_eigen, poly_roots_report, Complex, PrecisionContext};
use crate::orthopoly::OrthoFamily;

/// Largest degree at which zeros are cross-checked against Hessenberg eigenvalues.
pub const CROSS_CHECK_MAX_DEGREE: usize = 40;

/// Zeros of one `p_n` with residual certificates.
#[derive(Clone, Debug)]
pub struct ZeroSet {
    pub degree: usize,
    pub zeros: Vec<Complex>,
    /// `|p_n(z_k)|`
    pub residuals: Vec<Float>,
    /// Residuals relative to `max_j |c_j| · max(1, |z_k|)^n`.
    pub residual_ratios: Vec<f64>,
    /// Matched distance to the Hessenberg eigenvalues, when cross-checked.
    pub cross_check_gap: Option<f64>,
}

impl ZeroSet {
    pub fn to_c64(&self) -> Vec<Complex64> {
        self.zeros.iter().map(Complex::to_c64).collect()
    }

    /// CSV with columns `re, im, residual`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("re,im,residual\n");
        for (z, r) in self.zeros.iter().zip(&self.residuals) {
            let digits = (z.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize + 1;
            out.push_str(&format!(
                "{},{},{}\n",
                z.re.to_string_radix(10, Some(digits)),
                z.im.to_string_radix(10, Some(digits)),
                r.to_string_radix(10, Some(17))
            ));
        }
        out
    }
}

/// Zeros of `p_n` via the simultaneous iteration; for `n <= 40` also the
/// eigenvalues of the `n x n` Hessenberg section, which must agree within
/// `10 · root_tol` after optimal matching.
pub fn zeros_of(fam: &OrthoFamily, n: usize, ctx: &PrecisionContext) -> Result<ZeroSet> {
    if n == 0 {
        return Err(Error::DegeneratePolynomial);
    }
    let p = fam.poly(n)?;
    let report = poly_roots_report(&p, ctx)?;
    let mut set = ZeroSet {
        degree: n,
        zeros: report.roots,
        residuals: report.residuals,
        residual_ratios: report.residual_ratios,
        cross_check_gap: None,
    };
    if n <= CROSS_CHECK_MAX_DEGREE {
        let eig = hessenberg_section_eigen(&fam.hessenberg_section(n)?, ctx)?;
        let gap = matched_gap(&set.zeros, &eig);
        let tolerance = 10.0 * ctx.root_tol();
        if gap > tolerance {
            return Err(Error::CrossCheckFailed { gap, tolerance });
        }
        set.cross_check_gap = Some(gap);
    }
    Ok(set)
}

/// Largest distance between paired points under the minimum-total-distance
/// pairing of two equal-size multisets.
pub fn matched_gap(a: &[Complex], b: &[Complex]) -> f64 {
    assert_eq!(a.len(), b.len(), "multisets differ in size");
    let cost: Vec<Vec<f64>> = a
        .iter()
        .map(|x| b.iter().map(|y| (x - y).abs().to_f64()).collect())
        .collect();
    min_cost_assignment(&cost)
        .iter()
        .enumerate()
        .map(|(i, &j)| cost[i][j])
        .fold(0.0, f64::max)
}

/// Matched distance between the zero set and its complex conjugate.
pub fn conjugation_gap(zs: &ZeroSet) -> f64 {
    let conj: Vec<Complex> = zs.zeros.iter().map(Complex::conj).collect();
    matched_gap(&zs.zeros, &conj)
}

/// True iff every zero lies in `hull` inflated by `2^(-bits/4)`.
pub fn hull_check(zs: &ZeroSet, hull: &Hull, ctx: &PrecisionContext) -> bool {
    let inflate = ctx.slack(4.0);
    zs.zeros.iter().all(|z| hull.contains(z.to_c64(), inflate))
}
