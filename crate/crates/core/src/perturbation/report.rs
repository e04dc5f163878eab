use num_complex::Complex64;
use rug::Float;
use serde_json::{json, Value};

use super::setup::{
    beta_bounds_from, beta_sequence, christoffel_ratios, diff_norms_from, epsilon_tail, ps_norms,
    ratio_with_beta, DiffNorms, PerturbationSetup,
};
use crate::error::{Error, Result};
use crate::geometry::Hull;
use crate::numerics::Complex;

/// Per-degree diagnostics at one probe point.
#[derive(Clone, Debug)]
pub struct ProbeSeries {
    pub z: Complex64,
    /// `p_n(μ1,z)/p_n(μ0,z)`; `None` where `p_n(μ0,z)` vanishes.
    pub ratio: Vec<Option<Complex>>,
    pub ratio_bound: Vec<Option<f64>>,
    /// `|p_n(μ0,z)/p_n(μ1,z) - 1|`
    pub deviation: Vec<f64>,
    /// `λ_n(μ0,z)/λ_n(μ1,z)`
    pub lam_ratio: Vec<Float>,
}

/// All pairwise diagnostics for `n = 0..=N`, every inequality and identity
/// already checked.
#[derive(Clone, Debug)]
pub struct PerturbationReport {
    pub bits: u32,
    pub n_max: usize,
    pub ps_norm: Vec<Float>,
    pub ps_norm0: Vec<Float>,
    pub beta: Vec<Float>,
    pub beta_lo: Vec<Float>,
    pub beta_hi: Vec<Float>,
    pub diff: DiffNorms,
    /// `eps_tail[m] = Σ_{j=m}^{N} ps_norm[j]²`
    pub eps_tail: Vec<Float>,
    pub hull: Hull,
    pub probes: Vec<ProbeSeries>,
}

/// Probe points above the hull's bounding-box center at distances 1.5, 2, 3.
pub fn default_probes(hull: &Hull) -> Vec<Complex64> {
    let center = match hull {
        Hull::Disk { center, .. } => *center,
        Hull::Polygon { vertices } => {
            let (lo, hi) = vertices.iter().fold(
                (Complex64::new(f64::INFINITY, f64::INFINITY), Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
                |(lo, hi), v| {
                    (
                        Complex64::new(lo.re.min(v.re), lo.im.min(v.im)),
                        Complex64::new(hi.re.max(v.re), hi.im.max(v.im)),
                    )
                },
            );
            (lo + hi) / 2.0
        }
    };
    [1.5, 2.0, 3.0].iter().map(|r| center + Complex64::new(0.0, *r)).collect()
}

pub fn perturbation_report(setup: &PerturbationSetup, probes: &[Complex64]) -> Result<PerturbationReport> {
    let (ps, ps0) = ps_norms(setup)?;
    let beta = beta_sequence(setup)?;
    let (lo, hi) = beta_bounds_from(&ps, &ps0, &beta, setup.slack())?;
    let diff = diff_norms_from(setup, &ps, &ps0, &beta)?;
    let n_max = setup.max_degree();
    let eps_tail = (0..=n_max).map(|m| epsilon_tail(&ps, m)).collect();
    let hull = setup.mu1.support_hull();
    let mut series = Vec::with_capacity(probes.len());
    for &z in probes {
        let lam_ratio = christoffel_ratios(setup, z)?;
        let mut ratio = Vec::with_capacity(n_max + 1);
        let mut ratio_bound = Vec::with_capacity(n_max + 1);
        let mut deviation = Vec::with_capacity(n_max + 1);
        for (n, b) in beta.iter().enumerate() {
            match ratio_with_beta(setup, &hull, z, n, b) {
                Ok(s) => {
                    ratio.push(Some(s.ratio));
                    ratio_bound.push(s.bound);
                    deviation.push(s.deviation);
                }
                Err(Error::ZeroDenominator { .. }) => {
                    ratio.push(None);
                    ratio_bound.push(None);
                    deviation.push(f64::NAN);
                }
                Err(e) => return Err(e),
            }
        }
        series.push(ProbeSeries {
            z,
            ratio,
            ratio_bound,
            deviation,
            lam_ratio,
        });
    }
    Ok(PerturbationReport {
        bits: setup.ctx().bits(),
        n_max,
        ps_norm: ps,
        ps_norm0: ps0,
        beta,
        beta_lo: lo,
        beta_hi: hi,
        diff,
        eps_tail,
        hull,
        probes: series,
    })
}

/// Decimal string carrying the full working precision.
pub fn decimal(x: &Float) -> String {
    let digits = (x.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize + 1;
    x.to_string_radix(10, Some(digits))
}

fn decimal_complex(z: &Complex) -> String {
    format!("{}{}{}i", decimal(&z.re), if z.im.is_sign_negative() { "" } else { "+" }, decimal(&z.im))
}

impl PerturbationReport {
    /// Column names; `diff0`/`diff1` hold squared norms.
    pub fn csv_header(&self) -> Vec<String> {
        let mut cols: Vec<String> = [
            "n", "ps_norm", "ps_norm0", "beta", "beta_lo", "beta_hi", "diff0", "diff1", "eps_tail",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        for k in 0..self.probes.len() {
            cols.push(format!("ratio_{k}"));
            cols.push(format!("lam_ratio_{k}"));
        }
        cols
    }

    /// CSV body with one row per degree; `extra` is appended to every row.
    pub fn to_csv(&self, extra: &[(&str, &str)]) -> String {
        let mut header = self.csv_header();
        header.extend(extra.iter().map(|(k, _)| k.to_string()));
        let mut out = header.join(",");
        out.push('\n');
        for n in 0..=self.n_max {
            let mut row = vec![
                n.to_string(),
                decimal(&self.ps_norm[n]),
                decimal(&self.ps_norm0[n]),
                decimal(&self.beta[n]),
                decimal(&self.beta_lo[n]),
                decimal(&self.beta_hi[n]),
                decimal(&self.diff.diff0[n]),
                decimal(&self.diff.diff1[n]),
                decimal(&self.eps_tail[n]),
            ];
            for p in &self.probes {
                row.push(p.ratio[n].as_ref().map(decimal_complex).unwrap_or_else(|| "nan".into()));
                row.push(decimal(&p.lam_ratio[n]));
            }
            row.extend(extra.iter().map(|(_, v)| v.to_string()));
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let dec = |v: &[Float]| v.iter().map(decimal).collect::<Vec<_>>();
        let probes: Vec<Value> = self
            .probes
            .iter()
            .map(|p| {
                json!({
                    "z": [p.z.re, p.z.im],
                    "ratio": p.ratio.iter().map(|r| r.as_ref().map(|c| [decimal(&c.re), decimal(&c.im)])).collect::<Vec<_>>(),
                    "ratio_bound": p.ratio_bound,
                    "deviation": p.deviation.iter().map(|d| if d.is_finite() { json!(d) } else { Value::Null }).collect::<Vec<_>>(),
                    "lam_ratio": dec(&p.lam_ratio),
                })
            })
            .collect();
        json!({
            "bits": self.bits,
            "N": self.n_max,
            "eps_truncation_degree": self.n_max,
            "hull_diameter": self.hull.diameter(),
            "ps_norm": dec(&self.ps_norm),
            "ps_norm0": dec(&self.ps_norm0),
            "beta": dec(&self.beta),
            "beta_lo": dec(&self.beta_lo),
            "beta_hi": dec(&self.beta_hi),
            "diff0_squared": dec(&self.diff.diff0),
            "diff1_squared": dec(&self.diff.diff1),
            "identity_deviation_diff0": self.diff.dev0,
            "identity_deviation_diff1": self.diff.dev1,
            "parseval_deviation": self.diff.parseval_dev,
            "eps_tail": dec(&self.eps_tail),
            "probes": probes,
        })
    }
}
