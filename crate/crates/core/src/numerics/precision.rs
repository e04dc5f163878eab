use rug::float::Constant;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::Complex;

/// Default working precision: roughly 64 significant decimal digits.
pub const DEFAULT_BITS: u32 = 212;

/// Default sweep cap for the simultaneous root iteration and the QR driver.
pub const DEFAULT_MAX_SWEEPS: usize = 200;

/// Working precision and the acceptance tolerances that go with it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrecisionContext {
    bits: u32,
    ortho_tol: f64,
    root_tol: f64,
    max_sweeps: usize,
}

impl PrecisionContext {
    /// Context with tolerances derived from `bits`: orthonormality residual
    /// `2^(-bits/3)` and root residual `2^(-bits/2)`.
    pub fn new(bits: u32) -> Result<Self> {
        Self::with_tolerances(
            bits,
            pow2_clamped(-(bits as f64) / 3.0),
            pow2_clamped(-(bits as f64) / 2.0),
        )
    }

    pub fn with_tolerances(bits: u32, ortho_tol: f64, root_tol: f64) -> Result<Self> {
        if bits < 64 {
            return Err(Error::InvalidPrecision(format!("bits = {bits} < 64")));
        }
        for (name, tol) in [("ortho_tol", ortho_tol), ("root_tol", root_tol)] {
            if !(tol > 0.0 && tol < 1.0) {
                return Err(Error::InvalidPrecision(format!("{name} = {tol} not in (0, 1)")));
            }
        }
        Ok(Self {
            bits,
            ortho_tol,
            root_tol,
            max_sweeps: DEFAULT_MAX_SWEEPS,
        })
    }

    pub fn with_max_sweeps(mut self, sweeps: usize) -> Self {
        self.max_sweeps = sweeps.max(1);
        self
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn ortho_tol(&self) -> f64 {
        self.ortho_tol
    }

    pub fn root_tol(&self) -> f64 {
        self.root_tol
    }

    pub fn max_sweeps(&self) -> usize {
        self.max_sweeps
    }

    /// `2^(-bits / divisor)`, the slack used by the identity checks.
    pub fn slack(&self, divisor: f64) -> f64 {
        pow2_clamped(-(self.bits as f64) / divisor)
    }

    pub fn zero(&self) -> Float {
        Float::new(self.bits)
    }

    pub fn float(&self, x: f64) -> Float {
        Float::with_val(self.bits, x)
    }

    pub fn int(&self, k: i64) -> Float {
        Float::with_val(self.bits, k)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.bits, Constant::Pi)
    }

    pub fn czero(&self) -> Complex {
        Complex::zero(self.bits)
    }

    pub fn cone(&self) -> Complex {
        Complex::one(self.bits)
    }

    pub fn complex(&self, re: f64, im: f64) -> Complex {
        Complex::from_f64(self.bits, re, im)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self::new(DEFAULT_BITS).expect("default precision is valid")
    }
}

fn pow2_clamped(exp: f64) -> f64 {
    exp.max(-1000.0).exp2()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_low_precision_and_bad_tolerances() {
        assert!(PrecisionContext::new(63).is_err());
        assert!(PrecisionContext::with_tolerances(128, 0.0, 1e-10).is_err());
        assert!(PrecisionContext::with_tolerances(128, 1e-10, 1.0).is_err());
        assert!(PrecisionContext::new(64).is_ok());
    }

    #[test]
    fn default_tolerances_follow_bits() {
        let ctx = PrecisionContext::default();
        assert_eq!(ctx.bits(), 212);
        assert!((ctx.ortho_tol() / (-212.0f64 / 3.0).exp2() - 1.0).abs() < 1e-12);
        assert!((ctx.root_tol() / (-106.0f64).exp2() - 1.0).abs() < 1e-12);
        assert_eq!(ctx.max_sweeps(), 200);
    }
}
