use rug::Float;

use crate::numerics::Complex;

/// Polynomial with complex coefficients in the monomial basis,
/// `coeffs[k]` multiplying `z^k`.
///
/// Trailing zero coefficients are trimmed on construction, so the last
/// coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Complex::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_f64(prec: u32, coeffs: &[(f64, f64)]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&(re, im)| Complex::from_f64(prec, re, im))
                .collect(),
        )
    }

    /// `z^n`
    pub fn monomial(prec: u32, n: usize) -> Self {
        let mut coeffs = vec![Complex::zero(prec); n + 1];
        coeffs[n] = Complex::one(prec);
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex> {
        self.coeffs
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Complex::is_zero)
    }

    pub fn leading(&self) -> &Complex {
        self.coeffs.last().expect("polynomial has at least one coefficient")
    }

    pub fn is_monic(&self) -> bool {
        let lead = self.leading();
        lead.im.is_zero() && lead.re == 1
    }

    pub fn prec(&self) -> u32 {
        self.coeffs.iter().map(Complex::prec).max().unwrap_or(64)
    }

    /// Horner evaluation at working precision.
    pub fn eval(&self, z: &Complex) -> Complex {
        let mut acc = self.leading().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc *= z;
            acc += c;
        }
        acc
    }

    /// Value and first derivative in one Horner pass.
    pub fn eval_with_derivative(&self, z: &Complex) -> (Complex, Complex) {
        let prec = self.prec().max(z.prec());
        let mut p = self.leading().clone();
        let mut dp = Complex::zero(prec);
        for c in self.coeffs.iter().rev().skip(1) {
            dp *= z;
            dp += &p;
            p *= z;
            p += c;
        }
        (p, dp)
    }

    /// `Σ |c_k| |z|^k`, the magnitude scale of the evaluation at `z`.
    pub fn abs_eval(&self, z: &Complex) -> Float {
        let r = z.abs();
        let mut acc = self.leading().abs();
        for c in self.coeffs.iter().rev().skip(1) {
            acc *= &r;
            acc += c.abs();
        }
        acc
    }

    /// A-priori bound `d · 2^(1-bits) · Σ |c_k| |z|^k` on the Horner rounding error.
    pub fn eval_error_bound(&self, z: &Complex) -> Float {
        let prec = self.prec();
        let mut bound = self.abs_eval(z);
        bound *= self.degree().max(1) as u32;
        bound >>= prec as i32 - 1;
        bound
    }

    /// Coefficient-wise conjugate, `conj(p(conj(z)))` as a polynomial.
    pub fn conj_coeffs(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Complex::conj).collect(),
        }
    }

    /// Divide through by the leading coefficient.
    pub fn to_monic(&self) -> Self {
        let lead = self.leading().clone();
        let prec = self.prec();
        let mut coeffs: Vec<Complex> = self.coeffs.iter().map(|c| c / &lead).collect();
        if let Some(last) = coeffs.last_mut() {
            *last = Complex::one(prec);
        }
        Self { coeffs }
    }

    pub fn max_abs_coeff(&self) -> Float {
        let mut m = Float::new(self.prec());
        for c in &self.coeffs {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::new(vec![Complex::zero(self.prec())]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Float::with_val(c.prec(), k)))
            .collect();
        Self::new(coeffs)
    }
}

/// Evaluate the polynomial with the given coefficients at `z`.
pub fn eval_poly(p: &Polynomial, z: &Complex) -> Complex {
    p.eval(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 212;

    #[test]
    fn squares_one_plus_i() {
        let p = Polynomial::from_f64(P, &[(0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let v = eval_poly(&p, &Complex::from_f64(P, 1.0, 1.0));
        assert!(v.re.is_zero());
        assert_eq!(v.im, 2);
    }

    #[test]
    fn constant_is_constant() {
        let p = Polynomial::from_f64(P, &[(1.0, 0.0)]);
        assert_eq!(p.degree(), 0);
        let v = p.eval(&Complex::from_f64(P, -7.5, 3.25));
        assert_eq!(v, Complex::one(P));
    }

    #[test]
    fn disk_orthonormal_cubic_at_two() {
        // p_3 for the unit-disk area measure is sqrt(4/pi) z^3.
        let pi = Float::with_val(P, rug::float::Constant::Pi);
        let gamma = Float::with_val(P, 4 / &pi).sqrt();
        let mut coeffs = vec![Complex::zero(P); 4];
        coeffs[3] = Complex::from_real(gamma.clone());
        let p = Polynomial::new(coeffs);
        let v = p.eval(&Complex::from_f64(P, 2.0, 0.0));
        let expected = gamma * 8u32;
        let err = Float::with_val(P, &v.re - &expected).abs();
        assert!(err < Float::with_val(P, 1e-60));
        assert!(v.im.is_zero());
    }

    #[test]
    fn trims_trailing_zeros_and_reports_monic() {
        let p = Polynomial::from_f64(P, &[(1.0, 0.0), (2.0, 0.0), (1.0, 0.0), (0.0, 0.0)]);
        assert_eq!(p.degree(), 2);
        assert!(p.is_monic());
        let q = Polynomial::from_f64(P, &[(1.0, 0.0), (0.0, 2.0)]).to_monic();
        assert!(q.is_monic());
        assert_eq!(q.coeffs()[0].to_c64(), num_complex::Complex64::new(0.0, -0.5));
    }

    #[test]
    fn derivative_in_horner_pass() {
        let p = Polynomial::from_f64(P, &[(1.0, 0.0), (-3.0, 1.0), (0.0, 0.0), (2.0, 0.0)]);
        let z = Complex::from_f64(P, 0.5, -1.5);
        let (v, d) = p.eval_with_derivative(&z);
        assert_eq!(v, p.eval(&z));
        let d2 = p.derivative().eval(&z);
        let gap = (&d - &d2).abs();
        assert!(gap < Float::with_val(P, 1e-60));
    }
}
