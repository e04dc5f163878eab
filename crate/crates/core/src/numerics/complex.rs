use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use rug::Float;

/// Complex number over MPFR floats.
///
/// Both parts always carry the same precision; binary operations produce
/// results at the larger precision of their operands.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn zero(prec: u32) -> Self {
        Self {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_f64(prec, 1.0, 0.0)
    }

    pub fn i(prec: u32) -> Self {
        Self::from_f64(prec, 0.0, 1.0)
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Self {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn from_c64(prec: u32, z: Complex64) -> Self {
        Self::from_f64(prec, z.re, z.im)
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        Self { re, im }
    }

    pub fn new(re: Float, im: Float) -> Self {
        let prec = re.prec().max(im.prec());
        Self {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    /// `cos(theta) + i sin(theta)`.
    pub fn cis(theta: &Float) -> Self {
        let (s, c) = theta.clone().sin_cos(Float::new(theta.prec()));
        Self { re: c, im: s }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        Float::with_val(self.prec(), &self.re * &self.re + &self.im * &self.im)
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    /// `log |z|`; `-inf` at the origin.
    pub fn ln_abs(&self) -> Float {
        self.abs().ln()
    }

    pub fn arg(&self) -> Float {
        Float::with_val(self.prec(), self.im.atan2_ref(&self.re))
    }

    pub fn scale(&self, s: &Float) -> Self {
        let prec = self.prec();
        Self {
            re: Float::with_val(prec, &self.re * s),
            im: Float::with_val(prec, &self.im * s),
        }
    }

    pub fn unscale(&self, s: &Float) -> Self {
        let prec = self.prec();
        Self {
            re: Float::with_val(prec, &self.re / s),
            im: Float::with_val(prec, &self.im / s),
        }
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        let prec = self.prec();
        Self {
            re: Float::with_val(prec, &self.re / &d),
            im: -Float::with_val(prec, &self.im / &d),
        }
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        if self.is_zero() {
            return Self::zero(prec);
        }
        let r = self.abs();
        // sqrt((|z| + |re|) / 2) avoids cancellation; the other part follows from im.
        let t = Float::with_val(prec, &r + &*self.re.as_abs()) / 2u32;
        let t = t.sqrt();
        let other = Float::with_val(prec, &self.im / &t) / 2u32;
        if self.re.is_sign_positive() {
            Self { re: t, im: other }
        } else {
            let other = other.abs();
            let t = if self.im.is_sign_negative() { -t } else { t };
            Self { re: other, im: t }
        }
    }

    pub fn powu(&self, k: u32) -> Self {
        let mut acc = Self::one(self.prec());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self += a * b`
    pub fn add_mul(&mut self, a: &Complex, b: &Complex) {
        self.re += &a.re * &b.re;
        self.re -= &a.im * &b.im;
        self.im += &a.re * &b.im;
        self.im += &a.im * &b.re;
    }

    /// `self += a * conj(b)`
    pub fn add_mul_conj(&mut self, a: &Complex, b: &Complex) {
        self.re += &a.re * &b.re;
        self.re += &a.im * &b.im;
        self.im -= &a.re * &b.im;
        self.im += &a.im * &b.re;
    }

    /// `self -= a * b`
    pub fn sub_mul(&mut self, a: &Complex, b: &Complex) {
        self.re -= &a.re * &b.re;
        self.re += &a.im * &b.im;
        self.im -= &a.re * &b.im;
        self.im -= &a.im * &b.re;
    }

    /// `self += a * s` for real `s`.
    pub fn add_mul_real(&mut self, a: &Complex, s: &Float) {
        self.re += &a.re * s;
        self.im += &a.im * s;
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Self {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = self.to_c64();
        write!(f, "{}{:+}i", z.re, z.im)
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        let prec = self.prec().max(rhs.prec());
        Complex {
            re: Float::with_val(prec, &self.re + &rhs.re),
            im: Float::with_val(prec, &self.im + &rhs.im),
        }
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        let prec = self.prec().max(rhs.prec());
        Complex {
            re: Float::with_val(prec, &self.re - &rhs.re),
            im: Float::with_val(prec, &self.im - &rhs.im),
        }
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        let prec = self.prec().max(rhs.prec());
        Complex {
            re: Float::with_val(prec, &self.re * &rhs.re - &self.im * &rhs.im),
            im: Float::with_val(prec, &self.re * &rhs.im + &self.im * &rhs.re),
        }
    }
}

impl Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        let prec = self.prec().max(rhs.prec());
        let d = rhs.norm_sqr();
        let re = Float::with_val(prec, &self.re * &rhs.re + &self.im * &rhs.im);
        let im = Float::with_val(prec, &self.im * &rhs.re - &self.re * &rhs.im);
        Complex {
            re: re / &d,
            im: im / &d,
        }
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Complex> for Complex {
            type Output = Complex;
            fn $m(self, rhs: Complex) -> Complex {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Complex> for Complex {
            type Output = Complex;
            fn $m(self, rhs: &Complex) -> Complex {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl AddAssign<&Complex> for Complex {
    fn add_assign(&mut self, rhs: &Complex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Complex> for Complex {
    fn sub_assign(&mut self, rhs: &Complex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Complex> for Complex {
    fn mul_assign(&mut self, rhs: &Complex) {
        *self = &*self * rhs;
    }
}
