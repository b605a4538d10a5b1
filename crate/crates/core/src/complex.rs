//! Minimal complex arithmetic over arbitrary-precision floats.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Float;

/// `re + i im`; both parts share one binary precision.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        Complex { re, im }
    }

    pub fn from_i64(prec: u32, re: i64, im: i64) -> Self {
        Complex::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn zero(prec: u32) -> Self {
        Complex::from_i64(prec, 0, 0)
    }

    pub fn one(prec: u32) -> Self {
        Complex::from_i64(prec, 1, 0)
    }

    pub fn i(prec: u32) -> Self {
        Complex::from_i64(prec, 0, 1)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    /// `modulus * e^(i arg)`
    pub fn from_polar(modulus: &Float, arg: &Float) -> Self {
        let p = modulus.prec();
        let (s, c) = arg.clone().sin_cos(Float::new(p));
        Complex::new(Float::with_val(p, modulus * &c), Float::with_val(p, modulus * &s))
    }

    pub fn norm_sqr(&self) -> Float {
        Float::with_val(self.prec(), self.re.clone().square() + self.im.clone().square())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> Float {
        self.im.clone().atan2(&self.re)
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), Float::with_val(self.prec(), -&self.im))
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec();
        Complex::new(Float::with_val(p, &self.re * k), Float::with_val(p, &self.im * k))
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        let p = self.prec();
        Complex::new(
            Float::with_val(p, &self.re / &n),
            Float::with_val(p, -Float::with_val(p, &self.im / &n)),
        )
    }

    pub fn div(&self, other: &Complex) -> Self {
        self * &other.recip()
    }

    /// Principal square root (branch cut on the negative real axis, argument in `(-pi/2, pi/2]`).
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        let m = self.abs();
        if m.is_zero() {
            return Complex::zero(p);
        }
        let re = Float::with_val(p, Float::with_val(p, &m + &self.re) / 2u32).sqrt();
        let mut im = Float::with_val(p, Float::with_val(p, &m - &self.re) / 2u32).sqrt();
        if self.im.is_sign_negative() && !self.im.is_zero() {
            im = -im;
        }
        Complex::new(re, im)
    }

    /// Principal fourth root: `|z|^(1/4) e^(i arg(z)/4)`.
    pub fn principal_fourth_root(&self) -> Self {
        let m = self.abs().sqrt().sqrt();
        let a = self.arg() / 4u32;
        Complex::from_polar(&m, &a)
    }

    pub fn powu(&self, n: u32) -> Self {
        let mut acc = Complex::one(self.prec());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by `i^k`.
    pub fn mul_i_pow(&self, k: u32) -> Self {
        let p = self.prec();
        match k % 4 {
            0 => self.clone(),
            1 => Complex::new(Float::with_val(p, -&self.im), self.re.clone()),
            2 => -self,
            _ => Complex::new(self.im.clone(), Float::with_val(p, -&self.re)),
        }
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        let p = self.prec();
        Complex::new(Float::with_val(p, &self.re + &o.re), Float::with_val(p, &self.im + &o.im))
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        let p = self.prec();
        Complex::new(Float::with_val(p, &self.re - &o.re), Float::with_val(p, &self.im - &o.im))
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        let p = self.prec();
        let ac = Float::with_val(p, &self.re * &o.re);
        let bd = Float::with_val(p, &self.im * &o.im);
        let ad = Float::with_val(p, &self.re * &o.im);
        let bc = Float::with_val(p, &self.im * &o.re);
        Complex::new(ac - bd, ad + bc)
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        let p = self.prec();
        Complex::new(Float::with_val(p, -&self.re), Float::with_val(p, -&self.im))
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        let re = crate::precision::fmt_digits(&self.re, digits as u32);
        let im = crate::precision::fmt_digits(&self.im.clone().abs(), digits as u32);
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{re} {sign} {im}i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 200;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(Float::with_val(P, re), Float::with_val(P, im))
    }

    fn near(a: &Complex, b: &Complex) -> bool {
        (a - b).abs() < 1e-50
    }

    #[test]
    fn sqrt_is_principal() {
        let r = c(-4.0, 0.0).sqrt();
        assert!(near(&r, &c(0.0, 2.0)));
        let z = c(3.0, -4.0);
        let r = z.sqrt();
        assert!(near(&r, &c(2.0, -1.0)));
        assert!(near(&(&r * &r), &z));
    }

    #[test]
    fn fourth_root_and_rotation() {
        let z = c(1.0, 4.0);
        let r = z.principal_fourth_root();
        assert!(near(&r.powu(4), &z));
        for k in 0..4 {
            assert!(near(&r.mul_i_pow(k).powu(4), &z));
        }
        assert!(near(&z.mul_i_pow(1), &c(-4.0, 1.0)));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = c(1.5, -2.0);
        let b = c(-0.25, 3.0);
        assert!(near(&(&a * &b).div(&b), &a));
    }
}
