use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use super::context::PrecisionContext;
use super::real::BigReal;

/// Arbitrary-precision complex number in rectangular form.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: BigReal) -> Self {
        let im = BigReal::zero_like(&re);
        Self { re, im }
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        Self::new(BigReal::zero(ctx), BigReal::zero(ctx))
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Self::new(BigReal::one(ctx), BigReal::zero(ctx))
    }

    pub fn i(ctx: &PrecisionContext) -> Self {
        Self::new(BigReal::zero(ctx), BigReal::one(ctx))
    }

    /// Exact conversion of a finite double pair.
    pub fn from_c64(z: Complex64, ctx: &PrecisionContext) -> Self {
        Self::new(BigReal::from_f64(z.re, ctx), BigReal::from_f64(z.im, ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// Multiplication by the imaginary unit.
    pub fn mul_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    pub fn mul_real(&self, r: &BigReal) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn div_real(&self, r: &BigReal) -> Self {
        Self::new(&self.re / r, &self.im / r)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Self::new(self.re.mul_i64(k), self.im.mul_i64(k))
    }

    pub fn div_i64(&self, k: i64) -> Self {
        Self::new(self.re.div_i64(k), self.im.div_i64(k))
    }

    pub fn norm_sqr(&self) -> BigReal {
        self.re.sqr() + self.im.sqr()
    }

    pub fn abs(&self) -> BigReal {
        self.norm_sqr().sqrt()
    }

    /// Principal argument in `(-π, π]`.
    pub fn arg(&self) -> BigReal {
        self.im.atan2(&self.re)
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        Self::new(&self.re / &d, -(&self.im / &d))
    }

    pub fn sqr(&self) -> Self {
        let re = (&self.re + &self.im) * (&self.re - &self.im);
        let im = (&self.re * &self.im).mul_i64(2);
        Self::new(re, im)
    }

    /// Integer power by repeated squaring. `z^0 = 1`, including `z = 0`.
    pub fn powi(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::from_real(BigReal::one_like(&self.re));
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        acc
    }

    /// Principal logarithm: `ln|z| + i arg z`.
    pub fn ln(&self) -> Self {
        Self::new(self.abs().ln(), self.arg())
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Self::new(&m * &c, &m * &s)
    }

    /// Principal power `exp(w ln z)` for real `w`; `0^w = 0` for `w > 0`.
    pub fn powf(&self, w: &BigReal) -> Self {
        if self.is_zero() {
            return Self::from_real(BigReal::zero_like(&self.re));
        }
        let m = (w * &self.abs().ln()).exp();
        let (s, c) = (w * &self.arg()).sin_cos();
        Self::new(&m * &c, &m * &s)
    }

    /// Nearest double in each part, with a flag set when either part overflowed.
    pub fn to_double(&self) -> (Complex64, bool) {
        let re = self.re.to_f64();
        let im = self.im.to_f64();
        let overflow = re.is_infinite() || im.is_infinite();
        (Complex64::new(re, im), overflow)
    }

    pub fn to_c64(&self) -> Complex64 {
        self.to_double().0
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + i({:?})", self.re, self.im)
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(20);
        write!(
            f,
            "{} + {}i",
            self.re.to_scientific(sig),
            self.im.to_scientific(sig)
        )
    }
}

fn add(a: &BigComplex, b: &BigComplex) -> BigComplex {
    BigComplex::new(&a.re + &b.re, &a.im + &b.im)
}

fn sub(a: &BigComplex, b: &BigComplex) -> BigComplex {
    BigComplex::new(&a.re - &b.re, &a.im - &b.im)
}

fn mul(a: &BigComplex, b: &BigComplex) -> BigComplex {
    BigComplex::new(
        &a.re * &b.re - &a.im * &b.im,
        &a.re * &b.im + &a.im * &b.re,
    )
}

fn div(a: &BigComplex, b: &BigComplex) -> BigComplex {
    let d = b.norm_sqr();
    BigComplex::new(
        (&a.re * &b.re + &a.im * &b.im) / &d,
        (&a.im * &b.re - &a.re * &b.im) / &d,
    )
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $f:ident) => {
        impl $tr<&BigComplex> for &BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: &BigComplex) -> BigComplex {
                $f(self, rhs)
            }
        }
        impl $tr<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: BigComplex) -> BigComplex {
                $f(&self, &rhs)
            }
        }
        impl $tr<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: &BigComplex) -> BigComplex {
                $f(&self, rhs)
            }
        }
        impl $tr<BigComplex> for &BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: BigComplex) -> BigComplex {
                $f(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);
forward_binop!(Div, div, div);

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-self.re, -self.im)
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-&self.re, -&self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    fn c(re: f64, im: f64, ctx: &PrecisionContext) -> BigComplex {
        BigComplex::from_c64(Complex64::new(re, im), ctx)
    }

    #[test]
    fn zero_casts_to_zero() {
        let (z, of) = BigComplex::zero(&ctx(16)).to_double();
        assert_eq!(z, Complex64::new(0.0, 0.0));
        assert!(!of);
    }

    #[test]
    fn overflow_is_flagged() {
        let k = ctx(20);
        let big = BigComplex::from_real(BigReal::from_f64(1e300, &k)).powi(3);
        let (z, of) = big.to_double();
        assert!(of);
        assert_eq!(z.re, f64::INFINITY);
    }

    #[test]
    fn higgins_at_one_is_i() {
        let k = ctx(30);
        let x = c(0.0, 1.0, &k);
        let one = BigComplex::one(&k);
        let v = (&x - &one) / (&x + &one);
        assert_eq!(v.to_c64(), Complex64::new(0.0, 1.0));
    }

    #[test]
    fn principal_branch_on_negative_axis() {
        let k = ctx(30);
        let z = c(-4.0, 0.0, &k);
        let half = BigReal::from_f64(0.5, &k);
        let r = z.powf(&half).to_c64();
        assert!(r.re.abs() < 1e-25);
        assert!((r.im - 2.0).abs() < 1e-15);
        let l = z.ln().to_c64();
        assert!((l.im - core::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn powi_matches_repeated_product() {
        let k = ctx(40);
        let z = c(0.3, -1.7, &k);
        let mut p = BigComplex::one(&k);
        for n in 0..12 {
            let q = z.powi(n);
            assert!((&q - &p).abs().to_f64() <= 1e-35 * p.abs().to_f64());
            let r = z.powi(-n);
            assert!((&(&r * &p) - &BigComplex::one(&k)).abs().to_f64() < 1e-35);
            p = &p * &z;
        }
    }

    #[test]
    fn powf_agrees_with_double() {
        let k = ctx(30);
        let z = c(1.0, 2.5, &k);
        let w = BigReal::from_f64(-1.5 - 3f64.sqrt(), &k);
        let got = z.powf(&w).to_c64();
        let want = Complex64::new(1.0, 2.5).powf(-1.5 - 3f64.sqrt());
        assert!((got - want).norm() < 1e-13 * want.norm());
    }
}
