use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::{Context, FBig};
use dashu_int::{IBig, Sign};

use super::context::PrecisionContext;

pub(crate) type Float = FBig<HalfEven, 2>;

/// Arbitrary-precision real number.
///
/// The value remembers the binary precision of the context it was created
/// under; binary operations round to the larger precision of their operands.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigReal(pub(crate) Float);

impl BigReal {
    pub(crate) fn from_float(f: Float, ctx: &PrecisionContext) -> Self {
        BigReal(f.with_precision(ctx.bits()).value())
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        BigReal(Float::ZERO.with_precision(ctx.bits()).value())
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    /// Zero at the precision of `other`.
    pub fn zero_like(other: &BigReal) -> Self {
        BigReal(Float::ZERO.with_precision(other.precision()).value())
    }

    /// One at the precision of `other`.
    pub fn one_like(other: &BigReal) -> Self {
        BigReal(Float::ONE.with_precision(other.precision()).value())
    }

    pub fn from_i64(value: i64, ctx: &PrecisionContext) -> Self {
        Self::from_float(Float::from(value), ctx)
    }

    pub fn from_u64(value: u64, ctx: &PrecisionContext) -> Self {
        Self::from_float(Float::from(value), ctx)
    }

    /// Converts an integer, reporting whether it was represented exactly.
    pub fn from_ibig(value: IBig, ctx: &PrecisionContext) -> (Self, bool) {
        let rounded = Float::from(value).with_precision(ctx.bits());
        let exact = matches!(rounded, dashu_float::round::Rounded::Exact(_));
        (BigReal(rounded.value()), exact)
    }

    /// Exact conversion from a finite double.
    ///
    /// # Panics
    /// Panics if `value` is NaN or infinite.
    pub fn from_f64(value: f64, ctx: &PrecisionContext) -> Self {
        let f = Float::try_from(value).expect("finite double");
        Self::from_float(f, ctx)
    }

    /// `num / den`, rounded once.
    pub fn ratio(num: IBig, den: IBig, ctx: &PrecisionContext) -> Self {
        let c = Context::<HalfEven>::new(ctx.bits());
        let n = Float::from(num);
        let d = Float::from(den);
        BigReal(c.div(n.repr(), d.repr()).expect("nonzero denominator").value())
    }

    pub fn pi(ctx: &PrecisionContext) -> Self {
        BigReal(Float::pi(ctx.bits()))
    }

    /// Re-rounds to the precision of `ctx`.
    pub fn at(&self, ctx: &PrecisionContext) -> Self {
        BigReal(self.0.clone().with_precision(ctx.bits()).value())
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    pub fn is_zero(&self) -> bool {
        self.0.repr().significand().is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.repr().sign() == Sign::Negative
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.repr().sign() == Sign::Positive
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn sqr(&self) -> Self {
        self * self
    }

    pub fn recip(&self) -> Self {
        let one = Float::ONE.with_precision(self.precision()).value();
        BigReal(one / &self.0)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        BigReal(&self.0 * Float::from(k))
    }

    pub fn div_i64(&self, k: i64) -> Self {
        BigReal(&self.0 / Float::from(k))
    }

    pub fn add_i64(&self, k: i64) -> Self {
        BigReal(&self.0 + Float::from(k))
    }

    pub fn sqrt(&self) -> Self {
        BigReal(self.0.sqrt())
    }

    pub fn exp(&self) -> Self {
        BigReal(self.0.exp())
    }

    pub fn ln(&self) -> Self {
        BigReal(self.0.ln())
    }

    /// `self^p` for a positive base.
    pub fn powf(&self, p: &BigReal) -> Self {
        (p * &self.ln()).exp()
    }

    pub fn powi(&self, n: i64) -> Self {
        if n == 0 {
            return BigReal(Float::ONE.with_precision(self.precision()).value());
        }
        BigReal(self.0.powi(IBig::from(n)))
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.sin_cos();
        (BigReal(s), BigReal(c))
    }

    /// `(sin(πx), cos(πx))` with exact argument reduction.
    pub fn sin_cos_pi(&self) -> (Self, Self) {
        let (s, c) = self.0.sin_cos_pi();
        (BigReal(s), BigReal(c))
    }

    pub fn atan(&self) -> Self {
        BigReal(self.0.atan())
    }

    /// Principal `atan2(self, x)` in `(-π, π]`.
    pub fn atan2(&self, x: &BigReal) -> Self {
        let p = self.precision().max(x.precision());
        let pi = BigReal(Float::pi(p));
        if x.is_zero() {
            if self.is_zero() {
                return BigReal(Float::ZERO.with_precision(p).value());
            }
            let half = pi.div_i64(2);
            return if self.is_negative() { -half } else { half };
        }
        let base = (self / x).atan();
        if x.is_positive() {
            base
        } else if self.is_negative() {
            base - pi
        } else {
            base + pi
        }
    }

    /// Inverse cotangent with range `(0, π)`.
    pub fn acot(&self) -> Self {
        let half_pi = BigReal(Float::pi(self.precision())).div_i64(2);
        half_pi - self.atan()
    }

    /// Nearest double. Overflow yields a signed infinity.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// Decimal scientific rendering with `sig` significant digits, rounded to nearest.
    pub fn to_scientific(&self, sig: usize) -> String {
        format_scientific(self, sig, false)
    }

    /// Decimal scientific rendering with `sig` significant digits, truncated.
    pub fn to_scientific_truncated(&self, sig: usize) -> String {
        format_scientific(self, sig, true)
    }
}

fn format_scientific(v: &BigReal, sig: usize, truncate: bool) -> String {
    use alloc::format;
    use alloc::vec::Vec;

    assert!(sig >= 1);
    if v.is_zero() {
        return String::from("0");
    }
    let neg = v.is_negative();
    // Work with enough precision that the scaled integer is exact.
    let p = v.precision().max(sig * 4 + 64);
    let mut a = BigReal(v.0.clone().with_precision(p).value()).abs();
    let ten = BigReal(Float::from(10u8).with_precision(p).value());
    let approx = libm::log10(a.to_f64().abs());
    let mut exp10 = if approx.is_finite() {
        libm::floor(approx) as i64
    } else {
        0
    };
    let scale = |a: &BigReal, e: i64| -> BigReal {
        if e >= 0 {
            a / &ten.powi(e)
        } else {
            a * &ten.powi(-e)
        }
    };
    let mut m = scale(&a, exp10);
    // normalise into [1, 10)
    while m.0 >= ten.0 {
        exp10 += 1;
        m = scale(&a, exp10);
    }
    while m.0 < Float::ONE {
        exp10 -= 1;
        m = scale(&a, exp10);
    }
    a = m;
    let mut digits: Vec<u8> = Vec::with_capacity(sig + 1);
    for _ in 0..=sig {
        let d = a.0.floor();
        let di: i64 = i64::try_from(d.clone()).unwrap_or(0).clamp(0, 9);
        digits.push(di as u8);
        a = BigReal((&a.0 - d) * &ten.0);
    }
    let next = digits.pop().unwrap();
    if !truncate && (next > 5 || (next == 5 && !a.is_zero()) || (next == 5 && digits[sig - 1] % 2 == 1)) {
        let mut i = sig;
        loop {
            if i == 0 {
                digits.insert(0, 1);
                digits.pop();
                exp10 += 1;
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push((b'0' + digits[0]) as char);
    if sig > 1 {
        s.push('.');
        for d in &digits[1..] {
            s.push((b'0' + d) as char);
        }
    }
    s.push_str(&format!("e{exp10}"));
    s
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({}, {} bits)", self.to_scientific(20), self.precision())
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(20);
        f.write_str(&self.to_scientific(sig))
    }
}

impl PartialEq<f64> for BigReal {
    fn eq(&self, other: &f64) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd<f64> for BigReal {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        let o = Float::try_from(*other).ok()?;
        self.0.partial_cmp(&o)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                BigReal(&self.0 $op &rhs.0)
            }
        }
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                BigReal(self.0 $op rhs.0)
            }
        }
        impl $tr<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                BigReal(self.0 $op &rhs.0)
            }
        }
        impl $tr<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                BigReal(&self.0 $op rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);
forward_binop!(Div, div, /);

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0.clone())
    }
}
