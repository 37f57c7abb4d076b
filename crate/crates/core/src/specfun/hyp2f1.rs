use alloc::vec::Vec;

use crate::mp::{BigComplex, BigReal, PrecisionContext};

/// Lower parameter `c` of the terminating series; only 1 and 2 occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LowerParam {
    One,
    Two,
}

impl LowerParam {
    pub fn value(self) -> i64 {
        match self {
            LowerParam::One => 1,
            LowerParam::Two => 2,
        }
    }
}

/// Cancellation statistics of one summation.
#[derive(Clone, Debug)]
pub struct SumStats {
    /// Largest modulus reached by a partial sum.
    pub max_partial: f64,
    /// Modulus of the final sum.
    pub final_abs: f64,
}

impl SumStats {
    /// `log10(max partial / |final|)`: decimal digits lost to cancellation.
    pub fn digits_lost(&self) -> f64 {
        libm::log10(self.max_partial / self.final_abs)
    }
}

/// Terms `((-m)_k (b)_k / (c)_k) z^k / k!`, `k = 0..=m`.
pub fn hyp2f1_terms(
    m: u64,
    b: &BigReal,
    c: LowerParam,
    z: &BigComplex,
    ctx: &PrecisionContext,
) -> Vec<BigComplex> {
    let mut out = Vec::with_capacity(m as usize + 1);
    let mut t = BigComplex::one(ctx);
    out.push(t.clone());
    let c = c.value();
    for k in 0..m as i64 {
        let num = b.add_i64(k).mul_i64(k - m as i64);
        let den = (c + k) * (k + 1);
        t = (&t * z).mul_real(&num).div_i64(den);
        out.push(t.clone());
    }
    out
}

/// `2F1(-m, b; c; z)` summed in ascending order with a running term.
pub fn hyp2f1_terminating(
    m: u64,
    b: &BigReal,
    c: LowerParam,
    z: &BigComplex,
    ctx: &PrecisionContext,
) -> BigComplex {
    hyp2f1_with_stats(m, b, c, z, ctx).0
}

pub fn hyp2f1_with_stats(
    m: u64,
    b: &BigReal,
    c: LowerParam,
    z: &BigComplex,
    ctx: &PrecisionContext,
) -> (BigComplex, SumStats) {
    let mut t = BigComplex::one(ctx);
    let mut s = t.clone();
    let mut max_partial = 1.0f64;
    let c = c.value();
    for k in 0..m as i64 {
        let num = b.add_i64(k).mul_i64(k - m as i64);
        let den = (c + k) * (k + 1);
        t = (&t * z).mul_real(&num).div_i64(den);
        s = &s + &t;
        max_partial = max_partial.max(s.abs().to_f64());
    }
    let final_abs = s.abs().to_f64();
    (
        s,
        SumStats {
            max_partial,
            final_abs,
        },
    )
}

/// Real-argument specialisation of [`hyp2f1_terminating`].
pub fn hyp2f1_real(
    m: u64,
    b: &BigReal,
    c: LowerParam,
    z: &BigReal,
    _ctx: &PrecisionContext,
) -> BigReal {
    let mut t = BigReal::one_like(z);
    let mut s = t.clone();
    let c = c.value();
    for k in 0..m as i64 {
        let num = b.add_i64(k).mul_i64(k - m as i64);
        t = (&t * z * num).div_i64((c + k) * (k + 1));
        s = &s + &t;
    }
    s
}
