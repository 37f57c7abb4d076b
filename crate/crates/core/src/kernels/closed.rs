use alloc::vec::Vec;

use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::mp::{gamma, BigComplex, BigReal, PrecisionContext};
use crate::specfun::{hyp2f1_real, hyp2f1_terminating, LowerParam};

use super::alpha::Alpha;
use super::family::{one_plus_ix, Family, FamilySpec};

/// Fractional Laplacian of order `α` at a fixed working precision.
///
/// Holds `Γ(1+α)` and the expansion coefficients
/// `G_l = 2F1(-l, 1+α; 2; 2)` and `H_l = 2F1(-l, 1+α; 1; 2)` for
/// `l <= table_len`; larger `l` are computed on demand.
#[derive(Clone, Debug)]
pub struct FractionalLaplacian {
    ctx: PrecisionContext,
    alpha: BigReal,
    one_plus_alpha: BigReal,
    gamma: BigReal,
    g: Vec<BigReal>,
    h: Vec<BigReal>,
}

impl FractionalLaplacian {
    pub fn new(alpha: &Alpha, ctx: &PrecisionContext) -> Self {
        Self::with_table(alpha, ctx, 0)
    }

    /// Precomputes expansion coefficients up to index `max_l`.
    pub fn with_table(alpha: &Alpha, ctx: &PrecisionContext, max_l: usize) -> Self {
        let a = alpha.value(ctx);
        let one_plus_alpha = a.add_i64(1);
        let gamma = gamma(&one_plus_alpha, ctx).expect("1 + alpha >= 1");
        let mut s = Self {
            ctx: *ctx,
            alpha: a,
            one_plus_alpha,
            gamma,
            g: Vec::new(),
            h: Vec::new(),
        };
        let two = BigReal::from_i64(2, ctx);
        s.g = (0..=max_l as u64)
            .map(|l| hyp2f1_real(l, &s.one_plus_alpha, LowerParam::Two, &two, ctx))
            .collect();
        s.h = (0..=max_l as u64)
            .map(|l| hyp2f1_real(l, &s.one_plus_alpha, LowerParam::One, &two, ctx))
            .collect();
        s
    }

    pub fn ctx(&self) -> &PrecisionContext {
        &self.ctx
    }

    pub fn alpha(&self) -> &BigReal {
        &self.alpha
    }

    /// `Γ(1+α)`.
    pub fn gamma(&self) -> &BigReal {
        &self.gamma
    }

    fn coeff(&self, l: usize, c: LowerParam) -> BigReal {
        let table = match c {
            LowerParam::Two => &self.g,
            LowerParam::One => &self.h,
        };
        match table.get(l) {
            Some(v) => v.clone(),
            None => {
                let two = BigReal::from_i64(2, &self.ctx);
                hyp2f1_real(l as u64, &self.one_plus_alpha, c, &two, &self.ctx)
            }
        }
    }

    fn x(&self, x: &BigReal) -> BigReal {
        x.at(&self.ctx)
    }

    /// `(-Δ)^(α/2) λ_n (x)` via `2F1(1-|n|, 1+α; 2; 2/(i sgn(n) x + 1))`.
    pub fn lambda(&self, n: i64, x: &BigReal) -> BigComplex {
        let x = self.x(x);
        if n == 0 {
            return BigComplex::from_real(BigReal::zero_like(&x));
        }
        let m = n.unsigned_abs();
        let w = one_plus_ix(&x, 1);
        let z = w.recip().mul_i64(2);
        let f = hyp2f1_terminating(m - 1, &self.one_plus_alpha, LowerParam::Two, &z, &self.ctx);
        let v = (f / w.powf(&self.one_plus_alpha)).mul_real(&self.gamma.mul_i64(-2 * m as i64));
        if n < 0 {
            v.conj()
        } else {
            v
        }
    }

    /// `(-Δ)^(α/2) μ_n (x)` via `2F1(-n, 1+α; 1; 2/(ix+1))`; negative `n`
    /// through `μ_n = -conj(μ_(-1-n))`.
    pub fn mu(&self, n: i64, x: &BigReal) -> BigComplex {
        if n < 0 {
            return -self.mu(-1 - n, x).conj();
        }
        let x = self.x(x);
        let w = one_plus_ix(&x, 1);
        let z = w.recip().mul_i64(2);
        let f = hyp2f1_terminating(n as u64, &self.one_plus_alpha, LowerParam::One, &z, &self.ctx);
        (f / w.powf(&self.one_plus_alpha)).mul_real(&self.gamma)
    }

    /// `Σ_l C(m,l) (ix)^(m-l) c_l` for the expanded forms.
    fn poly(&self, m: u64, x: &BigReal, c: LowerParam) -> BigComplex {
        let ix = BigComplex::new(BigReal::zero_like(x), x.clone());
        let mut acc = BigComplex::from_real(BigReal::zero_like(x));
        let mut binom = IBig::ONE;
        let mut pow = BigComplex::from_real(BigReal::one_like(x));
        // accumulate from l = m down to 0 so the power of ix grows with the loop
        for j in 0..=m {
            let l = m - j;
            let b = BigReal::from_ibig(binom.clone(), &self.ctx.widened(m as u32 + 8)).0;
            let term = pow.mul_real(&(b * self.coeff(l as usize, c)));
            acc = acc + term;
            pow = &pow * &ix;
            // C(m, l-1) = C(m, l) * l / (m - l + 1)
            if l > 0 {
                binom = binom * IBig::from(l) / IBig::from(m - l + 1);
            }
        }
        acc
    }

    /// Expanded polynomial form of [`Self::lambda`]; undefined for `n = 0`.
    pub fn lambda_expanded(&self, n: i64, x: &BigReal) -> Result<BigComplex> {
        if n == 0 {
            return Err(Error::Domain("expanded form needs n != 0"));
        }
        let x = self.x(x);
        let m = n.unsigned_abs();
        let w = one_plus_ix(&x, 1);
        let p = self.poly(m - 1, &x, LowerParam::Two);
        let e = self.alpha.add_i64(m as i64);
        let v = (p / w.powf(&e)).mul_real(&self.gamma.mul_i64(-2 * m as i64));
        Ok(if n < 0 { v.conj() } else { v })
    }

    /// Expanded polynomial form of [`Self::mu`].
    pub fn mu_expanded(&self, n: i64, x: &BigReal) -> BigComplex {
        if n < 0 {
            return -self.mu_expanded(-1 - n, x).conj();
        }
        let x = self.x(x);
        let w = one_plus_ix(&x, 1);
        let p = self.poly(n as u64, &x, LowerParam::One);
        let e = self.alpha.add_i64(n + 1);
        (p / w.powf(&e)).mul_real(&self.gamma)
    }

    /// Any family through the complex kernels.
    pub fn family(&self, f: FamilySpec, x: &BigReal) -> BigComplex {
        let n = f.n;
        match f.family {
            Family::Higgins => self.lambda(n, x),
            Family::Christov => self.mu(n, x),
            Family::CosHiggins => BigComplex::from_real(self.lambda(n, x).re),
            Family::SinHiggins => BigComplex::from_real(self.lambda(n + 1, x).im),
            Family::CosChristov => BigComplex::from_real(self.mu(n, x).re),
            Family::SinChristov => BigComplex::from_real(-self.mu(n, x).im),
        }
    }

    /// Trigonometric real forms for the four real families.
    pub fn real_family(&self, f: FamilySpec, x: &BigReal) -> Result<BigReal> {
        if !f.family.is_real() {
            return Err(Error::Domain("trigonometric form exists only for real families"));
        }
        if f.n < 0 {
            return Err(Error::Domain("real families take n >= 0"));
        }
        let x = self.x(x);
        let n = f.n as u64;
        Ok(match f.family {
            Family::CosHiggins => self.cos_higgins(n, &x),
            Family::SinHiggins => self.sin_higgins(n, &x),
            Family::CosChristov => self.christov_trig(n, &x, true),
            Family::SinChristov => self.christov_trig(n, &x, false),
            Family::Higgins | Family::Christov => unreachable!(),
        })
    }

    /// `(sin θ, cos θ, (1+x²)^(-e/2))` with `θ = e·arccot(x) - πα/2`, `e = m + α`.
    fn phase(&self, m: u64, x: &BigReal) -> (BigReal, BigReal, BigReal) {
        let e = self.alpha.add_i64(m as i64);
        let theta = &e * &x.acot() - BigReal::pi(&self.ctx) * self.alpha.div_i64(2);
        let (s, c) = theta.sin_cos();
        let r = x.sqr().add_i64(1).powf(&(-e.div_i64(2)));
        (s, c, r)
    }

    /// `Σ_l (-1)^l C(m, 2l+parity) x^(m-2l-parity) c_(2l+parity)`.
    fn parity_sum(&self, m: u64, parity: u64, x: &BigReal, c: LowerParam) -> BigReal {
        let mut acc = BigReal::zero_like(x);
        let mut l = 0u64;
        while 2 * l + parity <= m {
            let k = 2 * l + parity;
            let b = binomial(m, k, &self.ctx);
            let mut t = b * x.powi((m - k) as i64) * self.coeff(k as usize, c);
            if l % 2 == 1 {
                t = -t;
            }
            acc = acc + t;
            l += 1;
        }
        acc
    }

    fn cos_higgins(&self, n: u64, x: &BigReal) -> BigReal {
        if n == 0 {
            return BigReal::zero_like(x);
        }
        let (s, c, r) = self.phase(n, x);
        let pref = (&self.gamma * &r).mul_i64(2 * n as i64);
        if n == 1 {
            return -(pref * s);
        }
        let even = self.parity_sum(n - 1, 0, x, LowerParam::Two);
        let odd = self.parity_sum(n - 1, 1, x, LowerParam::Two);
        pref * (c * odd - s * even)
    }

    fn sin_higgins(&self, n: u64, x: &BigReal) -> BigReal {
        let (s, c, r) = self.phase(n + 1, x);
        let pref = (&self.gamma * &r).mul_i64(2 * (n as i64 + 1));
        if n == 0 {
            return pref * c;
        }
        let even = self.parity_sum(n, 0, x, LowerParam::Two);
        let odd = self.parity_sum(n, 1, x, LowerParam::Two);
        pref * (c * even + s * odd)
    }

    fn christov_trig(&self, n: u64, x: &BigReal, cosine: bool) -> BigReal {
        let (s, c, r) = self.phase(n + 1, x);
        let pref = &self.gamma * &r;
        let even = self.parity_sum(n, 0, x, LowerParam::One);
        let odd = self.parity_sum(n, 1, x, LowerParam::One);
        if cosine {
            pref * (s * even - c * odd)
        } else {
            pref * (c * even + s * odd)
        }
    }
}

fn binomial(m: u64, k: u64, ctx: &PrecisionContext) -> BigReal {
    let mut b = IBig::ONE;
    for j in 0..k {
        b = b * IBig::from(m - j) / IBig::from(j + 1);
    }
    BigReal::from_ibig(b, &ctx.widened(m as u32 + 8)).0
}

pub fn flap_lambda(n: i64, alpha: &Alpha, x: &BigReal, ctx: &PrecisionContext) -> BigComplex {
    FractionalLaplacian::new(alpha, ctx).lambda(n, x)
}

pub fn flap_mu(n: i64, alpha: &Alpha, x: &BigReal, ctx: &PrecisionContext) -> BigComplex {
    FractionalLaplacian::new(alpha, ctx).mu(n, x)
}

pub fn flap_lambda_expanded(
    n: i64,
    alpha: &Alpha,
    x: &BigReal,
    ctx: &PrecisionContext,
) -> Result<BigComplex> {
    let m = n.unsigned_abs() as usize;
    FractionalLaplacian::with_table(alpha, ctx, m).lambda_expanded(n, x)
}

pub fn flap_mu_expanded(n: i64, alpha: &Alpha, x: &BigReal, ctx: &PrecisionContext) -> BigComplex {
    let m = if n < 0 { -1 - n } else { n } as usize;
    FractionalLaplacian::with_table(alpha, ctx, m).mu_expanded(n, x)
}

pub fn flap_real_family(
    f: FamilySpec,
    alpha: &Alpha,
    x: &BigReal,
    ctx: &PrecisionContext,
) -> Result<BigReal> {
    FractionalLaplacian::with_table(alpha, ctx, f.n.max(0) as usize).real_family(f, x)
}

pub fn flap_family(f: FamilySpec, alpha: &Alpha, x: &BigReal, ctx: &PrecisionContext) -> BigComplex {
    FractionalLaplacian::new(alpha, ctx).family(f, x)
}
