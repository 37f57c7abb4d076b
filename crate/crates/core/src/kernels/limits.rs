use crate::mp::{BigComplex, BigReal, PrecisionContext};

use super::family::{higgins_value, one_plus_ix};

/// The orders at which the fractional Laplacian is a classical operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitKind {
    /// `α → 0`: `u - lim u`, i.e. `λ_n - 1`.
    Alpha0,
    /// `α = 1`: Hilbert transform of the derivative, `i sgn(n) λ_n'`.
    Alpha1,
    /// `α = 2`: `-λ_n''`.
    Alpha2,
}

/// `λ_n(x)`.
pub fn higgins(n: i64, x: &BigReal, _ctx: &PrecisionContext) -> BigComplex {
    higgins_value(n, x)
}

/// `r = (isx-1)/(isx+1)` and `isx+1` for `s = sgn(n)`.
fn ratio(n: i64, x: &BigReal) -> (BigComplex, BigComplex) {
    let w = one_plus_ix(x, n.signum());
    let r = (-w.conj()) / &w;
    (r, w)
}

/// `λ_n'(x) = 2in r^(|n|-1) / (isx+1)^2`.
pub fn higgins_d1(n: i64, x: &BigReal, _ctx: &PrecisionContext) -> BigComplex {
    if n == 0 {
        return BigComplex::from_real(BigReal::zero_like(x));
    }
    let (r, w) = ratio(n, x);
    let num = r.powi(n.abs() - 1).mul_i().mul_i64(2 * n);
    num / w.sqr()
}

/// `λ_n''(x) = (4inx - 4n²) r^(|n|-2) / (isx+1)^4`.
pub fn higgins_d2(n: i64, x: &BigReal, ctx: &PrecisionContext) -> BigComplex {
    if n == 0 {
        return BigComplex::from_real(BigReal::zero_like(x));
    }
    let (r, w) = ratio(n, x);
    let poly = BigComplex::new(
        BigReal::from_i64(-4 * n * n, ctx),
        x.mul_i64(4 * n),
    );
    let num = poly * r.powi(n.abs() - 2);
    num / w.sqr().sqr()
}

/// Right-hand side of the classical identity the fractional Laplacian
/// reduces to at `α ∈ {0, 1, 2}`.
pub fn flap_limit_identity(kind: LimitKind, n: i64, x: &BigReal, ctx: &PrecisionContext) -> BigComplex {
    match kind {
        LimitKind::Alpha0 => {
            let v = higgins(n, x, ctx);
            BigComplex::new(v.re.add_i64(-1), v.im)
        }
        LimitKind::Alpha1 => {
            let d = higgins_d1(n, x, ctx).mul_i();
            if n < 0 {
                -d
            } else {
                d
            }
        }
        LimitKind::Alpha2 => -higgins_d2(n, x, ctx),
    }
}
