use dashu_int::IBig;

use super::context::PrecisionContext;
use super::real::BigReal;
use crate::error::{Error, Result};

/// Spouge parameter for a target of `bits` bits: the truncation error is
/// below `(2π)^-(a+1/2)`.
fn spouge_a(bits: usize) -> u32 {
    libm::ceil(bits as f64 / libm::log2(2.0 * core::f64::consts::PI)) as u32 + 1
}

/// Gamma function for `x > 0` by Spouge's approximation.
pub fn gamma(x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    if !x.is_positive() {
        return Err(Error::Domain("gamma requires x > 0"));
    }
    let bits = ctx.bits();
    let a = spouge_a(bits);
    // the partial fractions alternate in sign and cancel about `bits` bits
    let wctx = ctx.widened(bits as u32 + 32);
    let z = x.at(&wctx);

    let e_inv = BigReal::from_i64(-1, &wctx).exp();
    let mut e_pow = BigReal::from_i64(a as i64 - 1, &wctx).exp();
    let mut fact = IBig::ONE;
    let two_pi = BigReal::pi(&wctx).mul_i64(2);
    let mut sum = two_pi.sqrt();
    for k in 1..a {
        let t = (a - k) as i64;
        if k > 1 {
            fact *= IBig::from(k - 1);
        }
        let pow = IBig::from(t).pow((k - 1) as usize);
        let mut c = BigReal::ratio(pow, fact.clone(), &wctx);
        c = c * BigReal::from_i64(t, &wctx).sqrt() * &e_pow;
        if k % 2 == 0 {
            c = -c;
        }
        sum = sum + c / z.add_i64(k as i64);
        e_pow = e_pow * &e_inv;
    }
    let za = z.add_i64(a as i64);
    let half = BigReal::ratio(IBig::ONE, IBig::from(2), &wctx);
    let log_pref = (&z + &half) * za.ln() - &za;
    let gamma_z1 = log_pref.exp() * sum;
    Ok((gamma_z1 / z).at(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    fn rel(a: &BigReal, b: &BigReal) -> f64 {
        ((a - b) / b).abs().to_f64()
    }

    fn tol(d: u32) -> f64 {
        libm::pow(10.0, 2.0 - d as f64)
    }

    #[test]
    fn known_values() {
        for d in [16, 40, 120] {
            let k = ctx(d);
            let g1 = gamma(&BigReal::one(&k), &k).unwrap();
            assert!(rel(&g1, &BigReal::one(&k)) < tol(d));
            let g3 = gamma(&BigReal::from_i64(3, &k), &k).unwrap();
            assert!(rel(&g3, &BigReal::from_i64(2, &k)) < tol(d));
            let g15 = gamma(&BigReal::from_f64(1.5, &k), &k).unwrap();
            let want = BigReal::pi(&k).sqrt().div_i64(2);
            assert!(rel(&g15, &want) < tol(d));
        }
        let k = ctx(16);
        let v = gamma(&BigReal::from_f64(1.5, &k), &k).unwrap().to_f64();
        assert!((v - 0.886_226_925_452_758).abs() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive() {
        let k = ctx(16);
        assert!(gamma(&BigReal::zero(&k), &k).is_err());
        assert!(gamma(&BigReal::from_f64(-0.5, &k), &k).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn recurrence(x in 0.1f64..3.0, d in prop::sample::select(vec![16u32, 35, 80])) {
            let k = ctx(d);
            let x = BigReal::from_f64(x, &k);
            let lhs = gamma(&x.add_i64(1), &k).unwrap();
            let rhs = &x * &gamma(&x, &k).unwrap();
            prop_assert!(rel(&lhs, &rhs) < tol(d));
        }

        #[test]
        fn reflection(w in 0.1f64..0.9, d in prop::sample::select(vec![16u32, 35, 80])) {
            let k = ctx(d);
            let w = BigReal::from_f64(w, &k);
            let one_minus = BigReal::one(&k) - &w;
            let lhs = gamma(&w, &k).unwrap() * gamma(&one_minus, &k).unwrap();
            let rhs = BigReal::pi(&k) / w.sin_cos_pi().0;
            prop_assert!(rel(&lhs, &rhs) < tol(d));
        }

        #[test]
        fn duplication(w in 0.1f64..1.9, d in prop::sample::select(vec![16u32, 35, 80])) {
            let k = ctx(d);
            let w = BigReal::from_f64(w, &k);
            let half = BigReal::from_f64(0.5, &k);
            let lhs = gamma(&w, &k).unwrap() * gamma(&(&w + &half), &k).unwrap();
            let two = BigReal::from_i64(2, &k);
            let pow = two.powf(&(BigReal::one(&k) - w.mul_i64(2)));
            let rhs = pow * BigReal::pi(&k).sqrt() * gamma(&w.mul_i64(2), &k).unwrap();
            prop_assert!(rel(&lhs, &rhs) < tol(d));
        }

        #[test]
        fn refinement(x in 0.05f64..3.95, d1 in 16u32..60, extra in 1u32..60) {
            let k1 = ctx(d1);
            let k2 = ctx(d1 + extra);
            let a = gamma(&BigReal::from_f64(x, &k1), &k1).unwrap();
            let b = gamma(&BigReal::from_f64(x, &k2), &k2).unwrap();
            prop_assert!(rel(&a, &b) < tol(d1));
        }
    }
}
