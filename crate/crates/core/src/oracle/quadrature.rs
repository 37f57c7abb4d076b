use num_complex::Complex64;

use crate::error::{Error, Result};

use super::gk::integrate_adaptive;

/// Controls for [`flap_quadrature`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    /// Target relative error.
    pub tol: f64,
    /// Maximum number of subintervals per piece.
    pub limit: usize,
    /// Where `[0, ∞)` is split between the near and tail pieces; `1 + |x|` if unset.
    pub split: Option<f64>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            limit: 2000,
            split: None,
        }
    }
}

impl QuadratureSpec {
    pub fn new(tol: f64, limit: usize, split: Option<f64>) -> Result<Self> {
        if !(tol >= 1e-10) {
            return Err(Error::Domain("quadrature tolerance must be at least 1e-10"));
        }
        if limit == 0 {
            return Err(Error::Domain("subdivision limit must be positive"));
        }
        if split.is_some_and(|s| !(s > 0.0 && s.is_finite())) {
            return Err(Error::Domain("split point must be positive and finite"));
        }
        Ok(Self { tol, limit, split })
    }
}

/// `(λ_n'(x-y) - λ_n'(x+y)) / y` for `n > 0`, free of cancellation as `y → 0`.
///
/// With `λ_n' = K g^m h`, `K = -2ni`, `g = (w+i)/(w-i)`, `h = (w-i)^-2`,
/// `m = n-1`, both `g(a) - g(b)` and `h(a) - h(b)` carry an exact factor `y`.
fn bracket_over_y(n: u64, x: f64, y: f64) -> Complex64 {
    let i = Complex64::i();
    let a = x - y;
    let b = x + y;
    let am = a - i;
    let bm = b - i;
    let ga = (a + i) / am;
    let gb = (b + i) / bm;
    let m = n - 1;
    // Σ_j ga^j gb^(m-1-j)
    let mut s = Complex64::new(0.0, 0.0);
    let mut pa = Complex64::new(1.0, 0.0);
    for j in 0..m {
        s += pa * gb.powu((m - 1 - j) as u32);
        pa *= ga;
    }
    let gbm = gb.powu(m as u32);
    let k = Complex64::new(0.0, -2.0 * n as f64);
    let dg = 4.0 * i / (am * bm) * s / (am * am);
    let dh = gbm * 4.0 * (x - i) / (am * am * bm * bm);
    k * (dg + dh)
}

/// `c_α / α = 2^(α-1) Γ(1/2 + α/2) / (√π Γ(1 - α/2))`.
fn normalisation(alpha: f64) -> f64 {
    libm::pow(2.0, alpha - 1.0) * libm::tgamma(0.5 + 0.5 * alpha)
        / (libm::sqrt(core::f64::consts::PI) * libm::tgamma(1.0 - 0.5 * alpha))
}

/// Fractional Laplacian of `λ_n` at `x` from the derivative form of the
/// singular-integral definition, in double precision.
///
/// `[0, S]` is mapped by `y = S u^(1/(2-α))`, which makes the integrand
/// smooth at the origin; `[S, ∞)` by `y = S/u`.
pub fn flap_quadrature(n: i64, alpha: f64, x: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    if n == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if !(0.05..=1.95).contains(&alpha) {
        return Err(Error::Domain("quadrature needs alpha in [0.05, 1.95]"));
    }
    if !x.is_finite() {
        return Err(Error::Domain("x must be finite"));
    }
    let m = n.unsigned_abs();
    let split = spec.split.unwrap_or(1.0 + x.abs());
    let q = 1.0 / (2.0 - alpha);
    let near_scale = q * libm::pow(split, 2.0 - alpha);
    let abs_tol = spec.tol * 1e-3;

    let near = integrate_adaptive(
        |u| {
            let y = split * libm::pow(u, q);
            bracket_over_y(m, x, y) * near_scale
        },
        0.0,
        1.0,
        abs_tol,
        spec.tol,
        spec.limit,
    )?;
    let tail = integrate_adaptive(
        |u| {
            let y = split / u;
            bracket_over_y(m, x, y) * (libm::pow(y, 1.0 - alpha) * split / (u * u))
        },
        0.0,
        1.0,
        abs_tol,
        spec.tol,
        spec.limit,
    )?;
    let v = (near.value + tail.value) * normalisation(alpha);
    Ok(if n < 0 { v.conj() } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(n: u64, x: f64, y: f64) -> Complex64 {
        let i = Complex64::i();
        let f = |w: f64| -2.0 * n as f64 * i / ((w - i) * (w - i)) * ((w + i) / (w - i)).powu(n as u32 - 1);
        (f(x - y) - f(x + y)) / y
    }

    #[test]
    fn bracket_matches_direct_difference() {
        for n in [1u64, 2, 5] {
            for &x in &[-2.0, 0.0, 0.7] {
                for &y in &[0.3, 1.0, 4.0] {
                    let got = bracket_over_y(n, x, y);
                    let want = naive(n, x, y);
                    assert!((got - want).norm() < 1e-13 * want.norm().max(1.0));
                }
            }
        }
    }

    #[test]
    fn unit_case() {
        let v = flap_quadrature(1, 1.0, 0.0, &QuadratureSpec::default()).unwrap();
        assert!((v - Complex64::new(-2.0, 0.0)).norm() < 1e-6);
        assert_eq!(flap_quadrature(0, 0.5, 1.0, &QuadratureSpec::default()).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn agrees_with_closed_form_on_grid() {
        use crate::kernels::{flap_lambda, Alpha};
        use crate::mp::{BigReal, PrecisionContext};
        let k = PrecisionContext::new(30).unwrap();
        let spec = QuadratureSpec::default();
        for n in [1i64, 2, 3, 5, -2] {
            for a in ["0.5", "1", "1.5"] {
                let al = Alpha::parse(a).unwrap();
                for x in [0.0, 1.0, -1.0, 3.0] {
                    let q = flap_quadrature(n, al.approx_f64(), x, &spec).unwrap();
                    let c = flap_lambda(n, &al, &BigReal::from_f64(x, &k), &k).to_c64();
                    let e = (q - c).norm() / c.norm().max(1.0);
                    assert!(e < 1e-6, "n={n} a={a} x={x}: {q} vs {c}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let s = QuadratureSpec::default();
        assert!(flap_quadrature(1, 0.01, 0.0, &s).is_err());
        assert!(flap_quadrature(1, 1.99, 0.0, &s).is_err());
        assert!(QuadratureSpec::new(1e-12, 100, None).is_err());
        assert!(QuadratureSpec::new(1e-8, 100, Some(-1.0)).is_err());
    }

    #[test]
    fn tiny_budget_reports_best_estimate() {
        let s = QuadratureSpec::new(1e-10, 1, None).unwrap();
        let e = flap_quadrature(3, 1.7, 2.0, &s).unwrap_err();
        assert!(matches!(e, Error::AccuracyNotReached { .. }));
    }
}
