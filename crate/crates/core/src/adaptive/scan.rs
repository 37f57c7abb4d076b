use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::Result;
use crate::kernels::{Alpha, Family, FractionalLaplacian};
use crate::mp::{BigComplex, BigReal, PrecisionContext};
use crate::opmatrix::{build_matrix, make_nodes, OperatorMatrix};
use crate::oracle::discrepancy;
use crate::specfun::binomial_min_digits;

use super::escalate::{escalate, EscalationConfig};
use super::fit::fit_line;

/// Which stopping criterion a scan uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CriterionKind {
    /// `|m_k - m_(k+1)| / |m_(k+1)| < ε` for `(-Δ)^(α/2) λ_N (0)`.
    ScalarAtZero,
    /// `d(M_(k+1), M_k) < ε` over the whole `N x N` matrix.
    FullMatrix,
}

impl CriterionKind {
    pub fn name(self) -> &'static str {
        match self {
            CriterionKind::ScalarAtZero => "scalar",
            CriterionKind::FullMatrix => "matrix",
        }
    }
}

fn relative_gap(a: &BigComplex, b: &BigComplex) -> f64 {
    let d = (a - b).abs();
    if d.is_zero() {
        return 0.0;
    }
    (d / b.abs()).to_f64()
}

/// Escalates digits for an arbitrary big-complex computation with the
/// relative criterion; returns `k` and the value at `k + 1` digits.
pub fn auto_digits_value<F>(mut f: F, cfg: &EscalationConfig, start: u32) -> Result<(u32, BigComplex)>
where
    F: FnMut(&PrecisionContext) -> Result<BigComplex>,
{
    let eps = cfg.epsilon;
    let e = escalate(
        start,
        cfg,
        |k| f(&PrecisionContext::new(k)?),
        |a, b| relative_gap(a, b) < eps,
    )?;
    Ok((e.digits, e.next))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalarDigits {
    pub digits: u32,
    /// `(-Δ)^(α/2) λ_N (0)` at `digits + 1`, rounded to double.
    pub value: Complex64,
}

/// Digits needed for `(-Δ)^(α/2) λ_N (0)` under the scalar criterion.
pub fn auto_digits_scalar(n: i64, alpha: &Alpha, cfg: &EscalationConfig, start: u32) -> Result<ScalarDigits> {
    let (digits, v) = auto_digits_value(
        |ctx| {
            let op = FractionalLaplacian::new(alpha, ctx);
            Ok(op.lambda(n, &BigReal::zero(ctx)))
        },
        cfg,
        start,
    )?;
    Ok(ScalarDigits {
        digits,
        value: v.to_c64(),
    })
}

#[derive(Clone, Debug)]
pub struct MatrixDigits {
    pub digits: u32,
    /// The matrix built at `digits`.
    pub matrix: OperatorMatrix,
    /// `d(M_(k+1), M_k)` at acceptance.
    pub discrepancy: f64,
    pub evaluations: u32,
}

/// Digits needed for the `M x N` operator matrix under the mixed criterion.
pub fn auto_digits_matrix(
    family: Family,
    rows: usize,
    cols: usize,
    alpha: &Alpha,
    cfg: &EscalationConfig,
    start: u32,
) -> Result<MatrixDigits> {
    let start = if family == Family::Higgins {
        start.max(binomial_min_digits(cols))
    } else {
        start
    };
    let eps = cfg.epsilon;
    let mut last = f64::NAN;
    let e = escalate(
        start,
        cfg,
        |k| {
            let ctx = PrecisionContext::new(k)?;
            build_matrix(family, alpha, &make_nodes(rows, &ctx), cols, &ctx)
        },
        |mk, mk1| {
            // denominator from the (k+1)-digit matrix
            last = discrepancy(mk1, mk).unwrap_or(f64::INFINITY);
            last < eps
        },
    )?;
    Ok(MatrixDigits {
        digits: e.digits,
        matrix: e.accepted,
        discrepancy: last,
        evaluations: e.evaluations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub n: usize,
    pub digits: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DigitScanReport {
    pub alpha: String,
    pub kind: CriterionKind,
    pub epsilon: f64,
    pub records: Vec<ScanRecord>,
    pub slope: f64,
    pub intercept: f64,
}

/// Digits required for `N = 1..=n_max`, each search warm-started at the
/// previous `N`'s answer.
pub fn digit_scan(n_max: usize, alpha: &Alpha, kind: CriterionKind, cfg: &EscalationConfig) -> Result<DigitScanReport> {
    digit_scan_with(n_max, alpha, kind, cfg, |_| {})
}

pub fn digit_scan_with<P>(
    n_max: usize,
    alpha: &Alpha,
    kind: CriterionKind,
    cfg: &EscalationConfig,
    mut progress: P,
) -> Result<DigitScanReport>
where
    P: FnMut(&ScanRecord),
{
    let mut start = cfg.floor;
    let mut records = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let digits = match kind {
            CriterionKind::ScalarAtZero => auto_digits_scalar(n as i64, alpha, cfg, start)?.digits,
            CriterionKind::FullMatrix => auto_digits_matrix(Family::Higgins, n, n, alpha, cfg, start)?.digits,
        };
        let rec = ScanRecord { n, digits };
        progress(&rec);
        records.push(rec);
        start = digits;
    }
    let pts: Vec<(f64, f64)> = records.iter().map(|r| (r.n as f64, r.digits as f64)).collect();
    let (slope, intercept) = fit_line(&pts)?;
    Ok(DigitScanReport {
        alpha: alpha.token().to_string(),
        kind,
        epsilon: cfg.epsilon,
        records,
        slope,
        intercept,
    })
}
