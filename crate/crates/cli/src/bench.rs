//! Wall-clock comparison of the fast assembly against the per-entry build.

use std::fmt::Write as _;
use std::time::Instant;

use fraclap_core::adaptive::{auto_digits_scalar, EscalationConfig};
use fraclap_core::kernels::{Alpha, Family};
use fraclap_core::opmatrix::{build_matrix, make_nodes};
use fraclap_core::oracle::per_entry_reference;
use fraclap_core::specfun::binomial_min_digits;
use fraclap_core::PrecisionContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    FastAssembly,
    PerEntry,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::FastAssembly => "fast-assembly",
            Method::PerEntry => "per-entry",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub method: Method,
    pub digits: u32,
    pub seconds: f64,
}

/// Times one `N x N` Higgins build per size and method.
///
/// Both methods run at the same digit count: the scalar-criterion digits
/// for `N`, raised to what the exact binomials need.
pub fn run_bench(sizes: &[usize], alpha: &Alpha) -> fraclap_core::Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in sizes {
        let scalar = auto_digits_scalar(n as i64, alpha, &EscalationConfig::default(), 16)?;
        let digits = scalar.digits.max(binomial_min_digits(n));
        let ctx = PrecisionContext::new(digits)?;
        let nodes = make_nodes(n, &ctx);
        for method in [Method::FastAssembly, Method::PerEntry] {
            let t0 = Instant::now();
            let m = match method {
                Method::FastAssembly => build_matrix(Family::Higgins, alpha, &nodes, n, &ctx)?,
                Method::PerEntry => per_entry_reference(Family::Higgins, alpha, &nodes, n, &ctx)?,
            };
            let seconds = t0.elapsed().as_secs_f64();
            std::hint::black_box(m);
            rows.push(BenchRow {
                n,
                method,
                digits,
                seconds,
            });
        }
    }
    Ok(rows)
}

pub fn write_bench_csv(rows: &[BenchRow]) -> String {
    let mut s = String::from("N,method,digits,seconds\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{:.6}", r.n, r.method.name(), r.digits, r.seconds);
    }
    s
}

fn time_of(rows: &[BenchRow], n: usize, method: Method) -> Option<f64> {
    rows.iter().find(|r| r.n == n && r.method == method).map(|r| r.seconds)
}

/// Sanity checks over a finished bench: at the largest size the fast path
/// wins, and doubling `N` more than doubles its time.
pub fn sanity(rows: &[BenchRow]) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let mut sizes: Vec<usize> = rows.iter().map(|r| r.n).collect();
    sizes.sort_unstable();
    sizes.dedup();
    if let Some(&big) = sizes.last() {
        if let (Some(f), Some(p)) = (time_of(rows, big, Method::FastAssembly), time_of(rows, big, Method::PerEntry)) {
            out.push((format!("fast-assembly faster than per-entry at N={big} ({f:.3}s vs {p:.3}s)"), f < p));
        }
        if big % 2 == 0 && sizes.contains(&(big / 2)) {
            let half = big / 2;
            if let (Some(a), Some(b)) = (
                time_of(rows, half, Method::FastAssembly),
                time_of(rows, big, Method::FastAssembly),
            ) {
                out.push((format!("fast-assembly t({big})/t({half}) = {:.2} > 2", b / a), b / a > 2.0));
            }
        }
    }
    out
}
