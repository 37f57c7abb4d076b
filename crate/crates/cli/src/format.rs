//! On-disk formats: the matrix CSV, its JSON sidecar and the scan CSV.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use fraclap_core::adaptive::DigitScanReport;
use fraclap_core::kernels::Family;
use fraclap_core::opmatrix::{MatrixMeta, OperatorMatrix};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MATRIX_MAGIC: &str = "# fraclap-matrix v1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn malformed(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Malformed {
        line,
        reason: reason.into(),
    }
}

/// Shortest exact rendering: 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_matrix(m: &OperatorMatrix) -> String {
    let mut s = String::new();
    s.push_str(MATRIX_MAGIC);
    s.push('\n');
    let meta = &m.meta;
    for (k, v) in [
        ("family", meta.family.name().to_string()),
        ("alpha", meta.alpha.clone()),
        ("rows", m.rows().to_string()),
        ("cols", m.cols().to_string()),
        ("digits", meta.digits.to_string()),
        ("node-rule", meta.node_rule.clone()),
    ] {
        let _ = writeln!(s, "# {k}={v}");
    }
    for j in 0..m.rows() {
        let _ = write!(s, "{j},{}", fmt_f64(m.nodes()[j]));
        for z in m.row(j) {
            let _ = write!(s, ",{},{}", fmt_f64(z.re), fmt_f64(z.im));
        }
        s.push('\n');
    }
    s
}

pub fn read_matrix(text: &str) -> Result<OperatorMatrix, FormatError> {
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, MATRIX_MAGIC)) => {}
        _ => return Err(malformed(1, "missing `# fraclap-matrix v1` header")),
    }
    let mut family = None;
    let mut alpha = None;
    let mut rows = None;
    let mut cols = None;
    let mut digits = None;
    let mut rule = None;
    let mut nodes = Vec::new();
    let mut data = Vec::new();
    let mut last = 1;
    for (no, line) in lines {
        last = no;
        if line.is_empty() {
            continue;
        }
        if let Some(body) = line.strip_prefix("# ") {
            let (k, v) = body.split_once('=').ok_or_else(|| malformed(no, "expected key=value"))?;
            let num = |v: &str| v.parse::<usize>().map_err(|_| malformed(no, format!("bad {k}")));
            match k {
                "family" => family = Some(v.parse::<Family>().map_err(|e| malformed(no, e.to_string()))?),
                "alpha" => alpha = Some(v.to_string()),
                "rows" => rows = Some(num(v)?),
                "cols" => cols = Some(num(v)?),
                "digits" => digits = Some(num(v)? as u32),
                "node-rule" => rule = Some(v.to_string()),
                _ => return Err(malformed(no, format!("unknown key {k}"))),
            }
            continue;
        }
        let cols = cols.ok_or_else(|| malformed(no, "data before `cols`"))?;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 2 + 2 * cols {
            return Err(malformed(no, format!("expected {} fields, found {}", 2 + 2 * cols, fields.len())));
        }
        if fields[0].parse::<usize>().ok() != Some(nodes.len()) {
            return Err(malformed(no, "row index out of sequence"));
        }
        let f = |s: &str| s.parse::<f64>().map_err(|_| malformed(no, format!("bad number `{s}`")));
        nodes.push(f(fields[1])?);
        for pair in fields[2..].chunks(2) {
            data.push(Complex64::new(f(pair[0])?, f(pair[1])?));
        }
    }
    let missing = |k: &str| malformed(last, format!("missing `{k}`"));
    let rows = rows.ok_or_else(|| missing("rows"))?;
    if nodes.len() != rows {
        return Err(malformed(last, format!("expected {rows} data rows, found {}", nodes.len())));
    }
    let meta = MatrixMeta {
        family: family.ok_or_else(|| missing("family"))?,
        alpha: alpha.ok_or_else(|| missing("alpha"))?,
        digits: digits.ok_or_else(|| missing("digits"))?,
        node_rule: rule.ok_or_else(|| missing("node-rule"))?,
        overflow: data.iter().filter(|z| !z.re.is_finite() || !z.im.is_finite()).count(),
    };
    OperatorMatrix::from_parts(rows, cols.ok_or_else(|| missing("cols"))?, data, nodes, meta)
        .map_err(|e| malformed(last, e.to_string()))
}

/// `m.csv` → `m.json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    path.with_extension("json")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixSidecar {
    pub format: String,
    pub family: String,
    pub alpha: String,
    pub rows: usize,
    pub cols: usize,
    pub digits: u32,
    pub node_rule: String,
    /// `auto` or `fixed`.
    pub digits_policy: String,
    pub epsilon: f64,
    /// `d(M_(k+1), M_k)` when the digits were chosen automatically.
    pub discrepancy: Option<f64>,
    pub overflow: usize,
    pub build_seconds: f64,
    pub tool_version: String,
}

impl MatrixSidecar {
    pub fn new(m: &OperatorMatrix, auto: bool, epsilon: f64, discrepancy: Option<f64>, build_seconds: f64) -> Self {
        Self {
            format: MATRIX_MAGIC.trim_start_matches("# ").to_string(),
            family: m.meta.family.name().to_string(),
            alpha: m.meta.alpha.clone(),
            rows: m.rows(),
            cols: m.cols(),
            digits: m.meta.digits,
            node_rule: m.meta.node_rule.clone(),
            digits_policy: if auto { "auto" } else { "fixed" }.to_string(),
            epsilon,
            discrepancy,
            overflow: m.meta.overflow,
            build_seconds,
            tool_version: TOOL_VERSION.to_string(),
        }
    }
}

pub fn write_scan_csv(r: &DigitScanReport) -> String {
    let mut s = String::from("N,digits\n");
    for rec in &r.records {
        let _ = writeln!(s, "{},{}", rec.n, rec.digits);
    }
    s
}

pub fn read_scan_csv(text: &str) -> Result<Vec<(usize, u32)>, FormatError> {
    let mut lines = text.lines().enumerate();
    if lines.next().map(|(_, l)| l) != Some("N,digits") {
        return Err(malformed(1, "expected header `N,digits`"));
    }
    lines
        .map(|(i, l)| {
            let (n, d) = l.split_once(',').ok_or_else(|| malformed(i + 1, "expected N,digits"))?;
            match (n.parse(), d.parse()) {
                (Ok(n), Ok(d)) => Ok((n, d)),
                _ => Err(malformed(i + 1, "bad integer")),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanSidecar {
    pub alpha: String,
    pub kind: String,
    pub epsilon: f64,
    pub nmax: usize,
    pub slope: f64,
    pub intercept: f64,
    pub scan_seconds: f64,
    pub tool_version: String,
}

impl ScanSidecar {
    pub fn new(r: &DigitScanReport, scan_seconds: f64) -> Self {
        Self {
            alpha: r.alpha.clone(),
            kind: r.kind.name().to_string(),
            epsilon: r.epsilon,
            nmax: r.records.len(),
            slope: r.slope,
            intercept: r.intercept,
            scan_seconds,
            tool_version: TOOL_VERSION.to_string(),
        }
    }
}
