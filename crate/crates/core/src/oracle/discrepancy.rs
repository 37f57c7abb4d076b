use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::opmatrix::OperatorMatrix;

/// `max_ij min(|m1 - m2|, |(m1 - m2) / m1|)`.
///
/// Not symmetric: the relative branch divides by the first argument.
pub fn discrepancy(m1: &OperatorMatrix, m2: &OperatorMatrix) -> Result<f64> {
    if !m1.same_shape(m2) {
        return Err(Error::DimensionMismatch {
            expected: m1.rows() * m1.cols(),
            found: m2.rows() * m2.cols(),
        });
    }
    discrepancy_slices(m1.data(), m2.data())
}

pub fn discrepancy_slices(a: &[Complex64], b: &[Complex64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(a.iter().zip(b).fold(0.0f64, |acc, (x, y)| {
        let d = (x - y).norm();
        if d == 0.0 {
            return acc;
        }
        let r = d / x.norm();
        acc.max(d.min(r))
    }))
}
