use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernels::Family;

/// Provenance of an operator matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixMeta {
    pub family: Family,
    /// α as the user wrote it.
    pub alpha: String,
    pub digits: u32,
    pub node_rule: String,
    /// Entries whose real or imaginary part overflowed the double range.
    pub overflow: usize,
}

/// Dense `M x N` complex matrix, row-major, rows indexed by node.
///
/// Column `c` holds the basis index `n = c + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
    nodes: Vec<f64>,
    pub meta: MatrixMeta,
}

impl OperatorMatrix {
    pub fn from_parts(
        rows: usize,
        cols: usize,
        data: Vec<Complex64>,
        nodes: Vec<f64>,
        meta: MatrixMeta,
    ) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if nodes.len() != rows {
            return Err(Error::DimensionMismatch {
                expected: rows,
                found: nodes.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            data,
            nodes,
            meta,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Node abscissae as doubles.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, j: usize) -> &[Complex64] {
        &self.data[j * self.cols..(j + 1) * self.cols]
    }

    /// Entry at node `j` (0-based) and basis index `n` (1-based).
    pub fn entry(&self, j: usize, n: usize) -> Complex64 {
        assert!(n >= 1 && n <= self.cols);
        self.data[j * self.cols + n - 1]
    }

    pub fn same_shape(&self, other: &OperatorMatrix) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }
}

/// Double-precision matrix-vector product.
pub fn row_apply(m: &OperatorMatrix, coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    if coeffs.len() != m.cols {
        return Err(Error::DimensionMismatch {
            expected: m.cols,
            found: coeffs.len(),
        });
    }
    Ok((0..m.rows)
        .map(|j| m.row(j).iter().zip(coeffs).map(|(a, b)| a * b).sum())
        .collect())
}
