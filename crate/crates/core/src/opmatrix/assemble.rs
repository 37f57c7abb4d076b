use alloc::string::ToString;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::Result;
use crate::kernels::{Alpha, Family, FamilySpec, FractionalLaplacian};
use crate::mp::{gamma, BigComplex, BigReal, PrecisionContext};
use crate::specfun::BinomialMatrix;

use super::matrix::{MatrixMeta, OperatorMatrix};
use super::nodes::NodeSet;

/// Factorisation used for the Higgins fast path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Assembly {
    /// `(A ∘ (c d)) B`
    #[default]
    Hadamard,
    /// `diag(c) A diag(d) B`
    Diagonal,
}

/// Builds the `M x N` matrix of `(-Δ)^(α/2)` applied to basis functions
/// `n = 1..=N` of `family`, evaluated at `nodes`.
pub fn build_matrix(
    family: Family,
    alpha: &Alpha,
    nodes: &NodeSet,
    cols: usize,
    ctx: &PrecisionContext,
) -> Result<OperatorMatrix> {
    build_matrix_with(family, alpha, nodes, cols, ctx, Assembly::default())
}

pub fn build_matrix_with(
    family: Family,
    alpha: &Alpha,
    nodes: &NodeSet,
    cols: usize,
    ctx: &PrecisionContext,
    assembly: Assembly,
) -> Result<OperatorMatrix> {
    let rows = nodes.len();
    let xs: Vec<BigReal> = nodes.values().iter().map(|x| x.at(ctx)).collect();
    let computed: Vec<(Vec<Complex64>, usize)> = match family {
        Family::Higgins => {
            let fast = HigginsRows::new(alpha, cols, ctx, assembly)?;
            let half = if nodes.is_antisymmetric() { rows.div_ceil(2) } else { rows };
            map_rows(&xs[..half], |x| fast.row(x))
        }
        _ => {
            let op = FractionalLaplacian::new(alpha, ctx);
            map_rows(&xs, |x| {
                cast_row((1..=cols as i64).map(|n| {
                    op.family(FamilySpec { family, n }, x)
                }))
            })
        }
    };
    let mut data = Vec::with_capacity(rows * cols);
    let mut overflow = 0;
    for (row, of) in &computed {
        data.extend_from_slice(row);
        overflow += of;
    }
    // mirror the lower half: entry(M-1-j, n) = conj(entry(j, n))
    for j in computed.len()..rows {
        let (row, of) = &computed[rows - 1 - j];
        data.extend(row.iter().map(Complex64::conj));
        overflow += of;
    }
    let meta = MatrixMeta {
        family,
        alpha: alpha.token().to_string(),
        digits: ctx.digits(),
        node_rule: nodes.rule().to_string(),
        overflow,
    };
    OperatorMatrix::from_parts(rows, cols, data, nodes.to_f64(), meta)
}

fn cast_row(values: impl Iterator<Item = BigComplex>) -> (Vec<Complex64>, usize) {
    let mut overflow = 0;
    let row = values
        .map(|v| {
            let (z, of) = v.to_double();
            overflow += of as usize;
            z
        })
        .collect();
    (row, overflow)
}

#[cfg(feature = "parallel")]
fn map_rows<F>(xs: &[BigReal], f: F) -> Vec<(Vec<Complex64>, usize)>
where
    F: Fn(&BigReal) -> (Vec<Complex64>, usize) + Sync + Send,
{
    use rayon::prelude::*;
    xs.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_rows<F>(xs: &[BigReal], f: F) -> Vec<(Vec<Complex64>, usize)>
where
    F: Fn(&BigReal) -> (Vec<Complex64>, usize),
{
    xs.iter().map(f).collect()
}

/// Shared factors of the Higgins fast path: `d`, `B` and `-α`.
struct HigginsRows {
    d: Vec<BigReal>,
    b: BinomialMatrix,
    neg_alpha: BigReal,
    cols: usize,
    assembly: Assembly,
}

impl HigginsRows {
    fn new(alpha: &Alpha, cols: usize, ctx: &PrecisionContext, assembly: Assembly) -> Result<Self> {
        let a = alpha.value(ctx);
        let b = BinomialMatrix::new(cols, ctx)?;
        let g = gamma(&a.add_i64(1), ctx)?;
        // d_1 = -Γ(1+α), d_(k+1) = d_k (-k-α)/k
        let mut d = Vec::with_capacity(cols);
        d.push(-g);
        for k in 1..cols as i64 {
            let next = (&d[k as usize - 1] * &(-&a).add_i64(-k)).div_i64(k);
            d.push(next);
        }
        Ok(Self {
            d,
            b,
            neg_alpha: -a,
            cols,
            assembly,
        })
    }

    fn row(&self, x: &BigReal) -> (Vec<Complex64>, usize) {
        let w = BigComplex::new(BigReal::one_like(x), x.clone());
        let z = w.recip().mul_i64(2);
        let c = w.powf(&self.neg_alpha);
        let mut a = z.clone();
        // p_k = A_k c d_k  or  A_k d_k
        let mut p = Vec::with_capacity(self.cols);
        for k in 0..self.cols {
            let v = match self.assembly {
                Assembly::Hadamard => &a * &c.mul_real(&self.d[k]),
                Assembly::Diagonal => a.mul_real(&self.d[k]),
            };
            p.push(v);
            if k + 1 < self.cols {
                a = &a * &z;
            }
        }
        let zero = BigReal::zero_like(x);
        let mut re = alloc::vec![zero.clone(); self.cols];
        let mut im = alloc::vec![zero; self.cols];
        for (k, pk) in p.iter().enumerate() {
            let brow = self.b.row(k + 1);
            for (off, bkn) in brow.iter().enumerate() {
                let n = k + off;
                re[n] = &re[n] + &(&pk.re * bkn);
                im[n] = &im[n] + &(&pk.im * bkn);
            }
        }
        let values = re.into_iter().zip(im).map(|(r, i)| {
            let s = BigComplex::new(r, i);
            match self.assembly {
                Assembly::Hadamard => s,
                Assembly::Diagonal => &c * &s,
            }
        });
        cast_row(values)
    }
}
