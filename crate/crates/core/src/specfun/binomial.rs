use alloc::vec::Vec;

use dashu_int::ops::BitTest;
use dashu_int::{IBig, UBig};

use crate::error::{Error, Result};
use crate::mp::{digits_for_bits, BigReal, PrecisionContext};

/// Upper-triangular matrix of binomial coefficients `B[k][n] = C(n, k)`,
/// `1 <= k <= n <= N`, stored packed by row.
#[derive(Clone, Debug)]
pub struct BinomialMatrix {
    n: usize,
    rows: Vec<Vec<BigReal>>,
}

/// Bit length of the largest coefficient `C(N, N/2)`.
fn max_coefficient_bits(n: usize) -> usize {
    central(n).bit_len()
}

fn central(n: usize) -> UBig {
    let k = n / 2;
    let mut c = UBig::ONE;
    for j in 0..k {
        c = c * UBig::from(n - j) / UBig::from(j + 1);
    }
    c
}

/// Fewest decimal digits under which every `C(n, k)`, `n <= N`, is exact.
pub fn binomial_min_digits(n: usize) -> u32 {
    digits_for_bits(max_coefficient_bits(n))
}

impl BinomialMatrix {
    pub fn new(n: usize, ctx: &PrecisionContext) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("binomial matrix needs N >= 1"));
        }
        if max_coefficient_bits(n) > ctx.bits() {
            return Err(Error::InsufficientPrecision {
                required_digits: binomial_min_digits(n),
                digits: ctx.digits(),
            });
        }
        // row k holds C(k..=N, k); row k+1 is the running sum of row k
        let mut rows = Vec::with_capacity(n);
        let mut ints: Vec<IBig> = (1..=n).map(IBig::from).collect();
        for k in 1..=n {
            rows.push(
                ints.iter()
                    .map(|v| BigReal::from_ibig(v.clone(), ctx).0)
                    .collect::<Vec<_>>(),
            );
            if k == n {
                break;
            }
            let mut acc = IBig::ZERO;
            let mut next = Vec::with_capacity(ints.len() - 1);
            for v in &ints[..ints.len() - 1] {
                acc += v;
                next.push(acc.clone());
            }
            ints = next;
        }
        Ok(Self { n, rows })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `C(n, k)` for `1 <= k <= N`, `1 <= n <= N`; zero when `k > n`.
    pub fn get(&self, k: usize, n: usize) -> Option<&BigReal> {
        assert!(k >= 1 && n >= 1 && k <= self.n && n <= self.n);
        if k > n {
            None
        } else {
            Some(&self.rows[k - 1][n - k])
        }
    }

    /// Row `k`: the entries `C(k, k), C(k+1, k), …, C(N, k)`.
    pub fn row(&self, k: usize) -> &[BigReal] {
        &self.rows[k - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    fn dense(b: &BinomialMatrix) -> Vec<Vec<f64>> {
        let n = b.dim();
        (1..=n)
            .map(|k| (1..=n).map(|j| b.get(k, j).map_or(0.0, |v| v.to_f64())).collect())
            .collect()
    }

    fn factorial(n: u64) -> IBig {
        (1..=n).fold(IBig::ONE, |a, k| a * IBig::from(k))
    }

    #[test]
    fn small_triangles() {
        let b = BinomialMatrix::new(3, &ctx(16)).unwrap();
        assert_eq!(dense(&b), vec![vec![1.0, 2.0, 3.0], vec![0.0, 1.0, 3.0], vec![0.0, 0.0, 1.0]]);
        let b = BinomialMatrix::new(1, &ctx(16)).unwrap();
        assert_eq!(dense(&b), vec![vec![1.0]]);
    }

    #[test]
    fn central_fifty_matches_factorial_ratio() {
        let b = BinomialMatrix::new(50, &ctx(16)).unwrap();
        let want = factorial(50) / (factorial(25) * factorial(25));
        assert_eq!(want, IBig::from(126_410_606_437_752u64));
        assert_eq!(*b.get(25, 50).unwrap(), BigReal::from_ibig(want, &ctx(16)).0);
    }

    #[test]
    fn pascal_and_cumulative_rules() {
        let n = 40;
        let b = BinomialMatrix::new(n, &ctx(30)).unwrap();
        let at = |k: usize, j: usize| if k == 0 { 1.0 } else { b.get(k, j).map_or(0.0, |v| v.to_f64()) };
        for j in 1..=n {
            assert_eq!(at(1, j), j as f64);
        }
        for k in 2..=n {
            for j in 2..=n {
                assert_eq!(at(k, j), at(k - 1, j - 1) + at(k, j - 1));
            }
        }
        for k in 1..n {
            for j in 1..n {
                let s: f64 = (1..=j).map(|i| at(k, i)).sum();
                assert_eq!(at(k + 1, j + 1), s);
            }
        }
    }

    #[test]
    fn precision_guard() {
        // C(200, 100) needs 197 bits
        assert!(matches!(
            BinomialMatrix::new(200, &ctx(16)),
            Err(Error::InsufficientPrecision { .. })
        ));
        let d = binomial_min_digits(200);
        assert!(BinomialMatrix::new(200, &ctx(d)).is_ok());
        assert!(d > 16 && ctx(d - 1).bits() < 197);
    }
}
