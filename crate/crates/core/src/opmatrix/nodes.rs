use alloc::vec::Vec;

use dashu_int::IBig;

use crate::mp::{BigReal, PrecisionContext};

/// Name recorded in matrix metadata for the node rule below.
pub const NODE_RULE: &str = "cot(pi*(2j+1)/(2N))";

/// Collocation nodes `x_j = cot(π(2j+1)/(2N))`, `j = 0..N`.
///
/// Nodes decrease with `j` and satisfy `x_(N-1-j) = -x_j` exactly.
#[derive(Clone, Debug)]
pub struct NodeSet {
    x: Vec<BigReal>,
    digits: u32,
    rule: &'static str,
}

pub fn make_nodes(n: usize, ctx: &PrecisionContext) -> NodeSet {
    assert!(n >= 1, "node count must be positive");
    let mut x = Vec::with_capacity(n);
    let half = n / 2;
    for j in 0..half {
        let t = BigReal::ratio(IBig::from(2 * j + 1), IBig::from(2 * n), ctx);
        let (s, c) = t.sin_cos_pi();
        x.push(c / s);
    }
    if n % 2 == 1 {
        x.push(BigReal::zero(ctx));
    }
    for j in (0..half).rev() {
        let v = -&x[j];
        x.push(v);
    }
    NodeSet {
        x,
        digits: ctx.digits(),
        rule: NODE_RULE,
    }
}

impl NodeSet {
    /// Nodes given explicitly, for experiments off the standard rule.
    pub fn from_values(x: Vec<BigReal>, ctx: &PrecisionContext) -> Self {
        Self {
            x,
            digits: ctx.digits(),
            rule: "explicit",
        }
    }

    pub fn rule(&self) -> &'static str {
        self.rule
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn values(&self) -> &[BigReal] {
        &self.x
    }

    pub fn get(&self, j: usize) -> &BigReal {
        &self.x[j]
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.x.iter().map(BigReal::to_f64).collect()
    }

    /// Whether `x_(M-1-j) = -x_j` holds exactly for every `j`.
    pub fn is_antisymmetric(&self) -> bool {
        let m = self.x.len();
        (0..m / 2).all(|j| self.x[m - 1 - j] == -&self.x[j])
            && (m.is_multiple_of(2) || self.x[m / 2].is_zero())
    }
}
