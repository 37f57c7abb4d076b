//! Terminating hypergeometric sums and the binomial coefficient matrix.

mod binomial;
mod hyp2f1;

pub use binomial::{binomial_min_digits, BinomialMatrix};
pub use hyp2f1::{hyp2f1_real, hyp2f1_terminating, hyp2f1_terms, hyp2f1_with_stats, LowerParam, SumStats};
