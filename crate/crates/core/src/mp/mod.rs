//! Multiprecision scalars, exact parameters and the gamma function.

mod complex;
mod context;
mod gamma;
mod param;
mod real;

pub use complex::BigComplex;
pub use context::{digits_for_bits, digits_to_bits, PrecisionContext, GUARD_BITS, MIN_DIGITS};
pub use gamma::gamma;
pub use param::ExactParam;
pub use real::BigReal;


