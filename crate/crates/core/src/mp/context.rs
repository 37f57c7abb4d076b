use crate::error::{Error, Result};

/// Smallest admissible digit count: never below double precision.
pub const MIN_DIGITS: u32 = 16;

/// Internal guard bits carried on top of the requested decimal digits.
///
/// A context with `d` digits guarantees `d` significant digits for well-conditioned
/// operations; the guard absorbs the rounding of short operation chains.
pub const GUARD_BITS: usize = 10;

/// Decimal working precision for every big-value operation of one computation.
///
/// Values created under a context carry its binary precision, and arithmetic
/// between them keeps it. There is no global precision state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    digits: u32,
    extra_bits: u32,
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::InsufficientPrecision {
                required_digits: MIN_DIGITS,
                digits,
            });
        }
        Ok(Self {
            digits,
            extra_bits: 0,
        })
    }

    /// Double precision plus guard; the default floor for digit scans.
    pub fn floor() -> Self {
        Self {
            digits: MIN_DIGITS,
            extra_bits: 0,
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Binary precision in bits used for significands.
    pub fn bits(&self) -> usize {
        digits_to_bits(self.digits) + GUARD_BITS + self.extra_bits as usize
    }

    /// Same digit count with `extra` additional working bits, for internal
    /// computations that lose a known amount to cancellation.
    pub fn widened(&self, extra: u32) -> Self {
        Self {
            digits: self.digits,
            extra_bits: self.extra_bits + extra,
        }
    }

    pub fn with_digits(&self, digits: u32) -> Result<Self> {
        Self::new(digits).map(|c| c.widened(self.extra_bits))
    }
}

/// `ceil(digits * log2(10))`.
pub fn digits_to_bits(digits: u32) -> usize {
    (digits as u64 * 3_321_928_095).div_ceil(1_000_000_000) as usize
}

/// Smallest digit count whose significand holds `bits` bits.
pub fn digits_for_bits(bits: usize) -> u32 {
    let mut d = ((bits.saturating_sub(GUARD_BITS)) as u64 * 301_029_996 / 1_000_000_000) as u32;
    while digits_to_bits(d) + GUARD_BITS < bits {
        d += 1;
    }
    d.max(MIN_DIGITS)
}
