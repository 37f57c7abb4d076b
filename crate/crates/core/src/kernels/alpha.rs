use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::mp::{BigReal, ExactParam, PrecisionContext};

use super::limits::LimitKind;

/// Fractional order `α ∈ [0, 2]`, kept exact until materialised.
///
/// The endpoints and `α = 1` are admitted; there the closed forms reduce to
/// the classical limit operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alpha(ExactParam);

impl Alpha {
    pub fn new(param: ExactParam) -> Result<Self> {
        if param.cmp_int(0) == Ordering::Less || param.cmp_int(2) == Ordering::Greater {
            return Err(Error::Domain("alpha out of range [0,2]"));
        }
        Ok(Self(param))
    }

    pub fn parse(token: &str) -> Result<Self> {
        Self::new(ExactParam::parse(token)?)
    }

    pub fn param(&self) -> &ExactParam {
        &self.0
    }

    pub fn token(&self) -> &str {
        self.0.token()
    }

    pub fn value(&self, ctx: &PrecisionContext) -> BigReal {
        self.0.materialize(ctx)
    }

    pub fn approx_f64(&self) -> f64 {
        self.0.approx_f64()
    }

    /// The limit operator this order coincides with, if any.
    pub fn limit_kind(&self) -> Option<LimitKind> {
        [(0, LimitKind::Alpha0), (1, LimitKind::Alpha1), (2, LimitKind::Alpha2)]
            .into_iter()
            .find(|(v, _)| self.0.cmp_int(*v) == Ordering::Equal)
            .map(|(_, k)| k)
    }
}

impl core::str::FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_is_closed() {
        for ok in ["0", "2", "1", "sqrt(3)", "3/2", "0.01", "sqrt(4)"] {
            assert!(Alpha::parse(ok).is_ok(), "{ok}");
        }
        for bad in ["2.5", "-0.01", "pi", "sqrt(5)", "2.000000000000000000000001"] {
            assert_eq!(
                Alpha::parse(bad),
                Err(Error::Domain("alpha out of range [0,2]")),
                "{bad}"
            );
        }
    }

    #[test]
    fn limit_kinds() {
        assert_eq!(Alpha::parse("0").unwrap().limit_kind(), Some(LimitKind::Alpha0));
        assert_eq!(Alpha::parse("2/2").unwrap().limit_kind(), Some(LimitKind::Alpha1));
        assert_eq!(Alpha::parse("sqrt(4)").unwrap().limit_kind(), Some(LimitKind::Alpha2));
        assert_eq!(Alpha::parse("1.5").unwrap().limit_kind(), None);
    }
}
