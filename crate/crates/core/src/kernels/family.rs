use core::fmt;
use core::str::FromStr;

use alloc::borrow::ToOwned;

use crate::error::{Error, Result};
use crate::mp::{BigComplex, BigReal, PrecisionContext};

/// The six basis families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `λ_n(x) = ((ix-1)/(ix+1))^n`
    Higgins,
    /// `μ_n(x) = (ix-1)^n / (ix+1)^(n+1)`
    Christov,
    /// `CH_2n = Re λ_n`
    CosHiggins,
    /// `SH_2n+1 = Im λ_n+1`
    SinHiggins,
    /// `CC_2n = Re μ_n`
    CosChristov,
    /// `SC_2n+1 = -Im μ_n`
    SinChristov,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Higgins,
        Family::Christov,
        Family::CosHiggins,
        Family::SinHiggins,
        Family::CosChristov,
        Family::SinChristov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Higgins => "higgins",
            Family::Christov => "christov",
            Family::CosHiggins => "cos-higgins",
            Family::SinHiggins => "sin-higgins",
            Family::CosChristov => "cos-christov",
            Family::SinChristov => "sin-christov",
        }
    }

    pub fn is_real(self) -> bool {
        !matches!(self, Family::Higgins | Family::Christov)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let f = match key.as_str() {
            "higgins" | "lambda" => Family::Higgins,
            "christov" | "mu" => Family::Christov,
            "cos-higgins" | "ch" => Family::CosHiggins,
            "sin-higgins" | "sh" => Family::SinHiggins,
            "cos-christov" | "cc" => Family::CosChristov,
            "sin-christov" | "sc" => Family::SinChristov,
            _ => {
                return Err(Error::MalformedParameter {
                    token: s.to_owned(),
                    reason: "unknown family",
                })
            }
        };
        Ok(f)
    }
}

/// A family together with its index `n`.
///
/// For the real families `n >= 0` selects `CH_2n`, `SH_2n+1`, `CC_2n` or
/// `SC_2n+1`; the complex families accept any integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: i64,
}

impl FamilySpec {
    pub fn new(family: Family, n: i64) -> Result<Self> {
        if family.is_real() && n < 0 {
            return Err(Error::Domain("real families take n >= 0"));
        }
        Ok(Self { family, n })
    }
}

pub(crate) fn one_plus_ix(x: &BigReal, sign: i64) -> BigComplex {
    let im = if sign < 0 { -x } else { x.clone() };
    BigComplex::new(BigReal::one_like(x), im)
}

pub(crate) fn higgins_value(n: i64, x: &BigReal) -> BigComplex {
    let w = one_plus_ix(x, 1);
    let r = (&w.conj().mul_i64(-1)) / &w;
    r.powi(n)
}

fn christov_value(n: i64, x: &BigReal) -> BigComplex {
    let w = one_plus_ix(x, 1);
    let num = -w.conj();
    num.powi(n) / w.powi(n + 1)
}

/// Value of the basis function itself at `x`. Real families return a zero
/// imaginary part.
pub fn eval_family(f: FamilySpec, x: &BigReal, _ctx: &PrecisionContext) -> BigComplex {
    let n = f.n;
    match f.family {
        Family::Higgins => higgins_value(n, x),
        Family::Christov => christov_value(n, x),
        Family::CosHiggins => BigComplex::from_real(higgins_value(n, x).re),
        Family::SinHiggins => BigComplex::from_real(higgins_value(n + 1, x).im),
        Family::CosChristov => BigComplex::from_real(christov_value(n, x).re),
        Family::SinChristov => BigComplex::from_real(-christov_value(n, x).im),
    }
}
