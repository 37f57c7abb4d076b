use alloc::borrow::ToOwned;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use dashu_int::IBig;

use super::context::PrecisionContext;
use super::real::BigReal;
use crate::error::{Error, Result};

/// A real parameter kept in exact symbolic form until a precision is chosen.
///
/// Accepted tokens: decimal literals (`2.5`, `-0.01`, `1e-3`), rationals `p/q`,
/// `pi`, and `sqrt(k)` for a positive integer `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactParam {
    token: String,
    kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Kind {
    /// `mantissa * 10^exp10`
    Decimal { mantissa: IBig, exp10: i64 },
    Ratio { p: IBig, q: IBig },
    Pi,
    Sqrt(IBig),
}

impl ExactParam {
    pub fn parse(token: &str) -> Result<Self> {
        let t = token.trim();
        let bad = |reason| Error::MalformedParameter {
            token: token.to_owned(),
            reason,
        };
        let kind = if t.eq_ignore_ascii_case("pi") {
            Kind::Pi
        } else if let Some(inner) = t.strip_prefix("sqrt(").and_then(|s| s.strip_suffix(')')) {
            let k = parse_int(inner.trim()).ok_or_else(|| bad("sqrt argument must be an integer"))?;
            if k <= IBig::ZERO {
                return Err(bad("sqrt argument must be positive"));
            }
            Kind::Sqrt(k)
        } else if let Some((p, q)) = t.split_once('/') {
            let p = parse_int(p.trim()).ok_or_else(|| bad("numerator must be an integer"))?;
            let q = parse_int(q.trim()).ok_or_else(|| bad("denominator must be an integer"))?;
            if q == IBig::ZERO {
                return Err(bad("zero denominator"));
            }
            Kind::Ratio { p, q }
        } else {
            let (mantissa, exp10) = parse_decimal(t).ok_or_else(|| bad("not a decimal literal"))?;
            Kind::Decimal { mantissa, exp10 }
        };
        Ok(Self {
            token: t.to_owned(),
            kind,
        })
    }

    /// The token as written by the user.
    pub fn token(&self) -> &str {
        &self.token
    }

    /// The value rounded once to the precision of `ctx`.
    pub fn materialize(&self, ctx: &PrecisionContext) -> BigReal {
        match &self.kind {
            Kind::Decimal { mantissa, exp10 } => {
                let ten = IBig::from(10u8);
                if *exp10 >= 0 {
                    let n = mantissa * ten.pow(*exp10 as usize);
                    BigReal::from_ibig(n, ctx).0
                } else {
                    BigReal::ratio(mantissa.clone(), ten.pow(exp10.unsigned_abs() as usize), ctx)
                }
            }
            Kind::Ratio { p, q } => BigReal::ratio(p.clone(), q.clone(), ctx),
            Kind::Pi => BigReal::pi(ctx),
            Kind::Sqrt(k) => BigReal::from_ibig(k.clone(), &ctx.widened(8)).0.sqrt().at(ctx),
        }
    }

    /// Exact comparison with an integer.
    pub fn cmp_int(&self, v: i64) -> Ordering {
        let v = IBig::from(v);
        match &self.kind {
            Kind::Decimal { mantissa, exp10 } => {
                let ten = IBig::from(10u8);
                if *exp10 >= 0 {
                    (mantissa * ten.pow(*exp10 as usize)).cmp(&v)
                } else {
                    mantissa.cmp(&(v * ten.pow(exp10.unsigned_abs() as usize)))
                }
            }
            Kind::Ratio { p, q } => {
                if *q > IBig::ZERO {
                    p.cmp(&(v * q))
                } else {
                    (v * q).cmp(p)
                }
            }
            Kind::Pi => {
                if v <= IBig::from(3) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            Kind::Sqrt(k) => {
                if v < IBig::ZERO {
                    Ordering::Greater
                } else {
                    k.cmp(&(&v * &v))
                }
            }
        }
    }

    pub fn approx_f64(&self) -> f64 {
        self.materialize(&PrecisionContext::new(20).expect("valid")).to_f64()
    }
}

fn parse_int(s: &str) -> Option<IBig> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    IBig::from_str_radix(s.strip_prefix('+').unwrap_or(s), 10).ok()
}

fn parse_decimal(s: &str) -> Option<(IBig, i64)> {
    let (body, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match body.as_bytes().first()? {
        b'-' => (true, &body[1..]),
        b'+' => (false, &body[1..]),
        _ => (false, body),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut all = String::with_capacity(int.len() + frac.len());
    all.push_str(int);
    all.push_str(frac);
    let mut m = IBig::from_str_radix(&all, 10).ok()?;
    if neg {
        m = -m;
    }
    Some((m, exp - frac.len() as i64))
}

impl FromStr for ExactParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for ExactParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token)
    }
}
