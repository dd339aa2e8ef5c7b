//! Extended nonnegative rational weights, the value object of `[0, ∞]`.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// Exact rational numbers used throughout the crate.
pub type Rational = BigRational;

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer rational `n`.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"n"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let t = s.trim();
    let bad = || ParseError::Number(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Formats a rational as `"n"` or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An element of `[0, ∞]` with exact rational finite part.
///
/// The derived order places every finite value below `Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtWeight {
    Finite(Rational),
    Infinite,
}

impl ExtWeight {
    pub fn zero() -> Self {
        ExtWeight::Finite(Rational::zero())
    }

    pub fn one() -> Self {
        ExtWeight::Finite(Rational::one())
    }

    pub fn inf() -> Self {
        ExtWeight::Infinite
    }

    /// Finite weight from a rational; `None` when negative.
    pub fn finite(r: Rational) -> Option<Self> {
        if r.is_negative() {
            None
        } else {
            Some(ExtWeight::Finite(r))
        }
    }

    /// Finite weight `num / den`. Panics on negative input.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::finite(ratio(num, den)).expect("weight must be nonnegative")
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtWeight::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtWeight::Finite(r) if r.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExtWeight::Finite(r) => Some(r),
            ExtWeight::Infinite => None,
        }
    }

    /// Scalar multiple with the convention `λ·∞ = ∞` for every finite `λ ≥ 0`.
    pub fn scale(&self, lambda: &Rational) -> Self {
        assert!(!lambda.is_negative(), "scale factor must be nonnegative");
        match self {
            ExtWeight::Finite(r) => ExtWeight::Finite(r * lambda),
            ExtWeight::Infinite => ExtWeight::Infinite,
        }
    }

    /// Product of two extended weights, `λ·∞ = ∞` for all `λ` (including 0).
    pub fn mul(&self, other: &ExtWeight) -> Self {
        match (self, other) {
            (ExtWeight::Finite(a), ExtWeight::Finite(b)) => ExtWeight::Finite(a * b),
            _ => ExtWeight::Infinite,
        }
    }

    /// Approximate decimal value, for human-readable tables only.
    pub fn to_f64(&self) -> f64 {
        match self {
            ExtWeight::Finite(r) => r.to_f64().unwrap_or(f64::NAN),
            ExtWeight::Infinite => f64::INFINITY,
        }
    }
}

impl Default for ExtWeight {
    fn default() -> Self {
        ExtWeight::zero()
    }
}

impl Add for ExtWeight {
    type Output = ExtWeight;
    fn add(self, rhs: ExtWeight) -> ExtWeight {
        &self + &rhs
    }
}

impl<'a> Add<&'a ExtWeight> for &'a ExtWeight {
    type Output = ExtWeight;
    fn add(self, rhs: &ExtWeight) -> ExtWeight {
        match (self, rhs) {
            (ExtWeight::Finite(a), ExtWeight::Finite(b)) => ExtWeight::Finite(a + b),
            _ => ExtWeight::Infinite,
        }
    }
}

impl Sum for ExtWeight {
    fn sum<I: Iterator<Item = ExtWeight>>(iter: I) -> Self {
        iter.fold(ExtWeight::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a ExtWeight> for ExtWeight {
    fn sum<I: Iterator<Item = &'a ExtWeight>>(iter: I) -> Self {
        iter.fold(ExtWeight::zero(), |a, b| &a + b)
    }
}

impl From<Rational> for ExtWeight {
    fn from(r: Rational) -> Self {
        ExtWeight::finite(r).expect("weight must be nonnegative")
    }
}

/// Internal hom of `([0,∞], ≥, +)`: truncated subtraction `ν ∸ μ = max(0, ν − μ)`.
///
/// `λ + μ ≥ ν` holds exactly when `λ ≥ hom_plus(μ, ν)`.
pub fn hom_plus(mu: &ExtWeight, nu: &ExtWeight) -> ExtWeight {
    match (mu, nu) {
        (ExtWeight::Infinite, _) => ExtWeight::zero(),
        (ExtWeight::Finite(_), ExtWeight::Infinite) => ExtWeight::Infinite,
        (ExtWeight::Finite(m), ExtWeight::Finite(n)) => {
            if n > m {
                ExtWeight::Finite(n - m)
            } else {
                ExtWeight::zero()
            }
        }
    }
}

/// Least `λ ∈ [0, ∞]` such that `target ≤ λ·source` for every `(source, target)` pair.
///
/// Pairs with `target = 0` or `source = ∞` impose nothing; a pair with
/// `source = 0 < target` or `source < ∞ = target` forces `∞`.
pub fn least_scale<I>(pairs: I) -> ExtWeight
where
    I: IntoIterator<Item = (ExtWeight, ExtWeight)>,
{
    let mut best = Rational::zero();
    for (src, tgt) in pairs {
        if tgt.is_zero() {
            continue;
        }
        match (&src, &tgt) {
            (ExtWeight::Infinite, _) => {}
            (ExtWeight::Finite(s), _) if s.is_zero() => return ExtWeight::Infinite,
            (ExtWeight::Finite(_), ExtWeight::Infinite) => return ExtWeight::Infinite,
            (ExtWeight::Finite(s), ExtWeight::Finite(t)) => {
                let q = t / s;
                if q > best {
                    best = q;
                }
            }
        }
    }
    ExtWeight::Finite(best)
}

impl fmt::Display for ExtWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtWeight::Finite(r) => f.write_str(&format_rational(r)),
            ExtWeight::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtWeight {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(ExtWeight::Infinite);
        }
        let r = parse_rational(t)?;
        ExtWeight::finite(r).ok_or_else(|| ParseError::Number(s.to_string()))
    }
}

impl Serialize for ExtWeight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtWeight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
