//! Exact arithmetic in the min-plus semiring `(Q ∪ {+inf}, min, +)` and the
//! max-plus semiring `(Q ∪ {-inf}, max, +)`.
//!
//! A single [`TropicalValue`] type carries both infinities. Which infinity is
//! legal in which algebra is checked by [`crate::Representation`], not here.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Formats a rational as `p/q` with `q > 0`, always including the denominator.
pub fn format_rational(r: &Rational) -> String {
    let mut s = r.numer().to_string();
    s.push('/');
    s.push_str(&r.denom().to_string());
    s
}

/// Parses `p/q`, `p`, or a plain decimal such as `0.5` or `-1.25`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(alloc::format!("not a rational number: {text:?}"));
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let digits = alloc::format!("{whole_digits}{frac}");
        let mut numer: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(numer, denom));
    }
    let p: BigInt = text.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

/// Which tropical semiring an operation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algebra {
    /// `⊕ = min`, additive identity `+inf`.
    MinPlus,
    /// `⊕ = max`, additive identity `-inf`.
    MaxPlus,
}

impl Algebra {
    /// The additive identity of the semiring.
    pub fn zero(self) -> TropicalValue {
        match self {
            Algebra::MinPlus => TropicalValue::PosInf,
            Algebra::MaxPlus => TropicalValue::NegInf,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algebra::MinPlus => "min-plus",
            Algebra::MaxPlus => "max-plus",
        }
    }

    pub fn dual(self) -> Algebra {
        match self {
            Algebra::MinPlus => Algebra::MaxPlus,
            Algebra::MaxPlus => Algebra::MinPlus,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "min-plus" | "min" | "minplus" => Ok(Algebra::MinPlus),
            "max-plus" | "max" | "maxplus" => Ok(Algebra::MaxPlus),
            other => Err(Error::Parse(alloc::format!("unknown algebra {other:?}"))),
        }
    }
}

/// An extended rational: a finite exact fraction or one of the two infinities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TropicalValue {
    Finite(Rational),
    PosInf,
    NegInf,
}

impl TropicalValue {
    pub fn finite(r: Rational) -> Self {
        TropicalValue::Finite(r)
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        TropicalValue::Finite(rat(num, den))
    }

    pub fn from_int(value: i64) -> Self {
        TropicalValue::Finite(int(value))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropicalValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            TropicalValue::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// Classical negation; swaps the infinities.
    pub fn neg(&self) -> TropicalValue {
        match self {
            TropicalValue::Finite(r) => TropicalValue::Finite(-r),
            TropicalValue::PosInf => TropicalValue::NegInf,
            TropicalValue::NegInf => TropicalValue::PosInf,
        }
    }

    /// Classical multiplication by a positive scalar; infinities are fixed.
    pub fn scale(&self, factor: &Rational) -> TropicalValue {
        debug_assert!(factor.is_positive());
        match self {
            TropicalValue::Finite(r) => TropicalValue::Finite(r * factor),
            other => other.clone(),
        }
    }

    /// `self >= t` for a finite threshold `t`.
    pub fn reaches(&self, t: &Rational) -> bool {
        match self {
            TropicalValue::Finite(r) => r >= t,
            TropicalValue::PosInf => true,
            TropicalValue::NegInf => false,
        }
    }
}

impl From<Rational> for TropicalValue {
    fn from(r: Rational) -> Self {
        TropicalValue::Finite(r)
    }
}

impl PartialOrd for TropicalValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropicalValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use TropicalValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (PosInf, PosInf) | (NegInf, NegInf) => Ordering::Equal,
            (PosInf, _) | (_, NegInf) => Ordering::Greater,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
        }
    }
}

impl fmt::Display for TropicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalValue::Finite(r) => f.write_str(&format_rational(r)),
            TropicalValue::PosInf => f.write_str("inf"),
            TropicalValue::NegInf => f.write_str("-inf"),
        }
    }
}

impl FromStr for TropicalValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" | "∞" => Ok(TropicalValue::PosInf),
            "-inf" | "-∞" => Ok(TropicalValue::NegInf),
            other => parse_rational(other).map(TropicalValue::Finite),
        }
    }
}

/// Tropical addition: `min` in min-plus, `max` in max-plus.
pub fn trop_add(a: &TropicalValue, b: &TropicalValue, alg: Algebra) -> TropicalValue {
    match alg {
        Algebra::MinPlus => core::cmp::min(a, b).clone(),
        Algebra::MaxPlus => core::cmp::max(a, b).clone(),
    }
}

/// Tropical multiplication (classical sum). Infinities absorb finite values.
pub fn trop_mul(a: &TropicalValue, b: &TropicalValue) -> Result<TropicalValue> {
    use TropicalValue::*;
    match (a, b) {
        (Finite(x), Finite(y)) => Ok(Finite(x + y)),
        (PosInf, NegInf) | (NegInf, PosInf) => Err(Error::MixedInfinity),
        (PosInf, _) | (_, PosInf) => Ok(PosInf),
        (NegInf, _) | (_, NegInf) => Ok(NegInf),
    }
}

/// Tropical division, i.e. classical subtraction. Finite operands only.
pub fn trop_div(a: &TropicalValue, b: &TropicalValue) -> Result<TropicalValue> {
    match (a, b) {
        (TropicalValue::Finite(x), TropicalValue::Finite(y)) => Ok(TropicalValue::Finite(x - y)),
        _ => Err(Error::NonFinite),
    }
}

/// A non-empty, fixed-length vector of tropical values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropicalVector {
    entries: Vec<TropicalValue>,
}

impl TropicalVector {
    pub fn new(entries: Vec<TropicalValue>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(TropicalVector { entries })
    }

    /// Builds a vector of finite entries.
    pub fn from_rationals<I: IntoIterator<Item = Rational>>(values: I) -> Result<Self> {
        Self::new(values.into_iter().map(TropicalValue::Finite).collect())
    }

    pub fn filled(value: TropicalValue, dim: usize) -> Result<Self> {
        Self::new(alloc::vec![value; dim])
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[TropicalValue] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<&TropicalValue> {
        self.entries.get(i)
    }

    pub fn into_entries(self) -> Vec<TropicalValue> {
        self.entries
    }

    /// Appends one coordinate.
    pub fn extended(&self, last: TropicalValue) -> TropicalVector {
        let mut entries = self.entries.clone();
        entries.push(last);
        TropicalVector { entries }
    }

    /// `c ⊗ u`: adds `c` to every coordinate.
    pub fn translate(&self, c: &TropicalValue) -> Result<TropicalVector> {
        let entries = self
            .entries
            .iter()
            .map(|x| trop_mul(c, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(TropicalVector { entries })
    }

    pub fn scale(&self, factor: &Rational) -> TropicalVector {
        TropicalVector {
            entries: self.entries.iter().map(|x| x.scale(factor)).collect(),
        }
    }

    pub fn neg(&self) -> TropicalVector {
        TropicalVector {
            entries: self.entries.iter().map(TropicalValue::neg).collect(),
        }
    }

    pub fn contains(&self, value: &TropicalValue) -> bool {
        self.entries.iter().any(|x| x == value)
    }
}

impl fmt::Display for TropicalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Tropical dot product: the tropical sum of the coordinate-wise products.
pub fn trop_dot(u: &TropicalVector, v: &TropicalVector, alg: Algebra) -> Result<TropicalValue> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    let mut acc = alg.zero();
    for (a, b) in u.entries.iter().zip(&v.entries) {
        let prod = trop_mul(a, b)?;
        acc = trop_add(&acc, &prod, alg);
    }
    Ok(acc)
}
