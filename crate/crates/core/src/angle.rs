//! Exact arithmetic on the torsion part of the circle group.
//!
//! An [`Angle`] is a rational residue modulo 1, always stored by its
//! representative in the half-open interval `(-1/2, 1/2]`. The closed arcs
//! `T_m = [-1/(4m), 1/(4m)]` and the three integer roundings used by the
//! standard-representation machinery live here too. Nothing in this module
//! touches floating point.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary precision rational number.
pub type Rational = BigRational;

/// Element of `Q/Z`, identified with its representative in `(-1/2, 1/2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(Rational);

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

impl Angle {
    /// Reduces `num/den` modulo 1 into `(-1/2, 1/2]`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::input("zero denominator"));
        }
        Ok(Self::from_rational(&Rational::new(num.into(), den)))
    }

    pub fn from_rational(r: &Rational) -> Self {
        let mut frac = r - r.floor();
        if frac > half() {
            frac -= Rational::one();
        }
        Angle(frac)
    }

    pub fn zero() -> Self {
        Angle(Rational::zero())
    }

    /// The representative in `(-1/2, 1/2]`.
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Absolute value of the representative, i.e. the distance to 0 in the circle.
    pub fn abs(&self) -> Rational {
        self.0.abs()
    }

    pub fn scale(&self, m: &BigInt) -> Self {
        Self::from_rational(&(&self.0 * Rational::from_integer(m.clone())))
    }

    pub fn scale_i64(&self, m: i64) -> Self {
        self.scale(&BigInt::from(m))
    }

    /// Membership in `T_m = [-1/(4m), 1/(4m)]`, closed at both ends.
    pub fn in_tm(&self, m: u64) -> bool {
        assert!(m >= 1, "T_m is defined for m >= 1");
        // |num| / den <= 1/(4m)  <=>  4m|num| <= den
        let lhs = self.0.numer().abs() * BigInt::from(4u64) * BigInt::from(m);
        lhs <= *self.0.denom()
    }

    /// Membership in `T_+ = T_1 = [-1/4, 1/4]`.
    pub fn in_t_plus(&self) -> bool {
        self.in_tm(1)
    }
}

impl Default for Angle {
    fn default() -> Self {
        Angle::zero()
    }
}

impl Add for &Angle {
    type Output = Angle;
    fn add(self, rhs: &Angle) -> Angle {
        Angle::from_rational(&(&self.0 + &rhs.0))
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        &self + &rhs
    }
}

impl Sub for &Angle {
    type Output = Angle;
    fn sub(self, rhs: &Angle) -> Angle {
        Angle::from_rational(&(&self.0 - &rhs.0))
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        &self - &rhs
    }
}

impl Neg for &Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle::from_rational(&-&self.0)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        -&self
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Angle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Angle::from_rational(&parse_rational(s)?))
    }
}

impl Serialize for Angle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses `"a/b"` or a bare integer `"a"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::input(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::input("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// The three integer roundings, all defined through strict or non-strict
/// comparisons rather than the usual floor and ceiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RoundingKind {
    /// `min { n : x < n }`
    StrictCeiling,
    /// `max { n : n <= x }`
    FloorBracket,
    /// `max { n : n < x }`
    StrictFloor,
}

pub fn round(x: &Rational, kind: RoundingKind) -> BigInt {
    let (q, r) = x.numer().div_mod_floor(x.denom());
    let exact = r.is_zero();
    match kind {
        RoundingKind::StrictCeiling => q + 1,
        RoundingKind::FloorBracket => q,
        RoundingKind::StrictFloor if exact => q - 1,
        RoundingKind::StrictFloor => q,
    }
}
