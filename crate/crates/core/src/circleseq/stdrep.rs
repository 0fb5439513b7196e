//! Standard representations `z = sum_i c_i / d_i` along a divisibility chain.
//!
//! A representation is standard when
//!
//! 1. `|c_i| <= d_i / (2 d_{i-1})` (with `d_{-1} = 1`),
//! 2. `|z - sum_{i<=k} c_i/d_i| <= 1/(2 d_k)` for every `k`,
//! 3. whenever (2) is an equality at stage `k`, `|c_k/d_k| < |z - sum_{i<k} c_i/d_i|`.
//!
//! [`standard_rep`] builds one greedily; [`StdRep::is_standard`] checks the
//! three conditions directly and serves as the oracle for it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::angle::{Angle, Rational};
use crate::error::{Error, Result};

/// Strictly increasing positive integers `d_0 | d_1 | ... | d_K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivChain(Vec<BigInt>);

impl DivChain {
    pub fn new(ds: Vec<BigInt>) -> Result<Self> {
        if ds.is_empty() {
            return Err(Error::input("empty divisibility chain"));
        }
        let mut prev = BigInt::one();
        for (i, d) in ds.iter().enumerate() {
            if !d.is_positive() {
                return Err(Error::input(format!("chain term {i} is not positive")));
            }
            if i > 0 && (d <= &prev || !(d % &prev).is_zero()) {
                return Err(Error::input(format!(
                    "chain term {i} = {d} is not a proper multiple of {prev}"
                )));
            }
            prev = d.clone();
        }
        Ok(DivChain(ds))
    }

    pub fn from_u64(ds: &[u64]) -> Result<Self> {
        Self::new(ds.iter().map(|&d| BigInt::from(d)).collect())
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> &BigInt {
        self.0.last().expect("chains are non-empty")
    }

    /// `d_{i-1}`, with `d_{-1} = 1`.
    pub fn prev(&self, i: usize) -> BigInt {
        if i == 0 {
            BigInt::one()
        } else {
            self.0[i - 1].clone()
        }
    }

    /// `d_i / d_{i-1}`.
    pub fn ratio(&self, i: usize) -> BigInt {
        &self.0[i] / self.prev(i)
    }
}

impl FromStr for DivChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let ds = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::input(format!("bad chain term {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ds)
    }
}

impl fmt::Display for DivChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Coefficients of `z` along a chain, plus whatever the chain cannot reach.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StdRep {
    z: Angle,
    chain: DivChain,
    coeffs: Vec<BigInt>,
    residual: Angle,
}

fn frac(n: &BigInt, d: &BigInt) -> Rational {
    Rational::new(n.clone(), d.clone())
}

/// Greedy standard representation: at each stage take the admissible
/// coefficient closest to the running remainder, preferring the smaller
/// modulus on an exact half-way tie.
pub fn standard_rep(z: &Angle, chain: &DivChain) -> StdRep {
    let mut rem = z.value().clone();
    let mut coeffs = Vec::with_capacity(chain.len());
    for (k, d) in chain.terms().iter().enumerate() {
        let t = &rem * Rational::from_integer(d.clone());
        let lo: BigInt = t.floor().to_integer();
        let hi: BigInt = &lo + 1;
        let dist_lo = &t - Rational::from_integer(lo.clone());
        let dist_hi = Rational::from_integer(hi.clone()) - &t;
        let c = match dist_lo.cmp(&dist_hi) {
            std::cmp::Ordering::Less => lo,
            std::cmp::Ordering::Greater => hi,
            std::cmp::Ordering::Equal => {
                if lo.abs() <= hi.abs() {
                    lo
                } else {
                    hi
                }
            }
        };
        debug_assert!(BigInt::from(2) * c.abs() <= chain.ratio(k));
        rem -= frac(&c, d);
        coeffs.push(c);
    }
    StdRep {
        z: z.clone(),
        chain: chain.clone(),
        coeffs,
        residual: Angle::from_rational(&rem),
    }
}

impl StdRep {
    /// Wraps a caller-supplied coefficient vector; the residual is computed.
    pub fn from_parts(z: Angle, chain: DivChain, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != chain.len() {
            return Err(Error::input(format!(
                "{} coefficients for a chain of length {}",
                coeffs.len(),
                chain.len()
            )));
        }
        let sum: Rational = coeffs
            .iter()
            .zip(chain.terms())
            .map(|(c, d)| frac(c, d))
            .fold(Rational::zero(), |a, b| a + b);
        let residual = Angle::from_rational(&(z.value() - sum));
        Ok(StdRep {
            z,
            chain,
            coeffs,
            residual,
        })
    }

    pub fn z(&self) -> &Angle {
        &self.z
    }

    pub fn chain(&self) -> &DivChain {
        &self.chain
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn residual(&self) -> &Angle {
        &self.residual
    }

    /// `sum_i c_i / d_i` as a rational number (not reduced mod 1).
    pub fn partial_sum(&self) -> Rational {
        self.coeffs
            .iter()
            .zip(self.chain.terms())
            .map(|(c, d)| frac(c, d))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Checks the three standardness conditions literally.
    pub fn is_standard(&self) -> bool {
        let z = self.z.value();
        let mut partial = Rational::zero();
        for (k, (c, d)) in self.coeffs.iter().zip(self.chain.terms()).enumerate() {
            if BigInt::from(2) * c.abs() * self.chain.prev(k) > *d {
                return false;
            }
            let before = (z - &partial).abs();
            let step = frac(c, d);
            partial += &step;
            let after = (z - &partial).abs();
            let bound = frac(&BigInt::one(), &(BigInt::from(2) * d));
            if after > bound {
                return false;
            }
            if after == bound && step.abs() >= before {
                return false;
            }
        }
        true
    }

    /// `Λ(z)`: indices of the non-zero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Least ratio `d_{i+1}/d_i` over `i` in the support with a successor in the chain.
    ///
    /// `None` when no support index has a successor; the tail estimate then has
    /// no terms to bound.
    pub fn min_support_ratio(&self) -> Option<BigInt> {
        self.support()
            .into_iter()
            .filter(|&i| i + 1 < self.chain.len())
            .map(|i| self.chain.ratio(i + 1))
            .min()
    }

    /// `S = 1/(q - 1)` for the least support ratio `q`, or 0 when there is none.
    pub fn tail_bound(&self) -> Rational {
        match self.min_support_ratio() {
            Some(q) => Rational::new(BigInt::one(), q - 1),
            None => Rational::zero(),
        }
    }
}

/// Bounds on `|η_k(x)|` for a `{-1,0,1}` representation, with the exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportBounds {
    pub lower: Rational,
    pub upper: Rational,
    pub value: Rational,
}

impl SupportBounds {
    pub fn holds(&self) -> bool {
        self.lower <= self.value && self.value <= self.upper
    }
}

/// `(1/q_k)(1 - S) <= |d_{k-1} x| <= (1/q_k)(1 + S)` for `k` in the support of `x`,
/// reading the chain of `x` as `b_0 | b_1 | ...` so that `q_k = d_k / d_{k-1}`.
pub fn support_bounds(x: &StdRep, k: usize) -> Result<SupportBounds> {
    if x.coeffs().iter().any(|c| c.abs() > BigInt::one()) {
        return Err(Error::hypothesis(
            None,
            "coefficients must lie in {-1, 0, 1}",
        ));
    }
    if !x.residual().is_zero() {
        return Err(Error::hypothesis(
            None,
            "x is not fully represented by the chain",
        ));
    }
    if !x.is_standard() {
        return Err(Error::hypothesis(None, "representation is not standard"));
    }
    if k >= x.chain().len() || x.coeffs()[k].is_zero() {
        return Err(Error::hypothesis(Some(k), "index is not in the support"));
    }
    let q_k = x.chain().ratio(k);
    let s = x.tail_bound();
    let inv = Rational::new(BigInt::one(), q_k);
    let value = x.z().scale(&x.chain().prev(k)).abs();
    Ok(SupportBounds {
        lower: &inv * (Rational::one() - &s),
        upper: &inv * (Rational::one() + &s),
        value,
    })
}

/// Conditions under which the leading standard coefficient `c_0` must lie in `{-1, 0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct LeadingHypotheses {
    /// `m z ∈ T_+` for `m = 1 .. ⌈d_0/6⌉` (strict ceiling).
    pub sixth: bool,
    /// `m z ∈ T_+` for `m = 1 .. [d_0/4]` and `d_0 != 7`.
    pub quarter: bool,
    /// `m z ∈ T_+` for `m = 1 .. [d_0/4]` and for `m = d_0 - 1`.
    pub quarter_and_complement: bool,
}

impl LeadingHypotheses {
    pub fn any(&self) -> bool {
        self.sixth || self.quarter || self.quarter_and_complement
    }
}

pub fn leading_hypotheses(z: &Angle, d0: &BigInt) -> LeadingHypotheses {
    use crate::angle::{round, RoundingKind};
    let multiples_ok = |upto: &BigInt| {
        let mut m = BigInt::one();
        while &m <= upto {
            if !z.scale(&m).in_t_plus() {
                return false;
            }
            m += 1;
        }
        true
    };
    let sixth = round(
        &Rational::new(d0.clone(), 6.into()),
        RoundingKind::StrictCeiling,
    );
    let quarter = round(
        &Rational::new(d0.clone(), 4.into()),
        RoundingKind::FloorBracket,
    );
    let quarter_ok = multiples_ok(&quarter);
    LeadingHypotheses {
        sixth: multiples_ok(&sixth),
        quarter: quarter_ok && *d0 != BigInt::from(7),
        quarter_and_complement: quarter_ok && z.scale(&(d0 - 1)).in_t_plus(),
    }
}

/// Whether the chain reaches `z` exactly, i.e. `den(z)` divides `d_K`.
pub fn representable(z: &Angle, chain: &DivChain) -> bool {
    chain.last().is_multiple_of(z.denom())
}
