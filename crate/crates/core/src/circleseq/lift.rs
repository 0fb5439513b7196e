use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::QSeq;
use crate::angle::Rational;
use crate::error::{Error, Result};

/// Reduction of a real sequence with integer ratios `>= 8` to `{1/b_n}` in the circle.
///
/// Hulls in the reals are never computed; the report only certifies that
/// `α x_n = 1/b_n` and that `αY` stays inside `[-1/8, 1/8]`, which is what the
/// lifting argument needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftReport {
    pub alpha: Rational,
    pub qs: QSeq,
    /// `α x_n` for every input term.
    pub scaled: Vec<Rational>,
    /// `α x_n = 1/b_n` for every `n`.
    pub reciprocals_match: bool,
    /// `max |α y|` over `Y = {0} ∪ {±x_n}`.
    pub sup_abs: Rational,
    /// `αY ⊆ (-1/2, 1/2)`.
    pub inside_open_half: bool,
}

pub fn lift_to_reals(xs: &[Rational]) -> Result<LiftReport> {
    let first = xs.first().ok_or_else(|| Error::input("empty sequence"))?;
    if let Some(i) = xs.iter().position(|x| !x.is_positive()) {
        return Err(Error::input(format!("x_{i} is not positive")));
    }
    if let Some(i) = xs.windows(2).position(|w| w[1] >= w[0]) {
        return Err(Error::input(format!(
            "sequence is not decreasing at index {}",
            i + 1
        )));
    }
    let mut qs = vec![8u64];
    for (n, w) in xs.windows(2).enumerate() {
        let n = n + 1;
        let ratio = &w[0] / &w[1];
        if !ratio.is_integer() {
            return Err(Error::hypothesis(
                Some(n),
                format!("ratio x_{}/x_{n} = {ratio} is not an integer", n - 1),
            ));
        }
        let q = ratio.to_integer();
        if q < BigInt::from(8) {
            return Err(Error::hypothesis(
                Some(n),
                format!("ratio x_{}/x_{n} = {q} is below 8", n - 1),
            ));
        }
        qs.push(
            q.to_u64().ok_or_else(|| {
                Error::input(format!("ratio at index {n} does not fit in 64 bits"))
            })?,
        );
    }
    let alpha = (Rational::from_integer(8.into()) * first).recip();
    let qs = QSeq::new(qs)?;
    let scaled: Vec<Rational> = xs.iter().map(|x| &alpha * x).collect();
    let reciprocals_match = scaled
        .iter()
        .zip(qs.bs())
        .all(|(s, b)| *s == Rational::new(BigInt::one(), b.clone()));
    let sup_abs = scaled
        .iter()
        .cloned()
        .fold(Rational::zero(), |a, b| a.max(b.abs()));
    let inside_open_half = sup_abs < Rational::new(1.into(), 2.into());
    Ok(LiftReport {
        alpha,
        qs,
        scaled,
        reciprocals_match,
        sup_abs,
        inside_open_half,
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The first `count` primes strictly greater than `bound`.
pub fn primes_above(bound: u64, count: usize) -> Vec<u64> {
    (bound + 1..).filter(|&n| is_prime(n)).take(count).collect()
}

/// `q_n` = the primes greater than 8, so every `b_n` is square-free and
/// `{1/b_n}` lies in the socle of the circle.
pub fn socle_example(count: usize) -> Result<QSeq> {
    if count == 0 {
        return Err(Error::input("socle example needs at least one term"));
    }
    QSeq::new(primes_above(8, count))
}
