//! The sequence `{1/b_n}` in the circle group, where `b_n = q_0 q_1 ... q_n`.
//!
//! Characters of the circle are the integers acting by multiplication; the
//! character `η_k` is multiplication by `b_{k-1}` (with `b_{-1} = 1`). Hulls in
//! the circle are checked at finite depth: `X_N = {0} ∪ {±1/b_n : n <= N}`
//! lives in the cyclic subgroup `Z_{b_N}`, and because finite subgroups are
//! dually closed and dually embedded, the hull computed there is the hull in
//! the whole circle.

mod lift;
mod stdrep;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::angle::{round, Angle, Rational, RoundingKind};
use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;

pub use lift::{lift_to_reals, primes_above, socle_example, LiftReport};
pub use stdrep::{
    leading_hypotheses, representable, standard_rep, support_bounds, DivChain, LeadingHypotheses,
    StdRep, SupportBounds,
};

/// Default cap on character evaluations for truncated hulls.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Finite sequence `q_0, ..., q_N` with partial products `b_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeq {
    qs: Vec<u64>,
    bs: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl QSeq {
    pub fn new(qs: Vec<u64>) -> Result<Self> {
        if qs.is_empty() {
            return Err(Error::input("empty q-sequence"));
        }
        if let Some(i) = qs.iter().position(|&q| q < 2) {
            return Err(Error::input(format!(
                "q_{i} = {} must be at least 2",
                qs[i]
            )));
        }
        let mut bs = Vec::with_capacity(qs.len());
        let mut b = BigInt::one();
        for &q in &qs {
            b *= q;
            bs.push(b.clone());
        }
        Ok(QSeq { qs, bs })
    }

    pub fn qs(&self) -> &[u64] {
        &self.qs
    }

    pub fn bs(&self) -> &[BigInt] {
        &self.bs
    }

    /// Index `N` of the last term.
    pub fn depth(&self) -> usize {
        self.qs.len() - 1
    }

    /// `b_{k-1}`, with `b_{-1} = 1`.
    pub fn b_before(&self, k: usize) -> BigInt {
        if k == 0 {
            BigInt::one()
        } else {
            self.bs[k - 1].clone()
        }
    }

    pub fn last_b(&self) -> &BigInt {
        self.bs.last().expect("q-sequences are non-empty")
    }

    pub fn chain(&self) -> DivChain {
        DivChain::new(self.bs.clone()).expect("partial products of q >= 2 form a chain")
    }

    /// The first `n + 1` terms.
    pub fn prefix(&self, n: usize) -> Result<QSeq> {
        if n > self.depth() {
            return Err(Error::input(format!(
                "prefix depth {n} exceeds {}",
                self.depth()
            )));
        }
        QSeq::new(self.qs[..=n].to_vec())
    }

    /// `X_N` in increasing order of representatives.
    pub fn x_set(&self) -> Vec<Angle> {
        let mut xs = vec![Angle::zero()];
        for b in &self.bs {
            let a = Angle::from_rational(&Rational::new(BigInt::one(), b.clone()));
            xs.push(-&a);
            xs.push(a);
        }
        xs.sort();
        xs.dedup();
        xs
    }

    /// True when `q_{k+1} >= 4` for every `k < N` with `q_k = 7`.
    ///
    /// A trailing 7 is unconstrained: the sequence can always be continued
    /// with a large term without changing `X_N`.
    pub fn sevens_followed_by_four(&self) -> bool {
        self.qs.windows(2).all(|w| w[0] != 7 || w[1] >= 4)
    }

    /// `η_k` as the integer multiplier `b_{k-1}`, for `0 <= k <= N + 1`.
    pub fn eta(&self, k: usize) -> Result<BigInt> {
        if k > self.qs.len() {
            return Err(Error::input(format!(
                "eta index {k} exceeds N + 1 = {}",
                self.qs.len()
            )));
        }
        Ok(self.b_before(k))
    }

    /// Whether the character `x -> multiplier * x` lies in `X_N^▷`.
    pub fn in_polar(&self, multiplier: &BigInt) -> bool {
        self.bs.iter().all(|b| {
            Angle::from_rational(&Rational::new(multiplier.clone(), b.clone())).in_t_plus()
        })
    }

    /// Whether `m η_k ∈ X_N^▷`.
    pub fn check_etak_membership(&self, k: usize, m: &BigInt) -> Result<bool> {
        Ok(self.in_polar(&(m * self.eta(k)?)))
    }

    /// Multiplier of `[q_{k1}/4] η_{k1} ± round(q_{k2}/4) η_{k2}` with the given rounding on `k2`.
    pub fn two_level_multiplier(
        &self,
        k1: usize,
        k2: usize,
        sign: Sign,
        k2_rounding: RoundingKind,
    ) -> Result<BigInt> {
        if k1 >= k2 || k2 > self.depth() {
            return Err(Error::input(format!(
                "need k1 < k2 <= N, got k1 = {k1}, k2 = {k2}, N = {}",
                self.depth()
            )));
        }
        let quarter = |k: usize| Rational::new(BigInt::from(self.qs[k]), BigInt::from(4));
        let first = round(&quarter(k1), RoundingKind::FloorBracket) * self.b_before(k1);
        let second = round(&quarter(k2), k2_rounding) * self.b_before(k2);
        Ok(match sign {
            Sign::Plus => first + second,
            Sign::Minus => first - second,
        })
    }

    /// Whether `[q_{k1}/4] η_{k1} ± ⌊q_{k2}/4⌋ η_{k2} ∈ X_N^▷` (strict floor on `k2`).
    pub fn check_k1k2_membership(&self, k1: usize, k2: usize, sign: Sign) -> Result<bool> {
        self.check_k1k2_membership_with(k1, k2, sign, RoundingKind::StrictFloor)
    }

    pub fn check_k1k2_membership_with(
        &self,
        k1: usize,
        k2: usize,
        sign: Sign,
        k2_rounding: RoundingKind,
    ) -> Result<bool> {
        Ok(self.in_polar(&self.two_level_multiplier(k1, k2, sign, k2_rounding)?))
    }

    /// Parses `"8,8,8,8"` or `"primes>8:n=4"`.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for QSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(rest) = t.strip_prefix("primes>8:") {
            let n = rest
                .strip_prefix("n=")
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| Error::input(format!("expected primes>8:n=<count>, got {s:?}")))?;
            return socle_example(n);
        }
        let qs = t
            .split(',')
            .map(|q| {
                q.parse::<u64>()
                    .map_err(|_| Error::input(format!("bad q-sequence term {q:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        QSeq::new(qs)
    }
}

impl fmt::Display for QSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.qs.iter().map(|q| q.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Hull of `X_N` computed in `Z_{b_N}`, as residues `0..b_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedHull {
    pub modulus: u64,
    pub x: Vec<u64>,
    pub hull: Vec<u64>,
    pub evaluations: u128,
}

impl TruncatedHull {
    pub fn equal(&self) -> bool {
        self.hull == self.x
    }

    /// Hull members outside `X_N`.
    pub fn witnesses(&self) -> Vec<u64> {
        self.hull
            .iter()
            .filter(|r| self.x.binary_search(r).is_err())
            .copied()
            .collect()
    }

    pub fn angle(&self, residue: u64) -> Angle {
        Angle::new(residue, self.modulus).expect("modulus is positive")
    }
}

/// `X_N` embedded in `Z_{b_N}` by `1/b_n -> b_N / b_n`.
pub fn embedded_x(q: &QSeq) -> Result<(u64, Vec<u64>)> {
    let modulus = q
        .last_b()
        .to_u64()
        .ok_or_else(|| Error::input(format!("b_N = {} does not fit in 64 bits", q.last_b())))?;
    let mut x = vec![0];
    for b in q.bs() {
        let r = (q.last_b() / b).to_u64().expect("divides b_N");
        x.push(r % modulus);
        x.push((modulus - r) % modulus);
    }
    x.sort_unstable();
    x.dedup();
    Ok((modulus, x))
}

/// `Q(X_N)` by brute force over the characters of `Z_{b_N}`.
pub fn truncated_hull(q: &QSeq, budget: u128) -> Result<TruncatedHull> {
    let x_len = 2 * q.qs().len() as u128 + 1;
    let (modulus, x) = match embedded_x(q) {
        Ok(v) => v,
        Err(_) => {
            let required = q
                .last_b()
                .to_u128()
                .map_or(u128::MAX, |b| b.saturating_mul(x_len));
            return Err(Error::Budget { required, budget });
        }
    };
    let group = FiniteAbelianGroup::cyclic(modulus)?;
    let elements = x
        .iter()
        .map(|&r| group.element(&[r as i64]))
        .collect::<Result<Vec<_>>>()?;
    let (hull, evaluations) = group.qc_hull_with_budget(&elements, budget)?;
    Ok(TruncatedHull {
        modulus,
        hull: hull.iter().map(|e| e.coords()[0]).collect(),
        x,
        evaluations,
    })
}

/// Largest `N` such that the hull of the first `N + 1` terms fits in `budget`.
pub fn max_feasible_depth(q: &QSeq, budget: u128) -> Result<Option<usize>> {
    let mut best = None;
    for n in 0..=q.depth() {
        match truncated_hull(&q.prefix(n)?, budget) {
            Ok(_) => best = Some(n),
            Err(Error::Budget { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(best)
}

/// Hull member together with its standard coefficients along `b_0 | ... | b_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormWitness {
    pub residue: u64,
    pub angle: Angle,
    pub coeffs: Vec<BigInt>,
}

/// Outcome of checking that every hull member has coefficients in `{-1, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormCheck {
    /// `q_{k+1} >= 4` whenever `q_k = 7`.
    pub hypothesis_satisfied: bool,
    pub holds: bool,
    /// Hull members with a coefficient of modulus at least 2.
    pub witnesses: Vec<FormWitness>,
    pub hull: TruncatedHull,
}

/// Expresses each member of `Q(X_N)` in standard form along `b_0 | ... | b_N`.
///
/// Runs regardless of the hypothesis and reports what it observes.
pub fn check_signed_digit_form(q: &QSeq, budget: u128) -> Result<FormCheck> {
    let hull = truncated_hull(q, budget)?;
    let chain = q.chain();
    let one = BigInt::one();
    let witnesses: Vec<FormWitness> = hull
        .hull
        .iter()
        .filter_map(|&r| {
            let angle = hull.angle(r);
            let rep = standard_rep(&angle, &chain);
            debug_assert!(rep.residual().is_zero());
            let bad = rep.coeffs().iter().any(|c| c > &one || c < &-&one);
            bad.then(|| FormWitness {
                residue: r,
                angle,
                coeffs: rep.coeffs().to_vec(),
            })
        })
        .collect();
    Ok(FormCheck {
        hypothesis_satisfied: q.sevens_followed_by_four(),
        holds: witnesses.is_empty(),
        witnesses,
        hull,
    })
}

/// `([q1/4]/q1 + ⌊q2/4⌋/q2)(1 - S)`, floor-bracket on `q1` and strict floor on `q2`.
pub fn estimate_lhs(q1: u64, q2: u64, s: &Rational) -> Result<Rational> {
    if q1 < 2 || q2 < 2 {
        return Err(Error::input("q1 and q2 must be at least 2"));
    }
    let term = |q: u64, kind| {
        let qr = Rational::from_integer(BigInt::from(q));
        Rational::from_integer(round(&(&qr / Rational::from_integer(4.into())), kind)) / qr
    };
    let sum = term(q1, RoundingKind::FloorBracket) + term(q2, RoundingKind::StrictFloor);
    Ok(sum * (Rational::one() - s))
}

/// Whether the two-level estimate `lhs <= 1/4` holds.
pub fn estimate_inequality(q1: u64, q2: u64, s: &Rational) -> Result<bool> {
    Ok(estimate_lhs(q1, q2, s)? <= Rational::new(1.into(), 4.into()))
}

/// One line of the small-`q` sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub qs: Vec<u64>,
    pub modulus: u64,
    pub x_size: usize,
    pub hull_size: usize,
    pub equal: bool,
    pub form_hypothesis: bool,
    pub form_holds: bool,
}

/// Truncated hulls for every sequence in `[qmin, qmax]^len`, in lexicographic order.
///
/// Exploratory: for `q_n < 8` there is no guarantee that the hull equals `X_N`.
pub fn sweep(qmin: u64, qmax: u64, len: usize, budget: u128) -> Result<Vec<SweepRow>> {
    if qmin < 2 || qmin > qmax || len == 0 {
        return Err(Error::input("sweep needs 2 <= qmin <= qmax and len >= 1"));
    }
    let mut rows = Vec::new();
    let mut qs = vec![qmin; len];
    loop {
        let q = QSeq::new(qs.clone())?;
        let form = check_signed_digit_form(&q, budget)?;
        rows.push(SweepRow {
            qs: qs.clone(),
            modulus: form.hull.modulus,
            x_size: form.hull.x.len(),
            hull_size: form.hull.hull.len(),
            equal: form.hull.equal(),
            form_hypothesis: form.hypothesis_satisfied,
            form_holds: form.holds,
        });
        // odometer over [qmin, qmax]^len
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(rows);
            }
            i -= 1;
            if qs[i] < qmax {
                qs[i] += 1;
                break;
            }
            qs[i] = qmin;
        }
    }
}

/// Whether the angle `x` lies in the truncated hull.
pub fn hull_contains(hull: &TruncatedHull, x: &Angle) -> bool {
    let m = BigInt::from(hull.modulus);
    if !(&m % x.denom()).is_zero() {
        return false;
    }
    let r = (x.value() * Rational::from_integer(m.clone())).to_integer();
    let r = ((r % &m) + &m) % &m;
    hull.hull
        .binary_search(&r.to_u64().expect("reduced mod u64"))
        .is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(qs: &[u64]) -> QSeq {
        QSeq::new(qs.to_vec()).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn products_and_x_set() {
        let q = seq(&[8, 9, 10]);
        assert_eq!(q.bs(), &[big(8), big(72), big(720)]);
        assert_eq!(q.b_before(0), big(1));
        assert_eq!(q.x_set().len(), 7);
        assert!(q.x_set().iter().all(|x| (big(720) % x.denom()).is_zero()));
        assert_eq!(seq(&[2, 2]).x_set().len(), 4);
        assert!(QSeq::new(vec![]).is_err());
        assert!(QSeq::new(vec![8, 1]).is_err());
    }

    #[test]
    fn parse_formats() {
        assert_eq!("8, 8,8".parse::<QSeq>().unwrap(), seq(&[8, 8, 8]));
        assert_eq!("primes>8:n=2".parse::<QSeq>().unwrap(), seq(&[11, 13]));
        assert!("8,x".parse::<QSeq>().is_err());
        assert!("primes>8:n=".parse::<QSeq>().is_err());
    }

    #[test]
    fn eta_multipliers() {
        assert_eq!(seq(&[8, 8]).eta(0).unwrap(), big(1));
        assert_eq!(seq(&[8, 8]).eta(1).unwrap(), big(8));
        assert_eq!(seq(&[8, 8, 8]).eta(2).unwrap(), big(64));
        assert_eq!(seq(&[8, 8, 8]).eta(3).unwrap(), big(512));
        assert!(seq(&[8, 8]).eta(3).is_err());
    }

    #[test]
    fn eta_membership_examples() {
        assert!(seq(&[8, 8, 8, 8])
            .check_etak_membership(1, &big(2))
            .unwrap());
        assert!(seq(&[8, 8]).check_etak_membership(1, &big(7)).unwrap());
        assert!(!seq(&[8, 8]).check_etak_membership(1, &big(3)).unwrap());
    }

    #[test]
    fn two_level_examples() {
        let q = seq(&[8, 8, 8]);
        assert_eq!(
            q.two_level_multiplier(0, 1, Sign::Plus, RoundingKind::StrictFloor)
                .unwrap(),
            big(10)
        );
        assert!(q.check_k1k2_membership(0, 1, Sign::Plus).unwrap());
        assert!(q.check_k1k2_membership(0, 2, Sign::Minus).unwrap());
        // With [.] on k2 the multiplier is 2 + 2*8 = 18 and 18/64 > 1/4.
        assert!(!q
            .check_k1k2_membership_with(0, 1, Sign::Plus, RoundingKind::FloorBracket)
            .unwrap());
        assert!(q.check_k1k2_membership(1, 1, Sign::Plus).is_err());
        assert!(q.check_k1k2_membership(0, 3, Sign::Plus).is_err());
    }

    #[test]
    fn small_truncated_hulls() {
        let h = truncated_hull(&seq(&[8, 8]), DEFAULT_BUDGET).unwrap();
        assert_eq!(h.modulus, 64);
        assert_eq!(h.hull, vec![0, 1, 8, 56, 63]);
        assert!(h.equal());
        assert!(hull_contains(&h, &Angle::new(-1, 8).unwrap()));
        assert!(!hull_contains(&h, &Angle::new(1, 4).unwrap()));
        assert!(!hull_contains(&h, &Angle::new(1, 3).unwrap()));
    }

    #[test]
    fn budget_errors() {
        let q = seq(&[8, 8, 8, 8]);
        assert!(matches!(
            truncated_hull(&q, 1000),
            Err(Error::Budget { .. })
        ));
        // depth 1 costs 64 * 5 + 64 * 21 = 1664 evaluations
        assert_eq!(max_feasible_depth(&q, 2000).unwrap(), Some(1));
        assert_eq!(max_feasible_depth(&q, 1000).unwrap(), Some(0));
        assert_eq!(max_feasible_depth(&q, DEFAULT_BUDGET).unwrap(), Some(3));
        let huge = QSeq::new(vec![1 << 20; 4]).unwrap();
        assert!(matches!(
            truncated_hull(&huge, DEFAULT_BUDGET),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn estimate_examples() {
        let seventh = Rational::new(1.into(), 7.into());
        assert_eq!(
            estimate_lhs(8, 8, &seventh).unwrap(),
            Rational::new(9.into(), 28.into())
        );
        assert!(!estimate_inequality(8, 8, &seventh).unwrap());
        assert!(!estimate_inequality(8, 1_000_003, &seventh).unwrap());
        assert!(estimate_inequality(2, 2, &Rational::one()).unwrap());
        assert!(estimate_inequality(1, 2, &seventh).is_err());
    }

    #[test]
    fn sevens_hypothesis() {
        assert!(seq(&[7, 4, 8]).sevens_followed_by_four());
        assert!(!seq(&[7, 3]).sevens_followed_by_four());
        assert!(seq(&[8, 7]).sevens_followed_by_four());
    }

    #[test]
    fn sweep_is_lexicographic() {
        let rows = sweep(2, 3, 2, DEFAULT_BUDGET).unwrap();
        let qs: Vec<Vec<u64>> = rows.iter().map(|r| r.qs.clone()).collect();
        assert_eq!(qs, vec![vec![2, 2], vec![2, 3], vec![3, 2], vec![3, 3]]);
        assert!(sweep(3, 2, 2, DEFAULT_BUDGET).is_err());
    }
}
