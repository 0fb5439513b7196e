//! Bounded compact abelian groups `Z_{m_1}^{κ_1} x ... x Z_{m_l}^{κ_l}` described
//! symbolically, and the decision whether they admit a non-trivial
//! quasi-convex null sequence.
//!
//! Such a group admits none exactly when `2G` or `3G` is finite. Under the
//! product presentation `pZ_m ≅ Z_{m/gcd(p,m)}`, so the test reduces to
//! multiplicity bookkeeping. Only finiteness of a multiplicity matters, so
//! every infinite cardinal is collapsed into [`Multiplicity::Infinite`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Multiplicity {
    Finite(u64),
    Infinite,
}

impl Multiplicity {
    pub fn is_infinite(self) -> bool {
        matches!(self, Multiplicity::Infinite)
    }

    fn merge(self, other: Multiplicity) -> Multiplicity {
        match (self, other) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => Multiplicity::Finite(a + b),
            _ => Multiplicity::Infinite,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(k) => write!(f, "{k}"),
            Multiplicity::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Multiplicity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "inf" | "infinite" | "omega" | "w" => Ok(Multiplicity::Infinite),
            _ if t == "ω" || t == "∞" => Ok(Multiplicity::Infinite),
            _ => t
                .parse()
                .map(Multiplicity::Finite)
                .map_err(|_| Error::input(format!("bad multiplicity {t:?}"))),
        }
    }
}

/// Product of cyclic factors with merged multiplicities, keyed by order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymbolicGroup {
    factors: BTreeMap<u64, Multiplicity>,
}

impl SymbolicGroup {
    /// Merges repeated orders and drops zero multiplicities.
    pub fn new(factors: impl IntoIterator<Item = (u64, Multiplicity)>) -> Result<Self> {
        let mut map: BTreeMap<u64, Multiplicity> = BTreeMap::new();
        for (m, k) in factors {
            if m < 2 {
                return Err(Error::input(format!(
                    "cyclic factor of order {m}; orders must be >= 2"
                )));
            }
            if k == Multiplicity::Finite(0) {
                continue;
            }
            let merged = map.get(&m).map_or(k, |&old| old.merge(k));
            map.insert(m, merged);
        }
        Ok(SymbolicGroup { factors: map })
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, Multiplicity)> + '_ {
        self.factors.iter().map(|(&m, &k)| (m, k))
    }

    pub fn multiplicity(&self, order: u64) -> Multiplicity {
        self.factors
            .get(&order)
            .copied()
            .unwrap_or(Multiplicity::Finite(0))
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// `pG`, factor by factor: `(m, κ) -> (m / gcd(p, m), κ)`, dropping trivial factors.
    pub fn multiply(&self, p: u64) -> Result<SymbolicGroup> {
        if p < 2 {
            return Err(Error::input("multiplier must be at least 2"));
        }
        let mapped = self
            .factors()
            .map(|(m, k)| (m / p.gcd(&m), k))
            .filter(|&(m, _)| m > 1);
        SymbolicGroup::new(mapped)
    }

    pub fn is_finite(&self) -> bool {
        self.factors.values().all(|k| !k.is_infinite())
    }

    /// Orders carrying infinite multiplicity, ascending.
    pub fn infinite_orders(&self) -> Vec<u64> {
        self.factors()
            .filter(|(_, k)| k.is_infinite())
            .map(|(m, _)| m)
            .collect()
    }

    /// The factors with finite multiplicity.
    pub fn finite_part(&self) -> SymbolicGroup {
        SymbolicGroup {
            factors: self
                .factors
                .iter()
                .filter(|(_, k)| !k.is_infinite())
                .map(|(&m, &k)| (m, k))
                .collect(),
        }
    }

    /// Concrete finite group, available only when every multiplicity is finite.
    pub fn to_finite_group(&self) -> Result<FiniteAbelianGroup> {
        let mut moduli = Vec::new();
        for (m, k) in self.factors() {
            match k {
                Multiplicity::Finite(k) => moduli.extend(std::iter::repeat_n(m, k as usize)),
                Multiplicity::Infinite => {
                    return Err(Error::NotApplicable(format!(
                        "Z{m}^inf is not a finite group"
                    )))
                }
            }
        }
        FiniteAbelianGroup::new(moduli)
    }
}

impl fmt::Display for SymbolicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (m, k)) in self.factors().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            match k {
                Multiplicity::Finite(1) => write!(f, "Z{m}")?,
                _ => write!(f, "Z{m}^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for SymbolicGroup {
    type Err = Error;

    /// `"Z2^inf x Z5^3"`; `Z5` means one copy, `1` is the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "1" || t == "0" || t.eq_ignore_ascii_case("trivial") {
            return Ok(SymbolicGroup::default());
        }
        let mut factors = Vec::new();
        for factor in t.split(['x', 'X', '×', '*']) {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('Z')
                .or_else(|| factor.strip_prefix('z'))
                .ok_or_else(|| {
                    Error::input(format!("expected a factor like Z4^inf, got {factor:?}"))
                })?
                .trim_start_matches('_');
            let (m, k) = match body.split_once('^') {
                Some((m, k)) => (m.trim(), k.parse()?),
                None => (body.trim(), Multiplicity::Finite(1)),
            };
            let m: u64 = m
                .parse()
                .map_err(|_| Error::input(format!("bad cyclic order in {factor:?}")))?;
            factors.push((m, k));
        }
        SymbolicGroup::new(factors)
    }
}

/// Which class of groups the input is asserted to belong to.
///
/// This only changes the justification printed with a verdict; the
/// computation is the same for every class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GroupClass {
    #[default]
    Compact,
    Minimal,
    TotallyMinimal,
    OmegaBounded,
}

impl GroupClass {
    pub fn criterion(self) -> &'static str {
        match self {
            GroupClass::Compact => "bounded compact: none iff 2G or 3G is finite",
            GroupClass::Minimal => "bounded minimal: none iff 2G or 3G is finite",
            GroupClass::TotallyMinimal => "bounded totally minimal: none iff 2G or 3G is finite",
            GroupClass::OmegaBounded => "bounded omega-bounded: none iff 2G or 3G is finite",
        }
    }
}

/// Where a positive verdict's witness comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessSource {
    /// An infinite power `Z_m^ω` with `m >= 4`.
    LargeFactor,
    /// `Z_2^ω x Z_3^ω ≅ Z_6^ω`.
    TwoThreeMixing,
}

/// A closed subgroup `E^ω` with `exp E >= 4`, carrying the sequence `y e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub order: u64,
    pub source: WitnessSource,
    pub e: FiniteAbelianGroup,
    /// Element of `E` of order `exp E`.
    pub y: GroupElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// No non-trivial quasi-convex null sequence; `G ≅ Z_p^κ x F` with `F` finite.
    No {
        prime: u64,
        kappa: Multiplicity,
        finite: SymbolicGroup,
    },
    /// A non-trivial quasi-convex null sequence exists.
    Yes { witness: Witness },
}

impl Verdict {
    pub fn admits(&self) -> bool {
        matches!(self, Verdict::Yes { .. })
    }

    /// Rebuilds `Z_p^κ x F` for a negative verdict.
    pub fn normal_form(&self) -> Option<SymbolicGroup> {
        match self {
            Verdict::No {
                prime,
                kappa,
                finite,
            } => {
                let extra = std::iter::once((*prime, *kappa));
                SymbolicGroup::new(finite.factors().chain(extra)).ok()
            }
            Verdict::Yes { .. } => None,
        }
    }
}

pub fn admits_qc_null_sequence(g: &SymbolicGroup) -> Verdict {
    let two_finite = g.multiply(2).expect("2 >= 2").is_finite();
    let three_finite = g.multiply(3).expect("3 >= 2").is_finite();
    if two_finite || three_finite {
        let prime = if two_finite { 2 } else { 3 };
        let kappa = if g.multiplicity(prime).is_infinite() {
            Multiplicity::Infinite
        } else {
            Multiplicity::Finite(0)
        };
        return Verdict::No {
            prime,
            kappa,
            finite: g.finite_part(),
        };
    }
    let infinite = g.infinite_orders();
    let large = infinite.iter().copied().find(|&m| m >= 4);
    let mixing = infinite.contains(&2) && infinite.contains(&3);
    let witness = match (large, mixing) {
        (Some(m), false) => large_witness(m),
        (Some(m), true) if m <= 6 => large_witness(m),
        (_, true) => Witness {
            order: 6,
            source: WitnessSource::TwoThreeMixing,
            e: FiniteAbelianGroup::new(vec![2, 3]).expect("valid"),
            y: GroupElement::from_coords(vec![1, 1]),
        },
        (None, false) => {
            unreachable!("2G and 3G infinite force a factor of order >= 4 or both 2 and 3")
        }
    };
    Verdict::Yes { witness }
}

fn large_witness(m: u64) -> Witness {
    Witness {
        order: m,
        source: WitnessSource::LargeFactor,
        e: FiniteAbelianGroup::cyclic(m).expect("m >= 4"),
        y: GroupElement::from_coords(vec![1]),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub group: SymbolicGroup,
    pub class: GroupClass,
    pub verdict: Verdict,
}

impl Classification {
    pub fn criterion(&self) -> &'static str {
        self.class.criterion()
    }
}

pub fn classify(g: &SymbolicGroup, class: GroupClass) -> Classification {
    Classification {
        group: g.clone(),
        class,
        verdict: admits_qc_null_sequence(g),
    }
}

/// `K ≅ F x E^ω`: `E` takes one copy of each infinitely repeated order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerDecomposition {
    pub finite: SymbolicGroup,
    pub e: FiniteAbelianGroup,
}

impl PowerDecomposition {
    pub fn exponent(&self) -> u64 {
        self.e.exponent()
    }

    pub fn exponent_at_least_four(&self) -> bool {
        self.exponent() >= 4
    }
}

pub fn split_power(g: &SymbolicGroup) -> Result<PowerDecomposition> {
    let orders = g.infinite_orders();
    if orders.is_empty() {
        return Err(Error::NotApplicable(format!("{g} has no infinite power")));
    }
    Ok(PowerDecomposition {
        finite: g.finite_part(),
        e: FiniteAbelianGroup::new(orders)?,
    })
}

/// The elements `x_k = (0; 0, ..., 0, y, 0, ..., 0)`, `y` in the `k`-th copy of `E`,
/// inside `F x E^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerFamily {
    pub group: FiniteAbelianGroup,
    pub elements: Vec<GroupElement>,
}

impl PowerFamily {
    /// `{0} ∪ {±x_k}` in canonical order.
    pub fn symmetric_set(&self) -> Vec<GroupElement> {
        let mut s = vec![self.group.zero()];
        for x in &self.elements {
            s.push(x.clone());
            s.push(self.group.neg(x));
        }
        crate::group::canonical(&s)
    }

    pub fn is_independent(&self) -> Result<bool> {
        self.group.is_independent(&self.elements)
    }

    pub fn is_quasi_convex(&self) -> Result<bool> {
        self.group.is_quasi_convex(&self.symmetric_set())
    }
}

pub fn power_family(
    f: &FiniteAbelianGroup,
    e: &FiniteAbelianGroup,
    y: &GroupElement,
    n: usize,
) -> Result<PowerFamily> {
    if n == 0 {
        return Err(Error::input("depth must be at least 1"));
    }
    if !e.contains(y) {
        return Err(Error::input(format!("{y} is not an element of {e}")));
    }
    let oy = e.element_order(y);
    if oy != e.exponent() {
        return Err(Error::hypothesis(
            None,
            format!("order of y is {oy}, not the exponent {} of E", e.exponent()),
        ));
    }
    if oy < 4 {
        return Err(Error::hypothesis(
            None,
            format!("exponent of E is {oy} < 4"),
        ));
    }
    let group = f.product(&e.power(n)?)?;
    let (fr, er) = (f.rank(), e.rank());
    let elements = (0..n)
        .map(|k| {
            let mut coords = vec![0; group.rank()];
            coords[fr + k * er..fr + (k + 1) * er].copy_from_slice(y.coords());
            GroupElement::from_coords(coords)
        })
        .collect();
    Ok(PowerFamily { group, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Multiplicity::{Finite, Infinite};

    fn sg(s: &str) -> SymbolicGroup {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_merging() {
        let g = sg("Z2^inf x Z5^3 x Z5 x z2^4");
        assert_eq!(g.multiplicity(2), Infinite);
        assert_eq!(g.multiplicity(5), Finite(4));
        assert_eq!(g.to_string(), "Z2^inf x Z5^4");
        assert_eq!(sg("Z4^ω").multiplicity(4), Infinite);
        assert_eq!(sg("Z7^0"), SymbolicGroup::default());
        assert!("Z1^3".parse::<SymbolicGroup>().is_err());
        assert!("Z4^x".parse::<SymbolicGroup>().is_err());
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(sg("Z2^inf x Z5^3").multiply(2).unwrap(), sg("Z5^3"));
        assert_eq!(sg("Z4^inf").multiply(2).unwrap(), sg("Z2^inf"));
        assert_eq!(sg("Z9^2").multiply(3).unwrap(), sg("Z3^2"));
        assert!(sg("Z9^2").multiply(1).is_err());
    }

    #[test]
    fn finiteness() {
        assert!(sg("Z5^3").is_finite());
        assert!(!sg("Z2^inf").is_finite());
        assert!(SymbolicGroup::default().is_finite());
    }

    #[test]
    fn verdict_examples() {
        let v = admits_qc_null_sequence(&sg("Z2^inf x Z5^3"));
        assert_eq!(
            v,
            Verdict::No {
                prime: 2,
                kappa: Infinite,
                finite: sg("Z5^3")
            }
        );
        assert_eq!(v.normal_form().unwrap(), sg("Z2^inf x Z5^3"));

        match admits_qc_null_sequence(&sg("Z4^inf")) {
            Verdict::Yes { witness } => {
                assert_eq!(witness.order, 4);
                assert_eq!(witness.source, WitnessSource::LargeFactor);
            }
            other => panic!("{other:?}"),
        }
        match admits_qc_null_sequence(&sg("Z2^inf x Z3^inf")) {
            Verdict::Yes { witness } => {
                assert_eq!(witness.order, 6);
                assert_eq!(witness.source, WitnessSource::TwoThreeMixing);
                assert_eq!(witness.e.moduli(), &[2, 3]);
            }
            other => panic!("{other:?}"),
        }
        // the smaller candidate wins
        match admits_qc_null_sequence(&sg("Z2^inf x Z3^inf x Z8^inf")) {
            Verdict::Yes { witness } => assert_eq!(witness.order, 6),
            other => panic!("{other:?}"),
        }
        assert!(!admits_qc_null_sequence(&sg("Z3^inf x Z9^2")).admits());
        assert!(!admits_qc_null_sequence(&SymbolicGroup::default()).admits());
    }

    #[test]
    fn split_examples() {
        let d = split_power(&sg("Z4^inf x Z5^2")).unwrap();
        assert_eq!(d.finite, sg("Z5^2"));
        assert_eq!(d.e.moduli(), &[4]);
        assert!(d.exponent_at_least_four());
        let d = split_power(&sg("Z2^inf")).unwrap();
        assert_eq!(d.exponent(), 2);
        assert!(!d.exponent_at_least_four());
        let d = split_power(&sg("Z2^inf x Z3^inf")).unwrap();
        assert_eq!(d.exponent(), 6);
        assert!(matches!(
            split_power(&sg("Z5^3")),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn power_family_examples() {
        let f = FiniteAbelianGroup::cyclic(5).unwrap();
        let e = FiniteAbelianGroup::cyclic(4).unwrap();
        let y = e.element(&[1]).unwrap();
        let fam = power_family(&f, &e, &y, 3).unwrap();
        assert_eq!(fam.group.order(), 320);
        assert_eq!(fam.elements.len(), 3);
        assert!(fam.is_independent().unwrap());
        assert!(fam.is_quasi_convex().unwrap());

        let z8 = FiniteAbelianGroup::cyclic(8).unwrap();
        let fam = power_family(
            &FiniteAbelianGroup::trivial(),
            &z8,
            &z8.element(&[1]).unwrap(),
            2,
        )
        .unwrap();
        assert_eq!(fam.group.order(), 64);
        assert!(fam.is_independent().unwrap());
        assert!(fam.is_quasi_convex().unwrap());

        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        assert!(matches!(
            power_family(&f, &z2, &z2.element(&[1]).unwrap(), 2),
            Err(Error::Hypothesis { .. })
        ));
        // 2 has order 2 in Z4, not the exponent
        assert!(matches!(
            power_family(&f, &e, &e.element(&[2]).unwrap(), 2),
            Err(Error::Hypothesis { .. })
        ));
    }
}
