//! Finite abelian groups presented as products of cyclic groups.
//!
//! A group `Z_{m_1} x ... x Z_{m_k}` is self-dual: a character is a
//! coefficient tuple `c` acting by `x -> sum_i c_i x_i / m_i (mod 1)`. All
//! polar computations are exhaustive scans over the group or its dual in
//! mixed-radix order (first coordinate most significant), so every set
//! returned here is sorted in that canonical order.
//!
//! Character values are evaluated in units of `1/L` where `L` is the
//! exponent of the group, which keeps the inner loops in machine integers
//! while staying exact.

mod hom;
mod subgroup;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::error::{Error, Result};

pub use hom::Homomorphism;
pub use subgroup::Subgroup;

/// Residues per scan chunk handed to one rayon task.
const SCAN_CHUNK: u64 = 2048;

/// `Z_{m_1} x ... x Z_{m_k}`; the empty product is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
    order: u64,
    exponent: u64,
    /// `exponent / m_i`, the scale that turns `x_i / m_i` into units of `1/exponent`.
    weights: Vec<u64>,
}

/// Element of a [`FiniteAbelianGroup`], one reduced residue per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(Vec<u64>);

/// Character of a [`FiniteAbelianGroup`], given by its coefficient tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(Vec<u64>);

impl GroupElement {
    pub(crate) fn from_coords(coords: Vec<u64>) -> Self {
        GroupElement(coords)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl Character {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

fn fmt_tuple(f: &mut fmt::Formatter<'_>, xs: &[u64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

#[inline]
fn in_t_plus_units(v: u64, exponent: u64) -> bool {
    let d = v.min(exponent - v);
    4 * d as u128 <= exponent as u128
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        let mut order: u64 = 1;
        let mut exponent: u64 = 1;
        for &m in &moduli {
            if m < 2 {
                return Err(Error::input(format!(
                    "cyclic factor of order {m}; orders must be >= 2"
                )));
            }
            order = order
                .checked_mul(m)
                .ok_or_else(|| Error::input("group order does not fit in 64 bits"))?;
            exponent = exponent.lcm(&m);
        }
        let weights = moduli.iter().map(|m| exponent / m).collect();
        Ok(FiniteAbelianGroup {
            moduli,
            order,
            exponent,
            weights,
        })
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        Self::new(vec![m])
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new()).expect("empty product is valid")
    }

    /// Direct product, factors concatenated in order.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let mut moduli = self.moduli.clone();
        moduli.extend_from_slice(&other.moduli);
        Self::new(moduli)
    }

    /// `self^n`.
    pub fn power(&self, n: usize) -> Result<Self> {
        let mut moduli = Vec::with_capacity(self.moduli.len() * n);
        for _ in 0..n {
            moduli.extend_from_slice(&self.moduli);
        }
        Self::new(moduli)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Least `n >= 1` with `n x = 0` for every `x`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Builds an element, reducing every coordinate modulo its factor.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        self.reduce(coords).map(GroupElement)
    }

    /// Builds a character, reducing every coefficient modulo its factor.
    pub fn character(&self, coeffs: &[i64]) -> Result<Character> {
        self.reduce(coeffs).map(Character)
    }

    fn reduce(&self, xs: &[i64]) -> Result<Vec<u64>> {
        if xs.len() != self.rank() {
            return Err(Error::input(format!(
                "tuple of length {} in a group of rank {}",
                xs.len(),
                self.rank()
            )));
        }
        Ok(xs
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| x.rem_euclid(m as i64) as u64)
            .collect())
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    pub fn zero_character(&self) -> Character {
        Character(vec![0; self.rank()])
    }

    /// `e_i`, the generator of the `i`-th factor.
    pub fn unit(&self, i: usize) -> GroupElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        GroupElement(c)
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.0.len() == self.rank() && x.0.iter().zip(&self.moduli).all(|(c, m)| c < m)
    }

    fn check(&self, x: &GroupElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::input(format!("{x} is not an element of {self}")))
        }
    }

    fn check_character(&self, chi: &Character) -> Result<()> {
        let ok = chi.0.len() == self.rank() && chi.0.iter().zip(&self.moduli).all(|(c, m)| c < m);
        if ok {
            Ok(())
        } else {
            Err(Error::input(format!("{chi} is not a character of {self}")))
        }
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        GroupElement(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.moduli)
                .map(|((a, b), m)| (a + b) % m)
                .collect(),
        )
    }

    pub fn neg(&self, x: &GroupElement) -> GroupElement {
        GroupElement(
            x.0.iter()
                .zip(&self.moduli)
                .map(|(a, m)| (m - a) % m)
                .collect(),
        )
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, k: i64, x: &GroupElement) -> GroupElement {
        GroupElement(
            x.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &m)| {
                    let k = k.rem_euclid(m as i64) as u128;
                    ((k * a as u128) % m as u128) as u64
                })
                .collect(),
        )
    }

    /// Least `n >= 1` with `n x = 0`.
    pub fn element_order(&self, x: &GroupElement) -> u64 {
        x.0.iter()
            .zip(&self.moduli)
            .fold(1, |acc, (&c, &m)| acc.lcm(&(m / c.gcd(&m))))
    }

    /// Mixed-radix index, first coordinate most significant.
    pub fn index_of(&self, x: &GroupElement) -> u64 {
        x.0.iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&c, &m)| acc * m + c)
    }

    fn decode(&self, mut idx: u64) -> Vec<u64> {
        let mut coords = vec![0; self.rank()];
        for (c, &m) in coords.iter_mut().zip(&self.moduli).rev() {
            *c = idx % m;
            idx /= m;
        }
        coords
    }

    fn increment(&self, coords: &mut [u64]) {
        for (c, &m) in coords.iter_mut().zip(&self.moduli).rev() {
            *c += 1;
            if *c < m {
                return;
            }
            *c = 0;
        }
    }

    pub fn element_at(&self, idx: u64) -> GroupElement {
        GroupElement(self.decode(idx))
    }

    pub fn character_at(&self, idx: u64) -> Character {
        Character(self.decode(idx))
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(|i| self.element_at(i))
    }

    /// `chi(x)` as an exact angle.
    pub fn eval(&self, chi: &Character, x: &GroupElement) -> Result<Angle> {
        self.check_character(chi)?;
        self.check(x)?;
        Angle::new(self.eval_units(&chi.0, &x.0), self.exponent)
    }

    /// `chi(x)` in units of `1/exponent`, as a residue in `0..exponent`.
    fn eval_units(&self, c: &[u64], x: &[u64]) -> u64 {
        let l = self.exponent as u128;
        let mut acc: u128 = 0;
        for ((&ci, &xi), (&m, &w)) in c.iter().zip(x).zip(self.moduli.iter().zip(&self.weights)) {
            acc += ((ci as u128 * xi as u128) % m as u128) * w as u128;
        }
        (acc % l) as u64
    }

    /// `x_i * w_i mod L` for every coordinate; a character then evaluates as a dot product.
    fn scaled(&self, x: &[u64]) -> Vec<u64> {
        let l = self.exponent as u128;
        x.iter()
            .zip(&self.weights)
            .map(|(&xi, &w)| ((xi as u128 * w as u128) % l) as u64)
            .collect()
    }

    /// Exhaustive scan over all residue tuples, returning the indices that satisfy `keep`.
    /// The result does not depend on the rayon pool size.
    fn scan<F>(&self, keep: F) -> Vec<u64>
    where
        F: Fn(&[u64]) -> bool + Sync,
    {
        let chunks = self.order.div_ceil(SCAN_CHUNK);
        let parts: Vec<Vec<u64>> = (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let start = chunk * SCAN_CHUNK;
                let end = self.order.min(start + SCAN_CHUNK);
                let mut coords = self.decode(start);
                let mut out = Vec::new();
                for idx in start..end {
                    if keep(&coords) {
                        out.push(idx);
                    }
                    self.increment(&mut coords);
                }
                out
            })
            .collect();
        parts.concat()
    }

    fn all_in_t_plus(&self, c: &[u64], targets: &[Vec<u64>]) -> bool {
        let l = self.exponent as u128;
        targets.iter().all(|t| {
            let v = c
                .iter()
                .zip(t)
                .map(|(&a, &b)| a as u128 * b as u128)
                .sum::<u128>()
                % l;
            in_t_plus_units(v as u64, self.exponent)
        })
    }

    /// `E^▷`: the characters sending every element of `e` into `T_+`.
    pub fn polar(&self, e: &[GroupElement]) -> Result<Vec<Character>> {
        for x in e {
            self.check(x)?;
        }
        let targets: Vec<Vec<u64>> = e.iter().map(|x| self.scaled(&x.0)).collect();
        Ok(self
            .scan(|c| self.all_in_t_plus(c, &targets))
            .into_iter()
            .map(|i| self.character_at(i))
            .collect())
    }

    /// `A^◁`: the elements sent into `T_+` by every character of `a`.
    pub fn prepolar(&self, a: &[Character]) -> Result<Vec<GroupElement>> {
        for chi in a {
            self.check_character(chi)?;
        }
        let targets: Vec<Vec<u64>> = a.iter().map(|chi| self.scaled(&chi.0)).collect();
        Ok(self
            .scan(|x| self.all_in_t_plus(x, &targets))
            .into_iter()
            .map(|i| self.element_at(i))
            .collect())
    }

    /// Quasi-convex hull `E^▷◁`.
    pub fn qc_hull(&self, e: &[GroupElement]) -> Result<Vec<GroupElement>> {
        self.prepolar(&self.polar(e)?)
    }

    /// [`qc_hull`](Self::qc_hull) refusing to run past `budget` character evaluations.
    ///
    /// The cost is counted as `|G| * |E|` for the polar scan plus `|G| * |polar|`
    /// for the prepolar scan. Returns the hull and the evaluation count.
    pub fn qc_hull_with_budget(
        &self,
        e: &[GroupElement],
        budget: u128,
    ) -> Result<(Vec<GroupElement>, u128)> {
        let order = self.order as u128;
        let polar_cost = order * e.len() as u128;
        if polar_cost > budget {
            return Err(Error::Budget {
                required: polar_cost,
                budget,
            });
        }
        let polar = self.polar(e)?;
        let total = polar_cost + order * polar.len() as u128;
        if total > budget {
            return Err(Error::Budget {
                required: total,
                budget,
            });
        }
        Ok((self.prepolar(&polar)?, total))
    }

    pub fn is_quasi_convex(&self, e: &[GroupElement]) -> Result<bool> {
        let set = canonical(e);
        Ok(self.qc_hull(&set)? == set)
    }

    /// `<gens>`, listed in canonical order.
    pub fn generated_subgroup(&self, gens: &[GroupElement]) -> Result<Vec<GroupElement>> {
        for g in gens {
            self.check(g)?;
        }
        let mut members: Vec<GroupElement> = vec![self.zero()];
        let mut seen: HashSet<GroupElement> = members.iter().cloned().collect();
        for g in gens {
            // <H, g> is the union of the cosets H + k g up to the first k with k g in H.
            let base = members.clone();
            let mut kg = g.clone();
            while !seen.contains(&kg) {
                for h in &base {
                    let s = self.add(h, &kg);
                    if seen.insert(s.clone()) {
                        members.push(s);
                    }
                }
                kg = self.add(&kg, g);
            }
        }
        members.sort();
        Ok(members)
    }

    /// Whether `<f_1, ..., f_n>` is the internal direct sum `<f_1> + ... + <f_n>`.
    pub fn is_independent(&self, fs: &[GroupElement]) -> Result<bool> {
        let mut expected: u128 = 1;
        for f in fs {
            self.check(f)?;
            if f.is_zero() {
                return Err(Error::input(
                    "independent sets consist of non-zero elements",
                ));
            }
            expected *= self.element_order(f) as u128;
            if expected > self.order as u128 {
                return Ok(false);
            }
        }
        Ok(self.generated_subgroup(fs)?.len() as u128 == expected)
    }

    /// Parses a tuple such as `(1,0,3)`; a bare integer is accepted in rank 1.
    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        self.element(&parse_tuple(s)?)
    }

    pub fn parse_character(&self, s: &str) -> Result<Character> {
        self.character(&parse_tuple(s)?)
    }

    /// Parses a comma-separated list of tuples, e.g. `(0,0),(1,0),(3,0)`.
    pub fn parse_set(&self, s: &str) -> Result<Vec<GroupElement>> {
        split_tuples(s)?
            .iter()
            .map(|t| self.parse_element(t))
            .collect()
    }

    pub fn parse_character_set(&self, s: &str) -> Result<Vec<Character>> {
        split_tuples(s)?
            .iter()
            .map(|t| self.parse_character(t))
            .collect()
    }
}

/// Sorted, deduplicated copy of a set.
pub fn canonical<T: Ord + Clone>(xs: &[T]) -> Vec<T> {
    let mut v = xs.to_vec();
    v.sort();
    v.dedup();
    v
}

fn parse_tuple(s: &str) -> Result<Vec<i64>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(t)
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| Error::input(format!("bad coordinate {c:?} in {s:?}")))
        })
        .collect()
}

fn split_tuples(s: &str) -> Result<Vec<String>> {
    let s = s.trim();
    let s = s
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .unwrap_or(s)
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if !s.contains('(') {
        // rank-one shorthand: "0,1,3"
        return Ok(s.split(',').map(|x| x.trim().to_string()).collect());
    }
    let mut out = Vec::new();
    let mut rest = s;
    loop {
        rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(Error::input(format!("expected '(' in set {s:?}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::input(format!("unbalanced parenthesis in {s:?}")))?;
        out.push(rest[..=close].to_string());
        rest = &rest[close + 1..];
    }
    Ok(out)
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return f.write_str("1");
        }
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

impl FromStr for FiniteAbelianGroup {
    type Err = Error;

    /// `"Z4 x Z4 x Z5"`, case-insensitive; `Z4^3` repeats a factor; `1` is the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "1" || t == "0" || t.eq_ignore_ascii_case("trivial") {
            return Ok(Self::trivial());
        }
        let mut moduli = Vec::new();
        for factor in t.split(['x', 'X', '×', '*']) {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('Z')
                .or_else(|| factor.strip_prefix('z'))
                .ok_or_else(|| Error::input(format!("expected a factor like Z4, got {factor:?}")))?
                .trim()
                .trim_start_matches('_');
            let (m, k) = match body.split_once('^') {
                Some((m, k)) => (m.trim(), k.trim()),
                None => (body, "1"),
            };
            let m: u64 = m
                .parse()
                .map_err(|_| Error::input(format!("bad cyclic order in {factor:?}")))?;
            let k: usize = k
                .parse()
                .map_err(|_| Error::input(format!("bad exponent in {factor:?}")))?;
            moduli.extend(std::iter::repeat_n(m, k));
        }
        Self::new(moduli)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> FiniteAbelianGroup {
        s.parse().unwrap()
    }

    fn els(grp: &FiniteAbelianGroup, xs: &[&[i64]]) -> Vec<GroupElement> {
        xs.iter().map(|x| grp.element(x).unwrap()).collect()
    }

    fn chars(grp: &FiniteAbelianGroup, xs: &[&[i64]]) -> Vec<Character> {
        xs.iter().map(|x| grp.character(x).unwrap()).collect()
    }

    #[test]
    fn parse_groups() {
        assert_eq!(g("Z4 x Z4 x Z5").moduli(), &[4, 4, 5]);
        assert_eq!(g("  z4X z5 ").moduli(), &[4, 5]);
        assert_eq!(g("Z2^3 x Z3").moduli(), &[2, 2, 2, 3]);
        assert_eq!(g("1").order(), 1);
        assert!("Z1".parse::<FiniteAbelianGroup>().is_err());
        assert!("Q4".parse::<FiniteAbelianGroup>().is_err());
        assert_eq!(g("Z4 x Z6").to_string(), "Z4 x Z6");
        assert_eq!(g("Z4 x Z6").exponent(), 12);
    }

    #[test]
    fn evaluation() {
        let z4 = g("Z4");
        let one = z4.element(&[1]).unwrap();
        assert_eq!(
            z4.eval(&z4.character(&[1]).unwrap(), &one).unwrap(),
            Angle::new(1, 4).unwrap()
        );
        let z23 = g("Z2 x Z3");
        let v = z23
            .eval(
                &z23.character(&[1, 1]).unwrap(),
                &z23.element(&[1, 2]).unwrap(),
            )
            .unwrap();
        assert_eq!(v, Angle::new(1, 6).unwrap());
        assert!(z23
            .eval(&z23.zero_character(), &z23.element(&[1, 2]).unwrap())
            .unwrap()
            .is_zero());
        assert!(z23.eval(&z4.character(&[1]).unwrap(), &z23.zero()).is_err());
    }

    #[test]
    fn polar_examples() {
        let z4 = g("Z4");
        let e = els(&z4, &[&[0], &[1], &[-1]]);
        assert_eq!(z4.polar(&e).unwrap(), chars(&z4, &[&[0], &[1], &[3]]));
        assert_eq!(z4.polar(&[]).unwrap().len(), 4);
        assert_eq!(z4.polar(&els(&z4, &[&[0]])).unwrap().len(), 4);
        let z2 = g("Z2");
        assert_eq!(
            z2.polar(&els(&z2, &[&[0], &[1]])).unwrap(),
            chars(&z2, &[&[0]])
        );
    }

    #[test]
    fn prepolar_examples() {
        let z4 = g("Z4");
        assert_eq!(
            z4.prepolar(&chars(&z4, &[&[1]])).unwrap(),
            els(&z4, &[&[0], &[1], &[3]])
        );
        assert_eq!(z4.prepolar(&[]).unwrap().len(), 4);
        let z2 = g("Z2");
        assert_eq!(
            z2.prepolar(&chars(&z2, &[&[1]])).unwrap(),
            els(&z2, &[&[0]])
        );
    }

    #[test]
    fn hull_examples() {
        let v4 = g("Z2 x Z2");
        let e = els(&v4, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(v4.polar(&e).unwrap(), vec![v4.zero_character()]);
        assert_eq!(v4.qc_hull(&e).unwrap().len(), 4);
        assert!(!v4.is_quasi_convex(&e).unwrap());

        let z44 = g("Z4 x Z4");
        let x = els(&z44, &[&[0, 0], &[1, 0], &[3, 0], &[0, 1], &[0, 3]]);
        assert_eq!(z44.qc_hull(&x).unwrap(), canonical(&x));
        assert!(z44.is_quasi_convex(&x).unwrap());

        let z5 = g("Z5");
        assert_eq!(z5.qc_hull(&[z5.zero()]).unwrap(), vec![z5.zero()]);
        assert!(z5.is_quasi_convex(&[z5.zero()]).unwrap());
    }

    #[test]
    fn trivial_group() {
        let t = FiniteAbelianGroup::trivial();
        assert_eq!(t.order(), 1);
        assert_eq!(t.qc_hull(&[]).unwrap(), vec![t.zero()]);
        assert_eq!(t.polar(&[]).unwrap(), vec![t.zero_character()]);
        assert_eq!(t.element_order(&t.zero()), 1);
    }

    #[test]
    fn subgroups_and_orders() {
        let z8 = g("Z8");
        assert_eq!(
            z8.generated_subgroup(&els(&z8, &[&[2]])).unwrap(),
            els(&z8, &[&[0], &[2], &[4], &[6]])
        );
        let z23 = g("Z2 x Z3");
        assert_eq!(z23.element_order(&z23.element(&[1, 1]).unwrap()), 6);
        assert_eq!(z23.element_order(&z23.zero()), 1);
        assert_eq!(z23.generated_subgroup(&[]).unwrap(), vec![z23.zero()]);
    }

    #[test]
    fn independence() {
        let z44 = g("Z4 x Z4");
        assert!(z44.is_independent(&[z44.unit(0), z44.unit(1)]).unwrap());
        assert!(!z44.is_independent(&els(&z44, &[&[1, 0], &[2, 0]])).unwrap());
        let z23 = g("Z2 x Z3");
        assert!(z23.is_independent(&els(&z23, &[&[1, 1]])).unwrap());
        assert!(z23.is_independent(&[z23.zero()]).is_err());
        assert!(z44.is_independent(&[]).unwrap());
    }

    #[test]
    fn element_and_set_parsing() {
        let z44 = g("Z4 x Z4");
        let s = z44.parse_set("(0,0),(1,0), (3,0),(0,1),(0,-1)").unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s[4], z44.element(&[0, 3]).unwrap());
        assert!(z44.parse_set("(0,0),(1)").is_err());
        assert!(z44.parse_set("(0,0").is_err());
        let z8 = g("Z8");
        assert_eq!(z8.parse_set("0, 1, 7").unwrap().len(), 3);
        assert_eq!(z8.parse_set("").unwrap().len(), 0);
        assert_eq!(z44.element(&[1, 3]).unwrap().to_string(), "(1,3)");
    }

    #[test]
    fn budgeted_hull_reports_cost() {
        let z64 = g("Z64");
        let x = els(&z64, &[&[0], &[1], &[-1], &[8], &[-8]]);
        let (hull, cost) = z64.qc_hull_with_budget(&x, 1_000_000).unwrap();
        assert_eq!(hull, canonical(&x));
        assert!(cost >= 64 * 5);
        match z64.qc_hull_with_budget(&x, 100) {
            Err(Error::Budget { required, budget }) => {
                assert_eq!(required, 320);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn index_round_trip() {
        let grp = g("Z3 x Z4 x Z5");
        for (i, x) in grp.elements().enumerate() {
            assert_eq!(grp.index_of(&x), i as u64);
        }
    }
}
