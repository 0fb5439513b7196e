//! Seeded property suites behind `qconvex verify`.
//!
//! Every suite draws from its own ChaCha stream derived from the seed, so
//! a suite's cases do not depend on which suites ran before it.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::angle::{round, Angle, RoundingKind};
use crate::circleseq::{
    check_signed_digit_form, leading_hypotheses, standard_rep, truncated_hull, DivChain, QSeq,
    Sign, DEFAULT_BUDGET,
};
use crate::classify::{
    admits_qc_null_sequence, power_family, Multiplicity, SymbolicGroup, Verdict,
};
use crate::error::Result;
use crate::group::{canonical, FiniteAbelianGroup, GroupElement, Subgroup};
use crate::Rational;

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// First failing case, if any.
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

type Suite = fn(&mut ChaCha8Rng, usize) -> Result<Tally>;

const SUITES: [(&str, Suite); 12] = [
    ("angle axioms", angle_axioms),
    ("hull axioms", hull_axioms),
    ("exponent 2/3 collapse", exponent_collapse),
    ("subgroup restriction", subgroup_restriction),
    ("independent sets", independent_sets),
    ("power family", power_families),
    ("leading coefficient", leading_coefficient),
    ("eta multiples", eta_multiples),
    ("two-level characters", two_level),
    ("signed-digit form", signed_digit_form),
    ("truncation at 8,8,8,8", truncation_8888),
    ("classifier exhaustive", classifier_exhaustive),
];

/// Suite names in the order they run.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs every suite with `cases` random cases each (fixed suites ignore it).
pub fn run_all(seed: u64, cases: usize) -> Vec<CheckResult> {
    SUITES
        .iter()
        .enumerate()
        .map(|(i, (name, suite))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            match suite(&mut rng, cases) {
                Ok(t) => CheckResult {
                    name,
                    cases: t.cases,
                    failures: t.failures,
                    witness: t.witness,
                },
                Err(e) => CheckResult {
                    name,
                    cases: 0,
                    failures: 1,
                    witness: Some(format!("error: {e}")),
                },
            }
        })
        .collect()
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    witness: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }
}

fn random_angle(rng: &mut ChaCha8Rng) -> Angle {
    let den: i64 = rng.gen_range(1..=1000);
    let num: i64 = rng.gen_range(-2 * den..=2 * den);
    Angle::new(num, den).expect("den > 0")
}

/// Random product of cyclic groups with moduli in `lo..=hi` and order at most `max_order`.
fn random_group(rng: &mut ChaCha8Rng, lo: u64, hi: u64, max_order: u64) -> FiniteAbelianGroup {
    let mut moduli = vec![rng.gen_range(lo..=hi.min(max_order))];
    let mut order = moduli[0];
    for _ in 0..rng.gen_range(0..4) {
        let m = rng.gen_range(lo..=hi);
        if order * m > max_order {
            break;
        }
        order *= m;
        moduli.push(m);
    }
    FiniteAbelianGroup::new(moduli).expect("moduli >= 2")
}

fn random_element(rng: &mut ChaCha8Rng, g: &FiniteAbelianGroup) -> GroupElement {
    g.element_at(rng.gen_range(0..g.order()))
}

fn random_subset(rng: &mut ChaCha8Rng, g: &FiniteAbelianGroup, size: usize) -> Vec<GroupElement> {
    let mut s: Vec<GroupElement> = (0..size).map(|_| random_element(rng, g)).collect();
    s.push(g.zero());
    canonical(&s)
}

fn show(xs: &[GroupElement]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn is_subset(a: &[GroupElement], b: &[GroupElement]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn angle_axioms(rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let half = Rational::new(1.into(), 2.into());
    for _ in 0..cases {
        let (a, b, c) = (random_angle(rng), random_angle(rng), random_angle(rng));
        let m: i64 = rng.gen_range(-64..=64);
        let tm: u64 = rng.gen_range(1..=12);
        let assoc = &(&a + &b) + &c == &a + &(&b + &c);
        let comm = &a + &b == &b + &a;
        let ident = &a + &Angle::zero() == a;
        let inverse = (&a + &(-&a)).is_zero();
        let range = a.value() > &-&half && a.value() <= &half;
        let iterated = (0..m.unsigned_abs()).fold(Angle::zero(), |acc, _| &acc + &a);
        let iterated = if m < 0 { -iterated } else { iterated };
        let scale = a.scale_i64(m) == iterated;
        let tm_ok = a.in_tm(tm) == (1..=tm as i64).all(|k| a.scale_i64(k).in_t_plus());
        t.record(
            assoc && comm && ident && inverse && range && scale && tm_ok,
            || format!("a={a} b={b} c={c} m={m} T_{tm}"),
        );
    }
    Ok(t)
}

fn hull_axioms(rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..cases {
        let g = random_group(rng, 2, 12, 200);
        let n = rng.gen_range(0..5);
        let e = random_subset(rng, &g, n);
        let extra = rng.gen_range(1..4);
        let mut f = random_subset(rng, &g, extra);
        f.extend(e.iter().cloned());
        let f = canonical(&f);
        let he = g.qc_hull(&e)?;
        let hf = g.qc_hull(&f)?;
        let extensive = is_subset(&e, &he);
        let idempotent = g.qc_hull(&he)? == he;
        let monotone = is_subset(&he, &hf);
        let symmetric = he.iter().all(|x| he.binary_search(&g.neg(x)).is_ok());
        let full_polar = g.polar(&[g.zero()])?.len() as u64 == g.order();
        t.record(
            extensive && idempotent && monotone && symmetric && full_polar,
            || format!("G={g} E={{{}}} F={{{}}}", show(&e), show(&f)),
        );
    }
    Ok(t)
}

fn exponent_collapse(rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for i in 0..cases {
        let g = if i % 2 == 0 {
            FiniteAbelianGroup::cyclic(2)?.power(rng.gen_range(1..=10))?
        } else {
            FiniteAbelianGroup::cyclic(3)?.power(rng.gen_range(1..=6))?
        };
        let n = rng.gen_range(0..=4);
        let e = random_subset(rng, &g, n);
        let hull = g.qc_hull(&e)?;
        let span = canonical(&g.generated_subgroup(&e)?);
        t.record(hull == span, || format!("G={g} E={{{}}}", show(&e)));
    }
    Ok(t)
}

fn subgroup_restriction(rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..cases {
        let g = random_group(rng, 2, 10, 300);
        let k = rng.gen_range(1..=2);
        let gens: Vec<GroupElement> = (0..k).map(|_| random_element(rng, &g)).collect();
        let h = Subgroup::generated(&g, &gens)?;
        let members = h.elements();
        let size = rng.gen_range(0..=3);
        let mut s: Vec<GroupElement> = (0..size)
            .map(|_| members.choose(rng).expect("0 in H").clone())
            .collect();
        s.push(g.zero());
        let s = canonical(&s);
        let in_h = h.qc_hull(&s)?;
        let in_g = g.qc_hull(&s)?;
        let meet: Vec<GroupElement> = in_g.iter().filter(|x| h.contains(x)).cloned().collect();
        t.record(in_h == meet && in_h == in_g, || {
            format!("G={g} H=<{}> S={{{}}}", show(&gens), show(&s))
        });
    }
    Ok(t)
}

/// Greedily grows an independent tuple of elements of order at least 4.
fn random_independent(
    rng: &mut ChaCha8Rng,
    g: &FiniteAbelianGroup,
    target: usize,
) -> Result<Vec<GroupElement>> {
    let mut fs = Vec::new();
    for _ in 0..50 {
        if fs.len() == target {
            break;
        }
        let x = random_element(rng, g);
        if g.element_order(&x) < 4 {
            continue;
        }
        fs.push(x);
        if !g.is_independent(&fs)? {
            fs.pop();
        }
    }
    Ok(fs)
}

fn symmetric(g: &FiniteAbelianGroup, fs: &[GroupElement]) -> Vec<GroupElement> {
    let mut s = vec![g.zero()];
    for f in fs {
        s.push(f.clone());
        s.push(g.neg(f));
    }
    canonical(&s)
}

fn independent_sets(rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally> {
    let mut t = Tally::default();
    while t.cases < cases {
        let g = random_group(rng, 4, 16, 5000);
        let target = rng.gen_range(1..=3);
        let fs = random_independent(rng, &g, target)?;
        if fs.is_empty() {
            continue;
        }
        let x = symmetric(&g, &fs);
        let ok = g.is_quasi_convex(&x)?;
        t.record(ok, || format!("G={g} f={}", show(&fs)));
    }
    let g = FiniteAbelianGroup::new(vec![2, 2])?;
    let x = symmetric(&g, &[g.unit(0), g.unit(1)]);
    let whole = g.qc_hull(&x)?.len() as u64 == g.order();
    t.record(whole, || {
        "Z2 x Z2: hull of {0,(1,0),(0,1)} is not the whole group".into()
    });
    Ok(t)
}

fn power_families(rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let mut fixed = vec![];
    for n in 1..=3 {
        fixed.push((
            FiniteAbelianGroup::cyclic(5)?,
            FiniteAbelianGroup::cyclic(4)?,
            n,
        ));
    }
    fixed.push((
        FiniteAbelianGroup::trivial(),
        FiniteAbelianGroup::cyclic(8)?,
        2,
    ));
    for _ in 0..cases / 20 {
        let e = FiniteAbelianGroup::cyclic(rng.gen_range(4..=8))?;
        let f = random_group(rng, 2, 6, 12);
        fixed.push((f, e, rng.gen_range(1..=2)));
    }
    for (f, e, n) in fixed {
        let y = e.unit(0);
        let fam = power_family(&f, &e, &y, n)?;
        let ok = fam.is_independent()? && fam.is_quasi_convex()?;
        t.record(ok, || format!("F={f} E={e} n={n}"));
    }
    Ok(t)
}

fn random_chain(
    rng: &mut ChaCha8Rng,
    first: std::ops::RangeInclusive<u64>,
    len: usize,
) -> DivChain {
    let mut d = vec![rng.gen_range(first)];
    for _ in 1..len {
        let last = *d.last().expect("non-empty");
        d.push(last * rng.gen_range(2..=6));
    }
    DivChain::from_u64(&d).expect("proper multiples")
}

fn leading_coefficient(rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let one = BigInt::from(1);
    for _ in 0..cases {
        let len = rng.gen_range(1..=3);
        let chain = random_chain(rng, 2..=40, len);
        let dk = chain.last().clone();
        let d0 = chain.terms()[0].clone();
        let mut bad = None;
        let mut j = BigInt::from(0);
        while j < dk {
            let z = Angle::from_rational(&Rational::new(j.clone(), dk.clone()));
            if leading_hypotheses(&z, &d0).any() {
                let c0 = standard_rep(&z, &chain).coeffs()[0].clone();
                if c0 > one || c0 < -&one {
                    bad.get_or_insert(format!("chain={chain} z={z} c0={c0}"));
                }
            }
            j += 1;
        }
        t.record(bad.is_none(), || bad.unwrap_or_default());
    }
    Ok(t)
}

fn random_qseq(rng: &mut ChaCha8Rng, lo: u64, hi: u64, max_len: usize) -> QSeq {
    let len = rng.gen_range(1..=max_len);
    QSeq::new((0..len).map(|_| rng.gen_range(lo..=hi)).collect()).expect("q >= 2")
}

fn eta_multiples(rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..cases {
        let q = random_qseq(rng, 4, 64, 7);
        let mut ok = true;
        let mut bad = String::new();
        for k in 0..=q.depth() {
            let qk = q.qs()[k];
            let quarter = round(
                &Rational::new(qk.into(), 4.into()),
                RoundingKind::FloorBracket,
            );
            let mut ms: Vec<BigInt> = num_iter(&quarter);
            if k < q.depth() && q.qs()[k + 1] >= 4 {
                ms.push(BigInt::from(qk - 1));
            }
            for m in ms {
                if !q.check_etak_membership(k, &m)? {
                    ok = false;
                    bad = format!("qs={q} k={k} m={m}");
                }
            }
        }
        t.record(ok, || bad);
    }
    Ok(t)
}

fn num_iter(upto: &BigInt) -> Vec<BigInt> {
    let mut v = Vec::new();
    let mut m = BigInt::from(1);
    while &m <= upto {
        v.push(m.clone());
        m += 1;
    }
    v
}

fn two_level(rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..cases {
        let q = random_qseq(rng, 4, 64, 7);
        let mut ok = true;
        let mut bad = String::new();
        for k2 in 1..=q.depth() {
            for k1 in 0..k2 {
                for sign in [Sign::Plus, Sign::Minus] {
                    if !q.check_k1k2_membership(k1, k2, sign)? {
                        ok = false;
                        bad = format!("qs={q} k1={k1} k2={k2} {sign:?}");
                    }
                }
            }
        }
        t.record(ok, || bad);
    }
    Ok(t)
}

fn signed_digit_form(rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let mut seqs = vec![QSeq::new(vec![7, 4, 8])?];
    while seqs.len() < 1 + cases / 4 {
        let q = random_qseq(rng, 2, 12, 4);
        if q.sevens_followed_by_four() && q.last_b() <= &BigInt::from(1500) {
            seqs.push(q);
        }
    }
    for q in seqs {
        let form = check_signed_digit_form(&q, DEFAULT_BUDGET)?;
        t.record(form.holds, || {
            let w = &form.witnesses[0];
            format!(
                "qs={q} hull member {} has coefficients {:?}",
                w.angle, w.coeffs
            )
        });
    }
    Ok(t)
}

fn truncation_8888(_: &mut ChaCha8Rng, _: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let h = truncated_hull(&QSeq::new(vec![8, 8, 8, 8])?, DEFAULT_BUDGET)?;
    t.record(h.equal() && h.hull.len() == 9, || {
        format!(
            "hull has {} elements, extra residues {:?}",
            h.hull.len(),
            h.witnesses()
        )
    });
    Ok(t)
}

/// Every symbolic group with at most 4 distinct orders in `2..=12` and
/// multiplicities in `{1, 2, inf}`.
pub fn small_symbolic_groups() -> Vec<SymbolicGroup> {
    let orders: Vec<u64> = (2..=12).collect();
    let classes = [
        Multiplicity::Finite(1),
        Multiplicity::Finite(2),
        Multiplicity::Infinite,
    ];
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1 << orders.len()) {
        let chosen: Vec<u64> = (0..orders.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| orders[i])
            .collect();
        if chosen.len() > 4 {
            continue;
        }
        let combos = 3usize.pow(chosen.len() as u32);
        for mut c in 0..combos {
            let factors: Vec<(u64, Multiplicity)> = chosen
                .iter()
                .map(|&m| {
                    let k = classes[c % 3];
                    c /= 3;
                    (m, k)
                })
                .collect();
            let g = SymbolicGroup::new(factors).expect("orders >= 2");
            if seen.insert(g.to_string()) {
                out.push(g);
            }
        }
    }
    out
}

fn classifier_exhaustive(_: &mut ChaCha8Rng, _: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for g in small_symbolic_groups() {
        let inf = g.infinite_orders();
        let expected_no = inf.iter().all(|&m| m == 2) || inf.iter().all(|&m| m == 3);
        let via_multiply = g.multiply(2)?.is_finite() || g.multiply(3)?.is_finite();
        let verdict = admits_qc_null_sequence(&g);
        let consistent = match &verdict {
            Verdict::No { .. } => verdict.normal_form().as_ref() == Some(&g),
            Verdict::Yes { witness } => {
                witness.e.exponent() >= 4 && witness.e.element_order(&witness.y) == witness.order
            }
        };
        let ok = verdict.admits() != expected_no && expected_no == via_multiply && consistent;
        t.record(ok, || format!("G={g} verdict={verdict:?}"));
    }
    Ok(t)
}
