mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use qconvex::angle::{round, RoundingKind};
use qconvex::circleseq::{truncated_hull, QSeq, DEFAULT_BUDGET};
use qconvex::{Angle, FiniteAbelianGroup, Rational};

use common::{from_lib, to_lib, Oracle};

fn angle() -> impl Strategy<Value = Angle> {
    (1i64..=500).prop_flat_map(|d| (-3 * d..=3 * d).prop_map(move |n| Angle::new(n, d).unwrap()))
}

fn rational() -> impl Strategy<Value = Rational> {
    (1i64..=60, -500i64..=500).prop_map(|(d, n)| Rational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn angles_form_a_group(a in angle(), b in angle(), c in angle()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a + &Angle::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
        let half = Rational::new(1.into(), 2.into());
        prop_assert!(a.value() > &-&half && a.value() <= &half);
    }

    #[test]
    fn tm_is_the_prepolar_of_one_to_m(a in angle(), m in 1u64..=20) {
        let by_multiples = (1..=m as i64).all(|k| a.scale_i64(k).in_t_plus());
        prop_assert_eq!(a.in_tm(m), by_multiples);
        // closed arc |a| <= 1/(4m)
        prop_assert_eq!(a.in_tm(m), a.abs() * Rational::from_integer((4 * m).into()) <= Rational::from_integer(1.into()));
    }

    #[test]
    fn roundings_are_ordered(x in rational()) {
        let sf = round(&x, RoundingKind::StrictFloor);
        let fb = round(&x, RoundingKind::FloorBracket);
        let sc = round(&x, RoundingKind::StrictCeiling);
        prop_assert!(Rational::from_integer(sf.clone()) < x);
        prop_assert!(Rational::from_integer(fb.clone()) <= x);
        prop_assert!(x < Rational::from_integer(sc.clone()));
        if x.is_integer() {
            prop_assert_eq!(&sf + 1, fb.clone());
            prop_assert_eq!(&fb + 1, sc);
        } else {
            prop_assert_eq!(sf, fb.clone());
            prop_assert_eq!(fb + 1, sc);
        }
    }

    #[test]
    fn scaling_matches_repeated_addition(a in angle(), m in -40i64..=40) {
        let mut acc = Angle::zero();
        for _ in 0..m.unsigned_abs() {
            acc = &acc + &a;
        }
        if m < 0 {
            acc = -acc;
        }
        prop_assert_eq!(a.scale(&BigInt::from(m)), acc);
    }
}

fn group_and_set() -> impl Strategy<Value = (Vec<u64>, Vec<Vec<u64>>)> {
    prop::collection::vec(2u64..=7, 1..=3).prop_flat_map(|moduli| {
        let elem = moduli.iter().map(|&m| 0..m).collect::<Vec<_>>();
        (Just(moduli), prop::collection::vec(elem, 0..=4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn hull_matches_oracle_and_axioms((moduli, set) in group_and_set()) {
        let g = FiniteAbelianGroup::new(moduli.clone()).unwrap();
        let o = Oracle::new(&moduli);
        let e = to_lib(&g, &set);
        let hull = g.qc_hull(&e).unwrap();
        prop_assert_eq!(from_lib(&hull), o.hull(&set));
        prop_assert!(e.iter().all(|x| hull.contains(x)));
        prop_assert_eq!(g.qc_hull(&hull).unwrap(), hull.clone());
        prop_assert!(hull.contains(&g.zero()));
        prop_assert!(hull.iter().all(|x| hull.contains(&g.neg(x))));
    }

    #[test]
    fn truncated_hull_contains_x_and_restricts_to_prefixes(qs in prop::collection::vec(2u64..=9, 1..=4)) {
        let q = QSeq::new(qs.clone()).unwrap();
        let long = truncated_hull(&q, DEFAULT_BUDGET).unwrap();
        prop_assert!(long.x.iter().all(|r| long.hull.binary_search(r).is_ok()));
        if qs.iter().all(|&x| x >= 8) {
            prop_assert!(long.equal());
        }
        for n in 0..q.depth() {
            let short = truncated_hull(&q.prefix(n).unwrap(), DEFAULT_BUDGET).unwrap();
            // Z_{b_n} sits in Z_{b_N} as the multiples of b_N / b_n.
            let step = long.modulus / short.modulus;
            let meet: Vec<u64> = long.hull.iter().filter(|&&r| r % step == 0).map(|r| r / step).collect();
            prop_assert_eq!(short.hull, meet);
        }
    }
}
