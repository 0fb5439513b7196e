//! Hulls of {0} ∪ {±1/b_n} in the circle, checked at finite depth.

use num_bigint::BigInt;
use qconvex::angle::parse_rational;
use qconvex::circleseq::{
    check_signed_digit_form, estimate_lhs, max_feasible_depth, truncated_hull, QSeq, Sign,
    DEFAULT_BUDGET,
};

fn main() -> qconvex::Result<()> {
    for s in ["8,8,8,8", "8,9,10,11", "2,2,2", "3,3"] {
        let q: QSeq = s.parse()?;
        let h = truncated_hull(&q, DEFAULT_BUDGET)?;
        println!(
            "qs = {s:<10} b_N = {:<5} |X| = {} |hull| = {:<3} equal = {} ({} evaluations)",
            h.modulus,
            h.x.len(),
            h.hull.len(),
            h.equal(),
            h.evaluations
        );
    }

    for s in ["7,4,8", "7,3"] {
        let form = check_signed_digit_form(&s.parse()?, DEFAULT_BUDGET)?;
        print!("{s}: coefficients in {{-1,0,1}}: {}", form.holds);
        if !form.hypothesis_satisfied {
            print!(" (hypothesis not satisfied)");
        }
        println!();
        for w in &form.witnesses {
            println!("  {} has coefficients {:?}", w.angle, w.coeffs);
        }
    }

    let q: QSeq = "8,8,8,8".parse()?;
    println!("eta_2 = {}", q.eta(2)?);
    println!(
        "2 eta_1 in polar: {}",
        q.check_etak_membership(1, &BigInt::from(2))?
    );
    println!(
        "[8/4]eta_0 - ⌊8/4⌋eta_2 in polar: {}",
        q.check_k1k2_membership(0, 2, Sign::Minus)?
    );
    println!(
        "estimate at (8,8) with S = 1/7: {}",
        estimate_lhs(8, 8, &parse_rational("1/7")?)?
    );

    let long: QSeq = "primes>8:n=6".parse()?;
    println!(
        "{long}: largest depth within budget {:?}",
        max_feasible_depth(&long, DEFAULT_BUDGET)?
    );
    Ok(())
}
