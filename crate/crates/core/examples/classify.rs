//! Which bounded compact groups admit non-trivial quasi-convex null sequences.

use qconvex::classify::{classify, power_family, split_power, GroupClass, SymbolicGroup, Verdict};
use qconvex::FiniteAbelianGroup;

fn main() -> qconvex::Result<()> {
    for s in [
        "Z2^inf x Z5^3",
        "Z3^inf x Z9^2",
        "Z4^inf",
        "Z2^inf x Z3^inf",
        "Z2^inf x Z3^inf x Z5^inf",
    ] {
        let g: SymbolicGroup = s.parse()?;
        let c = classify(&g, GroupClass::Compact);
        match &c.verdict {
            Verdict::No { .. } => println!(
                "{g}: none, normal form {}",
                c.verdict.normal_form().expect("no")
            ),
            Verdict::Yes { witness } => println!(
                "{g}: admits one, y = {} in E = {} repeated (orders {})",
                witness.y, witness.e, witness.order
            ),
        }
    }

    let d = split_power(&"Z4^inf x Z5^2".parse()?)?;
    println!("F = {}, E = {}, exp E = {}", d.finite, d.e, d.exponent());

    let f = FiniteAbelianGroup::cyclic(5)?;
    let e = FiniteAbelianGroup::cyclic(4)?;
    for n in 1..=3 {
        let fam = power_family(&f, &e, &e.unit(0), n)?;
        println!(
            "depth {n} in {}: independent {}, quasi-convex {}",
            fam.group,
            fam.is_independent()?,
            fam.is_quasi_convex()?
        );
    }
    Ok(())
}
