//! Exact arithmetic in the torsion of the circle group.
//!
//! Run with `cargo run --example angles`.

use qconvex::angle::{parse_rational, round, RoundingKind};
use qconvex::Angle;

fn main() -> qconvex::Result<()> {
    let a: Angle = "5/8".parse()?;
    let b = Angle::new(-3, 4)?;
    println!("5/8 reduces to {a}, -3/4 reduces to {b}");
    println!("{a} + {b} = {}", &a + &b);
    println!("-1/2 is stored as {}", Angle::new(-1, 2)?);

    // T_m = {x : |x| <= 1/(4m)} is also the set of x with kx in T_+ for k = 1..m.
    let x = Angle::new(1, 20)?;
    for m in 1..=6 {
        println!("{x} in T_{m}: {}", x.in_tm(m));
    }

    for s in ["2", "9/4"] {
        let v = parse_rational(s)?;
        println!(
            "{s}: strict ceiling {}, [x] {}, strict floor {}",
            round(&v, RoundingKind::StrictCeiling),
            round(&v, RoundingKind::FloorBracket),
            round(&v, RoundingKind::StrictFloor)
        );
    }
    Ok(())
}
