//! Reducing a real sequence with integer ratios >= 8 to the circle.

use qconvex::angle::parse_rational;
use qconvex::circleseq::{lift_to_reals, socle_example, truncated_hull, DEFAULT_BUDGET};

fn main() -> qconvex::Result<()> {
    let xs = ["3", "3/8", "1/24"]
        .iter()
        .map(|s| parse_rational(s))
        .collect::<qconvex::Result<Vec<_>>>()?;
    let r = lift_to_reals(&xs)?;
    println!(
        "alpha = {}, qs = {}, alpha x_n = 1/b_n: {}",
        r.alpha, r.qs, r.reciprocals_match
    );
    println!("sup |alpha y| = {}", r.sup_abs);
    println!(
        "hull equals X: {}",
        truncated_hull(&r.qs, DEFAULT_BUDGET)?.equal()
    );

    if let Err(e) = lift_to_reals(&[parse_rational("1")?, parse_rational("1/7")?]) {
        println!("{e}");
    }

    let socle = socle_example(3)?;
    let b: Vec<String> = socle.bs().iter().map(ToString::to_string).collect();
    println!("socle sequence {socle}, b = {}", b.join(","));
    println!(
        "hull equals X: {}",
        truncated_hull(&socle, DEFAULT_BUDGET)?.equal()
    );
    Ok(())
}
