//! Polars, prepolars and quasi-convex hulls in a finite abelian group.

use qconvex::FiniteAbelianGroup;

fn main() -> qconvex::Result<()> {
    let g: FiniteAbelianGroup = "Z4 x Z4".parse()?;
    let x = g.parse_set("(0,0),(1,0),(3,0),(0,1),(0,3)")?;
    let polar = g.polar(&x)?;
    println!("{g}: |polar| = {}", polar.len());
    let hull = g.prepolar(&polar)?;
    println!("hull = {}", join(&hull));
    println!("{{0, ±e1, ±e2}} quasi-convex: {}", g.is_quasi_convex(&x)?);

    // Order-2 generators give no such luck: the hull is the whole group.
    let k: FiniteAbelianGroup = "Z2 x Z2".parse()?;
    let y = k.parse_set("(0,0),(1,0),(0,1)")?;
    println!("{k}: hull of {} = {}", join(&y), join(&k.qc_hull(&y)?));

    // In exponent 2 or 3 every hull is the generated subgroup.
    let z3: FiniteAbelianGroup = "Z3^3".parse()?;
    let e = z3.parse_set("(0,0,0),(1,1,0)")?;
    println!(
        "{z3}: hull {} = span {}",
        join(&z3.qc_hull(&e)?),
        join(&z3.generated_subgroup(&e)?)
    );

    let big: FiniteAbelianGroup = "Z8 x Z9 x Z10".parse()?;
    let f = big.parse_set("(1,0,0),(0,1,0),(0,0,1)")?;
    println!("independent in {big}: {}", big.is_independent(&f)?);
    match big.qc_hull_with_budget(&f, 1000) {
        Ok(_) => println!("fits"),
        Err(e) => println!("{e}"),
    }
    Ok(())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
