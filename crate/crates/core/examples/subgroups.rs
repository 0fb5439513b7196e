//! Hulls computed inside a subgroup agree with hulls in the ambient group.

use qconvex::{FiniteAbelianGroup, Homomorphism, Subgroup};

fn main() -> qconvex::Result<()> {
    let g: FiniteAbelianGroup = "Z12 x Z6".parse()?;
    let h = Subgroup::generated(&g, &g.parse_set("(2,0),(0,3)")?)?;
    println!(
        "H = <(2,0),(0,3)> has {} elements and {} characters",
        h.order(),
        h.dual_order()
    );

    let s = g.parse_set("(0,0),(2,0),(10,0)")?;
    let in_h = h.qc_hull(&s)?;
    let in_g = g.qc_hull(&s)?;
    println!("hull in H: {}", join(&in_h));
    println!("hull in G: {}", join(&in_g));
    println!("equal: {}", in_h == in_g);

    // Continuous homomorphisms map hulls into hulls.
    let z8: FiniteAbelianGroup = "Z8".parse()?;
    let double = Homomorphism::new(z8.clone(), z8.clone(), vec![vec![2]])?;
    let x = z8.parse_set("0,1,7")?;
    println!(
        "f(Q(X)) ⊆ Q(f(X)) for x -> 2x on Z8: {}",
        double.hull_image_check(&x)?
    );
    Ok(())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
