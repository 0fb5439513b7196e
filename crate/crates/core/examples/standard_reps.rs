//! Standard representations along a divisibility chain.

use num_bigint::BigInt;
use qconvex::circleseq::{leading_hypotheses, standard_rep, support_bounds, DivChain, StdRep};
use qconvex::Angle;

fn main() -> qconvex::Result<()> {
    let chain: DivChain = "3,6".parse()?;
    let z = Angle::new(1, 6)?;
    let rep = standard_rep(&z, &chain);
    println!(
        "{z} along {chain}: {:?}, standard {}",
        rep.coeffs(),
        rep.is_standard()
    );
    let other = StdRep::from_parts(z, chain, vec![1.into(), (-1).into()])?;
    println!(
        "(1,-1) also sums to 1/6 but is standard: {}",
        other.is_standard()
    );

    let chain: DivChain = "8,64,512".parse()?;
    let x = Angle::new(57, 512)?;
    let rep = standard_rep(&x, &chain);
    println!(
        "{x} along {chain}: {:?}, support {:?}, S = {}",
        rep.coeffs(),
        rep.support(),
        rep.tail_bound()
    );
    let b = support_bounds(&rep, 0)?;
    println!(
        "{} <= |x| = {} <= {}: {}",
        b.lower,
        b.value,
        b.upper,
        b.holds()
    );

    for (z, d0) in [("1/7", 7), ("1/20", 10)] {
        let h = leading_hypotheses(&z.parse()?, &BigInt::from(d0));
        println!("z = {z}, d0 = {d0}: {h:?}");
    }
    Ok(())
}
