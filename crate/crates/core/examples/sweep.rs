//! Exploratory: hulls for small q, where no equality is guaranteed.

use qconvex::circleseq::{sweep, DEFAULT_BUDGET};

fn main() -> qconvex::Result<()> {
    let rows = sweep(4, 7, 3, DEFAULT_BUDGET)?;
    let equal = rows.iter().filter(|r| r.equal).count();
    println!(
        "{equal} of {} sequences in [4,7]^3 have hull = X",
        rows.len()
    );
    for r in rows.iter().filter(|r| !r.equal) {
        println!(
            "{:?}: |X| = {}, |hull| = {}, signed digits {}",
            r.qs, r.x_size, r.hull_size, r.form_holds
        );
    }
    Ok(())
}
