//! Which monoids are groups? The support projection of the counit and the
//! antipode equations give the same answer as searching the table.

use qrelkit::builders::{curated_tables, function_algebra};
use qrelkit::dqm::{one_sided_solvability, solve_antipode, vaes_group_check};
use qrelkit::numlin::Tolerance;

fn main() -> qrelkit::Result<()> {
    let tol = Tolerance::default();
    println!(
        "{:<20} {:>6} {:>8} {:>9} {:>10}",
        "table", "size", "support", "antipode", "one-sided"
    );
    for (name, t) in curated_tables() {
        let q = function_algebra(&t);
        let vaes = vaes_group_check(&q, tol)?;
        let antipode = solve_antipode(&q, tol).is_ok();
        let sides = one_sided_solvability(&q, tol);
        println!(
            "{:<20} {:>6} {:>8} {:>9} {:>10}",
            name,
            t.size(),
            vaes.is_group,
            antipode,
            format!("{}/{}", sides.left, sides.right)
        );
    }
    Ok(())
}
