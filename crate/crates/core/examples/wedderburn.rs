//! Block decomposition of the group algebra of S3 from its regular
//! representation, and the comultiplication carried over to the blocks.

use qrelkit::builders::{group_algebra, regular_representation, symmetric_group_3};
use qrelkit::dqm::check_monoid;
use qrelkit::numlin::{wedderburn_decompose, Tolerance};
use qrelkit::report::max_residual;

fn main() -> qrelkit::Result<()> {
    let tol = Tolerance::default();
    let t = symmetric_group_3();
    let lambda = regular_representation(&t);
    let w = wedderburn_decompose(&lambda, &lambda[t.unit()], 0, tol)?;
    println!(
        "blocks {:?} with multiplicities {:?}",
        w.block_dims(),
        w.multiplicities()
    );

    let q = group_algebra(&t, true, 0, tol)?;
    let checks = check_monoid(&q, tol);
    for c in &checks {
        println!("  {:<28} {:.1e}", c.name, c.residual);
    }
    println!("worst residual {:.1e}", max_residual(&checks));
    Ok(())
}
