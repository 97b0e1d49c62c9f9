//! Evaluation and coevaluation relations and the zig-zag identity.

use qrelkit::numlin::Tolerance;
use qrelkit::qrel::{coev, ev, snake, QRelation};
use qrelkit::qset::QuantumSet;

fn main() -> qrelkit::Result<()> {
    let tol = Tolerance::default();
    let x = QuantumSet::from_dims(&[1, 2, 3])?;
    let e = ev(&x);
    println!(
        "ev : X* x X ({} atoms) -> 1 ({} atom)",
        e.dom().len(),
        e.cod().len()
    );
    let c = coev(&x);
    let nonzero = c.components().filter(|(_, s)| !s.is_zero()).count();
    println!("coev has {nonzero} nonzero components, one per atom of X");
    let s = snake(&x, tol)?;
    println!(
        "zig-zag differs from the identity by {:.1e}",
        s.eq_residual(&QRelation::identity(&x))?
    );
    Ok(())
}
