//! Quantum relations: composition, dagger, order and functions, first on
//! classical sets and then on a quantum set with a two-dimensional atom.

use qrelkit::numlin::{matrix_unit, OperatorSubspace, Tolerance};
use qrelkit::qrel::QRelation;
use qrelkit::qset::QuantumSet;
use qrelkit::random::random_relation;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qrelkit::Result<()> {
    let tol = Tolerance::default();

    // "less than" on {0, 1, 2}
    let three = QuantumSet::classical(3)?;
    let lt: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i < j).collect()).collect();
    let r = QRelation::from_bool_matrix(&three, &three, &lt)?;
    let rr = r.after(&r, tol)?;
    println!("lt . lt = {:?}", rr.to_bool_matrix());
    println!("lt . lt <= lt: {}", rr.leq(&r, tol)?);
    println!("lt is a function: {}", r.is_function(tol)?);

    // A quantum set with atoms of dimension 1 and 2.
    let x = QuantumSet::from_dims(&[1, 2])?;
    let id = QRelation::identity(&x);
    let top = QRelation::top(&x, &x);
    let (below, above) = top.function_residuals(tol)?;
    println!("identity is a function: {}", id.is_function(tol)?);
    println!("top: R.R^dag <= id misses by {below:.3}, id <= R^dag.R misses by {above:.3}");

    // A relation on the 2-dimensional atom spanned by one matrix unit.
    let e12 = OperatorSubspace::scalar_multiples(&matrix_unit(2, 2, 0, 1), tol);
    let nil = QRelation::new(x.clone(), x.clone(), vec![((1, 1), e12)])?;
    let square = nil.after(&nil, tol)?;
    println!(
        "span(E12) composed with itself has {} nonzero components",
        square.components().filter(|(_, s)| !s.is_zero()).count()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let s = random_relation(&x, &x, 0.2, &mut rng);
    let dd = s.dagger().dagger();
    println!(
        "random relation: dagger is an involution (residual {:.1e})",
        dd.eq_residual(&s)?
    );
    let joined = s.join(&id, tol)?;
    println!("s <= s v id: {}", s.leq(&joined, tol)?);
    Ok(())
}
