//! The Kac-Paljutkin quantum group: four one-dimensional blocks and one
//! 2x2 block, neither commutative nor cocommutative.

use qrelkit::builders::kac_paljutkin;
use qrelkit::dqm::{check_monoid, is_kac, vaes_group_check};
use qrelkit::numlin::Tolerance;
use qrelkit::qset::AlgebraElement;

fn main() -> qrelkit::Result<()> {
    let tol = Tolerance::default();
    let q = kac_paljutkin();
    println!("atoms {:?}", q.qset().dims());

    // Not cocommutative: in Delta(a12) the e2 (x) a21 term has coefficient i
    // while a21 (x) e2 has -i. Blocks of M (x) M are indexed i * k + j.
    let alg = q.algebra();
    let k = alg.num_blocks();
    let a12 = AlgebraElement::matrix_unit(alg, alg.coordinate(4, 0, 1));
    let image = q.delta().apply(&a12);
    let left = image.block(k + 4);
    let right = image.block(4 * k + 1);
    println!("Delta(a12) on e2 (x) M2:\n{left:.3}");
    println!("Delta(a12) on M2 (x) e2:\n{right:.3}");

    let monoid = check_monoid(&q, tol);
    println!("monoid axioms hold: {}", monoid.iter().all(|c| c.verdict));
    println!("group: {}", vaes_group_check(&q, tol)?.is_group);
    println!("Kac: {}", is_kac(&q, tol)?.is_kac);
    Ok(())
}
