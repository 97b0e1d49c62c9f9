//! Relations as projections in M (x) N^op, and functions as unital normal
//! *-homomorphisms in the opposite direction.

use qrelkit::corr::{
    classical_pullback, morphism_to_relation, projection_to_relation, pushforward_check,
    relation_to_morphism, relation_to_projection, support_image_check,
};
use qrelkit::numlin::Tolerance;
use qrelkit::qset::QuantumSet;
use qrelkit::random::{random_morphism_into, random_relation};
use qrelkit::states::random_algebra_projection;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qrelkit::Result<()> {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2);

    let x = QuantumSet::from_dims(&[1, 2])?;
    let y = QuantumSet::from_dims(&[2])?;
    let r = random_relation(&x, &y, 0.0, &mut rng);
    let p = relation_to_projection(&r);
    println!("projection of a random relation has rank {}", p.rank());
    let back = projection_to_relation(p.element(), &x, &y, tol)?;
    println!(
        "relation -> projection -> relation residual {:.1e}",
        back.eq_residual(&r)?
    );

    // f : {0, 1} -> {0, 1, 2}, f(0) = 2, f(1) = 0, seen as pullback of functions.
    let two = QuantumSet::classical(2)?;
    let three = QuantumSet::classical(3)?;
    let f = classical_pullback(&two, &three, &[2, 0])?;
    let graph = morphism_to_relation(&f, tol)?;
    println!("graph of f = {:?}", graph.to_bool_matrix());

    // A *-homomorphism l^inf(Y) -> l^inf(W) embedding both blocks of Y
    // into one three-dimensional atom.
    let y = QuantumSet::from_dims(&[1, 2])?;
    let (w, psi) = random_morphism_into(&y, &[vec![1, 1]], &mut rng)?;
    let g = morphism_to_relation(&psi, tol)?;
    println!(
        "W has atom dims {:?}; its relation is a function: {}",
        w.dims(),
        g.is_function(tol)?
    );
    let psi_back = relation_to_morphism(&g, tol)?;
    let err = (psi_back.map().matrix() - psi.map().matrix()).norm();
    println!("morphism -> relation -> morphism error {err:.1e}");

    // Pushing a relation forward along two functions.
    let (_, psi_r) = random_morphism_into(&y, &[vec![0, 1], vec![1, 0]], &mut rng)?;
    let r = random_relation(&y, &y, 0.3, &mut rng);
    let push = pushforward_check(&psi, &psi_r, &r, tol)?;
    println!(
        "pushforward agrees with the projection picture: {} ({:.1e})",
        push.holds, push.residual
    );

    let q = random_algebra_projection(psi.source(), true, &mut rng);
    let support = support_image_check(&psi, &q, tol)?;
    println!(
        "support of the image: {} ({:.1e})",
        support.holds, support.residual
    );
    Ok(())
}
