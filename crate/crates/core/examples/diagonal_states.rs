//! Diagonal states on M (x) M^op: the diagonal projection, its defining
//! orthogonality, and the decomposition into traces of products.

use qrelkit::numlin::Tolerance;
use qrelkit::qset::{ell_infty, QuantumSet};
use qrelkit::states::{
    decompose_diagonal_state, diagonal_orthogonality_defect, diagonal_projection,
    diagonal_state_from_weights, is_nondegenerate_diagonal, random_algebra_projection,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qrelkit::Result<()> {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m = ell_infty(&QuantumSet::from_dims(&[1, 2, 3])?);

    let delta = diagonal_projection(&m);
    println!("delta_M has rank {} (one per block)", delta.rank());

    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let p = random_algebra_projection(&m, false, &mut rng);
        worst = worst.max(diagonal_orthogonality_defect(&m, &p));
    }
    println!("max |delta_M (p (x) (1 - p))| over 50 projections: {worst:.1e}");
    println!(
        "(p (x) p) delta_M != 0 for 50 samples: {}",
        is_nondegenerate_diagonal(&m, 50, &mut rng, tol)
    );

    let weights = [0.5, 0.3, 0.2];
    let phi = diagonal_state_from_weights(&m, &weights, tol)?;
    let found = decompose_diagonal_state(&phi, &m, tol)?;
    println!("weights in {weights:?}, recovered {:?}", found.weights);
    Ok(())
}
