use qrelkit::builders::{group_algebra, regular_representation, symmetric_group_3, MonoidTable};
use qrelkit::dqm::check_monoid;
use qrelkit::numlin::{hs_norm, wedderburn_decompose, Tolerance};
use qrelkit::qrel::{coev, ev, snake, QRelation};
use qrelkit::qset::QuantumSet;
use qrelkit::random::random_qset;
use qrelkit::report::max_residual;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tol() -> Tolerance {
    Tolerance::default()
}

#[test]
fn snake_is_the_identity_on_random_quantum_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..20 {
        let x = random_qset(rng.gen_range(1..=4), 3, &mut rng);
        let s = snake(&x, tol()).unwrap();
        assert!(
            s.eq_residual(&QRelation::identity(&x)).unwrap() < 1e-9,
            "{:?}",
            x.dims()
        );
    }
}

#[test]
fn coevaluation_is_spanned_by_the_dual_basis_vector() {
    let x = QuantumSet::from_dims(&[3]).unwrap();
    let c = coev(&x);
    assert_eq!(c.components().count(), 1);
    let (_, sub) = c.components().next().unwrap();
    assert_eq!(sub.dim(), 1);
    // sum_i e_i (x) e_i as a 9 x 1 column, normalized
    let b = &sub.basis()[0];
    for k in 0..9 {
        let expected = if k % 4 == 0 { 1.0 / 3f64.sqrt() } else { 0.0 };
        assert!((b[(k, 0)].norm() - expected).abs() < 1e-12);
    }
    assert!(ev(&x).dagger().equals(&c, tol()).unwrap());
}

fn conjugacy_classes(t: &MonoidTable) -> usize {
    let n = t.size();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for g in 0..n {
        if seen[g] {
            continue;
        }
        classes += 1;
        for h in 0..n {
            let hinv = t.inverse(h).unwrap();
            seen[t.mul(t.mul(h, g), hinv)] = true;
        }
    }
    classes
}

#[test]
fn symmetric_group_algebra_has_blocks_one_one_two() {
    let t = symmetric_group_3();
    let classes = conjugacy_classes(&t);
    assert_eq!(classes, 3);
    let lambda = regular_representation(&t);
    let w = wedderburn_decompose(&lambda, &lambda[t.unit()], 3, tol()).unwrap();
    let mut dims = w.block_dims().to_vec();
    dims.sort_unstable();
    assert_eq!(dims.len(), classes);
    assert_eq!(dims.iter().map(|d| d * d).sum::<usize>(), t.size());
    assert_eq!(dims, vec![1, 1, 2]);
    // The block map is multiplicative on the group elements.
    for a in &lambda {
        for b in &lambda {
            let lhs = w.to_blocks(&(a * b));
            let (ba, bb) = (w.to_blocks(a), w.to_blocks(b));
            for k in 0..dims.len() {
                assert!(hs_norm(&(&lhs[k] - &ba[k] * &bb[k])) < 1e-9);
            }
        }
    }
    let q = group_algebra(&t, true, 3, tol()).unwrap();
    assert!(max_residual(&check_monoid(&q, tol())) < 1e-8);
}
