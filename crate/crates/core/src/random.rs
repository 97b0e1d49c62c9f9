//! Seeded random generators for matrices, quantum sets, relations and
//! morphisms. Everything draws from a caller-supplied `ChaCha8Rng`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::corr::{BlockMap, WStarMorphism};
use crate::error::Result;
use crate::numlin::{c, projector, range_basis, CMatrix, OperatorSubspace, Tolerance, C64};
use crate::qrel::QRelation;
use crate::qset::{ell_infty, Atom, QuantumSet};

/// Standard complex Gaussian sample.
pub fn random_complex(rng: &mut ChaCha8Rng) -> C64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    c(re, im)
}

pub fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| random_complex(rng))
}

pub fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let a = random_matrix(n, n, rng);
    (&a + a.adjoint()).scale(0.5)
}

/// Haar-ish unitary from the QR factor of a Gaussian matrix.
pub fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let a = random_matrix(n, n, rng);
    a.qr().q()
}

/// Random orthogonal projection of the given rank.
pub fn random_projection(n: usize, rank: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    if rank == 0 {
        return CMatrix::zeros(n, n);
    }
    let frame = random_matrix(n, rank.min(n), rng);
    projector(&range_basis(&frame, Tolerance::default()))
}

/// Random full-rank density matrix.
pub fn random_density(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let a = random_matrix(n, n, rng);
    let rho = &a * a.adjoint();
    let t = rho.trace();
    rho / t
}

/// Random subspace of `L(C^dom, C^cod)` of the given dimension.
pub fn random_subspace(
    dom_dim: usize,
    cod_dim: usize,
    dim: usize,
    rng: &mut ChaCha8Rng,
) -> OperatorSubspace {
    if dim == 0 {
        return OperatorSubspace::zero(dom_dim, cod_dim);
    }
    let mats: Vec<CMatrix> = (0..dim.min(dom_dim * cod_dim))
        .map(|_| random_matrix(cod_dim, dom_dim, rng))
        .collect();
    OperatorSubspace::span_in(dom_dim, cod_dim, &mats, Tolerance::default())
        .expect("sizes agree by construction")
}

/// Random relation: each component is zero with probability `sparsity`,
/// otherwise a subspace of random dimension.
pub fn random_relation(
    x: &QuantumSet,
    y: &QuantumSet,
    sparsity: f64,
    rng: &mut ChaCha8Rng,
) -> QRelation {
    let mut comps = Vec::new();
    for a in 0..x.len() {
        for b in 0..y.len() {
            if rng.gen_bool(sparsity.clamp(0.0, 1.0)) {
                continue;
            }
            let full = x.dim(a) * y.dim(b);
            let d = rng.gen_range(1..=full);
            comps.push(((a, b), random_subspace(x.dim(a), y.dim(b), d, rng)));
        }
    }
    QRelation::new(x.clone(), y.clone(), comps).expect("components sized from the sets")
}

/// Random quantum set with `len` atoms of dimension at most `max_dim`.
pub fn random_qset(len: usize, max_dim: usize, rng: &mut ChaCha8Rng) -> QuantumSet {
    let dims: Vec<usize> = (0..len.max(1))
        .map(|_| rng.gen_range(1..=max_dim.max(1)))
        .collect();
    QuantumSet::from_dims(&dims).expect("positive dims")
}

/// Random unital *-homomorphism `l^inf(Y) -> l^inf(X)`.
///
/// `multiplicities[a][b]` is how often block `b` of `Y` appears inside atom
/// `a` of the generated `X`; every row must be nonzero. The atom is
/// `U (sum of blocks) U*` for a random unitary `U`.
pub fn random_morphism_into(
    y: &QuantumSet,
    multiplicities: &[Vec<usize>],
    rng: &mut ChaCha8Rng,
) -> Result<(QuantumSet, WStarMorphism)> {
    let atoms: Vec<Atom> = multiplicities
        .iter()
        .enumerate()
        .map(|(a, row)| {
            let n: usize = row.iter().zip(y.dims()).map(|(m, d)| m * d).sum();
            Atom::new(format!("w{a}"), n)
        })
        .collect();
    let x = QuantumSet::new(atoms)?;
    let source = ell_infty(y);
    let target = ell_infty(&x);
    let mut images = Vec::with_capacity(source.dim());
    let unitaries: Vec<CMatrix> = (0..x.len())
        .map(|a| random_unitary(x.dim(a), rng))
        .collect();
    for u in 0..source.dim() {
        let (b, k, l) = source.locate(u);
        let mut blocks = Vec::with_capacity(x.len());
        for (a, row) in multiplicities.iter().enumerate() {
            let n = x.dim(a);
            let mut m = CMatrix::zeros(n, n);
            let mut off = 0;
            for (bb, &mult) in row.iter().enumerate() {
                let d = y.dim(bb);
                for _ in 0..mult {
                    if bb == b {
                        m[(off + k, off + l)] = c(1.0, 0.0);
                    }
                    off += d;
                }
            }
            blocks.push(&unitaries[a] * m * unitaries[a].adjoint());
        }
        images.push(crate::qset::AlgebraElement::new(&target, blocks)?);
    }
    let map = BlockMap::from_images(source, target, |u| images[u].clone());
    Ok((x, WStarMorphism::new(map, Tolerance::new(1e-8)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numlin::{identity, max_abs};
    use rand::SeedableRng;

    #[test]
    fn unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = random_unitary(4, &mut rng);
        assert!(max_abs(&(&u * u.adjoint() - identity(4))) < 1e-10);
    }

    #[test]
    fn density_has_unit_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let rho = random_density(3, &mut rng);
        assert!((rho.trace() - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn random_morphism_is_a_morphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let y = QuantumSet::from_dims(&[1, 2]).unwrap();
        let (x, psi) =
            random_morphism_into(&y, &[vec![1, 1], vec![0, 2], vec![2, 0]], &mut rng).unwrap();
        assert_eq!(x.dims(), vec![3, 4, 2]);
        assert!(psi.map().defects().max() < 1e-9);
    }
}
