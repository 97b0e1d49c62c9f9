//! Passing between the guises of a quantum relation: operator-subspace
//! families, projections in `l^inf(X) (x) l^inf(Y)^op`, and (for functions)
//! W*-morphisms `l^inf(Y) -> l^inf(X)`.
//!
//! `L(X_a, Y_b)` carries the right action `x . (a (x) b) = b x a` of block
//! `(a, b)`. Identifying `x` with the row-major vectorization of `x*`, the
//! annihilator of a component is cut out by the orthogonal projection onto
//! those vectors, which is the projection of the relation.

mod morphism;

pub use morphism::{BlockMap, MorphismDefects, WStarMorphism};

use crate::error::{Error, Result};
use crate::numlin::{
    column_to_matrix, frame_of, identity, kron, max_abs, null_space, projector, range_basis,
    solve_linear, vectorize, CMatrix, OperatorSubspace, Tolerance,
};
use crate::qrel::QRelation;
use crate::qset::{
    ell_infty, tensor_op_algebra, AlgebraElement, HAAlgebra, ProjectionElement, QuantumSet,
};

/// Intertwiner spaces `{T in L(X_a, Y_b) : a_b T = T psi(a)_a}` for a
/// linear map `psi : l^inf(Y) -> l^inf(X)`, as a relation `X -> Y`.
///
/// `psi` need not be a homomorphism; for W*-morphisms this is the relation
/// associated with the morphism.
pub fn intertwiners(
    psi: &BlockMap,
    dom: &QuantumSet,
    cod: &QuantumSet,
    tol: Tolerance,
) -> Result<QRelation> {
    let src = psi.source();
    let tgt = psi.target();
    if src.block_dims() != cod.dims() || tgt.block_dims() != dom.dims() {
        return Err(Error::ShapeMismatch(
            "map must go from l^inf(codomain) to l^inf(domain)".into(),
        ));
    }
    let images: Vec<AlgebraElement> = (0..src.dim()).map(|u| psi.image_of_unit(u)).collect();
    let mut comps = Vec::new();
    for a in 0..dom.len() {
        let na = dom.dim(a);
        for b in 0..cod.len() {
            let nb = cod.dim(b);
            let rows = src.dim() * na * nb;
            let mut constraints = CMatrix::zeros(rows, na * nb);
            for (u, img) in images.iter().enumerate() {
                let (gb, k, l) = src.locate(u);
                // vec(A T) = (A (x) I) vec T and vec(T B) = (I (x) B^T) vec T
                let left = if gb == b {
                    kron(&crate::numlin::matrix_unit(nb, nb, k, l), &identity(na))
                } else {
                    CMatrix::zeros(na * nb, na * nb)
                };
                let right = kron(&identity(nb), &img.block(a).transpose());
                let block = left - right;
                constraints
                    .view_mut((u * na * nb, 0), (na * nb, na * nb))
                    .copy_from(&block);
            }
            let null = null_space(&constraints, tol);
            if null.ncols() > 0 {
                comps.push(((a, b), OperatorSubspace::from_frame(na, nb, &null, tol)));
            }
        }
    }
    QRelation::new(dom.clone(), cod.clone(), comps)
}

/// The relation `X -> Y` of a W*-morphism `l^inf(Y) -> l^inf(X)`.
pub fn morphism_to_relation(psi: &WStarMorphism, tol: Tolerance) -> Result<QRelation> {
    intertwiners(psi.map(), psi.target().qset(), psi.source().qset(), tol)
}

/// Recovers the W*-morphism `l^inf(Y) -> l^inf(X)` of a function `X -> Y`.
pub fn relation_to_morphism(f: &QRelation, tol: Tolerance) -> Result<WStarMorphism> {
    let (sv, tot) = f.function_residuals(tol)?;
    if sv > tol.get() || tot > tol.get() {
        return Err(Error::NotAFunction(format!(
            "single-valuedness residual {sv:.3e}, totality residual {tot:.3e}"
        )));
    }
    let source = ell_infty(f.cod());
    let target = ell_infty(f.dom());
    let mut matrix = CMatrix::zeros(target.dim(), source.dim());
    for a in 0..f.dom().len() {
        let na = f.dom().dim(a);
        // Stack T X = a_b T over every basis operator T of every component (a, b).
        let mut blocks: Vec<(usize, CMatrix)> = Vec::new();
        for b in 0..f.cod().len() {
            for t in f.component(a, b).basis() {
                blocks.push((b, t.clone()));
            }
        }
        let rows: usize = blocks.iter().map(|(_, t)| t.nrows() * na).sum();
        let mut lhs = CMatrix::zeros(rows, na * na);
        let mut rhs = CMatrix::zeros(rows, source.dim());
        let mut r0 = 0;
        for (b, t) in &blocks {
            let nb = t.nrows();
            lhs.view_mut((r0, 0), (nb * na, na * na))
                .copy_from(&kron(t, &identity(na)));
            for u in 0..source.dim() {
                let (gb, k, l) = source.locate(u);
                if gb != *b {
                    continue;
                }
                let at = crate::numlin::matrix_unit(nb, nb, k, l) * t;
                let v = vectorize(&at);
                for i in 0..v.len() {
                    rhs[(r0 + i, u)] = v[i];
                }
            }
            r0 += nb * na;
        }
        let sol = solve_linear(&lhs, &rhs, tol).map_err(|e| match e {
            Error::NoSolution { residual } => Error::NotAFunction(format!(
                "intertwining equations inconsistent at atom {a} (residual {residual:.3e})"
            )),
            other => other,
        })?;
        let off = target.offset(a);
        matrix
            .view_mut((off, 0), (na * na, source.dim()))
            .copy_from(&sol.solution);
    }
    let map = BlockMap::new(source, target, matrix)?;
    let psi = WStarMorphism::new(map, Tolerance::new(tol.get() * 1e2)?)
        .map_err(|e| Error::NotAFunction(e.to_string()))?;
    Ok(psi)
}

/// The projection `P_R` in `l^inf(X) (x) l^inf(Y)^op = l^inf(X x Y*)`.
pub fn relation_to_projection(r: &QRelation) -> ProjectionElement {
    let alg = tensor_op_algebra(&ell_infty(r.dom()), &ell_infty(r.cod()));
    let ny = r.cod().len();
    let mut blocks: Vec<CMatrix> = alg
        .block_dims()
        .iter()
        .map(|&n| CMatrix::zeros(n, n))
        .collect();
    for (&(a, b), s) in r.components() {
        let adjoints: Vec<CMatrix> = s.basis().iter().map(|x| x.adjoint()).collect();
        let frame = frame_of(&adjoints, r.dom().dim(a) * r.cod().dim(b));
        blocks[a * ny + b] = projector(&frame);
    }
    ProjectionElement::new_unchecked(
        AlgebraElement::new(&alg, blocks).expect("blocks sized from the algebra"),
    )
}

/// Inverse of [`relation_to_projection`].
pub fn projection_to_relation(
    p: &AlgebraElement,
    dom: &QuantumSet,
    cod: &QuantumSet,
    tol: Tolerance,
) -> Result<QRelation> {
    let alg = tensor_op_algebra(&ell_infty(dom), &ell_infty(cod));
    let p = ProjectionElement::new(AlgebraElement::new(&alg, p.blocks().to_vec())?, tol)?;
    let ny = cod.len();
    let mut comps = Vec::new();
    for a in 0..dom.len() {
        for b in 0..ny {
            let block = p.element().block(a * ny + b);
            let q = range_basis(block, tol);
            if q.ncols() == 0 {
                continue;
            }
            let (na, nb) = (dom.dim(a), cod.dim(b));
            let mats: Vec<CMatrix> = (0..q.ncols())
                .map(|k| column_to_matrix(&q, k, na, nb).adjoint())
                .collect();
            comps.push(((a, b), OperatorSubspace::span_in(na, nb, &mats, tol)?));
        }
    }
    QRelation::new(dom.clone(), cod.clone(), comps)
}

/// Outcome of an identity checked numerically.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Comparison {
    pub holds: bool,
    pub residual: f64,
}

impl Comparison {
    pub fn new(residual: f64, tol: Tolerance) -> Self {
        Comparison {
            holds: residual <= tol.get(),
            residual,
        }
    }
}

/// Checks `(psi_l (x) psi_r)(P_R) = P_{psi_r^ . R . psi_l^}` where `^` is
/// the associated relation and the second one is daggered.
///
/// `psi_l : l^inf(X) -> l^inf(W)`, `psi_r : l^inf(Y) -> l^inf(Z)`, `R : X -> Y`.
pub fn pushforward_check(
    psi_l: &WStarMorphism,
    psi_r: &WStarMorphism,
    r: &QRelation,
    tol: Tolerance,
) -> Result<Comparison> {
    if psi_l.source().qset() != r.dom() || psi_r.source().qset() != r.cod() {
        return Err(Error::ShapeMismatch(
            "morphisms must start at the function algebras of the relation's ends".into(),
        ));
    }
    let lhs_map = psi_l.map().tensor(&psi_r.map().op());
    let lhs = lhs_map.apply(relation_to_projection(r).element());

    let hat_l = morphism_to_relation(psi_l, tol)?;
    let hat_r = morphism_to_relation(psi_r, tol)?;
    let composite = hat_r.dagger().after(&r.after(&hat_l, tol)?, tol)?;
    let rhs = relation_to_projection(&composite);
    Ok(Comparison::new(lhs.max_abs_diff(rhs.element()), tol))
}

/// Checks that the joint support of the subspaces `T im(p)`, over the
/// intertwiners `T p = psi(p) T`, is `psi(p)`.
pub fn support_image_check(
    psi: &WStarMorphism,
    p: &ProjectionElement,
    tol: Tolerance,
) -> Result<Comparison> {
    let src = psi.source();
    let tgt = psi.target();
    // Intertwiners H_Y -> H_X are adjoints of the associated relation's operators.
    let v = morphism_to_relation(psi, tol)?.dagger();
    let expected = psi.apply(p.element());
    let mut worst: f64 = 0.0;
    for a in 0..tgt.num_blocks() {
        let na = tgt.block_dim(a);
        let mut vectors: Vec<CMatrix> = Vec::new();
        for b in 0..src.num_blocks() {
            let pb = p.element().block(b);
            for t in v.component(b, a).basis() {
                vectors.push(t * pb);
            }
        }
        let support = if vectors.is_empty() {
            CMatrix::zeros(na, na)
        } else {
            let cols: usize = vectors.iter().map(|m| m.ncols()).sum();
            let mut frame = CMatrix::zeros(na, cols);
            let mut c0 = 0;
            for m in &vectors {
                frame.view_mut((0, c0), (na, m.ncols())).copy_from(m);
                c0 += m.ncols();
            }
            projector(&range_basis(&frame, tol))
        };
        worst = worst.max(max_abs(&(support - expected.block(a))));
    }
    Ok(Comparison::new(worst, tol))
}

/// Pullback morphism `l^inf(Y) -> l^inf(X)` of a map of classical sets
/// `f : X -> Y` given as an index table.
pub fn classical_pullback(x: &QuantumSet, y: &QuantumSet, f: &[usize]) -> Result<WStarMorphism> {
    if !x.is_classical()
        || !y.is_classical()
        || f.len() != x.len()
        || f.iter().any(|&v| v >= y.len())
    {
        return Err(Error::ShapeMismatch(
            "pullbacks need a function between classical sets".into(),
        ));
    }
    let source = ell_infty(y);
    let target = ell_infty(x);
    let mut matrix = CMatrix::zeros(target.dim(), source.dim());
    for (i, &fi) in f.iter().enumerate() {
        matrix[(i, fi)] = crate::numlin::ONE;
    }
    Ok(WStarMorphism::new_unchecked(BlockMap::new(
        source, target, matrix,
    )?))
}

/// Projection order defect, exposed for order-preservation checks.
pub fn projection_leq_defect(p: &ProjectionElement, q: &ProjectionElement) -> f64 {
    p.leq_defect(q)
}

/// Relabels a W*-morphism's ends, keeping block sizes.
pub fn relabel_morphism(
    psi: &WStarMorphism,
    source: HAAlgebra,
    target: HAAlgebra,
) -> Result<WStarMorphism> {
    Ok(WStarMorphism::new_unchecked(
        psi.map().relabel(source, target)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn identity_morphism_gives_identity_relation() {
        let x = QuantumSet::from_dims(&[1, 2]).unwrap();
        let id = WStarMorphism::identity(&ell_infty(&x));
        let r = morphism_to_relation(&id, tol()).unwrap();
        assert!(r.equals(&QRelation::identity(&x), tol()).unwrap());
        let back = relation_to_morphism(&r, tol()).unwrap();
        assert!(back.map().max_abs_diff(id.map()) < 1e-9);
    }

    #[test]
    fn top_and_zero_projections() {
        let x = QuantumSet::from_dims(&[1, 2]).unwrap();
        let y = QuantumSet::from_dims(&[2]).unwrap();
        let top = relation_to_projection(&QRelation::top(&x, &y));
        let alg = tensor_op_algebra(&ell_infty(&x), &ell_infty(&y));
        assert!(top.element().max_abs_diff(&AlgebraElement::one(&alg)) < 1e-12);
        let zero = relation_to_projection(&QRelation::zero(&x, &y));
        assert!(zero.element().norm_max() == 0.0);
        let back = projection_to_relation(top.element(), &x, &y, tol()).unwrap();
        assert!(back.equals(&QRelation::top(&x, &y), tol()).unwrap());
    }

    #[test]
    fn classical_graph_gives_pullback() {
        let x = QuantumSet::classical(3).unwrap();
        let y = QuantumSet::classical(2).unwrap();
        let f = [1, 0, 1];
        let psi = classical_pullback(&x, &y, &f).unwrap();
        let r = morphism_to_relation(&psi, tol()).unwrap();
        let graph = r.to_bool_matrix().unwrap();
        for (i, row) in graph.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, f[i] == j);
            }
        }
        let back = relation_to_morphism(&r, tol()).unwrap();
        assert!(back.map().max_abs_diff(psi.map()) < 1e-9);
    }

    #[test]
    fn non_function_is_rejected() {
        let x = QuantumSet::from_dims(&[2]).unwrap();
        assert!(matches!(
            relation_to_morphism(&QRelation::top(&x, &x), tol()),
            Err(Error::NotAFunction(_))
        ));
    }

    #[test]
    fn identity_relation_projection_is_rank_one_on_the_diagonal() {
        let x = QuantumSet::from_dims(&[2]).unwrap();
        let p = relation_to_projection(&QRelation::identity(&x));
        let b = p.element().block(0);
        assert!((b.trace().re - 1.0).abs() < 1e-12);
        assert!((b[(0, 3)].re - 0.5).abs() < 1e-12);
    }
}
