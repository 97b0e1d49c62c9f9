//! Normal states on finite products of matrix algebras, support projections,
//! the diagonal projection of `M (x) M^op` and the classification of
//! diagonal states as convex combinations of `tr_i . mult_i`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corr::{BlockMap, WStarMorphism};
use crate::error::{Error, Result};
use crate::numlin::{hermitian_eigen, max_abs, range_projection, CMatrix, Tolerance, C64, ZERO};
use crate::qset::{tensor_op_algebra, AlgebraElement, HAAlgebra, ProjectionElement};
use crate::random::random_projection;

/// A normal state `x -> sum_i tr(rho_i x_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct State {
    parent: HAAlgebra,
    densities: Vec<CMatrix>,
}

impl State {
    pub fn new(parent: &HAAlgebra, densities: Vec<CMatrix>, tol: Tolerance) -> Result<Self> {
        let elem = AlgebraElement::new(parent, densities)?;
        let mut total = ZERO;
        for (i, rho) in elem.blocks().iter().enumerate() {
            let herm = max_abs(&(rho - rho.adjoint()));
            if herm > tol.get() {
                return Err(Error::InvalidState(format!(
                    "density {i} is not self-adjoint (defect {herm:.3e})"
                )));
            }
            let (values, _) = hermitian_eigen(rho);
            if let Some(&low) = values.first() {
                if low < -tol.get() {
                    return Err(Error::InvalidState(format!(
                        "density {i} has negative eigenvalue {low:.3e}"
                    )));
                }
            }
            total += rho.trace();
        }
        if (total - C64::new(1.0, 0.0)).norm() > tol.get() {
            return Err(Error::InvalidState(format!(
                "total trace is {:.6}, not 1",
                total.re
            )));
        }
        Ok(State {
            parent: parent.clone(),
            densities: elem.into_blocks(),
        })
    }

    /// The state with `phi(x) = sum_k w[k] x[k]` in algebra coordinates.
    pub fn from_functional(parent: &HAAlgebra, w: &[C64], tol: Tolerance) -> Result<Self> {
        if w.len() != parent.dim() {
            return Err(Error::ShapeMismatch(format!(
                "functional of length {} on an algebra of dimension {}",
                w.len(),
                parent.dim()
            )));
        }
        let densities = (0..parent.num_blocks())
            .map(|b| {
                let n = parent.block_dim(b);
                CMatrix::from_fn(n, n, |k, j| w[parent.coordinate(b, j, k)])
            })
            .collect();
        Self::new(parent, densities, tol)
    }

    pub fn parent(&self) -> &HAAlgebra {
        &self.parent
    }

    pub fn densities(&self) -> &[CMatrix] {
        &self.densities
    }

    pub fn evaluate(&self, x: &AlgebraElement) -> C64 {
        self.densities
            .iter()
            .zip(x.blocks())
            .map(|(rho, xb)| (rho * xb).trace())
            .fold(ZERO, |a, b| a + b)
    }

    /// Coefficients `w` with `phi(x) = sum_k w[k] x[k]`.
    pub fn functional(&self) -> Vec<C64> {
        let mut w = vec![ZERO; self.parent.dim()];
        for (b, rho) in self.densities.iter().enumerate() {
            let n = rho.nrows();
            for j in 0..n {
                for k in 0..n {
                    w[self.parent.coordinate(b, j, k)] = rho[(k, j)];
                }
            }
        }
        w
    }

    /// `phi . f` as a functional on the source of `f`.
    pub fn pullback(&self, f: &BlockMap) -> Result<Vec<C64>> {
        if !f.target().same_shape(&self.parent) {
            return Err(Error::ShapeMismatch(
                "map does not land in the state's algebra".into(),
            ));
        }
        Ok(pull_functional(&self.functional(), f))
    }
}

/// `w^T H` for the coordinate matrix `H` of `f`.
pub fn pull_functional(w: &[C64], f: &BlockMap) -> Vec<C64> {
    let h = f.matrix();
    (0..h.ncols())
        .map(|u| {
            (0..h.nrows())
                .map(|t| w[t] * h[(t, u)])
                .fold(ZERO, |a, b| a + b)
        })
        .collect()
}

/// Blockwise range projection of the densities.
pub fn support_projection(phi: &State, tol: Tolerance) -> ProjectionElement {
    let blocks = phi
        .densities
        .iter()
        .map(|rho| range_projection(rho, tol))
        .collect();
    ProjectionElement::new_unchecked(
        AlgebraElement::new(&phi.parent, blocks).expect("same shape as the densities"),
    )
}

/// `delta_M` in `M (x) M^op`: on block `(i, i)` the projection onto the
/// dual-basis vector `sum_k e_k (x) e_k`, zero elsewhere.
pub fn diagonal_projection(m: &HAAlgebra) -> ProjectionElement {
    let alg = tensor_op_algebra(m, m);
    let k = m.num_blocks();
    let mut blocks: Vec<CMatrix> = alg
        .block_dims()
        .iter()
        .map(|&n| CMatrix::zeros(n, n))
        .collect();
    for i in 0..k {
        blocks[i * k + i] = dual_basis_projection(m.block_dim(i));
    }
    ProjectionElement::new_unchecked(AlgebraElement::new(&alg, blocks).expect("shapes agree"))
}

fn dual_basis_projection(n: usize) -> CMatrix {
    let scale = C64::new(1.0 / n as f64, 0.0);
    CMatrix::from_fn(n * n, n * n, |r, c| {
        if r % (n + 1) == 0 && c % (n + 1) == 0 {
            scale
        } else {
            ZERO
        }
    })
}

/// Random projection of `m`; nonzero when `nonzero` is set.
pub fn random_algebra_projection(
    m: &HAAlgebra,
    nonzero: bool,
    rng: &mut ChaCha8Rng,
) -> ProjectionElement {
    loop {
        let blocks: Vec<CMatrix> = m
            .block_dims()
            .iter()
            .map(|&n| {
                let rank = rng.gen_range(0..=n);
                random_projection(n, rank, rng)
            })
            .collect();
        let p =
            ProjectionElement::new_unchecked(AlgebraElement::new(m, blocks).expect("shapes agree"));
        if !nonzero || p.rank() > 0 {
            return p;
        }
    }
}

/// `|delta_M (p (x) (1 - p))|`.
pub fn diagonal_orthogonality_defect(m: &HAAlgebra, p: &ProjectionElement) -> f64 {
    let delta = diagonal_projection(m);
    let q = p.element().tensor_op(p.complement().element());
    delta.element().mul(&q).norm_max()
}

/// `|(p (x) p) delta_M|`.
pub fn diagonal_overlap(m: &HAAlgebra, p: &ProjectionElement) -> f64 {
    let delta = diagonal_projection(m);
    p.element()
        .tensor_op(p.element())
        .mul(delta.element())
        .norm_max()
}

/// Sampling check that `(p (x) p) delta_M` is nonzero for random nonzero
/// projections `p`.
pub fn is_nondegenerate_diagonal(
    m: &HAAlgebra,
    samples: usize,
    rng: &mut ChaCha8Rng,
    tol: Tolerance,
) -> bool {
    (0..samples).all(|_| {
        let p = random_algebra_projection(m, true, rng);
        diagonal_overlap(m, &p) > tol.get()
    })
}

/// Weights of a diagonal state over the blocks of `M`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagonalStateDecomposition {
    pub weights: Vec<f64>,
    pub residual: f64,
}

/// Writes a state on `M (x) M^op` as `sum_i c_i tr_i . mult_i`, or reports
/// the trace mass lying outside `delta_M`.
pub fn decompose_diagonal_state(
    phi: &State,
    m: &HAAlgebra,
    tol: Tolerance,
) -> Result<DiagonalStateDecomposition> {
    let alg = tensor_op_algebra(m, m);
    if !alg.same_shape(&phi.parent) {
        return Err(Error::ShapeMismatch("state is not on M (x) M^op".into()));
    }
    let delta = diagonal_projection(m);
    let k = m.num_blocks();
    let mut weights = Vec::with_capacity(k);
    let mut inside = 0.0;
    for i in 0..k {
        let b = i * k + i;
        let c = (delta.element().block(b) * &phi.densities[b]).trace().re;
        weights.push(c);
        inside += c;
    }
    let total: f64 = phi.densities.iter().map(|r| r.trace().re).sum();
    let residual = (total - inside).abs();
    if residual > tol.get() {
        return Err(Error::NotDiagonal(residual));
    }
    Ok(DiagonalStateDecomposition { weights, residual })
}

/// The diagonal state `sum_i c_i tr_i . mult_i`.
pub fn diagonal_state_from_weights(
    m: &HAAlgebra,
    weights: &[f64],
    tol: Tolerance,
) -> Result<State> {
    if weights.len() != m.num_blocks() {
        return Err(Error::ShapeMismatch(
            "one weight per block is needed".into(),
        ));
    }
    let alg = tensor_op_algebra(m, m);
    let delta = diagonal_projection(m);
    let k = m.num_blocks();
    let densities = (0..alg.num_blocks())
        .map(|b| {
            let (i, j) = (b / k, b % k);
            if i == j {
                delta.element().block(b) * C64::new(weights[i], 0.0)
            } else {
                CMatrix::zeros(alg.block_dim(b), alg.block_dim(b))
            }
        })
        .collect();
    State::new(&alg, densities, tol)
}

/// The states `tr_i . mult_i`, one per block of `M`.
pub fn extreme_diagonal_states(m: &HAAlgebra) -> Vec<State> {
    let k = m.num_blocks();
    (0..k)
        .map(|i| {
            let mut w = vec![0.0; k];
            w[i] = 1.0;
            diagonal_state_from_weights(m, &w, Tolerance::default())
                .expect("extreme diagonal states are states")
        })
        .collect()
}

/// Decides `f = g` by testing that `phi . (f (x) g^op)` is diagonal for the
/// extreme diagonal states `phi` of the common target.
pub fn morphisms_equal_via_diagonals(
    f: &WStarMorphism,
    g: &WStarMorphism,
    tol: Tolerance,
) -> Result<bool> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::ShapeMismatch(
            "morphisms must share source and target".into(),
        ));
    }
    let joint = f.map().tensor(&g.map().op());
    let src = tensor_op_algebra(f.source(), f.source());
    for phi in extreme_diagonal_states(f.target()) {
        let w = phi.pullback(&joint)?;
        let pulled = State::from_functional(&src, &w, tol)?;
        match decompose_diagonal_state(&pulled, f.source(), tol) {
            Ok(_) => {}
            Err(Error::NotDiagonal(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}
