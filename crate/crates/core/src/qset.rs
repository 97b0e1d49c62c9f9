//! Quantum sets, their function algebras and block-diagonal elements.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numlin::{
    identity, kron, matrix_unit, max_abs, projection_defect, CMatrix, Tolerance, C64, ZERO,
};

/// One atom: a finite-dimensional Hilbert space `C^dim` with a label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Atom {
    pub label: String,
    pub dim: usize,
}

impl Atom {
    pub fn new(label: impl Into<String>, dim: usize) -> Self {
        Atom {
            label: label.into(),
            dim,
        }
    }
}

/// A finite, nonempty, ordered family of atoms with distinct labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuantumSetRepr", into = "QuantumSetRepr")]
pub struct QuantumSet {
    atoms: Vec<Atom>,
}

#[derive(Serialize, Deserialize)]
struct QuantumSetRepr {
    atoms: Vec<Atom>,
}

impl TryFrom<QuantumSetRepr> for QuantumSet {
    type Error = Error;
    fn try_from(r: QuantumSetRepr) -> Result<Self> {
        QuantumSet::new(r.atoms)
    }
}

impl From<QuantumSet> for QuantumSetRepr {
    fn from(q: QuantumSet) -> Self {
        QuantumSetRepr { atoms: q.atoms }
    }
}

pub const UNIT_LABEL: &str = "1";

impl QuantumSet {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidQuantumSet("no atoms".into()));
        }
        for (i, a) in atoms.iter().enumerate() {
            if a.dim == 0 {
                return Err(Error::InvalidQuantumSet(format!(
                    "atom `{}` has dimension 0",
                    a.label
                )));
            }
            if atoms[..i].iter().any(|b| b.label == a.label) {
                return Err(Error::InvalidQuantumSet(format!(
                    "duplicate label `{}`",
                    a.label
                )));
            }
        }
        Ok(QuantumSet { atoms })
    }

    /// Atoms `x0, x1, ...` of the given dimensions.
    pub fn from_dims(dims: &[usize]) -> Result<Self> {
        Self::new(
            dims.iter()
                .enumerate()
                .map(|(i, &d)| Atom::new(format!("x{i}"), d))
                .collect(),
        )
    }

    /// A classical set: `n` one-dimensional atoms.
    pub fn classical(n: usize) -> Result<Self> {
        Self::from_dims(&vec![1; n])
    }

    /// The monoidal unit: one atom `C`.
    pub fn unit() -> Self {
        QuantumSet {
            atoms: vec![Atom::new(UNIT_LABEL, 1)],
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self, atom: usize) -> usize {
        self.atoms[atom].dim
    }

    pub fn dims(&self) -> Vec<usize> {
        self.atoms.iter().map(|a| a.dim).collect()
    }

    pub fn label(&self, atom: usize) -> &str {
        &self.atoms[atom].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a.label == label)
    }

    pub fn is_classical(&self) -> bool {
        self.atoms.iter().all(|a| a.dim == 1)
    }

    pub fn dual(&self) -> Self {
        dual_qset(self)
    }

    pub fn product(&self, other: &Self) -> Self {
        cartesian_product(self, other)
    }
}

/// Label of the dual atom; toggles a trailing `*`.
pub fn dual_label(label: &str) -> String {
    match label.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{label}*"),
    }
}

pub fn dual_qset(x: &QuantumSet) -> QuantumSet {
    QuantumSet {
        atoms: x
            .atoms
            .iter()
            .map(|a| Atom::new(dual_label(&a.label), a.dim))
            .collect(),
    }
}

/// Atoms `X_a (x) Y_b` in lexicographic order of `(a, b)`.
pub fn cartesian_product(x: &QuantumSet, y: &QuantumSet) -> QuantumSet {
    let mut atoms = Vec::with_capacity(x.len() * y.len());
    for a in &x.atoms {
        for b in &y.atoms {
            atoms.push(Atom::new(
                format!("({},{})", a.label, b.label),
                a.dim * b.dim,
            ));
        }
    }
    QuantumSet { atoms }
}

/// The von Neumann algebra `l^inf(X)`, a finite product of matrix algebras.
///
/// Elements are stored by coordinates: the row-major entries of each block,
/// blocks concatenated in atom order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HAAlgebra {
    qset: QuantumSet,
    offsets: Vec<usize>,
}

pub fn ell_infty(x: &QuantumSet) -> HAAlgebra {
    HAAlgebra::new(x.clone())
}

/// `l^inf(X) (x) l^inf(Y)^op = l^inf(X x Y*)`; an elementary tensor `a (x) b`
/// sits in block `(i, j)` as `kron(a_i, b_j^T)`.
pub fn tensor_op_algebra(m: &HAAlgebra, n: &HAAlgebra) -> HAAlgebra {
    HAAlgebra::new(cartesian_product(&m.qset, &n.qset.dual()))
}

impl HAAlgebra {
    pub fn new(qset: QuantumSet) -> Self {
        let mut offsets = Vec::with_capacity(qset.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for a in qset.atoms() {
            acc += a.dim * a.dim;
            offsets.push(acc);
        }
        HAAlgebra { qset, offsets }
    }

    /// The one-block algebra `C`.
    pub fn scalars() -> Self {
        Self::new(QuantumSet::unit())
    }

    pub fn qset(&self) -> &QuantumSet {
        &self.qset
    }

    pub fn num_blocks(&self) -> usize {
        self.qset.len()
    }

    pub fn block_dim(&self, b: usize) -> usize {
        self.qset.dim(b)
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.qset.dims()
    }

    /// Complex dimension `sum n_i^2`.
    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn offset(&self, b: usize) -> usize {
        self.offsets[b]
    }

    pub fn coordinate(&self, block: usize, i: usize, j: usize) -> usize {
        self.offsets[block] + i * self.block_dim(block) + j
    }

    /// `(block, i, j)` of a coordinate.
    pub fn locate(&self, k: usize) -> (usize, usize, usize) {
        let block = self.offsets.partition_point(|&o| o <= k) - 1;
        let n = self.block_dim(block);
        let r = k - self.offsets[block];
        (block, r / n, r % n)
    }

    /// Product of two matrix-unit coordinates, if nonzero.
    pub fn unit_product(&self, u: usize, v: usize) -> Option<usize> {
        let (bu, i, j) = self.locate(u);
        let (bv, k, l) = self.locate(v);
        (bu == bv && j == k).then(|| self.coordinate(bu, i, l))
    }

    /// Coordinate of the adjoint of a matrix unit.
    pub fn adjoint_coordinate(&self, u: usize) -> usize {
        let (b, i, j) = self.locate(u);
        self.coordinate(b, j, i)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::new(cartesian_product(&self.qset, &other.qset))
    }

    /// For each coordinate of `self (x) other`, the pair of coordinates of
    /// the matrix units whose Kronecker product it is.
    pub fn tensor_split(&self, other: &Self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in 0..self.num_blocks() {
            let na = self.block_dim(a);
            for b in 0..other.num_blocks() {
                let nb = other.block_dim(b);
                let n = na * nb;
                for row in 0..n {
                    for col in 0..n {
                        let (p, r) = (row / nb, row % nb);
                        let (q, s) = (col / nb, col % nb);
                        out.push((self.coordinate(a, p, q), other.coordinate(b, r, s)));
                    }
                }
            }
        }
        out
    }

    /// Coordinate permutation implementing the blockwise transpose.
    pub fn transpose_permutation(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|k| {
                let (b, i, j) = self.locate(k);
                self.coordinate(b, j, i)
            })
            .collect()
    }

    /// Same blocks, dual labels: the concrete realization of the opposite algebra.
    pub fn opposite(&self) -> Self {
        Self::new(self.qset.dual())
    }

    /// Whether two algebras have the same block sizes, labels aside.
    pub fn same_shape(&self, other: &Self) -> bool {
        self.block_dims() == other.block_dims()
    }
}

/// A block-diagonal element of an [`HAAlgebra`].
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    blocks: Vec<CMatrix>,
}

impl AlgebraElement {
    pub fn new(alg: &HAAlgebra, blocks: Vec<CMatrix>) -> Result<Self> {
        if blocks.len() != alg.num_blocks() {
            return Err(Error::ShapeMismatch(format!(
                "{} blocks for an algebra with {}",
                blocks.len(),
                alg.num_blocks()
            )));
        }
        for (i, b) in blocks.iter().enumerate() {
            let n = alg.block_dim(i);
            if b.shape() != (n, n) {
                return Err(Error::ShapeMismatch(format!(
                    "block {i} has shape {:?}, expected {n}x{n}",
                    b.shape()
                )));
            }
            if b.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::Format(format!("block {i} has non-finite entries")));
            }
        }
        Ok(AlgebraElement { blocks })
    }

    pub fn zero(alg: &HAAlgebra) -> Self {
        AlgebraElement {
            blocks: alg
                .block_dims()
                .iter()
                .map(|&n| CMatrix::zeros(n, n))
                .collect(),
        }
    }

    pub fn one(alg: &HAAlgebra) -> Self {
        AlgebraElement {
            blocks: alg.block_dims().iter().map(|&n| identity(n)).collect(),
        }
    }

    pub fn matrix_unit(alg: &HAAlgebra, coordinate: usize) -> Self {
        let (b, i, j) = alg.locate(coordinate);
        let mut e = Self::zero(alg);
        e.blocks[b] = matrix_unit(alg.block_dim(b), alg.block_dim(b), i, j);
        e
    }

    pub fn from_coordinates(alg: &HAAlgebra, coords: &[C64]) -> Self {
        debug_assert_eq!(coords.len(), alg.dim());
        let blocks = (0..alg.num_blocks())
            .map(|b| {
                let n = alg.block_dim(b);
                let o = alg.offset(b);
                CMatrix::from_fn(n, n, |i, j| coords[o + i * n + j])
            })
            .collect();
        AlgebraElement { blocks }
    }

    pub fn coordinates(&self) -> Vec<C64> {
        self.blocks
            .iter()
            .flat_map(|b| {
                let n = b.nrows();
                (0..n * n).map(move |k| b[(k / n, k % n)])
            })
            .collect()
    }

    pub fn blocks(&self) -> &[CMatrix] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &CMatrix {
        &self.blocks[b]
    }

    pub fn into_blocks(self) -> Vec<CMatrix> {
        self.blocks
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&CMatrix, &CMatrix) -> CMatrix) -> Self {
        debug_assert_eq!(self.blocks.len(), other.blocks.len());
        AlgebraElement {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: C64) -> Self {
        AlgebraElement {
            blocks: self.blocks.iter().map(|b| b * s).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        AlgebraElement {
            blocks: self.blocks.iter().map(|b| b.adjoint()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        AlgebraElement {
            blocks: self.blocks.iter().map(|b| b.transpose()).collect(),
        }
    }

    /// Elementary tensor in `A (x) B`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut blocks = Vec::with_capacity(self.blocks.len() * other.blocks.len());
        for a in &self.blocks {
            for b in &other.blocks {
                blocks.push(kron(a, b));
            }
        }
        AlgebraElement { blocks }
    }

    /// Elementary tensor `a (x) b` in `A (x) B^op`.
    pub fn tensor_op(&self, other: &Self) -> Self {
        self.tensor(&other.transpose())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| max_abs(&(a - b)))
            .fold(0.0, f64::max)
    }

    pub fn norm_max(&self) -> f64 {
        self.blocks.iter().map(max_abs).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> C64 {
        self.blocks
            .iter()
            .map(|b| b.trace())
            .fold(ZERO, |a, b| a + b)
    }

    pub fn projection_defect(&self) -> f64 {
        self.blocks
            .iter()
            .map(projection_defect)
            .fold(0.0, f64::max)
    }
}

/// An element with `p^2 = p = p*` blockwise, to tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionElement(AlgebraElement);

impl ProjectionElement {
    pub fn new(element: AlgebraElement, tol: Tolerance) -> Result<Self> {
        let defect = element.projection_defect();
        if defect > tol.get() {
            return Err(Error::InvalidProjection(defect));
        }
        Ok(ProjectionElement(element))
    }

    pub(crate) fn new_unchecked(element: AlgebraElement) -> Self {
        ProjectionElement(element)
    }

    pub fn zero(alg: &HAAlgebra) -> Self {
        ProjectionElement(AlgebraElement::zero(alg))
    }

    pub fn one(alg: &HAAlgebra) -> Self {
        ProjectionElement(AlgebraElement::one(alg))
    }

    pub fn element(&self) -> &AlgebraElement {
        &self.0
    }

    pub fn into_element(self) -> AlgebraElement {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.trace().re.round() as usize
    }

    /// `p <= q` iff `q p = p`; returns the defect `|q p - p|`.
    pub fn leq_defect(&self, other: &Self) -> f64 {
        other.0.mul(&self.0).max_abs_diff(&self.0)
    }

    pub fn leq(&self, other: &Self, tol: Tolerance) -> bool {
        self.leq_defect(other) <= tol.get()
    }

    /// `1 - p`.
    pub fn complement(&self) -> Self {
        let one = AlgebraElement {
            blocks: self.0.blocks.iter().map(|b| identity(b.nrows())).collect(),
        };
        ProjectionElement(one.sub(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numlin::c;

    #[test]
    fn dual_toggles_labels() {
        let x = QuantumSet::new(vec![Atom::new("a", 1), Atom::new("b", 2)]).unwrap();
        let d = x.dual();
        assert_eq!(d.label(0), "a*");
        assert_eq!(d.label(1), "b*");
        assert_eq!(d.dims(), vec![1, 2]);
        assert_eq!(d.dual(), x);
        let single = QuantumSet::new(vec![Atom::new("l", 3)]).unwrap().dual();
        assert_eq!(single.atoms(), &[Atom::new("l*", 3)]);
    }

    #[test]
    fn invalid_sets_rejected() {
        assert!(QuantumSet::new(vec![]).is_err());
        assert!(QuantumSet::new(vec![Atom::new("a", 0)]).is_err());
        assert!(QuantumSet::new(vec![Atom::new("a", 1), Atom::new("a", 2)]).is_err());
    }

    #[test]
    fn products() {
        let x = QuantumSet::from_dims(&[2, 3]).unwrap();
        let y = QuantumSet::from_dims(&[2]).unwrap();
        assert_eq!(x.product(&y).dims(), vec![4, 6]);
        assert_eq!(x.product(&QuantumSet::unit()).dims(), x.dims());
        let a = QuantumSet::classical(3).unwrap();
        let b = QuantumSet::classical(4).unwrap();
        assert_eq!(a.product(&b).len(), 12);
    }

    #[test]
    fn tensor_op_block_structure() {
        let c1 = HAAlgebra::scalars();
        assert_eq!(tensor_op_algebra(&c1, &c1).block_dims(), vec![1]);
        let m2 = ell_infty(&QuantumSet::from_dims(&[2]).unwrap());
        assert_eq!(tensor_op_algebra(&m2, &m2).block_dims(), vec![4]);
        let m = ell_infty(&QuantumSet::from_dims(&[1, 2]).unwrap());
        assert_eq!(tensor_op_algebra(&m, &m).block_dims(), vec![1, 2, 2, 4]);
    }

    #[test]
    fn opposite_multiplication_law() {
        let m = ell_infty(&QuantumSet::from_dims(&[1, 2]).unwrap());
        let el = |s: f64| {
            AlgebraElement::new(
                &m,
                vec![
                    CMatrix::from_element(1, 1, c(s, 1.0)),
                    CMatrix::from_fn(2, 2, |i, j| c(s * i as f64 + j as f64, s - i as f64)),
                ],
            )
            .unwrap()
        };
        let (a, b, a2, b2) = (el(0.3), el(-1.2), el(2.0), el(0.7));
        let lhs = a.tensor_op(&b).mul(&a2.tensor_op(&b2));
        let rhs = a.mul(&a2).tensor_op(&b2.mul(&b));
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn locate_and_products_of_units() {
        let m = ell_infty(&QuantumSet::from_dims(&[1, 2]).unwrap());
        assert_eq!(m.dim(), 5);
        assert_eq!(m.locate(3), (1, 1, 0));
        assert_eq!(m.coordinate(1, 1, 0), 3);
        // E_10 E_01 = E_11
        assert_eq!(m.unit_product(3, 2), Some(4));
        assert_eq!(m.unit_product(2, 2), None);
        assert_eq!(m.adjoint_coordinate(2), 3);
    }

    #[test]
    fn tensor_split_matches_kron() {
        let a = ell_infty(&QuantumSet::from_dims(&[1, 2]).unwrap());
        let b = ell_infty(&QuantumSet::from_dims(&[2]).unwrap());
        let ab = a.tensor(&b);
        for (k, &(u, v)) in a.tensor_split(&b).iter().enumerate() {
            let lhs =
                AlgebraElement::matrix_unit(&a, u).tensor(&AlgebraElement::matrix_unit(&b, v));
            assert_eq!(lhs, AlgebraElement::matrix_unit(&ab, k));
        }
    }

    #[test]
    fn projection_validation_rejects_perturbation() {
        let m = ell_infty(&QuantumSet::from_dims(&[2]).unwrap());
        let p = AlgebraElement::matrix_unit(&m, 0);
        assert!(ProjectionElement::new(p.clone(), Tolerance::default()).is_ok());
        let bumped = p.add(&AlgebraElement::matrix_unit(&m, 1).scale(c(0.01, 0.0)));
        assert!(matches!(
            ProjectionElement::new(bumped, Tolerance::default()),
            Err(Error::InvalidProjection(_))
        ));
    }
}
