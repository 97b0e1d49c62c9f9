use crate::error::{Error, Result};
use crate::numlin::{max_abs, CMatrix, Tolerance, C64, ZERO};
use crate::qset::{AlgebraElement, HAAlgebra};

/// A linear map between two [`HAAlgebra`]s, given by its matrix on coordinates
/// (`target.dim() x source.dim()`).
#[derive(Clone, Debug, PartialEq)]
pub struct BlockMap {
    source: HAAlgebra,
    target: HAAlgebra,
    matrix: CMatrix,
}

/// How far a [`BlockMap`] is from being a unital *-homomorphism.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MorphismDefects {
    pub unital: f64,
    pub multiplicative: f64,
    pub star: f64,
}

impl MorphismDefects {
    pub fn max(&self) -> f64 {
        self.unital.max(self.multiplicative).max(self.star)
    }
}

impl BlockMap {
    pub fn new(source: HAAlgebra, target: HAAlgebra, matrix: CMatrix) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "map matrix has shape {:?}, expected {}x{}",
                matrix.shape(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(BlockMap {
            source,
            target,
            matrix,
        })
    }

    /// Builds the map from the image of each source matrix unit.
    pub fn from_images(
        source: HAAlgebra,
        target: HAAlgebra,
        mut image: impl FnMut(usize) -> AlgebraElement,
    ) -> Self {
        let mut matrix = CMatrix::zeros(target.dim(), source.dim());
        for u in 0..source.dim() {
            for (t, z) in image(u).coordinates().into_iter().enumerate() {
                matrix[(t, u)] = z;
            }
        }
        BlockMap {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(alg: &HAAlgebra) -> Self {
        BlockMap {
            source: alg.clone(),
            target: alg.clone(),
            matrix: CMatrix::identity(alg.dim(), alg.dim()),
        }
    }

    pub fn source(&self) -> &HAAlgebra {
        &self.source
    }

    pub fn target(&self) -> &HAAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        let coords = x.coordinates();
        let out: Vec<C64> = (0..self.target.dim())
            .map(|t| {
                coords
                    .iter()
                    .enumerate()
                    .filter(|(_, z)| **z != ZERO)
                    .map(|(u, z)| self.matrix[(t, u)] * z)
                    .sum()
            })
            .collect();
        AlgebraElement::from_coordinates(&self.target, &out)
    }

    pub fn image_of_unit(&self, u: usize) -> AlgebraElement {
        let col: Vec<C64> = self.matrix.column(u).iter().cloned().collect();
        AlgebraElement::from_coordinates(&self.target, &col)
    }

    /// `self` after `first`.
    pub fn after(&self, first: &BlockMap) -> Result<BlockMap> {
        if !first.target.same_shape(&self.source) {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose map from {:?} after map into {:?}",
                self.source.block_dims(),
                first.target.block_dims()
            )));
        }
        Ok(BlockMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &first.matrix,
        })
    }

    /// `self (x) other` from `S (x) S'` to `T (x) T'`.
    pub fn tensor(&self, other: &BlockMap) -> BlockMap {
        let source = self.source.tensor(&other.source);
        let target = self.target.tensor(&other.target);
        let src = self.source.tensor_split(&other.source);
        let tgt = self.target.tensor_split(&other.target);
        let mut matrix = CMatrix::zeros(target.dim(), source.dim());
        for (w, &(u, v)) in src.iter().enumerate() {
            let fu = self.matrix.column(u);
            let gv = other.matrix.column(v);
            for (t, &(u2, v2)) in tgt.iter().enumerate() {
                let a = fu[u2];
                if a != ZERO {
                    matrix[(t, w)] = a * gv[v2];
                }
            }
        }
        BlockMap {
            source,
            target,
            matrix,
        }
    }

    /// The same map between opposite algebras, `x^T -> f(x)^T`.
    pub fn op(&self) -> BlockMap {
        let ts = self.source.transpose_permutation();
        let tt = self.target.transpose_permutation();
        let matrix = CMatrix::from_fn(self.target.dim(), self.source.dim(), |t, u| {
            self.matrix[(tt[t], ts[u])]
        });
        BlockMap {
            source: self.source.opposite(),
            target: self.target.opposite(),
            matrix,
        }
    }

    /// Post-composition with the blockwise transpose, landing in the
    /// opposite of the target.
    pub fn then_transpose(&self) -> BlockMap {
        let tt = self.target.transpose_permutation();
        let matrix = CMatrix::from_fn(self.target.dim(), self.source.dim(), |t, u| {
            self.matrix[(tt[t], u)]
        });
        BlockMap {
            source: self.source.clone(),
            target: self.target.opposite(),
            matrix,
        }
    }

    /// Reinterprets source and target as algebras of the same shape.
    pub fn relabel(&self, source: HAAlgebra, target: HAAlgebra) -> Result<BlockMap> {
        if !source.same_shape(&self.source) || !target.same_shape(&self.target) {
            return Err(Error::ShapeMismatch(
                "relabeling must keep block sizes".into(),
            ));
        }
        Ok(BlockMap {
            source,
            target,
            matrix: self.matrix.clone(),
        })
    }

    pub fn max_abs_diff(&self, other: &BlockMap) -> f64 {
        if self.matrix.shape() != other.matrix.shape() {
            return f64::INFINITY;
        }
        max_abs(&(&self.matrix - &other.matrix))
    }

    pub fn defects(&self) -> MorphismDefects {
        let one = AlgebraElement::one(&self.source);
        let unital = self
            .apply(&one)
            .max_abs_diff(&AlgebraElement::one(&self.target));
        let images: Vec<AlgebraElement> = (0..self.source.dim())
            .map(|u| self.image_of_unit(u))
            .collect();
        let zero = AlgebraElement::zero(&self.target);
        let mut multiplicative: f64 = 0.0;
        let mut star: f64 = 0.0;
        for u in 0..self.source.dim() {
            let adj = &images[self.source.adjoint_coordinate(u)];
            star = star.max(images[u].adjoint().max_abs_diff(adj));
            for v in 0..self.source.dim() {
                let prod = images[u].mul(&images[v]);
                let expected = match self.source.unit_product(u, v) {
                    Some(w) => &images[w],
                    None => &zero,
                };
                multiplicative = multiplicative.max(prod.max_abs_diff(expected));
            }
        }
        MorphismDefects {
            unital,
            multiplicative,
            star,
        }
    }

    /// Nonzero `(source block, target block)` sub-matrices.
    pub fn block_pairs(&self) -> Vec<(usize, usize, CMatrix)> {
        let mut out = Vec::new();
        for i in 0..self.source.num_blocks() {
            let (si, ni) = (self.source.offset(i), self.source.block_dim(i).pow(2));
            for j in 0..self.target.num_blocks() {
                let (tj, nj) = (self.target.offset(j), self.target.block_dim(j).pow(2));
                let sub = self.matrix.view((tj, si), (nj, ni)).clone_owned();
                if sub.iter().any(|z| *z != ZERO) {
                    out.push((i, j, sub));
                }
            }
        }
        out
    }

    pub fn from_block_pairs(
        source: HAAlgebra,
        target: HAAlgebra,
        pairs: &[(usize, usize, CMatrix)],
    ) -> Result<Self> {
        let mut matrix = CMatrix::zeros(target.dim(), source.dim());
        for (i, j, sub) in pairs {
            if *i >= source.num_blocks() || *j >= target.num_blocks() {
                return Err(Error::Format(format!("block pair ({i}, {j}) out of range")));
            }
            let (ni, nj) = (source.block_dim(*i).pow(2), target.block_dim(*j).pow(2));
            if sub.shape() != (nj, ni) {
                return Err(Error::ShapeMismatch(format!(
                    "block pair ({i}, {j}) has shape {:?}, expected {nj}x{ni}",
                    sub.shape()
                )));
            }
            matrix
                .view_mut((target.offset(*j), source.offset(*i)), (nj, ni))
                .copy_from(sub);
        }
        Self::new(source, target, matrix)
    }
}

/// A unital *-homomorphism between finite products of matrix algebras.
/// Normality is automatic in finite dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct WStarMorphism(BlockMap);

impl WStarMorphism {
    pub fn new(map: BlockMap, tol: Tolerance) -> Result<Self> {
        let d = map.defects();
        if d.max() > tol.get() {
            return Err(Error::InvalidMorphism(format!(
                "unital defect {:.3e}, multiplicative defect {:.3e}, adjoint defect {:.3e}",
                d.unital, d.multiplicative, d.star
            )));
        }
        Ok(WStarMorphism(map))
    }

    pub(crate) fn new_unchecked(map: BlockMap) -> Self {
        WStarMorphism(map)
    }

    pub fn identity(alg: &HAAlgebra) -> Self {
        WStarMorphism(BlockMap::identity(alg))
    }

    pub fn map(&self) -> &BlockMap {
        &self.0
    }

    pub fn into_map(self) -> BlockMap {
        self.0
    }

    pub fn source(&self) -> &HAAlgebra {
        self.0.source()
    }

    pub fn target(&self) -> &HAAlgebra {
        self.0.target()
    }

    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        self.0.apply(x)
    }

    pub fn after(&self, first: &WStarMorphism) -> Result<WStarMorphism> {
        Ok(WStarMorphism(self.0.after(&first.0)?))
    }

    pub fn tensor(&self, other: &WStarMorphism) -> WStarMorphism {
        WStarMorphism(self.0.tensor(&other.0))
    }

    pub fn op(&self) -> WStarMorphism {
        WStarMorphism(self.0.op())
    }
}
