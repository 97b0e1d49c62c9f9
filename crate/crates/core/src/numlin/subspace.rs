use super::{
    column_to_matrix, frame_of, hs_norm, kron, null_space, range_basis, CMatrix, Tolerance,
};
use crate::error::{Error, Result};

/// A subspace of `L(C^dom_dim, C^cod_dim)`, held as an orthonormal basis
/// under the Hilbert-Schmidt inner product. The zero subspace has an empty
/// basis.
#[derive(Clone, Debug)]
pub struct OperatorSubspace {
    dom_dim: usize,
    cod_dim: usize,
    basis: Vec<CMatrix>,
}

/// Orthonormal basis of the span of `mats`, which must be nonempty and of one shape.
pub fn span(mats: &[CMatrix], tol: Tolerance) -> Result<OperatorSubspace> {
    let first = mats
        .first()
        .ok_or_else(|| Error::ShapeMismatch("span of an empty list has no shape".into()))?;
    OperatorSubspace::span_in(first.ncols(), first.nrows(), mats, tol)
}

pub fn subspace_leq(s: &OperatorSubspace, t: &OperatorSubspace, tol: Tolerance) -> Result<bool> {
    s.leq(t, tol)
}

/// Span of all products `a b` with `a` in `s` and `b` in `t`.
pub fn subspace_product(
    s: &OperatorSubspace,
    t: &OperatorSubspace,
    tol: Tolerance,
) -> Result<OperatorSubspace> {
    s.product(t, tol)
}

impl OperatorSubspace {
    pub fn zero(dom_dim: usize, cod_dim: usize) -> Self {
        OperatorSubspace {
            dom_dim,
            cod_dim,
            basis: Vec::new(),
        }
    }

    /// All of `L(C^dom_dim, C^cod_dim)`, spanned by matrix units.
    pub fn full(dom_dim: usize, cod_dim: usize) -> Self {
        let mut basis = Vec::with_capacity(dom_dim * cod_dim);
        for i in 0..cod_dim {
            for j in 0..dom_dim {
                basis.push(super::matrix_unit(cod_dim, dom_dim, i, j));
            }
        }
        OperatorSubspace {
            dom_dim,
            cod_dim,
            basis,
        }
    }

    /// `C * m`, or zero if `m` vanishes.
    pub fn scalar_multiples(m: &CMatrix, tol: Tolerance) -> Self {
        Self::span_in(m.ncols(), m.nrows(), std::slice::from_ref(m), tol)
            .expect("shape taken from the matrix itself")
    }

    pub fn span_in(
        dom_dim: usize,
        cod_dim: usize,
        mats: &[CMatrix],
        tol: Tolerance,
    ) -> Result<Self> {
        for m in mats {
            if m.shape() != (cod_dim, dom_dim) {
                return Err(Error::ShapeMismatch(format!(
                    "expected {}x{} operator, got {:?}",
                    cod_dim,
                    dom_dim,
                    m.shape()
                )));
            }
        }
        let frame = frame_of(mats, dom_dim * cod_dim);
        Ok(Self::from_frame(dom_dim, cod_dim, &frame, tol))
    }

    /// Subspace spanned by the columns of `frame`, each a row-major vectorized operator.
    pub fn from_frame(dom_dim: usize, cod_dim: usize, frame: &CMatrix, tol: Tolerance) -> Self {
        debug_assert_eq!(frame.nrows(), dom_dim * cod_dim);
        let q = range_basis(frame, tol);
        Self::from_orthonormal_frame(dom_dim, cod_dim, &q)
    }

    fn from_orthonormal_frame(dom_dim: usize, cod_dim: usize, q: &CMatrix) -> Self {
        let basis = (0..q.ncols())
            .map(|k| column_to_matrix(q, k, cod_dim, dom_dim))
            .collect();
        OperatorSubspace {
            dom_dim,
            cod_dim,
            basis,
        }
    }

    pub fn dom_dim(&self) -> usize {
        self.dom_dim
    }

    pub fn cod_dim(&self) -> usize {
        self.cod_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.dom_dim * self.cod_dim
    }

    pub fn basis(&self) -> &[CMatrix] {
        &self.basis
    }

    /// Orthonormal basis as columns of vectorized operators.
    pub fn frame(&self) -> CMatrix {
        frame_of(&self.basis, self.dom_dim * self.cod_dim)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if (self.dom_dim, self.cod_dim) != (other.dom_dim, other.cod_dim) {
            return Err(Error::ShapeMismatch(format!(
                "subspaces of L({}, {}) and L({}, {})",
                self.dom_dim, self.cod_dim, other.dom_dim, other.cod_dim
            )));
        }
        Ok(())
    }

    /// Orthogonal projection of `m` onto this subspace.
    pub fn project(&self, m: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(self.cod_dim, self.dom_dim);
        for b in &self.basis {
            let coeff: super::C64 = b.iter().zip(m.iter()).map(|(x, y)| x.conj() * y).sum();
            out += b * coeff;
        }
        out
    }

    /// HS norm of the component of `m` orthogonal to this subspace.
    pub fn distance(&self, m: &CMatrix) -> f64 {
        hs_norm(&(m - self.project(m)))
    }

    pub fn contains(&self, m: &CMatrix, tol: Tolerance) -> bool {
        self.distance(m) <= tol.get() * hs_norm(m).max(1.0)
    }

    /// Largest distance of a basis element of `self` from `other`.
    pub fn leq_residual(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self
            .basis
            .iter()
            .map(|b| other.distance(b))
            .fold(0.0, f64::max))
    }

    pub fn leq(&self, other: &Self, tol: Tolerance) -> Result<bool> {
        Ok(self.leq_residual(other)? <= tol.get())
    }

    pub fn equals(&self, other: &Self, tol: Tolerance) -> Result<bool> {
        Ok(self.leq(other, tol)? && other.leq(self, tol)?)
    }

    pub fn join(&self, other: &Self, tol: Tolerance) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span_in(self.dom_dim, self.cod_dim, &all, tol)
    }

    pub fn meet(&self, other: &Self, tol: Tolerance) -> Result<Self> {
        self.check_same_shape(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.dom_dim, self.cod_dim));
        }
        // x = F c lies in `other` iff (1 - P_other) F c = 0.
        let f = self.frame();
        let g = other.frame();
        let outside = &f - &g * (g.adjoint() * &f);
        let coeffs = null_space(&outside, tol);
        let q = &f * coeffs;
        Ok(Self::from_frame(self.dom_dim, self.cod_dim, &q, tol))
    }

    /// Span of the products `s t`, `s` here and `t` in `right`.
    pub fn product(&self, right: &Self, tol: Tolerance) -> Result<Self> {
        if self.dom_dim != right.cod_dim {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose L({}, {}) after L({}, {})",
                self.dom_dim, self.cod_dim, right.dom_dim, right.cod_dim
            )));
        }
        let prods: Vec<CMatrix> = self
            .basis
            .iter()
            .flat_map(|s| right.basis.iter().map(move |t| s * t))
            .collect();
        Self::span_in(right.dom_dim, self.cod_dim, &prods, tol)
    }

    pub fn adjoint(&self) -> Self {
        OperatorSubspace {
            dom_dim: self.cod_dim,
            cod_dim: self.dom_dim,
            basis: self.basis.iter().map(|b| b.adjoint()).collect(),
        }
    }

    /// Span of Kronecker products; orthonormality is preserved exactly.
    pub fn kron(&self, other: &Self) -> Self {
        let basis = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| kron(a, b)))
            .collect();
        OperatorSubspace {
            dom_dim: self.dom_dim * other.dom_dim,
            cod_dim: self.cod_dim * other.cod_dim,
            basis,
        }
    }

    /// Largest deviation of the Gram matrix from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let f = self.frame();
        let gram = f.adjoint() * &f - super::identity(self.basis.len());
        super::max_abs(&gram)
    }
}
