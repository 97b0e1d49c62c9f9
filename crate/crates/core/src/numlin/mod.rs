//! Dense complex linear algebra used by every other module.
//!
//! All matrices are `nalgebra` dense matrices over `Complex64`. Matrices are
//! vectorized in row-major order throughout the crate: entry `(i, j)` of an
//! `r x c` matrix sits at index `i * c + j`.

mod dense;
mod solve;
mod subspace;
mod wedderburn;

pub use solve::{solve_linear, LinearSolution};
pub use subspace::{span, subspace_leq, subspace_product, OperatorSubspace};
pub use wedderburn::{generated_algebra, wedderburn_decompose, WedderburnDecomposition};

use nalgebra::Complex;
use nalgebra::{DMatrix, DVector};

type Complex64 = Complex<f64>;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const ZERO: C64 = Complex64::new(0.0, 0.0);
pub const ONE: C64 = Complex64::new(1.0, 0.0);
pub const I: C64 = Complex64::new(0.0, 1.0);

/// Numerical threshold for rank and equality decisions.
///
/// Data handled by the crate is unit-normalized (orthonormal bases,
/// projections, states), so thresholds are absolute once singular values
/// are at most one and relative to the largest singular value otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT: f64 = 1e-9;

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Tolerance(value))
        } else {
            Err(Error::InvalidTolerance(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// Cutoff for singular values given the largest one.
    pub fn cutoff(self, largest: f64) -> f64 {
        self.0 * largest.max(1.0)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(Self::DEFAULT)
    }
}

pub fn c(re: f64, im: f64) -> C64 {
    Complex64::new(re, im)
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// The matrix unit `E_ij` of shape `rows x cols`.
pub fn matrix_unit(rows: usize, cols: usize, i: usize, j: usize) -> CMatrix {
    let mut m = CMatrix::zeros(rows, cols);
    m[(i, j)] = ONE;
    m
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Hilbert-Schmidt inner product `trace(a* b)`.
pub fn hs_inner(a: &CMatrix, b: &CMatrix) -> Result<C64> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch(format!(
            "hs_inner of {:?} and {:?}",
            a.shape(),
            b.shape()
        )));
    }
    Ok(a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum())
}

pub fn hs_norm(a: &CMatrix) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest entry modulus; zero for empty matrices.
pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

pub fn vectorize(a: &CMatrix) -> CVector {
    let (r, c) = a.shape();
    CVector::from_fn(r * c, |k, _| a[(k / c, k % c)])
}

pub fn unvectorize(v: &[C64], rows: usize, cols: usize) -> CMatrix {
    debug_assert_eq!(v.len(), rows * cols);
    CMatrix::from_fn(rows, cols, |i, j| v[i * cols + j])
}

pub fn column_to_matrix(frame: &CMatrix, col: usize, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |i, j| frame[(i * cols + j, col)])
}

/// Stacks row-major vectorizations of `mats` as columns.
pub fn frame_of(mats: &[CMatrix], len: usize) -> CMatrix {
    let mut f = CMatrix::zeros(len, mats.len());
    for (k, m) in mats.iter().enumerate() {
        let (r, c) = m.shape();
        for i in 0..r {
            for j in 0..c {
                f[(i * c + j, k)] = m[(i, j)];
            }
        }
    }
    f
}

/// Orthonormal columns spanning the column space of `frame`.
pub fn range_basis(frame: &CMatrix, tol: Tolerance) -> CMatrix {
    let (n, k) = frame.shape();
    if n == 0 || k == 0 {
        return CMatrix::zeros(n, 0);
    }
    let svd = dense::thin_svd(frame);
    let largest = svd.values.iter().cloned().fold(0.0, f64::max);
    let cutoff = tol.cutoff(largest);
    let keep: Vec<usize> = (0..svd.values.len())
        .filter(|&i| svd.values[i] > cutoff)
        .collect();
    CMatrix::from_fn(n, keep.len(), |i, j| svd.u[(i, keep[j])])
}

/// Orthonormal columns spanning the null space of `a`.
pub fn null_space(a: &CMatrix, tol: Tolerance) -> CMatrix {
    let (m, n) = a.shape();
    if n == 0 {
        return CMatrix::zeros(0, 0);
    }
    if m == 0 {
        return identity(n);
    }
    let (values, v) = dense::right_singular_basis(a);
    let largest = values.iter().cloned().fold(0.0, f64::max);
    let cutoff = tol.cutoff(largest);
    let null: Vec<usize> = (0..n)
        .filter(|&i| values.get(i).is_none_or(|&s| s <= cutoff))
        .collect();
    CMatrix::from_fn(n, null.len(), |i, j| v[(i, null[j])])
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eigen(h: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = h.nrows();
    if n == 0 {
        return (Vec::new(), CMatrix::zeros(0, 0));
    }
    let sym = (h + h.adjoint()) * c(0.5, 0.0);
    let (values, vectors) = dense::self_adjoint_eigen(&sym);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let sorted = order.iter().map(|&i| values[i]).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| vectors[(i, order[j])]);
    (sorted, vectors)
}

/// Orthogonal projection onto the span of the orthonormal columns of `q`.
pub fn projector(q: &CMatrix) -> CMatrix {
    q * q.adjoint()
}

/// Projection onto the range of a positive semidefinite matrix.
pub fn range_projection(psd: &CMatrix, tol: Tolerance) -> CMatrix {
    let n = psd.nrows();
    let (values, vectors) = hermitian_eigen(psd);
    let largest = values.iter().cloned().fold(0.0, f64::max);
    let cutoff = tol.cutoff(largest);
    let keep: Vec<usize> = (0..n).filter(|&i| values[i] > cutoff).collect();
    let q = CMatrix::from_fn(n, keep.len(), |i, j| vectors[(i, keep[j])]);
    projector(&q)
}

/// Defect of `p` as a projection: `max(|p^2 - p|, |p* - p|)` entrywise.
pub fn projection_defect(p: &CMatrix) -> f64 {
    let sq = p * p - p;
    let adj = p.adjoint() - p;
    max_abs(&sq).max(max_abs(&adj))
}

/// Blockwise transpose permutation on row-major coordinates of an `n x n` block.
pub fn transpose_index(n: usize, k: usize) -> usize {
    let (i, j) = (k / n, k % n);
    j * n + i
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hs_inner_identity_and_units() {
        let i2 = identity(2);
        assert_eq!(hs_inner(&i2, &i2).unwrap(), c(2.0, 0.0));
        let e11 = matrix_unit(2, 2, 0, 0);
        let e22 = matrix_unit(2, 2, 1, 1);
        assert_eq!(hs_inner(&e11, &e22).unwrap(), ZERO);
    }

    #[test]
    fn hs_inner_shape_mismatch() {
        assert!(matches!(
            hs_inner(&identity(2), &identity(3)),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn hs_inner_is_conjugate_symmetric_and_squares_frobenius() {
        let a = CMatrix::from_fn(2, 3, |i, j| c(i as f64 + 0.5, j as f64 - 1.0));
        let b = CMatrix::from_fn(2, 3, |i, j| c((i * j) as f64, 1.0));
        let ab = hs_inner(&a, &b).unwrap();
        let ba = hs_inner(&b, &a).unwrap();
        assert!((ab - ba.conj()).norm() < 1e-14);
        // direct summation oracle
        let mut sum = 0.0;
        for i in 0..2 {
            for j in 0..3 {
                sum += a[(i, j)].re * a[(i, j)].re + a[(i, j)].im * a[(i, j)].im;
            }
        }
        assert!((hs_inner(&a, &a).unwrap().re - sum).abs() < 1e-12);
    }

    #[test]
    fn tolerance_rejects_nonpositive() {
        assert!(Tolerance::new(0.0).is_err());
        assert!(Tolerance::new(f64::NAN).is_err());
        assert_eq!(Tolerance::default().get(), 1e-9);
    }

    #[test]
    fn null_space_of_wide_matrix() {
        let a = CMatrix::from_row_slice(1, 3, &[ONE, ONE, ZERO]);
        let n = null_space(&a, Tolerance::default());
        assert_eq!(n.ncols(), 2);
        assert!(max_abs(&(&a * &n)) < 1e-12);
    }

    #[test]
    fn vectorize_roundtrip_row_major() {
        let a = CMatrix::from_fn(2, 3, |i, j| c((3 * i + j) as f64, 0.0));
        let v = vectorize(&a);
        assert_eq!(v[4], c(4.0, 0.0));
        assert_eq!(unvectorize(v.as_slice(), 2, 3), a);
    }
}
