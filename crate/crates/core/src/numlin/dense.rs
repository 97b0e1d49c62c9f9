//! Dense factorizations delegated to `faer`.
//!
//! nalgebra's SVD returns inaccurate factors on some nearly rank-deficient
//! inputs (for example three nearly equal columns), so singular value and
//! Hermitian eigen-decompositions go through `faer` instead.

use faer::{c64, Mat, Side};

use super::{CMatrix, C64};

fn to_faer(a: &CMatrix) -> Mat<c64> {
    Mat::from_fn(a.nrows(), a.ncols(), |i, j| {
        let z = a[(i, j)];
        c64::new(z.re, z.im)
    })
}

fn from_faer(m: faer::MatRef<'_, c64>) -> CMatrix {
    CMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        let z = m[(i, j)];
        C64::new(z.re, z.im)
    })
}

pub(crate) struct ThinSvd {
    pub u: CMatrix,
    pub values: Vec<f64>,
    pub v: CMatrix,
}

/// `a = u diag(values) v*` with `min(m, n)` singular triples.
pub(crate) fn thin_svd(a: &CMatrix) -> ThinSvd {
    let svd = to_faer(a)
        .thin_svd()
        .expect("singular value decomposition converges");
    let k = a.nrows().min(a.ncols());
    ThinSvd {
        u: from_faer(svd.U()),
        values: (0..k).map(|i| svd.S()[i].re).collect(),
        v: from_faer(svd.V()),
    }
}

/// Singular values and a full unitary matrix of right singular vectors.
pub(crate) fn right_singular_basis(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let svd = to_faer(a)
        .svd()
        .expect("singular value decomposition converges");
    let k = a.nrows().min(a.ncols());
    ((0..k).map(|i| svd.S()[i].re).collect(), from_faer(svd.V()))
}

/// Eigenvalues and eigenvectors of a Hermitian matrix.
pub(crate) fn self_adjoint_eigen(h: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = to_faer(h)
        .self_adjoint_eigen(Side::Lower)
        .expect("Hermitian eigen-decomposition converges");
    let n = h.nrows();
    ((0..n).map(|i| eig.S()[i].re).collect(), from_faer(eig.U()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numlin::max_abs;

    #[test]
    fn svd_of_nearly_parallel_columns() {
        let e = 1e-16;
        let a = CMatrix::from_fn(4, 3, |i, j| match i {
            0 | 3 => C64::new(0.5, 0.0),
            _ => C64::new(e * j as f64, -e),
        });
        let svd = thin_svd(&a);
        let sigma = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            3,
            svd.values.iter().map(|&s| C64::new(s, 0.0)),
        ));
        let rebuilt = &svd.u * sigma * svd.v.adjoint();
        assert!(max_abs(&(rebuilt - &a)) < 1e-14);
        assert!((svd.values[0] - 1.5f64.sqrt()).abs() < 1e-14);
    }
}
