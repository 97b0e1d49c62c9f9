use super::dense::thin_svd;

use super::{hs_norm, CMatrix, Tolerance};
use crate::error::{Error, Result};

/// Minimal-norm least-squares solution of `a x = b`.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub solution: CMatrix,
    /// Frobenius norm of `a x - b`.
    pub residual: f64,
    /// Dimension of the null space of `a`; zero means the solution is unique.
    pub nullity: usize,
}

/// Solves `a x = b` (possibly with several right-hand sides) in the
/// least-squares sense and rejects it when the residual exceeds `tol`.
pub fn solve_linear(a: &CMatrix, b: &CMatrix, tol: Tolerance) -> Result<LinearSolution> {
    let (m, n) = a.shape();
    if b.nrows() != m {
        return Err(Error::ShapeMismatch(format!(
            "system has {} equations but right-hand side has {} rows",
            m,
            b.nrows()
        )));
    }
    if m == 0 || n == 0 {
        let residual = hs_norm(b);
        if residual > tol.get() {
            return Err(Error::NoSolution { residual });
        }
        return Ok(LinearSolution {
            solution: CMatrix::zeros(n, b.ncols()),
            residual,
            nullity: n,
        });
    }
    let svd = thin_svd(a);
    let largest = svd.values.iter().cloned().fold(0.0, f64::max);
    let cutoff = tol.cutoff(largest);
    let rank = svd.values.iter().filter(|&&s| s > cutoff).count();
    // x = V diag(1/s) U* b over the retained singular values.
    let mut x = CMatrix::zeros(n, b.ncols());
    let ub = svd.u.adjoint() * b;
    for (k, &s) in svd.values.iter().enumerate() {
        if s <= cutoff {
            continue;
        }
        for col in 0..b.ncols() {
            let coeff = ub[(k, col)] / s;
            for i in 0..n {
                x[(i, col)] += svd.v[(i, k)] * coeff;
            }
        }
    }
    let residual = hs_norm(&(a * &x - b));
    if residual > tol.get() {
        return Err(Error::NoSolution { residual });
    }
    Ok(LinearSolution {
        solution: x,
        residual,
        nullity: n - rank,
    })
}
