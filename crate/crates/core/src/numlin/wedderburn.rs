//! Block decomposition of a concrete finite-dimensional *-algebra of matrices.
//!
//! The minimal central projections come from the spectral decomposition of
//! a random self-adjoint central element; inside each central summand a
//! random self-adjoint element supplies a maximal family of orthogonal
//! minimal projections, and compressions of random elements between them
//! supply the off-diagonal matrix units.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    c, hermitian_eigen, hs_norm, max_abs, null_space, projector, CMatrix, OperatorSubspace,
    Tolerance, C64, ZERO,
};
use crate::error::{Error, Result};
use crate::random::random_complex;

/// A *-isomorphism from a matrix algebra `A <= M_N` onto `M_{n_1} + ... + M_{n_k}`.
#[derive(Clone, Debug)]
pub struct WedderburnDecomposition {
    block_dims: Vec<usize>,
    multiplicities: Vec<usize>,
    /// Per block, the matrix units `e_jk` at index `j * n + k`.
    units: Vec<Vec<CMatrix>>,
    ambient: usize,
}

impl WedderburnDecomposition {
    pub fn block_dims(&self) -> &[usize] {
        &self.block_dims
    }

    /// Multiplicity of each block in the ambient representation.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn algebra_dim(&self) -> usize {
        self.block_dims.iter().map(|n| n * n).sum()
    }

    /// The matrix unit `e_jk` of block `b`, as an ambient matrix.
    pub fn matrix_unit(&self, b: usize, j: usize, k: usize) -> &CMatrix {
        &self.units[b][j * self.block_dims[b] + k]
    }

    /// Coordinates of `a` in the block-diagonal form.
    pub fn to_blocks(&self, a: &CMatrix) -> Vec<CMatrix> {
        self.block_dims
            .iter()
            .enumerate()
            .map(|(b, &n)| {
                let m = self.multiplicities[b] as f64;
                CMatrix::from_fn(n, n, |j, k| {
                    let e = &self.units[b][j * n + k];
                    e.iter()
                        .zip(a.iter())
                        .map(|(x, y)| x.conj() * y)
                        .sum::<C64>()
                        / m
                })
            })
            .collect()
    }

    pub fn from_blocks(&self, blocks: &[CMatrix]) -> CMatrix {
        let mut out = CMatrix::zeros(self.ambient, self.ambient);
        for (b, &n) in self.block_dims.iter().enumerate() {
            for j in 0..n {
                for k in 0..n {
                    let x = blocks[b][(j, k)];
                    if x != ZERO {
                        out += &self.units[b][j * n + k] * x;
                    }
                }
            }
        }
        out
    }
}

/// Basis of the unital algebra generated by `generators` with unit `unit`.
pub fn generated_algebra(
    generators: &[CMatrix],
    unit: &CMatrix,
    tol: Tolerance,
) -> Result<OperatorSubspace> {
    let n = unit.nrows();
    if unit.shape() != (n, n) || generators.iter().any(|g| g.shape() != (n, n)) {
        return Err(Error::ShapeMismatch(
            "generators and unit must be square of one size".into(),
        ));
    }
    let mut seeds = vec![unit.clone()];
    seeds.extend(generators.iter().cloned());
    let mut alg = OperatorSubspace::span_in(n, n, &seeds, tol)?;
    loop {
        let mut words: Vec<CMatrix> = alg.basis().to_vec();
        for b in alg.basis() {
            for g in generators {
                words.push(b * g);
            }
        }
        let next = OperatorSubspace::span_in(n, n, &words, tol)?;
        if next.dim() == alg.dim() {
            return Ok(next);
        }
        alg = next;
    }
}

fn random_element(basis: &[CMatrix], rng: &mut ChaCha8Rng) -> CMatrix {
    let n = basis[0].nrows();
    let mut out = CMatrix::zeros(n, n);
    for b in basis {
        out += b * random_complex(rng);
    }
    out
}

/// Splits eigenvalues into clusters separated by more than `gap`; returns
/// the spectral projections.
fn spectral_projections(h: &CMatrix, gap: f64) -> Vec<CMatrix> {
    let (values, vectors) = hermitian_eigen(h);
    let n = values.len();
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || values[i] - values[i - 1] > gap {
            let q = CMatrix::from_fn(n, i - start, |r, k| vectors[(r, start + k)]);
            out.push(projector(&q));
            start = i;
        }
    }
    out
}

/// Decomposes the *-algebra generated by `generators` (with unit `unit`)
/// into full matrix blocks. Blocks are ordered by size; ties keep the
/// order of the central spectral decomposition, which depends on `seed`.
pub fn wedderburn_decompose(
    generators: &[CMatrix],
    unit: &CMatrix,
    seed: u64,
    tol: Tolerance,
) -> Result<WedderburnDecomposition> {
    let n = unit.nrows();
    let alg = generated_algebra(generators, unit, tol)?;
    let defect = alg
        .basis()
        .iter()
        .map(|b| alg.distance(&b.adjoint()))
        .fold(0.0, f64::max);
    if defect > tol.get() {
        return Err(Error::NotSelfAdjointAlgebra(defect));
    }
    let basis = alg.basis();
    let d = basis.len();

    // Center: combinations of the basis commuting with every generator.
    let mut constraints = CMatrix::zeros(n * n * generators.len().max(1), d);
    for (gi, g) in generators.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            let comm = b * g - g * b;
            for r in 0..n {
                for s in 0..n {
                    constraints[(gi * n * n + r * n + s, k)] = comm[(r, s)];
                }
            }
        }
    }
    let center_coeffs = null_space(&constraints, tol);
    let center_dim = center_coeffs.ncols();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gap = tol.get().sqrt();

    let mut h = CMatrix::zeros(n, n);
    for z in 0..center_dim {
        let mut zc = CMatrix::zeros(n, n);
        for (k, b) in basis.iter().enumerate() {
            zc += b * center_coeffs[(k, z)];
        }
        h += zc * random_complex(&mut rng);
    }
    let h = (&h + h.adjoint()) * c(0.5, 0.0);
    let central: Vec<CMatrix> = spectral_projections(&h, gap)
        .into_iter()
        .map(|p| p * unit)
        .filter(|p| hs_norm(p) > 0.5)
        .collect();
    if central.len() != center_dim {
        return Err(Error::ToleranceBreakdown(format!(
            "found {} central spectral projections for a center of dimension {}",
            central.len(),
            center_dim
        )));
    }

    let mut blocks: Vec<(usize, usize, Vec<CMatrix>)> = Vec::with_capacity(center_dim);
    for z in &central {
        let compressed: Vec<CMatrix> = basis.iter().map(|b| b * z).collect();
        let summand = OperatorSubspace::span_in(n, n, &compressed, tol)?;
        let dim = summand.dim();
        let block = (dim as f64).sqrt().round() as usize;
        if block * block != dim || block == 0 {
            return Err(Error::ToleranceBreakdown(format!(
                "central summand has dimension {dim}, not a square"
            )));
        }
        let rank = z.trace().re.round() as usize;
        if !rank.is_multiple_of(block) {
            return Err(Error::ToleranceBreakdown(format!(
                "central projection of rank {rank} cannot carry a {block}x{block} block"
            )));
        }
        let mult = rank / block;
        let units = if block == 1 {
            vec![z.clone()]
        } else {
            matrix_units(summand.basis(), z, block, mult, gap, &mut rng)?
        };
        blocks.push((block, mult, units));
    }
    blocks.sort_by_key(|(block, _, _)| *block);

    let dec = WedderburnDecomposition {
        block_dims: blocks.iter().map(|b| b.0).collect(),
        multiplicities: blocks.iter().map(|b| b.1).collect(),
        units: blocks.into_iter().map(|b| b.2).collect(),
        ambient: n,
    };
    if dec.algebra_dim() != d {
        return Err(Error::ToleranceBreakdown(format!(
            "block dimensions {:?} do not account for an algebra of dimension {}",
            dec.block_dims, d
        )));
    }
    verify(&dec, basis, &mut rng, tol)?;
    Ok(dec)
}

fn matrix_units(
    summand: &[CMatrix],
    z: &CMatrix,
    block: usize,
    mult: usize,
    gap: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<CMatrix>> {
    let a = random_element(summand, rng);
    let h = (&a + a.adjoint()) * c(0.5, 0.0);
    let minimal: Vec<CMatrix> = spectral_projections(&h, gap)
        .into_iter()
        .map(|p| p * z)
        .filter(|p| hs_norm(p) > 0.5)
        .collect();
    if minimal.len() != block {
        return Err(Error::ToleranceBreakdown(format!(
            "expected {block} minimal projections in a central summand, found {}",
            minimal.len()
        )));
    }
    let m = mult as f64;
    let first = &minimal[0];
    let mut row: Vec<CMatrix> = Vec::with_capacity(block);
    row.push(first.clone());
    for q in &minimal[1..] {
        let x = first * random_element(summand, rng) * q;
        let lambda = (&x * x.adjoint()).trace().re / m;
        if lambda <= gap {
            return Err(Error::ToleranceBreakdown(
                "degenerate compression between minimal projections".into(),
            ));
        }
        row.push(x / c(lambda.sqrt(), 0.0));
    }
    let mut units = Vec::with_capacity(block * block);
    for j in 0..block {
        for k in 0..block {
            units.push(row[j].adjoint() * &row[k]);
        }
    }
    Ok(units)
}

fn verify(
    dec: &WedderburnDecomposition,
    basis: &[CMatrix],
    rng: &mut ChaCha8Rng,
    tol: Tolerance,
) -> Result<()> {
    let mut worst: f64 = 0.0;
    for _ in 0..8 {
        let x = random_element(basis, rng);
        let y = random_element(basis, rng);
        let (bx, by) = (dec.to_blocks(&x), dec.to_blocks(&y));
        let bxy = dec.to_blocks(&(&x * &y));
        let bxa = dec.to_blocks(&x.adjoint());
        for b in 0..bx.len() {
            worst = worst.max(max_abs(&(&bx[b] * &by[b] - &bxy[b])));
            worst = worst.max(max_abs(&(bx[b].adjoint() - &bxa[b])));
        }
        worst = worst.max(max_abs(&(dec.from_blocks(&bx) - &x)));
    }
    let scale = basis.iter().map(hs_norm).fold(1.0, f64::max);
    if worst > 1e3 * tol.get() * scale * basis.len() as f64 {
        return Err(Error::ToleranceBreakdown(format!(
            "block isomorphism check failed with defect {worst:.3e}"
        )));
    }
    Ok(())
}
