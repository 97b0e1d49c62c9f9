//! Independent reference implementations used as oracles.
#![allow(dead_code)]

use qrelkit::numlin::{hs_norm, CMatrix};
use qrelkit::qset::AlgebraElement;

pub type BoolRel = Vec<Vec<bool>>;

pub fn bool_compose(r: &BoolRel, s: &BoolRel) -> BoolRel {
    // s after r
    let n = r.len();
    let m = s.len();
    let k = s.first().map_or(0, |row| row.len());
    (0..n)
        .map(|i| {
            (0..k)
                .map(|j| (0..m).any(|mid| r[i][mid] && s[mid][j]))
                .collect()
        })
        .collect()
}

pub fn bool_dagger(r: &BoolRel) -> BoolRel {
    let n = r.len();
    let m = r.first().map_or(0, |row| row.len());
    (0..m).map(|j| (0..n).map(|i| r[i][j]).collect()).collect()
}

pub fn bool_leq(r: &BoolRel, s: &BoolRel) -> bool {
    r.iter()
        .zip(s)
        .all(|(a, b)| a.iter().zip(b).all(|(x, y)| !*x || *y))
}

/// `(x, x') ~ (y, y')` iff `x r y` and `x' s y'`, pairs indexed row-major.
pub fn bool_product(r: &BoolRel, s: &BoolRel) -> BoolRel {
    let (n, m) = (r.len(), r[0].len());
    let (p, q) = (s.len(), s[0].len());
    (0..n * p)
        .map(|a| {
            (0..m * q)
                .map(|b| r[a / p][b / q] && s[a % p][b % q])
                .collect()
        })
        .collect()
}

pub fn bool_is_function(r: &BoolRel) -> bool {
    r.iter().all(|row| row.iter().filter(|&&v| v).count() == 1)
}

/// Group test by searching for inverses in the table.
pub fn table_is_group(table: &[Vec<usize>], unit: usize) -> bool {
    let n = table.len();
    (0..n).all(|g| (0..n).any(|h| table[g][h] == unit && table[h][g] == unit))
}

pub fn element_hs_distance(a: &AlgebraElement, b: &AlgebraElement) -> f64 {
    a.blocks()
        .iter()
        .zip(b.blocks())
        .map(|(x, y)| hs_norm(&(x - y)).powi(2))
        .sum::<f64>()
        .sqrt()
}

pub fn matrix_hs_distance(a: &CMatrix, b: &CMatrix) -> f64 {
    hs_norm(&(a - b))
}
