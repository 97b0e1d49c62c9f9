//! Ground-truth discrete quantum monoids: function algebras of finite
//! monoids, group algebras of finite groups, and the Kac-Paljutkin algebra.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::corr::BlockMap;
use crate::dqm::DiscreteQuantumMonoid;
use crate::error::{Error, Result};
use crate::numlin::{c, wedderburn_decompose, CMatrix, Tolerance, C64, ONE, ZERO};
use crate::qset::{ell_infty, AlgebraElement, Atom, HAAlgebra, QuantumSet};

/// Multiplication table of a finite monoid on `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MonoidTableRepr", into = "MonoidTableRepr")]
pub struct MonoidTable {
    table: Vec<Vec<usize>>,
    unit: usize,
}

#[derive(Serialize, Deserialize)]
struct MonoidTableRepr {
    table: Vec<Vec<usize>>,
    unit: usize,
}

impl TryFrom<MonoidTableRepr> for MonoidTable {
    type Error = Error;
    fn try_from(r: MonoidTableRepr) -> Result<Self> {
        MonoidTable::new(r.table, r.unit)
    }
}

impl From<MonoidTable> for MonoidTableRepr {
    fn from(t: MonoidTable) -> Self {
        MonoidTableRepr {
            table: t.table,
            unit: t.unit,
        }
    }
}

impl MonoidTable {
    pub fn new(table: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&v| v >= n))
        {
            return Err(Error::InvalidTable(
                "table must be square with entries below its size".into(),
            ));
        }
        if unit >= n {
            return Err(Error::InvalidTable(format!("unit {unit} out of range")));
        }
        for g in 0..n {
            if table[unit][g] != g || table[g][unit] != g {
                return Err(Error::InvalidTable(format!("unit law fails at {g}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    if table[table[a][b]][d] != table[a][table[b][d]] {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a}, {b}, {d})"
                        )));
                    }
                }
            }
        }
        Ok(MonoidTable { table, unit })
    }

    pub fn from_fn(n: usize, unit: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = (0..n)
            .map(|a| (0..n).map(|b| mul(a, b)).collect())
            .collect();
        Self::new(table, unit)
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Two-sided inverse of `g`, if any.
    pub fn inverse(&self, g: usize) -> Option<usize> {
        (0..self.size()).find(|&h| self.mul(g, h) == self.unit && self.mul(h, g) == self.unit)
    }

    pub fn is_group(&self) -> bool {
        (0..self.size()).all(|g| self.inverse(g).is_some())
    }
}

pub fn cyclic_group(n: usize) -> MonoidTable {
    MonoidTable::from_fn(n, 0, |a, b| (a + b) % n).expect("cyclic groups are monoids")
}

/// Direct product, element `(a, b)` at index `a * |right| + b`.
pub fn direct_product(left: &MonoidTable, right: &MonoidTable) -> MonoidTable {
    let m = right.size();
    MonoidTable::from_fn(left.size() * m, left.unit() * m + right.unit(), |x, y| {
        left.mul(x / m, y / m) * m + right.mul(x % m, y % m)
    })
    .expect("products of monoids are monoids")
}

/// `S_3` as permutations of three points in lexicographic order, composed
/// as functions: `(a b)(i) = a(b(i))`.
pub fn symmetric_group_3() -> MonoidTable {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index: HashMap<[usize; 3], usize> =
        perms.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    MonoidTable::from_fn(6, 0, |a, b| {
        let (p, q) = (perms[a], perms[b]);
        index[&[p[q[0]], p[q[1]], p[q[2]]]]
    })
    .expect("S3 is a group")
}

/// Multiplicative monoid of integers modulo `n`, unit `1`.
pub fn multiplicative_mod(n: usize) -> MonoidTable {
    MonoidTable::from_fn(n, 1 % n, |a, b| (a * b) % n).expect("multiplication mod n is a monoid")
}

/// `{1, a, .., a^(index+period-1)}` with `a^(index+period) = a^index`.
pub fn cyclic_monoid(index: usize, period: usize) -> MonoidTable {
    let n = index + period;
    let reduce = move |k: usize| {
        if k < n {
            k
        } else {
            index + (k - index) % period
        }
    };
    MonoidTable::from_fn(n, 0, move |a, b| reduce(a + b)).expect("cyclic monoids are monoids")
}

/// `{1} + L` where `L` is a left-zero semigroup of size `k` (`xy = x`).
pub fn left_zero_with_unit(k: usize) -> MonoidTable {
    MonoidTable::from_fn(k + 1, 0, |a, b| {
        if a == 0 {
            b
        } else if b == 0 {
            a
        } else {
            a
        }
    })
    .expect("adjoining a unit gives a monoid")
}

/// `{1} + S` where `S` is a semilattice chain under `min`.
pub fn chain_with_unit(k: usize) -> MonoidTable {
    MonoidTable::from_fn(k + 1, 0, |a, b| {
        if a == 0 {
            b
        } else if b == 0 {
            a
        } else {
            a.min(b)
        }
    })
    .expect("adjoining a unit gives a monoid")
}

/// Every monoid table on `{0, .., n-1}` with unit `0` (labeled, not up to
/// isomorphism).
pub fn all_monoids(n: usize) -> Vec<MonoidTable> {
    if n == 0 {
        return Vec::new();
    }
    let free: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let mut values = vec![0usize; free.len()];
    loop {
        let mut table: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if a == 0 {
                            b
                        } else if b == 0 {
                            a
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        for (k, &(a, b)) in free.iter().enumerate() {
            table[a][b] = values[k];
        }
        if let Ok(t) = MonoidTable::new(table, 0) {
            out.push(t);
        }
        let mut pos = 0;
        loop {
            if pos == values.len() {
                return out;
            }
            values[pos] += 1;
            if values[pos] < n {
                break;
            }
            values[pos] = 0;
            pos += 1;
        }
    }
}

/// Named tables: all groups of order at most five, `S_3`, and a selection
/// of monoids that are not groups.
pub fn curated_tables() -> Vec<(String, MonoidTable)> {
    vec![
        ("trivial".into(), cyclic_group(1)),
        ("z2".into(), cyclic_group(2)),
        ("z3".into(), cyclic_group(3)),
        ("z4".into(), cyclic_group(4)),
        (
            "z2xz2".into(),
            direct_product(&cyclic_group(2), &cyclic_group(2)),
        ),
        ("z5".into(), cyclic_group(5)),
        ("monoid01".into(), multiplicative_mod(2)),
        ("mult-mod3".into(), multiplicative_mod(3)),
        ("mult-mod4".into(), multiplicative_mod(4)),
        ("mult-mod5".into(), multiplicative_mod(5)),
        ("cyclic-monoid-2-1".into(), cyclic_monoid(2, 1)),
        ("cyclic-monoid-2-2".into(), cyclic_monoid(2, 2)),
        ("cyclic-monoid-1-3".into(), cyclic_monoid(3, 1)),
        ("left-zero-2".into(), left_zero_with_unit(2)),
        ("left-zero-3".into(), left_zero_with_unit(3)),
        ("chain-4".into(), chain_with_unit(4)),
        ("z2-plus-zero".into(), z2_with_zero()),
    ]
}

/// `Z_2` with an absorbing element adjoined.
fn z2_with_zero() -> MonoidTable {
    MonoidTable::from_fn(3, 0, |a, b| if a == 2 || b == 2 { 2 } else { (a + b) % 2 })
        .expect("adjoining a zero gives a monoid")
}

fn classical_set(n: usize, prefix: &str) -> QuantumSet {
    QuantumSet::new(
        (0..n)
            .map(|i| Atom::new(format!("{prefix}{i}"), 1))
            .collect(),
    )
    .expect("nonempty")
}

/// `l^inf(G)` with `Delta f (g, h) = f(gh)` and `epsilon f = f(unit)`.
pub fn function_algebra(t: &MonoidTable) -> DiscreteQuantumMonoid {
    let n = t.size();
    let alg = ell_infty(&classical_set(n, "g"));
    let mm = alg.tensor(&alg);
    let mut delta = CMatrix::zeros(n * n, n);
    for g in 0..n {
        for h in 0..n {
            delta[(g * n + h, t.mul(g, h))] = ONE;
        }
    }
    let mut eps = CMatrix::zeros(1, n);
    eps[(0, t.unit())] = ONE;
    DiscreteQuantumMonoid::new(
        alg.clone(),
        BlockMap::new(alg.clone(), mm, delta).expect("sizes agree"),
        BlockMap::new(alg, HAAlgebra::scalars(), eps).expect("sizes agree"),
    )
    .expect("shapes agree")
}

/// Left regular representation `lambda_g e_h = e_{gh}`.
pub fn regular_representation(t: &MonoidTable) -> Vec<CMatrix> {
    let n = t.size();
    (0..n)
        .map(|g| {
            let mut m = CMatrix::zeros(n, n);
            for h in 0..n {
                m[(t.mul(g, h), h)] = ONE;
            }
            m
        })
        .collect()
}

/// The group algebra `C[G]`, decomposed into matrix blocks, with
/// `Delta(lambda_g) = lambda_g (x) lambda_g` and `epsilon(lambda_g) = 1`.
pub fn group_algebra(
    t: &MonoidTable,
    require_group: bool,
    seed: u64,
    tol: Tolerance,
) -> Result<DiscreteQuantumMonoid> {
    if require_group && !t.is_group() {
        return Err(Error::NotAGroup("some element has no inverse".into()));
    }
    let n = t.size();
    let lambda = regular_representation(t);
    let unit = lambda[t.unit()].clone();
    let w = wedderburn_decompose(&lambda, &unit, seed, tol)?;
    if w.algebra_dim() != n {
        return Err(Error::ToleranceBreakdown(format!(
            "regular representation spans {} dimensions, expected {n}",
            w.algebra_dim()
        )));
    }
    let atoms = w
        .block_dims()
        .iter()
        .enumerate()
        .map(|(i, &d)| Atom::new(format!("r{i}"), d))
        .collect();
    let alg = ell_infty(&QuantumSet::new(atoms)?);
    let mm = alg.tensor(&alg);
    let images: Vec<AlgebraElement> = lambda
        .iter()
        .map(|l| AlgebraElement::new(&alg, w.to_blocks(l)))
        .collect::<Result<_>>()?;
    let scale = C64::new(1.0 / n as f64, 0.0);
    let mut delta = CMatrix::zeros(mm.dim(), alg.dim());
    let mut eps = CMatrix::zeros(1, alg.dim());
    for u in 0..alg.dim() {
        let e = w.from_blocks(AlgebraElement::matrix_unit(&alg, u).blocks());
        let mut image = vec![ZERO; mm.dim()];
        for (g, l) in lambda.iter().enumerate() {
            // The regular trace detects the coefficient of lambda_g.
            let coeff = (l.adjoint() * &e).trace() * scale;
            if coeff.norm() <= tol.get() {
                continue;
            }
            eps[(0, u)] += coeff;
            for (k, z) in images[g]
                .tensor(&images[g])
                .coordinates()
                .into_iter()
                .enumerate()
            {
                image[k] += coeff * z;
            }
        }
        for (k, z) in image.into_iter().enumerate() {
            delta[(k, u)] = z;
        }
    }
    DiscreteQuantumMonoid::new(
        alg.clone(),
        BlockMap::new(alg.clone(), mm, delta)?,
        BlockMap::new(alg, HAAlgebra::scalars(), eps)?,
    )
}

/// The eight-dimensional Kac-Paljutkin quantum group on
/// `C + C + C + C + M_2`.
pub fn kac_paljutkin() -> DiscreteQuantumMonoid {
    let qset = QuantumSet::new(vec![
        Atom::new("e1", 1),
        Atom::new("e2", 1),
        Atom::new("e3", 1),
        Atom::new("e4", 1),
        Atom::new("a", 2),
    ])
    .expect("valid atoms");
    let alg = ell_infty(&qset);
    let mm = alg.tensor(&alg);
    let pair: HashMap<(usize, usize), usize> = alg
        .tensor_split(&alg)
        .into_iter()
        .enumerate()
        .map(|(t, uv)| (uv, t))
        .collect();
    // Coordinates: e1..e4 are 0..3, a11 = 4, a12 = 5, a21 = 6, a22 = 7.
    let (e1, e2, e3, e4, a11, a12, a21, a22) = (0, 1, 2, 3, 4, 5, 6, 7);
    let h = c(0.5, 0.0);
    let ih = c(0.0, 0.5);
    let i = c(0.0, 1.0);
    let one = ONE;
    let terms: Vec<(usize, Vec<(C64, usize, usize)>)> = vec![
        (
            e1,
            vec![
                (one, e1, e1),
                (one, e2, e2),
                (one, e3, e3),
                (one, e4, e4),
                (h, a11, a11),
                (h, a12, a12),
                (h, a21, a21),
                (h, a22, a22),
            ],
        ),
        (
            e2,
            vec![
                (one, e1, e2),
                (one, e2, e1),
                (one, e3, e4),
                (one, e4, e3),
                (h, a11, a22),
                (h, a22, a11),
                (ih, a21, a12),
                (-ih, a12, a21),
            ],
        ),
        (
            e3,
            vec![
                (one, e1, e3),
                (one, e3, e1),
                (one, e2, e4),
                (one, e4, e2),
                (h, a11, a22),
                (h, a22, a11),
                (-ih, a21, a12),
                (ih, a12, a21),
            ],
        ),
        (
            e4,
            vec![
                (one, e1, e4),
                (one, e4, e1),
                (one, e2, e3),
                (one, e3, e2),
                (h, a11, a11),
                (h, a22, a22),
                (-h, a12, a12),
                (-h, a21, a21),
            ],
        ),
        (
            a11,
            vec![
                (one, e1, a11),
                (one, e2, a22),
                (one, e3, a22),
                (one, e4, a11),
                (one, a11, e1),
                (one, a22, e2),
                (one, a22, e3),
                (one, a11, e4),
            ],
        ),
        (
            a12,
            vec![
                (one, e1, a12),
                (i, e2, a21),
                (-i, e3, a21),
                (-one, e4, a12),
                (one, a12, e1),
                (-i, a21, e2),
                (i, a21, e3),
                (-one, a12, e4),
            ],
        ),
        (
            a21,
            vec![
                (one, e1, a21),
                (-i, e2, a12),
                (i, e3, a12),
                (-one, e4, a21),
                (one, a21, e1),
                (i, a12, e2),
                (-i, a12, e3),
                (-one, a21, e4),
            ],
        ),
        (
            a22,
            vec![
                (one, e1, a22),
                (one, e2, a11),
                (one, e3, a11),
                (one, e4, a22),
                (one, a22, e1),
                (one, a11, e2),
                (one, a11, e3),
                (one, a22, e4),
            ],
        ),
    ];
    let mut delta = CMatrix::zeros(mm.dim(), alg.dim());
    for (u, list) in terms {
        for (coeff, x, y) in list {
            delta[(pair[&(x, y)], u)] += coeff;
        }
    }
    let mut eps = CMatrix::zeros(1, alg.dim());
    eps[(0, e1)] = ONE;
    DiscreteQuantumMonoid::new(
        alg.clone(),
        BlockMap::new(alg.clone(), mm, delta).expect("sizes agree"),
        BlockMap::new(alg, HAAlgebra::scalars(), eps).expect("sizes agree"),
    )
    .expect("shapes agree")
}

/// Names accepted by [`named_example`].
pub const EXAMPLE_NAMES: &[&str] = &[
    "trivial",
    "z2",
    "z3",
    "z4",
    "z2xz2",
    "z5",
    "s3",
    "monoid01",
    "z2-dual",
    "z3-dual",
    "s3-dual",
    "kac-paljutkin",
];

/// A built-in example by name; `-dual` selects the group algebra.
pub fn named_example(name: &str, seed: u64, tol: Tolerance) -> Result<DiscreteQuantumMonoid> {
    let table = |base: &str| -> Option<MonoidTable> {
        match base {
            "s3" => Some(symmetric_group_3()),
            other => curated_tables()
                .into_iter()
                .find(|(n, _)| n == other)
                .map(|(_, t)| t),
        }
    };
    if name == "kac-paljutkin" {
        return Ok(kac_paljutkin());
    }
    if !EXAMPLE_NAMES.contains(&name) {
        return Err(Error::UnknownExample(name.to_string()));
    }
    if let Some(base) = name.strip_suffix("-dual") {
        let t = table(base).ok_or_else(|| Error::UnknownExample(name.to_string()))?;
        return group_algebra(&t, true, seed, tol);
    }
    let t = table(name).ok_or_else(|| Error::UnknownExample(name.to_string()))?;
    Ok(function_algebra(&t))
}
