//! JSON file formats. Complex numbers are `[re, im]`, matrices are arrays
//! of rows, and atoms are referred to by label in relations.

use serde::{Deserialize, Serialize};

use crate::corr::BlockMap;
use crate::dqm::DiscreteQuantumMonoid;
use crate::error::{Error, Result};
use crate::numlin::{CMatrix, OperatorSubspace, Tolerance, C64};
use crate::qrel::QRelation;
use crate::qset::{ell_infty, tensor_op_algebra, AlgebraElement, HAAlgebra, QuantumSet};
use crate::states::State;

pub type MatrixJson = Vec<Vec<[f64; 2]>>;

pub fn matrix_to_json(m: &CMatrix) -> MatrixJson {
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| [m[(i, j)].re, m[(i, j)].im])
                .collect()
        })
        .collect()
}

pub fn matrix_from_json(rows: &MatrixJson) -> Result<CMatrix> {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    if rows.iter().any(|row| row.len() != c) {
        return Err(Error::Format("ragged matrix".into()));
    }
    if rows.iter().flatten().flatten().any(|x| !x.is_finite()) {
        return Err(Error::Format("non-finite matrix entry".into()));
    }
    Ok(CMatrix::from_fn(r, c, |i, j| {
        C64::new(rows[i][j][0], rows[i][j][1])
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub blocks: Vec<MatrixJson>,
}

impl ElementJson {
    pub fn from_element(x: &AlgebraElement) -> Self {
        ElementJson {
            blocks: x.blocks().iter().map(matrix_to_json).collect(),
        }
    }

    pub fn to_element(&self, alg: &HAAlgebra) -> Result<AlgebraElement> {
        let blocks = self
            .blocks
            .iter()
            .map(matrix_from_json)
            .collect::<Result<_>>()?;
        AlgebraElement::new(alg, blocks)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub from: String,
    pub to: String,
    pub basis: Vec<MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationJson {
    pub dom: QuantumSet,
    pub cod: QuantumSet,
    pub components: Vec<ComponentJson>,
}

impl RelationJson {
    pub fn from_relation(r: &QRelation) -> Self {
        let components = r
            .components()
            .map(|(&(a, b), s)| ComponentJson {
                from: r.dom().label(a).to_string(),
                to: r.cod().label(b).to_string(),
                basis: s.basis().iter().map(matrix_to_json).collect(),
            })
            .collect();
        RelationJson {
            dom: r.dom().clone(),
            cod: r.cod().clone(),
            components,
        }
    }

    pub fn to_relation(&self, tol: Tolerance) -> Result<QRelation> {
        let mut comps = Vec::new();
        for c in &self.components {
            let a = self
                .dom
                .index_of(&c.from)
                .ok_or_else(|| Error::Format(format!("unknown domain atom `{}`", c.from)))?;
            let b = self
                .cod
                .index_of(&c.to)
                .ok_or_else(|| Error::Format(format!("unknown codomain atom `{}`", c.to)))?;
            let mats = c
                .basis
                .iter()
                .map(matrix_from_json)
                .collect::<Result<Vec<_>>>()?;
            let s = if mats.is_empty() {
                OperatorSubspace::zero(self.dom.dim(a), self.cod.dim(b))
            } else {
                OperatorSubspace::span_in(self.dom.dim(a), self.cod.dim(b), &mats, tol)?
            };
            comps.push(((a, b), s));
        }
        QRelation::new(self.dom.clone(), self.cod.clone(), comps)
    }
}

/// A projection in `l^inf(dom) (x) l^inf(cod)^op`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjectionJson {
    pub dom: QuantumSet,
    pub cod: QuantumSet,
    pub blocks: Vec<MatrixJson>,
}

impl ProjectionJson {
    pub fn new(dom: &QuantumSet, cod: &QuantumSet, p: &AlgebraElement) -> Self {
        ProjectionJson {
            dom: dom.clone(),
            cod: cod.clone(),
            blocks: p.blocks().iter().map(matrix_to_json).collect(),
        }
    }

    pub fn element(&self) -> Result<AlgebraElement> {
        let alg = tensor_op_algebra(&ell_infty(&self.dom), &ell_infty(&self.cod));
        ElementJson {
            blocks: self.blocks.clone(),
        }
        .to_element(&alg)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockPairJson {
    pub from: usize,
    pub to: usize,
    pub matrix: MatrixJson,
}

/// A linear map `l^inf(source) -> l^inf(target)` by its nonzero
/// coordinate sub-matrices between blocks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: QuantumSet,
    pub target: QuantumSet,
    pub blocks: Vec<BlockPairJson>,
}

impl MorphismJson {
    pub fn from_map(f: &BlockMap) -> Self {
        MorphismJson {
            source: f.source().qset().clone(),
            target: f.target().qset().clone(),
            blocks: f
                .block_pairs()
                .into_iter()
                .map(|(from, to, m)| BlockPairJson {
                    from,
                    to,
                    matrix: matrix_to_json(&m),
                })
                .collect(),
        }
    }

    pub fn to_map(&self) -> Result<BlockMap> {
        let pairs = self
            .blocks
            .iter()
            .map(|b| Ok((b.from, b.to, matrix_from_json(&b.matrix)?)))
            .collect::<Result<Vec<_>>>()?;
        BlockMap::from_block_pairs(ell_infty(&self.source), ell_infty(&self.target), &pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonoidJson {
    pub algebra: QuantumSet,
    pub delta: MorphismJson,
    pub epsilon: MorphismJson,
}

impl MonoidJson {
    pub fn from_monoid(q: &DiscreteQuantumMonoid) -> Self {
        MonoidJson {
            algebra: q.qset().clone(),
            delta: MorphismJson::from_map(q.delta()),
            epsilon: MorphismJson::from_map(q.epsilon()),
        }
    }

    pub fn to_monoid(&self) -> Result<DiscreteQuantumMonoid> {
        let alg = ell_infty(&self.algebra);
        let delta = self.delta.to_map()?;
        let epsilon = self.epsilon.to_map()?;
        if delta.source() != &alg || epsilon.source() != &alg {
            return Err(Error::Format(
                "comultiplication and counit must start at the declared algebra".into(),
            ));
        }
        DiscreteQuantumMonoid::new(alg, delta, epsilon)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateJson {
    pub algebra: QuantumSet,
    pub densities: Vec<MatrixJson>,
}

impl StateJson {
    pub fn from_state(phi: &State) -> Self {
        StateJson {
            algebra: phi.parent().qset().clone(),
            densities: phi.densities().iter().map(matrix_to_json).collect(),
        }
    }

    pub fn to_state(&self, tol: Tolerance) -> Result<State> {
        let densities = self
            .densities
            .iter()
            .map(matrix_from_json)
            .collect::<Result<_>>()?;
        State::new(&ell_infty(&self.algebra), densities, tol)
    }
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
