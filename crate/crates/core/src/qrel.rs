//! Quantum relations as families of operator subspaces between atoms.
//!
//! A relation `X -> Y` assigns to each pair of atoms `(X_a, Y_b)` a subspace
//! of `L(X_a, Y_b)`. Composition, dagger, order and lattice operations,
//! Cartesian products and the rigid structure are computed componentwise.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::numlin::{identity as id_matrix, CMatrix, OperatorSubspace, Tolerance, ONE};
use crate::qset::{cartesian_product, QuantumSet};

#[derive(Clone, Debug)]
pub struct QRelation {
    dom: QuantumSet,
    cod: QuantumSet,
    /// Keyed by `(dom atom, cod atom)`; absent entries are zero.
    components: BTreeMap<(usize, usize), OperatorSubspace>,
}

impl QRelation {
    pub fn new(
        dom: QuantumSet,
        cod: QuantumSet,
        components: impl IntoIterator<Item = ((usize, usize), OperatorSubspace)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((a, b), s) in components {
            if a >= dom.len() || b >= cod.len() {
                return Err(Error::ShapeMismatch(format!(
                    "component ({a}, {b}) out of range"
                )));
            }
            if s.dom_dim() != dom.dim(a) || s.cod_dim() != cod.dim(b) {
                return Err(Error::ShapeMismatch(format!(
                    "component ({a}, {b}) is a subspace of L({}, {}), expected L({}, {})",
                    s.dom_dim(),
                    s.cod_dim(),
                    dom.dim(a),
                    cod.dim(b)
                )));
            }
            if map.contains_key(&(a, b)) {
                return Err(Error::Format(format!("component ({a}, {b}) given twice")));
            }
            if !s.is_zero() {
                map.insert((a, b), s);
            }
        }
        Ok(QRelation {
            dom,
            cod,
            components: map,
        })
    }

    pub fn dom(&self) -> &QuantumSet {
        &self.dom
    }

    pub fn cod(&self) -> &QuantumSet {
        &self.cod
    }

    /// The component at `(a, b)`; zero when absent.
    pub fn component(&self, a: usize, b: usize) -> OperatorSubspace {
        self.components
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(|| OperatorSubspace::zero(self.dom.dim(a), self.cod.dim(b)))
    }

    /// Nonzero components.
    pub fn components(&self) -> impl Iterator<Item = (&(usize, usize), &OperatorSubspace)> {
        self.components.iter()
    }

    pub fn identity(x: &QuantumSet) -> Self {
        let tol = Tolerance::default();
        let comps = (0..x.len()).map(|a| {
            (
                (a, a),
                OperatorSubspace::scalar_multiples(&id_matrix(x.dim(a)), tol),
            )
        });
        Self::new(x.clone(), x.clone(), comps).expect("shapes match by construction")
    }

    pub fn zero(x: &QuantumSet, y: &QuantumSet) -> Self {
        QRelation {
            dom: x.clone(),
            cod: y.clone(),
            components: BTreeMap::new(),
        }
    }

    /// The largest relation: every component is all of `L(X_a, Y_b)`.
    pub fn top(x: &QuantumSet, y: &QuantumSet) -> Self {
        let mut components = BTreeMap::new();
        for a in 0..x.len() {
            for b in 0..y.len() {
                components.insert((a, b), OperatorSubspace::full(x.dim(a), y.dim(b)));
            }
        }
        QRelation {
            dom: x.clone(),
            cod: y.clone(),
            components,
        }
    }

    /// Scalar multiples of the identity between atoms matched by index.
    /// `dom` and `cod` must have the same dimensions atom by atom; this
    /// realizes associators, unitors and other relabelings.
    pub fn reindex(dom: &QuantumSet, cod: &QuantumSet) -> Result<Self> {
        if dom.dims() != cod.dims() {
            return Err(Error::ShapeMismatch(format!(
                "cannot reindex atoms of dimensions {:?} as {:?}",
                dom.dims(),
                cod.dims()
            )));
        }
        let tol = Tolerance::default();
        let comps = (0..dom.len()).map(|a| {
            (
                (a, a),
                OperatorSubspace::scalar_multiples(&id_matrix(dom.dim(a)), tol),
            )
        });
        Self::new(dom.clone(), cod.clone(), comps)
    }

    fn check_same_type(&self, other: &Self) -> Result<()> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::ShapeMismatch(
                "relations have different domains or codomains".into(),
            ));
        }
        Ok(())
    }

    /// `self` after `first`: component `(a, c)` is the span over `b` of
    /// the products `self(b, c) first(a, b)`.
    pub fn after(&self, first: &QRelation, tol: Tolerance) -> Result<QRelation> {
        if first.cod != self.dom {
            return Err(Error::ShapeMismatch(
                "codomain of the first relation differs from the domain of the second".into(),
            ));
        }
        let mut products: BTreeMap<(usize, usize), Vec<CMatrix>> = BTreeMap::new();
        for (&(a, b), r) in &first.components {
            for (&(b2, c), s) in self.components.range((b, 0)..(b + 1, 0)) {
                debug_assert_eq!(b, b2);
                let entry = products.entry((a, c)).or_default();
                for sm in s.basis() {
                    for rm in r.basis() {
                        entry.push(sm * rm);
                    }
                }
            }
        }
        let mut comps = Vec::with_capacity(products.len());
        for ((a, c), mats) in products {
            let sub = OperatorSubspace::span_in(first.dom.dim(a), self.cod.dim(c), &mats, tol)?;
            comps.push(((a, c), sub));
        }
        QRelation::new(first.dom.clone(), self.cod.clone(), comps)
    }

    pub fn dagger(&self) -> QRelation {
        QRelation {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            components: self
                .components
                .iter()
                .map(|(&(a, b), s)| ((b, a), s.adjoint()))
                .collect(),
        }
    }

    /// Largest distance of a basis element of `self` from the matching
    /// component of `other`; zero iff `self <= other`.
    pub fn leq_residual(&self, other: &QRelation) -> Result<f64> {
        self.check_same_type(other)?;
        let mut worst: f64 = 0.0;
        for (&(a, b), s) in &self.components {
            let r = match other.components.get(&(a, b)) {
                Some(t) => s.leq_residual(t)?,
                None => 1.0,
            };
            worst = worst.max(r);
        }
        Ok(worst)
    }

    pub fn leq(&self, other: &QRelation, tol: Tolerance) -> Result<bool> {
        Ok(self.leq_residual(other)? <= tol.get())
    }

    /// Residual of `self = other` as mutual inclusion.
    pub fn eq_residual(&self, other: &QRelation) -> Result<f64> {
        Ok(self.leq_residual(other)?.max(other.leq_residual(self)?))
    }

    pub fn equals(&self, other: &QRelation, tol: Tolerance) -> Result<bool> {
        Ok(self.eq_residual(other)? <= tol.get())
    }

    pub fn join(&self, other: &QRelation, tol: Tolerance) -> Result<QRelation> {
        self.check_same_type(other)?;
        let mut comps = self.components.clone();
        for (&k, s) in &other.components {
            let joined = match comps.get(&k) {
                Some(t) => t.join(s, tol)?,
                None => s.clone(),
            };
            comps.insert(k, joined);
        }
        QRelation::new(self.dom.clone(), self.cod.clone(), comps)
    }

    pub fn meet(&self, other: &QRelation, tol: Tolerance) -> Result<QRelation> {
        self.check_same_type(other)?;
        let mut comps = Vec::new();
        for (&k, s) in &self.components {
            if let Some(t) = other.components.get(&k) {
                comps.push((k, s.meet(t, tol)?));
            }
        }
        QRelation::new(self.dom.clone(), self.cod.clone(), comps)
    }

    /// Cartesian product `self x other : X x W -> Y x Z`.
    pub fn product(&self, other: &QRelation) -> QRelation {
        let dom = cartesian_product(&self.dom, &other.dom);
        let cod = cartesian_product(&self.cod, &other.cod);
        let (nw, nz) = (other.dom.len(), other.cod.len());
        let mut components = BTreeMap::new();
        for (&(a, b), r) in &self.components {
            for (&(w, z), s) in &other.components {
                components.insert((a * nw + w, b * nz + z), r.kron(s));
            }
        }
        QRelation {
            dom,
            cod,
            components,
        }
    }

    /// `id_Y >= R R^dag` and `id_X <= R^dag R`; returns the two residuals.
    pub fn function_residuals(&self, tol: Tolerance) -> Result<(f64, f64)> {
        let rrd = self.after(&self.dagger(), tol)?;
        let single_valued = rrd.leq_residual(&QRelation::identity(&self.cod))?;
        let rdr = self.dagger().after(self, tol)?;
        let total = QRelation::identity(&self.dom).leq_residual(&rdr)?;
        Ok((single_valued, total))
    }

    pub fn is_function(&self, tol: Tolerance) -> Result<bool> {
        let (a, b) = self.function_residuals(tol)?;
        Ok(a <= tol.get() && b <= tol.get())
    }

    pub fn is_classical(&self) -> bool {
        self.dom.is_classical() && self.cod.is_classical()
    }

    /// Boolean matrix of a relation between classical sets, `[dom][cod]`.
    pub fn to_bool_matrix(&self) -> Option<Vec<Vec<bool>>> {
        if !self.is_classical() {
            return None;
        }
        let mut m = vec![vec![false; self.cod.len()]; self.dom.len()];
        for &(a, b) in self.components.keys() {
            m[a][b] = true;
        }
        Some(m)
    }

    /// Relation between classical sets from a boolean matrix `[dom][cod]`.
    pub fn from_bool_matrix(
        dom: &QuantumSet,
        cod: &QuantumSet,
        graph: &[Vec<bool>],
    ) -> Result<Self> {
        if !dom.is_classical() || !cod.is_classical() {
            return Err(Error::ShapeMismatch(
                "boolean relations need classical sets".into(),
            ));
        }
        let mut comps = Vec::new();
        for (a, row) in graph.iter().enumerate() {
            for (b, &related) in row.iter().enumerate() {
                if related {
                    comps.push(((a, b), OperatorSubspace::full(1, 1)));
                }
            }
        }
        Self::new(dom.clone(), cod.clone(), comps)
    }
}

/// Composition `s . r`.
pub fn compose(s: &QRelation, r: &QRelation, tol: Tolerance) -> Result<QRelation> {
    s.after(r, tol)
}

pub fn dagger(r: &QRelation) -> QRelation {
    r.dagger()
}

pub fn rel_product(r: &QRelation, s: &QRelation) -> QRelation {
    r.product(s)
}

/// The dual-basis functional on `X_a* (x) X_a`: the row vector of the
/// row-major vectorized identity.
fn dual_basis_functional(n: usize) -> CMatrix {
    let mut row = CMatrix::zeros(1, n * n);
    for i in 0..n {
        row[(0, i * n + i)] = ONE;
    }
    row
}

/// Evaluation `X* x X -> 1`, nonzero only on the atoms `(X_a*, X_a)`.
pub fn ev(x: &QuantumSet) -> QRelation {
    let dom = cartesian_product(&x.dual(), x);
    let n = x.len();
    let tol = Tolerance::default();
    let comps = (0..n).map(|a| {
        (
            (a * n + a, 0),
            OperatorSubspace::scalar_multiples(&dual_basis_functional(x.dim(a)), tol),
        )
    });
    QRelation::new(dom, QuantumSet::unit(), comps).expect("shapes match by construction")
}

/// Coevaluation `1 -> X* x X`, the dagger of [`ev`].
pub fn coev(x: &QuantumSet) -> QRelation {
    ev(x).dagger()
}

/// The zig-zag composite `X -> X x 1 -> X x (X* x X) -> (X x X*) x X -> 1 x X -> X`.
pub fn snake(x: &QuantumSet, tol: Tolerance) -> Result<QRelation> {
    let one = QuantumSet::unit();
    let xd = x.dual();
    let x1 = cartesian_product(x, &one);
    let unit_in = QRelation::reindex(x, &x1)?;
    let with_coev = QRelation::identity(x).product(&coev(x));
    let assoc = QRelation::reindex(
        with_coev.cod(),
        &cartesian_product(&cartesian_product(x, &xd), x),
    )?;
    let with_ev = ev(&xd).product(&QRelation::identity(x));
    let unit_out = QRelation::reindex(with_ev.cod(), x)?;
    let mut r = with_coev.after(&unit_in, tol)?;
    r = assoc.after(&r, tol)?;
    r = with_ev.after(&r, tol)?;
    unit_out.after(&r, tol)
}
