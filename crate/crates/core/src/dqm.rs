//! Discrete quantum monoids `(M, Delta, epsilon)` on finite products of
//! matrix algebras, together with executable forms of the group and
//! Kac-type characterizations.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corr::{
    intertwiners, morphism_to_relation, relation_to_projection, BlockMap, WStarMorphism,
};
use crate::error::{Error, Result};
use crate::numlin::{
    identity, kron, null_space, range_projection, solve_linear, CMatrix, OperatorSubspace,
    Tolerance, C64, ZERO,
};
use crate::qrel::{ev, QRelation};
use crate::qset::{cartesian_product, AlgebraElement, HAAlgebra, ProjectionElement, QuantumSet};
use crate::random::random_unitary;
use crate::report::{all_pass, Check};
use crate::states::{extreme_diagonal_states, pull_functional, support_projection, State};

/// `M` with comultiplication `M -> M (x) M` and counit `M -> C`.
///
/// The maps are kept as plain linear maps so that damaged inputs can be
/// loaded and reported on; [`check_monoid`] decides whether they are
/// W*-morphisms satisfying the monoid laws.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteQuantumMonoid {
    algebra: HAAlgebra,
    delta: BlockMap,
    epsilon: BlockMap,
}

impl DiscreteQuantumMonoid {
    pub fn new(algebra: HAAlgebra, delta: BlockMap, epsilon: BlockMap) -> Result<Self> {
        let mm = algebra.tensor(&algebra);
        if delta.source() != &algebra || !delta.target().same_shape(&mm) {
            return Err(Error::ShapeMismatch(
                "comultiplication must map M to M (x) M".into(),
            ));
        }
        if epsilon.source() != &algebra || !epsilon.target().same_shape(&HAAlgebra::scalars()) {
            return Err(Error::ShapeMismatch("counit must map M to C".into()));
        }
        let delta = delta.relabel(algebra.clone(), mm)?;
        let epsilon = epsilon.relabel(algebra.clone(), HAAlgebra::scalars())?;
        Ok(DiscreteQuantumMonoid {
            algebra,
            delta,
            epsilon,
        })
    }

    pub fn algebra(&self) -> &HAAlgebra {
        &self.algebra
    }

    pub fn qset(&self) -> &QuantumSet {
        self.algebra.qset()
    }

    pub fn delta(&self) -> &BlockMap {
        &self.delta
    }

    pub fn epsilon(&self) -> &BlockMap {
        &self.epsilon
    }

    /// Coefficients of the counit in algebra coordinates.
    pub fn counit_functional(&self) -> Vec<C64> {
        self.epsilon.matrix().row(0).iter().cloned().collect()
    }

    fn delta_morphism(&self) -> WStarMorphism {
        WStarMorphism::new_unchecked(self.delta.clone())
    }

    fn epsilon_morphism(&self) -> WStarMorphism {
        WStarMorphism::new_unchecked(self.epsilon.clone())
    }

    /// The relation `X x X -> X` associated with the comultiplication.
    pub fn delta_hat(&self, tol: Tolerance) -> Result<QRelation> {
        morphism_to_relation(&self.delta_morphism(), tol)
    }

    /// The relation `1 -> X` associated with the counit.
    pub fn epsilon_hat(&self, tol: Tolerance) -> Result<QRelation> {
        morphism_to_relation(&self.epsilon_morphism(), tol)
    }
}

/// Monoid laws and morphism properties of `Delta` and `epsilon`.
pub fn check_monoid(q: &DiscreteQuantumMonoid, tol: Tolerance) -> Vec<Check> {
    let id = BlockMap::identity(&q.algebra);
    let d = &q.delta;
    let left = d.tensor(&id).after(d).expect("shapes agree");
    let right = id.tensor(d).after(d).expect("shapes agree");
    let coassoc = left.max_abs_diff(&right);
    let counit_left = q
        .epsilon
        .tensor(&id)
        .after(d)
        .expect("shapes agree")
        .max_abs_diff(&id);
    let counit_right = id
        .tensor(&q.epsilon)
        .after(d)
        .expect("shapes agree")
        .max_abs_diff(&id);
    let dd = d.defects();
    let ed = q.epsilon.defects();
    vec![
        Check::within(
            "delta is a W*-morphism",
            "Delta unital, multiplicative and *-preserving",
            dd.max(),
            tol,
        ),
        Check::within(
            "epsilon is a W*-morphism",
            "epsilon unital, multiplicative and *-preserving",
            ed.max(),
            tol,
        ),
        Check::within(
            "coassociativity",
            "(Delta (x) id) Delta = (id (x) Delta) Delta",
            coassoc,
            tol,
        ),
        Check::within(
            "left counit",
            "(epsilon (x) id) Delta = id",
            counit_left,
            tol,
        ),
        Check::within(
            "right counit",
            "(id (x) epsilon) Delta = id",
            counit_right,
            tol,
        ),
    ]
}

pub fn is_monoid(q: &DiscreteQuantumMonoid, tol: Tolerance) -> bool {
    all_pass(&check_monoid(q, tol))
}

/// Outcome of the support-projection group test.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupVerdict {
    pub is_group: bool,
    pub checks: Vec<Check>,
    /// Support projection `e` of the counit.
    pub counit_support: ProjectionElement,
}

/// Group test through the support projection `e` of `epsilon`: both
/// marginal supports of `Delta(e)` must be the unit.
pub fn vaes_group_check(q: &DiscreteQuantumMonoid, tol: Tolerance) -> Result<GroupVerdict> {
    let alg = &q.algebra;
    let eps = State::from_functional(alg, &q.counit_functional(), tol)?;
    let e = support_projection(&eps, tol);
    let de = q.delta.apply(e.element());
    let k = alg.num_blocks();
    let mut left_defect: f64 = 0.0;
    let mut right_defect: f64 = 0.0;
    for i in 0..k {
        let ni = alg.block_dim(i);
        let mut acc = CMatrix::zeros(ni, ni);
        for j in 0..k {
            acc += partial_trace_second(de.block(i * k + j), ni, alg.block_dim(j));
        }
        left_defect = left_defect.max(crate::numlin::max_abs(
            &(range_projection(&acc, tol) - identity(ni)),
        ));
    }
    for j in 0..k {
        let nj = alg.block_dim(j);
        let mut acc = CMatrix::zeros(nj, nj);
        for i in 0..k {
            acc += partial_trace_first(de.block(i * k + j), alg.block_dim(i), nj);
        }
        right_defect = right_defect.max(crate::numlin::max_abs(
            &(range_projection(&acc, tol) - identity(nj)),
        ));
    }
    let checks = vec![
        Check::within(
            "left marginal support",
            "p (x) 1 >= Delta(e) forces p = 1, e the support of epsilon",
            left_defect,
            tol,
        ),
        Check::within(
            "right marginal support",
            "1 (x) p >= Delta(e) forces p = 1, e the support of epsilon",
            right_defect,
            tol,
        ),
    ];
    Ok(GroupVerdict {
        is_group: all_pass(&checks),
        checks,
        counit_support: e,
    })
}

fn partial_trace_second(m: &CMatrix, na: usize, nb: usize) -> CMatrix {
    CMatrix::from_fn(na, na, |p, q| {
        (0..nb)
            .map(|r| m[(p * nb + r, q * nb + r)])
            .fold(ZERO, |a, b| a + b)
    })
}

fn partial_trace_first(m: &CMatrix, na: usize, nb: usize) -> CMatrix {
    CMatrix::from_fn(nb, nb, |r, s| {
        (0..na)
            .map(|p| m[(p * nb + r, p * nb + s)])
            .fold(ZERO, |a, b| a + b)
    })
}

/// A solution `S` of the antipode equations, as a linear map `M -> M`,
/// with its properties measured.
#[derive(Clone, Debug, PartialEq)]
pub struct AntipodeCandidate {
    pub map: BlockMap,
    /// Residual of `mult (id (x) S) Delta = epsilon(.) 1`.
    pub right_residual: f64,
    /// Residual of `mult (S (x) id) Delta = epsilon(.) 1`.
    pub left_residual: f64,
    /// Dimension of the solution space of the homogeneous system.
    pub nullity: usize,
    pub antimultiplicative_defect: f64,
    pub unital_defect: f64,
    pub star_defect: f64,
    pub is_antimultiplicative: bool,
    pub is_unital: bool,
    pub is_star_map: bool,
    pub is_wstar_into_op: bool,
}

impl AntipodeCandidate {
    /// `S` followed by the blockwise transpose, a map `M -> M^op` realized
    /// on `l^inf(X) -> l^inf(X*)`.
    pub fn into_opposite(&self) -> BlockMap {
        self.map.then_transpose()
    }
}

/// Whether each one-sided antipode system is solvable on its own.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OneSidedSolvability {
    pub right: bool,
    pub left: bool,
}

fn antipode_systems(q: &DiscreteQuantumMonoid) -> (CMatrix, CMatrix, CMatrix) {
    let alg = &q.algebra;
    let d = alg.dim();
    let split = alg.tensor_split(alg);
    let dm = q.delta.matrix();
    let eps = q.counit_functional();
    let one = AlgebraElement::one(alg).coordinates();
    let mut right = CMatrix::zeros(d * d, d * d);
    let mut left = CMatrix::zeros(d * d, d * d);
    let mut rhs = CMatrix::zeros(d * d, 1);
    for m in 0..d {
        for t in 0..d {
            rhs[(m * d + t, 0)] = eps[m] * one[t];
        }
        for (t, &(u, v)) in split.iter().enumerate() {
            let coeff = dm[(t, m)];
            if coeff == ZERO {
                continue;
            }
            for w in 0..d {
                // e_u S(e_v) picks up S[w, v] e_u e_w
                if let Some(target) = alg.unit_product(u, w) {
                    right[(m * d + target, w * d + v)] += coeff;
                }
                // S(e_u) e_v picks up S[w, u] e_w e_v
                if let Some(target) = alg.unit_product(w, v) {
                    left[(m * d + target, w * d + u)] += coeff;
                }
            }
        }
    }
    (right, left, rhs)
}

/// Solvability of the two one-sided antipode systems separately.
pub fn one_sided_solvability(q: &DiscreteQuantumMonoid, tol: Tolerance) -> OneSidedSolvability {
    let (right, left, rhs) = antipode_systems(q);
    OneSidedSolvability {
        right: solve_linear(&right, &rhs, tol).is_ok(),
        left: solve_linear(&left, &rhs, tol).is_ok(),
    }
}

/// Solves both antipode equations as one linear system in the entries of `S`.
pub fn solve_antipode(q: &DiscreteQuantumMonoid, tol: Tolerance) -> Result<AntipodeCandidate> {
    let alg = &q.algebra;
    let d = alg.dim();
    let (right, left, rhs) = antipode_systems(q);
    let mut a = CMatrix::zeros(2 * d * d, d * d);
    a.view_mut((0, 0), (d * d, d * d)).copy_from(&right);
    a.view_mut((d * d, 0), (d * d, d * d)).copy_from(&left);
    let mut b = CMatrix::zeros(2 * d * d, 1);
    b.view_mut((0, 0), (d * d, 1)).copy_from(&rhs);
    b.view_mut((d * d, 0), (d * d, 1)).copy_from(&rhs);
    let sol = solve_linear(&a, &b, tol)?;
    let s = CMatrix::from_fn(d, d, |w, v| sol.solution[(w * d + v, 0)]);
    let right_residual = crate::numlin::max_abs(&(&right * &sol.solution - &rhs));
    let left_residual = crate::numlin::max_abs(&(&left * &sol.solution - &rhs));
    let map = BlockMap::new(alg.clone(), alg.clone(), s)?;
    Ok(measure_candidate(
        map,
        right_residual,
        left_residual,
        sol.nullity,
        tol,
    ))
}

fn measure_candidate(
    map: BlockMap,
    right_residual: f64,
    left_residual: f64,
    nullity: usize,
    tol: Tolerance,
) -> AntipodeCandidate {
    let alg = map.source().clone();
    let images: Vec<AlgebraElement> = (0..alg.dim()).map(|u| map.image_of_unit(u)).collect();
    let zero = AlgebraElement::zero(&alg);
    let mut anti: f64 = 0.0;
    let mut star: f64 = 0.0;
    for u in 0..alg.dim() {
        star = star.max(
            images[u]
                .adjoint()
                .max_abs_diff(&images[alg.adjoint_coordinate(u)]),
        );
        for v in 0..alg.dim() {
            let lhs = match alg.unit_product(u, v) {
                Some(w) => &images[w],
                None => &zero,
            };
            anti = anti.max(lhs.max_abs_diff(&images[v].mul(&images[u])));
        }
    }
    let unital = map
        .apply(&AlgebraElement::one(&alg))
        .max_abs_diff(&AlgebraElement::one(&alg));
    let wstar = map.then_transpose().defects().max() <= tol.get();
    AntipodeCandidate {
        map,
        right_residual,
        left_residual,
        nullity,
        antimultiplicative_defect: anti,
        unital_defect: unital,
        star_defect: star,
        is_antimultiplicative: anti <= tol.get(),
        is_unital: unital <= tol.get(),
        is_star_map: star <= tol.get(),
        is_wstar_into_op: wstar,
    }
}

/// Checks, for every extreme diagonal state `phi`, that
/// `phi (id (x) sigma) Delta = epsilon` on `M (x) M^op` and
/// `phi (sigma (x) id) Delta = epsilon` on `M^op (x) M`, where
/// `sigma : l^inf(X) -> l^inf(X*)` is a candidate antipode into the
/// opposite algebra.
pub fn diagonal_state_conditions(
    q: &DiscreteQuantumMonoid,
    sigma: &BlockMap,
    tol: Tolerance,
) -> Result<Vec<Check>> {
    let alg = &q.algebra;
    let op = alg.opposite();
    if sigma.source() != alg || !sigma.target().same_shape(&op) {
        return Err(Error::ShapeMismatch("candidate must map M to M^op".into()));
    }
    let sigma = sigma.relabel(alg.clone(), op.clone())?;
    let id = BlockMap::identity(alg);
    let eps = q.counit_functional();
    let mismatch = |h: &BlockMap, m: &HAAlgebra| -> f64 {
        extreme_diagonal_states(m)
            .iter()
            .map(|phi| {
                pull_functional(&phi.functional(), h)
                    .iter()
                    .zip(&eps)
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    };
    let right = id.tensor(&sigma).after(&q.delta)?;
    let left = sigma.tensor(&id).after(&q.delta)?;
    let morphism_defect = sigma.defects().max();
    Ok(vec![
        Check::within(
            "candidate is a W*-morphism into M^op",
            "s unital, anti-multiplicative and *-preserving",
            morphism_defect,
            tol,
        ),
        Check::within(
            "diagonal states, s on the right",
            "phi (id (x) s) Delta = epsilon for every diagonal state phi on M (x) M^op",
            mismatch(&right, alg),
            tol,
        ),
        Check::within(
            "diagonal states, s on the left",
            "phi (s (x) id) Delta = epsilon for every diagonal state phi on M^op (x) M",
            mismatch(&left, &op),
            tol,
        ),
    ])
}

fn check_type(r: &QRelation, dom: &QuantumSet, cod: &QuantumSet, what: &str) -> Result<()> {
    if r.dom() != dom || r.cod() != cod {
        return Err(Error::ShapeMismatch(format!(
            "{what} must be a relation {:?} -> {:?}",
            dom.atoms()
                .iter()
                .map(|a| a.label.as_str())
                .collect::<Vec<_>>(),
            cod.atoms()
                .iter()
                .map(|a| a.label.as_str())
                .collect::<Vec<_>>()
        )));
    }
    Ok(())
}

/// The two inequalities `eps^dag Delta^ (R x id) >= ev_X` and
/// `eps^dag Delta^ (id x R) >= ev_{X*}` for a relation `R : X* -> X`.
fn antipode_inequalities(
    x: &QuantumSet,
    delta_hat: &QRelation,
    eps_dag: &QRelation,
    r: &QRelation,
    tol: Tolerance,
) -> Result<Vec<Check>> {
    let id = QRelation::identity(x);
    let left = eps_dag.after(&delta_hat.after(&r.product(&id), tol)?, tol)?;
    let right = eps_dag.after(&delta_hat.after(&id.product(r), tol)?, tol)?;
    Ok(vec![
        Check::within(
            "left antipode inequality",
            "eps^dag . Delta^ . (R x id) >= ev_X",
            ev(x).leq_residual(&left)?,
            tol,
        ),
        Check::within(
            "right antipode inequality",
            "eps^dag . Delta^ . (id x R) >= ev_X*",
            ev(&x.dual()).leq_residual(&right)?,
            tol,
        ),
    ])
}

/// The six relation-level conditions on a candidate `s^ : X* -> X`.
pub fn kac_diagram_battery(
    q: &DiscreteQuantumMonoid,
    s_hat: &QRelation,
    tol: Tolerance,
) -> Result<Vec<Check>> {
    let x = q.qset();
    let xd = x.dual();
    check_type(s_hat, &xd, x, "s^")?;
    let delta_hat = q.delta_hat(tol)?;
    let eps_hat = q.epsilon_hat(tol)?;
    let eps_dag = eps_hat.dagger();
    let id = QRelation::identity(x);
    let mut checks = antipode_inequalities(x, &delta_hat, &eps_dag, s_hat, tol)?;
    let third = delta_hat.after(&s_hat.product(&id).after(&ev(x).dagger(), tol)?, tol)?;
    let fourth = delta_hat.after(&id.product(s_hat).after(&ev(&xd).dagger(), tol)?, tol)?;
    checks.push(Check::within(
        "left unit diagram",
        "Delta^ . (s^ x id) . ev_X^dag = eps^",
        third.eq_residual(&eps_hat)?,
        tol,
    ));
    checks.push(Check::within(
        "right unit diagram",
        "Delta^ . (id x s^) . ev_X*^dag = eps^",
        fourth.eq_residual(&eps_hat)?,
        tol,
    ));
    let (single, total) = s_hat.function_residuals(tol)?;
    checks.push(Check::within(
        "s^ single-valued",
        "id_X >= s^ . s^^dag",
        single,
        tol,
    ));
    checks.push(Check::within(
        "s^ total",
        "id_X* <= s^^dag . s^",
        total,
        tol,
    ));
    Ok(checks)
}

/// The relation `X* -> X` with components `{T : T s(m) = m T for all m}`,
/// where `s(m)` acts on `X*` through the transpose.
pub fn inversion_relation(
    q: &DiscreteQuantumMonoid,
    s: &AntipodeCandidate,
    tol: Tolerance,
) -> Result<QRelation> {
    let alg = &q.algebra;
    let x = q.qset();
    let xd = x.dual();
    let d = alg.dim();
    let images: Vec<AlgebraElement> = (0..d).map(|u| s.map.image_of_unit(u)).collect();
    let mut comps = Vec::new();
    for a in 0..x.len() {
        let na = x.dim(a);
        for b in 0..x.len() {
            let nb = x.dim(b);
            // T is nb x na; T s(m)_a^T - m_b T = 0, row-major vec(T).
            let mut rows = CMatrix::zeros(d * na * nb, na * nb);
            for (u, img) in images.iter().enumerate() {
                let sa = img.block(a);
                let mb = AlgebraElement::matrix_unit(alg, u);
                let lhs = kron(&identity(nb), sa) - kron(mb.block(b), &identity(na));
                rows.view_mut((u * na * nb, 0), (na * nb, na * nb))
                    .copy_from(&lhs);
            }
            let null = null_space(&rows, tol);
            if null.ncols() > 0 {
                comps.push(((a, b), OperatorSubspace::from_frame(na, nb, &null, tol)));
            }
        }
    }
    QRelation::new(xd, x.clone(), comps)
}

/// The relation conditions for a candidate inverse `R : X* -> X`, together
/// with the weaker consequences obtained by precomposing with top.
pub fn dqg_relation_check(
    q: &DiscreteQuantumMonoid,
    r: &QRelation,
    tol: Tolerance,
) -> Result<Vec<Check>> {
    let x = q.qset();
    check_type(r, &x.dual(), x, "R")?;
    let delta_hat = q.delta_hat(tol)?;
    let eps_dag = q.epsilon_hat(tol)?.dagger();
    let mut checks = antipode_inequalities(x, &delta_hat, &eps_dag, r, tol)?;
    let one = QuantumSet::unit();
    let top_in = QRelation::top(&one, x);
    let id = QRelation::identity(x);
    let top_out = QRelation::top(x, &one);
    let lead = QRelation::reindex(x, &cartesian_product(&one, x))?;
    let trail = QRelation::reindex(x, &cartesian_product(x, &one))?;
    let left = eps_dag.after(
        &delta_hat.after(&top_in.product(&id).after(&lead, tol)?, tol)?,
        tol,
    )?;
    let right = eps_dag.after(
        &delta_hat.after(&id.product(&top_in).after(&trail, tol)?, tol)?,
        tol,
    )?;
    checks.push(Check::within(
        "left top consequence",
        "eps^dag . Delta^ . (top x id) >= top",
        top_out.leq_residual(&left)?,
        tol,
    ));
    checks.push(Check::within(
        "right top consequence",
        "eps^dag . Delta^ . (id x top) >= top",
        top_out.leq_residual(&right)?,
        tol,
    ));
    Ok(checks)
}

/// Outcome of the Kac-type test.
#[derive(Clone, Debug, PartialEq)]
pub struct KacVerdict {
    pub is_kac: bool,
    pub star_map: bool,
    pub diagonal_states: bool,
    pub diagrams: bool,
    pub checks: Vec<Check>,
}

/// Runs the three Kac tests and requires them to agree: the antipode is a
/// *-map; the diagonal-state conditions hold for the antipode into `M^op`;
/// the relation battery holds for the associated relation.
pub fn is_kac(q: &DiscreteQuantumMonoid, tol: Tolerance) -> Result<KacVerdict> {
    let s = solve_antipode(q, tol)?;
    let sigma = s.into_opposite();
    let mut checks = vec![Check::within(
        "antipode is a *-map",
        "s(x*) = s(x)*",
        s.star_defect,
        tol,
    )];
    let diag = diagonal_state_conditions(q, &sigma, tol)?;
    let diagonal_states = all_pass(&diag);
    checks.extend(diag);
    let diagrams = if s.is_wstar_into_op {
        let s_hat = antipode_relation(q, &sigma, tol)?;
        let battery = kac_diagram_battery(q, &s_hat, tol)?;
        let ok = all_pass(&battery);
        checks.extend(battery);
        ok
    } else {
        false
    };
    let star_map = s.is_star_map;
    if star_map != diagonal_states || star_map != diagrams {
        return Err(Error::InternalDisagreement(format!(
            "*-map {star_map}, diagonal states {diagonal_states}, diagrams {diagrams}"
        )));
    }
    Ok(KacVerdict {
        is_kac: star_map,
        star_map,
        diagonal_states,
        diagrams,
        checks,
    })
}

/// The relation `X* -> X` associated with `sigma : l^inf(X) -> l^inf(X*)`,
/// regarded as a W*-morphism without validation.
pub fn antipode_relation(
    q: &DiscreteQuantumMonoid,
    sigma: &BlockMap,
    tol: Tolerance,
) -> Result<QRelation> {
    let x = q.qset();
    intertwiners(sigma, &x.dual(), x, tol)
}

/// A deliberately wrong candidate: `sigma` after a nontrivial inner
/// automorphism of a block of size at least two, or after exchanging the
/// first two atoms when every block is one-dimensional.
pub fn corrupt_candidate(
    q: &DiscreteQuantumMonoid,
    sigma: &BlockMap,
    seed: u64,
) -> Option<BlockMap> {
    let alg = &q.algebra;
    let images: Vec<AlgebraElement> =
        if let Some(b) = (0..alg.num_blocks()).find(|&b| alg.block_dim(b) >= 2) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_unitary(alg.block_dim(b), &mut rng);
            (0..alg.dim())
                .map(|k| {
                    let mut e = AlgebraElement::matrix_unit(alg, k).into_blocks();
                    e[b] = &u * &e[b] * u.adjoint();
                    AlgebraElement::new(alg, e).expect("same shape")
                })
                .collect()
        } else if alg.num_blocks() >= 2 {
            (0..alg.dim())
                .map(|k| {
                    let swapped = match k {
                        0 => 1,
                        1 => 0,
                        other => other,
                    };
                    AlgebraElement::matrix_unit(alg, swapped)
                })
                .collect()
        } else {
            return None;
        };
    let auto = BlockMap::from_images(alg.clone(), alg.clone(), |k| images[k].clone());
    sigma.after(&auto).ok()
}

/// `relation_to_projection(eps^dag)` against the support of the counit.
pub fn counit_support_residual(q: &DiscreteQuantumMonoid, tol: Tolerance) -> Result<f64> {
    let e = vaes_group_check(q, tol)?.counit_support;
    let p = relation_to_projection(&q.epsilon_hat(tol)?.dagger());
    let worst = e
        .element()
        .blocks()
        .iter()
        .zip(p.element().blocks())
        .map(|(a, b)| crate::numlin::max_abs(&(a - b)))
        .fold(0.0, f64::max);
    Ok(worst)
}
