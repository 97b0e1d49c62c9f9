//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any FAIL.

mod common;

use std::process::{Command, ExitCode};

use common::*;
use qrelkit::builders::{
    all_monoids, curated_tables, function_algebra, group_algebra, named_example, symmetric_group_3,
    EXAMPLE_NAMES,
};
use qrelkit::corr::{
    classical_pullback, morphism_to_relation, projection_to_relation, pushforward_check,
    relation_to_morphism, relation_to_projection, support_image_check,
};
use qrelkit::dqm::{
    antipode_relation, check_monoid, corrupt_candidate, diagonal_state_conditions,
    dqg_relation_check, inversion_relation, is_kac, kac_diagram_battery, solve_antipode,
    vaes_group_check,
};
use qrelkit::json::{to_pretty, MonoidJson};
use qrelkit::numlin::{identity, CMatrix, Tolerance};
use qrelkit::qrel::{snake, QRelation};
use qrelkit::qset::{ell_infty, AlgebraElement, QuantumSet};
use qrelkit::random::{random_morphism_into, random_qset, random_relation};
use qrelkit::report::{all_pass, max_residual};
use qrelkit::states::{
    decompose_diagonal_state, diagonal_orthogonality_defect, diagonal_overlap,
    diagonal_state_from_weights, random_algebra_projection,
};
use qrelkit::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Error bound for roundtrips, compatibility results and the Kac chain.
const HS_BOUND: f64 = 1e-8;
/// Error bound for the snake identities.
const SNAKE_BOUND: f64 = 1e-9;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn tol() -> Tolerance {
    Tolerance::default()
}

fn bool_matrix(n: usize, m: usize, density: f64, rng: &mut ChaCha8Rng) -> BoolRel {
    (0..n)
        .map(|_| (0..m).map(|_| rng.gen_bool(density)).collect())
        .collect()
}

fn function_matrix(n: usize, m: usize, rng: &mut ChaCha8Rng) -> BoolRel {
    (0..n)
        .map(|_| {
            let j = rng.gen_range(0..m);
            (0..m).map(|k| k == j).collect()
        })
        .collect()
}

fn lift(r: &BoolRel) -> QRelation {
    let x = QuantumSet::classical(r.len()).unwrap();
    let y = QuantumSet::classical(r[0].len()).unwrap();
    QRelation::from_bool_matrix(&x, &y, r).unwrap()
}

fn classical_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let instances = 200;
    let mut mismatches = Vec::new();
    for i in 0..instances {
        let (n, m, k) = (
            rng.gen_range(1..=5),
            rng.gen_range(1..=5),
            rng.gen_range(1..=5),
        );
        let r = if i % 4 == 0 {
            function_matrix(n, m, &mut rng)
        } else {
            bool_matrix(n, m, rng.gen_range(0.1..0.9), &mut rng)
        };
        let s = bool_matrix(m, k, rng.gen_range(0.1..0.9), &mut rng);
        let t = bool_matrix(n, m, rng.gen_range(0.3..1.0), &mut rng);
        let (lr, ls, lt) = (lift(&r), lift(&s), lift(&t));
        let compose = ls.after(&lr, tol()).unwrap().to_bool_matrix().unwrap();
        let dagger = lr.dagger().to_bool_matrix().unwrap();
        let leq = lr.leq(&lt, tol()).unwrap();
        let product = lr.product(&ls).to_bool_matrix().unwrap();
        let function = lr.is_function(tol()).unwrap();
        let checks = [
            ("compose", compose == bool_compose(&r, &s)),
            ("dagger", dagger == bool_dagger(&r)),
            ("leq", leq == bool_leq(&r, &t)),
            ("product", product == bool_product(&r, &s)),
            ("is_function", function == bool_is_function(&r)),
        ];
        for (name, ok) in checks {
            if !ok {
                mismatches.push(format!("{name}@{i}"));
            }
        }
    }
    outcome(
        mismatches.is_empty(),
        format!("{instances} instances, mismatches: {mismatches:?}"),
    )
}

/// Multiplicity rows whose atom dimensions stay at most three.
fn multiplicities(y: &QuantumSet, atoms: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    (0..atoms)
        .map(|_| loop {
            let row: Vec<usize> = (0..y.len()).map(|_| rng.gen_range(0..=1)).collect();
            let dim: usize = row.iter().zip(y.dims()).map(|(m, d)| m * d).sum();
            if (1..=3).contains(&dim) {
                break row;
            }
        })
        .collect()
}

fn correspondence_roundtrips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let instances = 100;
    let mut worst_projection: f64 = 0.0;
    for _ in 0..instances {
        let x = random_qset(rng.gen_range(1..=3), 3, &mut rng);
        let y = random_qset(rng.gen_range(1..=3), 3, &mut rng);
        let r = random_relation(&x, &y, 0.3, &mut rng);
        let p = relation_to_projection(&r);
        let back = projection_to_relation(p.element(), &x, &y, tol()).unwrap();
        let p2 = relation_to_projection(&back);
        worst_projection = worst_projection
            .max(element_hs_distance(p.element(), p2.element()))
            .max(r.eq_residual(&back).unwrap());
    }
    let mut worst_morphism: f64 = 0.0;
    let mut failures = 0;
    for _ in 0..instances {
        let y = random_qset(rng.gen_range(1..=3), 3, &mut rng);
        let mult = multiplicities(&y, rng.gen_range(1..=3), &mut rng);
        let (_, psi) = random_morphism_into(&y, &mult, &mut rng).unwrap();
        let r = morphism_to_relation(&psi, tol()).unwrap();
        let (below, above) = r.function_residuals(tol()).unwrap();
        match relation_to_morphism(&r, tol()) {
            Ok(back) => {
                let again = morphism_to_relation(&back, tol()).unwrap();
                worst_morphism = worst_morphism
                    .max(matrix_hs_distance(back.map().matrix(), psi.map().matrix()))
                    .max(again.eq_residual(&r).unwrap())
                    .max(below)
                    .max(above);
            }
            Err(_) => failures += 1,
        }
    }
    // Classical functions against the direct pullback of functions on points.
    let mut worst_classical: f64 = 0.0;
    for _ in 0..instances {
        let (n, m) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let f: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
        let graph: BoolRel = f
            .iter()
            .map(|&j| (0..m).map(|k| k == j).collect())
            .collect();
        let r = lift(&graph);
        let psi = relation_to_morphism(&r, tol()).unwrap();
        let direct = classical_pullback(r.dom(), r.cod(), &f).unwrap();
        worst_classical = worst_classical.max(matrix_hs_distance(
            psi.map().matrix(),
            direct.map().matrix(),
        ));
    }
    let pass = worst_projection < HS_BOUND
        && worst_morphism < HS_BOUND
        && worst_classical < HS_BOUND
        && failures == 0;
    outcome(
        pass,
        format!(
            "{instances} relations (max err {worst_projection:.2e}), {instances} quantum morphisms \
             (max err {worst_morphism:.2e}, {failures} failed), {instances} classical functions \
             (max err {worst_classical:.2e})"
        ),
    )
}

fn compatibility_results() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let instances = 100;
    let mut worst_push: f64 = 0.0;
    let mut worst_support: f64 = 0.0;
    let mut failures = 0;
    for _ in 0..instances {
        let x = random_qset(rng.gen_range(1..=2), 3, &mut rng);
        let y = random_qset(rng.gen_range(1..=2), 3, &mut rng);
        let ml = multiplicities(&x, rng.gen_range(1..=2), &mut rng);
        let mr = multiplicities(&y, rng.gen_range(1..=2), &mut rng);
        let (_, psi_l) = random_morphism_into(&x, &ml, &mut rng).unwrap();
        let (_, psi_r) = random_morphism_into(&y, &mr, &mut rng).unwrap();
        let r = random_relation(&x, &y, 0.3, &mut rng);
        let push = pushforward_check(&psi_l, &psi_r, &r, tol()).unwrap();
        let p = random_algebra_projection(psi_l.source(), false, &mut rng);
        let support = support_image_check(&psi_l, &p, tol()).unwrap();
        if !push.holds || !support.holds {
            failures += 1;
        }
        worst_push = worst_push.max(push.residual);
        worst_support = worst_support.max(support.residual);
    }
    outcome(
        failures == 0 && worst_push < HS_BOUND && worst_support < HS_BOUND,
        format!(
            "{instances} pushforwards (max err {worst_push:.2e}), {instances} support images \
             (max err {worst_support:.2e}), {failures} failed"
        ),
    )
}

fn diagonal_states() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst_weight: f64 = 0.0;
    let weight_instances = 100;
    for _ in 0..weight_instances {
        let x = random_qset(rng.gen_range(1..=4), 3, &mut rng);
        let m = ell_infty(&x);
        let raw: Vec<f64> = (0..m.num_blocks())
            .map(|_| rng.gen_range(0.0..1.0))
            .collect();
        let total: f64 = raw.iter().sum();
        let w: Vec<f64> = raw.iter().map(|v| v / total).collect();
        let phi = diagonal_state_from_weights(&m, &w, tol()).unwrap();
        let found = decompose_diagonal_state(&phi, &m, tol()).unwrap();
        for (i, (a, b)) in found.weights.iter().zip(&w).enumerate() {
            // Independent reading of the weight: the mass on 1_i (x) 1_i.
            let mut blocks: Vec<CMatrix> = m
                .block_dims()
                .iter()
                .map(|&n| CMatrix::zeros(n, n))
                .collect();
            blocks[i] = identity(m.block_dim(i));
            let one_i = AlgebraElement::new(&m, blocks).unwrap();
            let mass = phi.evaluate(&one_i.tensor_op(&one_i)).re;
            worst_weight = worst_weight.max((a - b).abs()).max((mass - b).abs());
        }
    }
    let samples = 200;
    let mut worst_orth: f64 = 0.0;
    let mut weakest_overlap = f64::INFINITY;
    for _ in 0..samples {
        let x = random_qset(rng.gen_range(1..=4), 3, &mut rng);
        let m = ell_infty(&x);
        let p = random_algebra_projection(&m, false, &mut rng);
        worst_orth = worst_orth.max(diagonal_orthogonality_defect(&m, &p));
        let p = random_algebra_projection(&m, true, &mut rng);
        weakest_overlap = weakest_overlap.min(diagonal_overlap(&m, &p));
    }
    outcome(
        worst_weight < HS_BOUND && worst_orth < HS_BOUND && weakest_overlap > tol().get(),
        format!(
            "{weight_instances} weight recoveries (max err {worst_weight:.2e}), {samples} \
             orthogonality samples (max defect {worst_orth:.2e}), {samples} nondegeneracy samples \
             (min overlap {weakest_overlap:.2e})"
        ),
    )
}

fn group_detection() -> Outcome {
    let mut tables = curated_tables();
    for n in 1..=3 {
        for (k, t) in all_monoids(n).into_iter().enumerate() {
            tables.push((format!("labeled-{n}-{k}"), t));
        }
    }
    let non_groups = tables
        .iter()
        .filter(|(_, t)| !table_is_group(t.table(), t.unit()))
        .count();
    let mut wrong = Vec::new();
    for (name, t) in &tables {
        let expected = table_is_group(t.table(), t.unit());
        let q = function_algebra(t);
        let vaes = vaes_group_check(&q, tol()).map(|v| v.is_group);
        let antipode = match solve_antipode(&q, tol()) {
            Ok(_) => Ok(true),
            Err(Error::NoSolution { .. }) => Ok(false),
            Err(e) => Err(e),
        };
        match (vaes, antipode) {
            (Ok(v), Ok(a)) if v == expected && a == expected => {}
            _ => wrong.push(name.clone()),
        }
    }
    outcome(
        wrong.is_empty() && non_groups >= 5,
        format!(
            "{} tables ({non_groups} non-groups), disagreements: {wrong:?}",
            tables.len()
        ),
    )
}

fn kac_chain() -> Outcome {
    let strict = Tolerance::new(HS_BOUND).unwrap();
    let names = ["z2", "z3", "s3", "z3-dual", "s3-dual", "kac-paljutkin"];
    let mut problems = Vec::new();
    let mut worst: f64 = 0.0;
    let mut corrupted = 0;
    for name in names {
        let q = named_example(name, 0, tol()).unwrap();
        let verdict = match is_kac(&q, strict) {
            Ok(v) => v,
            Err(e) => {
                problems.push(format!("{name}: {e}"));
                continue;
            }
        };
        if !(verdict.is_kac && verdict.star_map && verdict.diagonal_states && verdict.diagrams) {
            problems.push(format!("{name}: not Kac"));
        }
        let s = solve_antipode(&q, strict).unwrap();
        let r = inversion_relation(&q, &s, strict).unwrap();
        let relation_checks = dqg_relation_check(&q, &r, strict).unwrap();
        if !all_pass(&verdict.checks) || !all_pass(&relation_checks) {
            problems.push(format!("{name}: a check failed"));
        }
        worst = worst
            .max(max_residual(&verdict.checks))
            .max(max_residual(&relation_checks));
        let sigma = s.into_opposite();
        for seed in 0..3 {
            let Some(bad) = corrupt_candidate(&q, &sigma, seed) else {
                problems.push(format!("{name}: cannot corrupt"));
                continue;
            };
            let diag = all_pass(&diagonal_state_conditions(&q, &bad, strict).unwrap());
            let s_hat = antipode_relation(&q, &bad, strict).unwrap();
            let battery = all_pass(&kac_diagram_battery(&q, &s_hat, strict).unwrap());
            if diag || battery {
                problems.push(format!("{name}/{seed}: diag {diag}, battery {battery}"));
            }
            corrupted += 1;
        }
    }
    outcome(
        problems.is_empty() && worst < HS_BOUND,
        format!(
            "{} examples (max residual {worst:.2e}), {corrupted} corrupted candidates, \
             problems: {problems:?}",
            names.len()
        ),
    )
}

fn snake_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let instances = 50;
    let mut worst: f64 = 0.0;
    for _ in 0..instances {
        let x = random_qset(rng.gen_range(1..=4), 3, &mut rng);
        let s = snake(&x, tol()).unwrap();
        worst = worst.max(s.eq_residual(&QRelation::identity(&x)).unwrap());
    }
    outcome(
        worst < SNAKE_BOUND,
        format!("{instances} quantum sets, max err {worst:.2e}"),
    )
}

fn wedderburn() -> Outcome {
    match group_algebra(&symmetric_group_3(), true, 0, tol()) {
        Ok(q) => {
            let mut dims = q.algebra().block_dims();
            dims.sort_unstable();
            let residual = max_residual(&check_monoid(&q, tol()));
            outcome(
                dims == [1, 1, 2] && residual < HS_BOUND,
                format!("blocks {dims:?}, monoid residual {residual:.2e}"),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_qrelkit");
    let seed = 12345u64;
    let mut differing = Vec::new();
    for name in EXAMPLE_NAMES {
        let q = named_example(name, seed, tol()).unwrap();
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, to_pretty(&MonoidJson::from_monoid(&q))).unwrap();
        let run = || {
            Command::new(bin)
                .args(["check", path.to_str().unwrap(), "--seed", &seed.to_string()])
                .output()
                .unwrap()
        };
        let (a, b) = (run(), run());
        if a.stdout.is_empty() || a.stdout != b.stdout || a.status.code() != b.status.code() {
            differing.push(name);
        }
    }
    outcome(
        differing.is_empty(),
        format!("{} reports, differing: {differing:?}", EXAMPLE_NAMES.len()),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("classical-oracle equivalence", classical_oracle),
        ("correspondence roundtrips", correspondence_roundtrips),
        ("pushforward and support images", compatibility_results),
        ("diagonal-state classification", diagonal_states),
        ("group detection", group_detection),
        ("Kac equivalence chain", kac_chain),
        ("snake identities", snake_identities),
        ("Wedderburn decomposition of C[S3]", wedderburn),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} {} {name}: {}", i + 1, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
