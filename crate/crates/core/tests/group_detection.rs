mod common;

use common::table_is_group;
use qrelkit::builders::{all_monoids, curated_tables, function_algebra, group_algebra};
use qrelkit::dqm::{check_monoid, one_sided_solvability, solve_antipode, vaes_group_check};
use qrelkit::numlin::Tolerance;
use qrelkit::report::all_pass;
use qrelkit::Error;

fn tol() -> Tolerance {
    Tolerance::new(1e-8).unwrap()
}

fn detect(name: &str, t: &qrelkit::builders::MonoidTable) {
    let expected = table_is_group(t.table(), t.unit());
    let q = function_algebra(t);
    assert!(all_pass(&check_monoid(&q, tol())), "{name} is not a monoid");
    let verdict = vaes_group_check(&q, tol()).unwrap();
    assert_eq!(verdict.is_group, expected, "{name}: support test");
    match solve_antipode(&q, tol()) {
        Ok(s) => {
            assert!(expected, "{name}: antipode found for a non-group");
            assert_eq!(s.nullity, 0);
            assert!(s.right_residual < 1e-8 && s.left_residual < 1e-8);
        }
        Err(Error::NoSolution { .. }) => assert!(!expected, "{name}: no antipode for a group"),
        Err(e) => panic!("{name}: {e}"),
    }
}

#[test]
fn curated_tables_agree_with_inverse_search() {
    let tables = curated_tables();
    assert!(
        tables
            .iter()
            .filter(|(_, t)| !table_is_group(t.table(), t.unit()))
            .count()
            >= 5
    );
    for (name, t) in &tables {
        detect(name, t);
    }
}

#[test]
fn every_small_monoid_agrees_with_inverse_search() {
    for n in 1..=3 {
        for (k, t) in all_monoids(n).iter().enumerate() {
            detect(&format!("monoid {n}/{k}"), t);
        }
    }
}

#[test]
fn non_groups_never_solve_both_one_sided_systems() {
    for (name, t) in curated_tables() {
        let q = function_algebra(&t);
        let sides = one_sided_solvability(&q, tol());
        if t.is_group() {
            assert!(sides.left && sides.right, "{name}");
        } else {
            assert!(!(sides.left && sides.right), "{name}");
        }
    }
}

#[test]
fn group_algebras_of_non_groups_are_refused() {
    let (_, t) = curated_tables()
        .into_iter()
        .find(|(n, _)| n == "monoid01")
        .unwrap();
    assert!(matches!(
        group_algebra(&t, true, 0, tol()),
        Err(Error::NotAGroup(_))
    ));
}
