use qrelkit::builders::named_example;
use qrelkit::dqm::{
    antipode_relation, check_monoid, corrupt_candidate, diagonal_state_conditions,
    dqg_relation_check, inversion_relation, is_kac, kac_diagram_battery, solve_antipode,
};
use qrelkit::numlin::Tolerance;
use qrelkit::report::{all_pass, max_residual};

const CHAIN: [&str; 6] = ["z2", "z3", "s3", "z3-dual", "s3-dual", "kac-paljutkin"];

fn tol() -> Tolerance {
    Tolerance::new(1e-8).unwrap()
}

#[test]
fn kac_tests_agree_on_every_example() {
    for name in CHAIN {
        let q = named_example(name, 7, Tolerance::default()).unwrap();
        assert!(all_pass(&check_monoid(&q, tol())), "{name}");
        let v = is_kac(&q, tol()).unwrap();
        assert!(
            v.is_kac && v.star_map && v.diagonal_states && v.diagrams,
            "{name}"
        );
        assert!(max_residual(&v.checks) < 1e-8, "{name}");
    }
}

#[test]
fn inversion_relation_satisfies_the_relation_conditions() {
    for name in CHAIN {
        let q = named_example(name, 7, Tolerance::default()).unwrap();
        let s = solve_antipode(&q, tol()).unwrap();
        let r = inversion_relation(&q, &s, tol()).unwrap();
        let checks = dqg_relation_check(&q, &r, tol()).unwrap();
        assert!(all_pass(&checks), "{name}: {checks:?}");
        let s_hat = antipode_relation(&q, &s.into_opposite(), tol()).unwrap();
        assert!(r.equals(&s_hat, tol()).unwrap(), "{name}");
    }
}

#[test]
fn corrupted_candidates_fail_both_tests() {
    for name in CHAIN {
        let q = named_example(name, 7, Tolerance::default()).unwrap();
        let sigma = solve_antipode(&q, tol()).unwrap().into_opposite();
        for seed in 0..3 {
            let bad =
                corrupt_candidate(&q, &sigma, seed).expect("every example has room to corrupt");
            let diag = all_pass(&diagonal_state_conditions(&q, &bad, tol()).unwrap());
            let s_hat = antipode_relation(&q, &bad, tol()).unwrap();
            let battery = all_pass(&kac_diagram_battery(&q, &s_hat, tol()).unwrap());
            assert!(
                !diag && !battery,
                "{name} seed {seed}: diag {diag} battery {battery}"
            );
        }
    }
}
