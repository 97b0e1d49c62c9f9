use std::path::Path;
use std::process::{Command, Output};

use qrelkit::builders::EXAMPLE_NAMES;
use qrelkit::json::{to_pretty, RelationJson};
use qrelkit::numlin::Tolerance;
use qrelkit::qrel::QRelation;
use qrelkit::qset::QuantumSet;
use qrelkit::report::Report;

fn qrelkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrelkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_example(dir: &Path, name: &str) -> String {
    let path = dir.join(format!("{name}.json"));
    let out = qrelkit(&[
        "examples",
        name,
        "--seed",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    path.to_str().unwrap().to_string()
}

#[test]
fn examples_lists_every_name() {
    let out = qrelkit(&["examples"]);
    assert!(out.status.success());
    let listed: Vec<String> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect();
    assert_eq!(listed, EXAMPLE_NAMES);
}

#[test]
fn exit_codes_follow_the_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let group = write_example(dir.path(), "z3");
    let monoid = write_example(dir.path(), "monoid01");
    assert_eq!(qrelkit(&["check", &group]).status.code(), Some(0));
    assert_eq!(
        qrelkit(&["check", &monoid, "--level", "monoid"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(qrelkit(&["check", &monoid]).status.code(), Some(1));
    let missing = dir.path().join("missing.json");
    assert_eq!(
        qrelkit(&["check", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        qrelkit(&["examples", "no-such-example"]).status.code(),
        Some(2)
    );
}

#[test]
fn reports_are_byte_identical_for_one_seed() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_example(dir.path(), "s3-dual");
    let first = qrelkit(&["check", &path, "--seed", "11"]);
    let second = qrelkit(&["check", &path, "--seed", "11"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let report: Report = serde_json::from_slice(&first.stdout).unwrap();
    assert!(report.verdict);
    assert_eq!(report.seed, 11);
    assert_eq!(report.level, "full");
}

#[test]
fn text_report_names_every_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_example(dir.path(), "z2");
    let json = qrelkit(&["check", &path, "--level", "group"]);
    let text = qrelkit(&["check", &path, "--level", "group", "--format", "text"]);
    let report: Report = serde_json::from_slice(&json.stdout).unwrap();
    let text = String::from_utf8(text.stdout).unwrap();
    for c in &report.checks {
        assert!(text.contains(&c.name), "{} missing", c.name);
    }
}

#[test]
fn convert_roundtrips_a_classical_function() {
    let dir = tempfile::tempdir().unwrap();
    let rel = dir.path().join("rel.json");
    let relation = QRelation::from_bool_matrix(
        &QuantumSet::classical(3).unwrap(),
        &QuantumSet::classical(2).unwrap(),
        &[vec![true, false], vec![false, true], vec![false, true]],
    )
    .unwrap();
    std::fs::write(&rel, to_pretty(&RelationJson::from_relation(&relation))).unwrap();
    let mor = dir.path().join("mor.json");
    let back = dir.path().join("back.json");
    let r = rel.to_str().unwrap();
    let m = mor.to_str().unwrap();
    let b = back.to_str().unwrap();
    assert!(
        qrelkit(&["convert", r, "--from", "relation", "--to", "morphism", "--out", m])
            .status
            .success()
    );
    assert!(
        qrelkit(&["convert", m, "--from", "morphism", "--to", "relation", "--out", b])
            .status
            .success()
    );
    let parsed: RelationJson = serde_json::from_slice(&std::fs::read(&back).unwrap()).unwrap();
    let tol = Tolerance::default();
    assert!(parsed
        .to_relation(tol)
        .unwrap()
        .equals(&relation, tol)
        .unwrap());
    let top = QRelation::top(relation.dom(), relation.cod());
    std::fs::write(&rel, to_pretty(&RelationJson::from_relation(&top))).unwrap();
    assert_eq!(
        qrelkit(&["convert", r, "--from", "relation", "--to", "morphism"])
            .status
            .code(),
        Some(2)
    );
}
