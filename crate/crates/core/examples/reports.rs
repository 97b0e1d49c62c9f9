//! Serialize a monoid, check it, and print the JSON report the CLI would emit.

use qrelkit::builders::named_example;
use qrelkit::dqm::{check_monoid, vaes_group_check};
use qrelkit::json::{to_pretty, MonoidJson};
use qrelkit::numlin::Tolerance;
use qrelkit::report::Report;

fn main() -> qrelkit::Result<()> {
    let tol = Tolerance::default();
    let q = named_example("z2", 0, tol)?;
    let text = to_pretty(&MonoidJson::from_monoid(&q));
    let parsed: MonoidJson = serde_json::from_str(&text)?;
    let q = parsed.to_monoid()?;

    let mut checks = check_monoid(&q, tol);
    checks.extend(vaes_group_check(&q, tol)?.checks);
    let report = Report::new(text.as_bytes(), "group", 0, tol, checks);
    print!("{}", report.to_json());
    print!("{}", report.to_text());
    Ok(())
}
