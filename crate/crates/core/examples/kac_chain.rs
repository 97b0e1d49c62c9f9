//! The three Kac tests on a group algebra, and what happens when the
//! antipode is replaced by a wrong candidate.

use qrelkit::builders::named_example;
use qrelkit::dqm::{
    antipode_relation, corrupt_candidate, diagonal_state_conditions, is_kac, kac_diagram_battery,
    solve_antipode,
};
use qrelkit::numlin::Tolerance;
use qrelkit::report::all_pass;

fn main() -> qrelkit::Result<()> {
    let tol = Tolerance::default();
    let q = named_example("s3-dual", 0, tol)?;
    let verdict = is_kac(&q, tol)?;
    println!("C[S3]: Kac = {}", verdict.is_kac);
    for c in &verdict.checks {
        println!("  {:<38} {:<5} {:.1e}", c.name, c.verdict, c.residual);
    }

    let s = solve_antipode(&q, tol)?;
    let bad = corrupt_candidate(&q, &s.into_opposite(), 1).expect("C[S3] has a 2x2 block");
    let diag = diagonal_state_conditions(&q, &bad, tol)?;
    let battery = kac_diagram_battery(&q, &antipode_relation(&q, &bad, tol)?, tol)?;
    println!(
        "corrupted candidate: diagonal states pass = {}, diagrams pass = {}",
        all_pass(&diag),
        all_pass(&battery)
    );
    for c in battery.iter().filter(|c| !c.verdict) {
        println!("  failing: {} ({:.2e})", c.name, c.residual);
    }
    Ok(())
}
