use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qrelkit::builders::{named_example, EXAMPLE_NAMES};
use qrelkit::corr::{
    morphism_to_relation, projection_to_relation, relation_to_morphism, relation_to_projection,
    WStarMorphism,
};
use qrelkit::dqm::{
    antipode_relation, check_monoid, counit_support_residual, dqg_relation_check,
    inversion_relation, is_kac, one_sided_solvability, solve_antipode, vaes_group_check,
};
use qrelkit::json::{to_pretty, MonoidJson, MorphismJson, ProjectionJson, RelationJson};
use qrelkit::numlin::Tolerance;
use qrelkit::report::{all_pass, Check, Report};
use qrelkit::states::is_nondegenerate_diagonal;
use qrelkit::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "qrelkit",
    version,
    about = "Quantum relations and discrete quantum groups"
)]
struct Cli {
    /// Numerical tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a monoid file up to the requested level.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Level::Full)]
        level: Level,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Convert between relations, projections and morphisms.
    Convert {
        path: PathBuf,
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
    },
    /// Emit a built-in example monoid.
    Examples {
        /// Example name; omit to list the names.
        name: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Level {
    Monoid,
    Group,
    Kac,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Relation,
    Projection,
    Morphism,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qrelkit: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let tol = Tolerance::new(cli.tol)?;
    match &cli.command {
        Command::Check {
            path,
            level,
            format,
        } => {
            let bytes = read(path)?;
            let parsed: MonoidJson = serde_json::from_slice(&bytes)?;
            let q = parsed.to_monoid()?;
            let checks = run_checks(&q, *level, cli.seed, tol)?;
            let report = Report::new(&bytes, level_name(*level), cli.seed, tol, checks);
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            emit(cli.out.as_deref(), &text)?;
            Ok(report.verdict)
        }
        Command::Convert { path, from, to } => {
            let bytes = read(path)?;
            let relation = match from {
                Kind::Relation => {
                    serde_json::from_slice::<RelationJson>(&bytes)?.to_relation(tol)?
                }
                Kind::Projection => {
                    let p: ProjectionJson = serde_json::from_slice(&bytes)?;
                    projection_to_relation(&p.element()?, &p.dom, &p.cod, tol)?
                }
                Kind::Morphism => {
                    let map = serde_json::from_slice::<MorphismJson>(&bytes)?.to_map()?;
                    morphism_to_relation(&WStarMorphism::new(map, tol)?, tol)?
                }
            };
            let text = match to {
                Kind::Relation => to_pretty(&RelationJson::from_relation(&relation)),
                Kind::Projection => {
                    let p = relation_to_projection(&relation);
                    to_pretty(&ProjectionJson::new(
                        relation.dom(),
                        relation.cod(),
                        p.element(),
                    ))
                }
                Kind::Morphism => {
                    let psi = relation_to_morphism(&relation, tol)?;
                    to_pretty(&MorphismJson::from_map(psi.map()))
                }
            };
            emit(cli.out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Examples { name } => {
            let text = match name {
                None => EXAMPLE_NAMES.join("\n") + "\n",
                Some(n) => to_pretty(&MonoidJson::from_monoid(&named_example(n, cli.seed, tol)?)),
            };
            emit(cli.out.as_deref(), &text)?;
            Ok(true)
        }
    }
}

fn level_name(level: Level) -> &'static str {
    match level {
        Level::Monoid => "monoid",
        Level::Group => "group",
        Level::Kac => "kac",
        Level::Full => "full",
    }
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Format(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_checks(
    q: &qrelkit::dqm::DiscreteQuantumMonoid,
    level: Level,
    seed: u64,
    tol: Tolerance,
) -> Result<Vec<Check>> {
    let mut checks = check_monoid(q, tol);
    if level == Level::Monoid || !all_pass(&checks) {
        return Ok(checks);
    }
    let group = vaes_group_check(q, tol)?;
    checks.extend(group.checks.iter().cloned());
    let antipode = solve_antipode(q, tol);
    let sides = one_sided_solvability(q, tol);
    checks.push(Check::flag(
        "antipode solvable",
        "mult (id (x) s) Delta = epsilon(.) 1 = mult (s (x) id) Delta",
        antipode.is_ok(),
        match &antipode {
            Ok(s) => s.right_residual.max(s.left_residual),
            Err(Error::NoSolution { residual }) => *residual,
            Err(_) => 1.0,
        },
    ));
    checks.push(Check::flag(
        "one-sided antipode systems",
        "right and left systems each solvable",
        sides.right && sides.left,
        0.0,
    ));
    checks.push(Check::flag(
        "group tests agree",
        "support conditions hold iff an antipode exists",
        group.is_group == antipode.is_ok(),
        0.0,
    ));
    let s = match antipode {
        Ok(s) if group.is_group => s,
        _ => return Ok(checks),
    };
    checks.push(Check::flag(
        "antipode unique",
        "the homogeneous antipode system has only the zero solution",
        s.nullity == 0,
        s.nullity as f64,
    ));
    checks.push(Check::within(
        "antipode anti-multiplicative",
        "s(xy) = s(y) s(x)",
        s.antimultiplicative_defect,
        tol,
    ));
    checks.push(Check::within(
        "antipode unital",
        "s(1) = 1",
        s.unital_defect,
        tol,
    ));
    if level == Level::Group {
        return Ok(checks);
    }
    match is_kac(q, tol) {
        Ok(v) => {
            checks.extend(v.checks);
            checks.push(Check::flag(
                "Kac tests agree",
                "*-map, diagonal-state and diagram tests give one verdict",
                true,
                0.0,
            ));
        }
        Err(Error::InternalDisagreement(msg)) => {
            checks.push(Check::flag("Kac tests agree", &msg, false, 1.0));
            return Ok(checks);
        }
        Err(e) => return Err(e),
    }
    if level == Level::Kac {
        return Ok(checks);
    }
    let r = inversion_relation(q, &s, tol)?;
    checks.extend(dqg_relation_check(q, &r, tol)?);
    let s_hat = antipode_relation(q, &s.into_opposite(), tol)?;
    checks.push(Check::within(
        "inversion relation matches s^",
        "{T : T s(m) = m T} = relation of s",
        r.eq_residual(&s_hat)?,
        tol,
    ));
    checks.push(Check::within(
        "counit support",
        "P of eps^dag is the support projection of epsilon",
        counit_support_residual(q, tol)?,
        tol,
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    checks.push(Check::flag(
        "diagonal nondegenerate",
        "(p (x) p) delta_M is nonzero for sampled nonzero projections p",
        is_nondegenerate_diagonal(q.algebra(), 32, &mut rng, tol),
        0.0,
    ));
    Ok(checks)
}
