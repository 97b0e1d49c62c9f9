//! Check results and the report emitted by the command-line tool.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::numlin::Tolerance;

/// One verified condition.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The mathematical statement being checked.
    pub anchor: String,
    pub verdict: bool,
    pub residual: f64,
}

impl Check {
    /// Passes when `residual <= tol`.
    pub fn within(name: &str, anchor: &str, residual: f64, tol: Tolerance) -> Self {
        Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            verdict: residual <= tol.get(),
            residual,
        }
    }

    pub fn flag(name: &str, anchor: &str, verdict: bool, residual: f64) -> Self {
        Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            verdict,
            residual,
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.verdict)
}

pub fn max_residual(checks: &[Check]) -> f64 {
    checks
        .iter()
        .map(|c| c.residual)
        .filter(|r| r.is_finite())
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub input_sha256: String,
    pub level: String,
    pub seed: u64,
    pub tol: f64,
    pub checks: Vec<Check>,
    pub verdict: bool,
}

impl Report {
    pub fn new(input: &[u8], level: &str, seed: u64, tol: Tolerance, checks: Vec<Check>) -> Self {
        let verdict = all_pass(&checks);
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_sha256: hex::encode(Sha256::digest(input)),
            level: level.to_string(),
            seed,
            tol: tol.get(),
            checks,
            verdict,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "qrelkit {}", self.tool_version);
        let _ = writeln!(out, "input sha256 {}", self.input_sha256);
        let _ = writeln!(
            out,
            "level {}  seed {}  tol {:e}",
            self.level, self.seed, self.tol
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "[{}] {:<34} residual {:.3e}  ({})",
                if c.verdict { "pass" } else { "FAIL" },
                c.name,
                c.residual,
                c.anchor
            );
        }
        let _ = writeln!(
            out,
            "overall: {}",
            if self.verdict { "PASS" } else { "FAIL" }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renderings_agree_on_verdicts() {
        let tol = Tolerance::default();
        let checks = vec![
            Check::within("a", "x = y", 0.0, tol),
            Check::within("b", "x <= y", 1.0, tol),
        ];
        let r = Report::new(b"{}", "monoid", 7, tol, checks);
        assert!(!r.verdict);
        let text = r.to_text();
        assert!(text.contains("[pass] a"));
        assert!(text.contains("[FAIL] b"));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
