//! Structured reports emitted by the verification suites and the CLI.

use serde::{Deserialize, Serialize};

/// One named check with its extremal measured value. For threshold checks
/// `measured` is the worst value observed (a maximal violation or a minimal
/// residual), so reports stay informative even when everything passes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub measured: f64,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, measured: f64, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            measured,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        measured: f64,
        detail: impl Into<String>,
        witness: Option<serde_json::Value>,
    ) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            measured,
            detail: detail.into(),
            witness,
        }
    }
}

/// A reproducible record of one run: the command echo, the seed, the
/// tolerance, and every check with its measurements. Command, seed, and
/// crate version determine the outputs byte for byte.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub command: String,
    pub suite: String,
    pub seed: u64,
    pub tol: f64,
    pub checks: Vec<CheckResult>,
    pub artifacts: Vec<String>,
}

impl ExperimentReport {
    pub fn new(command: impl Into<String>, suite: impl Into<String>, seed: u64, tol: f64) -> Self {
        ExperimentReport {
            command: command.into(),
            suite: suite.into(),
            seed,
            tol,
            checks: Vec::new(),
            artifacts: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Plain-text summary, one line per check.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "suite {} (seed {}, tol {:e}): {}/{} checks passed\n",
            self.suite,
            self.seed,
            self.tol,
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        );
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {:<38} measured {:>14.9}  {}\n",
                if c.passed { "pass" } else { "FAIL" },
                c.name,
                c.measured,
                c.detail
            ));
        }
        out
    }
}
