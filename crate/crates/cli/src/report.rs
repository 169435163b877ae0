//! Machine-readable reports for verification suites.

use serde::Serialize;

/// Result of one verification suite run. Failure strings are sorted before
/// emission so reports are independent of evaluation order.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    /// Number of individual checks evaluated.
    pub checked: usize,
    /// Descriptions of failed checks (empty on success; capped).
    pub failures: Vec<String>,
    /// Informational counters (instance counts, recorded reference values).
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

const FAILURE_CAP: usize = 25;

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            pass: true,
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.pass = false;
            if self.failures.len() < FAILURE_CAP {
                self.failures.push(describe());
            }
        }
    }

    pub fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    pub fn finish(mut self, started: std::time::Instant) -> Self {
        self.failures.sort();
        self.elapsed_ms = started.elapsed().as_millis();
        self
    }

    /// One-line human summary: `PASS suite (checks) [time]`.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {}: {} checks in {} ms",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.checked,
            self.elapsed_ms
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
