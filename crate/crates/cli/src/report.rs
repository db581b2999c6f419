//! Serializable reports for the verification and analysis commands.
//!
//! Key types:
//! - [`VerifyReport`]: one record per executed check, plus an overall
//!   verdict; round-trips through JSON unchanged.
//! - [`AnalyzeReport`]: stage-by-stage findings for a pencil read from a
//!   file, where a degenerate determinant or a positive-dimensional base
//!   locus is a reported finding rather than a process failure.
//!
//! Design notes: timings are reported in integer milliseconds so reports
//! stay diffable; rational data (witness points, lambda values) is encoded
//! as strings, never floats.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    /// The claim was verified.
    Pass,
    /// The claim was tested and came out false.
    Fail,
    /// The check could not be carried out (missing data, solver refusal).
    Error,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub claim: String,
    pub status: CheckStatus,
    pub witness: String,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub id: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub version: String,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let lam = self
            .lambda
            .as_ref()
            .map(|l| format!(" (lambda = {l})"))
            .unwrap_or_default();
        out.push_str(&format!("example {}{} seed {}\n", self.id, lam, self.seed));
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS ",
                CheckStatus::Fail => "FAIL ",
                CheckStatus::Error => "ERROR",
            };
            out.push_str(&format!("{tag} {:<26} {:>6} ms  {}\n", c.name, c.millis, c.witness));
        }
        out.push_str(if self.passed { "verdict: all checks passed\n" } else { "verdict: FAILED\n" });
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnalyzeFinding {
    pub stage: String,
    pub outcome: String,
    pub detail: String,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub file: String,
    pub seed: u64,
    pub version: String,
    pub num_vars: usize,
    pub findings: Vec<AnalyzeFinding>,
}

impl AnalyzeReport {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "pencil {} in {} variables, seed {}\n",
            self.file, self.num_vars, self.seed
        ));
        for f in &self.findings {
            out.push_str(&format!(
                "{:<18} {:<22} {:>6} ms  {}\n",
                f.stage, f.outcome, f.millis, f.detail
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_report_round_trips_through_json() {
        let report = VerifyReport {
            id: "sample".to_string(),
            seed: 7,
            lambda: Some("-3/4".to_string()),
            version: "0.1.0".to_string(),
            passed: false,
            checks: vec![CheckRecord {
                name: "nondegenerate".to_string(),
                claim: "the determinant is a nonzero quartic".to_string(),
                status: CheckStatus::Fail,
                witness: "determinant vanished".to_string(),
                millis: 3,
            }],
        };
        let text = serde_json::to_string_pretty(&report).unwrap();
        let back: VerifyReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.id, report.id);
        assert_eq!(back.lambda, report.lambda);
        assert_eq!(back.checks.len(), 1);
        assert_eq!(back.checks[0].status, CheckStatus::Fail);
    }

    #[test]
    fn lambda_is_omitted_from_json_when_absent() {
        let report = VerifyReport {
            id: "sample".to_string(),
            seed: 7,
            lambda: None,
            version: "0.1.0".to_string(),
            passed: true,
            checks: Vec::new(),
        };
        let text = serde_json::to_string(&report).unwrap();
        assert!(!text.contains("lambda"));
    }

    #[test]
    fn statuses_serialize_lowercase() {
        assert_eq!(serde_json::to_string(&CheckStatus::Pass).unwrap(), "\"pass\"");
        assert_eq!(serde_json::to_string(&CheckStatus::Error).unwrap(), "\"error\"");
    }
}
