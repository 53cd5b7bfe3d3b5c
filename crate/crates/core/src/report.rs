//! Check results and run reports with byte-stable JSON output.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Anomaly,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Anomaly => "anomaly",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub check_id: String,
    pub status: CheckStatus,
    pub detail: String,
    /// Short name of the statement being checked.
    #[serde(rename = "paper_ref")]
    pub reference: String,
}

impl CheckResult {
    pub fn new(suite: &str, check_id: impl Into<String>, passed: bool, detail: impl Into<String>, reference: &str) -> Self {
        CheckResult {
            suite: suite.to_string(),
            check_id: check_id.into(),
            status: if passed { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
            reference: reference.to_string(),
        }
    }

    pub fn anomaly(suite: &str, check_id: impl Into<String>, detail: impl Into<String>, reference: &str) -> Self {
        CheckResult {
            suite: suite.to_string(),
            check_id: check_id.into(),
            status: CheckStatus::Anomaly,
            detail: detail.into(),
            reference: reference.to_string(),
        }
    }

    /// Wraps a fallible check; errors become failures carrying the message.
    pub fn from_result(suite: &str, check_id: impl Into<String>, r: crate::Result<(bool, String)>, reference: &str) -> Self {
        match r {
            Ok((ok, detail)) => CheckResult::new(suite, check_id, ok, detail, reference),
            Err(e) => CheckResult::new(suite, check_id, false, format!("error: {e}"), reference),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub anomaly: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub tool_version: String,
    pub seed: u64,
    pub rank: usize,
    pub suites: Vec<String>,
    pub summary: Summary,
    pub results: Vec<CheckResult>,
}

impl RunReport {
    pub fn new(seed: u64, rank: usize, suites: Vec<String>, mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let count = |s: CheckStatus| results.iter().filter(|r| r.status == s).count();
        let summary = Summary {
            total: results.len(),
            pass: count(CheckStatus::Pass),
            fail: count(CheckStatus::Fail),
            anomaly: count(CheckStatus::Anomaly),
        };
        RunReport { tool_version: env!("CARGO_PKG_VERSION").to_string(), seed, rank, suites, summary, results }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&format!("[{:<7}] {}  {}\n", r.status.to_string(), r.check_id, r.detail));
        }
        out.push_str(&format!(
            "{} checks: {} pass, {} fail, {} anomaly\n",
            self.summary.total, self.summary.pass, self.summary.fail, self.summary.anomaly
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn results_are_sorted_and_counted() {
        let r = RunReport::new(
            7,
            4,
            vec!["x".into()],
            vec![
                CheckResult::new("x", "x.b", true, "", "r"),
                CheckResult::new("x", "x.a", false, "", "r"),
                CheckResult::anomaly("x", "x.c", "", "r"),
            ],
        );
        assert_eq!(r.results[0].check_id, "x.a");
        assert_eq!((r.summary.pass, r.summary.fail, r.summary.anomaly), (1, 1, 1));
        assert!(!r.all_passed());
        assert_eq!(r.to_json(), r.clone().to_json());
        assert!(r.to_json().contains("\"paper_ref\""));
    }
}
