use serde::{Deserialize, Serialize};

/// Outcome of a check: `Err` carries the first counterexample found.
pub type Verdict = Result<(), String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// One checked claim. `witness` is empty unless `status` is `Fail`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub corpus: String,
    pub status: Status,
    pub witness: String,
}

impl CheckReport {
    pub fn from_verdict(id: impl Into<String>, corpus: impl Into<String>, verdict: Verdict) -> Self {
        let (status, witness) = match verdict {
            Ok(()) => (Status::Pass, String::new()),
            Err(w) if w.is_empty() => (Status::Fail, "unspecified failure".to_string()),
            Err(w) => (Status::Fail, w),
        };
        CheckReport { id: id.into(), corpus: corpus.into(), status, witness }
    }

    pub fn not_applicable(id: impl Into<String>, corpus: impl Into<String>) -> Self {
        CheckReport { id: id.into(), corpus: corpus.into(), status: Status::NotApplicable, witness: String::new() }
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_iff_fail() {
        let ok = CheckReport::from_verdict("a", "c", Ok(()));
        assert!(ok.passed() && ok.witness.is_empty());
        let bad = CheckReport::from_verdict("a", "c", Err(String::new()));
        assert!(bad.failed() && !bad.witness.is_empty());
        assert_eq!(
            CheckReport::not_applicable("a", "c").to_json(),
            r#"{"id":"a","corpus":"c","status":"not-applicable","witness":""}"#
        );
    }
}
