//! Structured pass/fail records for the verification suites.

use serde::{Deserialize, Serialize};

/// The outcome of checking one identity at one set of indices/parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Which identity was checked (stable machine-readable name).
    pub identity: String,
    /// The indices and parameter specialization the check ran at.
    pub params: String,
    /// "pass" or "fail".
    pub status: Status,
    /// First failing coefficient or value, when status is fail.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl VerificationReport {
    pub fn pass(identity: impl Into<String>, params: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            params: params.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(
        identity: impl Into<String>,
        params: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        VerificationReport {
            identity: identity.into(),
            params: params.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    /// Build from a boolean check.
    pub fn check(
        identity: impl Into<String>,
        params: impl Into<String>,
        ok: bool,
        witness: impl Fn() -> String,
    ) -> Self {
        if ok {
            VerificationReport::pass(identity, params)
        } else {
            VerificationReport::fail(identity, params, witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Summarize a batch: total, failures.
pub fn summarize(reports: &[VerificationReport]) -> (usize, usize) {
    let failures = reports.iter().filter(|r| !r.passed()).count();
    (reports.len(), failures)
}
