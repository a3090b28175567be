//! Structured check reports shared by every verifier, and the versioned
//! report emitted by the CLI.

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

/// Ordered list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check { id: id.into(), status: Status::from_bool(ok), detail: detail.into() });
        ok
    }

    /// Appends the checks of `other` with ids prefixed by `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}.{}", c.id);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn status_of(&self, id: &str) -> Option<Status> {
        self.get(id).map(|c| c.status)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

/// Report of one CLI command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub command: String,
    /// SHA-256 of the input bundle bytes, hex encoded.
    pub input_digest: String,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl VerificationReport {
    pub fn new(command: &str, input: &[u8], report: Report) -> Self {
        let overall = Status::from_bool(report.passed());
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input_digest: digest(input),
            checks: report.checks,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check, then the overall status.
    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = format!("{} [{}]\n", self.command, &self.input_digest[..12]);
        for c in &self.checks {
            if verbose || c.status == Status::Fail {
                out.push_str(&format!("  {:<4} {}: {}\n", c.status, c.id, c.detail));
            } else {
                out.push_str(&format!("  {:<4} {}\n", c.status, c.id));
            }
        }
        out.push_str(&format!("overall: {}\n", self.overall));
        out
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_follows_checks() {
        let mut r = Report::new();
        r.check("a", true, "");
        assert!(r.passed());
        r.check("b", false, "mismatch");
        assert!(!r.passed());
        assert_eq!(r.failed_ids(), vec!["b"]);
        let v = VerificationReport::new("demo", b"{}", r);
        assert_eq!(v.overall, Status::Fail);
        let back: VerificationReport = serde_json::from_str(&v.to_json()).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(digest(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn absorb_prefixes_ids() {
        let mut inner = Report::new();
        inner.check("x", true, "");
        let mut outer = Report::new();
        outer.absorb("sub", inner);
        assert_eq!(outer.checks[0].id, "sub.x");
    }
}
