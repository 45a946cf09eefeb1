//! Structured verification reports.
//!
//! Every `verify_*` operation returns a [`VerificationReport`]: a list of
//! named checks, each with a pass/fail verdict and, on failure, a witness.
//! The JSON serialization is deterministic for fixed inputs; wall-clock time
//! is kept out of it so that reruns are byte-identical.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            lhs: None,
            rhs: None,
            witness: None,
        }
    }

    pub fn comparison(name: impl Into<String>, lhs: impl ToString, rhs: impl ToString, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            lhs: Some(lhs.to_string()),
            rhs: Some(rhs.to_string()),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub inputs_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub wall_clock_ms: u128,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, inputs: &[&str]) -> Self {
        VerificationReport {
            identity: identity.into(),
            inputs_digest: digest(inputs),
            characteristic: None,
            passed: true,
            checks: Vec::new(),
            wall_clock_ms: 0,
        }
    }

    pub fn with_characteristic(mut self, p: u64) -> Self {
        self.characteristic = Some(p);
        self
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for check in other.checks {
            self.push(check);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// One line per check, then an overall verdict.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict} {}", c.name));
            if let (Some(l), Some(r)) = (&c.lhs, &c.rhs) {
                out.push_str(&format!("  [lhs={l} rhs={r}]"));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!("  witness: {w}"));
            }
            out.push('\n');
        }
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict} {}\n", self.identity));
        out
    }
}

/// FNV-1a over the concatenated inputs; stable across platforms and runs.
fn digest(inputs: &[&str]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for s in inputs {
        for b in s.as_bytes() {
            h ^= u64::from(*b);
            h = h.wrapping_mul(0x100000001b3);
        }
        h ^= 0xff;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}
