//! Verification reports, shared by the library drivers and the CLI.

use serde::Serialize;

use crate::exactalg::LaurentPoly;
use crate::subset::Subset;

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    #[serde(rename = "J", skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<LaurentPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<LaurentPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of a verification driver. Falsification is a report outcome, not
/// an error: `verified` is false iff any failure was recorded.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub claim: String,
    pub instances_checked: u64,
    pub vacuous: u64,
    pub failures: Vec<Failure>,
    pub verified: bool,
}

impl Report {
    pub fn new(claim: impl Into<String>) -> Report {
        Report {
            claim: claim.into(),
            instances_checked: 0,
            vacuous: 0,
            failures: Vec::new(),
            verified: true,
        }
    }

    pub fn pass(&mut self) {
        self.instances_checked += 1;
    }

    pub fn vacuous(&mut self) {
        self.instances_checked += 1;
        self.vacuous += 1;
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.instances_checked += 1;
        if !ok {
            self.verified = false;
            if self.failures.len() < 100 {
                self.failures.push(Failure { j: None, lhs: None, rhs: None, detail: Some(detail()) });
            }
        }
    }

    /// Record a polynomial identity instance keyed by a subset `J`.
    pub fn check_poly(&mut self, j: Subset, lhs: &LaurentPoly, rhs: &LaurentPoly) {
        self.instances_checked += 1;
        if lhs != rhs {
            self.verified = false;
            if self.failures.len() < 100 {
                self.failures.push(Failure {
                    j: Some(j.elements()),
                    lhs: Some(lhs.clone()),
                    rhs: Some(rhs.clone()),
                    detail: None,
                });
            }
        }
    }

    pub fn fail(&mut self, detail: impl Into<String>) {
        self.instances_checked += 1;
        self.verified = false;
        if self.failures.len() < 100 {
            self.failures.push(Failure { j: None, lhs: None, rhs: None, detail: Some(detail.into()) });
        }
    }

    /// Fold another report into this one.
    pub fn absorb(&mut self, other: Report) {
        self.instances_checked += other.instances_checked;
        self.vacuous += other.vacuous;
        self.verified &= other.verified;
        self.failures.extend(other.failures);
        self.failures.truncate(100);
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} ({} instances, {} vacuous, {} failures)",
            if self.verified { "PASS" } else { "FAIL" },
            self.claim,
            self.instances_checked,
            self.vacuous,
            self.failures.len()
        )
    }
}
