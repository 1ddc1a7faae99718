//! Verification verdicts shared by every checker.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    /// Number of basis tuples (or other cases) evaluated.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<BTreeMap<i64, usize>>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn pass(name: impl Into<String>, cases: usize) -> Self {
        Self {
            name: name.into(),
            status: Status::Pass,
            cases,
            witness: None,
            note: None,
            homology: None,
        }
    }

    pub fn fail(name: impl Into<String>, cases: usize, witness: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Fail,
            cases,
            witness: Some(witness.into()),
            note: None,
            homology: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_homology(mut self, h: BTreeMap<i64, usize>) -> Self {
        self.homology = Some(h);
        self
    }
}

/// Accumulates cases for one check and keeps the first counterexample.
pub struct Checker {
    name: String,
    cases: usize,
    witness: Option<String>,
}

impl Checker {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            cases: 0,
            witness: None,
        }
    }

    /// Record one case; `witness` is only built on the first failure.
    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
        ok
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn finish(self) -> CheckReport {
        match self.witness {
            None => CheckReport::pass(self.name, self.cases),
            Some(w) => CheckReport::fail(self.name, self.cases, w),
        }
    }
}

/// True when every report passed.
pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

/// The first failing report, if any.
pub fn first_failure(reports: &[CheckReport]) -> Option<&CheckReport> {
    reports.iter().find(|r| !r.passed())
}
