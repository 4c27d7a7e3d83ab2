//! Pass/fail reports produced by the exhaustive verifiers.

use serde::{Deserialize, Serialize};

/// Outcome of one family of checks. `counterexample` is empty when `ok`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub axiom: String,
    pub ok: bool,
    pub counterexample: String,
    /// Number of individual cases inspected. Not part of the JSON form.
    #[serde(skip)]
    pub cases: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub d: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn new(d: u64) -> Self {
        AxiomReport {
            d,
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.ok;
        self.checks.push(check);
    }

    /// Appends every check of `other`. Both reports must be for the same d.
    pub fn merge(&mut self, other: AxiomReport) {
        debug_assert_eq!(self.d, other.d);
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn get(&self, axiom: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn total_cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Accumulates many cases for one axiom, keeping the first failure.
pub(crate) struct Audit {
    axiom: String,
    cases: usize,
    failure: Option<String>,
}

impl Audit {
    pub(crate) fn new(axiom: impl Into<String>) -> Self {
        Audit {
            axiom: axiom.into(),
            cases: 0,
            failure: None,
        }
    }

    pub(crate) fn expect(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(counterexample());
        }
    }

    pub(crate) fn finish(self) -> Check {
        Check {
            axiom: self.axiom,
            ok: self.failure.is_none(),
            counterexample: self.failure.unwrap_or_default(),
            cases: self.cases,
        }
    }
}
