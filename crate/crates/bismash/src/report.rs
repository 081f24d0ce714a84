//! Structured pass/fail reports for law checks.

use serde::{Deserialize, Serialize};

/// One checked law, with a witness of the first failure when it fails.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckItem {
    /// Identifier of the law checked, e.g. `"algebra.associativity"`.
    pub law: String,
    pub passed: bool,
    /// Basis-level witness of the first failure, when any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// A named bundle of law checks.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new(name: &str) -> Self {
        Report {
            name: name.to_string(),
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, law: &str, passed: bool, witness: Option<String>) {
        self.items.push(CheckItem {
            law: law.to_string(),
            passed,
            witness: if passed { None } else { witness },
        });
    }

    pub fn push_pass(&mut self, law: &str) {
        self.push(law, true, None);
    }

    pub fn push_fail(&mut self, law: &str, witness: String) {
        self.push(law, false, Some(witness));
    }

    /// Appends another report's items under a prefixed law name.
    pub fn absorb(&mut self, prefix: &str, other: &Report) {
        for item in &other.items {
            self.items.push(CheckItem {
                law: format!("{prefix}.{}", item.law),
                passed: item.passed,
                witness: item.witness.clone(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn item(&self, law: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.law == law)
    }

    /// First failing item, if any.
    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.passed)
    }

    /// One-line rendering: `name: ok` or `name: FAIL (law: witness)`.
    pub fn summary(&self) -> String {
        match self.first_failure() {
            None => format!("{}: ok ({} laws)", self.name, self.items.len()),
            Some(item) => format!(
                "{}: FAIL at {}{}",
                self.name,
                item.law,
                item.witness
                    .as_ref()
                    .map(|w| format!(" [{w}]"))
                    .unwrap_or_default()
            ),
        }
    }
}
