use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::PapercheckError;

/// Anchors a report entry may carry, one per family of checks.
pub const ANCHORS: &[&str] = &[
    "two-cell-complexity",
    "universal-cover-balls",
    "normal-closure-orbit-parity",
    "torsion-free-index-parity",
    "schreier-rank",
    "weak-incommensurability",
    "coloured-leighton-gluing",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteConfig {
    pub max_index: usize,
    pub ball_radius: usize,
    pub lemma1_max_index: usize,
    pub schreier_max_index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_index: 4, ball_radius: 2, lemma1_max_index: 8, schreier_max_index: 5, output_path: None }
    }
}

impl SuiteConfig {
    /// Index bounds must be at least 1; a ball radius of 0 is allowed.
    pub fn validate(&self) -> Result<(), PapercheckError> {
        for (name, v) in [
            ("maxIndex", self.max_index),
            ("lemma1MaxIndex", self.lemma1_max_index),
            ("schreierMaxIndex", self.schreier_max_index),
        ] {
            if v == 0 {
                return Err(PapercheckError::InvalidConfig(format!("{name} must be at least 1")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckEntry {
    pub check_id: String,
    pub anchor: String,
    pub status: Status,
    pub evidence: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: SuiteConfig,
    pub checks: Vec<CheckEntry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(config: SuiteConfig) -> Self {
        VerificationReport { config, checks: Vec::new(), summary: Summary::default() }
    }

    pub fn push(&mut self, check_id: impl Into<String>, anchor: &str, status: Status, evidence: Value) {
        debug_assert!(ANCHORS.contains(&anchor), "anchor {anchor} is not whitelisted");
        match status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Inconclusive => self.summary.inconclusive += 1,
        }
        self.checks.push(CheckEntry { check_id: check_id.into(), anchor: anchor.to_owned(), status, evidence });
    }

    pub fn extend(&mut self, entries: Vec<CheckEntry>) {
        for e in entries {
            self.push(e.check_id, &e.anchor, e.status, e.evidence);
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a CheckEntry> + 'a {
        self.checks.iter().filter(move |c| c.check_id.starts_with(prefix))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
