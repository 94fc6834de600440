//! JSON shapes shared by the subcommands and the verifier.

use std::collections::BTreeMap;

use holefree_core::exact::ChiValue;
use holefree_core::{Coloring, HoleWitness};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "holefree-verify/1";

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessJson {
    pub kind: String,
    pub cycle: Vec<usize>,
}

impl From<&HoleWitness> for WitnessJson {
    fn from(w: &HoleWitness) -> Self {
        WitnessJson { kind: w.kind.to_string(), cycle: w.cycle.clone() }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MembershipJson {
    pub member: bool,
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct ChiJson {
    pub value: usize,
    pub exact: bool,
}

impl From<ChiValue> for ChiJson {
    fn from(c: ChiValue) -> Self {
        ChiJson { value: c.value, exact: c.exact }
    }
}

/// `{"0": 1, "1": 2, ..}`.
pub fn coloring_map(c: &Coloring) -> BTreeMap<String, usize> {
    c.colors().iter().enumerate().map(|(v, &x)| (v.to_string(), x)).collect()
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Timeout,
    /// The property ran but could not reach a verdict, e.g. a search gave up
    /// or a chromatic number above the oracle cap was only bounded.
    Inconclusive,
    Skipped,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct PropertyRecord {
    pub name: String,
    /// Class the property is stated for, e.g. `G2`.
    pub class: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
    /// Falsifying evidence; always present on `fail`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub millis: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct GraphRecord {
    pub file: String,
    pub n: Option<usize>,
    pub edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub membership: BTreeMap<String, MembershipJson>,
    pub chi: Option<ChiJson>,
    pub properties: Vec<PropertyRecord>,
    pub millis: u64,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub files: usize,
    pub errors: usize,
    pub pass: usize,
    pub fail: usize,
    pub timeout: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn tally(records: &[GraphRecord]) -> Summary {
        let mut s = Summary { files: records.len(), ..Summary::default() };
        for r in records {
            s.errors += r.error.is_some() as usize;
            for p in &r.properties {
                *match p.status {
                    Status::Pass => &mut s.pass,
                    Status::Fail => &mut s.fail,
                    Status::Timeout => &mut s.timeout,
                    Status::Inconclusive => &mut s.inconclusive,
                    Status::Skipped => &mut s.skipped,
                } += 1;
            }
        }
        s
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerifyOptionsJson {
    pub suites: Vec<String>,
    pub timeout_secs: f64,
    pub oracle_cap: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerifyReport {
    pub schema_version: &'static str,
    pub corpus: String,
    pub options: VerifyOptionsJson,
    pub records: Vec<GraphRecord>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }
}
