use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one exhaustive verification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: BTreeMap<String, usize>,
    pub passed: bool,
    pub counts: BTreeMap<String, u64>,
    /// First counterexample found, in scan order; always present on failure.
    pub witness: Option<Value>,
    /// Supplementary objects (negative controls, constructed partitions).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    /// The same report with the timing zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        VerificationReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

pub(crate) struct ReportBuilder {
    theorem: &'static str,
    params: BTreeMap<String, usize>,
    counts: BTreeMap<String, u64>,
    witness: Option<Value>,
    details: Option<Value>,
    start: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(theorem: &'static str, params: &[(&str, usize)]) -> Self {
        ReportBuilder {
            theorem,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            counts: BTreeMap::new(),
            witness: None,
            details: None,
            start: Instant::now(),
        }
    }

    pub(crate) fn count(&mut self, key: &str, value: usize) {
        self.counts.insert(key.to_string(), value as u64);
    }

    /// Records a failure; only the first one is kept.
    pub(crate) fn fail(&mut self, witness: Value) {
        self.witness.get_or_insert(witness);
    }

    pub(crate) fn details(&mut self, details: Value) {
        self.details = Some(details);
    }

    pub(crate) fn finish(self) -> VerificationReport {
        VerificationReport {
            theorem: self.theorem.to_string(),
            params: self.params,
            passed: self.witness.is_none(),
            counts: self.counts,
            witness: self.witness,
            details: self.details,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}
