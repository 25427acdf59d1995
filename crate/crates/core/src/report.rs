//! Machine-readable reports produced by the verification suites.

use serde::{Deserialize, Serialize};

use crate::graph::LabeledGraph;

pub const REPORT_SCHEMA_VERSION: &str = "1";

/// Parameters a suite ran with.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteParams {
    pub max_n: usize,
    pub filter: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub field_primes: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sample: Option<usize>,
    pub workers: usize,
}

/// One failing case: the graph, what was expected, what was computed.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification suite. A suite passes when the
/// counterexample list is empty.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TheoremReport {
    pub schema_version: String,
    pub suite: String,
    /// the verified statement, spelled out
    pub claim: String,
    /// "exact" for ideal-level checks, "finite-field evidence" for
    /// variety sweeps
    pub evidence: String,
    pub params: SuiteParams,
    pub cases_run: u64,
    pub cases_passed: u64,
    pub counterexamples: Vec<Counterexample>,
    /// wall time; masked in determinism comparisons
    pub wall_time_ms: u64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Text a human reads; one line per counterexample.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {}: {}\n  claim: {}\n  evidence: {}\n  params: max_n={} filter={}{}{}\n  cases: {} run, {} passed, {} failed ({} ms)\n",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.claim,
            self.evidence,
            self.params.max_n,
            self.params.filter,
            if self.params.field_primes.is_empty() {
                String::new()
            } else {
                format!(" primes={:?}", self.params.field_primes)
            },
            match self.params.sample {
                Some(s) => format!(" sample={s}"),
                None => String::new(),
            },
            self.cases_run,
            self.cases_passed,
            self.counterexamples.len(),
            self.wall_time_ms,
        ));
        for ce in &self.counterexamples {
            out.push_str(&format!(
                "  counterexample: {} | expected {} | got {}\n",
                ce.graph, ce.expected, ce.actual
            ));
        }
        out
    }

    /// JSON body; the schema is pinned by golden tests.
    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Canonical one-line rendering of a graph used inside reports.
pub fn graph_label(g: &LabeledGraph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|(i, j)| format!("{i}-{j}"))
        .collect();
    format!("n={};e={}", g.num_vertices(), edges.join(","))
}
