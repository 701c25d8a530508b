//! Machine-readable verification records, streamed as JSON lines.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};
use crate::io::write_graph6;

/// Check names as they appear in the `check_name` field.
pub mod checks {
    pub const WEICHSEL: &str = "weichsel_connectivity";
    pub const DEGREE_PRODUCT: &str = "degree_product";
    pub const THEOREM_EQUALITY: &str = "theorem_equality";
    pub const WITNESS_CUT: &str = "witness_cut";
    pub const QUOTIENT_CONNECTED: &str = "quotient_connected";
    pub const LAYER_IN_COMPONENT: &str = "layer_in_component";
    pub const COMPLETE_PRODUCT: &str = "complete_product";
    pub const DELETION_BOUNDS: &str = "deletion_bounds";
    pub const ORACLE_EQUIVALENCE: &str = "oracle_equivalence";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

/// A computed quantity: integers and booleans only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportInputs {
    /// Left factor (or the single graph under test) in graph6.
    pub graph6: String,
    /// Right factor, for checks over two arbitrary factors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6_right: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Candidate separator as sorted product indices.
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub separator: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ReportInputs {
    pub fn graph(graph: &Graph) -> Self {
        ReportInputs {
            graph6: write_graph6(graph),
            ..Default::default()
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_right(mut self, right: &Graph) -> Self {
        self.graph6_right = Some(write_graph6(right));
        self
    }

    pub fn with_separator(mut self, separator: &[Vertex]) -> Self {
        let mut s = separator.to_vec();
        s.sort_unstable();
        self.separator = Some(s);
        self
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub inputs: ReportInputs,
    pub computed: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(check_name: &str, inputs: ReportInputs) -> Self {
        VerificationReport {
            check_name: check_name.to_owned(),
            inputs,
            computed: BTreeMap::new(),
            verdict: Verdict::Fail,
            elapsed_ms: 0,
        }
    }

    pub fn int(mut self, key: &str, value: impl TryInto<i64>) -> Self {
        let value = value
            .try_into()
            .unwrap_or_else(|_| panic!("value for `{key}` does not fit in i64"));
        self.computed.insert(key.to_owned(), Value::Int(value));
        self
    }

    pub fn flag(mut self, key: &str, value: bool) -> Self {
        self.computed.insert(key.to_owned(), Value::Bool(value));
        self
    }

    pub fn verdict(mut self, pass: bool) -> Self {
        self.verdict = Verdict::from_bool(pass);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    pub fn get_int(&self, key: &str) -> Option<i64> {
        match self.computed.get(key)? {
            Value::Int(v) => Some(*v),
            Value::Bool(_) => None,
        }
    }

    pub fn get_flag(&self, key: &str) -> Option<bool> {
        match self.computed.get(key)? {
            Value::Bool(v) => Some(*v),
            Value::Int(_) => None,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    pub fn from_json_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }
}

/// Runs `f` and stores its wall-clock time in the report when `record` is
/// set. Left at zero otherwise so report streams stay byte-reproducible.
pub fn timed<E>(
    record: bool,
    f: impl FnOnce() -> Result<VerificationReport, E>,
) -> Result<VerificationReport, E> {
    let start = Instant::now();
    let mut report = f()?;
    if record {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    Ok(report)
}
