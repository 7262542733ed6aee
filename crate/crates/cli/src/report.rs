use std::collections::BTreeMap;

use num_bigint::BigInt;
use sandpile_core::verify::Outcome;
use sandpile_core::GroupStructure;
use serde::Serialize;
use serde_json::Value;

/// Output of one CLI invocation. Big integers are carried as decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub result: ReportResult,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum ReportResult {
    Group {
        factors: Vec<String>,
        order: String,
    },
    Value {
        value: String,
    },
    Verification {
        passed: usize,
        failed: usize,
        failure_seeds: Vec<u64>,
    },
    Graph {
        vertices: String,
        edges: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        graph: Option<String>,
    },
    Matrix {
        matrix: Vec<Vec<String>>,
    },
}

impl ReportResult {
    pub fn group(g: &GroupStructure) -> Self {
        ReportResult::Group {
            factors: g.invariant_factors().iter().map(BigInt::to_string).collect(),
            order: g.order().to_string(),
        }
    }

    pub fn verification(o: &Outcome) -> Self {
        ReportResult::Verification {
            passed: o.passed,
            failed: o.failed,
            failure_seeds: o.failure_seeds.clone(),
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, ReportResult::Verification { failed, .. } if *failed > 0)
    }
}

impl RunReport {
    pub fn new(command: &str, result: ReportResult) -> Self {
        RunReport {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            result,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        match &self.result {
            ReportResult::Group { factors, order } => {
                let group = if factors.is_empty() {
                    "trivial".to_string()
                } else {
                    factors.iter().map(|f| format!("C_{f}")).collect::<Vec<_>>().join(" x ")
                };
                format!("{group}\norder: {order}\n")
            }
            ReportResult::Value { value } => format!("{value}\n"),
            ReportResult::Verification {
                passed,
                failed,
                failure_seeds,
            } => {
                let mut out = format!("{}: {passed}/{} passed\n", self.command, passed + failed);
                if !failure_seeds.is_empty() {
                    let seeds: Vec<String> = failure_seeds.iter().map(u64::to_string).collect();
                    out.push_str(&format!("failing seeds: {}\n", seeds.join(",")));
                }
                out
            }
            ReportResult::Graph { vertices, edges, graph } => match graph {
                Some(text) => text.clone(),
                None => format!("vertices: {vertices}\nedges: {edges}\n"),
            },
            ReportResult::Matrix { matrix } => matrix.iter().map(|row| row.join(" ") + "\n").collect(),
        }
    }
}

/// Decimal strings for a list of integers.
pub fn decimal_list<T: ToString>(values: &[T]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}
