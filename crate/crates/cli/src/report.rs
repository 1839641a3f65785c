use serde::Serialize;
use serde_json::{Map, Value};

use crate::solve::{result_json, Solved};
use crate::verify;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verification {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Budget,
    Invalid,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceReport {
    pub id: usize,
    pub source: String,
    pub algorithm: String,
    pub status: Status,
    pub verification: Verification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
    #[serde(flatten)]
    pub fields: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip)]
    pub forest: Option<indforest::Forest>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub seed: u64,
    pub instances: Vec<InstanceReport>,
}

/// Re-checks every embedding and structural promise of a solver answer.
pub fn verify(s: &Solved) -> Result<(), String> {
    if s.result.order() != s.order {
        return Err(format!(
            "reported order {} but result has order {}",
            s.order,
            s.result.order()
        ));
    }
    for c in &s.checks {
        verify::induced_copy(&c.pattern, &c.host, &c.map).map_err(|e| format!("{}: {e}", c.label))?;
    }
    if s.must_be_tree {
        verify::connected(&s.result)?;
    }
    if let Some(d) = s.max_component {
        verify::components_at_most(&s.result, d)?;
    }
    Ok(())
}

pub fn from_outcome(
    id: usize,
    source: String,
    algorithm: &str,
    outcome: Result<Solved, indforest::Error>,
) -> InstanceReport {
    let mut report = InstanceReport {
        id,
        source,
        algorithm: algorithm.to_string(),
        status: Status::Ok,
        verification: Verification::Skipped,
        order: None,
        error: None,
        wall_time_ms: None,
        fields: Map::new(),
        result: None,
        forest: None,
    };
    match outcome {
        Ok(s) => {
            match verify(&s) {
                Ok(()) => report.verification = Verification::Pass,
                Err(e) => {
                    report.verification = Verification::Fail;
                    report.error = Some(e);
                }
            }
            report.order = Some(s.order);
            report.result = Some(result_json(&s));
            report.fields = s.fields;
            report.forest = Some(s.result);
        }
        Err(e) => {
            report.status = if e.is_budget() {
                Status::Budget
            } else {
                Status::Invalid
            };
            report.error = Some(e.to_string());
        }
    }
    report
}
