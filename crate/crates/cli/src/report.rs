//! The JSON document written by `verify`.

use crate::checks::Check;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: Map<String, Value>,
    /// AND over `checks`.
    pub status: &'static str,
    pub checks: Vec<Check>,
    pub wall_ms: u128,
}

impl RunReport {
    pub fn new(command: String, params: Map<String, Value>, checks: Vec<Check>, wall_ms: u128) -> Self {
        let status = if checks.iter().all(Check::passed) { "pass" } else { "fail" };
        RunReport { command, params, status, checks, wall_ms }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }
}
