//! Versioned JSON envelope shared by every subcommand.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct InputInfo {
    pub descriptor: String,
    pub n: usize,
    pub edges: usize,
    pub graph6: String,
}

#[derive(Debug, Serialize)]
pub struct BudgetInfo {
    pub limit: u64,
    pub used: u64,
    /// Some search stopped early; affected fields are reported as unknown.
    pub exhausted: bool,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub input: Option<InputInfo>,
    pub results: Value,
    pub witnesses: Value,
    pub budget: BudgetInfo,
    pub elapsed_ms: f64,
}

/// One `key: value` line per top-level result field, keys sorted.
pub fn render_text(results: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = results {
        for (k, v) in map {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
    } else {
        out.push_str(&results.to_string());
        out.push('\n');
    }
    out
}
