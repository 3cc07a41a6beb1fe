//! Report assembly and rendering.
//!
//! Reports are JSON objects whose keys are emitted in sorted order, so equal
//! inputs give byte-identical output.

use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::eval::Outcome;
use crate::json::group_to_json;

/// `"<rule id>: <statement>"`, one entry per rule applied, in order.
pub fn trace_entries(trace: &[relchow::Rule]) -> Vec<Value> {
    trace
        .iter()
        .map(|r| Value::String(format!("{}: {}", r.id(), r.citation())))
        .collect()
}

fn header(command: &str, dim: Option<u32>, input: Option<&Value>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), command.into());
    if let Some(d) = dim {
        m.insert("dim".into(), d.into());
    }
    m.insert("input".into(), input.cloned().unwrap_or(Value::Null));
    m
}

pub fn success(command: &str, dim: Option<u32>, input: &Value, o: &Outcome) -> Value {
    let mut m = header(command, dim, Some(input));
    m.insert("status".into(), "ok".into());
    m.insert("result".into(), group_to_json(&o.result));
    m.insert("summary".into(), o.result.to_string().into());
    if let Some(d) = &o.details {
        m.insert("details".into(), d.clone());
    }
    m.insert("theorem_trace".into(), trace_entries(&o.trace).into());
    m.insert("warnings".into(), o.warnings.clone().into());
    Value::Object(m)
}

pub fn failure(command: &str, dim: Option<u32>, input: Option<&Value>, e: &CliError) -> Value {
    let mut m = header(command, dim, input);
    m.insert("status".into(), "error".into());
    m.insert("error".into(), json!({ "code": e.code, "message": e.message }));
    Value::Object(m)
}

pub fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Human-readable rendering of a single report or a batch aggregate.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    if let Some(items) = v.get("items").and_then(Value::as_array) {
        for (i, item) in items.iter().enumerate() {
            out.push_str(&format!("## item {}\n", i + 1));
            out.push_str(&single_text(item));
            out.push('\n');
        }
        let s = &v["summary"];
        out.push_str(&format!(
            "batch: {} total, {} ok, {} failed\n",
            s["total"], s["succeeded"], s["failed"]
        ));
    } else {
        out.push_str(&single_text(v));
    }
    if let Some(t) = v.get("generated_at") {
        out.push_str(&format!("generated_at: {t}\n"));
    }
    out
}

fn single_text(v: &Value) -> String {
    let mut out = String::new();
    let command = v["command"].as_str().unwrap_or("?");
    match v.get("dim").and_then(Value::as_u64) {
        Some(d) => out.push_str(&format!("command: {command} (dim {d})\n")),
        None => out.push_str(&format!("command: {command}\n")),
    }
    if v["status"] == "error" {
        out.push_str(&format!(
            "error [{}]: {}\n",
            v["error"]["code"].as_str().unwrap_or(""),
            v["error"]["message"].as_str().unwrap_or("")
        ));
        return out;
    }
    out.push_str(&format!("result: {}\n", v["summary"].as_str().unwrap_or("")));
    if let Some(Value::Object(d)) = v.get("details") {
        for (k, val) in d {
            out.push_str(&format!("  {k}: {}\n", serde_json::to_string(val).unwrap_or_default()));
        }
    }
    out.push_str("theorem trace:\n");
    for t in v["theorem_trace"].as_array().into_iter().flatten() {
        out.push_str(&format!("  - {}\n", t.as_str().unwrap_or("")));
    }
    let warnings = v["warnings"].as_array().cloned().unwrap_or_default();
    if warnings.is_empty() {
        out.push_str("warnings: none\n");
    } else {
        out.push_str("warnings:\n");
        for w in warnings {
            out.push_str(&format!("  - {}\n", w.as_str().unwrap_or("")));
        }
    }
    out
}
