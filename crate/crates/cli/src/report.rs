//! Reports: a JSON document built in a fixed key order, with timing kept out of
//! the digest, and a text rendering derived from the JSON alone.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const TOOL: &str = "snhom";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Default)]
pub struct Report {
    pub command: String,
    pub op: String,
    pub input_sha256: String,
    pub results: Vec<Value>,
    pub checks: Vec<(String, bool)>,
    pub witnesses: Vec<Value>,
    /// Extra top-level entries, e.g. failing instances.
    pub extra: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, op: &str, input: &[u8]) -> Report {
        Report { command: command.into(), op: op.into(), input_sha256: sha256_hex(input), ..Report::default() }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    pub fn witness(&mut self, name: impl Into<String>, value: Value) {
        self.witnesses.push(json!({ "name": name.into(), "value": value }));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    /// The report without timing, plus its own digest, then the timing block.
    pub fn to_json(&self, elapsed_ms: f64) -> Value {
        let mut body = Map::new();
        body.insert("tool".into(), json!({ "name": TOOL, "version": VERSION }));
        body.insert("command".into(), json!(self.command));
        body.insert("op".into(), json!(self.op));
        body.insert("input_sha256".into(), json!(self.input_sha256));
        body.insert("passed".into(), json!(self.passed()));
        body.insert("results".into(), Value::Array(self.results.clone()));
        let checks = self.checks.iter().map(|(n, ok)| json!({ "name": n, "passed": ok })).collect();
        body.insert("checks".into(), Value::Array(checks));
        body.insert("witnesses".into(), Value::Array(self.witnesses.clone()));
        for (k, v) in &self.extra {
            body.insert(k.clone(), v.clone());
        }
        let digest = sha256_hex(serde_json::to_string(&body).expect("json values serialize").as_bytes());
        body.insert("report_sha256".into(), json!(digest));
        body.insert("timing".into(), json!({ "elapsed_ms": elapsed_ms }));
        Value::Object(body)
    }
}

/// Error document for validation and resource failures.
pub fn error_json(kind: &str, code: i32, message: &str, detail: Value) -> Value {
    json!({
        "tool": { "name": TOOL, "version": VERSION },
        "error": { "kind": kind, "exit_code": code, "message": message, "detail": detail },
    })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_matrix(v: &Value) -> bool {
    matches!(v, Value::Array(rows) if !rows.is_empty() && rows.iter().all(|r| matches!(r, Value::Array(e) if e.iter().all(|x| !x.is_array() && !x.is_object()))))
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                    Value::Array(items) if is_matrix(x) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for row in items {
                            let cells: Vec<String> = row.as_array().into_iter().flatten().map(scalar).collect();
                            out.push_str(&format!("{pad}  [{}]\n", cells.join(" ")));
                        }
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                    Value::Array(items) => {
                        let cells: Vec<String> = items.iter().map(scalar).collect();
                        out.push_str(&format!("{pad}{k}: [{}]\n", cells.join(", ")));
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                out.push_str(&format!("{pad}- [{i}]\n"));
                render(x, indent + 1, out);
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

/// Plain-text view of a JSON report. Checks are listed as PASS/FAIL lines first.
pub fn to_text(report: &Value) -> String {
    let mut out = String::new();
    if let Some(checks) = report.get("checks").and_then(Value::as_array) {
        for c in checks {
            let ok = c.get("passed").and_then(Value::as_bool).unwrap_or(false);
            out.push_str(&format!("{} {}\n", if ok { "PASS" } else { "FAIL" }, scalar(&c["name"])));
        }
    }
    let mut rest = report.clone();
    if let Some(map) = rest.as_object_mut() {
        map.remove("checks");
    }
    render(&rest, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_ignores_timing() {
        let mut r = Report::new("compute", "ladder", b"{}");
        r.check("x", true);
        let a = r.to_json(1.0);
        let b = r.to_json(250.0);
        assert_eq!(a["report_sha256"], b["report_sha256"]);
        assert_ne!(a, b);
    }

    #[test]
    fn text_lists_checks_and_matrices() {
        let mut r = Report::new("compute", "ladder", b"");
        r.check("identity", false);
        r.witness("w", json!([["1", "0"], ["0", "1"]]));
        let t = to_text(&r.to_json(0.0));
        assert!(t.starts_with("FAIL identity\n"));
        assert!(t.contains("[1 0]"));
    }

    #[test]
    fn known_digest() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
