//! Reports, exit codes and their text and JSON renderings.

use num_complex::Complex64;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success,
    InputError,
    DomainError,
    InvariantBreach,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        match self {
            ExitCode::Success => 0,
            ExitCode::InputError => 1,
            ExitCode::DomainError => 2,
            ExitCode::InvariantBreach => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    pub payload: Value,
    pub warnings: Vec<String>,
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn new(command: &str, inputs_digest: String) -> Self {
        Report {
            command: command.to_string(),
            inputs_digest,
            payload: Value::Object(Map::new()),
            warnings: Vec::new(),
            error: None,
        }
    }

    pub fn fail(&mut self, kind: &str, message: impl Into<String>) {
        self.error = Some(ErrorInfo {
            kind: kind.to_string(),
            message: message.into(),
        });
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "status": if self.error.is_some() { "error" } else { "ok" },
            "error": self.error.as_ref().map(|e| json!({ "kind": e.kind, "message": e.message })),
            "payload": self.payload,
            "warnings": self.warnings,
        })
    }

    /// Pretty JSON, newline terminated. Keys keep their insertion order.
    pub fn render_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.command));
        out.push_str(&format!("inputs digest: {}\n", self.inputs_digest));
        if let Value::Object(map) = &self.payload {
            for (k, v) in map {
                write_value(&mut out, k, v, 0);
            }
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error[{}]: {}\n", e.kind, e.message));
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| scalar(i).is_some() && !i.is_array()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        Value::Array(items) if items.iter().all(|i| i.is_array()) => {
            let rows: Option<Vec<String>> = items.iter().map(scalar).collect();
            rows.map(|r| format!("[{}]", r.join(", ")))
        }
        Value::Object(m) if m.len() == 2 && m.contains_key("re") && m.contains_key("im") => {
            let (re, im) = (scalar(&m["re"])?, scalar(&m["im"])?);
            Some(match im.strip_prefix('-') {
                Some(abs) => format!("{re} - {abs}i"),
                None => format!("{re} + {im}i"),
            })
        }
        _ => None,
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    let label = key.replace('_', " ");
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{label}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{label}:\n"));
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                write_value(out, k, x, depth + 1);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                write_value(out, &format!("[{i}]"), x, depth + 1);
            }
        }
        _ => unreachable!("scalars are handled above"),
    }
}

/// Seventeen significant digits, enough to round-trip any double.
pub fn float(v: f64) -> Value {
    Value::String(format!("{:.16e}", v + 0.0))
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": float(z.re), "im": float(z.im) })
}
