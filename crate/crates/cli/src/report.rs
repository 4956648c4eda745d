use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::error::{CliError, EXIT_HYPOTHESIS, EXIT_INVARIANT, EXIT_OK};

/// Output of one command. All maps are ordered, so identical inputs give
/// byte-identical output.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub arguments: Vec<String>,
    pub input_digest: String,
    pub hypotheses: BTreeMap<String, bool>,
    pub results: BTreeMap<String, Value>,
    pub checks: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

impl Report {
    pub fn new(command: &str, digest: String) -> Self {
        Report {
            command: command.to_string(),
            arguments: std::env::args().skip(1).collect(),
            input_digest: digest,
            ..Default::default()
        }
    }

    pub fn failed(command: &str, err: &CliError) -> Self {
        let mut r = Report::new(command, String::new());
        r.error = Some(ErrorBody {
            code: err.code.clone(),
            message: err.message.clone(),
        });
        r
    }

    pub fn result(&mut self, name: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("plain data serializes");
        self.results.insert(name.to_string(), value);
    }

    pub fn check(&mut self, name: &str, ok: bool) {
        self.checks.insert(name.to_string(), ok);
    }

    pub fn hypothesis(&mut self, name: &str, ok: bool) {
        self.hypotheses.insert(name.to_string(), ok);
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.values().all(|&ok| ok)
    }

    /// A failed hypothesis outranks a failed check.
    pub fn exit_code(&self) -> i32 {
        if !self.hypotheses_hold() {
            EXIT_HYPOTHESIS
        } else if !self.checks.values().all(|&ok| ok) {
            EXIT_INVARIANT
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// `key  value` lines with aligned values; nested results use dotted keys.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("command".into(), self.command.clone()),
            ("arguments".into(), self.arguments.join(" ")),
            ("input_digest".into(), self.input_digest.clone()),
        ];
        for (k, v) in &self.hypotheses {
            rows.push((format!("hypothesis.{k}"), pass_fail(*v)));
        }
        for (k, v) in &self.results {
            flatten(&format!("result.{k}"), v, &mut rows);
        }
        for (k, v) in &self.checks {
            rows.push((format!("check.{k}"), pass_fail(*v)));
        }
        if let Some(e) = &self.error {
            rows.push(("error.code".into(), e.code.clone()));
            rows.push(("error.message".into(), e.message.clone()));
        }
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
        out
    }
}

fn pass_fail(ok: bool) -> String {
    if ok { "pass" } else { "FAIL" }.to_string()
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                flatten(&format!("{prefix}.{k}"), inner, rows);
            }
        }
        Value::Array(items) => {
            let flat: Option<Vec<String>> = items.iter().map(scalar).collect();
            match flat {
                Some(parts) => rows.push((prefix.to_string(), parts.join(" "))),
                None => {
                    for (i, inner) in items.iter().enumerate() {
                        flatten(&format!("{prefix}.{i}"), inner, rows);
                    }
                }
            }
        }
        _ => rows.push((prefix.to_string(), scalar(v).expect("scalar"))),
    }
}
