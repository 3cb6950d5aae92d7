//! Report envelope and rendering.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Input provenance: file digests and the parameters that shaped the run.
#[derive(Default, Serialize)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_sha256: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point_sha256: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<&'static str, Value>,
}

impl Inputs {
    pub fn graph(sha256: String) -> Self {
        Inputs {
            graph_sha256: Some(sha256),
            ..Inputs::default()
        }
    }

    pub fn param(mut self, name: &'static str, value: impl Serialize) -> Self {
        self.parameters
            .insert(name, serde_json::to_value(value).expect("parameter serializes"));
        self
    }
}

#[derive(Serialize)]
pub struct Report<T> {
    pub command: &'static str,
    pub inputs: Inputs,
    pub result: T,
}

/// One `path: value` line per scalar leaf, in document order.
pub fn to_text(value: &Value) -> String {
    let mut out = String::new();
    walk(value, String::new(), &mut out);
    out
}

fn walk(value: &Value, path: String, out: &mut String) {
    let join = |key: &str| {
        if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                walk(v, join(k), out);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push_str(&format!("{path}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                walk(v, join(&i.to_string()), out);
            }
        }
        Value::String(s) => out.push_str(&format!("{path}: {s}\n")),
        other => out.push_str(&format!("{path}: {other}\n")),
    }
}
