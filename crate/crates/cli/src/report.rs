//! Machine-readable result reports.
//!
//! Reports are `serde_json` objects; the default map type keeps keys sorted,
//! so serialization is byte-stable. Floats are written in shortest
//! round-trip form.

use cmgeom::{DMatrix, InertiaIndex, Metric, Tolerances};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::error::CliError;
use crate::input::Source;

pub fn matrix(m: &DMatrix<f64>) -> Value {
    Value::Array(
        m.row_iter()
            .map(|r| Value::from(r.iter().copied().collect::<Vec<f64>>()))
            .collect(),
    )
}

pub fn inertia(i: &InertiaIndex) -> Value {
    json!({ "positive": i.positive, "negative": i.negative, "null": i.null })
}

pub fn digest(sources: &[&Source], extra: &[(&str, &str)]) -> String {
    let mut h = Sha256::new();
    for s in sources {
        h.update(s.label.as_bytes());
        h.update((s.bytes.len() as u64).to_le_bytes());
        h.update(&s.bytes);
    }
    for (k, v) in extra {
        h.update(k.as_bytes());
        h.update((v.len() as u64).to_le_bytes());
        h.update(v.as_bytes());
    }
    format!("sha256:{}", hex::encode(h.finalize()))
}

/// Tolerances in force, with scale-dependent values resolved for `metric`.
pub fn tolerances(tol: &Tolerances, metric: Option<&Metric>) -> Value {
    let mut t = Map::new();
    t.insert("base".into(), tol.base.into());
    if let Some(m) = metric {
        let scale = m.max_abs();
        t.insert("tau_sym".into(), tol.sym(scale).into());
        t.insert("tau_eig".into(), m.eigenvalue_cutoff().into());
        t.insert("tau_quadric".into(), tol.quadric(scale).into());
        t.insert("tau_functorial".into(), tol.functorial(scale).into());
        t.insert("tau_embed".into(), tol.embed(scale).into());
    } else {
        t.insert("tau_sym".into(), tol.sym(0.0).into());
    }
    Value::Object(t)
}

/// Rewrites `-0.0` as `0.0` so sign-of-zero noise never reaches the output.
fn normalize_zeros(v: &mut Value) {
    match v {
        Value::Number(n) if n.as_f64() == Some(0.0) && n.is_f64() => *v = Value::from(0.0),
        Value::Array(items) => items.iter_mut().for_each(normalize_zeros),
        Value::Object(map) => map.values_mut().for_each(normalize_zeros),
        _ => {}
    }
}

pub struct Report {
    pub command: &'static str,
    pub args: Map<String, Value>,
    pub digest: String,
    pub outputs: Map<String, Value>,
    pub tolerances: Value,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            args: Map::new(),
            digest: String::new(),
            outputs: Map::new(),
            tolerances: Value::Null,
            notes: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn arg(&mut self, key: &str, value: impl Into<Value>) {
        self.args.insert(key.into(), value.into());
    }

    pub fn out(&mut self, key: &str, value: impl Into<Value>) {
        self.outputs.insert(key.into(), value.into());
    }

    pub fn status(&self) -> &'static str {
        if self.warnings.is_empty() {
            "ok"
        } else {
            "warning"
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": { "name": self.command, "args": self.args },
            "inputs_digest": self.digest,
            "outputs": self.outputs,
            "tolerances": self.tolerances,
            "notes": self.notes,
            "warnings": self.warnings,
            "status": self.status(),
        });
        normalize_zeros(&mut v);
        v
    }
}

pub fn error_report(command: &str, err: &CliError, tol: &Tolerances) -> Value {
    json!({
        "command": { "name": command },
        "status": "error",
        "error": {
            "exit_code": err.kind.code(),
            "kind": err.kind.label(),
            "message": err.message,
            "path": err.path,
        },
        "tolerances": { "base": tol.base },
    })
}

/// Plain-text rendering: one `key: value` line per output.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    let obj = report.as_object().expect("report is an object");
    if let Some(name) = obj.get("command").and_then(|c| c.get("name")) {
        out.push_str(&format!("command: {}\n", name.as_str().unwrap_or_default()));
    }
    out.push_str(&format!(
        "status: {}\n",
        obj["status"].as_str().unwrap_or_default()
    ));
    for section in ["outputs", "error"] {
        if let Some(Value::Object(map)) = obj.get(section) {
            for (k, v) in map {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
    }
    for key in ["notes", "warnings"] {
        if let Some(Value::Array(items)) = obj.get(key) {
            for item in items {
                out.push_str(&format!(
                    "{}: {}\n",
                    &key[..key.len() - 1],
                    item.as_str().unwrap_or_default()
                ));
            }
        }
    }
    out
}
