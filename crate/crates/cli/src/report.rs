//! JSON reports: `{algebra, command, params, results, certificates, verdicts}`.
//!
//! Scalars are exact strings. Object keys are sorted at every level, so
//! parsing a report and writing it again gives the same bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use hopfwind::exact::Matrix;
use hopfwind::homology::TruncatedDims;
use hopfwind::hopf::{AlgebraMap, Character, HopfPresentation};
use hopfwind::Scalar;

use crate::catalog::CatalogEntry;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraId {
    pub name: String,
    pub family: String,
    pub params: String,
    pub field: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub degree_bound: usize,
    pub truncate: usize,
    pub window: usize,
    pub seed: u64,
    pub method: Option<String>,
    pub twist: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub location: Option<String>,
    pub detail: Option<String>,
}

impl Verdict {
    pub fn new(check: &str, pass: bool) -> Self {
        Verdict { check: check.into(), pass, location: None, detail: None }
    }

    pub fn at(mut self, location: impl Into<String>) -> Self {
        self.location = Some(location.into());
        self
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub algebra: AlgebraId,
    pub command: String,
    pub params: Params,
    pub results: Value,
    pub certificates: Value,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn new(entry: &CatalogEntry, field: String, command: &str, params: Params) -> Self {
        Report {
            algebra: AlgebraId { name: entry.name.clone(), family: entry.family.name().into(), params: entry.params.clone(), field },
            command: command.into(),
            params,
            results: Value::Object(Default::default()),
            certificates: Value::Object(Default::default()),
            verdicts: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn result(&mut self, key: &str, v: Value) {
        self.results.as_object_mut().expect("results is an object").insert(key.into(), v);
    }

    pub fn certificate(&mut self, key: &str, v: Value) {
        self.certificates.as_object_mut().expect("certificates is an object").insert(key.into(), v);
    }

    pub fn verdict(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("reports serialize");
        serde_json::to_string_pretty(&v).expect("values serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} [{}] {}: {}", self.algebra.name, self.algebra.family, self.command, if self.passed() { "PASS" } else { "FAIL" });
        let _ = writeln!(s, "  field {}; {}", self.algebra.field, self.algebra.params);
        for (title, v) in [("results", &self.results), ("certificates", &self.certificates)] {
            if v.as_object().is_some_and(|o| !o.is_empty()) {
                let _ = writeln!(s, "  {title}:");
                text_value(&mut s, v, 2);
            }
        }
        for v in &self.verdicts {
            let _ = write!(s, "  [{}] {}", if v.pass { "pass" } else { "FAIL" }, v.check);
            if let Some(l) = &v.location {
                let _ = write!(s, " at {l}");
            }
            if let Some(d) = &v.detail {
                let _ = write!(s, ": {d}");
            }
            s.push('\n');
        }
        s
    }
}

fn scalar_line(v: &Value) -> Option<String> {
    match v {
        Value::String(x) => Some(x.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Null => Some("-".into()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar_line).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn text_value(s: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match scalar_line(x) {
                    Some(line) => {
                        let _ = writeln!(s, "{pad}{k}: {line}");
                    }
                    None => {
                        let _ = writeln!(s, "{pad}{k}:");
                        text_value(s, x, indent + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar_line(x) {
                    Some(line) => {
                        let _ = writeln!(s, "{pad}- {line}");
                    }
                    None => {
                        let _ = writeln!(s, "{pad}-");
                        text_value(s, x, indent + 1);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(s, "{pad}{}", scalar_line(other).unwrap_or_default());
        }
    }
}

pub fn scalar(c: &Scalar) -> Value {
    Value::String(c.to_string())
}

pub fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

/// Columns of a matrix as lists of exact strings.
pub fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.cols()).map(|j| scalars(&m.col(j))).collect())
}

/// Generator-indexed values as `[[name, value], …]` in generator order.
pub fn character(h: &HopfPresentation, c: &Character) -> Value {
    Value::Array(h.names().iter().zip(&c.values).map(|(n, v)| serde_json::json!([n, v.to_string()])).collect())
}

pub fn algebra_map(h: &HopfPresentation, m: &AlgebraMap) -> Value {
    Value::Array(m.fmt_with(h).into_iter().map(|(g, p)| serde_json::json!([g, p])).collect())
}

pub fn dims(t: &TruncatedDims) -> Value {
    serde_json::json!({
        "dims": t.dims,
        "certified": t.certified,
        "exact": t.exact,
    })
}

pub fn dims_certificate(t: &TruncatedDims) -> Value {
    serde_json::json!({
        "truncation": t.truncation,
        "window": t.window,
        "exact": t.exact,
        "certified": t.certified,
    })
}
