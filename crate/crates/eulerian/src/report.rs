//! Machine-readable verification reports, one JSON object per line.

use std::fmt::Display;
use std::time::Instant;

use eulerian_core::Polynomial;
use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Where a check failed and what each side evaluated to there.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub at: Value,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub name: String,
    pub params: Map<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u64,
    /// Number of combinatorial objects (or checked instances) examined.
    pub objects: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Accumulates one report: parameters, object count and the first failure.
pub struct Check {
    name: String,
    params: Map<String, Value>,
    started: Instant,
    objects: u64,
    counterexample: Option<Counterexample>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            params: Map::new(),
            started: Instant::now(),
            objects: 0,
            counterexample: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn count(&mut self, objects: u64) {
        self.objects += objects;
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    /// Records a failure unless one is already recorded.
    pub fn fail(&mut self, at: Value, lhs: impl Into<Value>, rhs: impl Into<Value>) {
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample { at, lhs: lhs.into(), rhs: rhs.into() });
        }
    }

    /// Fails with `at` when `lhs != rhs`, reporting both values as strings.
    pub fn expect_eq<T: PartialEq + Display>(&mut self, at: Value, lhs: &T, rhs: &T) -> bool {
        if lhs != rhs {
            self.fail(at, lhs.to_string(), rhs.to_string());
            return false;
        }
        true
    }

    /// Compares two polynomials and reports the first differing coefficient.
    pub fn expect_poly_eq(&mut self, at: Value, lhs: &Polynomial, rhs: &Polynomial) -> bool {
        if lhs == rhs {
            return true;
        }
        let len = lhs.coeffs().len().max(rhs.coeffs().len());
        let k = (0..len).find(|&k| lhs.coeff(k) != rhs.coeff(k)).unwrap_or(0);
        let mut at = match at {
            Value::Object(m) => m,
            Value::Null => Map::new(),
            other => Map::from_iter([("context".to_string(), other)]),
        };
        at.insert("degree".into(), k.into());
        self.fail(
            Value::Object(at),
            serde_json::json!({ "coeff": lhs.coeff(k).to_string(), "poly": coeff_strings(lhs) }),
            serde_json::json!({ "coeff": rhs.coeff(k).to_string(), "poly": coeff_strings(rhs) }),
        );
        false
    }

    /// Turns an error from the library into a failed report.
    pub fn error(&mut self, at: Value, err: impl Display) {
        self.fail(at, format!("error: {err}"), Value::Null);
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            schema: SCHEMA_VERSION,
            name: self.name,
            params: self.params,
            status: if self.counterexample.is_some() { Status::Fail } else { Status::Pass },
            counterexample: self.counterexample,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            objects: self.objects,
        }
    }
}

pub fn coeff_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}
