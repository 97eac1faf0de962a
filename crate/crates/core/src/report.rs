//! Machine-readable verification reports.

use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            witness: None,
            data: Value::Null,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            witness: Some(witness.into()),
            data: Value::Null,
        }
    }

    /// Passes when `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(name),
            Some(w) => Self::fail(name, w),
        }
    }

    pub fn with_data(mut self, data: Value) -> Self {
        self.data = data;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    #[serde(flatten)]
    pub params: Map<String, Value>,
    pub checks: Vec<Check>,
    pub passed: bool,
    pub timing_ms: u64,
    #[serde(skip)]
    started: Option<Instant>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            suite: suite.into(),
            params: Map::new(),
            checks: Vec::new(),
            passed: true,
            timing_ms: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn finish(mut self) -> Self {
        self.passed = self.checks.iter().all(|c| c.passed);
        if let Some(t) = self.started {
            self.timing_ms = t.elapsed().as_millis() as u64;
        }
        self
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable report")
    }
}
