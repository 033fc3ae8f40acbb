//! Machine-readable run reports.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};
use weakstar_core::{Exhausted, DEFAULT_NODE_BUDGET};

/// Environment variable overriding every node budget.
pub const BUDGET_ENV: &str = "WEAKSTAR_BUDGET";

#[derive(Debug, thiserror::Error)]
pub enum BudgetError {
    #[error("{BUDGET_ENV}={0:?} is not a positive integer")]
    Invalid(String),
}

/// Node budget from the environment, or the default.
pub fn node_budget() -> Result<u64, BudgetError> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s.trim().parse::<u64>().ok().filter(|&b| b > 0).ok_or(BudgetError::Invalid(s)),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Yes,
    No,
    Unknown,
    Accept,
    Reject,
    /// input or precondition error
    Error,
    /// a construction did not go through
    Failed,
}

impl Outcome {
    /// The process exit code for this outcome.
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Yes | Outcome::Accept => 0,
            Outcome::No | Outcome::Reject => 1,
            Outcome::Unknown => 2,
            Outcome::Error => 3,
            Outcome::Failed => 4,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of_bytes(name: &str, bytes: &[u8]) -> Self {
        InputDigest { name: name.to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
    }

    /// Digest of a file, or of the argument text itself when it is not a
    /// readable file (named graphs, capacity specs).
    pub fn of_arg(name: &str, arg: &str) -> Self {
        let path = Path::new(arg);
        match std::fs::read(path) {
            Ok(bytes) if path.is_file() => Self::of_bytes(name, &bytes),
            _ => Self::of_bytes(name, arg.as_bytes()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub outcome: Outcome,
    /// set when the outcome is unknown
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhausted: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    /// wall time; zero under `--deterministic`
    pub elapsed_ms: u64,
    pub counters: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Collects a report while a command runs.
pub struct Recorder {
    report: RunReport,
    start: Instant,
    deterministic: bool,
}

impl Recorder {
    pub fn new(command: Vec<String>, deterministic: bool) -> Self {
        Recorder {
            report: RunReport {
                command,
                inputs: Vec::new(),
                outcome: Outcome::Error,
                exhausted: None,
                certificate: None,
                elapsed_ms: 0,
                counters: BTreeMap::new(),
                details: serde_json::Value::Null,
                error: None,
            },
            start: Instant::now(),
            deterministic,
        }
    }

    pub fn input(&mut self, name: &str, arg: &str) {
        self.report.inputs.push(InputDigest::of_arg(name, arg));
    }

    pub fn count(&mut self, key: &str, value: u64) {
        *self.report.counters.entry(key.to_string()).or_default() += value;
    }

    pub fn certificate(&mut self, path: &Path) {
        self.report.certificate = Some(path.display().to_string());
    }

    pub fn details(&mut self, details: serde_json::Value) {
        self.report.details = details;
    }

    pub fn exhausted(&mut self, e: &Exhausted) {
        self.report.exhausted = Some(e.to_string());
    }

    pub fn error(&mut self, msg: impl Into<String>) {
        self.report.error = Some(msg.into());
    }

    pub fn finish(mut self, outcome: Outcome) -> RunReport {
        self.report.outcome = outcome;
        if !self.deterministic {
            self.report.elapsed_ms = self.start.elapsed().as_millis() as u64;
        }
        self.report
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
