use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

/// Bumped whenever a field is renamed, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Failed,
    InvalidConfig,
    BoundExceeded,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed | Status::Error => 1,
            Status::InvalidConfig => 2,
            Status::BoundExceeded => 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// Whether the verdict counts towards the exit code.
    pub asserted: bool,
    pub passed: bool,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub config: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub checks: Vec<Check>,
    pub data: Map<String, Value>,
    /// Human-readable lines printed to the terminal.
    #[serde(skip)]
    pub summary: Vec<String>,
    #[serde(skip)]
    timing: bool,
}

impl Report {
    pub fn new(command: &str, config: Value, timing: bool) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            config,
            status: Status::Ok,
            error: None,
            checks: Vec::new(),
            data: Map::new(),
            summary: Vec::new(),
            timing,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, asserted: bool, passed: bool, detail: Value) {
        self.checks.push(Check { name: name.into(), asserted, passed, detail, elapsed_ms: None });
    }

    /// Runs `f` and records its verdict, with wall-clock time when timing is on.
    pub fn timed<E>(&mut self, name: &str, asserted: bool, f: impl FnOnce() -> Result<(bool, Value), E>) -> Result<bool, E> {
        let start = Instant::now();
        let (passed, detail) = f()?;
        let elapsed_ms = self.timing.then(|| start.elapsed().as_millis() as u64);
        self.checks.push(Check { name: name.to_string(), asserted, passed, detail, elapsed_ms });
        Ok(passed)
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.data.insert(key.to_string(), value);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    pub fn all_asserted_pass(&self) -> bool {
        self.checks.iter().filter(|c| c.asserted).all(|c| c.passed)
    }

    /// Sets the status from the checks, unless an error already set it.
    pub fn finish(&mut self) {
        if self.status == Status::Ok && !self.all_asserted_pass() {
            self.status = Status::Failed;
        }
    }

    pub fn fail(&mut self, status: Status, message: String) {
        self.status = status;
        self.error = Some(message);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
