//! Structured pass/fail records produced by every verification routine.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded outcome of an experiment; never counts as a failure.
    Observation,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Observation => "observation",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub input: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub observation: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub params: Map<String, Value>,
    pub cases: Vec<Case>,
    pub summary: Summary,
    pub version: String,
    pub timing_ms: u64,
    #[serde(skip)]
    started: Option<Instant>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            params: Map::new(),
            cases: Vec::new(),
            summary: Summary::default(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timing_ms: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, input: impl Into<String>, status: Status, detail: impl Into<String>) {
        match status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Observation => self.summary.observation += 1,
        }
        self.cases.push(Case { input: input.into(), status, detail: detail.into() });
    }

    pub fn check(&mut self, input: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(input, if ok { Status::Pass } else { Status::Fail }, detail);
    }

    /// Appends the cases of another report, prefixing their inputs with its check name.
    pub fn absorb(&mut self, other: Report) {
        for c in other.cases {
            self.push(format!("{}: {}", other.check, c.input), c.status, c.detail);
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// Stops the clock.
    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.timing_ms = t.elapsed().as_millis() as u64;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text table: one line per case and a summary line.
    pub fn to_table(&self) -> String {
        let width = self.cases.iter().map(|c| c.input.chars().count()).max().unwrap_or(0).min(60);
        let mut out = format!("== {} ==\n", self.check);
        for c in &self.cases {
            out.push_str(&format!("{:<11} {:<width$}  {}\n", c.status.to_string(), c.input, c.detail));
        }
        out.push_str(&format!(
            "-- pass {}  fail {}  observation {}  ({} ms)\n",
            self.summary.pass, self.summary.fail, self.summary.observation, self.timing_ms
        ));
        out
    }
}
