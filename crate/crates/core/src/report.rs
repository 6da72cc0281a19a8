//! Machine-readable verdicts shared by the library checks and the CLI.

use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: serde_json::Value,
    pub verdict: bool,
    pub witnesses: Vec<String>,
    pub timings: Timings,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Timings {
    pub seconds: f64,
}

impl Report {
    pub fn new(check: &str, params: serde_json::Value) -> Self {
        Report { check: check.into(), params, verdict: true, witnesses: Vec::new(), timings: Timings::default() }
    }

    /// Records a failure.
    pub fn fail(&mut self, witness: impl Into<String>) {
        self.verdict = false;
        self.witnesses.push(witness.into());
    }

    /// Records supporting detail without changing the verdict.
    pub fn note(&mut self, witness: impl Into<String>) {
        self.witnesses.push(witness.into());
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.timings.seconds = start.elapsed().as_secs_f64();
        self
    }

    /// Combines sub-reports under one heading.
    pub fn merge(check: &str, params: serde_json::Value, parts: &[Report]) -> Report {
        let mut r = Report::new(check, params);
        for p in parts {
            if !p.verdict {
                r.verdict = false;
                for w in &p.witnesses {
                    r.witnesses.push(format!("{}: {w}", p.check));
                }
            }
            r.timings.seconds += p.timings.seconds;
        }
        r
    }
}
