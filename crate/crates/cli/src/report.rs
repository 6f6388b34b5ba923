use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::config::RunConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// Which side of the tolerance counts as passing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    AtMost,
    Above,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub bound: Bound,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<f64>,
}

impl Check {
    pub fn measured(
        name: &str,
        residual: f64,
        tolerance: f64,
        bound: Bound,
        samples: usize,
    ) -> Self {
        let ok = match bound {
            Bound::AtMost => residual <= tolerance,
            Bound::Above => residual > tolerance,
        };
        Self {
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: Some(residual),
            tolerance,
            bound,
            samples,
            reason: None,
            duration_ms: None,
        }
    }

    pub fn skipped(name: &str, tolerance: f64, reason: String) -> Self {
        Self {
            name: name.to_string(),
            status: Status::Skipped,
            residual: None,
            tolerance,
            bound: Bound::AtMost,
            samples: 0,
            reason: Some(reason),
            duration_ms: None,
        }
    }

    pub fn with_duration(mut self, elapsed: Duration) -> Self {
        self.duration_ms = Some(elapsed.as_secs_f64() * 1e3);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub config: RunConfig,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(config: RunConfig, checks: Vec<Check>) -> Self {
        let failed = checks.iter().any(|c| c.status == Status::Fail);
        Self {
            config,
            status: if failed { Status::Fail } else { Status::Pass },
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is plain data");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let timed = self.checks.iter().any(|c| c.duration_ms.is_some());
        let mut out = String::from("name,status,residual,tolerance,bound,samples,reason");
        if timed {
            out.push_str(",duration_ms");
        }
        out.push('\n');
        for c in &self.checks {
            let residual = c.residual.map(|r| format!("{r:?}")).unwrap_or_default();
            let bound = match c.bound {
                Bound::AtMost => "at_most",
                Bound::Above => "above",
            };
            let reason = c.reason.as_deref().unwrap_or("").replace('"', "\"\"");
            let _ = write!(
                out,
                "{},{},{},{:?},{},{},\"{}\"",
                c.name,
                c.status.as_str(),
                residual,
                c.tolerance,
                bound,
                c.samples,
                reason
            );
            if timed {
                let _ = write!(out, ",{:?}", c.duration_ms.unwrap_or(0.0));
            }
            out.push('\n');
        }
        out
    }
}
