//! Pass/fail reports with exact witnesses, shared by the library checks and
//! the CLI.

use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One discrepancy (or recorded observation) inside a report.
#[derive(Clone, Debug, Serialize)]
pub struct Detail {
    pub item: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check_name: String,
    pub status: Status,
    pub details: Vec<Detail>,
    /// Wall-clock time; excluded from JSON so that output for fixed inputs
    /// is byte-deterministic.
    #[serde(skip_serializing)]
    pub elapsed_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Failing details only.
    pub fn failures(&self) -> impl Iterator<Item = &Detail> {
        self.details.iter().filter(|d| !d.ok)
    }
}

/// Accumulates details for a named check; status is pass iff no detail failed.
pub struct ReportBuilder {
    name: String,
    details: Vec<Detail>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        ReportBuilder {
            name: name.into(),
            details: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn check(&mut self, item: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>, ok: bool) {
        self.details.push(Detail {
            item: item.into(),
            expected: expected.into(),
            actual: actual.into(),
            ok,
        });
    }

    pub fn check_eq<T: PartialEq + std::fmt::Display>(&mut self, item: impl Into<String>, expected: T, actual: T) {
        let ok = expected == actual;
        self.check(item, expected.to_string(), actual.to_string(), ok);
    }

    /// Record a failure only; quiet when ok (keeps bulk scans readable).
    pub fn assert_that(&mut self, ok: bool, item: impl Fn() -> String) {
        if !ok {
            self.check(item(), "pass", "fail", false);
        }
    }

    pub fn note(&mut self, item: impl Into<String>, actual: impl Into<String>) {
        let actual = actual.into();
        self.details.push(Detail {
            item: item.into(),
            expected: actual.clone(),
            actual,
            ok: true,
        });
    }

    pub fn ok_so_far(&self) -> bool {
        self.details.iter().all(|d| d.ok)
    }

    pub fn finish(self) -> Report {
        let status = if self.details.iter().all(|d| d.ok) {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            check_name: self.name,
            status,
            details: self.details,
            elapsed_ms: self.started.elapsed().as_millis(),
        }
    }
}
