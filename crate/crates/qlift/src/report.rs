//! Check reports: the one structured output of every command.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckEntry {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckEntry { name: name.into(), anchor: anchor.into(), passed, detail: detail.into() }
    }
}

impl From<qlift_core::liftings::Check> for CheckEntry {
    fn from(c: qlift_core::liftings::Check) -> Self {
        CheckEntry { name: c.name, anchor: c.anchor, passed: c.passed, detail: c.detail }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<CheckEntry>,
}

impl Report {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckEntry>) -> Self {
        let failed = checks.iter().filter(|c| !c.passed).count();
        Report { suite: suite.into(), passed: failed == 0, total: checks.len(), failed, checks }
    }

    /// Concatenates several reports under one suite name.
    pub fn merge(suite: impl Into<String>, parts: Vec<Report>) -> Self {
        Report::new(suite, parts.into_iter().flat_map(|r| r.checks).collect())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line per check, then a summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("{status} {:<28} {}", c.anchor, c.name));
            if !c.passed || c.detail.len() <= 60 {
                out.push_str(&format!("  [{}]", c.detail));
            }
            out.push('\n');
        }
        out.push_str(&format!("{}: {} of {} checks passed\n", self.suite, self.total - self.failed, self.total));
        out
    }
}
