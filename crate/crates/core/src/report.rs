// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Pass/fail records for theorem batteries.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The statement's hypothesis could not be confirmed; `holds` records
    /// what the evaluation found anyway.
    Conditional { holds: bool, hypothesis: String },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    /// Passed, or evaluated true under an unconfirmed hypothesis.
    pub fn holds(&self) -> bool {
        matches!(
            self.status,
            Status::Pass | Status::Conditional { holds: true, .. }
        )
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match &self.status {
            Status::Pass => "PASS".to_string(),
            Status::Fail => "FAIL".to_string(),
            Status::Conditional { holds, .. } => {
                format!("COND({})", if *holds { "holds" } else { "fails" })
            }
            Status::Skipped { .. } => "SKIP".to_string(),
        };
        write!(f, "{tag:<12} {}", self.name)?;
        match &self.status {
            Status::Conditional { hypothesis, .. } => write!(f, " [unconfirmed: {hypothesis}]")?,
            Status::Skipped { reason } => write!(f, " [{reason}]")?,
            _ => {}
        }
        if !self.detail.is_empty() {
            write!(f, " -- {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    /// Records an unconditional check; `detail` is only built on failure.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let (status, detail) = if ok {
            (Status::Pass, String::new())
        } else {
            (Status::Fail, detail())
        };
        self.push(name, status, detail);
    }

    /// Records a check whose statement assumes `hypothesis`; `confirmed`
    /// says whether the hypothesis was verified on this instance.
    pub fn gated(
        &mut self,
        name: impl Into<String>,
        hypothesis: &str,
        confirmed: bool,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) {
        if confirmed {
            self.check(name, ok, detail);
        } else {
            let detail = if ok { String::new() } else { detail() };
            self.push(
                name,
                Status::Conditional {
                    holds: ok,
                    hypothesis: hypothesis.to_string(),
                },
                detail,
            );
        }
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.push(
            name,
            Status::Skipped {
                reason: reason.into(),
            },
            "",
        );
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .collect()
    }

    /// No unconditional check failed.
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    /// Every check either passed or held under its unconfirmed hypothesis.
    pub fn all_hold(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.holds() || matches!(c.status, Status::Skipped { .. }))
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn count(&self, pred: impl Fn(&Status) -> bool) -> usize {
        self.checks.iter().filter(|c| pred(&c.status)).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gated_and_plain() {
        let mut r = Report::new("x");
        r.check("a", true, || unreachable!());
        r.gated("b", "h", false, false, || "bad".into());
        r.gated("c", "h", true, true, String::new);
        r.skip("d", "n/a");
        assert!(r.passed());
        assert!(!r.all_hold());
        r.check("e", false, || "boom".into());
        assert!(!r.passed());
        assert_eq!(r.failures().len(), 1);
        assert_eq!(r.find("e").unwrap().detail, "boom");
        let line = r.find("b").unwrap().to_string();
        assert!(line.starts_with("COND(fails)"));
    }

    #[test]
    fn absorb_prefixes() {
        let mut a = Report::new("a");
        let mut b = Report::new("b");
        b.check("x", true, String::new);
        a.absorb("inner", b);
        assert_eq!(a.checks[0].name, "inner: x");
    }
}
