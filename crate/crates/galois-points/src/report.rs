//! Structured verification output: a report is a list of claims, each with a
//! stable id, a pass/fail/undecided status, and a witness string, plus a
//! summary. Reports serialize to JSON (round-trip stable) and render to a
//! greppable one-claim-per-line text form.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub pass: bool,
    /// True when the check could not be decided (e.g. a search extension
    /// ladder was exhausted). An undecided claim is never `pass`.
    pub undecided: bool,
    pub witness: String,
    pub timing_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub undecided: usize,
    pub truncated: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub schema_version: u32,
    /// Run configuration, keyed deterministically.
    pub config: BTreeMap<String, String>,
    pub claims: Vec<Claim>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: BTreeMap<String, String>) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            config,
            claims: Vec::new(),
            summary: Summary {
                total: 0,
                passed: 0,
                failed: 0,
                undecided: 0,
                truncated: false,
            },
        }
    }

    pub fn push(&mut self, claim: Claim) {
        self.summary.total += 1;
        if claim.undecided {
            self.summary.undecided += 1;
        } else if claim.pass {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.claims.push(claim);
    }

    pub fn pass(&mut self, id: &str, statement: &str, witness: String) {
        self.push(Claim {
            id: id.to_string(),
            statement: statement.to_string(),
            pass: true,
            undecided: false,
            witness,
            timing_ms: 0,
        });
    }

    pub fn fail(&mut self, id: &str, statement: &str, witness: String) {
        self.push(Claim {
            id: id.to_string(),
            statement: statement.to_string(),
            pass: false,
            undecided: false,
            witness,
            timing_ms: 0,
        });
    }

    pub fn check(&mut self, id: &str, statement: &str, pass: bool, witness: String) {
        if pass {
            self.pass(id, statement, witness);
        } else {
            self.fail(id, statement, witness);
        }
    }

    pub fn undecided(&mut self, id: &str, statement: &str, witness: String) {
        self.push(Claim {
            id: id.to_string(),
            statement: statement.to_string(),
            pass: false,
            undecided: true,
            witness,
            timing_ms: 0,
        });
    }

    /// Run `body`, record wall-clock time on the claim it produces.
    pub fn timed<F: FnOnce(&mut Report)>(&mut self, body: F) {
        let before = self.claims.len();
        let start = Instant::now();
        body(self);
        let elapsed = start.elapsed().as_millis() as u64;
        for c in &mut self.claims[before..] {
            c.timing_ms = elapsed;
        }
    }

    pub fn mark_truncated(&mut self) {
        self.summary.truncated = true;
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.undecided == 0
    }

    /// Zero all timings (used by the deterministic output mode).
    pub fn strip_timings(&mut self) {
        for c in &mut self.claims {
            c.timing_ms = 0;
        }
    }

    /// 0 all pass; 1 some claim verified false; 3 some claim undecided;
    /// 5 truncated search.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            1
        } else if self.summary.undecided > 0 {
            3
        } else if self.summary.truncated {
            5
        } else {
            0
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.config {
            out.push_str(&format!("# {k} = {v}\n"));
        }
        for c in &self.claims {
            let status = if c.undecided {
                "UNDECIDED"
            } else if c.pass {
                "PASS"
            } else {
                "FAIL"
            };
            out.push_str(&format!("{status} {} | {} | {}\n", c.id, c.statement, c.witness));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "summary: {} claims, {} passed, {} failed, {} undecided{}\n",
            s.total,
            s.passed,
            s.failed,
            s.undecided,
            if s.truncated { ", TRUNCATED" } else { "" }
        ));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_and_exit_codes() {
        let mut r = Report::new(BTreeMap::new());
        assert_eq!(r.exit_code(), 0);
        r.pass("a", "first", String::new());
        assert_eq!(r.exit_code(), 0);
        r.undecided("b", "second", String::new());
        assert_eq!(r.exit_code(), 3);
        r.fail("c", "third", String::new());
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.summary.total, 3);
        assert_eq!(r.summary.passed, 1);
        assert_eq!(r.summary.failed, 1);
        assert_eq!(r.summary.undecided, 1);
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let mut config = BTreeMap::new();
        config.insert("q".to_string(), "5".to_string());
        let mut r = Report::new(config);
        r.pass("x", "statement", "w".to_string());
        let json = r.render_json();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back.render_json(), json);
        assert_eq!(back, r);
    }

    #[test]
    fn text_lines_one_per_claim() {
        let mut r = Report::new(BTreeMap::new());
        r.pass("a.1", "s1", "w1".to_string());
        r.fail("a.2", "s2", "w2".to_string());
        let text = r.render_text();
        assert!(text.contains("PASS a.1"));
        assert!(text.contains("FAIL a.2"));
        assert_eq!(text.lines().count(), 3);
    }
}
