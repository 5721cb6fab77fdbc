//! Structured verification outcomes with a line-oriented text rendering and
//! a JSON rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// How a failed check should be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// Exact statement about W; must hold.
    Exact,
    /// Implication from finite data to the geometric statement; must hold.
    Sound,
    /// Equality between finite data and the geometric prediction.
    Complete,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub subject: String,
    pub check: String,
    pub kind: CheckKind,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(
        &mut self,
        subject: impl Into<String>,
        check: impl Into<String>,
        kind: CheckKind,
        witness: Option<String>,
    ) -> &mut CheckRecord {
        self.records.push(CheckRecord {
            subject: subject.into(),
            check: check.into(),
            kind,
            passed: witness.is_none(),
            witness,
            detail: None,
        });
        self.records.last_mut().unwrap()
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
        self.notes.extend(other.notes);
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn passed_kind(&self, kind: CheckKind) -> bool {
        self.records
            .iter()
            .filter(|r| r.kind == kind)
            .all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    /// One line per record: `PASS|FAIL kind subject check [witness=..] [..]`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let kind = match r.kind {
                CheckKind::Exact => "exact",
                CheckKind::Sound => "sound",
                CheckKind::Complete => "complete",
            };
            let _ = write!(
                out,
                "{} {kind} {} {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.subject,
                r.check
            );
            if let Some(w) = &r.witness {
                let _ = write!(out, " witness={w}");
            }
            if let Some(d) = &r.detail {
                let _ = write!(out, " [{d}]");
            }
            out.push('\n');
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl CheckRecord {
    pub fn with_detail(&mut self, d: impl Into<String>) -> &mut Self {
        self.detail = Some(d.into());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let mut r = Report::new();
        r.push("A3", "m-classification", CheckKind::Exact, None)
            .with_detail("|M| = 3");
        r.push(
            "B3",
            "coxeter-bound",
            CheckKind::Exact,
            Some("1 2 3".into()),
        );
        assert!(!r.all_passed());
        let text = r.to_text();
        assert!(text.starts_with("PASS exact A3 m-classification [|M| = 3]\n"));
        assert!(text.contains("FAIL exact B3 coxeter-bound witness=1 2 3"));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
