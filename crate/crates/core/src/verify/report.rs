use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::homology::HomologyProfile;

/// Outcome of one case or property run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail {
        dim: i32,
        expected: String,
        got: String,
    },
    /// A resource budget ran out; never counted as a failure.
    Skipped { reason: String },
}

impl Verdict {
    pub fn fail(dim: i32, expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        Verdict::Fail {
            dim,
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Verdict::Skipped { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail { dim, expected, got } => {
                write!(f, "FAIL at dim {dim}: expected {expected}, got {got}")
            }
            Verdict::Skipped { reason } => write!(f, "skipped ({reason})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<HomologyProfile>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Only present when timings were requested, so reports stay
    /// reproducible by default.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CaseReport {
    pub fn new(id: impl Into<String>, verdict: Verdict) -> Self {
        Self {
            id: id.into(),
            profile: None,
            verdict,
            notes: Vec::new(),
            wall_ms: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_profile(mut self, profile: HomologyProfile) -> Self {
        self.profile = Some(profile);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn with_timing(mut self) -> Self {
        self.wall_ms = Some(self.elapsed.as_millis() as u64);
        self
    }
}

/// Counts by verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[CaseReport]) -> Self {
        let mut s = Self::default();
        for r in reports {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail { .. } => s.fail += 1,
                Verdict::Skipped { .. } => s.skipped += 1,
            }
        }
        s
    }
}

/// Fixed-width table: one row per report, then a totals line.
pub fn summary_table(reports: &[CaseReport], timings: bool) -> String {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(4).max(4);
    let mut out = String::new();
    for r in reports {
        let profile = r
            .profile
            .as_ref()
            .map_or_else(String::new, |p| format!("  [{p}]"));
        let time = if timings {
            format!("  {} ms", r.elapsed.as_millis())
        } else {
            String::new()
        };
        out.push_str(&format!("{:<width$}  {}{profile}{time}\n", r.id, r.verdict));
        for n in &r.notes {
            out.push_str(&format!("{:<width$}    note: {n}\n", ""));
        }
    }
    let s = Summary::of(reports);
    out.push_str(&format!(
        "{} cases: {} pass, {} fail, {} skipped\n",
        reports.len(),
        s.pass,
        s.fail,
        s.skipped
    ));
    out
}
