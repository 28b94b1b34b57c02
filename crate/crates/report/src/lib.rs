//! Verification results shared by every checking module.
//!
//! All numbers are carried as decimal strings so that reports are exact,
//! reproducible and diffable. `elapsed_ms` is only filled in on request,
//! because wall time would otherwise break byte-identical reruns.

use std::time::Instant;

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

/// Suffix for checks that assert a known failure of a formula.
pub const EXPECTED_MISMATCH: &str = ".expected-mismatch";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub abs_err: String,
    pub tol: String,
    pub elapsed_ms: Option<u64>,
    pub note: String,
}

/// Exact rational rendering, `p/q` or `p`.
pub fn rat_str(r: &Rational) -> String {
    r.to_string()
}

/// Scientific decimal rendering with `digits` significant digits.
pub fn float_str(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.to_string_radix(10, Some(digits.max(1)))
}

/// Short rendering for error magnitudes.
pub fn err_str(x: &Float) -> String {
    float_str(x, 6)
}

/// Decimal digits worth printing at `prec` bits.
pub fn digits_for(prec: u32) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor() as usize
}

impl CheckReport {
    fn base(name: impl Into<String>, status: Status, note: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            status,
            lhs: String::new(),
            rhs: String::new(),
            abs_err: String::new(),
            tol: String::new(),
            elapsed_ms: None,
            note: note.into(),
        }
    }

    /// Exact equality of two rationals.
    pub fn exact(name: impl Into<String>, lhs: &Rational, rhs: &Rational, note: impl Into<String>) -> Self {
        let diff = Rational::from(lhs - rhs).abs();
        let status = if diff == 0 { Status::Pass } else { Status::Fail };
        CheckReport {
            lhs: rat_str(lhs),
            rhs: rat_str(rhs),
            abs_err: rat_str(&diff),
            tol: "0".into(),
            ..Self::base(name, status, note)
        }
    }

    /// A documented failure: passes iff lhs − rhs equals `expected_diff`
    /// exactly, and the name carries the expected-mismatch suffix.
    pub fn expected_mismatch(
        name: impl Into<String>,
        lhs: &Rational,
        rhs: &Rational,
        expected_diff: &Rational,
        note: impl Into<String>,
    ) -> Self {
        let diff = Rational::from(lhs - rhs);
        let off = Rational::from(&diff - expected_diff).abs();
        let status = if diff != 0 && off == 0 { Status::Pass } else { Status::Fail };
        CheckReport {
            lhs: rat_str(lhs),
            rhs: rat_str(rhs),
            abs_err: rat_str(&diff.abs()),
            tol: "0".into(),
            ..Self::base(format!("{}{EXPECTED_MISMATCH}", name.into()), status, note)
        }
    }

    /// |lhs − rhs| ≤ tol on real values.
    pub fn numeric(
        name: impl Into<String>,
        lhs: &Float,
        rhs: &Float,
        tol: &Float,
        digits: usize,
        note: impl Into<String>,
    ) -> Self {
        let p = lhs.prec().max(rhs.prec());
        let diff = Float::with_val(p, lhs - rhs).abs();
        let status = if diff <= *tol { Status::Pass } else { Status::Fail };
        CheckReport {
            lhs: float_str(lhs, digits),
            rhs: float_str(rhs, digits),
            abs_err: err_str(&diff),
            tol: err_str(tol),
            ..Self::base(name, status, note)
        }
    }

    /// A check whose failure amount is `violation` (≤ 0 means satisfied).
    /// Used for bands and trends, where lhs and rhs are descriptions.
    pub fn predicate(
        name: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        violation: f64,
        note: impl Into<String>,
    ) -> Self {
        let ok = violation <= 0.0 && !violation.is_nan();
        CheckReport {
            lhs: lhs.into(),
            rhs: rhs.into(),
            abs_err: if ok { "0".into() } else { format!("{violation:.6e}") },
            tol: "0".into(),
            ..Self::base(name, if ok { Status::Pass } else { Status::Fail }, note)
        }
    }

    /// Boolean check with descriptive sides.
    pub fn truth(name: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>, ok: bool, note: impl Into<String>) -> Self {
        Self::predicate(name, lhs, rhs, if ok { 0.0 } else { 1.0 }, note)
    }

    pub fn skip(name: impl Into<String>, note: impl Into<String>) -> Self {
        Self::base(name, Status::Skip, note)
    }

    /// A check that could not be computed at all.
    pub fn error(name: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Self::base(name, Status::Fail, format!("error: {err}"))
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_elapsed(mut self, ms: u64) -> Self {
        self.elapsed_ms = Some(ms);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// One human-readable line.
    pub fn line(&self) -> String {
        let mut s = format!("[{}] {}", self.status, self.name);
        if !self.lhs.is_empty() || !self.rhs.is_empty() {
            s.push_str(&format!(": {} vs {}", self.lhs, self.rhs));
        }
        if !self.abs_err.is_empty() {
            s.push_str(&format!(" (err {}, tol {})", self.abs_err, self.tol));
        }
        if let Some(ms) = self.elapsed_ms {
            s.push_str(&format!(" [{ms} ms]"));
        }
        if !self.note.is_empty() {
            s.push_str(&format!(" -- {}", self.note));
        }
        s
    }
}

/// Runs `f`, recording the wall time on the returned checks when `timed`.
pub fn timed<F>(timed: bool, f: F) -> Vec<CheckReport>
where
    F: FnOnce() -> Vec<CheckReport>,
{
    let start = Instant::now();
    let mut out = f();
    if timed {
        let ms = start.elapsed().as_millis() as u64;
        for c in &mut out {
            c.elapsed_ms = Some(ms);
        }
    }
    out
}

/// Collapses several checks into one that passes iff all of them pass.
pub fn all_of(name: impl Into<String>, checks: &[CheckReport], note: impl Into<String>) -> CheckReport {
    let failed: Vec<&str> = checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.as_str()).collect();
    let lhs = format!("{} of {} pass", checks.len() - failed.len(), checks.len());
    let rhs = if failed.is_empty() { "all pass".to_string() } else { format!("failing: {}", failed.join(", ")) };
    CheckReport::truth(name, lhs, rhs, failed.is_empty(), note)
}

/// The top-level JSON document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: serde_json::Value,
    pub checks: Vec<CheckReport>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(tool: &str, version: &str, command: &str, config: serde_json::Value, checks: Vec<CheckReport>) -> Self {
        let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
        let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
        Report {
            tool: tool.into(),
            version: version.into(),
            command: command.into(),
            config,
            checks,
            passed,
            failed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
