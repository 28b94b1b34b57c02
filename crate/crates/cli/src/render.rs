//! Report output in the three formats.

use su3_report::{CheckReport, Report};

use crate::{CliError, Config, Format, TOOL, VERSION};

pub fn report(command: &str, cfg: &Config, checks: Vec<CheckReport>) -> Report {
    Report::new(TOOL, VERSION, command, cfg.to_json(), checks)
}

/// Checks as CSV, one row per check.
pub fn checks_csv(checks: &[CheckReport]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Internal(e.to_string());
    w.write_record(["name", "status", "lhs", "rhs", "abs_err", "tol", "elapsed_ms", "note"]).map_err(io)?;
    for c in checks {
        let ms = c.elapsed_ms.map(|m| m.to_string()).unwrap_or_default();
        w.write_record([&c.name, &c.status.to_string(), &c.lhs, &c.rhs, &c.abs_err, &c.tol, &ms, &c.note]).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

/// One line per check and a summary.
pub fn text(r: &Report) -> String {
    let mut s = String::new();
    for c in &r.checks {
        s.push_str(&c.line());
        s.push('\n');
    }
    s.push_str(&format!("{}: {} passed, {} failed\n", r.command, r.passed, r.failed));
    s
}

/// Renders `r`; `csv_override` replaces the default CSV body (grid sweeps
/// and series emit their own columns).
pub fn render(r: &Report, format: Format, csv_override: Option<String>) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(r.to_json() + "\n"),
        Format::Text => Ok(text(r)),
        Format::Csv => match csv_override {
            Some(s) => Ok(s),
            None => checks_csv(&r.checks),
        },
    }
}
