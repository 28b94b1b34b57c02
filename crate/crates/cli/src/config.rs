//! Run configuration shared by every subcommand.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde_json::json;
use su3_report::{CheckReport, Status};

use crate::CliError;

/// Environment variable that overrides the default cache directory.
pub const CACHE_ENV: &str = "SU3_CACHE_DIR";
pub const DEFAULT_PREC: u32 = 256;
pub const MIN_PREC: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format '{s}', expected json, csv or text")),
        }
    }
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub prec: u32,
    pub cache_dir: PathBuf,
    pub format: Format,
    /// Tolerance overrides keyed by check-name prefix.
    pub tolerances: BTreeMap<String, f64>,
    pub slow: bool,
    /// Record wall time on checks. Off by default so reruns are byte-identical.
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            prec: DEFAULT_PREC,
            cache_dir: PathBuf::from(".su3-cache"),
            format: Format::Text,
            tolerances: BTreeMap::new(),
            slow: false,
            timings: false,
        }
    }
}

impl Config {
    /// Builds a config; the flag wins over the environment, which wins over
    /// the default.
    pub fn new(
        prec: u32,
        cache_flag: Option<PathBuf>,
        cache_env: Option<String>,
        format: Format,
    ) -> Result<Self, CliError> {
        if prec < MIN_PREC {
            return Err(CliError::Usage(format!("precision {prec} is below the minimum of {MIN_PREC} bits")));
        }
        let cache_dir = cache_flag
            .or_else(|| cache_env.filter(|s| !s.is_empty()).map(PathBuf::from))
            .unwrap_or_else(|| Config::default().cache_dir);
        Ok(Config { prec, cache_dir, format, ..Config::default() })
    }

    /// Creates the cache directory if needed.
    pub fn ensure_cache_dir(&self) -> Result<&Path, CliError> {
        std::fs::create_dir_all(&self.cache_dir)
            .map_err(|e| CliError::Internal(format!("cannot create cache directory {}: {e}", self.cache_dir.display())))?;
        Ok(&self.cache_dir)
    }

    /// Parses `NAME=VALUE`.
    pub fn add_tolerance(&mut self, spec: &str) -> Result<(), CliError> {
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("tolerance '{spec}' is not of the form NAME=VALUE")))?;
        let v: f64 = value
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("tolerance value '{value}' is not a number")))?;
        if !(v >= 0.0) {
            return Err(CliError::Usage(format!("tolerance for '{name}' must be non-negative")));
        }
        self.tolerances.insert(name.trim().to_string(), v);
        Ok(())
    }

    /// Re-judges numeric checks whose name starts with an override key.
    /// Exact checks (tolerance 0) are never loosened.
    pub fn apply_tolerances(&self, checks: &mut [CheckReport]) {
        for c in checks.iter_mut() {
            let Some((_, &tol)) = self.tolerances.iter().filter(|(k, _)| c.name.starts_with(k.as_str())).max_by_key(|(k, _)| k.len())
            else {
                continue;
            };
            if c.tol == "0" || c.status == Status::Skip {
                continue;
            }
            let Ok(err) = c.abs_err.parse::<f64>() else { continue };
            c.tol = format!("{tol:e}");
            c.status = if err <= tol { Status::Pass } else { Status::Fail };
        }
    }

    /// The config as recorded in JSON reports.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "prec_bits": self.prec,
            "cache_dir": self.cache_dir.display().to_string(),
            "format": self.format.to_string(),
            "tolerances": self.tolerances,
            "slow": self.slow,
            "timings": self.timings,
        })
    }
}
