//! The acceptance criteria as runnable check groups, and `verify-all`.

use std::time::{Duration, Instant};

use su3_report::{CheckReport, Status};
use su3_repcount::expand_r;

use crate::{asym, calibration, identities, omega, repcount, CliError, Config};

/// N for the exact series behind the slow trend criterion.
pub const SLOW_N: usize = 100_000;
pub const SLOW_GRID: [u64; 3] = [1_000, 10_000, 100_000];

pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub budget: Duration,
    /// Part of the slow tier.
    pub slow: bool,
}

const fn crit(id: u32, title: &'static str, secs: u64, slow: bool) -> Criterion {
    Criterion { id, title, budget: Duration::from_secs(secs), slow }
}

pub const CRITERIA: [Criterion; 12] = [
    crit(1, "sequence reproduction r(0..13)", 1, false),
    crit(2, "omega(0) = 1/3 and trivial zeros", 30, false),
    crit(3, "even closed forms against the cube integral", 5, false),
    crit(4, "residues at 2/3, 0 and 1/2", 60, false),
    crit(5, "omega'(0) = log 2 pi", 60, false),
    crit(6, "Bernoulli recurrence and mod-6 identities", 30, false),
    crit(7, "Eisenstein lift to q^40", 60, false),
    crit(8, "WZ and creative-telescoping certificates", 60, false),
    crit(9, "alpha/beta linear system", 10, false),
    crit(10, "asymptotic constants and both K formulas", 5, false),
    crit(11, "saddle, local CLT and formula trends", 900, true),
    crit(12, "numerics calibration suites", 30, false),
];

/// Checks that cannot pass with the stated bands at the stated grid, with
/// the reason. They are still run and reported as failures.
pub const UNATTAINABLE: [(&str, &str); 1] = [(
    "asym.trend.variance.n=100000",
    "Var/((5/6) X^-2 n^(8/5)) is 1.319 at n = 1e5; the leading term carries a correction of about 0.74 n^(-1/10), so [0.9, 1.1] is first reached near n = 10^8.7",
)];

pub fn unattainable_reason(name: &str) -> Option<&'static str> {
    UNATTAINABLE.iter().find(|(n, _)| *n == name).map(|(_, r)| *r)
}

/// One criterion's checks.
pub fn criterion_checks(id: u32, cfg: &Config) -> Result<Vec<CheckReport>, CliError> {
    let p = cfg.prec;
    Ok(match id {
        1 => repcount::checks(&expand_r(13)).into_iter().take(1).collect(),
        2 => omega::special_numeric(p),
        3 => omega::special_exact(),
        4 => omega::omega_residues(p, 0),
        5 => omega::omega_deriv0_checks(p),
        6 => {
            let mut v = identities::bernoulli(50);
            v.extend(identities::mod6(30, 4));
            v
        }
        7 => identities::eisenstein(1..=6, 40),
        8 => identities::wz(40, 8),
        9 => (1..=6).flat_map(identities::solve).collect(),
        10 => {
            let c = su3_asym::constants(p);
            let mut v = asym::printed_checks(&c);
            let tol = crate::util::two_pow(32 - p as i32, p);
            for (name, l, r) in c.relations() {
                v.push(CheckReport::numeric(format!("asym.relation.{name}"), &l, &r, &tol, 30, ""));
            }
            v.push(asym::k_cross_check());
            v
        }
        11 => {
            let r = repcount::series(SLOW_N, cfg.ensure_cache_dir()?)?;
            asym::verify_grid(&SLOW_GRID, &r, p).1
        }
        12 => calibration::all(p),
        _ => return Err(CliError::Usage(format!("no acceptance criterion {id}"))),
    })
}

pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub checks: Vec<CheckReport>,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Outcome {
    pub fn failures(&self) -> Vec<&CheckReport> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty() && self.within_budget()
    }

    /// One summary line.
    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {:>2} {status}: {} ({} checks, {:.1} s of {} s)",
            self.id,
            self.title,
            self.checks.len(),
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        );
        if !self.within_budget() {
            s.push_str(" [over budget]");
        }
        for f in self.failures() {
            s.push_str(&format!("\n    failing {}: {} vs {}", f.name, f.lhs, f.rhs));
            if let Some(r) = unattainable_reason(&f.name) {
                s.push_str(&format!("\n    known unattainable: {r}"));
            } else if !f.note.is_empty() {
                s.push_str(&format!(" ({})", f.note));
            }
        }
        s
    }
}

pub fn run_criterion(id: u32, cfg: &Config) -> Result<Outcome, CliError> {
    let c = CRITERIA.iter().find(|c| c.id == id).ok_or_else(|| CliError::Usage(format!("no acceptance criterion {id}")))?;
    let start = Instant::now();
    let checks = criterion_checks(id, cfg)?;
    Ok(Outcome { id, title: c.title, checks, elapsed: start.elapsed(), budget: c.budget })
}

/// Further checks that bring every module into the fast run.
pub fn module_sweep(cfg: &Config) -> Result<Vec<CheckReport>, CliError> {
    let r = repcount::series(2000, cfg.ensure_cache_dir()?)?;
    let mut out = repcount::checks(&r);
    out.extend(identities::zeta_forms(10));
    out.extend(omega::odd_against_direct(cfg.prec));
    out.push(asym::mellin(2, cfg.prec.min(192)));
    let c = su3_asym::constants(cfg.prec);
    match su3_asym::saddle_row(1000, &r, &c, cfg.prec, None) {
        Ok(row) => out.extend(asym::row_checks(&row, cfg.prec)),
        Err(e) => out.push(CheckReport::error("asym.row.n=1000", e)),
    }
    Ok(out)
}

/// Every fast criterion, the module sweep, and with `cfg.slow` the slow tier.
pub fn verify_all(cfg: &Config) -> Result<Vec<CheckReport>, CliError> {
    let mut out = Vec::new();
    for c in CRITERIA.iter().filter(|c| cfg.slow || !c.slow) {
        let start = Instant::now();
        let mut checks = criterion_checks(c.id, cfg)?;
        if cfg.timings {
            let ms = start.elapsed().as_millis() as u64;
            checks.iter_mut().for_each(|k| k.elapsed_ms = Some(ms));
        }
        out.extend(checks);
    }
    out.extend(module_sweep(cfg)?);
    Ok(out)
}
