//! Argument parsing and dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use su3_report::CheckReport;

use crate::omega::EvalMethod;
use crate::{asym, identities, omega, render, repcount, suite};
use crate::{CliError, Config, Format, CACHE_ENV, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "su3", version, about = "Exact and high-precision checks for SU(3) representation counting")]
struct Cli {
    /// Working precision in bits (at least 64).
    #[arg(long, global = true, default_value_t = crate::config::DEFAULT_PREC)]
    prec: u32,
    /// Cache directory for r(n); overrides SU3_CACHE_DIR.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Output format: json, csv or text.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Tolerance override NAME=VALUE for checks whose name starts with NAME.
    #[arg(long = "tol", global = true)]
    tolerances: Vec<String>,
    /// Record wall time on each check (reports are then not reproducible).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// r(0..=N) by the partition DP, through the cache.
    Repcount {
        #[arg(long)]
        n_max: usize,
    },
    /// The Witten zeta function.
    Omega {
        #[command(subcommand)]
        cmd: OmegaCmd,
    },
    /// Exact summation identities and certificates.
    Identities {
        #[command(subcommand)]
        cmd: IdentitiesCmd,
    },
    /// Asymptotic constants and saddle-point diagnostics.
    Asym {
        #[command(subcommand)]
        cmd: AsymCmd,
    },
    /// The full acceptance suite.
    VerifyAll {
        /// Include the slow tier (exact r(n) to 1e5 and the trend grid).
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Subcommand, Debug)]
enum OmegaCmd {
    /// ω(s) at one point.
    Eval {
        /// RE or RE,IM.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value = "auto")]
        method: EvalMethod,
        /// Shift M of the continuation.
        #[arg(long = "M")]
        m: Option<u32>,
    },
    /// ω(0), trivial zeros, closed forms at integers.
    Special,
    /// Residues of ω and Γω.
    Residues {
        /// Half-integer poles 1/2 − k for k up to this value.
        #[arg(long, default_value_t = 2)]
        k_max: u32,
    },
    /// ω'(0) = log 2π and its cross-checks.
    Deriv0,
}

#[derive(Subcommand, Debug)]
enum IdentitiesCmd {
    /// The lacunary Bernoulli recurrence for n = 0..=N.
    Bernoulli {
        #[arg(long, default_value_t = 50)]
        n_max: u32,
    },
    /// The Eisenstein lift at n.
    Eisenstein {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 40)]
        qmax: usize,
    },
    /// WZ pair and creative-telescoping certificates.
    Wz {
        #[arg(long, default_value_t = 40)]
        n_max: u32,
        #[arg(long, default_value_t = 8)]
        ct_max: u32,
    },
    /// The two mod-6 identities for n = 1..=N.
    Mod6 {
        #[arg(long, default_value_t = 30)]
        n_max: u32,
    },
    /// The α, β linear system at n.
    Solve {
        #[arg(long)]
        n: u32,
        /// Solve the generalized system for weights 6n−2 and 6n instead.
        #[arg(long)]
        generalized: bool,
    },
}

#[derive(Subcommand, Debug)]
enum AsymCmd {
    /// A1..A4, K and the constants behind them.
    Constants,
    /// Saddle grid, trend checks and Δ(n).
    Verify {
        #[arg(long, value_delimiter = ',', default_values_t = vec![1000u64, 10000, 100000])]
        grid: Vec<u64>,
    },
    /// The local CLT diagnostic at n.
    Clt {
        #[arg(long)]
        n: u64,
    },
}

/// Runs with the process environment, printing to stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let env = std::env::var(CACHE_ENV).ok();
    run_to(argv, env, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Runs with an explicit cache-directory environment value and sinks.
pub fn run_to<I, T>(argv: I, cache_env: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, cache_env) {
        Ok((text, ok)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return crate::EXIT_INTERNAL;
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, cache_env: Option<String>) -> Result<(String, bool), CliError> {
    let mut cfg = Config::new(cli.prec, cli.cache_dir, cache_env, cli.format)?;
    for t in &cli.tolerances {
        cfg.add_tolerance(t)?;
    }
    cfg.timings = cli.timings;
    let p = cfg.prec;
    let mut csv: Option<String> = None;
    let (command, mut checks): (String, Vec<CheckReport>) = match cli.cmd {
        Cmd::Repcount { n_max } => {
            let r = repcount::series(n_max, cfg.ensure_cache_dir()?)?;
            csv = Some(repcount::series_csv(&r)?);
            (format!("repcount --n-max {n_max}"), repcount::checks(&r))
        }
        Cmd::Omega { cmd } => match cmd {
            OmegaCmd::Eval { s, method, m } => {
                let z = omega::parse_s(&s, p)?;
                ("omega eval".into(), omega::omega_eval(&z, method, m, p)?)
            }
            OmegaCmd::Special => ("omega special".into(), omega::omega_special(p)),
            OmegaCmd::Residues { k_max } => ("omega residues".into(), omega::omega_residues(p, k_max)),
            OmegaCmd::Deriv0 => ("omega deriv0".into(), omega::omega_deriv0_checks(p)),
        },
        Cmd::Identities { cmd } => match cmd {
            IdentitiesCmd::Bernoulli { n_max } => (format!("identities bernoulli --n-max {n_max}"), identities::bernoulli(n_max)),
            IdentitiesCmd::Eisenstein { n, qmax } => {
                if n == 0 {
                    return Err(CliError::Usage("--n must be at least 1".into()));
                }
                (format!("identities eisenstein --n {n} --qmax {qmax}"), identities::eisenstein([n], qmax))
            }
            IdentitiesCmd::Wz { n_max, ct_max } => ("identities wz".into(), identities::wz(n_max, ct_max)),
            IdentitiesCmd::Mod6 { n_max } => (format!("identities mod6 --n-max {n_max}"), identities::mod6(n_max, n_max.min(4))),
            IdentitiesCmd::Solve { n, generalized } => {
                if n == 0 {
                    return Err(CliError::Usage("--n must be at least 1".into()));
                }
                if generalized {
                    (format!("identities solve --n {n} --generalized"), identities::solve_generalized(n))
                } else {
                    if n > 12 {
                        return Err(CliError::Usage("--n must be at most 12".into()));
                    }
                    (format!("identities solve --n {n}"), identities::solve(n))
                }
            }
        },
        Cmd::Asym { cmd } => match cmd {
            AsymCmd::Constants => ("asym constants".into(), asym::constants_checks(p)),
            AsymCmd::Verify { grid } => {
                if grid.is_empty() || grid.contains(&0) {
                    return Err(CliError::Usage("--grid needs positive integers".into()));
                }
                let n_max = *grid.iter().max().expect("non-empty");
                let r = repcount::series(n_max as usize, cfg.ensure_cache_dir()?)?;
                let (rows, checks) = asym::verify_grid(&grid, &r, p);
                csv = Some(asym::csv(&rows, p));
                let g = grid.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",");
                (format!("asym verify --grid {g}"), checks)
            }
            AsymCmd::Clt { n } => {
                if n == 0 {
                    return Err(CliError::Usage("--n must be at least 1".into()));
                }
                let r = repcount::series(n as usize, cfg.ensure_cache_dir()?)?;
                let (row, checks) = asym::clt(n, &r, p);
                csv = row.map(|row| asym::csv(&[row], p));
                (format!("asym clt --n {n}"), checks)
            }
        },
        Cmd::VerifyAll { slow } => {
            cfg.slow = slow;
            let name = if slow { "verify-all --slow" } else { "verify-all" };
            (name.into(), suite::verify_all(&cfg)?)
        }
    };
    cfg.apply_tolerances(&mut checks);
    let report = render::report(&command, &cfg, checks);
    let text = render::render(&report, cfg.format, csv)?;
    Ok((text, report.all_passed()))
}
