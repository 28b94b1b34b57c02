use std::path::PathBuf;

use su3_cli::{run_to, Config, Format, CACHE_ENV};
use su3_report::{Report, Status};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run_env(args: &[&str], env: Option<&str>) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("su3").chain(args.iter().copied());
    let code = run_to(argv, env.map(String::from), &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn run(args: &[&str], cache: &std::path::Path) -> Run {
    let mut v = args.to_vec();
    let c = cache.to_str().unwrap();
    v.extend(["--cache-dir", c]);
    run_env(&v, None)
}

#[test]
fn omega_special_reports_one_third() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["omega", "special", "--format", "json"], dir.path());
    assert_eq!(r.code, 0, "{}", r.err);
    let rep = Report::from_json(&r.out).unwrap();
    let c = rep.checks.iter().find(|c| c.name == "omega.value_at_0").unwrap();
    assert_eq!(c.status, Status::Pass);
    assert!(c.lhs.starts_with("3.333333333333333"));
    let m = rep.checks.iter().find(|c| c.name == "omega.cube_integral.n=0.expected-mismatch").unwrap();
    assert_eq!((m.status, m.lhs.as_str(), m.abs_err.as_str()), (Status::Pass, "-1/6", "1/2"));
    assert_eq!(rep.failed, 0);
}

#[test]
fn bernoulli_lines() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["identities", "bernoulli", "--n-max", "50"], dir.path());
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.out.lines().filter(|l| l.starts_with("[pass]")).collect();
    assert_eq!(lines.len(), 51);
    assert!(lines[0].contains("identities.bernoulli.n=0.expected-mismatch") && lines[0].contains("err 1/12"));
}

#[test]
fn constants_json_carries_a1() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["asym", "constants", "--format", "json"], dir.path());
    assert_eq!(r.code, 0, "{}", r.err);
    let rep = Report::from_json(&r.out).unwrap();
    let a1 = rep.checks.iter().find(|c| c.name == "asym.constant.A1").unwrap();
    assert!(a1.lhs.starts_with("6.858260476163126"));
    assert_eq!(rep.config["prec_bits"], 256);
}

#[test]
fn json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["identities", "solve", "--n", "2", "--format", "json"], dir.path());
    let rep = Report::from_json(&r.out).unwrap();
    assert_eq!(rep.to_json() + "\n", r.out);
    assert_eq!(rep.tool, "su3");
    assert_eq!(rep.command, "identities solve --n 2");
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["omega", "special", "--format", "json"][..], &["repcount", "--n-max", "300", "--format", "csv"][..]] {
        let a = run(args, dir.path());
        let b = run(args, dir.path());
        assert_eq!(a.code, 0);
        assert_eq!(a.out, b.out);
    }
}

#[test]
fn timings_only_on_request() {
    let dir = tempfile::tempdir().unwrap();
    let plain = Report::from_json(&run(&["identities", "wz", "--format", "json"], dir.path()).out).unwrap();
    assert!(plain.checks.iter().all(|c| c.elapsed_ms.is_none()));
    let r = run(&["verify-all", "--format", "json", "--timings", "--prec", "64", "--tol", "zzz=1"], dir.path());
    let timed = Report::from_json(&r.out).unwrap();
    assert!(timed.checks.iter().any(|c| c.elapsed_ms.is_some()));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["omega"][..],
        &["frobnicate"][..],
        &["omega", "special", "--prec", "32"][..],
        &["omega", "eval", "--s", "0.2", "--method", "direct"][..],
        &["omega", "eval", "--s", "3", "--method", "continued", "--M", "2"][..],
        &["omega", "eval", "--s", "1,2,3"][..],
        &["omega", "eval", "--s", "abc"][..],
        &["identities", "solve", "--n", "0"][..],
        &["asym", "verify", "--grid", "0,10"][..],
        &["omega", "special", "--format", "yaml"][..],
        &["omega", "special", "--tol", "nonsense"][..],
    ] {
        let r = run(args, dir.path());
        assert_eq!(r.code, 2, "{args:?}: {}", r.err);
        assert!(!r.err.is_empty());
        assert!(r.out.is_empty());
    }
    assert_eq!(run(&["--help"], dir.path()).code, 0);
}

#[test]
fn internal_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    // a cache file that cannot be parsed
    std::fs::write(dir.path().join("su3-rcount.txt"), "garbage\n").unwrap();
    let r = run(&["repcount", "--n-max", "10"], dir.path());
    assert_eq!(r.code, 3);
    assert!(r.err.contains("internal error"), "{}", r.err);
}

#[test]
fn check_failures_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    // a tolerance tighter than the achieved error turns a pass into a failure
    let r = run(&["omega", "special", "--tol", "omega.value_at_0=0"], dir.path());
    assert_eq!(r.code, 0, "exact zero error still passes a zero tolerance");
    let r = run(&["omega", "deriv0", "--tol", "omega.deriv0.printed=1e-40"], dir.path());
    assert_eq!(r.code, 1);
    assert!(r.out.contains("[fail] omega.deriv0.printed"));
}

#[test]
fn tolerance_overrides_never_loosen_exact_checks() {
    let mut cfg = Config::default();
    cfg.add_tolerance("identities=1e10").unwrap();
    let mut checks = vec![su3_report::CheckReport::exact(
        "identities.x",
        &rug::Rational::from(1),
        &rug::Rational::from(2),
        "",
    )];
    cfg.apply_tolerances(&mut checks);
    assert_eq!(checks[0].status, Status::Fail);
}

#[test]
fn cache_dir_precedence() {
    let flag = PathBuf::from("/flag");
    let c = Config::new(256, Some(flag.clone()), Some("/env".into()), Format::Text).unwrap();
    assert_eq!(c.cache_dir, flag);
    let c = Config::new(256, None, Some("/env".into()), Format::Text).unwrap();
    assert_eq!(c.cache_dir, PathBuf::from("/env"));
    let c = Config::new(256, None, None, Format::Text).unwrap();
    assert_eq!(c.cache_dir, Config::default().cache_dir);
    assert_eq!(CACHE_ENV, "SU3_CACHE_DIR");

    // the environment value reaches the cache
    let dir = tempfile::tempdir().unwrap();
    let r = run_env(&["repcount", "--n-max", "20", "--format", "json"], dir.path().to_str());
    assert_eq!(r.code, 0);
    assert!(dir.path().join("su3-rcount.txt").exists());
    let rep = Report::from_json(&r.out).unwrap();
    assert_eq!(rep.config["cache_dir"], dir.path().display().to_string());
}

#[test]
fn repcount_csv_and_values() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["repcount", "--n-max", "13", "--format", "csv"], dir.path());
    assert_eq!(r.code, 0);
    let rows: Vec<&str> = r.out.lines().collect();
    assert_eq!(rows[0], "n,r");
    assert_eq!(rows[14], "13,39");
    let t = run(&["repcount", "--n-max", "13"], dir.path());
    assert!(t.out.contains("[pass] repcount.initial_values.n=0..13"));
}

#[test]
fn omega_eval_methods_agree() {
    let dir = tempfile::tempdir().unwrap();
    let get = |method: &str| {
        let r = run(&["omega", "eval", "--s", "2.5,1", "--method", method, "--format", "json", "--prec", "128"], dir.path());
        assert_eq!(r.code, 0, "{}", r.err);
        Report::from_json(&r.out).unwrap().checks[0].clone()
    };
    let d = get("direct");
    let c = get("continued");
    assert_eq!(d.rhs, "direct");
    assert!(c.rhs.starts_with("continued"));
    assert_eq!(&d.lhs[..30], &c.lhs[..30]);
}

#[test]
fn asym_grid_csv_header() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["asym", "verify", "--grid", "200,400", "--format", "csv", "--prec", "128"], dir.path());
    let rows: Vec<&str> = r.out.lines().collect();
    assert_eq!(rows[0], "n,t_n,EN,VarN,P,ratio,Delta");
    assert_eq!(rows.len(), 3);
    assert!(rows[1].starts_with("200,"));
    let clt = run(&["asym", "clt", "--n", "1000", "--prec", "128"], dir.path());
    assert_eq!(clt.code, 0, "{}", clt.out);
    assert!(clt.out.contains("[pass] asym.clt.n=1000"));
}
