use rug::{Float, Rational};
use su3_report::*;

#[test]
fn exact_checks() {
    let a = Rational::from((1, 3));
    let c = CheckReport::exact("x", &a, &a, "");
    assert_eq!(c.status, Status::Pass);
    assert_eq!(c.abs_err, "0");
    let d = CheckReport::exact("x", &a, &Rational::from((1, 4)), "");
    assert_eq!(d.status, Status::Fail);
    assert_eq!(d.abs_err, "1/12");
}

#[test]
fn expected_mismatch_needs_the_exact_difference() {
    let l = Rational::from((1, 12));
    let r = Rational::new();
    let c = CheckReport::expected_mismatch("b0", &l, &r, &l, "");
    assert_eq!(c.name, "b0.expected-mismatch");
    assert!(c.passed());
    let wrong = CheckReport::expected_mismatch("b0", &l, &r, &Rational::from(1), "");
    assert!(!wrong.passed());
    // agreement is not a mismatch
    assert!(!CheckReport::expected_mismatch("b0", &l, &l, &Rational::new(), "").passed());
}

#[test]
fn numeric_and_predicates() {
    let a = Float::with_val(64, 1.0);
    let b = Float::with_val(64, 1.0 + 1e-12);
    assert!(CheckReport::numeric("n", &a, &b, &Float::with_val(53, 1e-10), 10, "").passed());
    assert!(!CheckReport::numeric("n", &a, &b, &Float::with_val(53, 1e-14), 10, "").passed());
    assert!(CheckReport::predicate("p", "a", "b", -1.0, "").passed());
    assert!(!CheckReport::predicate("p", "a", "b", f64::NAN, "").passed());
}

#[test]
fn json_round_trip() {
    let checks = vec![
        CheckReport::exact("a", &Rational::from(1), &Rational::from(1), "note"),
        CheckReport::skip("b", "slow tier").with_elapsed(5),
        CheckReport::truth("c", "x", "y", false, ""),
    ];
    let r = Report::new("su3", "0.1.0", "test", serde_json::json!({"prec_bits": 256}), checks);
    assert_eq!((r.passed, r.failed), (1, 1));
    let back = Report::from_json(&r.to_json()).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["tool", "version", "command", "config", "checks", "passed", "failed"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}
