use std::sync::OnceLock;

use rug::Float;
use su3_asym::*;
use su3_repcount::{decimal_digits, expand_r, IntSeries};

const PREC: u32 = 128;

fn series() -> &'static IntSeries {
    static R: OnceLock<IntSeries> = OnceLock::new();
    R.get_or_init(|| expand_r(20_000))
}

fn consts() -> &'static AsymptoticConstants {
    static C: OnceLock<AsymptoticConstants> = OnceLock::new();
    C.get_or_init(|| constants(PREC))
}

#[test]
fn saddle_point_is_positive_from_n_one() {
    let c = consts();
    assert!(matches!(saddle(0, c), Err(AsymError::InvalidArgument(_))));
    // τ1 > τ2 + τ3, so t_n > 0 for every n ≥ 1
    for n in 1..=2000 {
        assert!(saddle(n, c).unwrap() > 0, "n = {n}");
    }
    let t1 = saddle(1, c).unwrap();
    let want = Float::with_val(PREC, &c.tau1 - &c.tau2) - &c.tau3;
    assert_eq!(t1, want);
}

#[test]
fn expectation_tracks_n() {
    let c = consts();
    let mut scaled = Vec::new();
    for n in [1_000u64, 10_000] {
        let t = saddle(n, c).unwrap();
        let en = moments(&t, PREC).unwrap().en.value.to_f64();
        assert!((0.9..=1.1).contains(&(en / n as f64)), "n = {n}");
        scaled.push((en - n as f64).abs() / (n as f64).powf(0.7));
    }
    assert!(scaled[0] / scaled[1] < 10.0 && scaled[1] / scaled[0] < 10.0, "{scaled:?}");
}

// The variance at t_n follows the three-term h'' expansion, while the
// leading term alone is still 30-40% off at these n: the first correction
// is of relative size n^{-1/10}.
#[test]
fn variance_at_the_saddle_point() {
    let c = consts();
    let mut ratios = Vec::new();
    for n in [1_000u64, 10_000] {
        let t = saddle(n, c).unwrap();
        let var = moments(&t, PREC).unwrap().var.value;
        let three_term = h2_expansion(c, &t);
        assert!((var.to_f64() / three_term.to_f64() - 1.0).abs() < 1e-3, "n = {n}");
        let x2 = c.x.to_f64().powi(2);
        ratios.push(var.to_f64() / (5.0 / 6.0 / x2 * (n as f64).powf(1.6)));
    }
    assert!(ratios[0] > ratios[1] && ratios[1] > 1.0, "{ratios:?}");
}

#[test]
fn local_clt_ratio() {
    let c = consts();
    let (a, ra) = clt_diagnostic(1_000, series(), c, PREC, (0.7, 1.3)).unwrap();
    let (b, rb) = clt_diagnostic(10_000, series(), c, PREC, (0.7, 1.3)).unwrap();
    assert!(ra.passed() && rb.passed(), "{}\n{}", ra.line(), rb.line());
    let dev = |r: &SaddleRow| (r.ratio.to_f64() - 1.0).abs();
    assert!(dev(&b) < dev(&a));
    // against the closed form √3 X/√(5π) n^{-4/5} the agreement is slower
    assert!(a.ratio_closed.to_f64() < b.ratio_closed.to_f64() && b.ratio_closed.to_f64() < 1.0);
}

#[test]
fn probabilities_sum_to_one() {
    let c = consts();
    let t = saddle(1_000, c).unwrap();
    let s = normalization(&t, series(), PREC).unwrap().to_f64();
    assert!((0.999..=1.0 + 1e-20).contains(&s), "{s}");
}

// Δ(n) = log r(n) − log formula; values frozen from the first run.
#[test]
fn formula_against_exact_counts() {
    let c = consts();
    let (a, rep) = formula_vs_exact(10_000, series(), c, PREC, 1.0).unwrap();
    assert!(rep.passed(), "{}", rep.line());
    let b = saddle_row(1_000, series(), c, PREC, None).unwrap();
    assert!((b.delta.to_f64() - -0.1765488372).abs() < 1e-8);
    assert!((a.delta.to_f64() - -0.1281260137).abs() < 1e-8);
    assert!(a.delta.to_f64().abs() < b.delta.to_f64().abs());
    for row in [&a, &b] {
        assert!(Float::with_val(PREC, &row.delta - &row.delta_via_rofn).abs().to_f64() < 1e-6);
    }
}

// r(10⁴) has 74 digits; the full formula predicts 73.9, the leading
// exponential A1 n^{2/5} alone about 119.
#[test]
fn digit_count_of_r() {
    let c = consts();
    let digits = decimal_digits(&series().coeffs[10_000]) as f64;
    let predicted = log_formula(10_000, c).to_f64() / std::f64::consts::LN_10;
    assert_eq!(digits, 74.0);
    assert!((digits - predicted).abs() < 0.05 * digits);
}

#[test]
fn missing_coefficients_are_reported() {
    let c = consts();
    let short = expand_r(100);
    assert_eq!(
        saddle_row(1_000, &short, c, PREC, None).unwrap_err(),
        AsymError::MissingCoefficient { n: 1_000, have: 100 }
    );
}

#[test]
fn grid_output_is_deterministic() {
    let c = consts();
    let a = saddle_grid(&[1_000, 5_000], series(), c, PREC).unwrap();
    let b = saddle_grid(&[1_000, 5_000], series(), c, PREC).unwrap();
    let csv = grid_csv(&a, 12);
    assert_eq!(csv, grid_csv(&b, 12));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,t_n,EN,VarN,P,ratio,Delta");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("1000,"));
    let checks = trend_checks(&a, c);
    assert_eq!(checks.len(), 4);
}
