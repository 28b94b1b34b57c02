//! Asymptotic constants and the saddle-point diagnostics.

use rug::Float;
use su3_asym::{
    clt_diagnostic, constants, grid_csv, integral_i, k_via_omega_deriv0, mellin_check, saddle_grid, trend_checks,
    AsymptoticConstants, SaddleRow,
};
use su3_report::{digits_for, float_str, CheckReport};
use su3_repcount::IntSeries;

use crate::util::{ten_pow, two_pow};

/// Printed truncations of A1..A4 and K.
pub const PRINTED: [(&str, &str); 5] = [
    ("A1", "6.858260476163126"),
    ("A2", "5.773601745105114"),
    ("A3", "0.911341072572436"),
    ("A4", "0.351637541558209"),
    ("K", "2.4462903348641789"),
];

/// Δ(n) = log r(n) − log formula, frozen from the first run at 128 bits.
pub const FROZEN_DELTA: [(u64, &str); 3] =
    [(1000, "-0.1765488372"), (10000, "-0.1281260137"), (100000, "-0.0954212665")];

/// Band for P √(2π Var) at every n ≥ 10³, frozen from the same run.
pub const CLT_BAND: (f64, f64) = (0.99, 1.01);

/// Precision of the K cross-check through ω'(0).
pub const K_CHECK_PREC: u32 = 128;

/// `v` truncated to `digits` decimals, for 0 ≤ v < 10.
fn truncate(v: &Float, digits: usize) -> String {
    use rug::ops::Pow;
    let scale = rug::Integer::from(10u32).pow(digits as u32);
    let scaled = Float::with_val(v.prec(), v * &scale).floor();
    let int = scaled.to_integer().map(|i| i.to_string()).unwrap_or_default();
    let int = format!("{int:0>width$}", width = digits + 1);
    let (a, b) = int.split_at(int.len() - digits);
    format!("{a}.{b}")
}

fn lookup<'a>(c: &'a AsymptoticConstants, name: &str) -> &'a Float {
    c.named().into_iter().find(|(n, _)| *n == name).map(|(_, v)| v).expect("known constant")
}

/// Every constant's value, the printed decimals, the relations between
/// them, the double integral three ways, and K through ω'(0).
pub fn constants_checks(prec: u32) -> Vec<CheckReport> {
    let c = constants(prec);
    let digits = digits_for(prec);
    let mut out: Vec<CheckReport> = c
        .named()
        .into_iter()
        .map(|(name, v)| CheckReport::truth(format!("asym.constant.{name}"), float_str(v, digits), "", true, "value"))
        .collect();
    out.extend(printed_checks(&c));
    let tol = two_pow(32 - prec as i32, prec);
    for (name, l, r) in c.relations() {
        out.push(CheckReport::numeric(format!("asym.relation.{name}"), &l, &r, &tol, digits, ""));
    }
    let i = integral_i(prec);
    let tol_i = two_pow(32 - prec as i32, prec);
    out.push(CheckReport::numeric("asym.integral_I.quadrature", &i.quadrature, &i.closed, &tol_i, digits, "trapezoid after w = e^u"));
    out.push(CheckReport::numeric("asym.integral_I.beta", &i.beta, &i.closed, &tol_i, digits, "Gamma(2/3) B(1/6,1/3)/3"));
    out.push(k_cross_check());
    out
}

/// The printed decimals as truncations of the computed values.
pub fn printed_checks(c: &AsymptoticConstants) -> Vec<CheckReport> {
    PRINTED
        .iter()
        .map(|(name, printed)| {
            let digits = printed.len() - printed.find('.').expect("decimal point") - 1;
            let got = truncate(lookup(c, name), digits);
            CheckReport::truth(format!("asym.printed.{name}"), got.clone(), *printed, got == *printed, format!("{digits} decimals"))
        })
        .collect()
}

/// K from its simplified form against K through ω'(0).
pub fn k_cross_check() -> CheckReport {
    let c = constants(K_CHECK_PREC);
    match k_via_omega_deriv0(&c) {
        Ok(k) => CheckReport::numeric(
            "asym.K.two_formulas",
            &c.k,
            &k.value,
            &ten_pow(-30, K_CHECK_PREC),
            digits_for(K_CHECK_PREC),
            format!("at {K_CHECK_PREC} bits"),
        ),
        Err(e) => CheckReport::error("asym.K.two_formulas", e),
    }
}

/// The Mellin transform of f at s against 2^s Γ(s) ω(s).
pub fn mellin(s: u32, prec: u32) -> CheckReport {
    let name = format!("asym.mellin.s={s}");
    match mellin_check(s, 1.0 / 256.0, prec) {
        Ok(m) => CheckReport::numeric(name, &m.integral, &m.expected, &ten_pow(-10, prec), 20, "expansion below t0, Gauss-Legendre above"),
        Err(e) => CheckReport::error(name, e),
    }
}

/// Saddle rows on a grid plus the four trend checks, the Δ bound and the
/// frozen Δ values.
pub fn verify_grid(ns: &[u64], r: &IntSeries, prec: u32) -> (Vec<SaddleRow>, Vec<CheckReport>) {
    let c = constants(prec);
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let rows = match saddle_grid(&ns, r, &c, prec) {
        Ok(rows) => rows,
        Err(e) => return (Vec::new(), vec![CheckReport::error("asym.grid", e)]),
    };
    let mut out = Vec::new();
    for row in &rows {
        out.extend(row_checks(row, prec));
    }
    if rows.len() >= 2 {
        out.extend(trend_checks(&rows, &c));
    }
    (rows, out)
}

/// Checks on a single saddle row.
pub fn row_checks(row: &SaddleRow, prec: u32) -> Vec<CheckReport> {
    let n = row.n;
    let mut out = Vec::new();
    let d = row.delta.to_f64();
    out.push(CheckReport::predicate(
        format!("asym.delta.n={n}"),
        float_str(&row.delta, 12),
        "|delta| < 1",
        d.abs() - 1.0,
        "log r(n) minus log of the asymptotic formula",
    ));
    out.push(CheckReport::numeric(
        format!("asym.delta_routes.n={n}"),
        &row.delta_via_rofn,
        &row.delta,
        &ten_pow(-6, prec),
        12,
        "n t_n + h(t_n) + log P against the direct route",
    ));
    if let Some((_, frozen)) = FROZEN_DELTA.iter().find(|(m, _)| *m == n) {
        let want = Float::with_val(prec, Float::parse(frozen).expect("literal"));
        out.push(CheckReport::numeric(format!("asym.delta_frozen.n={n}"), &row.delta, &want, &ten_pow(-9, prec), 12, "frozen reference"));
    }
    let x = row.ratio.to_f64();
    out.push(CheckReport::predicate(
        format!("asym.clt.n={n}"),
        float_str(&row.ratio, 12),
        format!("[{}, {}]", CLT_BAND.0, CLT_BAND.1),
        (CLT_BAND.0 - x).max(x - CLT_BAND.1),
        "P sqrt(2 pi Var)",
    ));
    out
}

/// The local CLT diagnostic at one n.
pub fn clt(n: u64, r: &IntSeries, prec: u32) -> (Option<SaddleRow>, Vec<CheckReport>) {
    let c = constants(prec);
    match clt_diagnostic(n, r, &c, prec, CLT_BAND) {
        Ok((row, rep)) => (Some(row), vec![rep]),
        Err(e) => (None, vec![CheckReport::error(format!("asym.clt.n={n}"), e)]),
    }
}

/// The grid as CSV with columns n, t_n, EN, VarN, P, ratio, Delta.
pub fn csv(rows: &[SaddleRow], prec: u32) -> String {
    grid_csv(rows, digits_for(prec).min(30))
}
