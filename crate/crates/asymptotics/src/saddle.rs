//! The saddle point t_n, the local CLT diagnostic and the comparison of the
//! asymptotic formula with exact r(n).

use rug::Float;
use su3_numerics::{pi, ApReal};
use su3_repcount::IntSeries;
use su3_report::{float_str, CheckReport};

use crate::constants::{powr, AsymptoticConstants};
use crate::sums::{moments_with, DimTable};
use crate::AsymError;

/// t_n = τ1 n^{-3/5} − τ2 n^{-7/10} − τ3 n^{-4/5}.
pub fn saddle(n: u64, c: &AsymptoticConstants) -> Result<Float, AsymError> {
    if n == 0 {
        return Err(AsymError::InvalidArgument("n must be at least 1".into()));
    }
    let wp = c.prec + 16;
    let nf = Float::with_val(wp, n);
    let t = Float::with_val(wp, &c.tau1 * powr(&nf, -3, 5))
        - Float::with_val(wp, &c.tau2 * powr(&nf, -7, 10))
        - Float::with_val(wp, &c.tau3 * powr(&nf, -4, 5));
    if t <= 0 {
        return Err(AsymError::NonPositive { n });
    }
    Ok(Float::with_val(c.prec, t))
}

/// Everything computed at one n; the columns of the CSV output.
#[derive(Debug, Clone)]
pub struct SaddleRow {
    pub n: u64,
    pub t: Float,
    pub en: ApReal,
    pub var: ApReal,
    pub log_g: ApReal,
    /// log r(n), exact r(n) from the DP.
    pub log_r: Float,
    /// P_{t_n}(N = n) = exp(−n t_n − h(t_n)) r(n).
    pub p: Float,
    /// P √(2π Var).
    pub ratio: Float,
    /// P over √3 X/√(5π) n^{-4/5}.
    pub ratio_closed: Float,
    /// log r(n) minus the log of the asymptotic formula.
    pub delta: Float,
    /// Δ recomputed as n t_n + h(t_n) + log P minus the formula.
    pub delta_via_rofn: Float,
}

/// log of K n^{-3/5} exp(A1 n^{2/5} − A2 n^{3/10} − A3 n^{1/5} − A4 n^{1/10}).
pub fn log_formula(n: u64, c: &AsymptoticConstants) -> Float {
    let wp = c.prec + 16;
    let nf = Float::with_val(wp, n);
    let q = powr(&nf, 1, 10);
    let q2 = Float::with_val(wp, q.square_ref());
    let q3 = Float::with_val(wp, &q2 * &q);
    let q4 = Float::with_val(wp, q2.square_ref());
    let mut v = Float::with_val(wp, &c.a1 * &q4);
    v -= Float::with_val(wp, &c.a2 * &q3);
    v -= Float::with_val(wp, &c.a3 * &q2);
    v -= Float::with_val(wp, &c.a4 * &q);
    v += c.log_k();
    v -= Float::with_val(wp, nf.ln_ref()) * 3u32 / 5u32;
    v
}

fn coefficient<'a>(r: &'a IntSeries, n: u64) -> Result<&'a rug::Integer, AsymError> {
    r.get(n as usize).ok_or(AsymError::MissingCoefficient { n, have: r.n() as u64 })
}

/// All quantities at n. `table` may be shared across several n.
pub fn saddle_row(
    n: u64,
    r: &IntSeries,
    c: &AsymptoticConstants,
    prec: u32,
    table: Option<&DimTable>,
) -> Result<SaddleRow, AsymError> {
    let rn = coefficient(r, n)?;
    let wp = prec + 16;
    let t = saddle(n, c)?;
    let m = moments_with(&t, prec, table)?;
    let log_r = Float::with_val(wp, rn).ln();
    let nt = Float::with_val(wp, &t * n);
    let log_p = Float::with_val(wp, &log_r - &nt) - &m.log_g.value;
    let p = Float::with_val(wp, log_p.exp_ref());
    let two_pi_var = Float::with_val(wp, &m.var.value * pi(wp)) * 2u32;
    let ratio = Float::with_val(wp, &p * two_pi_var.sqrt());
    let pred = Float::with_val(wp, 3).sqrt() * &c.x / Float::with_val(wp, pi(wp) * 5u32).sqrt()
        * powr(&Float::with_val(wp, n), -4, 5);
    let ratio_closed = Float::with_val(wp, &p / pred);
    let formula = log_formula(n, c);
    let delta = Float::with_val(wp, &log_r - &formula);
    let delta_via_rofn = nt + &m.log_g.value + log_p - formula;
    let r = |x: Float| Float::with_val(prec, x);
    Ok(SaddleRow {
        n,
        t: m.t,
        en: m.en,
        var: m.var,
        log_g: m.log_g,
        log_r: r(log_r),
        p: r(p),
        ratio: r(ratio),
        ratio_closed: r(ratio_closed),
        delta: r(delta),
        delta_via_rofn: r(delta_via_rofn),
    })
}

/// Rows for a grid of n, sharing one dimension table.
pub fn saddle_grid(ns: &[u64], r: &IntSeries, c: &AsymptoticConstants, prec: u32) -> Result<Vec<SaddleRow>, AsymError> {
    let t_min = ns.iter().map(|&n| saddle(n, c).map(|t| t.to_f64())).collect::<Result<Vec<_>, _>>()?;
    let t_min = t_min.into_iter().fold(f64::INFINITY, f64::min);
    let table = DimTable::for_t(t_min, prec);
    ns.iter().map(|&n| saddle_row(n, r, c, prec, Some(&table))).collect()
}

/// P √(2π Var) at n, reported against the band [lo, hi].
pub fn clt_diagnostic(
    n: u64,
    r: &IntSeries,
    c: &AsymptoticConstants,
    prec: u32,
    band: (f64, f64),
) -> Result<(SaddleRow, CheckReport), AsymError> {
    let row = saddle_row(n, r, c, prec, None)?;
    let x = row.ratio.to_f64();
    let violation = (band.0 - x).max(x - band.1);
    let rep = CheckReport::predicate(
        format!("asym.clt.n={n}"),
        float_str(&row.ratio, 12),
        format!("[{}, {}]", band.0, band.1),
        violation,
        format!("P*sqrt(2 pi Var); P over the closed form = {}", float_str(&row.ratio_closed, 12)),
    );
    Ok((row, rep))
}

/// Δ(n) = log r(n) − log formula, reported against |Δ| ≤ bound.
pub fn formula_vs_exact(
    n: u64,
    r: &IntSeries,
    c: &AsymptoticConstants,
    prec: u32,
    bound: f64,
) -> Result<(SaddleRow, CheckReport), AsymError> {
    let row = saddle_row(n, r, c, prec, None)?;
    let d = row.delta.to_f64();
    let rep = CheckReport::predicate(
        format!("asym.delta.n={n}"),
        float_str(&row.delta, 12),
        format!("|delta| <= {bound}"),
        d.abs() - bound,
        "log r(n) minus log of the asymptotic formula",
    );
    Ok((row, rep))
}

/// Σ_{n ≤ N} P_t(N = n) over the whole series.
pub fn normalization(t: &Float, r: &IntSeries, prec: u32) -> Result<Float, AsymError> {
    let wp = prec + 16;
    let m = moments_with(t, prec, None)?;
    let mut acc = Float::new(wp);
    for (n, rn) in r.coeffs.iter().enumerate() {
        if *rn == 0 {
            continue;
        }
        let lp = Float::with_val(wp, rn).ln() - Float::with_val(wp, t * n as u64) - &m.log_g.value;
        acc += lp.exp();
    }
    Ok(Float::with_val(prec, acc))
}

/// The four trend checks over a grid sorted by n:
/// (a) |E N − n|/n^{7/10} bounded with max/min < 10,
/// (b) Var/((5/6) X^{-2} n^{8/5}) within [0.9, 1.1] at the largest n,
/// (c) |Δ| strictly decreasing,
/// (d) |P √(2π Var) − 1| strictly decreasing.
pub fn trend_checks(rows: &[SaddleRow], c: &AsymptoticConstants) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.6e}")).collect::<Vec<_>>().join(", ");
    let ns = rows.iter().map(|r| r.n.to_string()).collect::<Vec<_>>().join(",");

    let a: Vec<f64> = rows
        .iter()
        .map(|r| (r.en.value.to_f64() - r.n as f64).abs() / (r.n as f64).powf(0.7))
        .collect();
    let (lo, hi) = a.iter().fold((f64::INFINITY, 0f64), |(l, h), &x| (l.min(x), h.max(x)));
    out.push(CheckReport::predicate(
        format!("asym.trend.mean_error.n={ns}"),
        fmt(&a),
        "max/min < 10",
        if lo > 0.0 { hi / lo - 10.0 } else { f64::INFINITY },
        "|E N - n| / n^(7/10)",
    ));

    if let Some(last) = rows.last() {
        let x2 = Float::with_val(64, c.x.square_ref()).to_f64();
        let pred = 5.0 / 6.0 / x2 * (last.n as f64).powf(1.6);
        let v = last.var.value.to_f64() / pred;
        out.push(CheckReport::predicate(
            format!("asym.trend.variance.n={}", last.n),
            format!("{v:.9}"),
            "[0.9, 1.1]",
            (0.9 - v).max(v - 1.1),
            "Var / ((5/6) X^-2 n^(8/5))",
        ));
    }

    let strictly_decreasing = |v: &[f64]| v.windows(2).all(|w| w[1] < w[0]);
    let d: Vec<f64> = rows.iter().map(|r| r.delta.to_f64().abs()).collect();
    out.push(CheckReport::truth(
        format!("asym.trend.delta.n={ns}"),
        fmt(&d),
        "strictly decreasing",
        strictly_decreasing(&d),
        "|log r(n) - log formula|",
    ));
    let q: Vec<f64> = rows.iter().map(|r| (r.ratio.to_f64() - 1.0).abs()).collect();
    out.push(CheckReport::truth(
        format!("asym.trend.clt.n={ns}"),
        fmt(&q),
        "strictly decreasing",
        strictly_decreasing(&q),
        "|P sqrt(2 pi Var) - 1|",
    ));
    out
}

/// CSV with columns n, t_n, EN, VarN, P, ratio, Delta.
pub fn grid_csv(rows: &[SaddleRow], digits: usize) -> String {
    let mut s = String::from("n,t_n,EN,VarN,P,ratio,Delta\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n,
            float_str(&r.t, digits),
            float_str(&r.en.value, digits),
            float_str(&r.var.value, digits),
            float_str(&r.p, digits),
            float_str(&r.ratio, digits),
            float_str(&r.delta, digits),
        ));
    }
    s
}
