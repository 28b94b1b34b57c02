//! r(n) through the disk cache.

use std::path::Path;

use rug::Integer;
use su3_report::CheckReport;
use su3_repcount::{decimal_digits, expand_r_ordered, load_or_compute, FactorOrder, IntSeries};

use crate::CliError;

/// r(0), ..., r(13).
pub const PUBLISHED: [u32; 14] = [1, 1, 1, 3, 3, 3, 8, 8, 9, 17, 19, 21, 35, 39];

/// r(0..=n_max), read from or written to the cache in `dir`.
pub fn series(n_max: usize, dir: &Path) -> Result<IntSeries, CliError> {
    load_or_compute(n_max, dir).map_err(|e| CliError::Internal(e.to_string()))
}

fn list(v: &[Integer]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// The published initial values, independence of the factor order, and
/// r(n_max) itself.
pub fn checks(r: &IntSeries) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let k = r.n().min(PUBLISHED.len() - 1);
    let want: Vec<Integer> = PUBLISHED[..=k].iter().map(|&v| Integer::from(v)).collect();
    let got = &r.coeffs[..=k];
    out.push(CheckReport::truth(format!("repcount.initial_values.n=0..{k}"), list(got), list(&want), got == want.as_slice(), ""));

    let m = r.n().min(2000);
    let desc = expand_r_ordered(m, FactorOrder::Descending);
    out.push(CheckReport::truth(
        format!("repcount.factor_order.n=0..{m}"),
        "descending factors",
        "ascending factors",
        desc.coeffs[..] == r.coeffs[..=m],
        "the product does not depend on the order of its factors",
    ));

    let n = r.n();
    let top = &r.coeffs[n];
    out.push(CheckReport::truth(
        format!("repcount.value.n={n}"),
        top.to_string(),
        format!("{} digits", decimal_digits(top)),
        *top > 0,
        "r(n)",
    ));
    out
}

/// `n,r` rows for CSV output.
pub fn series_csv(r: &IntSeries) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Internal(e.to_string());
    w.write_record(["n", "r"]).map_err(io)?;
    for (i, v) in r.coeffs.iter().enumerate() {
        w.write_record([i.to_string(), v.to_string()]).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}
