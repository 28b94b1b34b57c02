//! f(t), h(t) = log G(e^{-t}) and the moments of N, summed over dimensions.
//!
//! With a_d irreducibles of dimension d,
//!   f(t)    = Σ a_d e^{-dt},
//!   h(t)    = Σ a_d (−log(1 − e^{-dt})),
//!   E_t N   = Σ a_d d e^{-dt}/(1 − e^{-dt}),
//!   Var_t N = Σ a_d d² e^{-dt}/(1 − e^{-dt})².
//! Terms with dt > C are dropped. Because the lattice sum is a lower Riemann
//! sum of a decreasing function, f(t) ≤ I t^{-2/3}, and splitting
//! e^{-x} = e^{-7x/8} e^{-x/8} bounds every dropped tail by
//! c(C, t) e^{-7C/8} f(t/8) ≤ c(C, t) e^{-7C/8} 4 I t^{-2/3}.

use rug::ops::Pow;
use rug::Float;
use su3_numerics::ApReal;
use su3_repcount::dimension_support;

use crate::AsymError;

/// The four sums at one t, each with a bound on its truncation error.
#[derive(Debug, Clone)]
pub struct Sums {
    pub t: Float,
    pub f: ApReal,
    pub h: ApReal,
    pub en: ApReal,
    pub var: ApReal,
    /// Number of distinct dimensions summed.
    pub terms: usize,
}

/// State of the geometric model at parameter t.
#[derive(Debug, Clone)]
pub struct ModelState {
    pub t: Float,
    pub en: ApReal,
    pub var: ApReal,
    /// h(t) = log G(e^{-t}).
    pub log_g: ApReal,
}

/// Exponent cutoff C for a given precision and t.
pub fn cutoff(t: f64, prec: u32) -> f64 {
    let ln_inv_t = (1.0 / t).ln().max(0.0);
    8.0 / 7.0 * ((prec as f64 + 40.0) * std::f64::consts::LN_2 + 3.0 * ln_inv_t) + 8.0
}

/// Dimensions and multiplicities sorted ascending, reusable across t.
#[derive(Debug, Clone)]
pub struct DimTable {
    pub d_max: u64,
    pub support: Vec<(u64, u32)>,
}

impl DimTable {
    pub fn new(d_max: u64) -> Self {
        DimTable { d_max, support: dimension_support(d_max) }
    }

    /// A table large enough for every t ≥ t_min at `prec`.
    pub fn for_t(t_min: f64, prec: u32) -> Self {
        Self::new((cutoff(t_min, prec) / t_min).ceil() as u64)
    }

    pub fn covers(&self, t: f64, prec: u32) -> bool {
        (cutoff(t, prec) / t).ceil() as u64 <= self.d_max
    }
}

fn check_t(t: &Float) -> Result<f64, AsymError> {
    let tf = t.to_f64();
    if !(tf > 0.0) || !tf.is_finite() {
        return Err(AsymError::DomainError(format!("t must be positive and finite, got {tf}")));
    }
    Ok(tf)
}

/// All four sums at t, using `table` (built on demand when absent or short).
pub fn sums(t: &Float, prec: u32, table: Option<&DimTable>) -> Result<Sums, AsymError> {
    let tf = check_t(t)?;
    let owned;
    let table = match table {
        Some(tb) if tb.covers(tf, prec) => tb,
        _ => {
            owned = DimTable::for_t(tf, prec);
            &owned
        }
    };
    let wp = prec + 32;
    let c = cutoff(tf, prec);
    let d_max = (c / tf).ceil() as u64;
    let t = Float::with_val(wp, t);
    let mut f = Float::new(wp);
    let mut h = Float::new(wp);
    let mut en = Float::new(wp);
    let mut var = Float::new(wp);
    let mut terms = 0;
    for &(d, a) in &table.support {
        if d > d_max {
            break;
        }
        terms += 1;
        let x = Float::with_val(wp, &t * d);
        let e = Float::with_val(wp, -&x).exp();
        // 1 − e^{-x} without cancellation for small x
        let om = -Float::with_val(wp, -&x).exp_m1();
        let l = -Float::with_val(wp, om.ln_ref());
        let ratio = Float::with_val(wp, &e / &om);
        let de = Float::with_val(wp, &ratio * d);
        let de2 = Float::with_val(wp, &de * d) / &om;
        f += Float::with_val(wp, &e * a);
        h += l * a;
        en += de * a;
        var += de2 * a;
    }
    // truncation bounds
    let i_bound = 4.0 * 2f64.powf(2.0 / 3.0) * 2.678_938_534_707_747_6f64.powi(2) / 3.0 * tf.powf(-2.0 / 3.0);
    let base = (-7.0 * c / 8.0).exp() * i_bound;
    let tails = [base, 2.0 * base, 2.0 * c / tf * base, 4.0 * (c / tf).powi(2) * base];
    // rounding: one relative ulp per term
    let round = |v: &Float| Float::with_val(53, v.abs_ref()) * (terms as f64 + 1.0) * 2f64.powi(-(wp as i32) + 2);
    let mk = |v: Float, tail: f64| {
        let err = round(&v) + tail;
        ApReal::new(Float::with_val(prec, v), err)
    };
    Ok(Sums {
        t: Float::with_val(prec, &t),
        f: mk(f, tails[0]),
        h: mk(h, tails[1]),
        en: mk(en, tails[2]),
        var: mk(var, tails[3]),
        terms,
    })
}

/// f(t) = Σ_{j,k} exp(−jk(j+k)t/2).
pub fn f_eval(t: &Float, prec: u32) -> Result<ApReal, AsymError> {
    Ok(sums(t, prec, None)?.f)
}

/// h(t) = log G(e^{-t}) = Σ_m f(mt)/m.
pub fn h_eval(t: &Float, prec: u32) -> Result<ApReal, AsymError> {
    Ok(sums(t, prec, None)?.h)
}

/// h(t) as the harmonic sum Σ_m f(mt)/m, truncated once f(mt)/m is below
/// 2^{-prec} h; an independent route to [`h_eval`].
pub fn h_harmonic(t: &Float, prec: u32) -> Result<Float, AsymError> {
    let tf = check_t(t)?;
    let table = DimTable::for_t(tf, prec);
    let wp = prec + 16;
    let mut acc = Float::new(wp);
    let eps = Float::with_val(53, 2).pow(-(prec as i32));
    for m in 1u32.. {
        let tm = Float::with_val(wp, t * m);
        let fm = sums(&tm, prec, Some(&table))?.f.value;
        let term = Float::with_val(wp, &fm / m);
        acc += &term;
        if Float::with_val(53, &term) < Float::with_val(53, &acc * &eps) {
            break;
        }
    }
    Ok(Float::with_val(prec, acc))
}

/// E_t N, Var_t N and h(t).
pub fn moments(t: &Float, prec: u32) -> Result<ModelState, AsymError> {
    moments_with(t, prec, None)
}

pub fn moments_with(t: &Float, prec: u32, table: Option<&DimTable>) -> Result<ModelState, AsymError> {
    let s = sums(t, prec, table)?;
    Ok(ModelState { t: s.t, en: s.en, var: s.var, log_g: s.h })
}
