//! ∫_0^∞ f(t) t^{s−1} dt = 2^s Γ(s) ω(s) checked numerically at integer s.
//!
//! Below t0 the four-term small-t expansion of f is integrated exactly;
//! its neglected part is O(t^{3/2}). Above t0, Gauss–Legendre on dyadic
//! intervals until f is negligible.

use rug::ops::Pow;
use rug::{Float, Integer};
use su3_numerics::{gauss_legendre, pi};
use su3_witten::{odd_value, omega_closed_even};

use crate::constants::powr;
use crate::expansions::f_expansion;
use crate::sums::{sums, DimTable};
use crate::AsymError;

#[derive(Debug, Clone)]
pub struct MellinCheck {
    pub s: u32,
    pub integral: Float,
    /// 2^s Γ(s) ω(s) from the closed forms.
    pub expected: Float,
    pub t0: f64,
}

pub fn mellin_check(s: u32, t0: f64, prec: u32) -> Result<MellinCheck, AsymError> {
    if s == 0 {
        return Err(AsymError::InvalidArgument("s must be a positive integer".into()));
    }
    let c = crate::constants(prec);
    let wp = prec + 16;
    let e = f_expansion(&c);
    let t0f = Float::with_val(wp, t0);
    // ∫_0^{t0} t^{s−1} c_α t^α dt = c_α t0^{s+α}/(s+α), α = −2/3, −1/2, 0, 1/2
    let piece = |coef: &Float, p: i32, q: u32| -> Float {
        // s + p/q = (s q + p)/q
        let num = s as i32 * q as i32 + p;
        Float::with_val(wp, coef * powr(&t0f, num, q)) * q / num as u32
    };
    let mut total = piece(&e.i, -2, 3) + piece(&e.c_half, -1, 2) + piece(&e.c_zero, 0, 1) + piece(&e.c_neg, 1, 2);

    let (xs, ws) = gauss_legendre(40, wp);
    let table = DimTable::for_t(t0, prec);
    let mut a = t0;
    loop {
        let b = 2.0 * a;
        let mid = Float::with_val(wp, (a + b) / 2.0);
        let half = Float::with_val(wp, (b - a) / 2.0);
        let mut acc = Float::new(wp);
        for (x, w) in xs.iter().zip(&ws) {
            let t = Float::with_val(wp, &mid + Float::with_val(wp, &half * x));
            let f = sums(&t, prec, Some(&table))?.f.value;
            let tp = Float::with_val(wp, (&t).pow(s - 1));
            acc += Float::with_val(wp, w * f) * tp;
        }
        let part = acc * &half;
        total += &part;
        // f(t) ≤ 2 e^{-t} once t ≥ 1
        if a > 1.0 && (-(a) + (s as f64) * a.ln()).exp() < 2f64.powi(-(prec as i32) - 8) {
            break;
        }
        a = b;
    }

    let pw = Float::with_val(wp, Integer::from(1) << s);
    let gamma_s = Float::with_val(wp, Integer::from(Integer::factorial(s - 1)));
    let omega = if s % 2 == 0 {
        Float::with_val(wp, &omega_closed_even(s / 2)) * pi(wp).pow(3 * s)
    } else {
        odd_value((s - 1) / 2, wp)
    };
    Ok(MellinCheck {
        s,
        integral: Float::with_val(prec, total),
        expected: Float::with_val(prec, pw * gamma_s * omega),
        t0,
    })
}
