//! Small-t expansions of f, h, h' and h'' from the poles of
//! 2^s Γ(s) ω(s) (for f) and 2^s Γ(s) ω(s) ζ(s+1) (for h).
//!
//! Poles at 2/3, 1/2, 0 and −1/2 contribute; the pole of Γ at −1 meets the
//! zero ω(−1) = 0, so the next correction after t^{1/2} is O(t^{3/2}).

use rug::{Complex, Float};
use su3_numerics::{ln_2pi, pi, zeta_raw};

use crate::constants::{powr, AsymptoticConstants};

fn zeta_real(x: f64, wp: u32) -> Float {
    zeta_raw(&Complex::with_val(wp, (x, 0)), wp).real().clone()
}

/// Coefficients of f(t) = I t^{-2/3} + c_half t^{-1/2} + 1/3 + c_neg t^{1/2} + O(t^{3/2}).
#[derive(Debug, Clone)]
pub struct FExpansion {
    pub i: Float,
    /// √(2π) ζ(1/2)
    pub c_half: Float,
    /// ω(0) = 1/3
    pub c_zero: Float,
    /// Γ(−1/2) 2^{-1/2} Res_{−1/2} ω = √π ζ(−5/2)/(4√2)
    pub c_neg: Float,
}

pub fn f_expansion(c: &AsymptoticConstants) -> FExpansion {
    let wp = c.prec + 16;
    let p = pi(wp);
    let sqrt_pi = Float::with_val(wp, p.sqrt_ref());
    let c_half = Float::with_val(wp, (p.clone() * 2u32).sqrt()) * zeta_real(0.5, wp);
    let c_neg = Float::with_val(wp, &sqrt_pi * zeta_real(-2.5, wp)) / 4u32 / Float::with_val(wp, 2).sqrt();
    FExpansion {
        i: c.i.clone(),
        c_half: Float::with_val(c.prec, c_half),
        c_zero: Float::with_val(c.prec, 1) / 3u32,
        c_neg: Float::with_val(c.prec, c_neg),
    }
}

impl FExpansion {
    /// The expansion through the t^{1/2} term, or through the constant if `!with_half`.
    pub fn eval(&self, t: &Float, with_half: bool) -> Float {
        let wp = t.prec() + 16;
        let t = Float::with_val(wp, t);
        let mut v = Float::with_val(wp, &self.i * powr(&t, -2, 3)) + Float::with_val(wp, &self.c_half * powr(&t, -1, 2));
        v += &self.c_zero;
        if with_half {
            v += Float::with_val(wp, &self.c_neg * powr(&t, 1, 2));
        }
        v
    }
}

/// Coefficient of t^{1/2} in h(t): the f coefficient times ζ(1/2).
pub fn h_half_coefficient(c: &AsymptoticConstants) -> Float {
    let wp = c.prec + 16;
    Float::with_val(c.prec, f_expansion(c).c_neg * zeta_real(0.5, wp))
}

/// μ1 t^{-2/3} + μ2 t^{-1/2} − (1/3) log t + log 2π + (1/3) log 2, using ω'(0) = log 2π.
pub fn h_expansion(c: &AsymptoticConstants, t: &Float) -> Float {
    let wp = t.prec() + 16;
    let t = Float::with_val(wp, t);
    let mut v = Float::with_val(wp, &c.mu1 * powr(&t, -2, 3)) + Float::with_val(wp, &c.mu2 * powr(&t, -1, 2));
    v -= Float::with_val(wp, t.ln_ref()) / 3u32;
    v += ln_2pi(wp);
    v += Float::with_val(wp, 2).ln() / 3u32;
    v
}

/// −(2/3) μ1 t^{-5/3} − (1/2) μ2 t^{-3/2} − (1/3) t^{-1}.
pub fn h1_expansion(c: &AsymptoticConstants, t: &Float) -> Float {
    let wp = t.prec() + 16;
    let t = Float::with_val(wp, t);
    -(Float::with_val(wp, &c.mu1 * powr(&t, -5, 3)) * 2u32 / 3u32)
        - Float::with_val(wp, &c.mu2 * powr(&t, -3, 2)) / 2u32
        - Float::with_val(wp, t.recip_ref()) / 3u32
}

/// (10/9) μ1 t^{-8/3} + (3/4) μ2 t^{-5/2} + (1/3) t^{-2}.
pub fn h2_expansion(c: &AsymptoticConstants, t: &Float) -> Float {
    let wp = t.prec() + 16;
    let t = Float::with_val(wp, t);
    Float::with_val(wp, &c.mu1 * powr(&t, -8, 3)) * 10u32 / 9u32
        + Float::with_val(wp, &c.mu2 * powr(&t, -5, 2)) * 3u32 / 4u32
        + Float::with_val(wp, t.square_ref()).recip() / 3u32
}
