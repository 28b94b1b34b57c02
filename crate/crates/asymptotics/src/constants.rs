//! X, Y, μ1, μ2, τ1..τ3, B1..B5, A1..A4 and K.

use rug::ops::Pow;
use rug::{Complex, Float};
use su3_numerics::{gamma_raw, ln_2pi, pi, zeta_raw, ApReal};
use su3_witten::omega_deriv0;

use crate::AsymError;

#[derive(Debug, Clone)]
pub struct AsymptoticConstants {
    pub prec: u32,
    pub x: Float,
    pub y: Float,
    pub mu1: Float,
    pub mu2: Float,
    pub tau1: Float,
    pub tau2: Float,
    pub tau3: Float,
    pub a1: Float,
    pub a2: Float,
    pub a3: Float,
    pub a4: Float,
    pub b1: Float,
    pub b2: Float,
    pub b3: Float,
    pub b4: Float,
    pub b5: Float,
    pub k: Float,
    /// 2^{2/3} Γ(1/3)²/3, the limit of t^{2/3} f(t).
    pub i: Float,
}

/// x^{p/q} for x > 0.
pub(crate) fn powr(x: &Float, p: i32, q: u32) -> Float {
    let wp = x.prec();
    (Float::with_val(wp, x.ln_ref()) * p / q).exp()
}

fn real_gamma(num: u32, den: u32, wp: u32) -> Float {
    let s = Complex::with_val(wp, (Float::with_val(wp, num) / den, 0));
    gamma_raw(&s, wp).real().clone()
}

fn real_zeta(num: u32, den: u32, wp: u32) -> Float {
    let s = Complex::with_val(wp, (Float::with_val(wp, num) / den, 0));
    zeta_raw(&s, wp).real().clone()
}

/// All constants from Γ(1/3), ζ(5/3), ζ(1/2), ζ(3/2) and π.
pub fn constants(prec: u32) -> AsymptoticConstants {
    let wp = prec + 32;
    let g13 = real_gamma(1, 3, wp);
    let g2 = Float::with_val(wp, g13.square_ref());
    let z53 = real_zeta(5, 3, wp);
    let zh = real_zeta(1, 2, wp);
    let z32 = real_zeta(3, 2, wp);
    let p = pi(wp);
    let sqrt_pi = Float::with_val(wp, p.sqrt_ref());

    let x = powr(&(Float::with_val(wp, &g2 * &z53) / 9u32), 3, 10);
    let y = -Float::with_val(wp, &sqrt_pi * &zh) * &z32;
    let mu1 = powr(&Float::with_val(wp, 2), 2, 3) / 3u32 * &g2 * &z53;
    let mu2 = Float::with_val(wp, (p.clone() * 2u32).sqrt()) * &zh * &z32;

    let xp = |e: i32| -> Float { Float::with_val(wp, x.clone().pow(e)) };
    let yp = |e: u32| -> Float { Float::with_val(wp, y.clone().pow(e)) };
    let term = |c: (i64, u32), xe: i32, ye: u32| -> Float { Float::with_val(wp, xp(xe) * yp(ye)) * c.0 / c.1 };

    let a1 = term((5, 1), 2, 0);
    let a2 = term((1, 1), -1, 1);
    let a3 = term((3, 80), -4, 2);
    let a4 = term((11, 3200), -7, 3);
    let tau1 = term((2, 1), 2, 0);
    let tau2 = term((3, 10), -1, 1);
    let tau3 = term((3, 400), -4, 2);
    let b1 = term((3, 1), 2, 0);
    let b2 = term((-7, 10), -1, 1);
    let b3 = term((-3, 100), -4, 2);
    let b4 = term((-11, 3200), -7, 3);
    let b5 = term((-1, 2560), -10, 4);
    let k = Float::with_val(wp, (p.clone() * 3u32).sqrt()) * 2u32 / Float::with_val(wp, 5).sqrt()
        * powr(&x, 1, 3)
        * Float::with_val(wp, b5.exp_ref());
    let i = powr(&Float::with_val(wp, 2), 2, 3) * &g2 / 3u32;

    let r = |v: Float| Float::with_val(prec, v);
    AsymptoticConstants {
        prec,
        x: r(x),
        y: r(y),
        mu1: r(mu1),
        mu2: r(mu2),
        tau1: r(tau1),
        tau2: r(tau2),
        tau3: r(tau3),
        a1: r(a1),
        a2: r(a2),
        a3: r(a3),
        a4: r(a4),
        b1: r(b1),
        b2: r(b2),
        b3: r(b3),
        b4: r(b4),
        b5: r(b5),
        k: r(k),
        i: r(i),
    }
}

impl AsymptoticConstants {
    /// (name, value) in a fixed order, for reports.
    pub fn named(&self) -> Vec<(&'static str, &Float)> {
        vec![
            ("X", &self.x),
            ("Y", &self.y),
            ("mu1", &self.mu1),
            ("mu2", &self.mu2),
            ("tau1", &self.tau1),
            ("tau2", &self.tau2),
            ("tau3", &self.tau3),
            ("A1", &self.a1),
            ("A2", &self.a2),
            ("A3", &self.a3),
            ("A4", &self.a4),
            ("B1", &self.b1),
            ("B2", &self.b2),
            ("B3", &self.b3),
            ("B4", &self.b4),
            ("B5", &self.b5),
            ("K", &self.k),
            ("I", &self.i),
        ]
    }

    /// log K.
    pub fn log_k(&self) -> Float {
        Float::with_val(self.prec, self.k.ln_ref())
    }

    /// B1..B5 from μ1, μ2, τ1 and u = τ2/τ1, v = τ3/τ1 through the Taylor
    /// expansions of t_n^{-2/3} and t_n^{-1/2}, before simplification.
    pub fn b_unsimplified(&self) -> [Float; 5] {
        let wp = self.prec + 16;
        let f = |x: &Float| Float::with_val(wp, x);
        let u = f(&self.tau2) / &self.tau1;
        let v = f(&self.tau3) / &self.tau1;
        let m1 = f(&self.mu1) * powr(&f(&self.tau1), -2, 3);
        let m2 = f(&self.mu2) * powr(&f(&self.tau1), -1, 2);
        let q = |c: (i64, u32), m: &Float, ue: u32, ve: u32| -> Float {
            Float::with_val(wp, m * Float::with_val(wp, (&u).pow(ue))) * Float::with_val(wp, (&v).pow(ve)) * c.0 / c.1
        };
        let b1 = m1.clone();
        let b2 = q((2, 3), &m1, 1, 0) + &m2;
        let b3 = q((2, 3), &m1, 0, 1) + q((5, 9), &m1, 2, 0) + q((1, 2), &m2, 1, 0);
        let b4 = q((10, 9), &m1, 1, 1) + q((40, 81), &m1, 3, 0) + q((1, 2), &m2, 0, 1) + q((3, 8), &m2, 2, 0);
        let b5 = q((5, 9), &m1, 0, 2) + q((40, 27), &m1, 2, 1) + q((110, 243), &m1, 4, 0) + q((3, 4), &m2, 1, 1)
            + q((5, 16), &m2, 3, 0);
        [b1, b2, b3, b4, b5].map(|b| Float::with_val(self.prec, b))
    }

    /// The relations tying the constants together, as (name, lhs, rhs).
    pub fn relations(&self) -> Vec<(String, Float, Float)> {
        let wp = self.prec;
        let f = |x: &Float| Float::with_val(wp, x);
        let mut out = vec![
            ("A1 = B1 + tau1".to_string(), f(&self.a1), f(&self.b1) + &self.tau1),
            ("A2 = tau2 - B2".to_string(), f(&self.a2), f(&self.tau2) - &self.b2),
            ("A3 = tau3 - B3".to_string(), f(&self.a3), f(&self.tau3) - &self.b3),
            ("A4 = -B4".to_string(), f(&self.a4), -f(&self.b4)),
            ("tau1 = (2 mu1/3)^(3/5)".to_string(), f(&self.tau1), powr(&(f(&self.mu1) * 2u32 / 3u32), 3, 5)),
            (
                "Y = -mu2/sqrt(2)".to_string(),
                f(&self.y),
                -f(&self.mu2) / Float::with_val(wp, 2).sqrt(),
            ),
            (
                "I = mu1/zeta(5/3)".to_string(),
                f(&self.i),
                f(&self.mu1) / real_zeta(5, 3, wp + 16),
            ),
        ];
        for (i, b) in self.b_unsimplified().into_iter().enumerate() {
            let simple = [&self.b1, &self.b2, &self.b3, &self.b4, &self.b5][i];
            out.push((format!("B{} simplified", i + 1), f(simple), b));
        }
        out
    }
}

/// K = √3/√(5π) X^{1/3} exp(B5 + ω'(0)) with ω'(0) evaluated numerically.
pub fn k_via_omega_deriv0(c: &AsymptoticConstants) -> Result<ApReal, AsymError> {
    let wp = c.prec + 16;
    let d = omega_deriv0(wp)?;
    let p = pi(wp);
    let pre = Float::with_val(wp, 3).sqrt() / Float::with_val(wp, p * 5u32).sqrt();
    let e = (Float::with_val(wp, &c.b5) + &d.value.value).exp();
    let k = pre * powr(&Float::with_val(wp, &c.x), 1, 3) * e;
    let err = Float::with_val(53, &k) * &d.value.err;
    Ok(ApReal::new(Float::with_val(c.prec, k), err))
}

/// ω'(0) = log 2π, the value that turns one K formula into the other.
pub fn omega_deriv0_closed(prec: u32) -> Float {
    ln_2pi(prec)
}

/// The double integral I three ways: its closed form, Γ(2/3) J with
/// J = ∫_0^∞ dw/√(w⁴+w) by the trapezoid rule after w = e^u, and
/// Γ(2/3) B(1/6, 1/3)/3 from the substitution w³ = x.
#[derive(Debug, Clone)]
pub struct IntegralI {
    pub closed: Float,
    pub quadrature: Float,
    pub beta: Float,
}

pub fn integral_i(prec: u32) -> IntegralI {
    let wp = prec + 24;
    let nats = wp as f64 * std::f64::consts::LN_2;
    // analytic in |Im u| < π/3, so the step error is about e^{-2π(π/3)/h};
    // the integrand decays like e^{u/2} and e^{-u}
    let h = 2.0 * std::f64::consts::PI * (std::f64::consts::PI / 3.0) * 0.95 / (nats + 5.0);
    let lo = -2.0 * (nats + 5.0);
    let hi = nats + 5.0;
    let hf = Float::with_val(wp, h);
    let n = ((hi - lo) / h).ceil() as u32;
    let mut acc = Float::new(wp);
    for i in 0..=n {
        let u = Float::with_val(wp, lo) + Float::with_val(wp, &hf * i);
        let e3 = Float::with_val(wp, &u * 3u32).exp();
        acc += Float::with_val(wp, &u / 2u32).exp() / (e3 + 1u32).sqrt();
    }
    let j = acc * &hf;
    let g23 = real_gamma(2, 3, wp);
    let beta = real_gamma(1, 6, wp) * real_gamma(1, 3, wp) / real_gamma(1, 2, wp) / 3u32;
    let g13 = real_gamma(1, 3, wp);
    let closed = powr(&Float::with_val(wp, 2), 2, 3) * Float::with_val(wp, g13.square_ref()) / 3u32;
    IntegralI {
        closed: Float::with_val(prec, closed),
        quadrature: Float::with_val(prec, j * &g23),
        beta: Float::with_val(prec, beta * &g23),
    }
}
