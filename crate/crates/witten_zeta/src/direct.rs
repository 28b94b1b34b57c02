//! Summation of the Dirichlet series in its half-plane of convergence.
//!
//! Split ω(s) = 2 Σ_{k≥1} k^{-s} T(k) + 2^{-s} ζ(3s) with
//! T(k) = Σ_{j>k} (j(j+k))^{-s}. For k < X the inner sum is taken directly
//! up to j = X and finished with Euler–Maclaurin in j. For k ≥ X the same
//! Euler–Maclaurin expansion, started at j = k, is a series in powers of
//! 1/k whose terms sum over k to Hurwitz zeta values ζ(3s + 2i − 1, X).
//! Plain truncation would need ~2^{prec/(3σ−2)} terms near σ = 3/4.

use rug::ops::Pow;
use rug::{Complex, Float};
use su3_numerics::{zeta_raw, ApComplex, NumError};

use crate::util::{bern, mag};
use crate::{Method, OmegaEvalResult, WittenError};

/// Distance kept from the abscissa of convergence 2/3.
pub const DIRECT_MARGIN: f64 = 0.05;

/// ω(s) by direct summation, for Re s > 2/3 + [`DIRECT_MARGIN`].
pub fn omega_direct(s: &Complex, prec: u32) -> Result<OmegaEvalResult, WittenError> {
    if prec < 64 {
        return Err(NumError::PrecisionTooLow(prec).into());
    }
    let sigma = s.real().to_f64();
    let bound = 2.0 / 3.0 + DIRECT_MARGIN;
    if !(sigma > bound) {
        return Err(WittenError::OutOfDomain { re: sigma, bound });
    }
    let wp = prec + 32;
    let s_wp = Complex::with_val(wp, s);
    let (v, tail) = direct_sum(&s_wp, wp);
    let value = Complex::with_val(prec, &v);
    let est = Float::with_val(53, v.abs_ref()) * Float::with_val(53, 2).pow(8 - prec as i32) + tail;
    Ok(OmegaEvalResult {
        s: s.clone(),
        value: ApComplex::new(value, est.clone()),
        method: Method::Direct,
        est_error: est,
    })
}

struct Tables {
    wp: u32,
    ln: Vec<Float>,
    /// B_{2i}/(2i) for i = 1.., index i-1
    b_over_2i: Vec<Float>,
    /// B_{2i}/(2i)! for i = 1.., index i-1
    b_over_fact: Vec<Float>,
}

impl Tables {
    fn new(wp: u32) -> Self {
        Tables { wp, ln: vec![Float::new(wp)], b_over_2i: Vec::new(), b_over_fact: Vec::new() }
    }

    fn ln(&mut self, n: usize) -> &Float {
        while self.ln.len() <= n {
            let m = self.ln.len();
            self.ln.push(Float::with_val(self.wp, m).ln());
        }
        &self.ln[n]
    }

    /// n^{-w}
    fn inv_pow(&mut self, n: usize, w: &Complex) -> Complex {
        let wp = self.wp;
        let l = self.ln(n).clone();
        (-Complex::with_val(wp, w * l)).exp()
    }

    fn ensure_bern(&mut self, i: usize) {
        if self.b_over_2i.len() >= i {
            return;
        }
        let mut fact = Float::with_val(self.wp, 1);
        for m in 1..=(2 * self.b_over_fact.len()) {
            fact *= m as u32;
        }
        while self.b_over_2i.len() < i {
            let k = self.b_over_2i.len() + 1;
            let b = bern(2 * k, self.wp);
            fact *= (2 * k - 1) as u32;
            fact *= (2 * k) as u32;
            self.b_over_2i.push(Float::with_val(self.wp, &b / (2 * k) as u32));
            self.b_over_fact.push(Float::with_val(self.wp, &b / &fact));
        }
    }
}

/// Coefficients binom(-s, a) for a = 0..n.
fn neg_binomials(s: &Complex, n: usize, wp: u32) -> Vec<Complex> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c = Complex::with_val(wp, 1);
    out.push(c.clone());
    for a in 1..=n {
        // binom(-s, a) = binom(-s, a-1) * (-s - a + 1) / a
        let f = -Complex::with_val(wp, s + (a as u32 - 1));
        c = c * f / a as u32;
        out.push(c.clone());
    }
    out
}

/// Σ_n (s)_n/n! v^n / (2s - 1 + n), the tail integral series.
fn tail_series(s: &Complex, v: &Float, wp: u32, eps: &Float) -> Complex {
    let two_s_m1 = Complex::with_val(wp, s * 2u32) - 1u32;
    let mut coef = Complex::with_val(wp, 1);
    let mut vp = Float::with_val(wp, 1);
    let mut acc = Complex::new(wp);
    let sabs = mag(s);
    for n in 0u32.. {
        let term = Complex::with_val(wp, &coef * &vp) / Complex::with_val(wp, &two_s_m1 + n);
        acc += &term;
        let small = Float::with_val(53, Complex::with_val(wp, &coef * &vp).abs_ref()) < *eps;
        if small && n as f64 > sabs + 2.0 {
            break;
        }
        coef *= Complex::with_val(wp, s + n);
        coef /= n + 1;
        vp *= v;
    }
    acc
}

/// Hurwitz zeta ζ(w, a) = Σ_{n≥a} n^{-w} for integer a ≥ 1, Re w > 1 not required.
fn hurwitz(w: &Complex, a: usize, tb: &mut Tables, eps: &Float) -> Complex {
    let wp = tb.wp;
    let big_a = a.max((0.2 * wp as f64 + mag(w)).ceil() as usize + 8);
    let mut acc = Complex::new(wp);
    for n in a..big_a {
        acc += tb.inv_pow(n, w);
    }
    let a_pow = tb.inv_pow(big_a, w);
    let af = Float::with_val(wp, big_a);
    let w_m1 = Complex::with_val(wp, w - 1u32);
    acc += Complex::with_val(wp, &a_pow * &af) / &w_m1;
    acc += Complex::with_val(wp, &a_pow / 2u32);
    let scale = Float::with_val(53, a_pow.abs_ref());
    let inv_a2 = Float::with_val(wp, af.square_ref()).recip();
    // poch = (w)_{2j-1}, apw = A^{-w-2j+1}
    let mut poch = w.clone();
    let mut apw = Complex::with_val(wp, &a_pow / &af);
    for j in 1.. {
        tb.ensure_bern(j);
        let term = Complex::with_val(wp, &poch * &apw) * &tb.b_over_fact[j - 1];
        acc += &term;
        if Float::with_val(53, term.abs_ref()) < Float::with_val(53, &scale * eps) || j > 4 * wp as usize {
            break;
        }
        poch *= Complex::with_val(wp, w + (2 * j - 1) as u32);
        poch *= Complex::with_val(wp, w + (2 * j) as u32);
        apw *= &inv_a2;
    }
    acc
}

/// Returns ω(s) at working precision `wp` and a tail estimate.
fn direct_sum(s: &Complex, wp: u32) -> (Complex, Float) {
    let sabs = mag(s);
    let x0 = (0.2 * wp as f64 + 1.5 * sabs).ceil() as usize + 10;
    let eps = Float::with_val(53, 2).pow(-(wp as i32));
    let mut tb = Tables::new(wp);
    let mut tail_est = Float::with_val(53, 0);

    // EM coefficient budget: stay well inside the convergent range of the
    // asymptotic expansion, 2i < 2π x0.
    let imax = ((std::f64::consts::PI * x0 as f64) * 0.8) as usize;
    let bc = neg_binomials(s, 2 * imax + 1, wp);
    let x0f = Float::with_val(wp, x0);
    let two_s = Complex::with_val(wp, s * 2u32);
    // u_a = binom(-s,a) x0^{-a}
    let mut u = Vec::with_capacity(bc.len());
    let mut p = Float::with_val(wp, 1);
    for c in &bc {
        u.push(Complex::with_val(wp, c * &p));
        p /= &x0f;
    }

    let mut small = Complex::new(wp);
    for k in 1..x0 {
        let mut t = Complex::new(wp);
        for j in (k + 1)..x0 {
            let lj = tb.ln(j).clone();
            let l = lj + tb.ln(j + k);
            t += (-Complex::with_val(wp, s * l)).exp();
        }
        let xk = x0 + k;
        let xkf = Float::with_val(wp, xk);
        let l0 = tb.ln(x0).clone() + tb.ln(xk);
        let phi0 = (-Complex::with_val(wp, s * &l0)).exp();
        // ∫_{x0}^∞ (x(x+k))^{-s} dx
        let v = Float::with_val(wp, k) / &xkf;
        let lxk = tb.ln(xk).clone();
        let pre = Complex::with_val(wp, Complex::with_val(wp, 1u32 - &two_s) * lxk).exp();
        t += pre * tail_series(s, &v, wp, &eps);
        t += Complex::with_val(wp, &phi0 / 2u32);
        // - Σ B_{2i}/(2i) t_{2i-1}, t_m the Taylor coefficients of φ at x0
        let mut w = Vec::with_capacity(bc.len());
        let mut p = Float::with_val(wp, 1);
        let threshold = Float::with_val(53, phi0.abs_ref()) * &eps;
        let mut last = Float::with_val(53, 0);
        for i in 1..=imax {
            let m = 2 * i - 1;
            while w.len() <= m {
                w.push(Complex::with_val(wp, &bc[w.len()] * &p));
                p /= &xkf;
            }
            let mut tm = Complex::new(wp);
            for a in 0..=m {
                tm += Complex::with_val(wp, &u[a] * &w[m - a]);
            }
            tb.ensure_bern(i);
            let term = Complex::with_val(wp, &tm * &phi0) * &tb.b_over_2i[i - 1];
            t -= &term;
            last = Float::with_val(53, term.abs_ref());
            if last < threshold {
                break;
            }
        }
        tail_est += last;
        let lk = tb.ln(k).clone();
        small += (-Complex::with_val(wp, s * lk)).exp() * t;
    }

    // k ≥ x0: Σ_k [I1 k^{1-3s} - 2^{-s}/2 k^{-3s} - Σ_i c_i k^{1-3s-2i}]
    let ln2 = Float::with_val(wp, 2u32).ln();
    let two_ms = (-Complex::with_val(wp, s * &ln2)).exp();
    let half = Float::with_val(wp, 0.5);
    let i1 = Complex::with_val(wp, Complex::with_val(wp, 1u32 - &two_s) * &ln2).exp() * tail_series(s, &half, wp, &eps);
    let three_s = Complex::with_val(wp, s * 3u32);
    let mut big = i1 * hurwitz(&Complex::with_val(wp, &three_s - 1u32), x0, &mut tb, &eps);
    big -= Complex::with_val(wp, &two_ms / 2u32) * hurwitz(&three_s, x0, &mut tb, &eps);
    // a_m: Taylor coefficients of (1+x)^{-s} (2+x)^{-s} at 0
    let mut hpow = Vec::with_capacity(bc.len());
    let mut p = Float::with_val(wp, 1);
    for c in &bc {
        hpow.push(Complex::with_val(wp, c * &p));
        p /= 2u32;
    }
    let lx0 = tb.ln(x0).clone();
    let scale = Float::with_val(53, big.abs_ref()).max(&Float::with_val(53, 1e-30));
    for i in 1..=imax {
        let m = 2 * i - 1;
        let mut am = Complex::new(wp);
        for a in 0..=m {
            am += Complex::with_val(wp, &bc[a] * &hpow[m - a]);
        }
        am *= &two_ms;
        tb.ensure_bern(i);
        let ci = am * &tb.b_over_2i[i - 1];
        // size guess from the leading Hurwitz term x0^{2-3s-2i}/(3s+2i-2)
        let w = Complex::with_val(wp, &three_s + (2 * i - 1) as u32);
        let guess = Float::with_val(53, ci.abs_ref())
            * Float::with_val(53, Complex::with_val(wp, Complex::with_val(wp, 1u32 - &w) * &lx0).exp().abs_ref());
        if guess < Float::with_val(53, &scale * &eps) {
            tail_est += guess;
            break;
        }
        big -= ci * hurwitz(&w, x0, &mut tb, &eps);
    }

    let z3 = zeta_raw(&three_s, wp);
    let total = (small + big) * 2u32 + two_ms * z3;
    (total, tail_est)
}
