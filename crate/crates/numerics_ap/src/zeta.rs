use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};
use su3_exact::{bernoulli, factorial};

use crate::ap::{check_prec, ApComplex, NumError};
use crate::gamma::{digamma, gamma_raw};

thread_local! {
    static EM: RefCell<HashMap<u32, Rc<Vec<Float>>>> = RefCell::new(HashMap::new());
}

/// B_{2k} / (2k)! for k = 1..
fn em_coeffs(wp: u32) -> Rc<Vec<Float>> {
    EM.with(|t| {
        t.borrow_mut()
            .entry(wp)
            .or_insert_with(|| {
                Rc::new(
                    (1..=(wp as usize / 2 + 48))
                        .map(|k| Float::with_val(wp, &(bernoulli(2 * k) / factorial(2 * k as u32))))
                        .collect(),
                )
            })
            .clone()
    })
}

/// n^(-s) for n = 1..n_max, built multiplicatively from prime powers.
fn inverse_powers(s: &Complex, n_max: usize, wp: u32) -> Vec<Complex> {
    let mut spf = vec![0usize; n_max + 1];
    let mut out: Vec<Complex> = Vec::with_capacity(n_max + 1);
    out.push(Complex::new(wp));
    out.push(Complex::with_val(wp, 1));
    for n in 2..=n_max {
        if spf[n] == 0 {
            let mut m = n;
            while m <= n_max {
                if spf[m] == 0 {
                    spf[m] = n;
                }
                m += n;
            }
        }
        let p = spf[n];
        let v = if p == n {
            let ln = Float::with_val(wp, n).ln();
            (-Complex::with_val(wp, s * ln)).exp()
        } else {
            Complex::with_val(wp, &out[p] * &out[n / p])
        };
        out.push(v);
    }
    out
}

fn em_nodes(s: &Complex, wp: u32) -> usize {
    let t = s.imag().to_f64().abs();
    (0.11 * wp as f64 + t / std::f64::consts::PI).ceil() as usize + 8
}

/// Extra bits lost to cancellation when Re s is negative.
fn cancellation_bits(s: &Complex, n: usize) -> u32 {
    let sigma = s.real().to_f64();
    if sigma >= 0.0 {
        0
    } else {
        (-sigma * (n as f64).log2()).ceil() as u32 + 4
    }
}

/// Euler–Maclaurin evaluation of ζ(s) (and optionally ζ'(s)) valid for any s != 1.
/// Returns (ζ, ζ') with ζ' computed only when `deriv` is set.
fn em_eval(s: &Complex, wp: u32, deriv: bool) -> (Complex, Option<Complex>) {
    let mut n = em_nodes(s, wp);
    loop {
        let wp2 = wp + cancellation_bits(s, n);
        if let Some(r) = em_try(&Complex::with_val(wp2, s), n, wp2, deriv) {
            return r;
        }
        n *= 2;
    }
}

fn em_try(s: &Complex, n: usize, wp: u32, deriv: bool) -> Option<(Complex, Option<Complex>)> {
    let pows = inverse_powers(s, n, wp);
    let mut z = Complex::new(wp);
    let mut dz = Complex::new(wp);
    for k in 1..n {
        z += &pows[k];
        if deriv && k > 1 {
            dz -= Complex::with_val(wp, &pows[k] * Float::with_val(wp, k).ln());
        }
    }
    let nf = Float::with_val(wp, n);
    let ln_n = Float::with_val(wp, nf.ln_ref());
    let n_s = &pows[n];
    let s_minus_1 = Complex::with_val(wp, s - 1u32);
    // N^(1-s)/(s-1) + N^(-s)/2
    let head = Complex::with_val(wp, n_s * &nf) / &s_minus_1;
    z += &head;
    z += Complex::with_val(wp, n_s / 2u32);
    if deriv {
        dz -= Complex::with_val(wp, &head * &ln_n);
        dz -= Complex::with_val(wp, &head / &s_minus_1);
        dz -= Complex::with_val(wp, n_s * &ln_n) / 2u32;
    }
    // corrections c_k Q_k with Q_k = (s)_{2k-1} N^{-s-2k+1}
    let coeffs = em_coeffs(wp);
    let n2 = Float::with_val(wp, nf.square_ref());
    let mut q = Complex::with_val(wp, s * n_s) / &nf;
    let mut dq = Complex::with_val(wp, n_s / &nf) - Complex::with_val(wp, &q * &ln_n);
    let eps = Float::with_val(53, 2).pow(-(wp as i32));
    let scale = Float::with_val(53, z.abs_ref()).max(&Float::with_val(53, 1));
    let mut prev = Float::with_val(53, f64::INFINITY);
    for (i, c) in coeffs.iter().enumerate() {
        let k = i as u32 + 1;
        let term = Complex::with_val(wp, &q * c);
        z += &term;
        let mut mag = Float::with_val(53, term.abs_ref());
        if deriv {
            // Q_k vanishes identically at s = 0, so watch the derivative terms too
            let dterm = Complex::with_val(wp, &dq * c);
            mag = mag.max(&Float::with_val(53, dterm.abs_ref()));
            dz += dterm;
        }
        if mag < Float::with_val(53, &eps * &scale) {
            return Some((z, deriv.then_some(dz)));
        }
        if mag > prev && k > 4 {
            return None;
        }
        prev = mag;
        let a = Complex::with_val(wp, s + (2 * k - 1));
        let b = Complex::with_val(wp, s + 2 * k);
        let g = Complex::with_val(wp, &a * &b);
        if deriv {
            let gp = Complex::with_val(wp, s * 2u32) + (4 * k - 1);
            dq = (Complex::with_val(wp, &dq * &g) + Complex::with_val(wp, &q * &gp)) / &n2;
        }
        q = Complex::with_val(wp, &q * &g) / &n2;
    }
    None
}

fn near_one(s: &Complex, prec: u32) -> bool {
    let tol = Float::with_val(64, 2).pow(-(prec as i32) / 2);
    let d = Complex::with_val(prec, s - 1u32);
    Float::with_val(prec, d.abs_ref()) < tol
}

/// Pieces of χ(s) = 2^s π^(s-1) sin(πs/2) Γ(1-s): returns (2^s π^(s-1) Γ(1-s), sin(πs/2), cos(πs/2)).
fn chi_parts(s: &Complex, wp: u32) -> (Complex, Complex, Complex) {
    let pi = Float::with_val(wp, Constant::Pi);
    let ln2 = Float::with_val(wp, Constant::Log2);
    let lnpi = Float::with_val(wp, pi.ln_ref());
    let one_minus = Complex::with_val(wp, 1 - s);
    let e = Complex::with_val(wp, s * &ln2) + Complex::with_val(wp, s - 1u32) * &lnpi;
    let a = e.exp() * gamma_raw(&one_minus, wp);
    let half = Complex::with_val(wp, s * &pi) / 2u32;
    let (sin, cos) = half.sin_cos(Complex::new(wp));
    (a, sin, cos)
}

const FE_THRESHOLD: f64 = -0.5;

/// ζ(s) at working precision `wp`, no pole check.
pub fn zeta_raw(s: &Complex, wp: u32) -> Complex {
    if s.real().to_f64() < FE_THRESHOLD {
        let (a, sin, _) = chi_parts(s, wp);
        let one_minus = Complex::with_val(wp, 1 - s);
        let z1 = em_eval(&one_minus, wp, false).0;
        return a * sin * z1;
    }
    Complex::with_val(wp, em_eval(s, wp, false).0)
}

/// ζ(s) with relative error about 2^(8-prec): Euler–Maclaurin for Re s >= -1/2,
/// the functional equation to the left of that.
pub fn zeta(s: &Complex, prec: u32) -> Result<ApComplex, NumError> {
    check_prec(prec)?;
    if near_one(s, prec) {
        return Err(NumError::PoleAtOne);
    }
    let v = zeta_raw(&Complex::with_val(prec + 32, s), prec + 32);
    Ok(ApComplex::nominal(Complex::with_val(prec, v)))
}

/// ζ(s) by Euler–Maclaurin only, whatever Re s is. Used to check the
/// functional-equation branch independently.
pub fn zeta_em(s: &Complex, prec: u32) -> Result<ApComplex, NumError> {
    check_prec(prec)?;
    if near_one(s, prec) {
        return Err(NumError::PoleAtOne);
    }
    let v = em_eval(&Complex::with_val(prec + 32, s), prec + 32, false).0;
    Ok(ApComplex::nominal(Complex::with_val(prec, v)))
}

/// ζ'(s) at working precision `wp`, no pole check.
pub fn zeta_deriv_raw(s: &Complex, wp: u32) -> Complex {
    if s.real().to_f64() < FE_THRESHOLD {
        // ζ'(s) = A [sin (ln 2π - ψ(1-s)) ζ(1-s) - sin ζ'(1-s) + (π/2) cos ζ(1-s)]
        let (a, sin, cos) = chi_parts(s, wp);
        let one_minus = Complex::with_val(wp, 1 - s);
        let (z1, dz1) = em_eval(&one_minus, wp, true);
        let dz1 = dz1.expect("derivative requested");
        let pi = Float::with_val(wp, Constant::Pi);
        let ln2pi = Float::with_val(wp, Float::with_val(wp, &pi * 2u32).ln_ref());
        let psi = digamma(&one_minus, wp).expect("1-s is off the poles here").value;
        let inner = Complex::with_val(wp, (ln2pi - psi) * &z1) - dz1;
        let v = Complex::with_val(wp, &sin * inner) + Complex::with_val(wp, &cos * &z1) * pi / 2u32;
        return a * v;
    }
    em_eval(s, wp, true).1.expect("derivative requested")
}

/// ζ'(s) by termwise differentiation of Euler–Maclaurin, with the
/// differentiated functional equation for Re s < -1/2.
pub fn zeta_deriv(s: &Complex, prec: u32) -> Result<ApComplex, NumError> {
    check_prec(prec)?;
    if near_one(s, prec) {
        return Err(NumError::PoleAtOne);
    }
    let v = zeta_deriv_raw(&Complex::with_val(prec + 32, s), prec + 32);
    Ok(ApComplex::nominal(Complex::with_val(prec, v)))
}

/// ζ'(s) by differentiated Euler–Maclaurin only.
pub fn zeta_deriv_em(s: &Complex, prec: u32) -> Result<ApComplex, NumError> {
    check_prec(prec)?;
    if near_one(s, prec) {
        return Err(NumError::PoleAtOne);
    }
    let v = em_eval(&Complex::with_val(prec + 32, s), prec + 32, true).1.expect("derivative requested");
    Ok(ApComplex::nominal(Complex::with_val(prec, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(s: f64) -> Complex {
        Complex::with_val(256, (s, 0))
    }

    #[test]
    fn calibration_values() {
        let pi = Float::with_val(256, Constant::Pi);
        let z2 = zeta(&re(2.0), 256).unwrap().value;
        let want = Float::with_val(256, pi.square_ref()) / 6u32;
        assert!(Float::with_val(256, z2.real() - &want).abs() < 1e-70);
        let zm1 = zeta(&re(-1.0), 256).unwrap().value;
        assert!(Float::with_val(256, zm1.real() + Float::with_val(256, 1) / 12u32).abs() < 1e-70);
        assert_eq!(zeta(&re(1.0), 256), Err(NumError::PoleAtOne));
    }
}
