use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};
use su3_exact::bernoulli;

use crate::ap::{check_prec, ApComplex, NumError};

thread_local! {
    static STIRLING: RefCell<HashMap<u32, Rc<Vec<Float>>>> = RefCell::new(HashMap::new());
    static PSI: RefCell<HashMap<u32, Rc<Vec<Float>>>> = RefCell::new(HashMap::new());
}

fn table_len(wp: u32) -> usize {
    wp as usize / 2 + 32
}

/// B_{2k} / (2k (2k-1)) for k = 1.. at precision `wp`.
fn stirling_coeffs(wp: u32) -> Rc<Vec<Float>> {
    STIRLING.with(|t| {
        t.borrow_mut()
            .entry(wp)
            .or_insert_with(|| {
                Rc::new(
                    (1..=table_len(wp))
                        .map(|k| {
                            let b = bernoulli(2 * k) / ((2 * k) as u64 * (2 * k - 1) as u64);
                            Float::with_val(wp, &b)
                        })
                        .collect(),
                )
            })
            .clone()
    })
}

/// B_{2k} / (2k) for k = 1.. at precision `wp`.
fn psi_coeffs(wp: u32) -> Rc<Vec<Float>> {
    PSI.with(|t| {
        t.borrow_mut()
            .entry(wp)
            .or_insert_with(|| {
                Rc::new(
                    (1..=table_len(wp))
                        .map(|k| Float::with_val(wp, &(bernoulli(2 * k) / (2 * k) as u64)))
                        .collect(),
                )
            })
            .clone()
    })
}

/// How far to shift z to the right before the asymptotic series is accurate.
fn shift_for(z: &Complex, wp: u32) -> u32 {
    let r = 0.12 * wp as f64 + 4.0;
    let x = z.real().to_f64();
    let y = z.imag().to_f64();
    if x.hypot(y) >= r {
        return 0;
    }
    let need = (r * r - y * y).max(0.0).sqrt() - x;
    need.ceil().max(0.0) as u32
}

fn near_nonpositive_integer(s: &Complex, prec: u32) -> Option<i64> {
    let x = s.real().to_f64();
    if x > 0.5 {
        return None;
    }
    let n = x.round();
    let tol = Float::with_val(64, 2).pow(-(prec as i32) / 2);
    let dx = Float::with_val(prec, s.real() - n).abs();
    let dy = Float::with_val(prec, s.imag().abs_ref());
    if dx < tol && dy < tol {
        Some(n as i64)
    } else {
        None
    }
}

/// A logarithm of Γ(z) for Re z >= 1/2 (branch irrelevant after exponentiation).
fn ln_gamma_right(z: &Complex, wp: u32) -> Complex {
    let n = shift_for(z, wp);
    let w = Complex::with_val(wp, z + n);
    let coeffs = stirling_coeffs(wp);
    let eps = Float::with_val(wp, 2).pow(-(wp as i32));
    let lnw = Complex::with_val(wp, w.ln_ref());
    let half_ln_2pi = Float::with_val(wp, Float::with_val(wp, Constant::Pi) * 2u32).ln() / 2u32;
    let mut lg = Complex::with_val(wp, &w - 0.5f64) * &lnw - &w + &half_ln_2pi;
    let winv = Complex::with_val(wp, w.recip_ref());
    let winv2 = Complex::with_val(wp, winv.square_ref());
    let mut pw = winv;
    for c in coeffs.iter() {
        let term = Complex::with_val(wp, &pw * c);
        lg += &term;
        if Float::with_val(53, term.abs_ref()) < eps {
            break;
        }
        pw *= &winv2;
    }
    if n > 0 {
        let mut prod = Complex::with_val(wp, z);
        for j in 1..n {
            prod *= Complex::with_val(wp, z + j);
        }
        lg -= prod.ln();
    }
    lg
}

/// Γ(s) at working precision `wp` with no pole check and no guard bits.
pub fn gamma_raw(s: &Complex, wp: u32) -> Complex {
    if s.real().to_f64() < 0.5 {
        // Γ(s) = π / (sin(πs) Γ(1-s))
        let pi = Float::with_val(wp, Constant::Pi);
        let sin = Complex::with_val(wp, s * &pi).sin();
        let one_minus = Complex::with_val(wp, 1 - s);
        let g = ln_gamma_right(&one_minus, wp).exp();
        return Complex::with_val(wp, pi / (sin * g));
    }
    ln_gamma_right(s, wp).exp()
}

/// Γ(s) with relative error about 2^(8-prec).
pub fn gamma(s: &Complex, prec: u32) -> Result<ApComplex, NumError> {
    check_prec(prec)?;
    if let Some(n) = near_nonpositive_integer(s, prec) {
        return Err(NumError::PoleAt(n));
    }
    let v = gamma_raw(&Complex::with_val(prec + 32, s), prec + 32);
    Ok(ApComplex::nominal(Complex::with_val(prec, v)))
}

/// Digamma ψ(s) = Γ'(s)/Γ(s).
pub fn digamma(s: &Complex, prec: u32) -> Result<ApComplex, NumError> {
    check_prec(prec)?;
    if let Some(n) = near_nonpositive_integer(s, prec) {
        return Err(NumError::PoleAt(n));
    }
    let wp = prec + 32;
    let s = Complex::with_val(wp, s);
    let v = if s.real().to_f64() < 0.5 {
        // ψ(s) = ψ(1-s) - π cot(πs)
        let pi = Float::with_val(wp, Constant::Pi);
        let cot = Complex::with_val(wp, &s * &pi).tan().recip();
        psi_right(&Complex::with_val(wp, 1 - &s), wp) - cot * pi
    } else {
        psi_right(&s, wp)
    };
    Ok(ApComplex::nominal(Complex::with_val(prec, v)))
}

fn psi_right(z: &Complex, wp: u32) -> Complex {
    let n = shift_for(z, wp);
    let w = Complex::with_val(wp, z + n);
    let coeffs = psi_coeffs(wp);
    let eps = Float::with_val(wp, 2).pow(-(wp as i32));
    let winv = Complex::with_val(wp, w.recip_ref());
    let winv2 = Complex::with_val(wp, winv.square_ref());
    let mut v = Complex::with_val(wp, w.ln_ref()) - Complex::with_val(wp, &winv / 2u32);
    let mut pw = winv2.clone();
    for c in coeffs.iter() {
        let term = Complex::with_val(wp, &pw * c);
        v -= &term;
        if Float::with_val(53, term.abs_ref()) < eps {
            break;
        }
        pw *= &winv2;
    }
    for j in 0..n {
        v -= Complex::with_val(wp, z + j).recip();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64, y: f64) -> Complex {
        Complex::with_val(256, (x, y))
    }

    #[test]
    fn small_values() {
        let g = gamma(&c(0.5, 0.0), 256).unwrap().value;
        let sqrt_pi = Float::with_val(256, Constant::Pi).sqrt();
        let d = Float::with_val(256, g.real() - &sqrt_pi).abs();
        assert!(d < 1e-70, "{d}");
        let g1 = gamma(&c(1.0, 0.0), 256).unwrap().value;
        assert!(Float::with_val(256, g1.real() - 1u32).abs() < 1e-70);
        assert_eq!(gamma(&c(-3.0, 0.0), 256), Err(NumError::PoleAt(-3)));
        assert!(gamma(&c(0.0, 0.0), 256).is_err());
    }

    #[test]
    fn digamma_one_is_minus_euler() {
        let d = digamma(&c(1.0, 0.0), 256).unwrap().value;
        let e = Float::with_val(256, Constant::Euler);
        assert!(Float::with_val(256, d.real() + &e).abs() < 1e-70);
        let d = digamma(&c(-2.5, 0.0), 256).unwrap().value;
        // ψ(-5/2) = ψ(1/2) + 2/1 + 2/3 + 2/5 ... via recurrence ψ(x+1) = ψ(x) + 1/x
        let half = digamma(&c(0.5, 0.0), 256).unwrap().value;
        let expect = Float::with_val(256, half.real()) + Float::with_val(256, 2) / 5u32 * 1u32
            + Float::with_val(256, 2) / 3u32
            + Float::with_val(256, 2) / 1u32;
        assert!(Float::with_val(256, d.real() - &expect).abs() < 1e-70);
    }
}
