//! Analytic continuation through the shifted Mellin–Barnes representation
//!
//! ω(s) = Γ(2s−1)Γ(1−s)ζ(3s−1)/Γ(s)
//!      + Σ_{k<M} (−1)^k/k! (s)_k ζ(2s+k) ζ(s−k)
//!      + (1/Γ(s)) (1/2πi) ∫_{(M−1/2)} Γ(s+z)Γ(−z)ζ(2s+z)ζ(s−z) dz,
//!
//! valid for 3/4 − M/2 < Re s < M + 1/2.

use std::f64::consts::PI;

use rug::ops::Pow;
use rug::{Complex, Float};
use su3_exact::{binomial, factorial, zeta_nonpositive, BigRat};
use su3_numerics::{
    euler_gamma, gamma_raw, integrate_vertical, zeta_deriv_raw, zeta_raw, ApComplex, NumError, QuadratureSpec,
};

use crate::util::{as_integer, cancellation_bits, mag, nearest_integer, rgamma};
use crate::{Method, OmegaEvalResult, WittenError};

/// Smallest M that keeps s inside the strip with at least one unit of room
/// on the left and half a unit on the right.
pub fn default_m(s: &Complex) -> u32 {
    let sigma = s.real().to_f64();
    let left = (2.0 - 2.0 * sigma).ceil() as i64 + 2;
    let right = sigma.ceil() as i64 + 1;
    left.max(right).max(2) as u32
}

/// Whether 3/4 − M/2 < σ < M + 1/2.
pub fn in_strip(sigma: f64, m: u32) -> bool {
    0.75 - m as f64 / 2.0 < sigma && sigma < m as f64 + 0.5
}

/// ω(s) by continuation with the quadrature aimed at prec − 16 bits.
pub fn omega_continued(s: &Complex, m: u32, prec: u32) -> Result<OmegaEvalResult, WittenError> {
    omega_continued_target(s, m, prec, prec.saturating_sub(16).max(48))
}

/// The three pieces of the representation at one point.
#[derive(Debug, Clone)]
pub struct ContinuedTerms {
    /// Γ(2s−1)Γ(1−s)ζ(3s−1)/Γ(s), or its finite part at removable points.
    pub first: Complex,
    pub finite_sum: Complex,
    /// The contour integral divided by Γ(s).
    pub integral: Complex,
    pub integral_err: Float,
}

/// ω(s) with an explicit accuracy goal for the contour integral.
pub fn omega_continued_target(
    s: &Complex,
    m: u32,
    prec: u32,
    target_bits: u32,
) -> Result<OmegaEvalResult, WittenError> {
    let t = continued_terms(s, m, prec, target_bits)?;
    let wp = t.first.prec().0;
    let v = Complex::with_val(wp, &t.first + &t.finite_sum) + &t.integral;
    let nominal = Float::with_val(53, v.abs_ref()) * Float::with_val(53, 2).pow(8 - prec as i32);
    let est = nominal + &t.integral_err;
    Ok(OmegaEvalResult {
        s: s.clone(),
        value: ApComplex::new(Complex::with_val(prec, &v), est.clone()),
        method: Method::Continued(m),
        est_error: est,
    })
}

/// Evaluates the representation term by term.
pub fn continued_terms(s: &Complex, m: u32, prec: u32, target_bits: u32) -> Result<ContinuedTerms, WittenError> {
    if prec < 64 {
        return Err(NumError::PrecisionTooLow(prec).into());
    }
    let sigma = s.real().to_f64();
    if !in_strip(sigma, m) {
        return Err(WittenError::StripViolation { re: sigma, m });
    }
    check_poles(s, prec)?;
    let exact = as_integer(s);
    let guard = match exact {
        Some(_) => 0,
        None => cancellation_bits(nearest_integer(s).1),
    };
    let wp = prec + 24 + guard + m;
    let s = Complex::with_val(wp, s);
    let terms = match exact {
        Some(n) if n <= 0 => at_nonpositive((-n) as u32, m, wp),
        Some(n) => at_positive((n - 1) as u32, &s, m, wp, target_bits)?,
        None => generic(&s, m, wp, target_bits)?,
    };
    Ok(terms)
}

fn check_poles(s: &Complex, prec: u32) -> Result<(), WittenError> {
    let wp = s.prec().0.max(64);
    let thresh = 2f64.powf(-(prec as f64) / 4.0);
    let sigma = s.real().to_f64();
    let two_thirds = BigRat::from((2, 3));
    let k = (0.5 - sigma).round().max(0.0) as i64;
    let half = BigRat::from((1 - 2 * k, 2));
    for loc in [two_thirds, half] {
        let d = mag(&Complex::with_val(wp, s - Float::with_val(wp, &loc)));
        if d < thresh {
            return Err(WittenError::NearPole { location: loc, dist: d });
        }
    }
    Ok(())
}

/// Σ_{k<M, k≠skip} (−1)^k/k! (s)_k ζ(2s+k) ζ(s−k)
fn finite_sum(s: &Complex, m: u32, skip: Option<u32>, wp: u32) -> Complex {
    let mut acc = Complex::new(wp);
    let mut poch = Complex::with_val(wp, 1);
    let mut fact = Float::with_val(wp, 1);
    let two_s = Complex::with_val(wp, s * 2u32);
    for k in 0..m {
        if k > 0 {
            poch *= Complex::with_val(wp, s + (k - 1));
            fact *= k;
        }
        if skip == Some(k) {
            continue;
        }
        let z1 = zeta_raw(&Complex::with_val(wp, &two_s + k), wp);
        let z2 = zeta_raw(&Complex::with_val(wp, s - k), wp);
        let mut term = Complex::with_val(wp, &poch * &z1) * z2 / &fact;
        if k % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    acc
}

/// (1/Γ(s)) (1/2πi) ∫_{(M−1/2)} Γ(s+z)Γ(−z)ζ(2s+z)ζ(s−z) dz with its error.
fn integral(s: &Complex, m: u32, wp: u32, target: u32) -> Result<(Complex, Float), NumError> {
    let sigma = s.real().to_f64();
    let t = s.imag().to_f64();
    let alpha = m as f64 - 0.5;
    let d = 0.5f64
        .min(m as f64 + 2.0 * sigma - 1.5)
        .min(m as f64 + 0.5 - sigma)
        .min(m as f64 - 0.5 + sigma);
    let two_s = Complex::with_val(wp, s * 2u32);
    let f = |z: &Complex| -> Result<Complex, NumError> {
        let g1 = gamma_raw(&Complex::with_val(wp, s + z), wp);
        let g2 = gamma_raw(&Complex::with_val(wp, -z), wp);
        let z1 = zeta_raw(&Complex::with_val(wp, &two_s + z), wp);
        let z2 = zeta_raw(&Complex::with_val(wp, s - z), wp);
        Ok(g1 * g2 * z1 * z2)
    };
    // shift the cutoff by the size of the integrand at the centre of the
    // flat stretch between y = −t and y = 0
    let probe = f(&Complex::with_val(wp, (alpha, -t / 2.0)))?;
    let lift = mag(&probe).ln().max(0.0);
    let degree = (m as f64 - sigma).max(0.0) + 2.0;
    let mut spec = QuadratureSpec::auto(alpha, d, PI, t.abs(), degree, target).symmetric(t == 0.0);
    spec.t_max = (spec.t_max + lift / PI).ceil();
    let r = integrate_vertical(f, &spec, wp)?;
    let rg = rgamma(s, wp);
    let scale = mag(&rg);
    Ok((r.value.value * rg, r.value.err * scale))
}

fn generic(s: &Complex, m: u32, wp: u32, target: u32) -> Result<ContinuedTerms, WittenError> {
    let g1 = gamma_raw(&(Complex::with_val(wp, s * 2u32) - 1u32), wp);
    let g2 = gamma_raw(&Complex::with_val(wp, 1u32 - s), wp);
    let z = zeta_raw(&(Complex::with_val(wp, s * 3u32) - 1u32), wp);
    let first = g1 * g2 * z * rgamma(s, wp);
    let finite_sum = finite_sum(s, m, None, wp);
    let (integral, integral_err) = integral(s, m, wp, target)?;
    Ok(ContinuedTerms { first, finite_sum, integral, integral_err })
}

/// s = p + 1: Γ(1−s) and ζ(s−p) have cancelling poles. The finite part of
/// the first term plus the k = p term is
/// (−1)^p (2p)!/(p!)² [(H_p − H_{2p} + γ) ζ(3p+2) − ζ'(3p+2)].
fn at_positive(p: u32, s: &Complex, m: u32, wp: u32, target: u32) -> Result<ContinuedTerms, WittenError> {
    let h = |n: u32| -> Float {
        let mut acc = Float::new(wp);
        for i in 1..=n {
            acc += Float::with_val(wp, i).recip();
        }
        acc
    };
    let arg = Complex::with_val(wp, 3 * p + 2);
    let z = zeta_raw(&arg, wp);
    let dz = zeta_deriv_raw(&arg, wp);
    let c = h(p) - h(2 * p) + euler_gamma(wp);
    let bracket = Complex::with_val(wp, &z * &c) - dz;
    let coef = Float::with_val(wp, factorial(2 * p)) / Float::with_val(wp, factorial(p).square());
    let mut first = bracket * coef;
    if p % 2 == 1 {
        first = -first;
    }
    let finite_sum = finite_sum(s, m, Some(p), wp);
    let (integral, integral_err) = integral(s, m, wp, target)?;
    Ok(ContinuedTerms { first, finite_sum, integral, integral_err })
}

/// s = −n: 1/Γ(s) vanishes, so the integral drops out and only k ≤ n and
/// k = 2n+1 survive in the sum; the latter and the first term have equal
/// limits −(−1)^n (n!)² ζ(−3n−1) / (2(2n+1)!).
fn at_nonpositive(n: u32, m: u32, wp: u32) -> ContinuedTerms {
    let zeta_int = |a: i64| zeta_raw(&Complex::with_val(wp, a), wp);
    let nf = Float::with_val(wp, factorial(n));
    let mut half_limit = zeta_int(-3 * n as i64 - 1) * Float::with_val(wp, nf.square_ref())
        / Float::with_val(wp, factorial(2 * n + 1))
        / 2u32;
    if n % 2 == 0 {
        half_limit = -half_limit;
    }
    let mut sum = Complex::new(wp);
    for k in 0..=n.min(m - 1) {
        let c = Float::with_val(wp, binomial(n, k));
        sum += zeta_int(k as i64 - 2 * n as i64) * zeta_int(-(n as i64) - k as i64) * c;
    }
    if 2 * n + 1 < m {
        sum += &half_limit;
    }
    ContinuedTerms { first: half_limit, finite_sum: sum, integral: Complex::new(wp), integral_err: Float::new(53) }
}

/// The continuation formula at s = −n in exact rational arithmetic,
/// using ζ(−m) = (−1)^m B_{m+1}/(m+1).
pub fn omega_nonpositive_exact(n: u32) -> BigRat {
    let mut acc = BigRat::new();
    for k in 0..=n {
        let c = BigRat::from(binomial(n, k));
        acc += c * zeta_nonpositive(2 * n - k) * zeta_nonpositive(n + k);
    }
    let tail = zeta_nonpositive(3 * n + 1) * BigRat::from(factorial(n).square())
        / BigRat::from(factorial(2 * n + 1));
    if n % 2 == 0 {
        acc - tail
    } else {
        acc + tail
    }
}
