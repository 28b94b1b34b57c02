//! ω'(0) = (1+γ)/12 + (3/4) log 2π − 2ζ'(−1)
//!       + (1/2) ∫_ℝ ζ(3/2+it) ζ(−3/2−it) / ((3/2+it) cosh πt) dt.
//!
//! The integral is the s-derivative at 0 of the M = 2 contour term, using
//! ∂Δ/∂s (0, z) = −π ζ(z)ζ(−z) / (z sin πz) for
//! Δ(s, z) = Γ(−z)Γ(s+z)ζ(2s+z)ζ(s−z)/Γ(s).

use std::f64::consts::PI;

use rug::ops::Pow;
use rug::{Complex, Float};
use su3_numerics::{
    euler_gamma, gamma_raw, integrate_real_line, integrate_vertical, ln_2pi, zeta_deriv_raw, zeta_raw, ApReal,
    NumError, QuadratureSpec,
};

use crate::continued::omega_continued_target;
use crate::util::{cx, mag, pi, rgamma};
use crate::WittenError;

#[derive(Debug, Clone)]
pub struct Deriv0Parts {
    /// (1+γ)/12 + (3/4) log 2π − 2ζ'(−1)
    pub constant_part: ApReal,
    /// The integral with its factor 1/2.
    pub integral: ApReal,
    pub value: ApReal,
}

pub fn deriv0_constant_part(prec: u32) -> ApReal {
    let wp = prec + 16;
    let g = euler_gamma(wp);
    let a = (g + 1u32) / 12u32;
    let b = ln_2pi(wp) * 3u32 / 4u32;
    let dz = zeta_deriv_raw(&cx(wp, -1.0, 0.0), wp);
    let v = a + b - Float::with_val(wp, dz.real() * 2u32);
    ApReal::nominal(Float::with_val(prec, v))
}

fn integrand(t: &Float, wp: u32) -> Complex {
    let z = Complex::with_val(wp, (1.5, t));
    let a = zeta_raw(&z, wp);
    let b = zeta_raw(&Complex::with_val(wp, -&z), wp);
    let ch = Float::with_val(wp, t * pi(wp)).cosh();
    a * b / z / ch
}

/// (1/2) ∫ ζ(3/2+it) ζ(−3/2−it) / ((3/2+it) cosh πt) dt over ℝ.
pub fn deriv0_integral(prec: u32, target_bits: u32) -> Result<ApReal, WittenError> {
    let wp = prec + 24;
    // The real part is even in t and the imaginary part odd, so only t ≥ 0
    // is sampled. Check that on two points first.
    for t in [0.7, 2.3] {
        let p = integrand(&Float::with_val(wp, t), wp);
        let q = integrand(&Float::with_val(wp, -t), wp);
        let tol = mag(&p) * 2f64.powi(24 - prec.min(1000) as i32) + 1e-300;
        let re = Float::with_val(53, Float::with_val(wp, p.real() - q.real()).abs_ref()).to_f64();
        let im = Float::with_val(53, Float::with_val(wp, p.imag() + q.imag()).abs_ref()).to_f64();
        if re > tol || im > tol {
            return Err(NumError::DomainError(format!("integrand symmetry fails at t = {t}")).into());
        }
    }
    let spec = QuadratureSpec::auto(0.0, 0.5, PI, 0.0, 3.0, target_bits).symmetric(true);
    let r = integrate_real_line(|t: &Float| Ok(integrand(t, wp)), &spec, wp)?;
    let v = Float::with_val(prec, r.value.value.real() / 2u32);
    Ok(ApReal::new(v, r.value.err / 2u32))
}

/// The same term as the contour integral −(1/2i) ∫_{(3/2)} ζ(z)ζ(−z)/(z sin πz) dz.
pub fn deriv0_integral_contour(prec: u32, target_bits: u32) -> Result<ApReal, WittenError> {
    let wp = prec + 24;
    let p = pi(wp);
    let f = |z: &Complex| -> Result<Complex, NumError> {
        let a = zeta_raw(z, wp);
        let b = zeta_raw(&Complex::with_val(wp, -z), wp);
        let sin = Complex::with_val(wp, z * &p).sin();
        Ok(-(a * b) * &p / (sin * z))
    };
    let spec = QuadratureSpec::auto(1.5, 0.5, PI, 0.0, 3.0, target_bits).symmetric(true);
    let r = integrate_vertical(f, &spec, wp)?;
    Ok(ApReal::new(Float::with_val(prec, r.value.value.real()), r.value.err))
}

/// ω'(0) with the integral computed to within about 2^{16−prec}.
pub fn omega_deriv0(prec: u32) -> Result<Deriv0Parts, WittenError> {
    let c = deriv0_constant_part(prec);
    let i = deriv0_integral(prec, prec.saturating_sub(16).max(48))?;
    let v = Float::with_val(prec, &c.value + &i.value);
    let err = Float::with_val(53, &c.err + &i.err);
    Ok(Deriv0Parts { constant_part: c, integral: i, value: ApReal::new(v, err) })
}

/// Four-point central difference (8[f(h)−f(−h)] − [f(2h)−f(−2h)]) / 12h.
fn central_diff<F>(mut f: F, h: &Float, wp: u32) -> Result<Complex, WittenError>
where
    F: FnMut(&Float) -> Result<Complex, WittenError>,
{
    let h2 = Float::with_val(wp, h * 2u32);
    let d1 = f(h)? - f(&Float::with_val(wp, -h))?;
    let d2 = f(&h2)? - f(&Float::with_val(wp, -&h2))?;
    Ok((d1 * 8u32 - d2) / Float::with_val(wp, h * 12u32))
}

/// ∂Δ/∂s at s = 0 by finite differences, next to −πζ(z)ζ(−z)/(z sin πz).
pub fn delta_s_derivative(z: &Complex, prec: u32) -> Result<(Complex, Complex), WittenError> {
    let wp = prec + 32;
    let z = Complex::with_val(wp, z);
    let delta = |s: &Float| -> Result<Complex, WittenError> {
        let s = Complex::with_val(wp, (s, 0));
        let g1 = gamma_raw(&Complex::with_val(wp, -&z), wp);
        let g2 = gamma_raw(&Complex::with_val(wp, &s + &z), wp);
        let z1 = zeta_raw(&(Complex::with_val(wp, &s * 2u32) + &z), wp);
        let z2 = zeta_raw(&Complex::with_val(wp, &s - &z), wp);
        Ok(g1 * g2 * z1 * z2 * rgamma(&s, wp))
    };
    let h = Float::with_val(wp, 2).pow(-(prec as i32) / 5);
    let fd = central_diff(delta, &h, wp)?;
    let p = pi(wp);
    let sin = Complex::with_val(wp, &z * &p).sin();
    let closed = -(zeta_raw(&z, wp) * zeta_raw(&Complex::with_val(wp, -&z), wp)) * &p / (sin * &z);
    Ok((Complex::with_val(prec, fd), Complex::with_val(prec, closed)))
}

/// ω'(0) by a central difference of the M = 2 continuation around 0.
pub fn omega_deriv0_fd(prec: u32, h: f64, target_bits: u32) -> Result<ApReal, WittenError> {
    let wp = prec + 16;
    let mut err = Float::with_val(53, 0);
    let f = |s: &Float| -> Result<Complex, WittenError> {
        let r = omega_continued_target(&Complex::with_val(wp, (s, 0)), 2, prec, target_bits)?;
        err = Float::with_val(53, &err + &r.est_error);
        Ok(r.value.value)
    };
    let hf = Float::with_val(wp, h);
    let d = central_diff(f, &hf, wp)?;
    let v = Float::with_val(prec, d.real());
    let e = err / h + Float::with_val(53, h).pow(4u32);
    Ok(ApReal::new(v, e))
}
