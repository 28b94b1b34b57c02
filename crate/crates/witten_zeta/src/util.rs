use rug::float::Constant;
use rug::{Complex, Float};
use su3_exact::{bernoulli, BigRat};
use su3_numerics::gamma_raw;

pub(crate) fn cx(wp: u32, re: f64, im: f64) -> Complex {
    Complex::with_val(wp, (re, im))
}

pub(crate) fn from_rat(wp: u32, q: &BigRat) -> Complex {
    Complex::with_val(wp, (Float::with_val(wp, q), 0))
}

pub(crate) fn mag(z: &Complex) -> f64 {
    Float::with_val(53, z.abs_ref()).to_f64()
}

pub(crate) fn pi(wp: u32) -> Float {
    Float::with_val(wp, Constant::Pi)
}

/// B_n as a float.
pub(crate) fn bern(n: usize, wp: u32) -> Float {
    Float::with_val(wp, &bernoulli(n))
}

/// 1/Γ(s), finite everywhere.
pub(crate) fn rgamma(s: &Complex, wp: u32) -> Complex {
    if is_nonpositive_integer(s) {
        return Complex::new(wp);
    }
    if s.real().to_f64() < 0.5 {
        // 1/Γ(s) = sin(πs) Γ(1-s) / π
        let p = pi(wp);
        let sin = Complex::with_val(wp, s * &p).sin();
        let g = gamma_raw(&Complex::with_val(wp, 1 - s), wp);
        return sin * g / p;
    }
    gamma_raw(s, wp).recip()
}

pub(crate) fn is_nonpositive_integer(s: &Complex) -> bool {
    s.imag().is_zero() && s.real().is_integer() && *s.real() <= 0
}

/// The integer nearest to s, with the distance to it.
pub(crate) fn nearest_integer(s: &Complex) -> (i64, f64) {
    let re = s.real().to_f64();
    let n = re.round();
    let d = Float::with_val(53, Complex::with_val(s.prec().0, s - n as i64).abs_ref()).to_f64();
    (n as i64, d)
}

/// Exact integer value of s if it is a real integer.
pub(crate) fn as_integer(s: &Complex) -> Option<i64> {
    if s.imag().is_zero() && s.real().is_integer() {
        s.real().to_integer().and_then(|i| i.to_i64())
    } else {
        None
    }
}

/// Guard bits lost to cancellation when evaluating at distance d from a
/// removable singularity.
pub(crate) fn cancellation_bits(d: f64) -> u32 {
    if d >= 0.5 || d <= 0.0 {
        0
    } else {
        (-d.log2()).ceil() as u32 + 2
    }
}
