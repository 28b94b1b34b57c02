//! Exact values at positive integers.

use rug::{Complex, Float};
use su3_exact::{bernoulli_poly, binom_ext, factorial, zeta_even_coeff, BigRat, RatPoly};
use su3_numerics::zeta_raw;

use crate::util::pi;

/// q with ω(2n) = q π^{6n}, from
/// ω(2n) = (4/3) Σ_{k=0}^{n} C(4n−2k−1, 2n−1) ζ(2k) ζ(6n−2k).
/// At n = 0 the convention C(−1,−1) = 1 gives 1/3.
pub fn omega_closed_even(n: u32) -> BigRat {
    let mut acc = BigRat::new();
    for k in 0..=n {
        let c = binom_ext(4 * n as i64 - 2 * k as i64 - 1, 2 * n as i64 - 1);
        acc += BigRat::from(c) * zeta_even_coeff(k) * zeta_even_coeff(3 * n - k);
    }
    acc * BigRat::from((4, 3))
}

/// ω(2n+1) = Σ_k c_k π^{2k} ζ(6n−2k+3), k = 0..n.
#[derive(Debug, Clone, PartialEq)]
pub struct OddClosedForm {
    pub n: u32,
    pub coeffs: Vec<BigRat>,
}

impl OddClosedForm {
    /// ζ argument multiplying π^{2k}.
    pub fn zeta_arg(&self, k: u32) -> u32 {
        6 * self.n - 2 * k + 3
    }

    pub fn eval(&self, prec: u32) -> Float {
        let wp = prec + 16;
        let pi2 = Float::with_val(wp, pi(wp).square_ref());
        let mut pw = Float::with_val(wp, 1);
        let mut acc = Float::new(wp);
        for (k, c) in self.coeffs.iter().enumerate() {
            let z = zeta_raw(&Complex::with_val(wp, self.zeta_arg(k as u32)), wp);
            acc += Float::with_val(wp, z.real() * &pw) * Float::with_val(wp, c);
            pw *= &pi2;
        }
        Float::with_val(prec, acc)
    }
}

impl std::fmt::Display for OddClosedForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            write!(f, "{}", BigRat::from(c.abs_ref()))?;
            match k {
                0 => {}
                1 => write!(f, " π^2")?,
                _ => write!(f, " π^{}", 2 * k)?,
            }
            write!(f, " ζ({})", self.zeta_arg(k as u32))?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// ω(2n+1) = −4 Σ_{k=0}^{n} C(4n−2k+1, 2n) ζ(2k) ζ(6n−2k+3), returned as
/// the rational coefficients of π^{2k} ζ(6n−2k+3).
pub fn omega_closed_odd(n: u32) -> OddClosedForm {
    let coeffs = (0..=n)
        .map(|k| {
            let c = binom_ext(4 * n as i64 - 2 * k as i64 + 1, 2 * n as i64);
            BigRat::from(c) * zeta_even_coeff(k) * BigRat::from(-4)
        })
        .collect();
    OddClosedForm { n, coeffs }
}

/// ω(2n+1) numerically from the odd closed form.
pub fn odd_value(n: u32, prec: u32) -> Float {
    omega_closed_odd(n).eval(prec)
}

/// q with (−1)^{n+1} (2π)^{6n} / (6 ((2n)!)^3) ∫_0^1 B_{2n}(x)^3 dx = q π^{6n}.
/// For n = 0 this is −1/6, which is not ω(0).
pub fn mordell_integral(n: u32) -> BigRat {
    let b: RatPoly = bernoulli_poly(2 * n as usize);
    let integral = b.pow(3).integrate_unit(0).as_constant().expect("one-variable integral is constant");
    let two_pow = BigRat::from(rug::Integer::from(1) << (6 * n));
    let f = factorial(2 * n);
    let den = BigRat::from(f.clone() * &f * &f * 6u32);
    let v = integral * two_pow / den;
    if n % 2 == 0 {
        -v
    } else {
        v
    }
}
