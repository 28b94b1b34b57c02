use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

use crate::ap::{check_prec, ApComplex, NumError};

/// Jacobi theta functions in the nome q = e^{iπz}:
/// J2 = 2 q^{1/4} Σ_{k≥0} q^{k(k+1)}, J3 = Σ_k q^{k²}, J4 = Σ_k (-1)^k q^{k²}.
pub fn theta(kind: u8, z: &Complex, prec: u32) -> Result<ApComplex, NumError> {
    check_prec(prec)?;
    if !(2..=4).contains(&kind) {
        return Err(NumError::DomainError(format!("theta kind {kind} is not 2, 3 or 4")));
    }
    if *z.imag() <= 0 {
        return Err(NumError::DomainError("theta needs Im z > 0".into()));
    }
    // the series has O(sqrt(prec / Im z)) terms; a few guard bits cover rounding
    let y = z.imag().to_f64();
    let terms = ((prec as f64 + 8.0) * std::f64::consts::LN_2 / (std::f64::consts::PI * y)).sqrt();
    let wp = prec + 16 + terms.log2().max(0.0).ceil() as u32;
    let pi = Float::with_val(wp, Constant::Pi);
    let ipz = Complex::with_val(wp, z * &pi).mul_i(false);
    let q = Complex::with_val(wp, ipz.exp_ref());
    let q2 = Complex::with_val(wp, q.square_ref());
    let eps = Float::with_val(53, 2).pow(-(prec as i32) - 8);

    // For J2 the k-th term is q^{k(k+1)}, ratio q^{2k+2}; otherwise q^{k²}, ratio q^{2k+1}.
    let (mut term, mut ratio) = if kind == 2 {
        (Complex::with_val(wp, 1), Complex::with_val(wp, &q2))
    } else {
        (Complex::with_val(wp, &q), Complex::with_val(wp, &q * &q2))
    };
    let mut sum = if kind == 2 { Complex::new(wp) } else { Complex::with_val(wp, 1) };
    let mut k = 0u64;
    loop {
        let signed = if kind == 4 && k % 2 == 0 {
            Complex::with_val(wp, -&term)
        } else {
            term.clone()
        };
        let add = if kind == 2 { signed } else { signed * 2u32 };
        sum += &add;
        if Float::with_val(53, term.abs_ref()) < eps {
            break;
        }
        term *= &ratio;
        ratio *= &q2;
        k += 1;
    }
    if kind == 2 {
        let q4 = Complex::with_val(wp, ipz / 4u32).exp();
        sum = sum * q4 * 2u32;
    }
    Ok(ApComplex::nominal(Complex::with_val(prec, sum)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j3_at_i() {
        let z = Complex::with_val(256, (0, 1));
        let v = theta(3, &z, 256).unwrap().value;
        let pi = Float::with_val(256, Constant::Pi);
        let g = crate::gamma(&Complex::with_val(256, (0.75, 0)), 256).unwrap().value;
        let want = Float::with_val(256, pi.sqrt_ref()).sqrt() / g.real();
        assert!(Float::with_val(256, v.real() - &want).abs() < 1e-70);
    }

    #[test]
    fn j3_far_up() {
        let z = Complex::with_val(256, (0, 10));
        let v = theta(3, &z, 256).unwrap().value;
        let x = Float::with_val(256, v.real() - 1u32).to_f64();
        assert!((x - 2.0 * (-10.0 * std::f64::consts::PI).exp()).abs() < 1e-25);
        assert!(theta(3, &Complex::with_val(64, (0, -1)), 64).is_err());
    }
}
