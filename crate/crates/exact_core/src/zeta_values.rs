use rug::{Integer, Rational};

use crate::{bernoulli, factorial};

/// The rational c with ζ(2k) = c π^{2k}; c = −1/2 at k = 0.
pub fn zeta_even_coeff(k: u32) -> Rational {
    // ζ(2k) = (−1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!)
    let b = bernoulli(2 * k as usize);
    let two_pow = Rational::from(Integer::from(1) << (2 * k));
    let v = b * two_pow / Rational::from(factorial(2 * k) * 2u32);
    if k % 2 == 0 {
        -v
    } else {
        v
    }
}

/// ζ(−m) = (−1)^m B_{m+1}/(m+1) for m ≥ 0.
pub fn zeta_nonpositive(m: u32) -> Rational {
    let b = bernoulli(m as usize + 1) / Rational::from(m + 1);
    if m % 2 == 1 {
        -b
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(zeta_even_coeff(0), Rational::from((-1, 2)));
        assert_eq!(zeta_even_coeff(1), Rational::from((1, 6)));
        assert_eq!(zeta_even_coeff(2), Rational::from((1, 90)));
        assert_eq!(zeta_nonpositive(0), Rational::from((-1, 2)));
        assert_eq!(zeta_nonpositive(1), Rational::from((-1, 12)));
        assert_eq!(zeta_nonpositive(3), Rational::from((1, 120)));
        assert_eq!(zeta_nonpositive(2), 0);
    }
}
