use rug::ops::Pow;
use rug::{Complete, Integer, Rational};

/// n! as an exact integer.
pub fn factorial(n: u32) -> Integer {
    Integer::factorial(n).complete()
}

/// Ordinary binomial coefficient for nonnegative arguments, zero when k > n.
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(n).binomial(k)
}

/// Binomial coefficient for arbitrary integers.
///
/// For `b >= 0` this is the falling-factorial definition
/// `a(a-1)...(a-b+1)/b!`, so it is a polynomial in `a`. Negative `b` gives 0,
/// with the single exception `C(-1,-1) = 1` needed by the even-value formula.
pub fn binom_ext(a: i64, b: i64) -> Integer {
    if b < 0 {
        return if a == -1 && b == -1 { Integer::from(1) } else { Integer::new() };
    }
    let b = u32::try_from(b).expect("lower index too large");
    if a >= 0 {
        return binomial(u32::try_from(a).expect("upper index too large"), b);
    }
    // C(a,b) = (-1)^b C(b-a-1, b) for a < 0
    let top = u32::try_from(i64::from(b) - a - 1).expect("upper index too large");
    let v = binomial(top, b);
    if b % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Rising factorial x(x+1)...(x+k-1) of a rational.
pub fn rising(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::from(1);
    let mut t = x.clone();
    for _ in 0..k {
        acc *= &t;
        t += 1;
    }
    acc
}

/// Divisor power sum: the sum of d^k over all positive divisors d of n.
pub fn sigma(k: u32, n: u64) -> Integer {
    assert!(n >= 1, "sigma needs n >= 1");
    let mut total = Integer::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += Integer::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += Integer::from(e).pow(k);
            }
        }
        d += 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_values() {
        assert_eq!(binom_ext(5, 2), 10);
        assert_eq!(binom_ext(-1, -1), 1);
        assert_eq!(binom_ext(3, -2), 0);
        assert_eq!(binom_ext(-3, 2), 6);
        assert_eq!(binom_ext(-1, 3), -1);
        assert_eq!(sigma(1, 6), 12);
        assert_eq!(sigma(0, 12), 6);
        assert_eq!(sigma(3, 4), 73);
        assert_eq!(factorial(0), 1);
        assert_eq!(rising(&Rational::from((1, 2)), 3), Rational::from((15, 8)));
    }
}
