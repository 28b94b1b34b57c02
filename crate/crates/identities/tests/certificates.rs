use rug::Rational;
use su3_exact::binomial;
use su3_identities::*;

#[test]
fn wz_pair_is_a_polynomial_identity() {
    assert!(wz_certificate_identity().is_zero());
    for c in verify_wz_pair(40) {
        assert!(c.passed(), "{}", c.line());
    }
}

#[test]
fn normalization_for_half_integers_too() {
    // S(n) = Σ_j α_{n/2, j}, so n odd covers the half-integer case
    for n in 0..=80 {
        assert_eq!(normalization_sum(n), 1, "n = {n}");
    }
    assert_eq!(normalization_sum(7), 1);
}

#[test]
fn zeilberger_certificates() {
    assert!(zeilberger_certificate_identity(1).is_zero());
    assert!(zeilberger_certificate_identity(2).is_zero());
    for c in verify_zeilberger_certificates(8) {
        assert!(c.passed(), "{}", c.line());
    }
    assert_eq!(s1(3, 0), s2(3, 0));
    assert_eq!(s1(3, 1), s2(3, 1));
}

// Shift quotients checked against exact values.
#[test]
fn shift_ratios_are_not_trivially_zero() {
    let t = wz_term();
    let r = t.shift_ratio(0, 1);
    assert!(!r.is_zero());
    // F(n+1,k)/F(n,k) at n = 3, k = 1 from exact values
    let f = |n: u32, k: u32| {
        let fact = su3_exact::factorial;
        Rational::from((fact(2 * n + 1), fact(n).square() * (3 * n + 1))) * Rational::from((binomial(n, k), binomial(3 * n, n + k)))
    };
    let pt = [Rational::from(3), Rational::from(1)];
    assert_eq!(r.eval(&pt).unwrap(), f(4, 1) / f(3, 1));
    let rk = t.shift_ratio(1, 1);
    assert_eq!(rk.eval(&pt).unwrap(), f(3, 2) / f(3, 1));
}

#[test]
fn hyper_term_signs_and_negative_shifts() {
    // T = (−1)^n n! ; T(n−2)/T(n) = 1/(n(n−1))
    let t = HyperTerm::new(&["n"]).sign(&[1]).fact(Affine::new(0, &[1]), 1);
    let r = t.shift_ratio(0, -2);
    assert_eq!(r.eval(&[Rational::from(5)]).unwrap(), Rational::from((1, 20)));
    let r1 = t.shift_ratio(0, 1);
    assert_eq!(r1.eval(&[Rational::from(5)]).unwrap(), Rational::from(-6));
}

#[test]
fn symmetric_family() {
    for n in 1..=6 {
        for c in verify_symmetric2(n) {
            assert!(c.passed(), "{}", c.line());
        }
    }
    for m in 0..=8 {
        let (l, r) = symmetric2_sides(2, m);
        assert_eq!(l, r, "m = {m}");
    }
    // at m = 2n the left side is an alternating sum of C(n,j) weights and vanishes
    for n in 1..=6 {
        assert_eq!(symmetric2_sides(n, 2 * n).0, 0);
    }
}
