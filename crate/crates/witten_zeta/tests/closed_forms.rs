use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};
use su3_exact::{rat, BigRat};
use su3_witten::*;

const P: u32 = 256;

fn pi() -> Float {
    Float::with_val(P, Constant::Pi)
}

// ζ(n) from MPFR, independent of the crate's own zeta.
fn mpfr_zeta(n: u32) -> Float {
    Float::with_val(P, n).zeta()
}

fn close(a: &Float, b: &Float, tol: &Float) -> bool {
    Float::with_val(P, a - b).abs() <= *tol
}

#[test]
fn even_values_printed() {
    assert_eq!(omega_closed_even(1), rat(1, 2835));
    assert_eq!(omega_closed_even(2), rat(19, 273648375));
    // C(−1,−1) = 1 makes the sum meaningful at n = 0
    assert_eq!(omega_closed_even(0), rat(1, 3));
}

#[test]
fn even_values_match_bernoulli_cube_integral() {
    for n in 1..=6 {
        assert_eq!(omega_closed_even(n), mordell_integral(n), "n = {n}");
    }
    assert_eq!(mordell_integral(1), rat(1, 2835));
    assert_eq!(mordell_integral(2), rat(19, 273648375));
}

#[test]
fn cube_integral_misses_at_zero() {
    assert_eq!(mordell_integral(0), rat(-1, 6));
    assert_ne!(mordell_integral(0), omega_closed_even(0));
}

#[test]
fn odd_values_printed() {
    assert_eq!(omega_closed_odd(0).coeffs, vec![BigRat::from(2)]);
    assert_eq!(omega_closed_odd(1).coeffs, vec![BigRat::from(20), BigRat::from(-2)]);
    assert_eq!(omega_closed_odd(2).coeffs, vec![BigRat::from(252), rat(-70, 3), rat(-2, 9)]);
    assert_eq!(omega_closed_odd(1).to_string(), "-2 π^2 ζ(7) + 20 ζ(9)");
    assert_eq!(omega_closed_odd(2).to_string(), "-2/9 π^4 ζ(11) - 70/3 π^2 ζ(13) + 252 ζ(15)");
}

#[test]
fn odd_form_evaluates_with_mpfr_zeta() {
    let tol = Float::with_val(P, 2).pow(-240);
    let p2 = Float::with_val(P, pi().square_ref());
    let w3 = Float::with_val(P, &mpfr_zeta(9) * 20u32) - Float::with_val(P, &p2 * mpfr_zeta(7)) * 2u32;
    assert!(close(&odd_value(1, P), &w3, &tol));
    let p4 = Float::with_val(P, p2.square_ref());
    let w5 = Float::with_val(P, &mpfr_zeta(15) * 252u32)
        - Float::with_val(P, &p2 * mpfr_zeta(13)) * 70u32 / 3u32
        - Float::with_val(P, &p4 * mpfr_zeta(11)) * 2u32 / 9u32;
    assert!(close(&odd_value(2, P), &w5, &tol));
}

#[test]
fn zeta_even_coefficients() {
    assert_eq!(zeta_even_coeff(0), rat(-1, 2));
    assert_eq!(zeta_even_coeff(1), rat(1, 6));
    assert_eq!(zeta_even_coeff(2), rat(1, 90));
    assert_eq!(zeta_even_coeff(3), rat(1, 945));
}

#[test]
fn direct_sum_at_small_integers() {
    let tol = Float::with_val(P, 2).pow(-240);
    let s = |x: f64| Complex::with_val(P, (x, 0));
    let w1 = omega_direct(&s(1.0), P).unwrap();
    assert_eq!(w1.method, Method::Direct);
    assert!(close(w1.value.value.real(), &(mpfr_zeta(3) * 2u32), &tol));
    let w2 = omega_direct(&s(2.0), P).unwrap();
    assert!(close(w2.value.value.real(), &(Float::with_val(P, pi().pow(6u32)) / 2835u32), &tol));
    let w4 = omega_direct(&s(4.0), P).unwrap();
    let want = Float::with_val(P, pi().pow(12u32)) * 19u32 / 273648375u32;
    assert!(close(w4.value.value.real(), &want, &tol));
    let w3 = omega_direct(&s(3.0), P).unwrap();
    assert!(close(w3.value.value.real(), &odd_value(1, P), &tol));
}

// Independent oracle: brute-force partial sums with an integral tail bound.
#[test]
fn direct_sum_against_brute_force_at_three() {
    let s = 3.0f64;
    let n = 400u64;
    let mut acc = 0.0f64;
    for j in 1..=n {
        for k in 1..=n {
            acc += ((j * k * (j + k)) as f64).powf(-s);
        }
    }
    let w = omega_direct(&Complex::with_val(P, (s, 0)), P).unwrap();
    let v = w.value.value.real().to_f64();
    // the omitted region j > n or k > n contributes < 2 ζ(3) Σ_{j>n} j^{-6} < 5e-14
    assert!(v > acc && v - acc < 1e-13, "{v} vs {acc}");
}

#[test]
fn direct_rejects_points_near_abscissa() {
    let e = omega_direct(&Complex::with_val(P, (0.7, 1.0)), P).unwrap_err();
    assert!(matches!(e, WittenError::OutOfDomain { .. }));
}

#[test]
fn nonpositive_integers_exact() {
    assert_eq!(omega_nonpositive_exact(0), rat(1, 3));
    for n in 1..=30 {
        assert_eq!(omega_nonpositive_exact(n), BigRat::new(), "n = {n}");
    }
}
