use rug::ops::Pow;
use rug::{Complex, Float};
use su3_numerics::ln_2pi;
use su3_witten::*;

const P: u32 = 256;

#[test]
fn derivative_at_zero_is_log_two_pi() {
    let d = omega_deriv0(P).unwrap();
    let printed = Float::with_val(P, Float::parse("1.83787706640934548356").unwrap());
    assert!(Float::with_val(P, &d.value.value - &printed).abs() < 1e-18);
    let l = ln_2pi(P);
    assert!(Float::with_val(P, &d.value.value - &l).abs() < Float::with_val(P, 10).pow(-40));
    let printed_int = Float::with_val(P, Float::parse("-0.002807659").unwrap());
    assert!(Float::with_val(P, &d.integral.value - &printed_int).abs() < 1e-8);
}

#[test]
fn contour_and_real_line_forms_agree() {
    let a = deriv0_integral(160, 140).unwrap();
    let b = deriv0_integral_contour(160, 140).unwrap();
    assert!(Float::with_val(160, &a.value - &b.value).abs() < 1e-38);
}

#[test]
fn simplified_s_derivative_matches_finite_differences() {
    for y in [0.0, 0.8, -2.5, 6.0] {
        let z = Complex::with_val(P, (1.5, y));
        let (fd, closed) = delta_s_derivative(&z, P).unwrap();
        let d = Float::with_val(P, Complex::with_val(P, &fd - &closed).abs_ref());
        let scale = Float::with_val(P, closed.abs_ref());
        assert!(d < scale * 1e-30, "z = {z}: {d}");
    }
}

#[test]
fn finite_difference_of_continuation() {
    let d = omega_deriv0_fd(128, 1e-6, 110).unwrap();
    let l = ln_2pi(128);
    assert!(Float::with_val(128, &d.value - &l).abs() < 1e-18, "{}", d.value);
}
