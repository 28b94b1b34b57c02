use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};
use su3_exact::rat;
use su3_witten::*;

const P: u32 = 256;

fn c(x: f64, y: f64) -> Complex {
    Complex::with_val(P, (x, y))
}

fn cabs(z: &Complex) -> Float {
    Float::with_val(P, z.abs_ref())
}

fn ten_pow(e: i32) -> Float {
    Float::with_val(P, 10).pow(e)
}

#[test]
fn agrees_with_direct_at_two_to_full_precision() {
    let s = c(2.0, 0.0);
    let a = omega_continued(&s, 4, P).unwrap();
    assert_eq!(a.method, Method::Continued(4));
    let b = omega_direct(&s, P).unwrap();
    let d = cabs(&Complex::with_val(P, &a.value.value - &b.value.value));
    assert!(d < Float::with_val(P, 2).pow(40 - P as i32), "{d}");
}

#[test]
fn value_at_zero() {
    let w = omega_continued(&c(0.0, 0.0), 2, P).unwrap();
    let third = Float::with_val(P, 1) / 3u32;
    let d = cabs(&Complex::with_val(P, &w.value.value - &third));
    assert!(d < ten_pow(-30), "{d}");
}

#[test]
fn trivial_zeros() {
    for n in 1..=6u32 {
        let s = c(-(n as f64), 0.0);
        for m in [2 * n + 2, 2 * n + 3] {
            let w = omega_continued(&s, m, P).unwrap();
            assert!(cabs(&w.value.value) < ten_pow(-30), "ω(-{n}) with M = {m}: {}", w.value);
        }
    }
}

#[test]
fn trivial_zeros_need_the_full_finite_sum() {
    // Without the k = 2n+1 term the strip condition fails, and the code
    // must refuse rather than return the unbalanced half.
    let e = omega_continued(&c(-2.0, 0.0), 5, P).unwrap_err();
    assert!(matches!(e, WittenError::StripViolation { m: 5, .. }));
}

#[test]
fn method_agreement_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let s = c(rng.gen_range(0.75..3.0), rng.gen_range(-10.0..10.0));
        let a = omega_direct(&s, P).unwrap();
        let b = omega_continued_target(&s, 3, P, 112).unwrap();
        let d = cabs(&Complex::with_val(P, &a.value.value - &b.value.value));
        assert!(d < ten_pow(-30), "s = {s}: {d}");
        assert!(b.est_error < ten_pow(-30));
    }
}

#[test]
fn positive_integers_match_closed_forms() {
    let pi = Float::with_val(P, Constant::Pi);
    for n in 1..=3u32 {
        let s = c(2.0 * n as f64, 0.0);
        let w = omega_continued_target(&s, default_m(&s), P, 112).unwrap();
        let q = omega_closed_even(n);
        let want = Float::with_val(P, pi.clone().pow(6 * n)) * Float::with_val(P, &q);
        let d = cabs(&Complex::with_val(P, &w.value.value - &want));
        assert!(d < ten_pow(-30) * &want, "ω({}) : {d}", 2 * n);
    }
    for n in 0..=2u32 {
        let s = c(2.0 * n as f64 + 1.0, 0.0);
        let w = omega_continued_target(&s, default_m(&s), P, 112).unwrap();
        let want = odd_value(n, P);
        let d = cabs(&Complex::with_val(P, &w.value.value - &want));
        assert!(d < ten_pow(-30) * &want, "ω({}) : {d}", 2 * n + 1);
    }
}

#[test]
fn near_removable_points_use_guard_bits() {
    // s = 1 + 1e-12 sits next to cancelling poles of size 1e12
    let s = c(1.0 + 1e-12, 0.0);
    let a = omega_continued_target(&s, 3, P, 112).unwrap();
    let b = omega_direct(&s, P).unwrap();
    let d = cabs(&Complex::with_val(P, &a.value.value - &b.value.value));
    assert!(d < ten_pow(-30), "{d}");
}

#[test]
fn strip_and_pole_guards() {
    assert!(matches!(
        omega_continued(&c(3.0, 0.0), 2, P),
        Err(WittenError::StripViolation { m: 2, .. })
    ));
    assert!(matches!(
        omega_continued(&c(-0.25, 0.0), 2, P),
        Err(WittenError::StripViolation { .. })
    ));
    let near = Complex::with_val(P, (Float::with_val(P, 2) / 3u32 + Float::with_val(P, 1e-30), 0));
    match omega_continued(&near, 3, P) {
        Err(WittenError::NearPole { location, .. }) => assert_eq!(location, rat(2, 3)),
        other => panic!("expected a pole error, got {other:?}"),
    }
    match omega_continued(&c(-1.5, 1e-40), 6, P) {
        Err(WittenError::NearPole { location, .. }) => assert_eq!(location, rat(-3, 2)),
        other => panic!("expected a pole error, got {other:?}"),
    }
}

#[test]
fn default_m_always_inside_strip() {
    for i in -40..=40 {
        let sigma = i as f64 * 0.25 + 0.01;
        let m = default_m(&c(sigma, 0.0));
        assert!(in_strip(sigma, m), "σ = {sigma}, M = {m}");
    }
}

// Bounded on Re s = 1 by absolute convergence; this only checks that the
// samples stay under a polynomial envelope fitted to the first two.
#[test]
fn growth_envelope_on_line_one() {
    let p = 128;
    let ts: [f64; 4] = [10.0, 20.0, 40.0, 80.0];
    let vals: Vec<f64> = ts
        .iter()
        .map(|&t| {
            let w = omega_direct(&Complex::with_val(p, (1.0, t)), p).unwrap();
            Float::with_val(53, w.value.value.abs_ref()).to_f64()
        })
        .collect();
    let m = (vals[1] / vals[0]).ln() / 2f64.ln();
    let cc = vals[0] / ts[0].powf(m);
    for i in 2..4 {
        assert!(vals[i] <= 10.0 * cc * ts[i].powf(m.max(0.0)), "t = {}: {} (C = {cc}, M = {m})", ts[i], vals[i]);
    }
}
