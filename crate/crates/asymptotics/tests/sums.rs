use rug::Float;
use su3_asym::*;

fn fl(x: f64) -> Float {
    Float::with_val(128, x)
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn nonpositive_t_is_rejected() {
    assert!(matches!(f_eval(&fl(0.0), 128), Err(AsymError::DomainError(_))));
    assert!(matches!(h_eval(&fl(-1.0), 128), Err(AsymError::DomainError(_))));
    assert!(moments(&fl(0.0), 128).is_err());
}

// Plain double loops over (j, k) in f64.
#[test]
fn sums_against_double_loops() {
    for t in [0.05f64, 0.5, 2.0] {
        let (mut f, mut h, mut en, mut var) = (0.0, 0.0, 0.0, 0.0);
        for j in 1..400u64 {
            for k in 1..400u64 {
                let d = (j * k * (j + k) / 2) as f64;
                let e = (-d * t).exp();
                f += e;
                h -= (-e).ln_1p();
                en += d * e / (1.0 - e);
                var += d * d * e / ((1.0 - e) * (1.0 - e));
            }
        }
        let s = sums(&fl(t), 128, None).unwrap();
        assert!(rel(s.f.value.to_f64(), f) < 1e-13, "t = {t}");
        assert!(rel(s.h.value.to_f64(), h) < 1e-13, "t = {t}");
        assert!(rel(s.en.value.to_f64(), en) < 1e-13, "t = {t}");
        assert!(rel(s.var.value.to_f64(), var) < 1e-13, "t = {t}");
        assert!(s.h.err.to_f64() < 1e-30);
    }
}

#[test]
fn h_equals_the_harmonic_sum_of_f() {
    for t in [0.3, 0.02] {
        let a = h_eval(&fl(t), 128).unwrap();
        let b = h_harmonic(&fl(t), 128).unwrap();
        assert!(Float::with_val(128, &a.value - &b).abs().to_f64() < 1e-30, "t = {t}");
    }
}

#[test]
fn large_t_is_exponentially_small() {
    assert!(h_eval(&fl(20.0), 128).unwrap().value.to_f64() < 1e-8);
    let m = moments(&fl(30.0), 128).unwrap();
    assert!(m.en.value.to_f64() < 1e-10);
    assert!(m.var.value.to_f64() > 0.0);
}

// E N = −h'(t) and Var N = h''(t), checked against central differences.
#[test]
fn moments_are_derivatives_of_h() {
    let t = fl(1e-3);
    let eps = fl(1e-9);
    let hp = h_eval(&Float::with_val(128, &t + &eps), 128).unwrap().value;
    let hm = h_eval(&Float::with_val(128, &t - &eps), 128).unwrap().value;
    let d = (hp - hm) / Float::with_val(128, &eps * 2u32);
    let m = moments(&t, 128).unwrap();
    let en = m.en.value.to_f64();
    assert!((en + d.to_f64()).abs() <= 1e-4 * en);

    let e2 = fl(1e-8);
    let ep = moments(&Float::with_val(128, &t + &e2), 128).unwrap().en.value;
    let em = moments(&Float::with_val(128, &t - &e2), 128).unwrap().en.value;
    let dv = (em - ep) / Float::with_val(128, &e2 * 2u32);
    assert!(rel(dv.to_f64(), m.var.value.to_f64()) < 1e-8);
}

// f(t) = I t^{-2/3} + √(2π) ζ(1/2) t^{-1/2} + 1/3 + c t^{1/2} + O(t^{3/2}).
// The second term is why t^{2/3} f(t)/I is still about 0.79 at t = 1e-4.
#[test]
fn small_t_expansion_of_f() {
    let c = constants(128);
    let e = f_expansion(&c);
    let ts = [1e-5f64, 1e-4, 1e-3, 1e-2];
    let table = DimTable::for_t(ts[0], 96);
    let mut leading = Vec::new();
    for t in ts {
        let tf = Float::with_val(96, t);
        let f = sums(&tf, 96, Some(&table)).unwrap().f.value;
        leading.push(f.to_f64() * t.powf(2.0 / 3.0) / c.i.to_f64());
        let r0 = Float::with_val(96, &f - e.eval(&tf, false)).to_f64() / t.sqrt();
        let r1 = Float::with_val(96, &f - e.eval(&tf, true)).to_f64() / t.powf(1.5);
        assert!(rel(r0, e.c_neg.to_f64()) < 0.02, "t = {t}: {r0}");
        assert!(r1.abs() < 1e-4, "t = {t}: {r1}");
    }
    assert!(leading.windows(2).all(|w| w[0] > w[1]), "{leading:?}");
    assert!((leading[1] - 0.7925).abs() < 1e-3, "{leading:?}");
}

// h(t) minus its four-term expansion is c_h t^{1/2} + O(t^{3/2}), and the
// derivative expansions carry the differentiated remainder.
#[test]
fn small_t_expansions_of_h_and_derivatives() {
    let c = constants(128);
    let ch = h_half_coefficient(&c).to_f64();
    let ts = [1e-5f64, 1e-4, 1e-3, 1e-2];
    let table = DimTable::for_t(ts[0], 96);
    for t in ts {
        let tf = Float::with_val(96, t);
        let s = sums(&tf, 96, Some(&table)).unwrap();
        let r = Float::with_val(96, &s.h.value - h_expansion(&c, &tf)).to_f64() / t.sqrt();
        let r1 = Float::with_val(96, &s.en.value + h1_expansion(&c, &tf)).to_f64() * t.sqrt();
        let r2 = Float::with_val(96, &s.var.value - h2_expansion(&c, &tf)).to_f64() * t.powf(1.5);
        let tol = 1e-4 + 0.1 * t;
        assert!((r - ch).abs() < tol * ch.abs(), "t = {t}: {r} vs {ch}");
        assert!((r1 + ch / 2.0).abs() < tol * ch.abs(), "t = {t}: {r1}");
        assert!((r2 + ch / 4.0).abs() < tol * ch.abs(), "t = {t}: {r2}");
    }
}

// ∫ f(t) t^{s−1} dt = 2^s Γ(s) ω(s); at s = 2 the right side is 4π^6/2835.
#[test]
fn mellin_transform_of_f() {
    for s in [2u32, 3] {
        let m = mellin_check(s, 1.0 / 256.0, 64).unwrap();
        let d = (m.integral.to_f64() - m.expected.to_f64()).abs();
        assert!(d < 1e-10, "s = {s}: {} vs {}", m.integral, m.expected);
    }
    let m = mellin_check(2, 1.0 / 256.0, 64).unwrap();
    assert!((m.expected.to_f64() - 4.0 * std::f64::consts::PI.powi(6) / 2835.0).abs() < 1e-14);
}
