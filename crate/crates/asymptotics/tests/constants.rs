use rug::Float;
use su3_asym::*;

fn close(a: &Float, b: &Float, tol: f64) -> bool {
    Float::with_val(a.prec(), a - b).abs().to_f64() <= tol
}

// The printed decimals are truncations of the exact values.
#[test]
fn printed_decimals() {
    let c = constants(256);
    let printed = [
        (&c.a1, "6.858260476163126"),
        (&c.a2, "5.773601745105114"),
        (&c.a3, "0.911341072572436"),
        (&c.a4, "0.351637541558209"),
        (&c.k, "2.4462903348641789"),
    ];
    for (v, want) in printed {
        let digits = want.len() - want.find('.').unwrap() - 1;
        assert_eq!(truncate(v, digits), want);
    }
}

/// v truncated to `digits` decimals, for 0 < v < 10.
fn truncate(v: &Float, digits: usize) -> String {
    use rug::ops::Pow;
    let scale = rug::Integer::from(10u32).pow(digits as u32);
    let scaled = Float::with_val(v.prec(), v * &scale).floor();
    let int = scaled.to_integer().unwrap().to_string();
    let int = format!("{int:0>width$}", width = digits + 1);
    let (a, b) = int.split_at(int.len() - digits);
    format!("{a}.{b}")
}

#[test]
fn relations_hold() {
    let c = constants(256);
    for (name, l, r) in c.relations() {
        assert!(close(&l, &r, 1e-70), "{name}");
    }
    let y = c.y.to_f64();
    assert!(y > 0.0 && c.mu2.to_f64() < 0.0);
    // τ-constants, A's and B's against their definitions in X, Y
    let x = c.x.to_f64();
    assert!((c.tau1.to_f64() - 2.0 * x * x).abs() < 1e-14);
    assert!((c.a3.to_f64() - 3.0 / 80.0 * x.powi(-4) * y * y).abs() < 1e-14);
    assert!((c.b5.to_f64() + y.powi(4) / (2560.0 * x.powi(10))).abs() < 1e-14);
}

#[test]
fn constants_against_mpfr() {
    let p = 200;
    let c = constants(p);
    let g13 = Float::with_val(p + 20, Float::with_val(p + 20, 1) / 3u32).gamma();
    let z53 = Float::with_val(p + 20, Float::with_val(p + 20, 5) / 3u32).zeta();
    let base = Float::with_val(p + 20, g13.square_ref()) * &z53 / 9u32;
    let x = (base.ln() * 3u32 / 10u32).exp();
    assert!(close(&Float::with_val(p, &x), &c.x, 1e-55));
    let zh = Float::with_val(p + 20, 0.5).zeta();
    let z32 = Float::with_val(p + 20, 1.5).zeta();
    let pi = Float::with_val(p + 20, rug::float::Constant::Pi);
    let y = -(pi.sqrt() * zh * z32);
    assert!(close(&Float::with_val(p, &y), &c.y, 1e-55));
}

#[test]
fn both_k_formulas_agree() {
    let c = constants(128);
    let k = k_via_omega_deriv0(&c).unwrap();
    assert!(close(&k.value, &c.k, 1e-30));
    assert!(k.err.to_f64() < 1e-30);
}

#[test]
fn double_integral_three_ways() {
    let i = integral_i(192);
    assert!(close(&i.closed, &i.quadrature, 1e-50));
    assert!(close(&i.closed, &i.beta, 1e-50));
    assert!(close(&i.closed, &constants(192).i, 1e-50));
}
