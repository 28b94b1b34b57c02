use rug::Rational;
use su3_exact::{binomial, factorial, zeta_even_coeff};
use su3_identities::*;

/// Bernoulli numbers by the Akiyama–Tanigawa algorithm (B_1 = +1/2 there).
fn at_bernoulli(n: usize) -> Vec<Rational> {
    let mut a: Vec<Rational> = Vec::new();
    let mut out = Vec::new();
    for m in 0..=n {
        a.push(Rational::from((1, m as i64 + 1)));
        for j in (1..=m).rev() {
            let d = Rational::from(&a[j - 1] - &a[j]) * j as u32;
            a[j - 1] = d;
        }
        out.push(a[0].clone());
    }
    out[1] = -out[1].clone();
    out
}

#[test]
fn lacunary_identity_against_independent_bernoulli_numbers() {
    let b = at_bernoulli(6 * 12 + 2);
    let bo = |m: u32| Rational::from(&b[m as usize] / m);
    for n in 1..=12u32 {
        let lhs = bo(6 * n + 2);
        let mut s = Rational::new();
        for k in 1..=n {
            s += Rational::from(binomial(2 * n, 2 * k - 1)) * bo(2 * n + 2 * k) * bo(4 * n - 2 * k + 2);
        }
        let f = factorial(2 * n);
        let rhs = -Rational::from((factorial(4 * n + 1), f.clone() * &f)) * s;
        assert_eq!(lhs, rhs, "n = {n}");
        assert_eq!(bernoulli_lacunary_sides(n), (lhs, rhs));
    }
}

#[test]
fn lacunary_identity_holds_to_fifty() {
    for n in 1..=50 {
        let c = verify_bernoulli_lacunary(n);
        assert!(c.passed(), "{}", c.line());
    }
}

#[test]
fn fails_at_zero_by_one_twelfth() {
    let (l, r) = bernoulli_lacunary_sides(0);
    assert_eq!(l, Rational::from((1, 12)));
    assert_eq!(r, 0);
    let c = verify_bernoulli_lacunary(0);
    assert!(c.passed());
    assert!(c.name.ends_with(".expected-mismatch"));
    assert_eq!(c.abs_err, "1/12");
}

#[test]
fn zeta_forms_are_equivalent_term_by_term() {
    for n in 1..=50 {
        for c in verify_zeta_forms(n) {
            assert!(c.passed(), "{}", c.line());
        }
    }
}

#[test]
fn first_case_is_zeta8_from_zeta4_squared() {
    // ζ(8) = (6/7) ζ(4)²
    let t = zeta_form_terms(1);
    assert_eq!(t.plus_terms.len(), 1);
    let z4 = zeta_even_coeff(2);
    assert_eq!(t.plus_terms[0], Rational::from((6, 7)) * Rational::from(&z4 * &z4));
    assert_eq!(t.plus_lhs, zeta_even_coeff(4));
    let names: Vec<String> = verify_zeta_forms(1).into_iter().map(|c| c.name).collect();
    assert!(names.contains(&"identities.even_values.n=0".to_string()));
}

#[test]
fn mod6_identities_hold_to_thirty() {
    for n in 1..=30 {
        for c in verify_mod6_identities(n) {
            assert!(c.passed(), "{}", c.line());
        }
    }
    let s = mod6_identity2(1);
    assert_eq!(s.lhs, Rational::from((1, 252)));
    assert_eq!(s.rhs, Rational::from((1, 252)));
}

#[test]
fn typeset_mod6_variants_fail() {
    for n in 1..=10 {
        let p = printed_mod6_identity1(n);
        assert_ne!(p.lhs, p.rhs, "n = {n}");
    }
    for n in 2..=10 {
        let p = printed_mod6_identity2(n);
        assert_ne!(p.lhs, p.rhs, "n = {n}");
    }
}

#[test]
fn mod6_identities_come_out_of_the_generalized_system() {
    for n in 1..=6 {
        for c in verify_mod6_rediscovery(n) {
            assert!(c.passed(), "{}", c.line());
        }
    }
}

#[test]
fn zeta_pair_conversion_reproduces_the_main_identity() {
    // B_8/8 = −(5!/2!²) C(2,1) (B_4/4)² gives ζ(8) = (6/7) ζ(4)²
    let g = -Rational::from(30 * 2);
    assert_eq!(bernoulli_to_zeta_pairs(8, &[(4, g)]), vec![(4, Rational::from((6, 7)))]);
}
