use rug::Rational;
use su3_identities::*;

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

#[test]
fn small_expansions() {
    assert_eq!(eisenstein_qseries(4, 2).unwrap().coeffs(), ints(&[1, 240, 2160]).as_slice());
    assert_eq!(eisenstein_qseries(6, 1).unwrap().coeffs(), ints(&[1, -504]).as_slice());
    for k in [4, 8, 12, 20] {
        assert_eq!(*eisenstein_qseries(k, 5).unwrap().coeff(0), 1);
    }
    assert!(eisenstein_qseries(2, 5).is_err());
    assert!(eisenstein_qseries(7, 5).is_err());
    assert_eq!(eisenstein_qseries(4, 2).unwrap().to_string(), "1 + 240q + 2160q^2 + O(q^3)");
}

// Spaces of dimension one force E_4² = E_8 and E_4 E_6 = E_10.
#[test]
fn one_dimensional_spaces() {
    let q = 30;
    let e4 = eisenstein_qseries(4, q).unwrap();
    let e6 = eisenstein_qseries(6, q).unwrap();
    assert_eq!(&e4 * &e4, eisenstein_qseries(8, q).unwrap());
    assert_eq!(&e4 * &e6, eisenstein_qseries(10, q).unwrap());
    // and weight 12 is two-dimensional: E_12 differs from E_4³
    assert_ne!(&(&e4 * &e4) * &e4, eisenstein_qseries(12, q).unwrap());
}

#[test]
fn lift_holds_to_q40() {
    for n in 1..=6 {
        for c in verify_eisenstein_identity(n, 40).unwrap() {
            assert!(c.passed(), "{}", c.line());
        }
    }
}

#[test]
fn term_count_is_the_dimension() {
    for n in 1..=12 {
        assert_eq!(distinct_products(n).len() as u32, dim_modular_forms(6 * n + 2), "n = {n}");
    }
    assert_eq!(dim_modular_forms(2), 0);
    assert_eq!(dim_modular_forms(12), 2);
    assert_eq!(dim_modular_forms(14), 1);
}

#[test]
fn weights_are_the_zeta_ratios() {
    // n = 1: E_8 = E_4², weight 1
    let w = eisenstein_weights(1);
    assert_eq!(w.len(), 1);
    assert_eq!(w[0], (4, 4, Rational::from(1)));
    // weights add to one for every n
    for n in 1..=10 {
        let s: Rational = eisenstein_weights(n).into_iter().fold(Rational::new(), |a, (_, _, c)| a + c);
        assert_eq!(s, 1, "n = {n}");
    }
}

#[test]
fn shifted_weights_are_detected() {
    // weight 20 is two-dimensional, so moving weight between E_8 E_12 and
    // E_10² keeps the constant term but breaks higher coefficients
    let q = 10;
    let mut w = eisenstein_weights(3);
    let eps = Rational::from((1, 1000));
    w[0].2 += &eps;
    w[1].2 -= &eps;
    let mut rhs = QSeries::zero(q);
    for (a, b, c) in &w {
        let p = &eisenstein_qseries(*a, q).unwrap() * &eisenstein_qseries(*b, q).unwrap();
        rhs = &rhs + &p.scale(c);
    }
    let lhs = eisenstein_qseries(20, q).unwrap();
    assert_eq!(lhs.coeff(0), rhs.coeff(0));
    assert_ne!(lhs, rhs);
}
