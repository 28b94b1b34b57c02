use rug::Rational;
use su3_identities::*;

fn r(p: i64, q: i64) -> Rational {
    Rational::from((p, q))
}

#[test]
fn first_case() {
    let s = solve_alpha_beta(1).unwrap();
    assert_eq!(s.alpha, vec![r(2, 7), r(3, 7), r(2, 7)]);
    assert_eq!(s.beta, vec![r(6, 7)]);
    assert!(s.matches_closed_form);
}

#[test]
fn solutions_match_closed_forms() {
    for n in 1..=6 {
        let s = solve_alpha_beta(n).unwrap();
        assert!(s.matches_closed_form, "n = {n}");
        assert_eq!(s.rank as u32, 3 * n + 1);
        assert_eq!(s.alpha_sum(), 1);
        for (k, b) in s.beta.iter().enumerate() {
            assert_eq!(*b, Rational::from(&s.alpha[2 * k + 1] * 2u32));
        }
    }
}

// The binomial-coefficient system and a system derived from scratch for the
// same exponents have the same unique solution.
#[test]
fn binomial_form_agrees_with_direct_derivation() {
    for n in 1..=5u32 {
        let (a, b) = lineqs_system(n);
        let s1 = solve_rational(&a, &b).unwrap();
        let f: Vec<u32> = (2 * n + 1..=4 * n + 1).collect();
        let g: Vec<u32> = (1..=n).map(|k| 2 * n + 2 * k).collect();
        let (a2, b2) = ratio_form_system(6 * n + 2, &f, &g);
        let s2 = solve_rational(&a2, &b2).unwrap();
        assert!(s1.nullspace.is_empty() && s2.nullspace.is_empty());
        assert_eq!(s1.particular, s2.particular, "n = {n}");
    }
}

#[test]
fn closed_form_normalization_and_beta_relation() {
    for n in 1..=40 {
        let s: Rational = (1..=2 * n + 1).fold(Rational::new(), |acc, j| acc + alpha_closed(n, j));
        assert_eq!(s, 1, "n = {n}");
        for k in 1..=n {
            assert_eq!(beta_closed(n, k), alpha_closed(n, 2 * k) * 2u32);
        }
    }
}

#[test]
fn argument_range() {
    assert!(matches!(solve_alpha_beta(0), Err(IdentityError::InvalidArgument(_))));
    assert!(matches!(solve_alpha_beta(13), Err(IdentityError::InvalidArgument(_))));
}

#[test]
fn elimination_reports_nullspace_and_inconsistency() {
    // x + y = 2, 2x + 2y = 4
    let a = vec![vec![r(1, 1), r(1, 1)], vec![r(2, 1), r(2, 1)]];
    let s = solve_rational(&a, &[r(2, 1), r(4, 1)]).unwrap();
    assert_eq!(s.rank, 1);
    assert_eq!(s.nullspace.len(), 1);
    assert_eq!(s.particular, vec![r(2, 1), r(0, 1)]);
    assert_eq!(s.nullspace[0], vec![r(-1, 1), r(1, 1)]);
    assert_eq!(solve_rational(&a, &[r(2, 1), r(5, 1)]), Err(IdentityError::Inconsistent));
}

#[test]
fn generalized_system_without_enough_freedom_is_inconsistent() {
    // weight 6n−2 with the f exponents cut down to 2n..4n−2
    let n = 2u32;
    let f: Vec<u32> = (2 * n..=4 * n - 2).collect();
    let g: Vec<u32> = (1..=n).map(|k| 2 * n + 2 * k - 2).collect();
    assert_eq!(solve_generalized(6 * n - 2, &f, &g), Err(IdentityError::Inconsistent));
}
