//! Exact checks of the summation identities.

use rug::Rational;
use su3_identities::{
    alpha_closed, beta_closed, solve_alpha_beta, verify_bernoulli_lacunary, verify_eisenstein_identity,
    verify_mod6_identities, verify_mod6_rediscovery, verify_symmetric2, verify_wz_pair, verify_zeilberger_certificates,
    verify_zeta_forms,
};
use su3_report::CheckReport;

/// The lacunary recurrence for n = 0..=n_max; n = 0 is the documented miss.
pub fn bernoulli(n_max: u32) -> Vec<CheckReport> {
    (0..=n_max).map(verify_bernoulli_lacunary).collect()
}

/// Both zeta forms of the recurrence, n = 1..=n_max.
pub fn zeta_forms(n_max: u32) -> Vec<CheckReport> {
    (1..=n_max).flat_map(verify_zeta_forms).collect()
}

/// The Eisenstein lift for each n in `ns`, coefficientwise to q^qmax.
pub fn eisenstein(ns: impl IntoIterator<Item = u32>, qmax: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in ns {
        match verify_eisenstein_identity(n, qmax) {
            Ok(c) => out.extend(c),
            Err(e) => out.push(CheckReport::error(format!("identities.eisenstein.n={n}"), e)),
        }
    }
    out
}

/// WZ pair with S(n) = 1 up to `wz_n`, the creative-telescoping
/// certificates with S1 = S2 up to `ct_n`, and the symmetric variant.
pub fn wz(wz_n: u32, ct_n: u32) -> Vec<CheckReport> {
    let mut out = verify_wz_pair(wz_n);
    out.extend(verify_zeilberger_certificates(ct_n));
    for n in 1..=ct_n.min(6) {
        out.extend(verify_symmetric2(n));
    }
    out
}

/// Both mod-6 identities for n = 1..=n_max, and their rediscovery from the
/// generalized linear system for n ≤ `rediscover_max`.
pub fn mod6(n_max: u32, rediscover_max: u32) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = (1..=n_max).flat_map(verify_mod6_identities).collect();
    for n in 1..=rediscover_max.min(n_max) {
        out.extend(verify_mod6_rediscovery(n));
    }
    out
}

fn rat_list(v: &[Rational]) -> String {
    format!("({})", v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "))
}

/// Solves the α, β system at n and compares with the closed forms.
pub fn solve(n: u32) -> Vec<CheckReport> {
    let name = format!("identities.linear_system.n={n}");
    let sol = match solve_alpha_beta(n) {
        Ok(s) => s,
        Err(e) => return vec![CheckReport::error(name, e)],
    };
    let alpha_want: Vec<Rational> = (1..=2 * n + 1).map(|j| alpha_closed(n, j)).collect();
    let beta_want: Vec<Rational> = (1..=n).map(|k| beta_closed(n, k)).collect();
    let mut out = vec![
        CheckReport::truth(format!("{name}.alpha"), rat_list(&sol.alpha), rat_list(&alpha_want), sol.alpha == alpha_want, "solved vs closed form"),
        CheckReport::truth(format!("{name}.beta"), rat_list(&sol.beta), rat_list(&beta_want), sol.beta == beta_want, "solved vs closed form"),
        CheckReport::truth(
            format!("{name}.rank"),
            sol.rank.to_string(),
            (3 * n + 1).to_string(),
            sol.rank == (3 * n + 1) as usize,
            "unique solution",
        ),
    ];
    if n == 1 {
        let want = [Rational::from((2, 7)), Rational::from((3, 7)), Rational::from((2, 7))];
        out.push(CheckReport::truth(format!("{name}.alpha_printed"), rat_list(&sol.alpha), rat_list(&want), sol.alpha == want, ""));
    }
    out
}

/// The generalized system for weights 6n−2 and 6n.
pub fn solve_generalized(n: u32) -> Vec<CheckReport> {
    verify_mod6_rediscovery(n)
}
