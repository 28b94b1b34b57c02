//! The Eisenstein lift. With E_k = G_k / (2ζ(k)) normalized to constant
//! term 1, dividing the identity by 2ζ(6n+2) gives
//!   E_{6n+2} = Σ_k w_{n,k} E_{2n+2k} E_{4n−2k+2},
//! with rational weights because the powers of π cancel.

use std::collections::{BTreeMap, BTreeSet};

use rug::Rational;
use su3_exact::{bernoulli, binomial, factorial, sigma, zeta_even_coeff};
use su3_report::CheckReport;

use crate::bernoulli_forms::zeta_form_terms;
use crate::{IdentityError, QSeries};

/// E_k(q) = 1 − (2k/B_k) Σ_{m≥1} σ_{k−1}(m) q^m up to q^qmax.
pub fn eisenstein_qseries(k2: u32, qmax: usize) -> Result<QSeries, IdentityError> {
    if k2 < 4 || k2 % 2 == 1 {
        return Err(IdentityError::InvalidArgument(format!("weight {k2} must be even and at least 4")));
    }
    let c = -Rational::from(2 * k2) / bernoulli(k2 as usize);
    let mut coeffs = vec![Rational::from(1)];
    for m in 1..=qmax {
        coeffs.push(Rational::from(&c * sigma(k2 - 1, m as u64)));
    }
    Ok(QSeries::from_coeffs(coeffs, qmax))
}

/// dim M_{2k}: ⌊k/6⌋ when k ≡ 1 (mod 6), otherwise ⌊k/6⌋ + 1.
pub fn dim_modular_forms(weight: u32) -> u32 {
    assert!(weight % 2 == 0, "odd weight");
    let k = weight / 2;
    if k % 6 == 1 {
        k / 6
    } else {
        k / 6 + 1
    }
}

/// (a, b, w_{n,k}) for k = 1..n with a = 2n+2k, b = 4n−2k+2.
pub fn eisenstein_weights(n: u32) -> Vec<(u32, u32, Rational)> {
    let f = factorial(2 * n);
    let central = Rational::from((factorial(4 * n + 1), f.clone() * &f));
    let zw = zeta_even_coeff(3 * n + 1);
    (1..=n)
        .map(|k| {
            let a = 2 * n + 2 * k;
            let b = 4 * n - 2 * k + 2;
            let coef = Rational::from((1, 6 * n + 1))
                * &central
                * Rational::from((binomial(2 * n, 2 * k - 1), binomial(6 * n, 2 * n + 2 * k - 1)));
            // coef · (2ζ(a))(2ζ(b)) / (2ζ(w))
            let w = coef * 2u32 * zeta_even_coeff(a / 2) * zeta_even_coeff(b / 2) / &zw;
            (a, b, w)
        })
        .collect()
}

/// Unordered products {a, b} appearing on the right side.
pub fn distinct_products(n: u32) -> BTreeSet<(u32, u32)> {
    eisenstein_weights(n).into_iter().map(|(a, b, _)| (a.min(b), a.max(b))).collect()
}

/// Coefficientwise check up to q^qmax, the constant term against the
/// zeta-plus form, and the count of distinct products against dim M_{6n+2}.
pub fn verify_eisenstein_identity(n: u32, qmax: usize) -> Result<Vec<CheckReport>, IdentityError> {
    if n == 0 {
        return Err(IdentityError::InvalidArgument("n must be positive".into()));
    }
    let w = 6 * n + 2;
    let mut cache: BTreeMap<u32, QSeries> = BTreeMap::new();
    let mut get = |k: u32| -> Result<QSeries, IdentityError> {
        if let Some(s) = cache.get(&k) {
            return Ok(s.clone());
        }
        let s = eisenstein_qseries(k, qmax)?;
        cache.insert(k, s.clone());
        Ok(s)
    };
    let lhs = get(w)?;
    let weights = eisenstein_weights(n);
    let mut rhs = QSeries::zero(qmax);
    for (a, b, c) in &weights {
        let prod = &get(*a)? * &get(*b)?;
        rhs = &rhs + &prod.scale(c);
    }
    let agree = lhs.coeffs().iter().zip(rhs.coeffs()).filter(|(x, y)| x == y).count();
    let p = format!("identities.eisenstein.n={n}");
    let mut out = vec![CheckReport::truth(
        format!("{p}.qseries"),
        format!("E_{w} coefficient of q^{qmax}: {}", lhs.coeff(qmax)),
        format!("{agree} of {} coefficients agree", qmax + 1),
        agree == qmax + 1,
        "",
    )];
    let constant: Rational = weights.iter().fold(Rational::new(), |acc, (_, _, c)| acc + c);
    let t = zeta_form_terms(n);
    let from_zeta = t.plus_rhs() / &t.plus_lhs;
    out.push(CheckReport::exact(
        format!("{p}.constant_term"),
        &constant,
        &from_zeta,
        "Σ w_k against the zeta-plus form divided by ζ(6n+2)",
    ));
    out.push(CheckReport::exact(format!("{p}.constant_term_is_one"), &constant, &Rational::from(1), ""));
    let distinct = distinct_products(n).len() as u32;
    let dim = dim_modular_forms(w);
    out.push(CheckReport::truth(
        format!("{p}.distinct_terms"),
        distinct.to_string(),
        format!("dim M_{w} = {dim}"),
        distinct == dim,
        "",
    ));
    Ok(out)
}
