//! Proof certificates for the normalization Σ_j α_{n,j} = 1 and for the
//! binomial sums behind the linear system.
//!
//! Each certificate identity is divided by its hypergeometric term, which
//! turns it into a rational-function identity; clearing denominators leaves
//! a polynomial identity that is checked exactly.

use rug::{Integer, Rational};
use su3_exact::{binomial, factorial, poly_identity_equal, poly_identity_equal_eval, RatPoly};
use su3_report::CheckReport;

use crate::hyper::{Affine, HyperTerm, RatFunc};

/// C(a, b), zero when a < 0, b < 0 or b > a.
pub fn binomial0(a: i64, b: i64) -> Integer {
    if a < 0 || b < 0 || b > a {
        Integer::new()
    } else {
        binomial(a as u32, b as u32)
    }
}

fn lin(vars: &[&str], c0: i64, c: &[i64]) -> RatPoly {
    RatPoly::affine(vars, c0, c)
}

/// F(n,k) = 1/(3n+1) (2n+1)!/(n!)² C(n,k)/C(3n,n+k) as a hypergeometric term.
pub fn wz_term() -> HyperTerm {
    HyperTerm::new(&["n", "k"])
        .linear(Affine::new(1, &[3, 0]), -1)
        .fact(Affine::new(1, &[2, 0]), 1)
        .fact(Affine::new(0, &[1, 0]), -2)
        .binom(Affine::new(0, &[1, 0]), Affine::new(0, &[0, 1]), 1)
        .binom(Affine::new(0, &[3, 0]), Affine::new(0, &[1, 1]), -1)
}

/// R(n,k) = −k(2n−k+1)(11n²+2k²−5nk+27n−6k+16) / (3(n+1)(3n+2)(3n+4)(n−k+1)),
/// for arbitrary polynomial arguments.
fn wz_r(n: &RatPoly, k: &RatPoly) -> RatFunc {
    let vars: Vec<String> = n.variables().to_vec();
    let v: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let c = |x: i64| RatPoly::constant(&v, x);
    let two_n = &c(2) * n;
    let quad = &(&(&(&(&(&c(11) * &(n * n)) + &(&c(2) * &(k * k))) - &(&c(5) * &(n * k))) + &(&c(27) * n))
        - &(&c(6) * k))
        + &c(16);
    let num = -&(&(k * &(&(&two_n - k) + &c(1))) * &quad);
    let den = &(&(&(&c(3) * &(n + &c(1))) * &(&(&c(3) * n) + &c(2))) * &(&(&c(3) * n) + &c(4))) * &(&(n - k) + &c(1));
    RatFunc::new(num, den)
}

/// F(n+1,k)/F − 1 − [R(n,k+1) F(n,k+1)/F − R(n,k)], which must vanish.
pub fn wz_certificate_identity() -> RatFunc {
    let t = wz_term();
    let v = ["n", "k"];
    let n = lin(&v, 0, &[1, 0]);
    let k = lin(&v, 0, &[0, 1]);
    let k1 = lin(&v, 1, &[0, 1]);
    let lhs = t.shift_ratio(0, 1).sub(&RatFunc::constant(&v, 1));
    let rhs = wz_r(&n, &k1).mul(&t.shift_ratio(1, 1)).sub(&wz_r(&n, &k));
    lhs.sub(&rhs)
}

/// F(n,k) evaluated exactly, for 0 ≤ k ≤ n.
fn wz_value(n: u32, k: u32) -> Rational {
    let f = factorial(n);
    Rational::from((factorial(2 * n + 1), f.clone() * &f * (3 * n + 1)))
        * Rational::from((binomial(n, k), binomial(3 * n, n + k)))
}

/// S(n) = Σ_k F(n,k), which is Σ_j α_{n/2,j}.
pub fn normalization_sum(n: u32) -> Rational {
    (0..=n).fold(Rational::new(), |acc, k| acc + wz_value(n, k))
}

fn identity_report(name: &str, residual: &RatFunc, note: &str) -> CheckReport {
    let zero = RatPoly::zero(&residual.num.variables().iter().map(|s| s.as_str()).collect::<Vec<_>>());
    let expanded = poly_identity_equal(&residual.num, &zero);
    let sampled = poly_identity_equal_eval(&residual.num, &zero);
    CheckReport::truth(
        name,
        format!("cleared numerator: {} terms", residual.num.num_terms()),
        "0",
        expanded && sampled,
        note,
    )
}

/// The pair identity as a polynomial identity, and S(n) = 1 for n = 0..=n_max.
pub fn verify_wz_pair(n_max: u32) -> Vec<CheckReport> {
    let mut out = vec![identity_report(
        "identities.wz.pair_identity",
        &wz_certificate_identity(),
        "F(n+1,k) − F(n,k) = G(n,k+1) − G(n,k), G = F R",
    )];
    let bad: Vec<u32> = (0..=n_max).filter(|&n| normalization_sum(n) != 1).collect();
    out.push(CheckReport::truth(
        format!("identities.wz.sum_is_one.n=0..{n_max}"),
        format!("S(0) = {}, S({n_max}) = {}", normalization_sum(0), normalization_sum(n_max)),
        "1",
        bad.is_empty(),
        if bad.is_empty() { String::new() } else { format!("fails at {bad:?}") },
    ));
    out
}

fn zeil_terms() -> [HyperTerm; 2] {
    let v = ["n", "m", "j"];
    // (−1)^{n+j} C(n,j) C(3n, m+j−n) / C(3n, n+j)
    let f1 = HyperTerm::new(&v)
        .sign(&[1, 0, 1])
        .binom(Affine::new(0, &[1, 0, 0]), Affine::new(0, &[0, 0, 1]), 1)
        .binom(Affine::new(0, &[3, 0, 0]), Affine::new(0, &[-1, 1, 1]), 1)
        .binom(Affine::new(0, &[3, 0, 0]), Affine::new(0, &[1, 0, 1]), -1);
    // C(n,j) C(n+j−1, m+j−n) / C(3n, n+j)
    let f2 = HyperTerm::new(&v)
        .binom(Affine::new(0, &[1, 0, 0]), Affine::new(0, &[0, 0, 1]), 1)
        .binom(Affine::new(-1, &[1, 0, 1]), Affine::new(0, &[-1, 1, 1]), 1)
        .binom(Affine::new(0, &[3, 0, 0]), Affine::new(0, &[1, 0, 1]), -1);
    [f1, f2]
}

/// U F(m+2)/F + V F(m+1)/F + W − [R(j+1) F(j+1)/F − R(j)] for α = 1, 2.
pub fn zeilberger_certificate_identity(alpha: usize) -> RatFunc {
    assert!(alpha == 1 || alpha == 2, "alpha is 1 or 2");
    let v = ["n", "m", "j"];
    let c = |x: i64| RatPoly::constant(&v, x);
    let n = lin(&v, 0, &[1, 0, 0]);
    let m = lin(&v, 0, &[0, 1, 0]);
    let u = &(&m + &c(2)) * &lin(&v, -1, &[2, -1, 0]);
    let vv = &(&(&(&(&(&c(-2) * &(&m * &m)) - &(&c(5) * &(&n * &n))) + &(&c(8) * &(&m * &n))) + &(&c(9) * &n))
        - &(&c(4) * &m))
        - &c(2);
    let w = &lin(&v, 0, &[-4, 1, 0]) * &lin(&v, -1, &[2, -1, 0]);
    let r = |jj: &RatPoly| -> RatFunc {
        let first = if alpha == 1 { lin(&v, 1, &[3, 0, 0]) } else { lin(&v, 1, &[-2, 1, 0]) };
        let num = &(jj * &first) * &(&(&(&c(2) * &n) - jj) + &c(1));
        let den = &(&(&n - &m) - jj) - &c(1);
        RatFunc::new(num, den)
    };
    let t = &zeil_terms()[alpha - 1];
    let j = lin(&v, 0, &[0, 0, 1]);
    let j1 = lin(&v, 1, &[0, 0, 1]);
    let lhs = RatFunc::from_poly(u)
        .mul(&t.shift_ratio(1, 2))
        .add(&RatFunc::from_poly(vv).mul(&t.shift_ratio(1, 1)))
        .add(&RatFunc::from_poly(w));
    let rhs = r(&j1).mul(&t.shift_ratio(2, 1)).sub(&r(&j));
    lhs.sub(&rhs)
}

fn weight(n: i64, j: i64) -> Rational {
    Rational::from((binomial0(n, j), binomial0(3 * n, n + j)))
}

/// S₁(n,m) = Σ_j (−1)^{n+j} C(n,j) C(3n,m+j−n)/C(3n,n+j).
pub fn s1(n: u32, m: u32) -> Rational {
    let (n, m) = (n as i64, m as i64);
    (0..=n).fold(Rational::new(), |acc, j| {
        let t = weight(n, j) * binomial0(3 * n, m + j - n);
        if (n + j) % 2 == 1 {
            acc - t
        } else {
            acc + t
        }
    })
}

/// S₂(n,m) = Σ_j C(n,j) C(n+j−1,m+j−n)/C(3n,n+j).
pub fn s2(n: u32, m: u32) -> Rational {
    let (n, m) = (n as i64, m as i64);
    (0..=n).fold(Rational::new(), |acc, j| acc + weight(n, j) * binomial0(n + j - 1, m + j - n))
}

fn recurrence_residual(s: &dyn Fn(u32, u32) -> Rational, n: u32, m: u32) -> Rational {
    let (ni, mi) = (n as i64, m as i64);
    let u = (mi + 2) * (2 * ni - mi - 1);
    let v = -2 * mi * mi - 5 * ni * ni + 8 * mi * ni + 9 * ni - 4 * mi - 2;
    let w = (mi - 4 * ni) * (2 * ni - mi - 1);
    s(n, m + 2) * u + s(n, m + 1) * v + s(n, m) * w
}

/// Both certificate identities, the recurrence for S₁ and S₂, the base
/// cases, and S₁ = S₂ for 0 ≤ m ≤ 2n, n = 1..=n_max.
pub fn verify_zeilberger_certificates(n_max: u32) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for alpha in 1..=2 {
        out.push(identity_report(
            &format!("identities.zeilberger.certificate{alpha}"),
            &zeilberger_certificate_identity(alpha),
            "U F(m+2) + V F(m+1) + W F(m) = G(j+1) − G(j)",
        ));
    }
    let mut rec_bad = Vec::new();
    let mut base_bad = Vec::new();
    let mut eq_bad = Vec::new();
    for n in 1..=n_max {
        for m in 0..=(2 * n).saturating_sub(2) {
            if n >= 1 && 2 * n >= 2 {
                for (idx, s) in [&s1 as &dyn Fn(u32, u32) -> Rational, &s2].iter().enumerate() {
                    if recurrence_residual(*s, n, m) != 0 {
                        rec_bad.push((idx + 1, n, m));
                    }
                }
            }
        }
        for m in 0..=1 {
            if s1(n, m) != s2(n, m) {
                base_bad.push((n, m));
            }
        }
        for m in 0..=2 * n {
            if s1(n, m) != s2(n, m) {
                eq_bad.push((n, m));
            }
        }
    }
    out.push(CheckReport::truth(
        format!("identities.zeilberger.recurrence.n=1..{n_max}"),
        "U S(m+2) + V S(m+1) + W S(m), m = 0..2n−2",
        "0",
        rec_bad.is_empty(),
        if rec_bad.is_empty() { String::new() } else { format!("fails at {rec_bad:?}") },
    ));
    out.push(CheckReport::truth(
        format!("identities.zeilberger.base_cases.n=1..{n_max}"),
        format!("S1(3,0) = {}, S1(3,1) = {}", s1(3, 0), s1(3, 1)),
        format!("S2(3,0) = {}, S2(3,1) = {}", s2(3, 0), s2(3, 1)),
        base_bad.is_empty(),
        "",
    ));
    out.push(CheckReport::truth(
        format!("identities.zeilberger.s1_equals_s2.n=1..{n_max}"),
        "S1(n,m)",
        "S2(n,m), 0 ≤ m ≤ 2n",
        eq_bad.is_empty(),
        if eq_bad.is_empty() { String::new() } else { format!("fails at {eq_bad:?}") },
    ));
    out
}

/// Both sides of the symmetric family
///   Σ_j (−1)^{n+j} C(n,j)/C(3n,n+j) C(3n,m+j−n)
///   = Σ_j C(n,j)/C(3n,n+j) [C(n+j−1,m+j−n) + (−1)^n C(2n−j−1,m−2n−1)].
pub fn symmetric2_sides(n: u32, m: u32) -> (Rational, Rational) {
    let (ni, mi) = (n as i64, m as i64);
    let sign_n = if ni % 2 == 1 { -1 } else { 1 };
    let mut rhs = Rational::new();
    for j in 0..=ni {
        let b = binomial0(ni + j - 1, mi + j - ni) + binomial0(2 * ni - j - 1, mi - 2 * ni - 1) * sign_n;
        rhs += weight(ni, j) * b;
    }
    (s1(n, m), rhs)
}

/// The symmetric family for 0 ≤ m ≤ 4n, and its invariance under
/// (j, m) → (n − j, 4n − m): the left binomial is fixed and the two right
/// binomials swap.
pub fn verify_symmetric2(n: u32) -> Vec<CheckReport> {
    let (ni, m4) = (n as i64, 4 * n as i64);
    let fails: Vec<u32> = (0..=4 * n).filter(|&m| {
        let (l, r) = symmetric2_sides(n, m);
        l != r
    }).collect();
    let mut sym_ok = true;
    for m in 0..=m4 {
        for j in 0..=ni {
            let (j2, m2) = (ni - j, m4 - m);
            sym_ok &= binomial0(3 * ni, m + j - ni) == binomial0(3 * ni, m2 + j2 - ni);
            sym_ok &= binomial0(ni + j - 1, m + j - ni) == binomial0(2 * ni - j2 - 1, m2 - 2 * ni - 1);
            sym_ok &= weight(ni, j) == weight(ni, j2);
        }
    }
    vec![
        CheckReport::truth(
            format!("identities.symmetric2.n={n}"),
            format!("m = 0..{}", 4 * n),
            "both sides equal",
            fails.is_empty(),
            if fails.is_empty() { String::new() } else { format!("fails at m = {fails:?}") },
        ),
        CheckReport::truth(
            format!("identities.symmetric2.symmetry.n={n}"),
            "(j, m) → (n−j, 4n−m)",
            "left binomial fixed, right binomials swapped",
            sym_ok,
            "",
        ),
    ]
}
