//! The linear system for the coefficients of f_n and g_n.
//!
//! With f(p,q) = Σ_a α_a p^{-a} q^{a-w} and g = f(p,q) − f(p+q,q) − f(p,p+q)
//! required to equal Σ_b β_b p^{-b} q^{b-w}, clearing denominators turns the
//! requirement into a polynomial identity in x = p/q whose coefficients are
//! linear in α and β.

use rug::{Integer, Rational};
use su3_exact::{binomial, factorial};

use crate::IdentityError;

/// C(a, b) for a ≥ 0, zero when b < 0 or b > a.
fn binom0(a: i64, b: i64) -> Integer {
    if a < 0 {
        panic!("negative upper index {a}");
    }
    if b < 0 || b > a {
        Integer::new()
    } else {
        binomial(a as u32, b as u32)
    }
}

/// A solution set: `particular + span(nullspace)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSolution {
    pub particular: Vec<Rational>,
    pub nullspace: Vec<Vec<Rational>>,
    pub rank: usize,
}

/// Exact Gauss–Jordan elimination for A x = b.
pub fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Result<LinearSolution, IdentityError> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = Rational::from(1) / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c].clone();
                for k in c..=cols {
                    let t = Rational::from(&f * &m[r][k]);
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| row[cols] != 0) {
        return Err(IdentityError::Inconsistent);
    }
    let mut particular = vec![Rational::new(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = m[i][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::new(); cols];
            v[f] = Rational::from(1);
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = Rational::from(-&m[i][f]);
            }
            v
        })
        .collect();
    Ok(LinearSolution { particular, nullspace, rank: pivots.len() })
}

/// The system in the binomial form, for m = 2n..10n−2, unknowns
/// (α_1..α_{2n+1}, β_1..β_n), followed by the normalization Σ α = 1.
pub fn lineqs_system(n: u32) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let n = n as i64;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for m in 2 * n..=10 * n - 2 {
        let mut row = Vec::with_capacity((3 * n + 1) as usize);
        for j in 1..=2 * n + 1 {
            let v = binom0(6 * n, m - 4 * n + j) - binom0(2 * n + j - 2, m - 4 * n + j) - binom0(4 * n - j, m - 6 * n);
            row.push(Rational::from(v));
        }
        for k in 1..=n {
            row.push(Rational::from(-binom0(6 * n, m - 4 * n + 2 * k)));
        }
        a.push(row);
        b.push(Rational::new());
    }
    let mut norm = vec![Rational::from(1); (2 * n + 1) as usize];
    norm.extend(vec![Rational::new(); n as usize]);
    a.push(norm);
    b.push(Rational::from(1));
    (a, b)
}

/// The same requirement derived directly for arbitrary weight and exponent
/// sets: multiply by x^E (1+x)^E with q = 1, x = p, and equate powers of x.
/// Unknowns are (α_a for a in `f_exps`, β_b for b in `g_exps`), with the
/// normalization Σ α = 1 as the last row.
pub fn ratio_form_system(w: u32, f_exps: &[u32], g_exps: &[u32]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let w = w as i64;
    let e = f_exps
        .iter()
        .map(|&a| (a as i64).max(w - a as i64))
        .chain(g_exps.iter().map(|&b| b as i64))
        .max()
        .unwrap_or(0);
    // x^u (1+x)^v contributes C(v, m−u) to x^m
    let top = 2 * e;
    let mut a = Vec::new();
    for m in 0..=top {
        let mut row = Vec::new();
        for &fa in f_exps {
            let fa = fa as i64;
            let v = binom0(e, m - (e - fa)) - binom0(e - fa, m - e) - binom0(e - w + fa, m - (e - fa));
            row.push(Rational::from(v));
        }
        for &gb in g_exps {
            row.push(Rational::from(-binom0(e, m - (e - gb as i64))));
        }
        a.push(row);
    }
    let mut b = vec![Rational::new(); a.len()];
    let mut norm = vec![Rational::from(1); f_exps.len()];
    norm.extend(vec![Rational::new(); g_exps.len()]);
    a.push(norm);
    b.push(Rational::from(1));
    (a, b)
}

/// α_{n,j} = (1/(6n+1)) (4n+1)!/((2n)!)² C(2n, j−1)/C(6n, 2n+j−1).
pub fn alpha_closed(n: u32, j: u32) -> Rational {
    let f = factorial(2 * n);
    let pre = Rational::from((factorial(4 * n + 1), f.clone() * &f * (6 * n + 1)));
    pre * Rational::from((binomial(2 * n, j - 1), binomial(6 * n, 2 * n + j - 1)))
}

/// β_{n,k} = 2 α_{n,2k}.
pub fn beta_closed(n: u32, k: u32) -> Rational {
    alpha_closed(n, 2 * k) * 2u32
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlphaBetaSolution {
    pub n: u32,
    /// α_{n,1..2n+1}
    pub alpha: Vec<Rational>,
    /// β_{n,1..n}
    pub beta: Vec<Rational>,
    pub rank: usize,
    /// Whether the solution equals the closed forms for α and β.
    pub matches_closed_form: bool,
}

impl AlphaBetaSolution {
    pub fn alpha_sum(&self) -> Rational {
        self.alpha.iter().fold(Rational::new(), |acc, a| acc + a)
    }
}

/// Solves the system for 1 ≤ n ≤ 12 and compares with the closed forms.
pub fn solve_alpha_beta(n: u32) -> Result<AlphaBetaSolution, IdentityError> {
    if !(1..=12).contains(&n) {
        return Err(IdentityError::InvalidArgument(format!("n = {n} outside 1..=12")));
    }
    let (a, b) = lineqs_system(n);
    let sol = solve_rational(&a, &b)?;
    let unknowns = (3 * n + 1) as usize;
    if !sol.nullspace.is_empty() {
        return Err(IdentityError::SingularSystem { rank: sol.rank, unknowns });
    }
    let na = (2 * n + 1) as usize;
    let alpha = sol.particular[..na].to_vec();
    let beta = sol.particular[na..].to_vec();
    let matches = alpha.iter().enumerate().all(|(i, v)| *v == alpha_closed(n, i as u32 + 1))
        && beta.iter().enumerate().all(|(i, v)| *v == beta_closed(n, i as u32 + 1));
    Ok(AlphaBetaSolution { n, alpha, beta, rank: sol.rank, matches_closed_form: matches })
}

/// Result of the generalized system for a weight w and exponent sets.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralSolution {
    pub w: u32,
    pub f_exps: Vec<u32>,
    pub g_exps: Vec<u32>,
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
    /// Dimension of the solution set.
    pub nullity: usize,
    /// ζ(w) = Σ c ζ(a) ζ(w−a) over unordered pairs a ≤ w − a, from the
    /// particular solution.
    pub zeta_pairs: Vec<(u32, Rational)>,
}

/// Solves the generalized system (the discovery mode behind the mod-6
/// identities). Any solution gives ζ(w) = Σ_b β_b ζ(b) ζ(w−b).
pub fn solve_generalized(w: u32, f_exps: &[u32], g_exps: &[u32]) -> Result<GeneralSolution, IdentityError> {
    let (a, b) = ratio_form_system(w, f_exps, g_exps);
    let sol = solve_rational(&a, &b)?;
    let na = f_exps.len();
    let alpha = sol.particular[..na].to_vec();
    let beta = sol.particular[na..].to_vec();
    let mut pairs: Vec<(u32, Rational)> = Vec::new();
    for (gb, c) in g_exps.iter().zip(&beta) {
        let key = (*gb).min(w - gb);
        match pairs.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => *v += c,
            None => pairs.push((key, c.clone())),
        }
    }
    pairs.retain(|(_, c)| *c != 0);
    pairs.sort_by_key(|p| p.0);
    Ok(GeneralSolution { w, f_exps: f_exps.to_vec(), g_exps: g_exps.to_vec(), alpha, beta, nullity: sol.nullspace.len(), zeta_pairs: pairs })
}
