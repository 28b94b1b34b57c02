use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Rational;

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent vectors, one entry per variable. Zero
/// coefficients are never stored, so the representation is canonical and
/// structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl RatPoly {
    pub fn zero(vars: &[&str]) -> Self {
        RatPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: impl Into<Rational>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c.into());
        p
    }

    /// The polynomial consisting of variable number `i` alone.
    pub fn var(vars: &[&str], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, 1)
    }

    pub fn monomial(vars: &[&str], exps: Vec<u32>, c: impl Into<Rational>) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        p.add_term(exps, c.into());
        p
    }

    /// Affine form `c0 + sum_i c[i] * var_i` with integer coefficients.
    pub fn affine(vars: &[&str], c0: i64, c: &[i64]) -> Self {
        assert_eq!(c.len(), vars.len());
        let mut p = Self::constant(vars, c0);
        for (i, &ci) in c.iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = 1;
            p.add_term(e, Rational::from(ci));
        }
        p
    }

    fn same_shape(&self, other: &Self) -> Self {
        RatPoly { vars: self.vars.clone(), terms: BTreeMap::new() }
            .with_check(other)
    }

    fn with_check(self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
        self
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += c;
                if *v == 0 {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.same_shape(self);
        if *c == 0 {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), Rational::from(v * c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(&self.var_refs(), 1);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(point.len());
        for (i, x) in point.iter().enumerate() {
            let d = self.degree_in(i) as usize;
            let mut row = Vec::with_capacity(d + 1);
            row.push(Rational::from(1));
            for j in 1..=d {
                let next = Rational::from(&row[j - 1] * x);
                row.push(next);
            }
            powers.push(row);
        }
        let mut total = Rational::new();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= &powers[i][k as usize];
                }
            }
            total += t;
        }
        total
    }

    /// Antiderivative in variable `i` with zero constant of integration.
    pub fn integrate(&self, i: usize) -> Self {
        let mut out = self.same_shape(self);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[i] += 1;
            out.add_term(e2.clone(), Rational::from(c / e2[i]));
        }
        out
    }

    /// Definite integral over `0 <= var_i <= 1`; the variable then drops to degree 0.
    pub fn integrate_unit(&self, i: usize) -> Self {
        let anti = self.integrate(i);
        let mut out = self.same_shape(self);
        for (e, c) in &anti.terms {
            let mut e2 = e.clone();
            e2[i] = 0;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Constant coefficient of a polynomial known to be constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.total_degree() == 0 {
            Some(self.coeff(&vec![0; self.vars.len()]))
        } else {
            None
        }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let mut out = self.clone().with_check(rhs);
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let mut out = self.clone().with_check(rhs);
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), Rational::from(-c));
        }
        out
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        let mut out = self.same_shape(rhs);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, Rational::from(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        self.scale(&Rational::from(-1))
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (idx, (e, c)) in items.into_iter().enumerate() {
            let neg = *c < 0;
            let mag = Rational::from(c.abs_ref());
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], k)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Decides `lhs == rhs` by comparing canonical expanded forms.
pub fn poly_identity_equal(lhs: &RatPoly, rhs: &RatPoly) -> bool {
    assert_eq!(lhs.vars, rhs.vars, "identity test over different variables");
    lhs == rhs
}

/// Decides `lhs == rhs` by evaluation on an integer grid.
///
/// Variable i is sampled at 0..=d_i where d_i bounds its degree in both
/// sides, which is enough points for a polynomial vanishing on the grid to
/// be identically zero.
pub fn poly_identity_equal_eval(lhs: &RatPoly, rhs: &RatPoly) -> bool {
    assert_eq!(lhs.vars, rhs.vars, "identity test over different variables");
    let diff = lhs - rhs;
    let nv = diff.vars.len();
    let bounds: Vec<u32> = (0..nv)
        .map(|i| lhs.degree_in(i).max(rhs.degree_in(i)))
        .collect();
    let mut idx = vec![0u32; nv];
    loop {
        let pt: Vec<Rational> = idx.iter().map(|&v| Rational::from(v)).collect();
        if diff.eval(&pt) != 0 {
            return false;
        }
        let mut i = 0;
        loop {
            if i == nv {
                return true;
            }
            if idx[i] < bounds[i] {
                idx[i] += 1;
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}
