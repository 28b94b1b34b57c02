//! Hypergeometric terms as products of factorials of affine forms, and the
//! rational functions their shift quotients produce.

use rug::Rational;
use su3_exact::RatPoly;

/// c0 + Σ c_i v_i with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub c0: i64,
    pub c: Vec<i64>,
}

impl Affine {
    pub fn new(c0: i64, c: &[i64]) -> Self {
        Affine { c0, c: c.to_vec() }
    }

    fn shifted(&self, var: usize, delta: i64) -> Affine {
        Affine { c0: self.c0 + self.c[var] * delta, c: self.c.clone() }
    }

    fn poly(&self, vars: &[&str]) -> RatPoly {
        RatPoly::affine(vars, self.c0, &self.c)
    }

    pub fn eval(&self, point: &[i64]) -> i64 {
        self.c0 + self.c.iter().zip(point).map(|(a, b)| a * b).sum::<i64>()
    }
}

/// num/den over a fixed variable list. Fractions are not reduced; zero
/// testing only needs the numerator.
#[derive(Clone, Debug)]
pub struct RatFunc {
    pub num: RatPoly,
    pub den: RatPoly,
}

impl RatFunc {
    pub fn from_poly(p: RatPoly) -> Self {
        let vars: Vec<String> = p.variables().to_vec();
        let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        RatFunc { num: p, den: RatPoly::constant(&refs, 1) }
    }

    pub fn new(num: RatPoly, den: RatPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }
    }

    pub fn constant(vars: &[&str], c: impl Into<Rational>) -> Self {
        Self::from_poly(RatPoly::constant(vars, c))
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc { num: &self.num + &o.num, den: self.den.clone() };
        }
        RatFunc { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let d = self.den.eval(point);
        if d == 0 {
            None
        } else {
            Some(self.num.eval(point) / d)
        }
    }
}

/// (−1)^{sign·v} Π lin_i(v)^{e_i} Π (fact_i(v))!^{f_i}
#[derive(Clone, Debug)]
pub struct HyperTerm {
    pub vars: Vec<String>,
    pub sign: Vec<i64>,
    pub linear: Vec<(Affine, i32)>,
    pub facts: Vec<(Affine, i32)>,
}

impl HyperTerm {
    pub fn new(vars: &[&str]) -> Self {
        HyperTerm {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            sign: vec![0; vars.len()],
            linear: Vec::new(),
            facts: Vec::new(),
        }
    }

    pub fn sign(mut self, coeffs: &[i64]) -> Self {
        self.sign = coeffs.to_vec();
        self
    }

    pub fn linear(mut self, a: Affine, e: i32) -> Self {
        self.linear.push((a, e));
        self
    }

    pub fn fact(mut self, a: Affine, e: i32) -> Self {
        self.facts.push((a, e));
        self
    }

    /// Multiplies by C(top, bottom)^e.
    pub fn binom(self, top: Affine, bottom: Affine, e: i32) -> Self {
        let diff = Affine { c0: top.c0 - bottom.c0, c: top.c.iter().zip(&bottom.c).map(|(a, b)| a - b).collect() };
        self.fact(top, e).fact(bottom, -e).fact(diff, -e)
    }

    fn refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    /// T(v + δ e_var) / T(v) as a rational function.
    pub fn shift_ratio(&self, var: usize, delta: i64) -> RatFunc {
        let vars = self.refs();
        let one = RatPoly::constant(&vars, 1);
        let mut num = one.clone();
        let mut den = one;
        if (self.sign[var] * delta).rem_euclid(2) == 1 {
            num = -&num;
        }
        let mut apply = |p: RatPoly, e: i32| {
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    num = &num * &p;
                } else {
                    den = &den * &p;
                }
            }
        };
        for (a, e) in &self.linear {
            // lin(v+δ)^e / lin(v)^e
            apply(a.shifted(var, delta).poly(&vars), *e);
            apply(a.poly(&vars), -*e);
        }
        for (a, e) in &self.facts {
            let step = a.c[var] * delta;
            // (L+step)!/L! = Π_{t=1}^{step} (L+t), and the inverse for step < 0
            if step > 0 {
                for t in 1..=step {
                    apply(Affine { c0: a.c0 + t, c: a.c.clone() }.poly(&vars), *e);
                }
            } else {
                for t in 0..(-step) {
                    apply(Affine { c0: a.c0 - t, c: a.c.clone() }.poly(&vars), -*e);
                }
            }
        }
        RatFunc::new(num, den)
    }
}
