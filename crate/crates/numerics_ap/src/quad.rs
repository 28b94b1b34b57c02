use std::f64::consts::{LN_2, PI};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

use crate::ap::{check_prec, ApComplex, NumError};

#[derive(Clone, Debug, PartialEq)]
pub enum Rule {
    /// Equispaced nodes y = j*h on [-T, T].
    Trapezoid,
    /// Gauss–Legendre panels of width `h` with `nodes` points each.
    GaussLegendre { nodes: usize },
}

/// Parameters for integrating along the line Re z = alpha, |Im z| <= t_max.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub alpha: f64,
    pub t_max: f64,
    pub h: f64,
    pub rule: Rule,
    /// The integrand satisfies f(conj z) = conj f(z) about the real axis,
    /// so only Im z >= 0 is sampled.
    pub conj_symmetric: bool,
    /// Accuracy goal in bits; also sets the non-decay alarm.
    pub target_bits: u32,
}

impl QuadratureSpec {
    pub fn trapezoid(alpha: f64, t_max: f64, h: f64, target_bits: u32) -> Self {
        QuadratureSpec { alpha, t_max, h, rule: Rule::Trapezoid, conj_symmetric: false, target_bits }
    }

    /// Step and height for an integrand analytic within `pole_distance` of the
    /// line that decays like |y|^degree * exp(-rate * (|y| - center)).
    ///
    /// The trapezoid error is about exp(-2 pi d / h) for a strip of half-width
    /// d, so h is set from the target directly rather than fixed.
    pub fn auto(alpha: f64, pole_distance: f64, rate: f64, center: f64, degree: f64, target_bits: u32) -> Self {
        let goal = target_bits as f64 * LN_2 + 12.0;
        let d = 0.9 * pole_distance;
        let h = 2.0 * PI * d / goal;
        let mut t = center + goal / rate;
        for _ in 0..4 {
            t = center + (goal + degree * t.max(1.0).ln()) / rate;
        }
        QuadratureSpec::trapezoid(alpha, t.ceil(), h, target_bits)
    }

    pub fn symmetric(mut self, yes: bool) -> Self {
        self.conj_symmetric = yes;
        self
    }

    pub fn with_rule(mut self, rule: Rule) -> Self {
        self.rule = rule;
        self
    }
}

#[derive(Clone, Debug)]
pub struct QuadResult {
    pub value: ApComplex,
    /// Heuristic discretization error estimate.
    pub discretization: Float,
    /// Heuristic truncation error from the samples at |y| = T.
    pub tail: Float,
    pub evaluations: usize,
}

/// (1/2πi) ∫ f(z) dz along Re z = alpha, i.e. (1/2π) ∫ f(alpha + iy) dy.
pub fn integrate_vertical<F>(mut f: F, spec: &QuadratureSpec, prec: u32) -> Result<QuadResult, NumError>
where
    F: FnMut(&Complex) -> Result<Complex, NumError>,
{
    check_prec(prec)?;
    let alpha = Float::with_val(prec, spec.alpha);
    let mut r = integrate_line(
        |y: &Float| f(&Complex::with_val(prec, (&alpha, y))),
        spec,
        prec,
    )?;
    let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
    r.value.value /= &two_pi;
    r.value.err /= two_pi.to_f64();
    r.discretization /= two_pi.to_f64();
    r.tail /= two_pi.to_f64();
    Ok(r)
}

/// ∫ g(y) dy over [-T, T] for an exponentially decaying integrand on the real line.
pub fn integrate_real_line<G>(g: G, spec: &QuadratureSpec, prec: u32) -> Result<QuadResult, NumError>
where
    G: FnMut(&Float) -> Result<Complex, NumError>,
{
    check_prec(prec)?;
    integrate_line(g, spec, prec)
}

fn mag(z: &Complex) -> Float {
    Float::with_val(53, z.abs_ref())
}

fn integrate_line<G>(mut g: G, spec: &QuadratureSpec, prec: u32) -> Result<QuadResult, NumError>
where
    G: FnMut(&Float) -> Result<Complex, NumError>,
{
    if !(spec.h > 0.0 && spec.t_max > 0.0) {
        return Err(NumError::DomainError("quadrature needs h > 0 and T > 0".into()));
    }
    let (sum, coarse, peak, edge, evals) = match spec.rule {
        Rule::Trapezoid => trapezoid(&mut g, spec, prec)?,
        Rule::GaussLegendre { nodes } => {
            let fine = gl_panels(&mut g, spec, nodes, spec.h / 2.0, prec)?;
            let coarse = gl_panels(&mut g, spec, nodes, spec.h, prec)?;
            (fine.0, coarse.0, fine.1, fine.2, fine.3 + coarse.3)
        }
    };
    let budget = Float::with_val(53, 2).pow(-(spec.target_bits as i32) + 16) * peak.clone().max(&Float::with_val(53, 1));
    if edge > budget {
        return Err(NumError::NonDecayingIntegrand { height: spec.t_max, magnitude: edge.to_f64() });
    }
    let diff = mag(&Complex::with_val(prec, &sum - &coarse));
    let denom = peak.clone().max(&Float::with_val(53, 1e-300)) * 2u32;
    // Trapezoid errors square when h halves; Gauss–Legendre panels give no
    // such guarantee, so there the fine/coarse difference itself is reported.
    let discretization = match spec.rule {
        Rule::Trapezoid => Float::with_val(53, diff.square_ref()) / denom,
        Rule::GaussLegendre { .. } => diff,
    };
    let tail = edge.clone();
    let err = Float::with_val(53, &discretization + &tail) + Float::with_val(53, mag(&sum) * Float::with_val(53, 2).pow(8 - prec as i32));
    Ok(QuadResult { value: ApComplex::new(sum, err), discretization, tail, evaluations: evals })
}

type LineSums = (Complex, Complex, Float, Float, usize);

fn trapezoid<G>(g: &mut G, spec: &QuadratureSpec, prec: u32) -> Result<LineSums, NumError>
where
    G: FnMut(&Float) -> Result<Complex, NumError>,
{
    let n = (spec.t_max / spec.h).floor() as i64;
    let h = Float::with_val(prec, spec.h);
    let mut fine = Complex::new(prec);
    let mut coarse = Complex::new(prec);
    let mut peak = Float::with_val(53, 0);
    let mut edge = Float::with_val(53, 0);
    let mut evals = 0;
    let lo = if spec.conj_symmetric { 0 } else { -n };
    // fixed ascending order keeps the reduction bit-reproducible
    for j in lo..=n {
        let y = Float::with_val(prec, &h * j);
        let mut v = g(&y)?;
        evals += 1;
        let m = mag(&v);
        if m > peak {
            peak = m.clone();
        }
        if j.abs() == n {
            edge = edge.max(&m);
        }
        if spec.conj_symmetric && j > 0 {
            // f(y) + f(-y) = 2 Re f(y)
            let re = Float::with_val(prec, v.real() * 2u32);
            v = Complex::with_val(prec, (re, 0));
        }
        fine += &v;
        if j % 2 == 0 {
            coarse += &v;
        }
    }
    fine *= &h;
    coarse *= Float::with_val(prec, &h * 2u32);
    Ok((fine, coarse, peak, edge, evals))
}

fn gl_panels<G>(g: &mut G, spec: &QuadratureSpec, nodes: usize, width: f64, prec: u32) -> Result<(Complex, Float, Float, usize), NumError>
where
    G: FnMut(&Float) -> Result<Complex, NumError>,
{
    let (x, w) = gauss_legendre(nodes, prec);
    let panels = (spec.t_max / width).ceil() as i64;
    let half = Float::with_val(prec, width / 2.0);
    let mut total = Complex::new(prec);
    let mut peak = Float::with_val(53, 0);
    let mut edge = Float::with_val(53, 0);
    let mut evals = 0;
    let lo = if spec.conj_symmetric { 0 } else { -panels };
    for p in lo..panels {
        let mid = Float::with_val(prec, width) * p + &half;
        let mut acc = Complex::new(prec);
        for (xi, wi) in x.iter().zip(&w) {
            let y = Float::with_val(prec, xi * &half) + &mid;
            let v = g(&y)?;
            evals += 1;
            peak = peak.max(&mag(&v));
            acc += Complex::with_val(prec, &v * wi);
        }
        acc *= &half;
        if spec.conj_symmetric {
            let re = Float::with_val(prec, acc.real() * 2u32);
            acc = Complex::with_val(prec, (re, 0));
        }
        total += acc;
    }
    for y in [spec.t_max, -spec.t_max] {
        if spec.conj_symmetric && y < 0.0 {
            continue;
        }
        edge = edge.max(&mag(&g(&Float::with_val(prec, y))?));
    }
    Ok((total, peak, edge, evals))
}

/// Gauss–Legendre nodes and weights on [-1, 1] by Newton iteration.
pub fn gauss_legendre(n: usize, prec: u32) -> (Vec<Float>, Vec<Float>) {
    let wp = prec + 16;
    let eps = Float::with_val(53, 2).pow(-(wp as i32) + 4);
    let mut xs = Vec::with_capacity(n);
    let mut ws = Vec::with_capacity(n);
    for i in 1..=n {
        let guess = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = Float::with_val(wp, guess);
        let mut dp;
        loop {
            let (p, d) = legendre(n, &x, wp);
            dp = d;
            let step = Float::with_val(wp, &p / &dp);
            x -= &step;
            if Float::with_val(53, step.abs_ref()) < eps {
                let (_, d) = legendre(n, &x, wp);
                dp = d;
                break;
            }
        }
        let one_minus = Float::with_val(wp, 1u32 - Float::with_val(wp, x.square_ref()));
        let w = Float::with_val(wp, 2u32 / (one_minus * Float::with_val(wp, dp.square_ref())));
        xs.push(Float::with_val(prec, &x));
        ws.push(Float::with_val(prec, &w));
    }
    (xs, ws)
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre(n: usize, x: &Float, wp: u32) -> (Float, Float) {
    let mut p0 = Float::with_val(wp, 1);
    let mut p1 = x.clone();
    for k in 2..=n {
        let a = Float::with_val(wp, x * &p1) * (2 * k - 1) as u32;
        let p2 = (a - Float::with_val(wp, &p0 * (k - 1) as u32)) / k as u32;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (Float::with_val(wp, 1), Float::with_val(wp, 0));
    }
    // P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
    let num = (Float::with_val(wp, x * &p1) - &p0) * n as u32;
    let den = Float::with_val(wp, x.square_ref()) - 1u32;
    (p1, num / den)
}
