//! Poles of ω(s) and Γ(s)ω(s) with closed-form and sampled residues.
//!
//! The numeric residue is the mean of (s − s0) f(s) over N equally spaced
//! points on a circle |s − s0| = r. For a simple pole this reproduces the
//! residue up to O(r^N), so two radii and an r^N Richardson step leave an
//! error far below the sampling accuracy.

use rug::ops::Pow;
use rug::{Complex, Float};
use su3_exact::{binomial, factorial, BigRat};
use su3_numerics::{gamma_raw, zeta_raw, ApComplex, ApReal};

use crate::continued::{default_m, omega_continued_target};
use crate::util::{cx, from_rat, pi};
use crate::WittenError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleFunction {
    Omega,
    GammaOmega,
}

impl std::fmt::Display for PoleFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PoleFunction::Omega => write!(f, "omega"),
            PoleFunction::GammaOmega => write!(f, "gamma*omega"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PoleReport {
    pub function: PoleFunction,
    pub location: BigRat,
    /// Human-readable closed form of the residue.
    pub closed_form: String,
    pub residue_closed: ApReal,
    pub residue_numeric: ApComplex,
    /// |closed − numeric|.
    pub abs_diff: Float,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidueOptions {
    /// Half-integer poles 1/2 − k are reported for k = 0..=k_max.
    pub k_max: u32,
    /// Precision of the closed forms.
    pub prec: u32,
    /// Working precision of the circle samples.
    pub sample_prec: u32,
    /// Quadrature goal for each sampled ω value.
    pub target_bits: u32,
    pub radii: [f64; 2],
    pub points: usize,
    /// Sample the pole of Γ(s)ω(s) at s = 0.
    pub include_zero: bool,
}

impl Default for ResidueOptions {
    fn default() -> Self {
        ResidueOptions {
            k_max: 2,
            prec: 256,
            sample_prec: 96,
            target_bits: 80,
            radii: [1e-3, 1e-4],
            points: 8,
            include_zero: true,
        }
    }
}

/// Circle samples (s_j, f(s_j)) with s_j = s0 + r e^{2πij/N}, using
/// f(conj s) = conj f(s) to halve the work.
fn circle(
    f: &mut dyn FnMut(&Complex) -> Result<Complex, WittenError>,
    s0: &BigRat,
    r: f64,
    n: usize,
    wp: u32,
) -> Result<Vec<(Complex, Complex)>, WittenError> {
    let c = from_rat(wp, s0);
    let mut out: Vec<(Complex, Complex)> = Vec::with_capacity(n);
    let rr = Float::with_val(wp, r);
    for j in 0..=n / 2 {
        // the nodes must be equally spaced to working precision, or the
        // regular part of f leaks into the mean at first order
        let th = Float::with_val(wp, pi(wp) * (2 * j) as u32) / n as u32;
        let (sin, cos) = th.sin_cos(Float::new(wp));
        let off = Complex::with_val(wp, (Float::with_val(wp, &rr * &cos), Float::with_val(wp, &rr * &sin)));
        let s = Complex::with_val(wp, &c + &off);
        let v = f(&s)?;
        out.push((s, v));
    }
    for j in (n / 2 + 1)..n {
        let (s, v) = &out[n - j];
        out.push((Complex::with_val(wp, s.conj_ref()), Complex::with_val(wp, v.conj_ref())));
    }
    Ok(out)
}

fn circle_mean(samples: &[(Complex, Complex)], s0: &BigRat, wp: u32) -> Complex {
    let c = from_rat(wp, s0);
    let mut acc = Complex::new(wp);
    for (s, v) in samples {
        acc += Complex::with_val(wp, s - &c) * v;
    }
    acc / samples.len() as u32
}

/// Combines circle means at radii r1 > r2, each with error c r^N.
fn richardson(a1: &Complex, a2: &Complex, r: [f64; 2], n: usize, wp: u32) -> (Complex, Float) {
    let ratio = Float::with_val(wp, r[1] / r[0]).pow(n as u32);
    let one_minus = Float::with_val(wp, 1u32 - &ratio);
    let v = (Complex::with_val(wp, a2 - Complex::with_val(wp, a1 * &ratio))) / &one_minus;
    let spread = Float::with_val(53, Complex::with_val(wp, a1 - a2).abs_ref());
    let err = spread * Float::with_val(53, &ratio);
    (v, err)
}

/// Numeric residue of f at s0 from circle means at two radii.
pub fn numeric_residue(
    f: &mut dyn FnMut(&Complex) -> Result<Complex, WittenError>,
    s0: &BigRat,
    opts: &ResidueOptions,
) -> Result<ApComplex, WittenError> {
    let wp = opts.sample_prec;
    let a1 = circle_mean(&circle(f, s0, opts.radii[0], opts.points, wp)?, s0, wp);
    let a2 = circle_mean(&circle(f, s0, opts.radii[1], opts.points, wp)?, s0, wp);
    let (v, err) = richardson(&a1, &a2, opts.radii, opts.points, wp);
    // plus the accuracy of the samples themselves
    let floor = Float::with_val(53, v.abs_ref()) * Float::with_val(53, 2).pow(8 - opts.target_bits.min(opts.sample_prec) as i32);
    Ok(ApComplex::new(v, err + floor))
}

fn omega_sample(s: &Complex, opts: &ResidueOptions) -> Result<Complex, WittenError> {
    let m = default_m(s);
    Ok(omega_continued_target(s, m, opts.sample_prec, opts.target_bits)?.value.value)
}

/// Poles at 2/3, 1/2 − k (k ≤ k_max) for ω, the same plus 0 for Γ(s)ω(s).
pub fn residues(opts: &ResidueOptions) -> Result<Vec<PoleReport>, WittenError> {
    let prec = opts.prec;
    let wp = prec + 16;
    let swp = opts.sample_prec;
    let mut out = Vec::new();

    // Both residues at one pole come from the same ω samples.
    let mut pair = |s0: BigRat,
                    omega_closed: Option<(String, Float)>,
                    gamma_closed: (String, Float)|
     -> Result<(), WittenError> {
        let mut cache: Vec<(Complex, Complex)> = Vec::new();
        let mut om = |s: &Complex| -> Result<Complex, WittenError> {
            let v = omega_sample(s, opts)?;
            cache.push((s.clone(), v.clone()));
            Ok(v)
        };
        let res_omega = numeric_residue(&mut om, &s0, opts)?;
        let lookup = cache;
        let mut gom = |s: &Complex| -> Result<Complex, WittenError> {
            let v = match lookup.iter().find(|(t, _)| t == s) {
                Some((_, v)) => v.clone(),
                None => omega_sample(s, opts)?,
            };
            Ok(gamma_raw(s, swp) * v)
        };
        let res_gamma = numeric_residue(&mut gom, &s0, opts)?;
        if let Some((desc, val)) = omega_closed {
            out.push(report(PoleFunction::Omega, s0.clone(), desc, val, res_omega, prec));
        }
        out.push(report(PoleFunction::GammaOmega, s0, gamma_closed.0, gamma_closed.1, res_gamma, prec));
        Ok(())
    };

    let g13 = gamma_raw(&from_rat(wp, &BigRat::from((1, 3))), wp).real().clone();
    let sqrt3 = Float::with_val(wp, 3).sqrt();
    let w23 = Float::with_val(wp, g13.clone().pow(3u32)) / (pi(wp) * 2u32 * &sqrt3);
    let gw23 = Float::with_val(wp, g13.square_ref()) / 3u32;
    pair(
        BigRat::from((2, 3)),
        Some(("Γ(1/3)^3/(2π√3)".into(), w23)),
        ("Γ(1/3)^2/3".into(), gw23),
    )?;

    if opts.include_zero {
        pair(BigRat::new(), None, ("1/3".into(), Float::with_val(wp, 1) / 3u32))?;
    }

    let sqrt_pi = Float::with_val(wp, pi(wp).sqrt_ref());
    for k in 0..=opts.k_max {
        let z = zeta_raw(&cx(wp, 0.5 - 3.0 * k as f64, 0.0), wp).real().clone();
        let c = Float::with_val(wp, binomial(2 * k, k)) / Float::with_val(wp, 2).pow(4 * k);
        let mut w = Float::with_val(wp, &c * &z);
        if k % 2 == 1 {
            w = -w;
        }
        let g = Float::with_val(wp, &sqrt_pi * &z)
            / Float::with_val(wp, 4).pow(k)
            / Float::with_val(wp, factorial(k));
        let zarg = format!("ζ({}/2)", 1 - 6 * k as i64);
        pair(
            BigRat::from((1 - 2 * k as i64, 2)),
            Some((format!("(-1)^{k} 2^(-{}) C({},{k}) {zarg}", 4 * k, 2 * k), w)),
            (format!("√π {zarg}/(4^{k} {k}!)"), g),
        )?;
    }
    Ok(out)
}

fn report(
    function: PoleFunction,
    location: BigRat,
    closed_form: String,
    closed: Float,
    numeric: ApComplex,
    prec: u32,
) -> PoleReport {
    let wp = closed.prec();
    let diff = Float::with_val(53, Complex::with_val(wp, &numeric.value - &closed).abs_ref());
    PoleReport {
        function,
        location,
        closed_form,
        residue_closed: ApReal::nominal(Float::with_val(prec, &closed)),
        residue_numeric: numeric,
        abs_diff: diff,
    }
}
