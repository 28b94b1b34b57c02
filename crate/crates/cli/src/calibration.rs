//! Calibration of the arbitrary-precision kernels: reflection, functional
//! equation and theta modularity, plus spot values against MPFR.

use rug::float::Constant;
use rug::{Complex, Float};
use su3_numerics::{gamma, ln_2pi, theta, zeta, zeta_deriv, zeta_em, NumError};
use su3_report::{err_str, float_str, CheckReport, Status};

use crate::util::two_pow;

fn c(x: f64, y: f64, p: u32) -> Complex {
    Complex::with_val(p, (x, y))
}

fn cabs(z: &Complex) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}

fn complex_str(z: &Complex) -> String {
    if z.imag().is_zero() {
        float_str(z.real(), 30)
    } else {
        format!("{} + {} i", float_str(z.real(), 30), float_str(z.imag(), 30))
    }
}

/// Passes when |lhs − rhs| ≤ 2^{slack − prec} |rhs|.
fn relative(name: String, lhs: Result<Complex, NumError>, rhs: Result<Complex, NumError>, slack: i32, p: u32, note: &str) -> CheckReport {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            let d = cabs(&Complex::with_val(p, &l - &r));
            let tol = Float::with_val(p, two_pow(slack - p as i32, p) * cabs(&r));
            CheckReport {
                name,
                status: if d <= tol { Status::Pass } else { Status::Fail },
                lhs: complex_str(&l),
                rhs: complex_str(&r),
                abs_err: err_str(&d),
                tol: err_str(&tol),
                elapsed_ms: None,
                note: note.into(),
            }
        }
        (Err(e), _) | (_, Err(e)) => CheckReport::error(name, e),
    }
}

fn pi(p: u32) -> Float {
    Float::with_val(p, Constant::Pi)
}

/// Γ(s)Γ(1−s) = π/sin(πs) on a fixed grid off the poles.
pub fn gamma_reflection(p: u32) -> Vec<CheckReport> {
    let grid = [(0.3, 0.0), (-2.7, 0.4), (1.5, 7.0), (-5.5, -3.0), (0.1, 11.5), (4.2, -0.9), (-0.5, 2.0), (2.25, 5.5)];
    grid.iter()
        .map(|&(x, y)| {
            let s = c(x, y, p);
            let lhs = gamma(&s, p).and_then(|a| gamma(&Complex::with_val(p, 1 - &s), p).map(|b| Complex::with_val(p, &a.value * &b.value)));
            let rhs = Complex::with_val(p, pi(p) / Complex::with_val(p, &s * pi(p)).sin());
            relative(format!("numerics.gamma_reflection.s={x}{y:+}i"), lhs, Ok(rhs), 12, p, "Gamma(s) Gamma(1-s) = pi / sin(pi s)")
        })
        .collect()
}

/// Real Γ and ζ against MPFR.
pub fn real_axis(p: u32) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for x in [0.1, 0.5, 2.5, 7.25, -0.3, -7.7] {
        let want = Complex::with_val(p, (Float::with_val(p, x).gamma(), 0));
        out.push(relative(format!("numerics.gamma_vs_mpfr.x={x}"), gamma(&c(x, 0.0, p), p).map(|v| v.value), Ok(want), 10, p, ""));
    }
    for x in [-11.5, -3.7, -0.5, 0.3, 1.5, 3.0, 10.0] {
        let want = Complex::with_val(p, (Float::with_val(p, x).zeta(), 0));
        out.push(relative(format!("numerics.zeta_vs_mpfr.x={x}"), zeta(&c(x, 0.0, p), p).map(|v| v.value), Ok(want), 12, p, ""));
    }
    out
}

/// The functional-equation branch of ζ against direct Euler-Maclaurin on
/// Re s = −3/2.
pub fn zeta_functional_equation(p: u32) -> Vec<CheckReport> {
    (-8..=8)
        .map(|i| {
            let t = 2.5 * i as f64;
            let s = c(-1.5, t, p);
            relative(
                format!("numerics.zeta_functional_equation.s=-1.5{t:+}i"),
                zeta(&s, p).map(|v| v.value),
                zeta_em(&s, p).map(|v| v.value),
                12,
                p,
                "functional equation vs Euler-Maclaurin",
            )
        })
        .collect()
}

/// θ₂(z) = (−iz)^{−1/2} θ₄(−1/z) and θ₃(z) = (−iz)^{−1/2} θ₃(−1/z).
pub fn theta_modularity(p: u32) -> Vec<CheckReport> {
    let grid = [(0.0, 1.0), (0.3, 0.5), (-0.7, 0.2), (0.9, 2.5), (-0.15, 0.08), (0.5, 4.0)];
    let mut out = Vec::new();
    for &(x, y) in &grid {
        let z = c(x, y, p);
        let minus_inv = Complex::with_val(p, -Complex::with_val(p, z.recip_ref()));
        let factor = Complex::with_val(p, z.clone().mul_i(true)).sqrt().recip();
        for (k, partner) in [(2u8, 4u8), (3, 3)] {
            let rhs = theta(partner, &minus_inv, p).map(|v| Complex::with_val(p, &factor * &v.value));
            out.push(relative(
                format!("numerics.theta_modularity.J{k}.z={x}{y:+}i"),
                theta(k, &z, p).map(|v| v.value),
                rhs,
                20,
                p,
                "theta under z -> -1/z",
            ));
        }
    }
    out
}

/// ζ'(0) = −log(2π)/2 and the first zero of ζ on the critical line.
pub fn zeta_spot_values(p: u32) -> Vec<CheckReport> {
    let want = Complex::with_val(p, (-ln_2pi(p) / 2u32, 0));
    let mut out = vec![relative("numerics.zeta_deriv_at_0".into(), zeta_deriv(&c(0.0, 0.0, p), p).map(|v| v.value), Ok(want), 12, p, "")];
    let gamma1 = Float::with_val(p, Float::parse("14.134725141734693790457251983562470270784257115699").expect("literal"));
    let rho = Complex::with_val(p, (0.5, gamma1));
    out.push(match zeta(&rho, p) {
        Ok(z) => {
            let abs = cabs(&z.value);
            CheckReport::numeric("numerics.zeta_first_zero", &abs, &Float::new(p), &crate::util::ten_pow(-28, p), 12, "|zeta(1/2 + i gamma_1)|")
        }
        Err(e) => CheckReport::error("numerics.zeta_first_zero", e),
    });
    out
}

/// All calibration suites.
pub fn all(p: u32) -> Vec<CheckReport> {
    let mut out = gamma_reflection(p);
    out.extend(real_axis(p));
    out.extend(zeta_functional_equation(p));
    out.extend(theta_modularity(p));
    out.extend(zeta_spot_values(p));
    out
}
