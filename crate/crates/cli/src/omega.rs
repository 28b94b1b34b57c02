//! Checks and evaluations for the Witten zeta function.

use rug::{Complex, Float};
use su3_exact::{rat, BigRat};
use su3_numerics::ln_2pi;
use su3_report::{digits_for, err_str, float_str, CheckReport};
use su3_witten::{
    default_m, deriv0_integral, deriv0_integral_contour, delta_s_derivative, mordell_integral, odd_value,
    omega_closed_even, omega_continued, omega_deriv0, omega_deriv0_fd, omega_direct, omega_nonpositive_exact,
    residues, PoleFunction, ResidueOptions, WittenError, DIRECT_MARGIN,
};

use crate::util::{decimal, ten_pow};
use crate::CliError;

/// How `omega eval` picks its route.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalMethod {
    /// Direct summation where it converges, the continuation elsewhere.
    Auto,
    Direct,
    Continued,
}

impl std::str::FromStr for EvalMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(EvalMethod::Auto),
            "direct" => Ok(EvalMethod::Direct),
            "continued" => Ok(EvalMethod::Continued),
            _ => Err(format!("unknown method '{s}', expected direct, continued or auto")),
        }
    }
}

/// Parses `RE` or `RE,IM` as decimal strings at `prec` bits.
pub fn parse_s(spec: &str, prec: u32) -> Result<Complex, CliError> {
    let mut parts = spec.split(',');
    let re = parts.next().unwrap_or("");
    let im = parts.next().unwrap_or("0");
    if parts.next().is_some() {
        return Err(CliError::Usage(format!("'{spec}' is not of the form RE[,IM]")));
    }
    Ok(Complex::with_val(prec, (decimal(re.trim(), prec)?, decimal(im.trim(), prec)?)))
}

fn user_error(e: WittenError) -> CliError {
    match e {
        WittenError::Num(n) => CliError::Internal(n.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

/// ω(s) by the requested route, reported as a single passing check whose
/// error column carries the error estimate.
pub fn omega_eval(s: &Complex, method: EvalMethod, m: Option<u32>, prec: u32) -> Result<Vec<CheckReport>, CliError> {
    if m.is_some() && method == EvalMethod::Direct {
        return Err(CliError::Usage("--M only applies to the continued method".into()));
    }
    let sigma = s.real().to_f64();
    let use_direct = match method {
        EvalMethod::Direct => true,
        EvalMethod::Continued => false,
        EvalMethod::Auto => m.is_none() && sigma > 2.0 / 3.0 + DIRECT_MARGIN,
    };
    let r = if use_direct {
        omega_direct(s, prec).map_err(user_error)?
    } else {
        let m = m.unwrap_or_else(|| default_m(s));
        omega_continued(s, m, prec).map_err(user_error)?
    };
    let digits = digits_for(prec);
    let value = complex_str(&r.value.value, digits);
    let s_str = complex_str(s, 10);
    let mut c = CheckReport::truth(format!("omega.eval.s={s_str}"), value, r.method.to_string(), true, "value of omega(s)");
    c.abs_err = err_str(&r.est_error);
    c.tol = String::new();
    Ok(vec![c])
}

fn complex_str(z: &Complex, digits: usize) -> String {
    let re = float_str(z.real(), digits);
    if z.imag().is_zero() {
        return re;
    }
    let im = Float::with_val(z.prec().1, z.imag().abs_ref());
    let sign = if z.imag().is_sign_negative() { '-' } else { '+' };
    format!("{re} {sign} {} i", float_str(&im, digits))
}

fn real(x: f64, prec: u32) -> Complex {
    Complex::with_val(prec, (x, 0))
}

/// ω(0) = 1/3, the trivial zeros, the even and odd closed forms and the
/// cube-integral cross-check, including its documented failure at n = 0.
pub fn omega_special(prec: u32) -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.extend(special_numeric(prec));
    out.extend(special_exact());
    out.extend(odd_against_direct(prec));
    out
}

/// ω(0) and ω(−n), n = 1..6, from the continuation at `prec` bits.
pub fn special_numeric(prec: u32) -> Vec<CheckReport> {
    let digits = digits_for(prec);
    let tol = ten_pow(-30, prec);
    let mut out = Vec::new();
    let third = Float::with_val(prec, 1) / 3u32;
    out.push(match omega_continued(&real(0.0, prec), 2, prec) {
        Ok(w) => CheckReport::numeric("omega.value_at_0", w.value.value.real(), &third, &tol, digits, "continuation with M = 2"),
        Err(e) => CheckReport::error("omega.value_at_0", e),
    });
    for n in 1..=6u32 {
        let name = format!("omega.trivial_zero.n={n}");
        let m = 2 * n + 3;
        out.push(match omega_continued(&real(-(n as f64), prec), m, prec) {
            Ok(w) => {
                let abs = Float::with_val(prec, w.value.value.abs_ref());
                CheckReport::numeric(name, &abs, &Float::new(prec), &tol, digits, format!("|omega(-{n})|, M = {m}"))
            }
            Err(e) => CheckReport::error(name, e),
        });
    }
    out
}

/// Rational data: ω(−n) exactly, the even closed form against the cube
/// integral, and the printed values of ω(2) and ω(4).
pub fn special_exact() -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.push(CheckReport::exact("omega.exact.value_at_0", &omega_nonpositive_exact(0), &rat(1, 3), "finite-part form"));
    for n in 1..=12u32 {
        out.push(CheckReport::exact(
            format!("omega.exact.trivial_zero.n={n}"),
            &omega_nonpositive_exact(n),
            &BigRat::new(),
            "finite-part form in rationals",
        ));
    }
    for n in 1..=6u32 {
        out.push(CheckReport::exact(
            format!("omega.even_closed_vs_cube_integral.n={n}"),
            &omega_closed_even(n),
            &mordell_integral(n),
            format!("coefficient of pi^{}", 6 * n),
        ));
    }
    out.push(CheckReport::exact("omega.even_value.s=2", &omega_closed_even(1), &rat(1, 2835), "coefficient of pi^6"));
    out.push(CheckReport::exact(
        "omega.even_value.s=4",
        &omega_closed_even(2),
        &BigRat::from((19, 273648375)),
        "coefficient of pi^12",
    ));
    out.push(CheckReport::exact("omega.even_closed.n=0", &omega_closed_even(0), &rat(1, 3), "equals omega(0)"));
    out.push(CheckReport::expected_mismatch(
        "omega.cube_integral.n=0",
        &mordell_integral(0),
        &omega_closed_even(0),
        &rat(-1, 2),
        "the cube integral gives -1/6 at n = 0, not omega(0) = 1/3",
    ));
    out
}

/// The odd closed forms at s = 3 and 5 against direct summation.
pub fn odd_against_direct(prec: u32) -> Vec<CheckReport> {
    let digits = digits_for(prec);
    let tol = ten_pow(-30, prec);
    [1u32, 2]
        .into_iter()
        .map(|n| {
            let s = 2 * n + 1;
            let name = format!("omega.odd_closed_vs_direct.s={s}");
            match omega_direct(&real(s as f64, prec), prec) {
                Ok(w) => CheckReport::numeric(name, &odd_value(n, prec), w.value.value.real(), &tol, digits, "zeta-value closed form"),
                Err(e) => CheckReport::error(name, e),
            }
        })
        .collect()
}

/// Closed against numerically sampled residues at every tabulated pole.
pub fn omega_residues(prec: u32, k_max: u32) -> Vec<CheckReport> {
    let opts = ResidueOptions { k_max, prec, ..Default::default() };
    let reps = match residues(&opts) {
        Ok(r) => r,
        Err(e) => return vec![CheckReport::error("omega.residues", e)],
    };
    let tol = ten_pow(-20, prec);
    let digits = digits_for(prec).min(40);
    reps.iter()
        .map(|r| {
            let f = match r.function {
                PoleFunction::Omega => "omega",
                PoleFunction::GammaOmega => "gamma_omega",
            };
            CheckReport::numeric(
                format!("omega.residue.{f}.s={}", r.location),
                &r.residue_closed.value,
                r.residue_numeric.value.real(),
                &tol,
                digits,
                format!("closed form {}; circle estimate err {}", r.closed_form, err_str(&r.residue_numeric.err)),
            )
        })
        .collect()
}

/// ω'(0): the printed value and integral, log 2π, and the independent routes.
pub fn omega_deriv0_checks(prec: u32) -> Vec<CheckReport> {
    let digits = digits_for(prec);
    let mut out = Vec::new();
    match omega_deriv0(prec) {
        Ok(d) => {
            let printed = decimal("1.83787706640934548356", prec).expect("literal");
            out.push(CheckReport::numeric("omega.deriv0.printed", &d.value.value, &printed, &ten_pow(-18, prec), digits, ""));
            let printed_int = decimal("-0.002807659", prec).expect("literal");
            out.push(CheckReport::numeric(
                "omega.deriv0.integral_printed",
                &d.integral.value,
                &printed_int,
                &ten_pow(-8, prec),
                digits,
                "the bracketed integral with its factor 1/2",
            ));
            out.push(CheckReport::numeric(
                "omega.deriv0.log_2pi",
                &d.value.value,
                &ln_2pi(prec),
                &ten_pow(-30, prec),
                digits,
                "constant part plus integral",
            ));
        }
        Err(e) => out.push(CheckReport::error("omega.deriv0", e)),
    }
    out.extend(deriv0_cross_checks());
    out
}

/// Routes to ω'(0) that share no code with the main evaluation, at fixed
/// moderate precision.
pub fn deriv0_cross_checks() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let p = 160;
    out.push(match (deriv0_integral(p, 140), deriv0_integral_contour(p, 140)) {
        (Ok(a), Ok(b)) => CheckReport::numeric(
            "omega.deriv0.contour_vs_real_line",
            &a.value,
            &b.value,
            &ten_pow(-38, p),
            30,
            "integral on the real line against the contour Re z = 3/2",
        ),
        (Err(e), _) | (_, Err(e)) => CheckReport::error("omega.deriv0.contour_vs_real_line", e),
    });
    for y in [0.0, 0.8, -2.5, 6.0] {
        let name = format!("omega.deriv0.s_derivative.z=1.5{y:+}i");
        let z = Complex::with_val(p, (1.5, y));
        out.push(match delta_s_derivative(&z, p) {
            Ok((fd, closed)) => {
                let d = Float::with_val(p, Complex::with_val(p, &fd - &closed).abs_ref());
                let scale = Float::with_val(p, closed.abs_ref());
                let tol = Float::with_val(p, &scale * ten_pow(-30, p));
                CheckReport::numeric(name, &d, &Float::new(p), &tol, 12, "finite difference against the simplified form")
            }
            Err(e) => CheckReport::error(name, e),
        });
    }
    let p = 128;
    out.push(match omega_deriv0_fd(p, 1e-6, 110) {
        Ok(d) => CheckReport::numeric(
            "omega.deriv0.finite_difference",
            &d.value,
            &ln_2pi(p),
            &ten_pow(-18, p),
            30,
            "central difference of the continuation at s = 0",
        ),
        Err(e) => CheckReport::error("omega.deriv0.finite_difference", e),
    });
    out
}
