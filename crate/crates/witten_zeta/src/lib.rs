//! The Witten zeta function of SU(3), ω(s) = Σ_{j,k≥1} (jk(j+k))^{-s}.
//! Since dim ρ = jk(j+k)/2, this is 2^{-s} times Σ_ρ (dim ρ)^{-s}.
//!
//! Evaluation routes:
//! * [`omega_direct`] sums the Dirichlet series (with Euler–Maclaurin tails)
//!   where it converges, Re s > 2/3.
//! * [`omega_continued`] uses the shifted Mellin–Barnes representation and
//!   works on any vertical strip 3/4 − M/2 < Re s < M + 1/2.
//! * [`omega_closed_even`], [`omega_closed_odd`] and [`mordell_integral`]
//!   give exact data at positive integers.
//! * [`residues`] tabulates poles with closed and numerically sampled residues.
//! * [`omega_deriv0`] evaluates ω'(0).

mod closed;
mod continued;
mod deriv0;
mod direct;
mod residues;
mod util;

use rug::{Complex, Float};
use su3_exact::BigRat;
use su3_numerics::{ApComplex, NumError};

pub use closed::{
    omega_closed_even, omega_closed_odd, mordell_integral, odd_value, OddClosedForm,
};
pub use continued::{
    continued_terms, default_m, in_strip, omega_continued, omega_continued_target,
    omega_nonpositive_exact, ContinuedTerms,
};
pub use deriv0::{
    delta_s_derivative, deriv0_constant_part, deriv0_integral, deriv0_integral_contour, omega_deriv0,
    omega_deriv0_fd, Deriv0Parts,
};
pub use direct::{omega_direct, DIRECT_MARGIN};
pub use residues::{numeric_residue, residues, PoleFunction, PoleReport, ResidueOptions};
pub use su3_exact::zeta_even_coeff;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WittenError {
    #[error("Re(s) = {re} is outside the direct-summation domain Re(s) > {bound}")]
    OutOfDomain { re: f64, bound: f64 },
    #[error("Re(s) = {re} lies outside the strip 3/4 - M/2 < Re(s) < M + 1/2 for M = {m}")]
    StripViolation { re: f64, m: u32 },
    #[error("s is within {dist:e} of the pole at {location}")]
    NearPole { location: BigRat, dist: f64 },
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    Continued(u32),
    ClosedForm,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Direct => write!(f, "direct"),
            Method::Continued(m) => write!(f, "continued(M={m})"),
            Method::ClosedForm => write!(f, "closed-form"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OmegaEvalResult {
    pub s: Complex,
    pub value: ApComplex,
    pub method: Method,
    pub est_error: Float,
}
