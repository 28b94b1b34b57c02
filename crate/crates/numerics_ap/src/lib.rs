//! Arbitrary-precision special functions on top of MPFR/MPC.
//!
//! Every routine takes an explicit precision in bits and works internally
//! with guard bits. Error figures attached to results are heuristic
//! dominant-term estimates, not rigorous enclosures.

mod ap;
mod gamma;
mod quad;
mod theta;
mod zeta;

pub use ap::{ln_2pi, pi, euler_gamma, ApComplex, ApReal, NumError, DEFAULT_PREC};
pub use gamma::{digamma, gamma, gamma_raw};
pub use quad::{
    gauss_legendre, integrate_real_line, integrate_vertical, QuadResult, QuadratureSpec, Rule,
};
pub use theta::theta;
pub use zeta::{zeta, zeta_deriv, zeta_deriv_em, zeta_em, zeta_raw, zeta_deriv_raw};

pub use rug::{Complex, Float};
