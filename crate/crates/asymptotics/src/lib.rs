//! Asymptotics of r(n), the number of n-dimensional SU(3) representations:
//!
//!   r(n) ~ K n^{-3/5} exp(A1 n^{2/5} − A2 n^{3/10} − A3 n^{1/5} − A4 n^{1/10}).
//!
//! The constants, the generating-function sums f, h and the moments of the
//! geometric model behind the saddle-point argument, and diagnostics that
//! compare each step with exact counts.

mod constants;
mod expansions;
mod mellin;
mod saddle;
mod sums;

pub use constants::{constants, integral_i, k_via_omega_deriv0, omega_deriv0_closed, AsymptoticConstants, IntegralI};
pub use expansions::{f_expansion, h1_expansion, h2_expansion, h_expansion, h_half_coefficient, FExpansion};
pub use mellin::{mellin_check, MellinCheck};
pub use saddle::{
    clt_diagnostic, formula_vs_exact, grid_csv, log_formula, normalization, saddle, saddle_grid, saddle_row,
    trend_checks, SaddleRow,
};
pub use sums::{cutoff, f_eval, h_eval, h_harmonic, moments, moments_with, sums, DimTable, ModelState, Sums};

use su3_witten::WittenError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AsymError {
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("saddle point t_n is not positive at n = {n}")]
    NonPositive { n: u64 },
    #[error("r({n}) requested but the series stops at {have}")]
    MissingCoefficient { n: u64, have: u64 },
    #[error(transparent)]
    Witten(#[from] WittenError),
}
