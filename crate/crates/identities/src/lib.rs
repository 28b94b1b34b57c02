//! Exact checks of the summation identities behind the trivial zeros of ω.
//!
//! * the lacunary Bernoulli recurrence and its two zeta forms,
//! * its lift to Eisenstein series, as identities of rational q-series,
//! * the linear system for the coefficients α, β and its closed forms,
//! * the Wilf–Zeilberger and creative-telescoping certificates,
//! * the two mod-6 companion recurrences.
//!
//! Everything is rational arithmetic; no floating point is involved.

mod bernoulli_forms;
mod certificates;
mod eisenstein;
mod hyper;
mod linsys;
mod qseries;

pub use bernoulli_forms::{
    bernoulli_lacunary_sides, bernoulli_to_zeta_pairs, verify_mod6_rediscovery, mod6_identity1, mod6_identity2, printed_mod6_identity1, printed_mod6_identity2,
    verify_bernoulli_lacunary, verify_mod6_identities, verify_zeta_forms, zeta_form_terms, Mod6Sides, ZetaFormTerms,
};
pub use certificates::{
    binomial0, normalization_sum, s1, s2, symmetric2_sides, verify_symmetric2, verify_wz_pair,
    verify_zeilberger_certificates, wz_certificate_identity, zeilberger_certificate_identity, wz_term,
};
pub use eisenstein::{
    dim_modular_forms, eisenstein_qseries, eisenstein_weights, verify_eisenstein_identity, distinct_products,
};
pub use hyper::{Affine, HyperTerm, RatFunc};
pub use linsys::{
    alpha_closed, beta_closed, lineqs_system, ratio_form_system, solve_alpha_beta, solve_generalized, solve_rational,
    AlphaBetaSolution, GeneralSolution, LinearSolution,
};
pub use qseries::QSeries;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("singular system: rank {rank} for {unknowns} unknowns")]
    SingularSystem { rank: usize, unknowns: usize },
    #[error("inconsistent system")]
    Inconsistent,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
