//! Exact arithmetic shared by every other crate in the workspace.
//!
//! Rationals and integers are `rug` values. `rug::Rational` is always kept
//! in lowest terms with a positive denominator, which is exactly the
//! invariant wanted for [`BigRat`], so it is used directly.

mod bernoulli;
mod binom;
mod poly;
mod zeta_values;

pub use bernoulli::{bernoulli, bernoulli_poly, BernoulliCache, CacheError};
pub use binom::{binom_ext, binomial, factorial, rising, sigma};
pub use poly::{poly_identity_equal, poly_identity_equal_eval, RatPoly};
pub use zeta_values::{zeta_even_coeff, zeta_nonpositive};

/// Exact rational in lowest terms.
pub type BigRat = rug::Rational;

/// Arbitrary-size integer.
pub type BigInt = rug::Integer;

/// Builds `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> BigRat {
    BigRat::from((p, q))
}
