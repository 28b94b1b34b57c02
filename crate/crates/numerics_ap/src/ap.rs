use std::fmt;

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

pub const DEFAULT_PREC: u32 = 256;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumError {
    #[error("pole of gamma at {0}")]
    PoleAt(i64),
    #[error("pole of zeta at s = 1")]
    PoleAtOne,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("integrand does not decay: |f| = {magnitude:e} at |Im| = {height}")]
    NonDecayingIntegrand { height: f64, magnitude: f64 },
    #[error("precision {0} below the 64-bit minimum")]
    PrecisionTooLow(u32),
}

pub(crate) fn check_prec(prec: u32) -> Result<(), NumError> {
    if prec < 64 {
        Err(NumError::PrecisionTooLow(prec))
    } else {
        Ok(())
    }
}

/// Real value with its working precision and a heuristic absolute error.
#[derive(Clone, Debug, PartialEq)]
pub struct ApReal {
    pub value: Float,
    pub err: Float,
}

/// Complex value with its working precision and a heuristic absolute error.
#[derive(Clone, Debug, PartialEq)]
pub struct ApComplex {
    pub value: Complex,
    pub err: Float,
}

impl ApReal {
    pub fn new(value: Float, err: Float) -> Self {
        ApReal { value, err }
    }

    /// Attaches the nominal relative error 2^(8-prec).
    pub fn nominal(value: Float) -> Self {
        let prec = value.prec();
        let err = Float::with_val(53, value.abs_ref()) * Float::with_val(53, 2).pow(8 - prec as i32);
        ApReal { value, err }
    }

    pub fn prec(&self) -> u32 {
        self.value.prec()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        self.value.to_string_radix(10, Some(digits))
    }
}

impl ApComplex {
    pub fn new(value: Complex, err: Float) -> Self {
        ApComplex { value, err }
    }

    pub fn nominal(value: Complex) -> Self {
        let prec = value.prec().0;
        let err = Float::with_val(53, value.abs_ref()) * Float::with_val(53, 2).pow(8 - prec as i32);
        ApComplex { value, err }
    }

    pub fn prec(&self) -> u32 {
        self.value.prec().0
    }

    pub fn re(&self) -> ApReal {
        ApReal { value: self.value.real().clone(), err: self.err.clone() }
    }

    pub fn im(&self) -> ApReal {
        ApReal { value: self.value.imag().clone(), err: self.err.clone() }
    }
}

impl fmt::Display for ApReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(((self.prec() as f64) * 0.30103) as usize))
    }
}

impl fmt::Display for ApComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re(), self.im())
    }
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

pub fn euler_gamma(prec: u32) -> Float {
    Float::with_val(prec, Constant::Euler)
}

pub fn ln_2pi(prec: u32) -> Float {
    Float::with_val(prec, (pi(prec + 8) * 2u32).ln())
}
