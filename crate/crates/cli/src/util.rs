//! Small numeric helpers.

use rug::ops::Pow;
use rug::Float;

use crate::CliError;

/// A decimal string at `prec` bits.
pub fn decimal(s: &str, prec: u32) -> Result<Float, CliError> {
    Float::parse(s)
        .map(|v| Float::with_val(prec, v))
        .map_err(|_| CliError::Usage(format!("'{s}' is not a decimal number")))
}

/// 10^e at `prec` bits.
pub fn ten_pow(e: i32, prec: u32) -> Float {
    Float::with_val(prec, 10).pow(e)
}

/// 2^e at `prec` bits.
pub fn two_pow(e: i32, prec: u32) -> Float {
    Float::with_val(prec, 2).pow(e)
}
