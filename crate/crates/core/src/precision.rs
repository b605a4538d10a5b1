//! Working precision shared by every high-precision computation.

use rug::float::Constant;
use rug::{Assign, Float};

use crate::error::{Error, Result};

/// Smallest accepted number of significant decimal digits.
pub const MIN_DIGITS: u32 = 15;

/// Precision used when nothing else is requested.
pub const DEFAULT_DIGITS: u32 = 30;

// Extra binary digits carried beyond the requested decimal precision.
const GUARD_BITS: u32 = 32;

/// Working precision in decimal digits together with the derived tolerance.
///
/// ```text
/// bits = ceil(digits * log2(10)) + guard
/// eps  = 10^(-floor(digits / 2))
/// ```
///
/// `eps` is the tolerance used for every "equal within eps" decision
/// (coincidence, tangency, certificates).
#[derive(Clone, Debug)]
pub struct PrecisionContext {
    digits: u32,
    bits: u32,
    eps: Float,
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::Precision { got: digits, min: MIN_DIGITS });
        }
        let bits = (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS;
        let eps = pow10_neg(bits, digits / 2);
        Ok(PrecisionContext { digits, bits, eps })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Binary precision of every `Float` created through this context.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn eps(&self) -> &Float {
        &self.eps
    }

    /// Creates a float at working precision.
    pub fn real<T>(&self, value: T) -> Float
    where
        Float: Assign<T>,
    {
        Float::with_val(self.bits, value)
    }

    pub fn zero(&self) -> Float {
        Float::new(self.bits)
    }

    pub fn one(&self) -> Float {
        self.real(1)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.bits, Constant::Pi)
    }

    /// `10^(-k)` at working precision.
    pub fn pow10_neg(&self, k: u32) -> Float {
        pow10_neg(self.bits, k)
    }

    /// Parses a decimal string at working precision.
    pub fn parse(&self, text: &str) -> Result<Float> {
        let parsed = Float::parse(text.trim())
            .map_err(|e| Error::Domain(format!("cannot parse {text:?} as a number: {e}")))?;
        Ok(Float::with_val(self.bits, parsed))
    }

    /// `|x| <= eps`
    pub fn is_negligible(&self, x: &Float) -> bool {
        x.clone().abs() <= self.eps
    }

    /// `|a - b| <= eps`
    pub fn close(&self, a: &Float, b: &Float) -> bool {
        Float::with_val(self.bits, a - b).abs() <= self.eps
    }
}

fn pow10_neg(bits: u32, k: u32) -> Float {
    let p = Float::with_val(bits, Float::u_pow_u(10, k));
    p.recip()
}

/// Formats a float with `digits` significant decimal digits.
pub fn fmt_digits(x: &Float, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(digits as usize))
}

/// Shortest decimal string that reads back to exactly the same float.
pub fn fmt_exact(x: &Float) -> String {
    x.to_string_radix(10, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_low_precision() {
        assert_eq!(
            PrecisionContext::new(14).unwrap_err(),
            Error::Precision { got: 14, min: 15 }
        );
    }

    #[test]
    fn eps_tracks_half_the_digits() {
        let ctx = PrecisionContext::new(30).unwrap();
        let expected = 1e-15;
        assert!((ctx.eps().to_f64() - expected).abs() < 1e-28);
        assert!(ctx.bits() >= 100 + 32);
        let ctx = PrecisionContext::new(41).unwrap();
        assert!((ctx.eps().to_f64() - 1e-20).abs() < 1e-33);
    }

    #[test]
    fn exact_format_round_trips() {
        let ctx = PrecisionContext::new(40).unwrap();
        let x = ctx.real(2).sqrt();
        let back = ctx.parse(&fmt_exact(&x)).unwrap();
        assert_eq!(x, back);
    }
}
