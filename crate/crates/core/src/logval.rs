//! Sign and log-magnitude representation for quantities such as `Γ(1+kp)` or
//! `H_{4r}(y)` that leave the double-precision range long before the
//! products they enter do.

use std::ops::{Div, Mul, Neg};

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest log-magnitude that still converts to a finite `f64`.
pub const LOG_MAX: f64 = 709.782_712_893_384;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignedLogValue {
    pub sign: i8,
    pub log_mag: f64,
}

impl SignedLogValue {
    pub const ZERO: Self = Self { sign: 0, log_mag: f64::NEG_INFINITY };
    pub const ONE: Self = Self { sign: 1, log_mag: 0.0 };

    pub fn new(sign: i8, log_mag: f64) -> Self {
        if sign == 0 || log_mag == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            Self { sign: sign.signum(), log_mag }
        }
    }

    pub fn from_f64(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else {
            Self { sign: if v > 0.0 { 1 } else { -1 }, log_mag: v.abs().ln() }
        }
    }

    /// `exp(log_mag)` with the given sign, for a positive magnitude known by its log.
    pub fn from_log(log_mag: f64) -> Self {
        Self::new(1, log_mag)
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn abs(self) -> Self {
        Self { sign: self.sign.abs(), ..self }
    }

    /// Converts to `f64`. Underflow goes to zero; overflow is an error so
    /// that an infinity never leaks into a series accumulation.
    pub fn to_f64(self) -> Result<f64> {
        if self.sign == 0 {
            return Ok(0.0);
        }
        if self.log_mag.is_nan() {
            return Err(Error::Overflow("NaN log-magnitude".into()));
        }
        if self.log_mag > LOG_MAX {
            return Err(Error::Overflow(format!("exp({}) exceeds f64 range", self.log_mag)));
        }
        Ok(f64::from(self.sign) * self.log_mag.exp())
    }

    /// Value scaled by `exp(-shift)`, used when summing terms relative to a common scale.
    pub fn scaled(self, shift: f64) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * (self.log_mag - shift).exp()
        }
    }

    /// Multiplies by `exp(delta)`.
    pub fn times_exp(self, delta: f64) -> Self {
        Self::new(self.sign, self.log_mag + delta)
    }

    pub fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Self::ONE;
        }
        let sign = if n % 2 == 0 { self.sign.abs() } else { self.sign };
        Self::new(sign, self.log_mag * f64::from(n))
    }
}

impl Mul for SignedLogValue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.sign * rhs.sign, self.log_mag + rhs.log_mag)
    }
}

impl Div for SignedLogValue {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.sign != 0, "division by a zero SignedLogValue");
        Self::new(self.sign * rhs.sign, self.log_mag - rhs.log_mag)
    }
}

impl Neg for SignedLogValue {
    type Output = Self;
    fn neg(self) -> Self {
        Self { sign: -self.sign, ..self }
    }
}

/// Sums signed log values without leaving the log domain: the terms are
/// accumulated relative to the largest magnitude.
pub fn sum_logs(terms: &[SignedLogValue]) -> SignedLogValue {
    let shift = terms
        .iter()
        .filter(|t| !t.is_zero())
        .map(|t| t.log_mag)
        .fold(f64::NEG_INFINITY, f64::max);
    if shift == f64::NEG_INFINITY {
        return SignedLogValue::ZERO;
    }
    let mut acc = crate::compensated::CompensatedSum::default();
    for t in terms {
        acc.add(t.scaled(shift));
    }
    let s = acc.value();
    if s == 0.0 {
        SignedLogValue::ZERO
    } else {
        SignedLogValue::new(if s > 0.0 { 1 } else { -1 }, s.abs().ln() + shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_adds_logs() {
        let a = SignedLogValue::from_f64(-3.0);
        let b = SignedLogValue::from_f64(4.0);
        assert!(((a * b).to_f64().unwrap() + 12.0).abs() < 1e-13);
        assert!(((a / b).to_f64().unwrap() + 0.75).abs() < 1e-15);
    }

    #[test]
    fn overflow_is_an_error() {
        let big = SignedLogValue::from_log(800.0);
        assert!(matches!(big.to_f64(), Err(Error::Overflow(_))));
        let prod = big * SignedLogValue::from_log(-795.0);
        assert!((prod.to_f64().unwrap() - 5f64.exp()).abs() < 1e-10);
    }

    #[test]
    fn zero_absorbs() {
        let z = SignedLogValue::ZERO * SignedLogValue::from_log(1e300);
        assert!(z.is_zero());
        assert_eq!(z.to_f64().unwrap(), 0.0);
    }

    #[test]
    fn sum_of_huge_terms() {
        let terms = [
            SignedLogValue::from_log(1000.0),
            -SignedLogValue::from_log(1000.0 + 0.5f64.ln()),
        ];
        let s = sum_logs(&terms);
        assert_eq!(s.sign, 1);
        assert!((s.log_mag - (1000.0 + 0.5f64.ln())).abs() < 1e-12);
    }
}
