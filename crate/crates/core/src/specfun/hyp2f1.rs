//! Gauss hypergeometric function `₂F₁(α, β; γ; z)` for real parameters and `z < 1`.
//!
//! Terminating cases are summed exactly as polynomials. For `z < 0` the
//! non-terminating series is moved to `w = z/(z-1) ∈ (0,1)` by the Pfaff
//! transformation
//!
//! `₂F₁(α,β;γ;z) = (1-z)^{-α} ₂F₁(α, γ-β; γ; w)`,
//!
//! so negative arguments of any size converge. Partial sums are carried in
//! double-double and periodically rescaled, which keeps polynomials of
//! degree in the thousands representable; the `_log` entry points return
//! the result in sign/log form.

use std::f64::consts::LN_2;

use twofloat::TwoFloat;

use crate::compensated::dd_div;
use crate::error::{Error, Result};
use crate::logval::SignedLogValue;

const SERIES_MAX_TERMS: usize = 2_000_000;
const SERIES_REL_TOL: f64 = 1e-19;
const RESCALE_AT: f64 = 1e250;
const RESCALE_BITS: i32 = 600;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2F1Args {
    pub alpha: f64,
    pub beta: f64,
    pub gamma_param: f64,
    pub z: f64,
}

impl Hyp2F1Args {
    pub fn new(alpha: f64, beta: f64, gamma_param: f64, z: f64) -> Self {
        Self { alpha, beta, gamma_param, z }
    }

    pub fn eval(&self) -> Result<f64> {
        hyp2f1(self.alpha, self.beta, self.gamma_param, self.z)
    }
}

/// Degree `m` when `v = -m` is a non-positive integer.
fn nonpositive_integer(v: f64) -> Option<usize> {
    (v <= 0.0 && v == v.floor() && v > -1e15).then(|| (-v) as usize)
}

fn terminating_degree(a: f64, b: f64) -> Option<usize> {
    match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(m), Some(n)) => Some(m.min(n)),
        (Some(m), None) | (None, Some(m)) => Some(m),
        (None, None) => None,
    }
}

fn check_gamma_param(c: f64, degree: Option<usize>) -> Result<()> {
    if let Some(k) = nonpositive_integer(c) {
        match degree {
            Some(m) if m <= k => Ok(()),
            _ => Err(Error::domain(format!(
                "gamma parameter {c} is a non-positive integer and the series does not terminate before it"
            ))),
        }
    } else {
        Ok(())
    }
}

/// Plain power series in `z`, summed in double-double. Stops after `degree`
/// terms for polynomials, otherwise when two consecutive terms fall below
/// the relative tolerance while the term ratio is below one.
pub(crate) fn power_series(a: f64, b: f64, c: f64, z: f64, degree: Option<usize>) -> Result<SignedLogValue> {
    let mut term = TwoFloat::from(1.0);
    let mut sum = term;
    let mut log_scale = 0.0;
    let mut small_run = 0;
    let zz = TwoFloat::from(z);
    let scale_down = TwoFloat::from(2f64.powi(-RESCALE_BITS));
    let limit = degree.unwrap_or(SERIES_MAX_TERMS);
    let mut n = 0usize;
    while n < limit {
        let nf = n as f64;
        let num = (TwoFloat::from(a) + nf) * (TwoFloat::from(b) + nf);
        let den = (TwoFloat::from(c) + nf) * (nf + 1.0);
        if den.hi() == 0.0 {
            return Err(Error::domain(format!("2F1 denominator vanishes at n = {n} (gamma = {c})")));
        }
        let ratio = dd_div(num, den) * zz;
        term *= ratio;
        sum += term;
        n += 1;
        if sum.hi().abs() > RESCALE_AT || term.hi().abs() > RESCALE_AT {
            term *= scale_down;
            sum *= scale_down;
            log_scale += f64::from(RESCALE_BITS) * LN_2;
        }
        if degree.is_none() {
            if term.hi().abs() <= SERIES_REL_TOL * sum.hi().abs() && ratio.hi().abs() < 1.0 {
                small_run += 1;
                if small_run >= 2 {
                    break;
                }
            } else {
                small_run = 0;
            }
            if term.hi() == 0.0 {
                break;
            }
        }
    }
    if degree.is_none() && n >= SERIES_MAX_TERMS {
        return Err(Error::NonConvergence { what: "2F1 series", terms: n });
    }
    let s = sum.hi() + sum.lo();
    Ok(if s == 0.0 {
        SignedLogValue::ZERO
    } else {
        SignedLogValue::new(if s > 0.0 { 1 } else { -1 }, s.abs().ln() + log_scale)
    })
}

/// Direct power series in `z` (valid for `|z| < 1` or terminating parameters).
pub fn hyp2f1_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let degree = terminating_degree(a, b);
    check_gamma_param(c, degree)?;
    if degree.is_none() && z.abs() >= 1.0 {
        return Err(Error::domain(format!("power series needs |z| < 1, got {z}")));
    }
    power_series(a, b, c, z, degree)?.to_f64()
}

/// Pfaff route for `z < 0`: `(1-z)^{-α} ₂F₁(α, γ-β; γ; z/(z-1))`, with the
/// roles of `α` and `β` swapped when that makes the transformed series terminate.
pub fn hyp2f1_pfaff_log(a: f64, b: f64, c: f64, z: f64) -> Result<SignedLogValue> {
    if z >= 0.0 {
        return Err(Error::domain(format!("Pfaff route is used for z < 0, got {z}")));
    }
    let w = z / (z - 1.0);
    let log_one_minus_z = (-z).ln_1p();
    let (lead, other) = if nonpositive_integer(c - a).is_some() && nonpositive_integer(c - b).is_none() {
        (b, a)
    } else {
        (a, b)
    };
    let second = c - other;
    let degree = terminating_degree(lead, second);
    check_gamma_param(c, degree)?;
    let inner = power_series(lead, second, c, w, degree)?;
    Ok(inner * SignedLogValue::new(1, -lead * log_one_minus_z))
}

pub fn hyp2f1_pfaff(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    hyp2f1_pfaff_log(a, b, c, z)?.to_f64()
}

/// `₂F₁(α, β; γ; z)` in sign/log form.
pub fn hyp2f1_log(a: f64, b: f64, c: f64, z: f64) -> Result<SignedLogValue> {
    if !(z < 1.0) {
        return Err(Error::domain(format!("2F1 requires z < 1, got {z}")));
    }
    if [a, b, c].iter().any(|v| !v.is_finite()) {
        return Err(Error::domain("2F1 parameters must be finite"));
    }
    if z == 0.0 {
        return Ok(SignedLogValue::ONE);
    }
    let degree = terminating_degree(a, b);
    check_gamma_param(c, degree)?;
    if degree.is_some() || z > 0.0 {
        return power_series(a, b, c, z, degree);
    }
    hyp2f1_pfaff_log(a, b, c, z)
}

pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    hyp2f1_log(a, b, c, z)?.to_f64()
}
