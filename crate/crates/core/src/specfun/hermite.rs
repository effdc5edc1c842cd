//! Physicists' Hermite polynomials in sign/log form and Kummer's `₁F₁`.

use std::f64::consts::LN_2;

use twofloat::TwoFloat;

use crate::compensated::dd_div;
use crate::error::{Error, Result};
use crate::logval::SignedLogValue;

const RESCALE_AT: f64 = 1e200;
const RESCALE_BITS: i32 = 600;

/// `H_n(y)` via `H_{m+1} = 2y H_m - 2m H_{m-1}`, rescaling the pair whenever
/// it grows large so that no intermediate overflows.
pub fn hermite(n: usize, y: f64) -> SignedLogValue {
    if n == 0 {
        return SignedLogValue::ONE;
    }
    let mut prev = 1.0f64;
    let mut cur = 2.0 * y;
    let mut log_scale = 0.0;
    let down = 2f64.powi(-RESCALE_BITS);
    for m in 1..n {
        let next = 2.0 * y * cur - 2.0 * m as f64 * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE_AT || prev.abs() > RESCALE_AT {
            cur *= down;
            prev *= down;
            log_scale += f64::from(RESCALE_BITS) * LN_2;
        }
    }
    SignedLogValue::from_f64(cur).times_exp(log_scale)
}

const KUMMER_MAX_TERMS: usize = 100_000;

fn kummer_series(a: f64, c: f64, z: f64) -> Result<SignedLogValue> {
    let mut term = TwoFloat::from(1.0);
    let mut sum = term;
    let mut log_scale = 0.0;
    let down = TwoFloat::from(2f64.powi(-RESCALE_BITS));
    let mut small_run = 0;
    let terminating = (a <= 0.0 && a == a.floor()).then(|| (-a) as usize);
    let limit = terminating.unwrap_or(KUMMER_MAX_TERMS);
    let mut n = 0usize;
    while n < limit {
        let nf = n as f64;
        let ratio = dd_div(TwoFloat::from(a) + nf, (TwoFloat::from(c) + nf) * (nf + 1.0)) * z;
        term *= ratio;
        sum += term;
        n += 1;
        if sum.hi().abs() > RESCALE_AT || term.hi().abs() > RESCALE_AT {
            term *= down;
            sum *= down;
            log_scale += f64::from(RESCALE_BITS) * LN_2;
        }
        if terminating.is_none() {
            if term.hi().abs() <= 1e-19 * sum.hi().abs() && ratio.hi().abs() < 1.0 {
                small_run += 1;
                if small_run >= 2 {
                    break;
                }
            } else {
                small_run = 0;
            }
        }
    }
    if terminating.is_none() && n >= KUMMER_MAX_TERMS {
        return Err(Error::NonConvergence { what: "1F1 series", terms: n });
    }
    Ok(SignedLogValue::from_f64(sum.hi() + sum.lo()).times_exp(log_scale))
}

/// `₁F₁(α; γ; z)` in sign/log form. Negative `z` goes through
/// `₁F₁(α;γ;z) = e^z ₁F₁(γ-α;γ;-z)` unless the series terminates as given.
pub fn kummer_1f1_log(a: f64, c: f64, z: f64) -> Result<SignedLogValue> {
    if c <= 0.0 && c == c.floor() {
        return Err(Error::domain(format!("1F1 gamma parameter {c} is a non-positive integer")));
    }
    if ![a, c, z].iter().all(|v| v.is_finite()) {
        return Err(Error::domain("1F1 arguments must be finite"));
    }
    let terminating = a <= 0.0 && a == a.floor();
    if z < 0.0 && !terminating {
        return Ok(kummer_series(c - a, c, -z)?.times_exp(z));
    }
    kummer_series(a, c, z)
}

pub fn kummer_1f1(a: f64, c: f64, z: f64) -> Result<f64> {
    kummer_1f1_log(a, c, z)?.to_f64()
}
