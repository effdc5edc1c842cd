//! Term-by-term summation with a tail bound, the reference against which
//! every expansion is checked.

use serde::Serialize;

use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};
use crate::logval::LOG_MAX;
use crate::params::{classify_convergence, validate, EvalResult, Method, SumKind, SumParams, TruncationPolicy};
use crate::specfun::{bessel_i_norm_scaled, bessel_j_norm, log_gamma_signed, rgamma};

/// Rounding allowance per unit of `Σ|term|`.
const ROUNDING_FACTOR: f64 = 8.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailBound {
    pub n_stop: usize,
    /// Bound on `|Σ_{m > n_stop} term(m)|`.
    pub bound: f64,
    /// False when the Bessel envelope behind the bound is heuristic (`ν < -1/2`).
    pub certified: bool,
}

/// The `n`-th term of the sum.
pub fn term(params: &SumParams, n: usize) -> Result<f64> {
    let SumParams { nu, p, a, x, .. } = *params;
    let u = a * (n as f64).powf(p);
    let z = u * x;
    match params.kind {
        SumKind::S => {
            if u > -f64::MIN_POSITIVE.ln() {
                return Ok(0.0);
            }
            Ok((-u).exp() * bessel_j_norm(nu, z)?)
        }
        SumKind::Smu => {
            let log_weight = -u + params.mu() * (z / 2.0).ln();
            if log_weight < f64::MIN_POSITIVE.ln() {
                return Ok(0.0);
            }
            Ok(log_weight.exp() * bessel_j_norm(nu, z)?)
        }
        SumKind::T => {
            // e^{-u} I_norm(z) = e^{-u(1-x)} · e^{-z} I_norm(z)
            let decay = u * (1.0 - x);
            if decay > -f64::MIN_POSITIVE.ln() {
                return Ok(0.0);
            }
            Ok((-decay).exp() * bessel_i_norm_scaled(nu, z)?)
        }
    }
}

/// Log of an upper bound on the upper incomplete gamma function `Γ(s, u)`.
fn log_upper_gamma_bound(s: f64, u: f64) -> f64 {
    if s <= 1.0 {
        // t^{s-1} <= u^{s-1} on [u, ∞)
        return (s - 1.0) * u.ln() - u;
    }
    // Γ(s, u) <= Γ(s); past u = s - 1 the second bound decreases from +∞, so the minimum stays monotone
    let whole = log_gamma_signed(s).map(|g| g.log_mag).unwrap_or(f64::INFINITY);
    if u > s - 1.0 {
        return whole.min((s - 1.0) * u.ln() - u - (1.0 - (s - 1.0) / u).ln());
    }
    whole
}

/// Envelope `|term(m)| <= C · (A m^p)^e · e^{-D m^p}` as `(ln C, e, D, A, certified)`.
fn envelope(params: &SumParams) -> (f64, f64, f64, f64, bool) {
    let SumParams { nu, a, x, .. } = *params;
    let certified = nu >= -0.5;
    // |(z/2)^{-ν}J_ν(z)| <= 1/Γ(1+ν) for ν >= -1/2; below that a growth
    // (z/2)^{-ν-1/2} is assumed, with the constant padded
    let (log_c, extra) = if certified {
        (rgamma(1.0 + nu).abs().ln(), 0.0)
    } else {
        ((2.0 * rgamma(1.0 + nu).abs().max(1.0)).ln(), -nu - 0.5)
    };
    match params.kind {
        SumKind::S => (log_c + extra * (x / 2.0).ln(), extra, a, a, certified),
        SumKind::Smu => {
            let e = params.mu() + extra;
            (log_c + e * (x / 2.0).ln(), e, a, a, certified)
        }
        SumKind::T => {
            // e^{-z} I_norm(z) <= 1/Γ(1+ν) for ν >= -1/2
            (log_c + extra * (x / 2.0).ln(), extra, a * (1.0 - x), a, certified)
        }
    }
}

/// Bound on `|Σ_{m > n} term(m)|` by comparison with `∫_n^∞`; infinite while
/// the envelope is still increasing at `n`.
pub fn tail_bound(params: &SumParams, n: usize) -> Result<TailBound> {
    let params = validate(*params)?;
    if n < 1 {
        return Err(Error::domain("tail_bound needs n >= 1"));
    }
    let (log_c, e, decay, scale, certified) = envelope(&params);
    let p = params.p;
    let np = (n as f64).powf(p);
    // (A t^p)^e e^{-D t^p} decreases for D t^p >= e
    if decay * np < e {
        return Ok(TailBound { n_stop: n, bound: f64::INFINITY, certified });
    }
    // ∫_n^∞ (A t^p)^e e^{-D t^p} dt = (A/D)^e (1/p) D^{-1/p} Γ(e + 1/p, D n^p)
    let s = e + 1.0 / p;
    let log_bound = log_c + e * (scale / decay).ln() - p.ln() - decay.ln() / p
        + log_upper_gamma_bound(s, decay * np);
    let bound = if log_bound > LOG_MAX { f64::INFINITY } else { log_bound.exp() };
    Ok(TailBound { n_stop: n, bound, certified })
}

/// Sums terms until the tail bound drops below `tol · |partial sum|`.
pub fn sum_direct(params: &SumParams, policy: &TruncationPolicy) -> Result<EvalResult> {
    let params = validate(*params)?;
    policy.check()?;
    let mut acc = CompensatedSum::default();
    let mut small_run = 0usize;
    for n in 1..=policy.max_terms {
        let t = term(&params, n)?;
        acc.add(t);
        let value = acc.value();
        let target = policy.tol * value.abs();
        if t.abs() <= target {
            small_run += 1;
        } else {
            small_run = 0;
        }
        let last = tail_bound(&params, n)?;
        let bound_ok = last.bound <= target;
        let done = if last.certified { bound_ok } else { bound_ok && small_run >= 2 };
        if done {
            return Ok(EvalResult {
                value,
                error_estimate: last.bound + ROUNDING_FACTOR * acc.abs_sum(),
                terms_used: n,
                method: Method::Direct,
                convergence: classify_convergence(&params),
                certified: last.certified,
            });
        }
    }
    Err(Error::NonConvergence { what: "direct summation", terms: policy.max_terms })
}
