//! `p = 1`: the residue series converges below a threshold in `a` and is
//! summed exactly; closed forms for order `-1/2`.

use std::f64::consts::PI;

use super::{check_order, sum_series, SeriesMode, ROUNDING_FACTOR};
use crate::error::{Error, Result};
use crate::logval::SignedLogValue;
use crate::params::{
    classify_convergence, p1_threshold, validate, EvalResult, Method, SumKind, SumParams, TruncationPolicy,
    EVEN_INTEGER_TOL,
};
use crate::specfun::{hyp2f1, hyp2f1_log, rgamma, zeta};

const SQRT_PI: f64 = 1.772_453_850_905_516;

fn require_unit_power(params: &SumParams) -> Result<()> {
    if (params.p - 1.0).abs() > EVEN_INTEGER_TOL {
        return Err(Error::domain(format!("p = 1 expansion called with p = {}", params.p)));
    }
    Ok(())
}

/// `(1/Γ(1+ν)) [ (1/a) ₂F₁(1/2,1;1+ν;z) - 1/2 + (1/π) Σ_{k>=0} (-1)^k ζ(2k+2) ₂F₁(-k,-k-1/2;1+ν;z) (a/2π)^{2k+1} ]`
fn expand_unit_power(params: &SumParams, z: f64, ratio: f64, policy: &TruncationPolicy) -> Result<EvalResult> {
    let SumParams { nu, a, .. } = *params;
    let lead = hyp2f1(0.5, 1.0, 1.0 + nu, z)? / a;
    let base = lead - 0.5;
    let log_step = (a / (2.0 * PI)).ln();
    let term = |k: usize| -> Result<SignedLogValue> {
        let kf = k as f64;
        let hyp = hyp2f1_log(-kf, -kf - 0.5, 1.0 + nu, z)?;
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        let mag = SignedLogValue::new(sign, (2.0 * kf + 1.0) * log_step + zeta(2.0 * kf + 2.0)?.ln() - PI.ln());
        Ok(mag * hyp)
    };
    let series = sum_series(0, term, base, SeriesMode::Convergent { ratio: Some(ratio) }, policy)?;
    let scale = rgamma(1.0 + nu);
    let rounding = ROUNDING_FACTOR * (lead.abs() + 0.5 + series.abs_sum);
    Ok(EvalResult {
        value: scale * (base + series.sum),
        error_estimate: scale.abs() * (series.error + rounding),
        terms_used: series.terms,
        method: Method::Expansion,
        convergence: classify_convergence(params),
        certified: false,
    })
}

/// Convergent `p = 1` expansion of the `J` sum, valid for `a < 2π/√(1+x²)`.
pub fn expand_p1(params: &SumParams, policy: &TruncationPolicy) -> Result<EvalResult> {
    let params = validate(*params)?;
    policy.check()?;
    if !(params.kind == SumKind::S || (params.kind == SumKind::Smu && params.mu() == 0.0)) {
        return Err(Error::domain("expand_p1 handles kind S"));
    }
    require_unit_power(&params)?;
    check_order(params.nu)?;
    let threshold = p1_threshold(SumKind::S, params.x);
    if params.a >= threshold {
        return Err(Error::ConvergenceDomain { a: params.a, threshold });
    }
    let ratio = (params.a / threshold).powi(2);
    expand_unit_power(&params, -params.x * params.x, ratio, policy)
}

/// Convergent `p = 1` expansion of the `I` sum, valid for `a < 2π/(1+x)`; the
/// boundary itself is admitted for `ν > -1/2`.
pub fn expand_t_p1(params: &SumParams, policy: &TruncationPolicy) -> Result<EvalResult> {
    let params = validate(*params)?;
    policy.check()?;
    if params.kind != SumKind::T {
        return Err(Error::domain("expand_t_p1 handles kind T"));
    }
    require_unit_power(&params)?;
    check_order(params.nu)?;
    let threshold = p1_threshold(SumKind::T, params.x);
    if params.a > threshold || (params.a == threshold && params.nu <= -0.5) {
        return Err(Error::ConvergenceDomain { a: params.a, threshold });
    }
    let ratio = (params.a / threshold).powi(2);
    expand_unit_power(&params, params.x * params.x, ratio, policy)
}

/// `π^{-1/2} Σ_{n>=1} e^{-an} cos(anx)` in closed form.
pub fn closed_form_s_half_p1(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("closed form needs a > 0 and finite x, got a = {a}, x = {x}")));
    }
    // (e^{-a} cos ax - e^{-2a}) / (1 - 2 e^{-a} cos ax + e^{-2a}), written without cancellation
    let q = (-a).exp();
    let m = (-a).exp_m1();
    let s2 = 2.0 * (a * x / 2.0).sin().powi(2);
    let num = q * (-s2 - m);
    let den = m * m + 2.0 * q * s2;
    Ok(num / den / SQRT_PI)
}

/// `Σ_{n>=1} e^{-an} I_{-1/2}(anx)/(anx/2)^{1/2}`, i.e. `π^{-1/2} Σ e^{-an} cosh(anx)`, for `0 < x < 1`.
pub fn closed_form_t_half_p1(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!("closed form needs a > 0 and 0 < x < 1, got a = {a}, x = {x}")));
    }
    Ok((1.0 / (a * (1.0 - x)).exp_m1() + 1.0 / (a * (1.0 + x)).exp_m1()) / (2.0 * SQRT_PI))
}
