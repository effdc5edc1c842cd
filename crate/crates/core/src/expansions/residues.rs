//! The general-`p` expansion: an `a^{-1/p}` leading term, the constant
//! `-1/2`, and a residue series in powers of `a/(2π)^p`.

use std::f64::consts::PI;

use super::{check_order, sum_series, ExpansionTermLog, SeriesMode, ROUNDING_FACTOR};
use crate::error::{Error, Result};
use crate::logval::SignedLogValue;
use crate::params::{
    is_even_integer, p1_threshold, validate, ConvergenceClass, EvalResult, Method, SumKind, SumParams,
    TruncationPolicy,
};
use crate::specfun::gamma::sin_pi;
use crate::specfun::{hyp2f1_log, ln_factorial, log_gamma, rgamma, zeta};

/// Hypergeometric argument: `-x²` for the `J` sums, `+x²` for the `I` sum.
fn hyp_argument(params: &SumParams) -> f64 {
    match params.kind {
        SumKind::T => params.x * params.x,
        _ => -params.x * params.x,
    }
}

/// The `k`-th residue term
/// `-(1/π) ((-1)^k/k!) (a/(2π)^p)^k ζ(1+kp) Γ(1+kp) sin(πkp/2) ₂F₁(-k/2, 1/2-k/2; 1+ν; ∓x²)`,
/// before division by `Γ(1+ν)`. Exactly zero when `kp` is an even integer.
pub fn residue_term(params: &SumParams, k: usize) -> Result<ExpansionTermLog> {
    let SumParams { nu, p, a, .. } = *params;
    if k == 0 {
        return Err(Error::domain("residue terms start at k = 1"));
    }
    let kf = k as f64;
    let kp = kf * p;
    if is_even_integer(kp) {
        return Ok(ExpansionTermLog { k, term: SignedLogValue::ZERO });
    }
    let sine = sin_pi(kp / 2.0);
    let hyp = hyp2f1_log(-kf / 2.0, 0.5 - kf / 2.0, 1.0 + nu, hyp_argument(params))?;
    if hyp.is_zero() || sine == 0.0 {
        return Ok(ExpansionTermLog { k, term: SignedLogValue::ZERO });
    }
    let log_mag = kf * (a.ln() - p * (2.0 * PI).ln()) + zeta(1.0 + kp)?.ln() + log_gamma(1.0 + kp)?.log_mag
        - ln_factorial(k)
        + sine.abs().ln()
        - PI.ln();
    let sign = -(if k.is_multiple_of(2) { 1 } else { -1 }) * (sine.signum() as i8);
    let term = SignedLogValue::new(sign, log_mag) * hyp;
    Ok(ExpansionTermLog { k, term })
}

/// `(1/p) a^{-1/p} Γ(1/p) ₂F₁(1/(2p), (p+1)/(2p); 1+ν; ∓x²)`.
fn leading_term(params: &SumParams) -> Result<f64> {
    let SumParams { nu, p, a, .. } = *params;
    let hyp = hyp2f1_log(0.5 / p, (p + 1.0) / (2.0 * p), 1.0 + nu, hyp_argument(params))?;
    let prefactor = SignedLogValue::from_log(-p.ln() - a.ln() / p + log_gamma(1.0 / p)?.log_mag);
    (prefactor * hyp).to_f64()
}

fn series_mode(params: &SumParams) -> (SeriesMode, ConvergenceClass) {
    let SumParams { p, a, x, kind, .. } = *params;
    if p < 1.0 {
        return (SeriesMode::Convergent { ratio: None }, ConvergenceClass::Convergent);
    }
    let threshold = p1_threshold(kind, x);
    if p == 1.0 && a < threshold {
        // only odd k contribute, so consecutive nonzero terms shrink by (a/threshold)²
        let r = (a / threshold).powi(2);
        return (SeriesMode::Convergent { ratio: Some(r) }, ConvergenceClass::ConditionallyConvergent);
    }
    (SeriesMode::Asymptotic, ConvergenceClass::Asymptotic)
}

fn expand_general(params: &SumParams, policy: &TruncationPolicy) -> Result<EvalResult> {
    policy.check()?;
    check_order(params.nu)?;
    if is_even_integer(params.p) {
        return Err(Error::EvenP(params.p));
    }
    let lead = leading_term(params)?;
    let base = lead - 0.5;
    let (mode, class) = series_mode(params);
    let series = sum_series(1, |k| Ok(residue_term(params, k)?.term), base, mode, policy)?;
    let scale = rgamma(1.0 + params.nu);
    let rounding = ROUNDING_FACTOR * (lead.abs() + 0.5 + series.abs_sum);
    Ok(EvalResult {
        value: scale * (base + series.sum),
        error_estimate: scale.abs() * (series.error + rounding),
        terms_used: series.terms,
        method: Method::Expansion,
        convergence: class,
        certified: false,
    })
}

/// General-`p` expansion of the `J` sum (`p` not an even integer).
pub fn expand_residues(params: &SumParams, policy: &TruncationPolicy) -> Result<EvalResult> {
    let params = validate(*params)?;
    match params.kind {
        SumKind::S => expand_general(&params, policy),
        SumKind::Smu if params.mu() == 0.0 => expand_general(&SumParams { kind: SumKind::S, ..params }, policy),
        _ => Err(Error::domain("expand_residues handles kind S (or Smu with mu = 0)")),
    }
}

/// General-`p` expansion of the `I` sum; the hypergeometric argument is `+x²`.
pub fn expand_t_residues(params: &SumParams, policy: &TruncationPolicy) -> Result<EvalResult> {
    let params = validate(*params)?;
    if params.kind != SumKind::T {
        return Err(Error::domain("expand_t_residues handles kind T"));
    }
    expand_general(&params, policy)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_kp_terms_vanish() {
        let params = SumParams::s(0.3, 2.0 / 3.0, 0.1, 1.2);
        for k in 1..=30 {
            let t = residue_term(&params, k).unwrap();
            assert_eq!(t.term.is_zero(), k % 3 == 0, "k = {k}");
        }
        let params = SumParams::t(0.0, 2.0 / 3.0, 0.1, 0.5);
        for k in [3, 6, 9] {
            assert!(residue_term(&params, k).unwrap().term.is_zero());
        }
    }

    #[test]
    fn even_p_is_refused() {
        let err = expand_residues(&SumParams::s(0.0, 2.0, 0.1, 1.0), &TruncationPolicy::default()).unwrap_err();
        assert_eq!(err, Error::EvenP(2.0));
    }

    #[test]
    fn first_term_by_hand() {
        // k = 1, p = 1/2: -(1/π)(-1)(a/√(2π)) ζ(3/2) Γ(3/2) sin(π/4) ₂F₁(-1/2, 0; 1+ν; -x²)
        let (a, x) = (0.2, 1.0);
        let params = SumParams::s(0.0, 0.5, a, x);
        let got = residue_term(&params, 1).unwrap().term.to_f64().unwrap();
        let zeta_3_2 = 2.612_375_348_685_488;
        let want = (a / (2.0 * PI).sqrt()) * zeta_3_2 * (PI.sqrt() / 2.0) * (0.5f64).sqrt() / PI;
        assert!(((got - want) / want).abs() < 1e-14);
    }

    #[test]
    fn classification_follows_parameters() {
        let policy = TruncationPolicy::default();
        let r = expand_residues(&SumParams::s(0.0, 0.5, 0.2, 1.0), &policy).unwrap();
        assert_eq!(r.convergence, ConvergenceClass::Convergent);
        let r = expand_residues(&SumParams::s(0.0, 1.5, 0.1, 0.5), &policy).unwrap();
        assert_eq!(r.convergence, ConvergenceClass::Asymptotic);
        assert!(r.error_estimate > 0.0);
    }
}
