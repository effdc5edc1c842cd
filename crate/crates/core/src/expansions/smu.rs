//! `p = 2` expansion of the shifted-power sum
//! `Σ e^{-an²} J_ν(an²x)/(an²x/2)^{ν-μ}`.

use std::f64::consts::PI;

use super::p2::{closed_form_sin_p2, expand_p2, p2_algebraic};
use super::{check_order, sum_series, SeriesMode, ROUNDING_FACTOR};
use crate::error::{Error, Result};
use crate::logval::SignedLogValue;
use crate::params::{
    is_integer, validate, ConvergenceClass, EvalResult, Method, SumKind, SumParams, TruncationPolicy,
    EVEN_INTEGER_TOL,
};
use crate::specfun::gamma::sin_pi;
use crate::specfun::{hyp2f1, hyp2f1_log, ln_factorial, log_gamma_signed, rgamma, zeta};

/// `sin(πμ) ζ(1+2μ+2k) Γ(1+2μ+2k)` with its finite limits at integer `μ <= 0`.
fn residue_weight(mu: f64, k: usize) -> Result<SignedLogValue> {
    let s = 1.0 + 2.0 * mu + 2.0 * k as f64;
    if is_integer(mu) {
        if mu > 0.0 {
            return Ok(SignedLogValue::ZERO);
        }
        let m = (-mu).round() as usize;
        let parity = |e: usize| if e.is_multiple_of(2) { 1i8 } else { -1 };
        if k > m {
            return Ok(SignedLogValue::ZERO);
        }
        if k == m {
            return Ok(SignedLogValue::new(parity(m), (PI / 2.0).ln()));
        }
        let big_n = 2 * (m - k) - 1;
        let z = zeta(-(big_n as f64))?;
        let v = SignedLogValue::from_f64(z) * SignedLogValue::new(parity(m + big_n), (PI / 2.0).ln() - ln_factorial(big_n));
        return Ok(v);
    }
    let sine = sin_pi(mu);
    Ok(SignedLogValue::from_f64(sine) * SignedLogValue::from_f64(zeta(s)?) * log_gamma_signed(s)?)
}

/// The `k`-th residue term `-(1/π)(1/k!)(a/4π²)^{μ+k} G(μ,k) ₂F₁(-k/2,1/2-k/2;1+ν;-x²)`,
/// before the common factor `(x/2)^μ/Γ(1+ν)`.
pub fn smu_residue_term(params: &SumParams, k: usize) -> Result<SignedLogValue> {
    let SumParams { nu, a, x, .. } = *params;
    let mu = params.mu();
    let weight = residue_weight(mu, k)?;
    if weight.is_zero() {
        return Ok(SignedLogValue::ZERO);
    }
    let kf = k as f64;
    let hyp = hyp2f1_log(-kf / 2.0, 0.5 - kf / 2.0, 1.0 + nu, -x * x)?;
    let scale = SignedLogValue::new(-1, (mu + kf) * (a / (4.0 * PI * PI)).ln() - ln_factorial(k) - PI.ln());
    Ok(scale * weight * hyp)
}

/// `(x/2)^μ Γ(μ+1/2)/(2√a Γ(1+ν)) ₂F₁(μ/2+1/4, μ/2+3/4; 1+ν; -x²)`; for `μ = 0`
/// this includes the constant `-1/(2Γ(1+ν))` as well.
pub fn smu_p2_algebraic(params: &SumParams) -> Result<f64> {
    let params = validate(*params)?;
    let SumParams { nu, a, x, .. } = params;
    let mu = params.mu();
    check_shift(mu)?;
    if mu == 0.0 {
        return Ok(p2_algebraic(nu, a, x)?.0);
    }
    algebraic_leading(nu, a, x, mu)
}

fn algebraic_leading(nu: f64, a: f64, x: f64, mu: f64) -> Result<f64> {
    let hyp = hyp2f1(mu / 2.0 + 0.25, mu / 2.0 + 0.75, 1.0 + nu, -x * x)?;
    let pre = SignedLogValue::new(1, mu * (x / 2.0).ln() - 0.5 * a.ln() - 2f64.ln())
        * log_gamma_signed(mu + 0.5)?;
    Ok(pre.to_f64()? * rgamma(1.0 + nu) * hyp)
}

fn check_shift(mu: f64) -> Result<()> {
    if mu < 0.0 && is_integer(mu + 0.5) {
        return Err(Error::DoublePole(mu));
    }
    Ok(())
}

/// Size of the exponentially small remainder left out when the residue
/// series terminates: the `n = 1` dual term with a power-law prefactor.
fn remainder_envelope(params: &SumParams) -> f64 {
    let SumParams { nu, a, x, .. } = *params;
    let mu = params.mu();
    let chi = PI * PI / a;
    let log_env = mu * (x / 2.0).ln() + 0.5 * (PI / a).ln() + mu.abs() * chi.ln() - chi / (1.0 + x * x);
    rgamma(1.0 + nu).abs() * log_env.exp()
}

/// `p = 2` expansion of the shifted sum. `μ = 0` is the plain `J` sum;
/// `μ = 1, ν = 1/2` is the sine closed form.
pub fn expand_smu_p2(params: &SumParams, policy: &TruncationPolicy) -> Result<EvalResult> {
    let params = validate(*params)?;
    policy.check()?;
    if params.kind != SumKind::Smu {
        return Err(Error::domain("expand_smu_p2 handles kind Smu"));
    }
    if (params.p - 2.0).abs() > EVEN_INTEGER_TOL {
        return Err(Error::domain(format!("shifted expansion needs p = 2, got p = {}", params.p)));
    }
    let SumParams { nu, a, x, .. } = params;
    let mu = params.mu();
    check_order(nu)?;
    check_shift(mu)?;
    if mu == 0.0 {
        return expand_p2(&SumParams { kind: SumKind::S, mu: None, ..params }, policy);
    }
    if mu == 1.0 && nu == 0.5 {
        return closed_form_sin_p2(a, x);
    }
    let lead = algebraic_leading(nu, a, x, mu)?;
    let front = SignedLogValue::new(1, mu * (x / 2.0).ln()).to_f64()? * rgamma(1.0 + nu);
    if is_integer(mu) {
        // finitely many residues; what remains is exponentially small
        let m = if mu < 0.0 { (-mu).round() as usize + 1 } else { 0 };
        let mut sum = 0.0;
        let mut abs_sum = lead.abs();
        for k in 0..m {
            let t = front * smu_residue_term(&params, k)?.to_f64()?;
            sum += t;
            abs_sum += t.abs();
        }
        return Ok(EvalResult {
            value: lead + sum,
            error_estimate: remainder_envelope(&params) + ROUNDING_FACTOR * abs_sum,
            terms_used: m,
            method: Method::Expansion,
            convergence: ConvergenceClass::ExponentiallySmall,
            certified: false,
        });
    }
    let base = lead / front;
    let series = sum_series(0, |k| smu_residue_term(&params, k), base, SeriesMode::Asymptotic, policy)?;
    let rounding = ROUNDING_FACTOR * (base.abs() + series.abs_sum);
    Ok(EvalResult {
        value: front * (base + series.sum),
        error_estimate: front.abs() * (series.error + rounding),
        terms_used: series.terms,
        method: Method::Expansion,
        convergence: ConvergenceClass::Asymptotic,
        certified: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_shift_limit_is_minus_half() {
        let params = SumParams::smu(0.0, 2.0, 1.0, 0.5, 0.0);
        let t = smu_residue_term(&params, 0).unwrap().to_f64().unwrap();
        assert!((t + 0.5).abs() < 1e-15);
        for k in 1..5 {
            assert!(smu_residue_term(&params, k).unwrap().is_zero());
        }
    }

    #[test]
    fn sine_case_has_no_residues() {
        let params = SumParams::smu(0.5, 2.0, 0.7, 1.0, 1.0);
        for k in 0..20 {
            assert!(smu_residue_term(&params, k).unwrap().is_zero());
        }
    }

    #[test]
    fn sine_case_algebraic_part_matches() {
        let (a, x): (f64, f64) = (0.7, 1.3);
        let alg = smu_p2_algebraic(&SumParams::smu(0.5, 2.0, a, x, 1.0)).unwrap();
        let want = (x.atan() / 2.0).sin() / (2.0 * a.sqrt() * (1.0 + x * x).powf(0.25));
        assert!(((alg - want) / want).abs() < 1e-13);
    }

    #[test]
    fn half_integer_negative_shift_is_double_pole() {
        let err = expand_smu_p2(&SumParams::smu(0.0, 2.0, 0.5, 0.5, -1.5), &TruncationPolicy::default())
            .unwrap_err();
        assert_eq!(err, Error::DoublePole(-1.5));
    }

    #[test]
    fn zero_shift_delegates_to_plain_sum() {
        let policy = TruncationPolicy::default();
        let a = expand_smu_p2(&SumParams::smu(0.0, 2.0, 0.8, 0.5, 0.0), &policy).unwrap();
        let b = expand_p2(&SumParams::s(0.0, 2.0, 0.8, 0.5), &policy).unwrap();
        assert_eq!(a.value, b.value);
    }
}
