//! Method selection: which expansion applies to a parameter set, and the
//! `auto` policy that falls back to direct summation.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::directsum::sum_direct;
use crate::error::{Error, Result};
use crate::expansions::{expand_p1, expand_p2, expand_smu_p2, expand_t_p1, expand_t_residues, expand_residues};
use crate::params::{
    even_integer, p1_threshold, validate, ConvergenceClass, EvalResult, SumKind, SumParams, TruncationPolicy,
    EVEN_INTEGER_TOL,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MethodChoice {
    Direct,
    Expansion,
    /// Expansion when it can meet the tolerance, direct otherwise.
    Auto,
}

impl fmt::Display for MethodChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MethodChoice::Direct => "direct",
            MethodChoice::Expansion => "expansion",
            MethodChoice::Auto => "auto",
        })
    }
}

impl FromStr for MethodChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(MethodChoice::Direct),
            "expansion" => Ok(MethodChoice::Expansion),
            "auto" => Ok(MethodChoice::Auto),
            other => Err(Error::domain(format!("unknown method '{other}'"))),
        }
    }
}

fn is_unit(p: f64) -> bool {
    (p - 1.0).abs() <= EVEN_INTEGER_TOL
}

fn is_two(p: f64) -> bool {
    (p - 2.0).abs() <= EVEN_INTEGER_TOL
}

fn expand_plain(params: &SumParams, policy: &TruncationPolicy) -> Result<EvalResult> {
    let p = params.p;
    if is_two(p) {
        return expand_p2(params, policy);
    }
    if even_integer(p).is_some() {
        return Err(Error::EvenP(p));
    }
    if is_unit(p) && params.a < p1_threshold(SumKind::S, params.x) {
        return expand_p1(params, policy);
    }
    expand_residues(params, policy)
}

/// The expansion suited to `params`.
pub fn expand(params: &SumParams, policy: &TruncationPolicy) -> Result<EvalResult> {
    let params = validate(*params)?;
    match params.kind {
        SumKind::S => expand_plain(&params, policy),
        SumKind::Smu if params.mu() == 0.0 => {
            expand_plain(&SumParams { kind: SumKind::S, mu: None, ..params }, policy)
        }
        SumKind::Smu if is_two(params.p) => expand_smu_p2(&params, policy),
        SumKind::Smu => Err(Error::domain(format!(
            "shifted sum with mu = {} has an expansion only at p = 2",
            params.mu()
        ))),
        SumKind::T if is_unit(params.p) => expand_t_p1(&params, policy),
        SumKind::T => expand_t_residues(&params, policy),
    }
}

/// Evaluates with the chosen method. `Auto` keeps an asymptotic expansion
/// only if its error estimate meets the tolerance, and falls back to direct
/// summation when no expansion applies.
pub fn evaluate(params: &SumParams, choice: MethodChoice, policy: &TruncationPolicy) -> Result<EvalResult> {
    match choice {
        MethodChoice::Direct => sum_direct(params, policy),
        MethodChoice::Expansion => expand(params, policy),
        MethodChoice::Auto => match expand(params, policy) {
            Ok(r) if r.convergence != ConvergenceClass::Asymptotic || r.error_estimate <= policy.tol * r.value.abs() => {
                Ok(r)
            }
            Ok(_) | Err(_) => sum_direct(params, policy),
        },
    }
}

/// Both methods on one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Comparison {
    pub direct: EvalResult,
    pub expansion: EvalResult,
    pub abs_diff: f64,
    pub within_tolerance: bool,
}

/// Runs both methods. They agree when the difference is below the relative
/// tolerance or within ten times the combined error estimates.
pub fn compare(params: &SumParams, policy: &TruncationPolicy) -> Result<Comparison> {
    let direct = sum_direct(params, policy)?;
    let expansion = expand(params, policy)?;
    let abs_diff = (direct.value - expansion.value).abs();
    let within_tolerance = abs_diff <= policy.tol * direct.value.abs()
        || abs_diff <= 10.0 * (direct.error_estimate + expansion.error_estimate);
    Ok(Comparison { direct, expansion, abs_diff, within_tolerance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansions::closed_form_s_half_p1;
    use crate::params::Method;

    #[test]
    fn auto_picks_convergent_expansion() {
        let policy = TruncationPolicy::default();
        let r = evaluate(&SumParams::s(-0.5, 1.0, 0.1, 1.0), MethodChoice::Auto, &policy).unwrap();
        assert_eq!(r.method, Method::Expansion);
        let want = closed_form_s_half_p1(0.1, 1.0).unwrap();
        assert!(((r.value - want) / want).abs() < 1e-12);
    }

    #[test]
    fn auto_falls_back_to_direct() {
        let policy = TruncationPolicy::default();
        // p = 4 has no expansion
        let r = evaluate(&SumParams::s(0.0, 4.0, 0.5, 1.0), MethodChoice::Auto, &policy).unwrap();
        assert_eq!(r.method, Method::Direct);
        let err = evaluate(&SumParams::s(0.0, 4.0, 0.5, 1.0), MethodChoice::Expansion, &policy).unwrap_err();
        assert_eq!(err, Error::EvenP(4.0));
    }

    #[test]
    fn large_a_at_unit_power_uses_residue_series() {
        let policy = TruncationPolicy::default();
        let r = expand(&SumParams::s(0.0, 1.0, 7.0, 0.5), &policy).unwrap();
        assert_eq!(r.convergence, ConvergenceClass::Asymptotic);
    }

    #[test]
    fn comparison_on_theta_point() {
        let policy = TruncationPolicy::default();
        let c = compare(&SumParams::s(-0.5, 2.0, 1.0, 1.0), &policy).unwrap();
        assert!(c.within_tolerance, "{c:?}");
    }
}
