//! `p = 2`: the residue series vanishes and the sum splits into an
//! algebraic part plus a dual series in `e^{-π²n²/a}`.

use std::f64::consts::{LN_2, PI};

use super::{check_order, ROUNDING_FACTOR};
use crate::error::{Error, Result};
use crate::logval::{sum_logs, SignedLogValue};
use crate::params::{
    validate, ConvergenceClass, EvalResult, Method, SumKind, SumParams, TruncationPolicy, EVEN_INTEGER_TOL,
};
use crate::specfun::{hyp2f1, ln_factorial, rgamma};

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Cramér's constant in `|H_n(y)| <= K e^{y²/2} √(2^n n!)`.
const CRAMER_K: f64 = 1.086_435;

const PNU_MAX_TERMS: usize = 100_000;

/// Terms below this fraction of the largest one are rounding noise.
const PNU_REL_FLOOR: f64 = 1e-18;

/// Which representation of the dual series `expand_p2` uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum P2Route {
    /// Trigonometric form at `ν = -1/2`, Hermite series otherwise.
    Auto,
    /// Hermite series for every order (needs `x < 1`).
    Hermite,
    /// Trigonometric form; only valid at `ν = -1/2`.
    Trigonometric,
}

/// `P_ν(x, χ)` together with the log of its largest term, which sets the
/// rounding error of the alternating sum.
fn p_nu_with_scale(nu: f64, x: f64, chi: f64) -> Result<(SignedLogValue, f64)> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::domain(format!("P_nu series needs 0 <= x < 1, got {x}")));
    }
    if !(chi >= 0.0) || !chi.is_finite() {
        return Err(Error::domain(format!("P_nu series needs chi >= 0, got {chi}")));
    }
    check_order(nu)?;
    if x == 0.0 {
        return Ok((SignedLogValue::ONE, 0.0));
    }
    let y = chi.sqrt();
    let log_x2_64 = 2.0 * x.ln() - 64f64.ln();
    let log_tail_factor = -(-x * x).ln_1p();
    // Hermite recurrence state (H_{m-1}, H_m) scaled by e^{-log_scale}
    let (mut h_prev, mut h_cur, mut m, mut log_scale) = (0.0f64, 1.0f64, 0usize, 0.0f64);
    let mut terms = Vec::new();
    let mut log_poch = 0.0;
    let mut poch_sign = 1i8;
    let mut max_log = f64::NEG_INFINITY;
    let mut prev_bound = f64::INFINITY;
    for r in 0..PNU_MAX_TERMS {
        if r > 0 {
            let factor = 1.0 + nu + (r - 1) as f64;
            log_poch += factor.abs().ln();
            if factor < 0.0 {
                poch_sign = -poch_sign;
            }
            // advance H to degree 4r
            for _ in 0..4 {
                let next = 2.0 * y * h_cur - 2.0 * m as f64 * h_prev;
                h_prev = h_cur;
                h_cur = next;
                m += 1;
                if h_cur.abs() > 1e200 {
                    h_prev *= 1e-200;
                    h_cur *= 1e-200;
                    log_scale += 200.0 * std::f64::consts::LN_10;
                }
            }
        }
        let rf = r as f64;
        let sign = if r % 2 == 0 { 1 } else { -1 } * poch_sign;
        let h = SignedLogValue::from_f64(h_cur).times_exp(log_scale);
        let t = if h.is_zero() {
            SignedLogValue::ZERO
        } else {
            SignedLogValue::new(sign * h.sign, h.log_mag + rf * log_x2_64 - log_poch - ln_factorial(r))
        };
        if !t.is_zero() {
            max_log = max_log.max(t.log_mag);
        }
        terms.push(t);
        let log_bound = CRAMER_K.ln() + chi / 2.0 + 0.5 * (4.0 * rf * LN_2 + ln_factorial(4 * r)) + rf * log_x2_64
            - log_poch
            - ln_factorial(r);
        if r > 0 && log_bound < prev_bound && log_bound + log_tail_factor < PNU_REL_FLOOR.ln() + max_log {
            return Ok((sum_logs(&terms), max_log));
        }
        prev_bound = log_bound;
    }
    Err(Error::NonConvergence { what: "P_nu series", terms: PNU_MAX_TERMS })
}

/// `P_ν(x, χ) = Σ_r H_{4r}(√χ) (-x²/64)^r / ((1+ν)_r r!)` in sign/log form.
pub fn p_nu_series_log(nu: f64, x: f64, chi: f64) -> Result<SignedLogValue> {
    Ok(p_nu_with_scale(nu, x, chi)?.0)
}

pub fn p_nu_series(nu: f64, x: f64, chi: f64) -> Result<f64> {
    p_nu_series_log(nu, x, chi)?.to_f64()
}

/// `((1/2)√(π/a) ₂F₁(1/4,3/4;1+ν;-x²) - 1/2)/Γ(1+ν)` and its magnitude scale.
pub(crate) fn p2_algebraic(nu: f64, a: f64, x: f64) -> Result<(f64, f64)> {
    let lead = 0.5 * (PI / a).sqrt() * hyp2f1(0.25, 0.75, 1.0 + nu, -x * x)?;
    let scale = rgamma(1.0 + nu);
    Ok((scale * (lead - 0.5), scale.abs() * (lead.abs() + 0.5)))
}

/// `Σ_n e^{-χ_n/(1+x²)} f(χ_n x/(1+x²) - φ/2)` with `χ_n = π²n²/a`, until the
/// envelope drops below `abs_tol`. Returns `(sum, terms, first omitted envelope)`.
fn trig_dual_sum(a: f64, x: f64, f: fn(f64) -> f64, abs_tol: f64) -> (f64, usize, f64) {
    let w = 1.0 + x * x;
    let half_phi = x.atan() / 2.0;
    let mut sum = 0.0;
    let mut n = 1usize;
    loop {
        let chi = PI * PI * (n * n) as f64 / a;
        let envelope = (-chi / w).exp();
        if envelope < abs_tol || envelope == 0.0 {
            return (sum, n - 1, envelope);
        }
        sum += envelope * f(chi * x / w - half_phi);
        n += 1;
    }
}

fn require_p2(params: &SumParams) -> Result<()> {
    if (params.p - 2.0).abs() > EVEN_INTEGER_TOL {
        return Err(Error::domain(format!("p = 2 expansion called with p = {}", params.p)));
    }
    Ok(())
}

/// Exponentially small `p = 2` expansion of the `J` sum.
pub fn expand_p2(params: &SumParams, policy: &TruncationPolicy) -> Result<EvalResult> {
    expand_p2_with(params, policy, P2Route::Auto)
}

pub fn expand_p2_with(params: &SumParams, policy: &TruncationPolicy, route: P2Route) -> Result<EvalResult> {
    let params = validate(*params)?;
    policy.check()?;
    if !(params.kind == SumKind::S || (params.kind == SumKind::Smu && params.mu() == 0.0)) {
        return Err(Error::domain("expand_p2 handles kind S"));
    }
    require_p2(&params)?;
    check_order(params.nu)?;
    let SumParams { nu, a, x, .. } = params;
    let half_order = nu == -0.5;
    let trigonometric = match route {
        P2Route::Auto => half_order,
        P2Route::Hermite => false,
        P2Route::Trigonometric if half_order => true,
        P2Route::Trigonometric => {
            return Err(Error::domain("trigonometric p = 2 form exists only for nu = -1/2"));
        }
    };
    let root = (PI / a).sqrt();
    if trigonometric {
        let w4 = (1.0 + x * x).powf(0.25);
        let half_phi = x.atan() / 2.0;
        let algebraic = (0.5 * root * half_phi.cos() / w4 - 0.5) / SQRT_PI;
        let prefactor = root / (w4 * SQRT_PI);
        let abs_tol = policy.tol * algebraic.abs().max(f64::MIN_POSITIVE) / prefactor;
        let (dual, terms, omitted) = trig_dual_sum(a, x, f64::cos, abs_tol);
        let value = algebraic + prefactor * dual;
        let rounding = ROUNDING_FACTOR * ((0.5 * root / w4 + 0.5) / SQRT_PI + prefactor * dual.abs());
        return Ok(EvalResult {
            value,
            error_estimate: prefactor * omitted * 2.0 + rounding,
            terms_used: terms,
            method: Method::Expansion,
            convergence: ConvergenceClass::ExponentiallySmall,
            certified: false,
        });
    }
    if x >= 1.0 {
        return Err(Error::domain(format!("general-order p = 2 expansion needs x < 1, got x = {x}")));
    }
    let (algebraic, alg_scale) = p2_algebraic(nu, a, x)?;
    let prefactor = rgamma(1.0 + nu) * root;
    let w = 1.0 + x * x;
    let mut dual = 0.0;
    let mut rounding = ROUNDING_FACTOR * alg_scale;
    let mut n = 1usize;
    let omitted = loop {
        let chi = PI * PI * (n * n) as f64 / a;
        let envelope = (-chi / w).exp();
        let value = algebraic + prefactor * dual;
        if prefactor.abs() * envelope < policy.tol * value.abs() || envelope == 0.0 {
            break prefactor.abs() * envelope;
        }
        if n > policy.max_terms {
            return Err(Error::NonConvergence { what: "p = 2 dual series", terms: n });
        }
        let (p_nu, max_log) = p_nu_with_scale(nu, x, chi)?;
        let q = p_nu.times_exp(-chi).to_f64()?;
        dual += q;
        rounding += prefactor.abs() * ROUNDING_FACTOR * (max_log - chi).exp() * 4.0;
        n += 1;
    };
    Ok(EvalResult {
        value: algebraic + prefactor * dual,
        error_estimate: 2.0 * omitted + rounding,
        terms_used: n - 1,
        method: Method::Expansion,
        convergence: ConvergenceClass::ExponentiallySmall,
        certified: false,
    })
}

/// `π^{-1/2} Σ_{n>=1} e^{-an²} sin(an²x)` through its dual series.
pub fn closed_form_sin_p2(a: f64, x: f64) -> Result<EvalResult> {
    if !(a > 0.0) || !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("closed form needs a > 0 and x >= 0, got a = {a}, x = {x}")));
    }
    let root = (PI / a).sqrt();
    let w4 = (1.0 + x * x).powf(0.25);
    let half_phi = x.atan() / 2.0;
    let algebraic = 0.5 * root * half_phi.sin() / w4 / SQRT_PI;
    let prefactor = root / (w4 * SQRT_PI);
    let abs_tol = 1e-17 * (0.5 * root / w4 / SQRT_PI);
    let (dual, terms, omitted) = trig_dual_sum(a, x, f64::sin, abs_tol);
    let value = algebraic - prefactor * dual;
    let rounding = ROUNDING_FACTOR * (algebraic.abs() + prefactor * dual.abs());
    Ok(EvalResult {
        value,
        error_estimate: prefactor * omitted * 2.0 + rounding,
        terms_used: terms,
        method: Method::ClosedForm,
        convergence: ConvergenceClass::ExponentiallySmall,
        certified: false,
    })
}
