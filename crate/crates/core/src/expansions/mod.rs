//! Small-`a` expansions obtained from the Mellin–Barnes representation of
//! the sums: the general residue series, the convergent `p = 1` forms, the
//! exponentially small `p = 2` forms and the shifted-power variant.

mod p1;
mod p2;
mod smu;
mod residues;

pub use p1::{closed_form_s_half_p1, closed_form_t_half_p1, expand_p1, expand_t_p1};
pub use p2::{closed_form_sin_p2, expand_p2, expand_p2_with, p_nu_series, p_nu_series_log, P2Route};
pub use smu::{expand_smu_p2, smu_p2_algebraic, smu_residue_term};
pub use residues::{expand_t_residues, expand_residues, residue_term};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::logval::SignedLogValue;
use crate::params::{is_integer, TruncationPolicy};

/// Rounding allowance per unit of accumulated magnitude.
pub(crate) const ROUNDING_FACTOR: f64 = 8.0 * f64::EPSILON;

/// One residue term, kept in sign/log form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpansionTermLog {
    pub k: usize,
    pub term: SignedLogValue,
}

/// How a residue series is cut off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum SeriesMode {
    /// Convergent; `ratio` is the asymptotic term ratio when known.
    Convergent { ratio: Option<f64> },
    /// Divergent; stopped at its smallest term when the policy asks for it.
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct SeriesOutcome {
    pub sum: f64,
    pub error: f64,
    pub terms: usize,
    pub abs_sum: f64,
}

/// Sums `term(k)` for `k = first, first+1, ...` with the stopping rule of
/// `mode`. `base` is the part of the value already known, used to turn the
/// relative tolerance into an absolute one. Zero terms never stop the sum.
pub(crate) fn sum_series<F>(
    first: usize,
    mut term: F,
    base: f64,
    mode: SeriesMode,
    policy: &TruncationPolicy,
) -> Result<SeriesOutcome>
where
    F: FnMut(usize) -> Result<SignedLogValue>,
{
    let mut acc = crate::compensated::CompensatedSum::default();
    let mut prev_log: Option<f64> = None;
    let mut small_run = 0usize;
    let mut last_logs = [f64::NEG_INFINITY; 2];
    for (count, k) in (first..).enumerate() {
        if count >= policy.max_terms {
            return Err(Error::NonConvergence { what: "residue series", terms: count });
        }
        let t = term(k)?;
        if t.is_zero() {
            continue;
        }
        let target = policy.tol * (base + acc.value()).abs();
        let log_target = target.ln();
        match mode {
            SeriesMode::Asymptotic => {
                let growing = prev_log.is_some_and(|p| t.log_mag >= p);
                if (policy.optimal_truncation && growing) || t.log_mag < log_target {
                    let error = t.abs().to_f64().unwrap_or(f64::INFINITY);
                    return Ok(SeriesOutcome { sum: acc.value(), error, terms: count, abs_sum: acc.abs_sum() });
                }
                prev_log = Some(t.log_mag);
                acc.add(t.to_f64()?);
            }
            SeriesMode::Convergent { ratio } => {
                acc.add(t.to_f64()?);
                last_logs = [last_logs[1], t.log_mag];
                if t.log_mag < log_target {
                    small_run += 1;
                } else {
                    small_run = 0;
                }
                if small_run >= 2 {
                    let last = last_logs[0].max(last_logs[1]).exp();
                    let error = match ratio {
                        Some(r) if r < 1.0 => last * r / (1.0 - r),
                        _ => last,
                    };
                    return Ok(SeriesOutcome {
                        sum: acc.value(),
                        error,
                        terms: count + 1,
                        abs_sum: acc.abs_sum(),
                    });
                }
            }
        }
    }
    unreachable!("the residue index range is unbounded")
}

/// Integer `ν <= -1` makes `1/Γ(1+ν)` vanish while the hypergeometric
/// factors have a zero lower parameter; such orders are refused.
pub(crate) fn check_order(nu: f64) -> Result<()> {
    if nu <= -1.0 && is_integer(nu) {
        return Err(Error::domain(format!("expansions need nu not a negative integer, got {nu}")));
    }
    Ok(())
}
