//! Normalized Bessel functions `(z/2)^{-ν} J_ν(z)` and `(z/2)^{-ν} I_ν(z)`.
//!
//! Small and moderate arguments use the power series (summed in
//! double-double, which absorbs the `e^z`-sized cancellation of the
//! alternating `J` series up to the switch point). Large arguments use the
//! Hankel asymptotic expansion truncated at its smallest term.

use std::f64::consts::PI;

use twofloat::TwoFloat;

use super::gamma::{cos_pi, rgamma, sin_pi};
use crate::compensated::dd_div;
use crate::error::{Error, Result};

/// Argument above which the large-`z` expansion is used.
pub const BESSEL_SWITCH: f64 = 25.0;

const SERIES_MAX_TERMS: usize = 10_000;

fn check_args(nu: f64, z: f64) -> Result<()> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::domain(format!("Bessel argument must be finite and >= 0, got {z}")));
    }
    if !nu.is_finite() {
        return Err(Error::domain(format!("Bessel order must be finite, got {nu}")));
    }
    Ok(())
}

/// `Σ_k (sign·z²/4)^k / (Γ(1+ν+k) k!)` in double-double.
fn normalized_series(nu: f64, z: f64, sign: f64) -> Result<f64> {
    let q = TwoFloat::from(z) * z / 4.0 * sign;
    // when 1+ν is a non-positive integer the leading terms vanish
    let mut k0 = 0usize;
    let lead = 1.0 + nu;
    if lead <= 0.0 && lead == lead.floor() {
        k0 = (-lead) as usize + 1;
    }
    let mut term = TwoFloat::from(rgamma(lead + k0 as f64));
    for j in 1..=k0 {
        term = term * q / (j as f64);
    }
    let mut sum = term;
    let mut small_run = 0;
    let mut k = k0;
    loop {
        let kf = k as f64;
        term = dd_div(term * q, (TwoFloat::from(nu) + kf + 1.0) * (kf + 1.0));
        sum += term;
        k += 1;
        let beyond_peak = (k as f64) * (k as f64 + nu) > q.hi().abs();
        if beyond_peak && term.hi().abs() <= 1e-20 * sum.hi().abs().max(f64::MIN_POSITIVE) {
            small_run += 1;
            if small_run >= 2 {
                break;
            }
        } else {
            small_run = 0;
        }
        if term.hi() == 0.0 && beyond_peak {
            break;
        }
        if k > SERIES_MAX_TERMS {
            return Err(Error::NonConvergence { what: "Bessel power series", terms: k });
        }
    }
    Ok(sum.hi() + sum.lo())
}

/// Terms `a_k(ν)/z^k` of the large-argument expansion, truncated at the
/// smallest one past the turning point, and the size of the first omitted term.
fn hankel_terms(nu: f64, z: f64) -> (Vec<f64>, f64) {
    let mu4 = 4.0 * nu * nu;
    let mut terms = vec![1.0];
    let mut term = 1.0f64;
    let mut k = 1usize;
    loop {
        let odd = (2 * k - 1) as f64;
        let next = term * (mu4 - odd * odd) / (8.0 * k as f64 * z);
        if next == 0.0 {
            return (terms, 0.0);
        }
        if (k as f64) > nu.abs() && next.abs() >= term.abs() {
            return (terms, next.abs());
        }
        terms.push(next);
        if next.abs() < 1e-18 {
            return (terms, next.abs());
        }
        term = next;
        k += 1;
        if k > 200 {
            return (terms, term.abs());
        }
    }
}

/// Relative accuracy below which the large-argument expansion is accepted.
const HANKEL_ACCEPT: f64 = 1e-16;

/// Largest argument at which the double-double `J` series is still accurate.
const SERIES_J_LIMIT: f64 = 36.0;

/// `J_ν(z)` from the Hankel expansion.
fn bessel_j_hankel(nu: f64, z: f64) -> f64 {
    let (terms, _) = hankel_terms(nu, z);
    let (mut p, mut q) = (0.0, 0.0);
    for (k, t) in terms.iter().enumerate() {
        // a_k / z^k with signs (-1)^{k/2} (even k into P) and (-1)^{(k-1)/2} (odd k into Q)
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * t;
        } else {
            q += sign * t;
        }
    }
    // ω = z - (ν/2 + 1/4)π, expanded to avoid forming z - θ in floating point
    let theta = nu / 2.0 + 0.25;
    let (sz, cz) = z.sin_cos();
    let (ct, st) = (cos_pi(theta), sin_pi(theta));
    let cos_w = cz * ct + sz * st;
    let sin_w = sz * ct - cz * st;
    (2.0 / (PI * z)).sqrt() * (p * cos_w - q * sin_w)
}

/// `e^{-z} I_ν(z)` from the large-argument expansion.
fn bessel_i_scaled_hankel(nu: f64, z: f64) -> f64 {
    let (terms, _) = hankel_terms(nu, z);
    let mut s = 0.0;
    for (k, t) in terms.iter().enumerate() {
        s += if k % 2 == 0 { *t } else { -*t };
    }
    s / (2.0 * PI * z).sqrt()
}

fn use_hankel(nu: f64, z: f64) -> bool {
    z > BESSEL_SWITCH && hankel_terms(nu, z).1 < HANKEL_ACCEPT
}

/// `(z/2)^{-ν} J_ν(z)`; equals `1/Γ(1+ν)` at `z = 0`.
pub fn bessel_j_norm(nu: f64, z: f64) -> Result<f64> {
    check_args(nu, z)?;
    if z == 0.0 {
        return Ok(rgamma(1.0 + nu));
    }
    if use_hankel(nu, z) {
        let j = bessel_j_hankel(nu, z);
        return Ok(j * (-nu * (z / 2.0).ln()).exp());
    }
    if z > SERIES_J_LIMIT {
        return Err(Error::NonConvergence { what: "Bessel J (large order and argument)", terms: 0 });
    }
    normalized_series(nu, z, -1.0)
}

/// Power-series branch of [`bessel_j_norm`], exposed for continuity checks.
pub fn bessel_j_norm_series(nu: f64, z: f64) -> Result<f64> {
    check_args(nu, z)?;
    normalized_series(nu, z, -1.0)
}

/// Large-argument branch of [`bessel_j_norm`], exposed for continuity checks.
pub fn bessel_j_norm_asymptotic(nu: f64, z: f64) -> Result<f64> {
    check_args(nu, z)?;
    if z == 0.0 {
        return Err(Error::domain("asymptotic Bessel branch needs z > 0"));
    }
    Ok(bessel_j_hankel(nu, z) * (-nu * (z / 2.0).ln()).exp())
}

/// `e^{-z} (z/2)^{-ν} I_ν(z)`, finite for every `z >= 0`.
pub fn bessel_i_norm_scaled(nu: f64, z: f64) -> Result<f64> {
    check_args(nu, z)?;
    if z == 0.0 {
        return Ok(rgamma(1.0 + nu));
    }
    if use_hankel(nu, z) {
        return Ok(bessel_i_scaled_hankel(nu, z) * (-nu * (z / 2.0).ln()).exp());
    }
    Ok(normalized_series(nu, z, 1.0)? * (-z).exp())
}

/// `(z/2)^{-ν} I_ν(z)`.
pub fn bessel_i_norm(nu: f64, z: f64) -> Result<f64> {
    let scaled = bessel_i_norm_scaled(nu, z)?;
    if z > 700.0 {
        let log = scaled.abs().ln() + z;
        if log > crate::logval::LOG_MAX {
            return Err(Error::Overflow(format!("I_norm({nu}, {z})")));
        }
        return Ok(scaled.signum() * log.exp());
    }
    Ok(scaled * z.exp())
}
