//! Large-degree behaviour of the terminating hypergeometric polynomials
//! `₂F₁(-k, -k-1/2; 1+ν; ∓x²)` that carry the residue series, and the
//! envelope of their complex-parameter continuation.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::specfun::log_gamma_signed;

/// Estimates whose oscillatory factor is below this are not ratio-tested.
pub const NODE_THRESHOLD: f64 = 0.1;

const COMPLEX_SERIES_MAX_TERMS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticCheck {
    pub k: usize,
    /// Imaginary offset of the parameters; zero for the real-degree checks.
    pub t: f64,
    pub exact: f64,
    pub estimate: f64,
    /// `exact / estimate`, NaN when the estimate vanishes.
    pub ratio: f64,
    /// The oscillatory factor is small here; excluded from statistics.
    pub near_node: bool,
}

impl AsymptoticCheck {
    fn new(k: usize, t: f64, exact: f64, estimate: f64, near_node: bool) -> Self {
        let ratio = if estimate != 0.0 { exact / estimate } else { f64::NAN };
        Self { k, t, exact, estimate, ratio, near_node }
    }
}

fn log_prefactor(k: usize, nu: f64, x: f64) -> Result<f64> {
    Ok(log_gamma_signed(1.0 + nu)?.log_mag - 0.5 * PI.ln() - (nu + 0.5) * (x * k as f64).ln())
}

/// `sin((2k+ν+3/2)φ - πν/2 + π/4)`. The phase is carried in double-double;
/// near a node an f64 phase error is amplified by `1/|sin|`.
fn neg_oscillation(k: usize, nu: f64, x: f64) -> f64 {
    let phi = TwoFloat::from(x).atan();
    let phase = TwoFloat::from(2.0 * k as f64 + nu + 1.5) * phi - twofloat::consts::FRAC_PI_2 * nu
        + twofloat::consts::FRAC_PI_4;
    phase.sin().into()
}

/// Leading large-`k` form of `₂F₁(-k, -k-1/2; 1+ν; -x²)`:
/// `Γ(1+ν)/√π (1+x²)^{k+ν/2+3/4} (xk)^{-ν-1/2} sin((2k+ν+3/2)φ - πν/2 + π/4)`.
pub fn hyp_largek_neg_estimate(k: usize, nu: f64, x: f64) -> Result<f64> {
    if k == 0 || !(x > 0.0) {
        return Err(Error::domain(format!("estimate needs k >= 1 and x > 0, got k = {k}, x = {x}")));
    }
    let sign = log_gamma_signed(1.0 + nu)?.sign as f64;
    let log_mag = log_prefactor(k, nu, x)? + (k as f64 + nu / 2.0 + 0.75) * (x * x).ln_1p();
    Ok(sign * log_mag.exp() * neg_oscillation(k, nu, x))
}

/// Leading large-`k` form of `₂F₁(-k, -k-1/2; 1+ν; x²)` for `0 < x < 1`:
/// `Γ(1+ν)/(2√π) (1+x)^{2k+ν+3/2} (xk)^{-ν-1/2}`.
pub fn hyp_largek_pos_estimate(k: usize, nu: f64, x: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::domain("estimate needs k >= 1"));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!("x = {x} out of (0,1)")));
    }
    let sign = log_gamma_signed(1.0 + nu)?.sign as f64;
    let log_mag = log_prefactor(k, nu, x)? - 2f64.ln() + (2.0 * k as f64 + nu + 1.5) * x.ln_1p();
    Ok(sign * log_mag.exp())
}

fn rational(v: f64) -> Result<BigRational> {
    BigRational::from_float(v).ok_or_else(|| Error::domain(format!("{v} has no rational value")))
}

/// `₂F₁(-k, -k-1/2; 1+ν; z)` summed in exact rational arithmetic; the
/// polynomial cancels through many orders of magnitude at large `k`.
pub fn terminating_hyp_exact(k: usize, nu: f64, z: f64) -> Result<f64> {
    let z = rational(z)?;
    let c = rational(1.0 + nu)?;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let a = -BigRational::from_integer(BigInt::from(k));
    let b = a.clone() - half;
    let mut term = BigRational::from_integer(BigInt::from(1));
    let mut sum = term.clone();
    for j in 0..k {
        let jr = BigRational::from_integer(BigInt::from(j));
        let den = (c.clone() + jr.clone()) * (jr.clone() + BigRational::from_integer(BigInt::from(1)));
        if den.is_zero() {
            return Err(Error::Pole(1.0 + nu));
        }
        term = term * (a.clone() + jr.clone()) * (b.clone() + jr) * z.clone() / den;
        sum += term.clone();
    }
    sum.to_f64().ok_or_else(|| Error::Overflow("terminating polynomial".into()))
}

/// Exact value against the `-x²` estimate at degree `k`.
pub fn largek_check_neg(k: usize, nu: f64, x: f64) -> Result<AsymptoticCheck> {
    let exact = terminating_hyp_exact(k, nu, -x * x)?;
    let estimate = hyp_largek_neg_estimate(k, nu, x)?;
    let near_node = neg_oscillation(k, nu, x).abs() < NODE_THRESHOLD;
    Ok(AsymptoticCheck::new(k, 0.0, exact, estimate, near_node))
}

/// Exact value against the `+x²` estimate at degree `k`.
pub fn largek_check_pos(k: usize, nu: f64, x: f64) -> Result<AsymptoticCheck> {
    let estimate = hyp_largek_pos_estimate(k, nu, x)?;
    let exact = terminating_hyp_exact(k, nu, x * x)?;
    Ok(AsymptoticCheck::new(k, 0.0, exact, estimate, false))
}

/// `₂F₁(a, b; c; z)` for complex `a, b`, real `c` and `z < 0`, through the
/// Pfaff transformation onto `z/(z-1) ∈ (0, 1)`.
fn complex_hyp2f1_negative(a: Complex64, b: Complex64, c: f64, z: f64) -> Result<Complex64> {
    let w = z / (z - 1.0);
    let b2 = Complex64::new(c, 0.0) - b;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut max = 1.0f64;
    for j in 0..COMPLEX_SERIES_MAX_TERMS {
        let jf = j as f64;
        term *= (a + jf) * (b2 + jf) / ((c + jf) * (jf + 1.0)) * w;
        sum += term;
        max = max.max(term.norm());
        if term.norm() < 1e-17 * sum.norm().max(1e-300) && jf > (a.norm() + b2.norm()) {
            // (1-z)^{-a}
            let log_base = (1.0 - z).ln();
            let factor = (-a * log_base).exp();
            return Ok(factor * sum);
        }
    }
    Err(Error::NonConvergence { what: "complex hypergeometric series", terms: COMPLEX_SERIES_MAX_TERMS })
}

/// Shape of the envelope tested against `|₂F₁(-N+it/2, -N+1/2+it/2; 1+ν; -x²)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RemainderEnvelope {
    /// `(1+x²)^N e^{-φt} / (N²+t²/4)^{ν/2+1/4}`.
    SingleSaddle,
    /// `(1+x²)^N cosh(φt) / (N²+t²/4)^{ν/2+1/4}`.
    Symmetric,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RemainderProfile {
    pub checks: Vec<AsymptoticCheck>,
    /// Largest `exact / estimate` over the grid.
    pub constant: f64,
}

/// Ratio of the complex-parameter polynomial continuation to an envelope
/// over a grid in `t`; the reported constant is the grid maximum.
pub fn remainder_bound_profile(
    n: usize,
    nu: f64,
    x: f64,
    t_grid: &[f64],
    envelope: RemainderEnvelope,
) -> Result<RemainderProfile> {
    if n == 0 || !(x > 0.0) {
        return Err(Error::domain(format!("profile needs N >= 1 and x > 0, got N = {n}, x = {x}")));
    }
    let nf = n as f64;
    let phi = x.atan();
    let mut checks = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let a = Complex64::new(-nf, t / 2.0);
        let b = Complex64::new(-nf + 0.5, t / 2.0);
        let exact = complex_hyp2f1_negative(a, b, 1.0 + nu, -x * x)?.norm();
        let angular = match envelope {
            RemainderEnvelope::SingleSaddle => -phi * t,
            RemainderEnvelope::Symmetric => (phi * t).cosh().ln(),
        };
        let log_est = nf * (x * x).ln_1p() + angular - (nu / 2.0 + 0.25) * (nf * nf + t * t / 4.0).ln();
        checks.push(AsymptoticCheck::new(n, t, exact, log_est.exp(), false));
    }
    let constant = checks.iter().map(|c| c.ratio).fold(f64::NEG_INFINITY, f64::max);
    Ok(RemainderProfile { checks, constant })
}
