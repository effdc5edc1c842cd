use std::f64::consts::{LN_2, PI};

use twofloat::TwoFloat;

use super::gamma::{gamma, log_gamma, sin_pi, GAMMA_MAX_ARG};
use crate::compensated::dd_div;
use crate::error::{Error, Result};
use crate::logval::SignedLogValue;

// Borwein's acceleration of the alternating eta series; error ~ 3/(3+√8)^n.
const BORWEIN_N: usize = 32;

fn eta_borwein(s: f64) -> f64 {
    let n = BORWEIN_N;
    let fnn = n as f64;
    // d_k = Σ_{i<=k} n (n+i-1)! 4^i / ((n-i)! (2i)!), kept in double-double
    let mut d = [TwoFloat::from(0.0); BORWEIN_N + 1];
    let mut term = TwoFloat::from(1.0);
    let mut acc = term;
    d[0] = acc;
    for (i, slot) in d.iter_mut().enumerate().take(n + 1).skip(1) {
        let fi = i as f64;
        term = term * (4.0 * (fnn + fi - 1.0) * (fnn - fi + 1.0)) / ((2.0 * fi - 1.0) * (2.0 * fi));
        acc += term;
        *slot = acc;
    }
    let dn = d[n];
    let mut sum = TwoFloat::from(0.0);
    for (k, dk) in d.iter().take(n).enumerate() {
        let w = (*dk - dn) * ((k + 1) as f64).powf(-s);
        if k % 2 == 0 {
            sum += w;
        } else {
            sum -= w;
        }
    }
    let eta = dd_div(-sum, dn);
    eta.hi() + eta.lo()
}

/// Riemann zeta function on the real line.
pub fn zeta(s: f64) -> Result<f64> {
    if s.is_nan() {
        return Err(Error::domain("zeta of NaN"));
    }
    if s == 1.0 {
        return Err(Error::Pole(1.0));
    }
    if s == 0.0 {
        return Ok(-0.5);
    }
    if s > 60.0 {
        return Ok(1.0 + 2f64.powf(-s) + 3f64.powf(-s));
    }
    if s > 0.0 {
        // ζ(s) = η(s) / (1 - 2^{1-s})
        let denom = -((1.0 - s) * LN_2).exp_m1();
        return Ok(eta_borwein(s) / denom);
    }
    // functional equation ζ(s) = 2^s π^{s-1} ζ(1-s) Γ(1-s) sin(πs/2)
    let sine = sin_pi(s / 2.0);
    if sine == 0.0 {
        return Ok(0.0);
    }
    let reflected = zeta(1.0 - s)?;
    if 1.0 - s < GAMMA_MAX_ARG - 1.0 {
        let pre = (s * LN_2 + (s - 1.0) * PI.ln()).exp() * gamma(1.0 - s)?;
        Ok(pre * reflected * sine)
    } else {
        let lg = log_gamma(1.0 - s)?.log_mag;
        let v = SignedLogValue::new(
            (sine.signum() * reflected.signum()) as i8,
            s * LN_2 + (s - 1.0) * PI.ln() + lg + reflected.abs().ln() + sine.abs().ln(),
        );
        v.to_f64()
    }
}
