//! Shared domain types: sum parameters, evaluation results, truncation
//! policy and the convergence classification of the residue expansions.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Tolerance used to decide that a floating-point `p` (or `kp`) is an even integer.
pub const EVEN_INTEGER_TOL: f64 = 1e-12;

/// Which of the three sums is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SumKind {
    /// `Σ e^{-an^p} J_ν(an^p x) / (an^p x/2)^ν`
    S,
    /// `Σ e^{-an^p} I_ν(an^p x) / (an^p x/2)^ν`, only for `0 < x < 1`.
    T,
    /// `Σ e^{-an^p} J_ν(an^p x) / (an^p x/2)^{ν-μ}`
    Smu,
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumKind::S => "S",
            SumKind::T => "T",
            SumKind::Smu => "Smu",
        })
    }
}

impl FromStr for SumKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(SumKind::S),
            "T" | "t" => Ok(SumKind::T),
            "Smu" | "smu" | "SMU" => Ok(SumKind::Smu),
            other => Err(Error::domain(format!("unknown sum kind '{other}'"))),
        }
    }
}

/// One sum instance `(ν, p, a, x, μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SumParams {
    pub nu: f64,
    pub p: f64,
    pub a: f64,
    pub x: f64,
    pub mu: Option<f64>,
    pub kind: SumKind,
}

impl SumParams {
    pub fn s(nu: f64, p: f64, a: f64, x: f64) -> Self {
        Self { nu, p, a, x, mu: None, kind: SumKind::S }
    }

    pub fn t(nu: f64, p: f64, a: f64, x: f64) -> Self {
        Self { nu, p, a, x, mu: None, kind: SumKind::T }
    }

    pub fn smu(nu: f64, p: f64, a: f64, x: f64, mu: f64) -> Self {
        Self { nu, p, a, x, mu: Some(mu), kind: SumKind::Smu }
    }

    /// The acute angle `arctan x`.
    pub fn phi(&self) -> f64 {
        self.x.atan()
    }

    /// Shift exponent; zero unless the kind is `Smu`.
    pub fn mu(&self) -> f64 {
        match self.kind {
            SumKind::Smu => self.mu.unwrap_or(0.0),
            _ => 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Direct,
    Expansion,
    ClosedForm,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::Expansion => "expansion",
            Method::ClosedForm => "closed_form",
        })
    }
}

/// Character of the residue series for a parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConvergenceClass {
    Convergent,
    ConditionallyConvergent,
    Asymptotic,
    ExponentiallySmall,
}

impl fmt::Display for ConvergenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConvergenceClass::Convergent => "Convergent",
            ConvergenceClass::ConditionallyConvergent => "ConditionallyConvergent",
            ConvergenceClass::Asymptotic => "Asymptotic",
            ConvergenceClass::ExponentiallySmall => "ExponentiallySmall",
        })
    }
}

/// Outcome of one evaluation.
///
/// For `Direct` the error estimate is a bound on `|value - sum|` (certified
/// when `certified` is set). For an `Asymptotic` expansion it is the
/// magnitude of the first omitted term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub error_estimate: f64,
    pub terms_used: usize,
    pub method: Method,
    pub convergence: ConvergenceClass,
    pub certified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TruncationPolicy {
    /// Relative tolerance.
    pub tol: f64,
    pub max_terms: usize,
    /// Stop divergent series at their smallest term.
    pub optimal_truncation: bool,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self { tol: 1e-12, max_terms: 10_000, optimal_truncation: true }
    }
}

impl TruncationPolicy {
    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        let policy = Self { tol, max_terms, ..Self::default() };
        policy.check()?;
        Ok(policy)
    }

    pub fn with_tol(self, tol: f64) -> Self {
        Self { tol, ..self }
    }

    pub fn with_max_terms(self, max_terms: usize) -> Self {
        Self { max_terms, ..self }
    }

    pub fn check(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(Error::domain(format!("tol = {} must lie in (0, 1)", self.tol)));
        }
        if self.max_terms < 1 {
            return Err(Error::domain("max_terms must be at least 1"));
        }
        Ok(())
    }
}

/// Nearest integer `m` with `|v - 2m| < EVEN_INTEGER_TOL`, if any.
pub fn even_integer(v: f64) -> Option<i64> {
    let m = (v / 2.0).round();
    ((v - 2.0 * m).abs() < EVEN_INTEGER_TOL * v.abs().max(1.0)).then_some(m as i64)
}

pub fn is_even_integer(v: f64) -> bool {
    even_integer(v).is_some()
}

/// True when `v` is within `EVEN_INTEGER_TOL` of an integer.
pub fn is_integer(v: f64) -> bool {
    (v - v.round()).abs() < EVEN_INTEGER_TOL * v.abs().max(1.0)
}

/// Convergence threshold in `a` for the `p = 1` residue series:
/// `2π/√(1+x²)` for `S`/`Smu`, `2π/(1+x)` for `T`.
pub fn p1_threshold(kind: SumKind, x: f64) -> f64 {
    match kind {
        SumKind::T => 2.0 * PI / (1.0 + x),
        _ => 2.0 * PI / (1.0 + x * x).sqrt(),
    }
}

pub fn validate(params: SumParams) -> Result<SumParams> {
    let SumParams { nu, p, a, x, mu, kind } = params;
    for (name, v) in [("nu", nu), ("p", p), ("a", a), ("x", x)] {
        if !v.is_finite() {
            return Err(Error::domain(format!("{name} = {v} is not finite")));
        }
    }
    if p <= 0.0 {
        return Err(Error::domain(format!("p = {p} must be > 0")));
    }
    if a <= 0.0 {
        return Err(Error::domain(format!("a = {a} must be > 0")));
    }
    if x <= 0.0 {
        return Err(Error::domain(format!("x = {x} must be > 0")));
    }
    if kind == SumKind::T && x >= 1.0 {
        return Err(Error::domain(format!("x = {x} out of (0,1), required for kind T")));
    }
    if let Some(m) = mu {
        if !m.is_finite() {
            return Err(Error::domain(format!("mu = {m} is not finite")));
        }
        if kind != SumKind::Smu && m != 0.0 {
            return Err(Error::domain(format!("mu = {m} is only meaningful for kind Smu")));
        }
    }
    Ok(params)
}

pub fn classify_convergence(params: &SumParams) -> ConvergenceClass {
    let p = params.p;
    if is_even_integer(p) {
        return ConvergenceClass::ExponentiallySmall;
    }
    if p < 1.0 {
        return ConvergenceClass::Convergent;
    }
    if p == 1.0 && params.a < p1_threshold(params.kind, params.x) {
        return ConvergenceClass::ConditionallyConvergent;
    }
    ConvergenceClass::Asymptotic
}
