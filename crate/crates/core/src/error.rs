use thiserror::Error;

/// Errors raised by the special-function kernels, the direct summation and
/// the expansions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at s = {0}")]
    Pole(f64),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("no convergence in {what} after {terms} terms")]
    NonConvergence { what: &'static str, terms: usize },

    #[error("p = {0} is an even integer; use the exponentially small (p = 2) expansion")]
    EvenP(f64),

    #[error("expansion diverges: a = {a} is not below the convergence threshold {threshold}")]
    ConvergenceDomain { a: f64, threshold: f64 },

    #[error("mu = {0} produces a double pole at s = 1/p; not supported")]
    DoublePole(f64),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Short machine-readable name, used for the CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::Pole(_) => "PoleError",
            Error::Overflow(_) => "OverflowError",
            Error::NonConvergence { .. } => "NonConvergence",
            Error::EvenP(_) => "EvenPError",
            Error::ConvergenceDomain { .. } => "ConvergenceDomainError",
            Error::DoublePole(_) => "DoublePoleError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
