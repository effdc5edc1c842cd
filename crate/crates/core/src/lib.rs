//! Sums of exponentially damped Bessel functions over `n^p` lattices,
//! evaluated term by term with a certified tail bound and through their
//! small-`a` expansions.

pub mod asympt;
pub mod compensated;
pub mod directsum;
pub mod error;
pub mod eval;
pub mod expansions;
pub mod logval;
pub mod par;
pub mod params;
pub mod specfun;
pub mod sweep;

pub use error::{Error, Result};
pub use eval::{compare, evaluate, expand, Comparison, MethodChoice};
pub use par::Execution;
pub use params::{ConvergenceClass, EvalResult, Method, SumKind, SumParams, TruncationPolicy};
