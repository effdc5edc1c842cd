//! Double-precision special-function kernels on the real line.

pub mod bessel;
pub mod gamma;
pub mod hermite;
pub mod hyp2f1;
pub mod zeta;

pub use bessel::{bessel_i_norm, bessel_i_norm_scaled, bessel_j_norm};
pub use gamma::{gamma, ln_factorial, log_gamma, log_gamma_signed, rgamma};
pub use hermite::{hermite, kummer_1f1, kummer_1f1_log};
pub use hyp2f1::{hyp2f1, hyp2f1_log, Hyp2F1Args, hyp2f1_pfaff, hyp2f1_series};
pub use zeta::zeta;
