//! Special-function kernel: log-gamma, Kummer's confluent hypergeometric
//! function, generalized Laguerre polynomials, and Gauss–Laguerre quadrature.
//!
//! All functions are pure and real-valued.

pub mod gamma;
pub mod kummer;
pub mod laguerre;
pub mod quadrature;

pub use gamma::{gamma, log_gamma, LogGamma};
pub use kummer::{kummer_asymptotic_dominant, kummer_m, KummerParams};
pub use laguerre::{binomial_shifted, laguerre, LaguerreParams};
pub use quadrature::{gauss_laguerre, simpson, GaussLaguerre};
