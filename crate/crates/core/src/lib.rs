//! Bound states of the one-dimensional Schrödinger equation with potentials
//! singular at the origin like g/|ζ|^β (0 < β ≤ 2).
//!
//! All quantities are dimensionless: lengths in Compton wavelengths, energies
//! in units of mc², and the radial equation reads
//! ψ″ = (κ² + 2V(ζ))ψ with V = g₁/ζ + g₂/ζ² for the Kratzer family.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod nodes;
pub mod oracle;
pub mod specfun;
pub mod spectra;
pub mod tridiag;

pub use error::{Error, Result, CRITICAL_COUPLING};
