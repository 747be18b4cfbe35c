use thiserror::Error;

/// Critical inverse-square coupling in dimensionless units (g₂ = mα₂/ℏ²).
pub const CRITICAL_COUPLING: f64 = -0.125;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at z = {0}")]
    GammaPole(f64),

    #[error("Kummer series did not converge for a = {a}, b = {b}, y = {y} within {iterations} terms")]
    SeriesNonConvergence {
        a: f64,
        b: f64,
        y: f64,
        iterations: usize,
    },

    #[error("supercritical inverse-square coupling g = {g}: bound states require g > α_c = -1/8")]
    Supercritical { g: f64 },

    #[error("inverse-square coupling vanishes at beta = 2; the singularity is not dominant")]
    VanishingCoupling,

    #[error("Coulomb coupling g1 = 0: the pure inverse-square problem has no bound states")]
    DegenerateCoulomb,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parity {parity:+} is not allowed: {reason}")]
    ParityNotAllowed { parity: i8, reason: String },

    #[error("normalization quadrature did not converge (relative disagreement {0:e})")]
    QuadratureNonConvergence(f64),

    #[error("eigensolver failure: {0}")]
    Eigensolver(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
