//! Log-gamma with sign tracking.
//!
//! Positive arguments are shifted upward by the recurrence Γ(z+1) = zΓ(z)
//! until the Stirling series is accurate to well below double precision;
//! negative arguments go through the reflection formula.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// ln|Γ(z)| together with the sign of Γ(z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogGamma {
    pub ln_abs: f64,
    pub sign: f64,
}

impl LogGamma {
    pub fn value(self) -> f64 {
        self.sign * self.ln_abs.exp()
    }
}

// ln √(2π)
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} / (2k (2k-1)) for k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

const STIRLING_MIN: f64 = 15.0;

fn is_nonpositive_integer(z: f64) -> bool {
    z <= 0.0 && z == z.floor()
}

fn stirling(z: f64) -> f64 {
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut pow = inv;
    for c in STIRLING {
        corr += c * pow;
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + corr
}

fn log_gamma_positive(z: f64) -> f64 {
    if z >= STIRLING_MIN {
        return stirling(z);
    }
    // ln Γ(z) = ln Γ(z + k) - ln(z (z+1) ... (z+k-1))
    let mut shifted = z;
    let mut prod = 1.0;
    while shifted < STIRLING_MIN {
        prod *= shifted;
        shifted += 1.0;
    }
    stirling(shifted) - prod.ln()
}

/// ln|Γ(z)| and sign Γ(z). Fails on the poles z = 0, -1, -2, ...
pub fn log_gamma(z: f64) -> Result<LogGamma> {
    if !z.is_finite() {
        return Err(Error::InvalidParameter(format!("log_gamma argument {z}")));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::GammaPole(z));
    }
    if z > 0.0 {
        return Ok(LogGamma {
            ln_abs: log_gamma_positive(z),
            sign: 1.0,
        });
    }
    // Γ(z) Γ(1-z) = π / sin(πz), with Γ(1-z) > 0 for z < 0.
    let frac = z - z.round();
    let sin_pz = (PI * frac).sin() * if (z.round() as i64) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(LogGamma {
        ln_abs: (PI / sin_pz.abs()).ln() - log_gamma_positive(1.0 - z),
        sign: sin_pz.signum(),
    })
}

/// Γ(z) itself; overflows to infinity for z ≳ 171.
pub fn gamma(z: f64) -> Result<f64> {
    log_gamma(z).map(LogGamma::value)
}
