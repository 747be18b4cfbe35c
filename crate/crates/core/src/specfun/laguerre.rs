//! Generalized Laguerre polynomials L_n^(α)(y).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreParams {
    pub n: usize,
    pub alpha: f64,
    pub y: f64,
}

impl LaguerreParams {
    pub fn new(n: usize, alpha: f64, y: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > -1.0) {
            return Err(Error::InvalidParameter(format!("Laguerre alpha = {alpha} must exceed -1")));
        }
        if !(y.is_finite() && y >= 0.0) {
            return Err(Error::InvalidParameter(format!("Laguerre argument y = {y} must be >= 0")));
        }
        Ok(LaguerreParams { n, alpha, y })
    }
}

/// Evaluates L_n^(α)(y) by the upward three-term recurrence
/// (k+1) L_{k+1} = (2k+1+α-y) L_k - (k+α) L_{k-1}.
pub fn laguerre(p: LaguerreParams) -> f64 {
    laguerre_unchecked(p.n, p.alpha, p.y)
}

pub(crate) fn laguerre_unchecked(n: usize, alpha: f64, y: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - y;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - y) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized binomial coefficient C(n + α, n) = Π_{k=1..n} (α + k)/k.
pub fn binomial_shifted(n: usize, alpha: f64) -> f64 {
    (1..=n).map(|k| (alpha + k as f64) / k as f64).product()
}
