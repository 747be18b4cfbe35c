//! Generalized Gauss–Laguerre quadrature for ∫₀^∞ u^α e^{-u} f(u) du, and a
//! composite Simpson rule used as an independent check.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::specfun::gamma::log_gamma;
use crate::tridiag::SymTridiagonal;

#[derive(Debug, Clone)]
pub struct GaussLaguerre {
    pub alpha: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLaguerre {
    /// Builds the `n`-point rule with nodes from the Jacobi matrix
    /// (diagonal 2k+α+1, off-diagonal √(k(k+α))) and weights from the
    /// orthonormal-polynomial sums 1/Σ p_k(x_i)².
    pub fn new(n: usize, alpha: f64) -> Result<Self> {
        if n == 0 || !(alpha > -1.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter(format!("Gauss-Laguerre rule n = {n}, alpha = {alpha}")));
        }
        let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
        let off: Vec<f64> = (1..n).map(|k| (k as f64 * (k as f64 + alpha)).sqrt()).collect();
        let jacobi = SymTridiagonal::new(diag.clone(), off.clone())?;
        let nodes = jacobi.lowest_eigenvalues(n)?;

        let ln_mu0 = log_gamma(alpha + 1.0)?.ln_abs;
        let weights = nodes
            .iter()
            .map(|&x| {
                // p_0 = 1 (scaled); track a running log scale to avoid overflow.
                let mut prev = 0.0;
                let mut cur = 1.0;
                let mut ln_scale = 0.0;
                let mut sum = 1.0;
                for k in 0..n - 1 {
                    let b_prev = if k == 0 { 0.0 } else { off[k - 1] };
                    let next = ((x - diag[k]) * cur - b_prev * prev) / off[k];
                    prev = cur;
                    cur = next;
                    sum += cur * cur;
                    if cur.abs() > 1e100 {
                        prev *= 1e-100;
                        cur *= 1e-100;
                        sum *= 1e-200;
                        ln_scale += 200.0 * std::f64::consts::LN_10;
                    }
                }
                (ln_mu0 - sum.ln() - ln_scale).exp()
            })
            .collect();
        Ok(GaussLaguerre { alpha, nodes, weights })
    }

    /// ∫₀^∞ u^α e^{-u} f(u) du.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w > 0.0)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Shared rule for the given order and weight exponent.
pub fn gauss_laguerre(n: usize, alpha: f64) -> Result<Arc<GaussLaguerre>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u64), Arc<GaussLaguerre>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (n, alpha.to_bits());
    if let Some(rule) = cache.lock().expect("quadrature cache poisoned").get(&key) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(GaussLaguerre::new(n, alpha)?);
    cache
        .lock()
        .expect("quadrature cache poisoned")
        .insert(key, Arc::clone(&rule));
    Ok(rule)
}

/// Composite Simpson rule on [a, b] with `intervals` (rounded up to even) subintervals.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, intervals: usize) -> f64 {
    let n = (intervals.max(2) + 1) & !1;
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + i as f64 * h);
    }
    sum * h / 3.0
}
