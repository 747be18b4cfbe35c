//! Symmetric tridiagonal eigenproblems: Sturm-sequence bisection for
//! eigenvalues, inverse iteration for eigenvectors.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
    pivmin: f64,
}

impl SymTridiagonal {
    /// `off[i]` couples rows `i` and `i + 1`.
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Eigensolver("empty matrix".into()));
        }
        if off.len() + 1 != diag.len() {
            return Err(Error::Eigensolver(format!(
                "off-diagonal length {} does not match dimension {}",
                off.len(),
                diag.len()
            )));
        }
        if diag.iter().chain(off.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Eigensolver("non-finite matrix entry".into()));
        }
        let max_off_sq = off.iter().fold(0.0_f64, |m, e| m.max(e * e));
        let pivmin = f64::MIN_POSITIVE * max_off_sq.max(1.0);
        Ok(SymTridiagonal { diag, off, pivmin })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    /// Number of eigenvalues strictly below `x` (negative pivots of the LDLᵀ
    /// factorization of T - xI).
    pub fn sturm_count(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0..self.diag.len() {
            if i > 0 {
                let e = self.off[i - 1];
                q = self.diag[i] - x - e * e / q;
            }
            if q.abs() < self.pivmin {
                q = -self.pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    fn norm_bound(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE)
    }

    /// The `k`-th smallest eigenvalue (0-based) by bisection on the Sturm count.
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        if k >= self.dim() {
            return Err(Error::Eigensolver(format!("index {k} out of range for dimension {}", self.dim())));
        }
        let (glo, ghi) = self.gershgorin();
        let pad = 2.0 * f64::EPSILON * self.norm_bound() + 2.0 * self.pivmin;
        let mut lo = glo - pad;
        let mut hi = ghi + pad;
        for _ in 0..256 {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= 2.0 * f64::EPSILON * (lo.abs().max(hi.abs())) + self.pivmin || mid <= lo || mid >= hi {
                return Ok(mid);
            }
            if self.sturm_count(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    pub fn lowest_eigenvalues(&self, count: usize) -> Result<Vec<f64>> {
        (0..count).map(|k| self.eigenvalue(k)).collect()
    }

    /// Eigenvector for an (accurately computed) eigenvalue by inverse iteration,
    /// normalized to unit Euclidean length.
    pub fn eigenvector(&self, lambda: f64) -> Result<Vec<f64>> {
        let lu = ShiftedLu::factor(self, lambda);
        let n = self.dim();
        // deterministic, non-degenerate start
        let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.5 * ((i as f64) * 0.618_033_988_75).fract()).collect();
        normalize(&mut x)?;
        for _ in 0..3 {
            lu.solve(&mut x);
            normalize(&mut x)?;
        }
        Ok(x)
    }

    /// The `count` lowest eigenpairs, eigenvalues ascending.
    pub fn lowest_eigenpairs(&self, count: usize) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
        let values = self.lowest_eigenvalues(count)?;
        let cluster = 1e-10 * self.norm_bound();
        let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(count);
        for (k, &lambda) in values.iter().enumerate() {
            let mut v = self.eigenvector(lambda)?;
            // re-orthogonalize within clusters of nearly equal eigenvalues
            for j in 0..k {
                if (values[j] - lambda).abs() < cluster {
                    let dot: f64 = v.iter().zip(&vectors[j]).map(|(a, b)| a * b).sum();
                    v.iter_mut().zip(&vectors[j]).for_each(|(a, b)| *a -= dot * b);
                    normalize(&mut v)?;
                }
            }
            vectors.push(v);
        }
        Ok((values, vectors))
    }
}

fn normalize(x: &mut [f64]) -> Result<()> {
    let scale = x.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::Eigensolver("inverse iteration produced a degenerate vector".into()));
    }
    let norm = x.iter().map(|v| (v / scale).powi(2)).sum::<f64>().sqrt() * scale;
    x.iter_mut().for_each(|v| *v /= norm);
    Ok(())
}

/// LU factorization with partial pivoting of T - λI.
struct ShiftedLu {
    lower: Vec<f64>,
    diag: Vec<f64>,
    upper: Vec<f64>,
    upper2: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn factor(t: &SymTridiagonal, shift: f64) -> Self {
        let n = t.dim();
        let mut lower = t.off.clone();
        let mut diag: Vec<f64> = t.diag.iter().map(|d| d - shift).collect();
        let mut upper = t.off.clone();
        let mut upper2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        let tiny = f64::EPSILON * t.norm_bound();

        for i in 0..n.saturating_sub(1) {
            if diag[i].abs() >= lower[i].abs() {
                if diag[i] == 0.0 {
                    diag[i] = tiny;
                }
                let fact = lower[i] / diag[i];
                lower[i] = fact;
                diag[i + 1] -= fact * upper[i];
            } else {
                let fact = diag[i] / lower[i];
                diag[i] = lower[i];
                lower[i] = fact;
                let temp = upper[i];
                upper[i] = diag[i + 1];
                diag[i + 1] = temp - fact * diag[i + 1];
                if i + 2 < n {
                    upper2[i] = upper[i + 1];
                    upper[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }
        if diag[n - 1] == 0.0 {
            diag[n - 1] = tiny;
        }
        ShiftedLu {
            lower,
            diag,
            upper,
            upper2,
            swapped,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = b.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.lower[i] * b[i];
            } else {
                b[i + 1] -= self.lower[i] * b[i];
            }
        }
        b[n - 1] /= self.diag[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.upper[n - 2] * b[n - 1]) / self.diag[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.upper[i] * b[i + 1] - self.upper2[i] * b[i + 2]) / self.diag[i];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn laplacian(n: usize) -> SymTridiagonal {
        SymTridiagonal::new(vec![2.0; n], vec![-1.0; n - 1]).unwrap()
    }

    #[test]
    fn second_difference_spectrum() {
        // eigenvalues 2 - 2cos(kπ/(n+1))
        let n = 50;
        let t = laplacian(n);
        for k in 0..n {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * PI / (n + 1) as f64).cos();
            assert!((t.eigenvalue(k).unwrap() - want).abs() < 1e-13, "k = {k}");
        }
    }

    #[test]
    fn eigenvectors_satisfy_equation() {
        let t = SymTridiagonal::new(
            (0..40).map(|i| (i as f64 * 0.37).sin() * 3.0).collect(),
            (0..39).map(|i| 1.0 + 0.1 * i as f64).collect(),
        )
        .unwrap();
        let (vals, vecs) = t.lowest_eigenpairs(8).unwrap();
        for (lambda, v) in vals.iter().zip(&vecs) {
            let n = v.len();
            let mut resid = 0.0_f64;
            for i in 0..n {
                let mut tv = t.diag[i] * v[i];
                if i > 0 {
                    tv += t.off[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    tv += t.off[i] * v[i + 1];
                }
                resid = resid.max((tv - lambda * v[i]).abs());
            }
            assert!(resid < 1e-12, "residual {resid}");
        }
        for i in 0..vecs.len() {
            for j in 0..vecs.len() {
                let dot: f64 = vecs[i].iter().zip(&vecs[j]).map(|(a, b)| a * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn sturm_count_monotone() {
        let t = laplacian(30);
        let mut last = 0;
        for i in 0..=100 {
            let c = t.sturm_count(-0.5 + 5.0 * i as f64 / 100.0);
            assert!(c >= last);
            last = c;
        }
        assert_eq!(last, 30);
    }

    #[test]
    fn one_by_one() {
        let t = SymTridiagonal::new(vec![3.5], vec![]).unwrap();
        assert!((t.eigenvalue(0).unwrap() - 3.5).abs() < 1e-14);
        assert_eq!(t.eigenvector(3.5).unwrap(), vec![1.0]);
    }

    #[test]
    fn shape_errors() {
        assert!(SymTridiagonal::new(vec![], vec![]).is_err());
        assert!(SymTridiagonal::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(laplacian(4).eigenvalue(4).is_err());
    }
}
