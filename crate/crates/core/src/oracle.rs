//! Finite-difference eigensolver for the half-line problem, independent of
//! the closed-form spectra.
//!
//! The Hamiltonian -½ d²/dζ² + V(ζ) is discretized on a uniform grid over
//! [ζ_min, ζ_max] with the three-point second difference and ψ = 0 at the
//! outer cutoff. At the inner cutoff either ψ = 0 (every branch with s > 0)
//! or a zero-slope condition (the regular s = 0 branch of β < 1) is imposed.
//! For an attractive inverse-square term the Dirichlet condition admixes the
//! subdominant ζ^(1-s) solution at relative size (κh)^(2s-1), which decays
//! very slowly as s → 1/2; the power-law variant removes it.
//! The result is a symmetric tridiagonal matrix whose lowest eigenpairs are
//! extracted by Sturm bisection and inverse iteration.

use serde::Serialize;

use crate::analysis::{inverse_square_exponent, PotentialSpec};
use crate::error::{Error, Result, CRITICAL_COUPLING};
use crate::nodes::count_sign_changes;
use crate::tridiag::SymTridiagonal;

pub const DEFAULT_NUM_POINTS: usize = 20_000;
const INNER_CUTOFF_FACTOR: f64 = 1e-6;
const OUTER_CUTOFF_FACTOR: f64 = 40.0;
/// Relative shift of the ground energy under inner-cutoff refinement above
/// which a fall to the centre is suspected.
pub const FALL_TO_CENTER_THRESHOLD: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerBoundary {
    #[default]
    Dirichlet,
    /// ψ′ = 0 half a cell inside the first node.
    Neumann,
    /// Ghost value u₀ = r u₁ taken from the discrete near-origin solution
    /// that behaves as ζ^s with no ζ^(1-s) part. Applies to β = 2 with
    /// -1/8 < g < 0 and reduces to Dirichlet otherwise.
    PowerLaw,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridConfig {
    pub zeta_min: f64,
    pub zeta_max: f64,
    pub num_points: usize,
    pub num_eigenvalues: usize,
    pub inner: InnerBoundary,
}

impl GridConfig {
    pub fn new(zeta_min: f64, zeta_max: f64, num_points: usize, num_eigenvalues: usize) -> Result<Self> {
        let cfg = GridConfig {
            zeta_min,
            zeta_max,
            num_points,
            num_eigenvalues,
            inner: InnerBoundary::Dirichlet,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_inner(self, inner: InnerBoundary) -> Self {
        GridConfig { inner, ..self }
    }

    fn validate(&self) -> Result<()> {
        if !(self.zeta_min > 0.0 && self.zeta_max > self.zeta_min && self.zeta_max.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "grid cutoffs must satisfy 0 < zeta_min < zeta_max (got {} and {})",
                self.zeta_min, self.zeta_max
            )));
        }
        if self.num_points < 100 {
            return Err(Error::InvalidParameter(format!("num_points = {} < 100", self.num_points)));
        }
        if self.num_eigenvalues == 0 || self.num_eigenvalues > self.num_points - 2 {
            return Err(Error::InvalidParameter(format!(
                "num_eigenvalues = {} outside 1..={}",
                self.num_eigenvalues,
                self.num_points - 2
            )));
        }
        Ok(())
    }

    /// Default grid for a potential: ζ_min = 10⁻⁶/κ₀ from an estimate of the
    /// ground-state decay rate, ζ_max = 40/κ for the shallowest requested level.
    /// The inner boundary is power-law for a subcritical attractive
    /// inverse-square term and Dirichlet otherwise.
    pub fn for_potential(potential: &PotentialSpec, num_eigenvalues: usize) -> Result<Self> {
        let (kappa_ground, kappa_shallow) = decay_estimates(potential, num_eigenvalues.max(1));
        let inner = if power_law_applies(potential) {
            InnerBoundary::PowerLaw
        } else {
            InnerBoundary::Dirichlet
        };
        Ok(Self::new(
            INNER_CUTOFF_FACTOR / kappa_ground,
            OUTER_CUTOFF_FACTOR / kappa_shallow,
            DEFAULT_NUM_POINTS,
            num_eigenvalues,
        )?
        .with_inner(inner))
    }

    pub fn spacing(&self) -> f64 {
        (self.zeta_max - self.zeta_min) / (self.num_points - 1) as f64
    }

    pub fn abscissae(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.num_points).map(|i| self.zeta_min + i as f64 * h).collect()
    }

    /// Same cutoffs, half the spacing.
    pub fn refine_spacing(&self) -> Self {
        GridConfig {
            num_points: 2 * (self.num_points - 1) + 1,
            ..*self
        }
    }

    /// Inner cutoff and spacing both halved (outer cutoff fixed). On a uniform
    /// grid the inner cutoff only matters relative to the spacing, so the two
    /// shrink together.
    pub fn refine_inner_cutoff(&self) -> Self {
        let zeta_min = 0.5 * self.zeta_min;
        let h = 0.5 * self.spacing();
        let num_points = ((self.zeta_max - zeta_min) / h).round() as usize + 1;
        GridConfig {
            zeta_min,
            num_points,
            ..*self
        }
    }
}

fn decay_estimates(potential: &PotentialSpec, levels: usize) -> (f64, f64) {
    let coulomb = match (potential.beta == 1.0, potential.g1) {
        (true, None) => potential.g,
        (_, Some(g1)) => g1 + if potential.beta == 1.0 { potential.g } else { 0.0 },
        (false, None) => 0.0,
    };
    if coulomb < 0.0 {
        let s = if potential.beta == 2.0 {
            inverse_square_exponent(potential.g).unwrap_or(0.5)
        } else {
            1.0
        };
        let c = coulomb.abs();
        return (c / s, c / (levels as f64 - 1.0 + s));
    }
    if potential.g < 0.0 && potential.beta < 2.0 {
        let k0 = potential.g.abs().powf(1.0 / (2.0 - potential.beta));
        return (k0, k0 / levels as f64);
    }
    (1.0, 1.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpectrum {
    pub energies: Vec<f64>,
    /// Samples on `config.abscissae()`, with ∑ h v² = 1 (trapezoidal weight).
    pub vectors: Vec<Vec<f64>>,
    pub config: GridConfig,
}

impl GridSpectrum {
    pub fn node_counts(&self) -> Vec<usize> {
        self.vectors.iter().map(|v| count_sign_changes(v, 1e-8)).collect()
    }
}

fn power_law_applies(potential: &PotentialSpec) -> bool {
    potential.beta == 2.0 && potential.g < 0.0 && potential.g > CRITICAL_COUPLING
}

fn first_unknown(inner: InnerBoundary) -> usize {
    match inner {
        InnerBoundary::Neumann => 0,
        InnerBoundary::Dirichlet | InnerBoundary::PowerLaw => 1,
    }
}

/// u₀/u₁ for the power-law inner boundary, zero where it reduces to Dirichlet.
fn ghost_ratio(potential: &PotentialSpec, config: &GridConfig) -> Result<f64> {
    if !power_law_applies(potential) {
        return Ok(0.0);
    }
    let s = inverse_square_exponent(potential.g)?;
    let h = config.spacing();
    let coulomb = potential.g1.unwrap_or(0.0) * h;
    Ok(power_law_ratio(potential.g, coulomb, s, config.zeta_min / h))
}

/// With x = ζ/h the near-origin recurrence reads
/// u(x+1) - 2u(x) + u(x-1) = (2g/x² + 2γ/x) u(x), γ = g₁h. The solution
/// without a ζ^(1-s) part is seeded at x = 50 from the product of the
/// asymptotic series Σ c_j x^(s-2j) of the pure inverse-square recurrence and
/// the continuum Frobenius series Σ a_k x^k of the Coulomb part, then carried
/// back to the node at x = δ. The κ² term is left out; it enters the seed at
/// order (κhx)².
fn power_law_ratio(g: f64, coulomb: f64, s: f64, delta: f64) -> f64 {
    const SEED: usize = 50;
    const COULOMB_TERMS: usize = 60;
    const TERMS: usize = 6;
    let binom = |p: f64, k: usize| (0..k).fold(1.0, |acc, j| acc * (p - j as f64) / (j + 1) as f64);
    let mut c = vec![1.0];
    for j in 1..TERMS {
        let p = s - 2.0 * j as f64;
        let rhs: f64 = (2..=j + 1)
            .map(|m| c[j + 1 - m] * 2.0 * binom(s - 2.0 * (j + 1 - m) as f64, 2 * m))
            .sum();
        c.push(-rhs / (p * (p - 1.0) - 2.0 * g));
    }
    let u = |x: f64| {
        let series: f64 = c
            .iter()
            .enumerate()
            .map(|(j, cj)| cj * x.powf(s - 2.0 * j as f64))
            .sum();
        let mut term = 1.0;
        let mut frob = 1.0;
        for k in 1..COULOMB_TERMS {
            let p = s + k as f64;
            term *= 2.0 * coulomb * x / (p * (p - 1.0) - 2.0 * g);
            frob += term;
        }
        series * frob
    };
    let (mut cur, mut next) = (u(SEED as f64 + delta), u(SEED as f64 + 1.0 + delta));
    for i in (1..=SEED).rev() {
        let x = i as f64 + delta;
        let prev = 2.0 * cur - next + (2.0 * g / (x * x) + 2.0 * coulomb / x) * cur;
        next = cur;
        cur = prev;
    }
    cur / next
}

/// Discrete Hamiltonian on the unknowns of the grid.
pub fn hamiltonian(potential: &PotentialSpec, config: &GridConfig) -> Result<SymTridiagonal> {
    config.validate()?;
    let h = config.spacing();
    let kin = 1.0 / (h * h);
    let zeta = config.abscissae();
    let first = first_unknown(config.inner);
    let last = config.num_points - 1;
    let mut diag: Vec<f64> = zeta[first..last].iter().map(|&z| kin + potential.potential(z)).collect();
    match config.inner {
        InnerBoundary::Dirichlet => {}
        InnerBoundary::Neumann => diag[0] -= 0.5 * kin,
        InnerBoundary::PowerLaw => diag[0] -= 0.5 * kin * ghost_ratio(potential, config)?,
    }
    let off = vec![-0.5 * kin; diag.len() - 1];
    if diag.iter().any(|d| !d.is_finite()) {
        return Err(Error::Eigensolver("potential is not finite on the grid".into()));
    }
    SymTridiagonal::new(diag, off)
}

/// Lowest `config.num_eigenvalues` eigenpairs of the discretized problem.
pub fn solve_grid(potential: &PotentialSpec, config: &GridConfig) -> Result<GridSpectrum> {
    let matrix = hamiltonian(potential, config)?;
    let (energies, raw) = matrix.lowest_eigenpairs(config.num_eigenvalues)?;
    if energies.iter().any(|e| !e.is_finite()) {
        return Err(Error::Eigensolver("non-finite eigenvalue".into()));
    }
    let h = config.spacing();
    let offset = first_unknown(config.inner);
    let ghost = match config.inner {
        InnerBoundary::PowerLaw => ghost_ratio(potential, config)?,
        _ => 0.0,
    };
    let vectors = raw
        .into_iter()
        .map(|v| {
            let mut full = vec![0.0; config.num_points];
            full[offset..offset + v.len()].copy_from_slice(&v);
            if offset == 1 {
                full[0] = ghost * full[1];
            }
            let ends = 0.5 * (full[0].powi(2) + full[config.num_points - 1].powi(2));
            let norm = (h * (full.iter().map(|x| x * x).sum::<f64>() - ends)).sqrt();
            let peak = full.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
            let lead = full.iter().find(|x| x.abs() > 1e-3 * peak).copied().unwrap_or(1.0);
            let sign = lead.signum() / norm;
            full.iter_mut().for_each(|x| *x *= sign);
            full
        })
        .collect();
    Ok(GridSpectrum {
        energies,
        vectors,
        config: *config,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FallToCenter {
    pub ground: f64,
    pub refined_ground: f64,
    pub relative_shift: f64,
    pub warning: bool,
}

/// Compares the ground energy with the one obtained after refining the inner
/// cutoff; a shift above 10⁻³ relative flags a fall to the centre.
pub fn fall_to_center_check(potential: &PotentialSpec, config: &GridConfig) -> Result<FallToCenter> {
    let one = GridConfig {
        num_eigenvalues: 1,
        ..*config
    };
    let ground = solve_grid(potential, &one)?.energies[0];
    let refined_ground = solve_grid(potential, &one.refine_inner_cutoff())?.energies[0];
    let relative_shift = ((refined_ground - ground) / ground).abs();
    Ok(FallToCenter {
        ground,
        refined_ground,
        relative_shift,
        warning: relative_shift > FALL_TO_CENTER_THRESHOLD,
    })
}

/// W(ζ) = ψ₁ψ₂′ - ψ₂ψ₁′ at the interior grid points, central differences.
pub fn wronskian(psi1: &[f64], psi2: &[f64], config: &GridConfig) -> Result<Vec<f64>> {
    if psi1.len() != config.num_points || psi2.len() != config.num_points {
        return Err(Error::GridMismatch(format!(
            "vectors of length {} and {} on a grid of {} points",
            psi1.len(),
            psi2.len(),
            config.num_points
        )));
    }
    let two_h = 2.0 * config.spacing();
    Ok((1..config.num_points - 1)
        .map(|i| {
            let d1 = (psi1[i + 1] - psi1[i - 1]) / two_h;
            let d2 = (psi2[i + 1] - psi2[i - 1]) / two_h;
            psi1[i] * d2 - psi2[i] * d1
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceStudy {
    /// (h, E₀(h)) from coarsest to finest.
    pub rows: Vec<(f64, f64)>,
    /// log₂ of the ratio of the last two successive differences.
    pub observed_order: Option<f64>,
    pub extrapolated: f64,
    /// Successive differences shrink at every level.
    pub converged: bool,
}

/// Halves the spacing `levels - 1` times and Richardson-extrapolates E₀.
pub fn convergence_study(potential: &PotentialSpec, base: &GridConfig, levels: usize) -> Result<ConvergenceStudy> {
    if levels < 2 {
        return Err(Error::InvalidParameter(format!("convergence study needs >= 2 levels, got {levels}")));
    }
    let mut cfg = GridConfig {
        num_eigenvalues: 1,
        ..*base
    };
    let mut rows = Vec::with_capacity(levels);
    for level in 0..levels {
        if level > 0 {
            cfg = cfg.refine_spacing();
        }
        rows.push((cfg.spacing(), solve_grid(potential, &cfg)?.energies[0]));
    }
    let diffs: Vec<f64> = rows.windows(2).map(|w| w[1].1 - w[0].1).collect();
    let observed_order = (diffs.len() >= 2).then(|| {
        let (a, b) = (diffs[diffs.len() - 2], diffs[diffs.len() - 1]);
        (a / b).abs().log2()
    });
    let converged = if diffs.len() >= 2 {
        diffs.windows(2).all(|w| w[1].abs() < w[0].abs())
    } else {
        (diffs[0] / rows[1].1).abs() < FALL_TO_CENTER_THRESHOLD
    };
    let order = observed_order.filter(|p| p.is_finite() && *p > 0.5 && *p < 6.0).unwrap_or(2.0);
    let last = rows[levels - 1].1;
    let extrapolated = last + diffs[diffs.len() - 1] / (2f64.powf(order) - 1.0);
    Ok(ConvergenceStudy {
        rows,
        observed_order,
        extrapolated,
        converged,
    })
}
