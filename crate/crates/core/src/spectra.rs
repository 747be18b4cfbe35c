//! Closed-form bound states of V = g₁/ζ and V = g₁/ζ + g₂/ζ².
//!
//! With κ = |g₁|/(n + s) the half-line eigenfunctions are
//! ψ_n(ζ) = N_n ζ^s e^{-κζ} L_n^(2s-1)(2κζ) with energy E_n = -κ²/2, where
//! s = 1 for the pure Coulomb case and s = (1 + √(1 + 8g₂))/2 otherwise.

use serde::Serialize;

use crate::analysis::{allowed_parities, inverse_square_exponent, Parity, PotentialSpec};
use crate::error::{Error, Result, CRITICAL_COUPLING};
use crate::specfun::laguerre::laguerre_unchecked;
use crate::specfun::quadrature::gauss_laguerre;

/// Order of the normalization rule; ψ² is weight × polynomial of degree 2n,
/// so the rule is exact for n < 200.
pub const QUADRATURE_NODES: usize = 200;
const QUADRATURE_CHECK_NODES: usize = 100;
const QUADRATURE_AGREEMENT: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizationDomain {
    /// ∫₀^∞ ψ² dζ = 1
    #[default]
    HalfLine,
    /// ∫_{-∞}^{∞} ψ² dζ = 1, each half carrying weight 1/2
    FullLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundState {
    pub n: usize,
    pub s: f64,
    pub energy: f64,
    pub kappa: f64,
    pub norm_const: f64,
    pub parity: Option<Parity>,
    pub domain: NormalizationDomain,
}

impl BoundState {
    fn unnormalized(n: usize, s: f64, g1: f64) -> Self {
        let kappa = g1.abs() / (n as f64 + s);
        BoundState {
            n,
            s,
            energy: -g1 * g1 / (2.0 * (n as f64 + s) * (n as f64 + s)),
            kappa,
            norm_const: 1.0,
            parity: None,
            domain: NormalizationDomain::HalfLine,
        }
    }

    /// Laguerre superscript 2s - 1.
    pub fn laguerre_alpha(&self) -> f64 {
        2.0 * self.s - 1.0
    }

    /// Half-line eigenfunction at ζ ≥ 0.
    pub fn psi(&self, zeta: f64) -> f64 {
        if zeta == 0.0 {
            return if self.s > 0.0 { 0.0 } else { self.norm_const };
        }
        let poly = laguerre_unchecked(self.n, self.laguerre_alpha(), 2.0 * self.kappa * zeta);
        self.norm_const * (self.s * zeta.ln() - self.kappa * zeta).exp() * poly
    }

    /// Whole-line eigenfunction [θ(ζ) + pθ(-ζ)] ψ(|ζ|); half-line states are
    /// treated as vanishing for ζ < 0.
    pub fn psi_full(&self, zeta: f64) -> f64 {
        if zeta >= 0.0 {
            return self.psi(zeta);
        }
        match self.parity {
            Some(p) => p.sign() * self.psi(-zeta),
            None => 0.0,
        }
    }
}

/// Verdict of the exact analysis for a given pair of couplings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    BoundStates,
    /// Coulomb term repulsive or absent with no attractive partner.
    NoBoundStates,
}

/// Why a pure inverse-square potential binds nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InverseSquareReason {
    /// The quantization condition -n = s cannot hold since s > 1/2.
    QuantizationUnsatisfiable,
    /// g₂ ≤ -1/8: no Hermitian bound-state problem.
    Supercritical,
}

/// V = g₂/ζ² never supports bound states.
pub fn pure_inverse_square_verdict(g2: f64) -> (Verdict, InverseSquareReason) {
    let reason = if g2 > CRITICAL_COUPLING {
        InverseSquareReason::QuantizationUnsatisfiable
    } else {
        InverseSquareReason::Supercritical
    };
    (Verdict::NoBoundStates, reason)
}

fn coulomb_levels(g1: f64, s: f64, n_max: usize) -> Result<Vec<BoundState>> {
    (0..=n_max)
        .map(|n| normalize(&BoundState::unnormalized(n, s, g1)))
        .collect()
}

/// Half-line normalized levels of V = g₁/ζ: E_n = -g₁²/(2(n+1)²) for g₁ < 0,
/// none otherwise.
pub fn hydrogen_spectrum(g1: f64, n_max: usize) -> Result<Vec<BoundState>> {
    if !(g1 < 0.0) {
        return Ok(Vec::new());
    }
    coulomb_levels(g1, 1.0, n_max)
}

/// Half-line normalized levels of V = g₁/ζ + g₂/ζ².
pub fn kratzer_spectrum(g1: f64, g2: f64, n_max: usize) -> Result<Vec<BoundState>> {
    if !(g1.is_finite() && g2.is_finite()) {
        return Err(Error::InvalidParameter("non-finite coupling".into()));
    }
    let s = inverse_square_exponent(g2)?;
    if g1 == 0.0 {
        return Err(Error::DegenerateCoulomb);
    }
    if g1 > 0.0 {
        return Ok(Vec::new());
    }
    coulomb_levels(g1, s, n_max)
}

fn half_line_integral_unit(state: &BoundState, nodes: usize) -> Result<f64> {
    // u = 2κζ:  ∫₀^∞ ζ^{2s} e^{-2κζ} L(2κζ)² dζ = (2κ)^{-(2s+1)} ∫ u^{2s} e^{-u} L(u)² du
    let rule = gauss_laguerre(nodes, 2.0 * state.s)?;
    let alpha = state.laguerre_alpha();
    let inner = rule.integrate(|u| laguerre_unchecked(state.n, alpha, u).powi(2));
    Ok(inner * (2.0 * state.kappa).powf(-(2.0 * state.s + 1.0)))
}

/// Returns the state with `norm_const` chosen so that the integral of ψ²
/// over its normalization domain is one. Idempotent.
pub fn normalize(state: &BoundState) -> Result<BoundState> {
    if !(state.kappa > 0.0 && state.s > -0.5) {
        return Err(Error::InvalidParameter(format!("cannot normalize {state:?}")));
    }
    let integral = half_line_integral_unit(state, QUADRATURE_NODES)?;
    let check = half_line_integral_unit(state, QUADRATURE_CHECK_NODES)?;
    let disagreement = ((integral - check) / integral).abs();
    if !(integral.is_finite() && integral > 0.0) || !(disagreement <= QUADRATURE_AGREEMENT) {
        return Err(Error::QuadratureNonConvergence(disagreement));
    }
    let total = match state.domain {
        NormalizationDomain::HalfLine => integral,
        NormalizationDomain::FullLine => 2.0 * integral,
    };
    Ok(BoundState {
        norm_const: total.sqrt().recip(),
        ..*state
    })
}

/// Renormalizes on another domain.
pub fn with_domain(state: &BoundState, domain: NormalizationDomain) -> Result<BoundState> {
    normalize(&BoundState { domain, ..*state })
}

/// ∫₀^∞ ψ_a ψ_b dζ for two states sharing the origin exponent s.
pub fn overlap(a: &BoundState, b: &BoundState) -> Result<f64> {
    if a.s != b.s {
        return Err(Error::InvalidParameter(format!(
            "overlap needs a common origin exponent (got {} and {})",
            a.s, b.s
        )));
    }
    // u = (κa + κb) ζ
    let total = a.kappa + b.kappa;
    let rule = gauss_laguerre(QUADRATURE_NODES, 2.0 * a.s)?;
    let (ra, rb) = (2.0 * a.kappa / total, 2.0 * b.kappa / total);
    let (alpha_a, alpha_b) = (a.laguerre_alpha(), b.laguerre_alpha());
    let inner = rule.integrate(|u| {
        laguerre_unchecked(a.n, alpha_a, ra * u) * laguerre_unchecked(b.n, alpha_b, rb * u)
    });
    Ok(a.norm_const * b.norm_const * inner * total.powf(-(2.0 * a.s + 1.0)))
}

/// ψ(ζ)², the probability density.
pub fn density(state: &BoundState, zeta: f64) -> f64 {
    state.psi_full(zeta).powi(2)
}

pub fn eigenfunction(state: &BoundState, zeta: f64) -> f64 {
    state.psi(zeta)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumRequest {
    pub g1: f64,
    pub g2: f64,
    pub n_max: usize,
    pub normalization_domain: NormalizationDomain,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub verdict: Verdict,
    pub states: Vec<BoundState>,
}

/// Full analytic spectrum for a request. Whole-line requests return one state
/// per admitted parity: both parities (degenerate) when g₂ ≠ 0, odd only for
/// the pure Coulomb case.
pub fn spectrum(req: &SpectrumRequest) -> Result<Spectrum> {
    if req.g1 == 0.0 {
        if req.g2 <= CRITICAL_COUPLING {
            return Err(Error::Supercritical { g: req.g2 });
        }
        return Ok(Spectrum {
            verdict: pure_inverse_square_verdict(req.g2).0,
            states: Vec::new(),
        });
    }
    let half = kratzer_spectrum(req.g1, req.g2, req.n_max)?;
    if half.is_empty() {
        return Ok(Spectrum {
            verdict: Verdict::NoBoundStates,
            states: half,
        });
    }
    let states = match req.normalization_domain {
        NormalizationDomain::HalfLine => half,
        NormalizationDomain::FullLine => {
            let parities = allowed_parities(&PotentialSpec::kratzer(req.g1, req.g2)?)?;
            let mut out = Vec::with_capacity(half.len() * parities.len());
            for st in &half {
                for &p in &parities {
                    let mut full = with_domain(st, NormalizationDomain::FullLine)?;
                    full.parity = Some(p);
                    out.push(full);
                }
            }
            out
        }
    };
    Ok(Spectrum {
        verdict: Verdict::BoundStates,
        states,
    })
}

/// Pointwise residual of ψ″ - (κ² + 2g₁/ζ + 2g₂/ζ²)ψ with a central second
/// difference of step `h`, together with the magnitude of the potential term
/// (κ² + 2V)ψ for scaling.
pub fn schrodinger_residual(state: &BoundState, g1: f64, g2: f64, zeta: f64, h: f64) -> (f64, f64) {
    let d2 = (state.psi(zeta + h) - 2.0 * state.psi(zeta) + state.psi(zeta - h)) / (h * h);
    let rhs = (state.kappa * state.kappa + 2.0 * g1 / zeta + 2.0 * g2 / (zeta * zeta)) * state.psi(zeta);
    (d2 - rhs, rhs.abs())
}
