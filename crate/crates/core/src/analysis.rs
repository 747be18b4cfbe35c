//! Behaviour of bound-state eigenfunctions at the singular origin.
//!
//! Near ζ = 0 the dominant term g/ζ^β fixes the local power law ψ ~ ζ^s.
//! Requiring the potential-energy operator to be Hermitian selects the
//! admissible exponents, which in turn fix ψ(0⁺), ψ′(0⁺), the parities a
//! half-line solution may be extended with, and the degeneracy of the
//! whole-line spectrum.

use serde::Serialize;

use crate::error::{Error, Result, CRITICAL_COUPLING};

/// A potential whose dominant singularity at the origin is g/ζ^β, optionally
/// accompanied by a Coulomb term g₁/ζ (the Kratzer family when β = 2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PotentialSpec {
    pub beta: f64,
    pub g: f64,
    pub g1: Option<f64>,
}

impl PotentialSpec {
    pub fn new(beta: f64, g: f64) -> Result<Self> {
        Self::with_coulomb(beta, g, None)
    }

    pub fn with_coulomb(beta: f64, g: f64, g1: Option<f64>) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0 && beta <= 2.0) {
            return Err(Error::InvalidParameter(format!(
                "singularity exponent beta = {beta} outside (0, 2]"
            )));
        }
        if !g.is_finite() || g1.is_some_and(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter("non-finite coupling".into()));
        }
        Ok(PotentialSpec { beta, g, g1 })
    }

    /// V = g₁/ζ.
    pub fn hydrogen(g1: f64) -> Result<Self> {
        Self::new(1.0, g1)
    }

    /// V = g₁/ζ + g₂/ζ². The inverse-square term dominates unless g₂ = 0.
    pub fn kratzer(g1: f64, g2: f64) -> Result<Self> {
        if g2 == 0.0 {
            Self::hydrogen(g1)
        } else {
            Self::with_coulomb(2.0, g2, Some(g1))
        }
    }

    /// V(ζ) for ζ > 0.
    pub fn potential(&self, zeta: f64) -> f64 {
        let dominant = if self.beta == 2.0 {
            self.g / (zeta * zeta)
        } else if self.beta == 1.0 {
            self.g / zeta
        } else {
            self.g * zeta.powf(-self.beta)
        };
        dominant + self.g1.map_or(0.0, |c| c / zeta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum IndicialRoot {
    Real(f64),
    Complex { re: f64, im: f64 },
}

impl IndicialRoot {
    pub fn real(self) -> Option<f64> {
        match self {
            IndicialRoot::Real(s) => Some(s),
            IndicialRoot::Complex { .. } => None,
        }
    }

    pub fn re(self) -> f64 {
        match self {
            IndicialRoot::Real(s) => s,
            IndicialRoot::Complex { re, .. } => re,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndicialSolution {
    pub s_plus: IndicialRoot,
    pub s_minus: IndicialRoot,
    /// Exponents surviving the Hermiticity criterion, ascending.
    pub admissible_s: Vec<f64>,
}

/// Roots of s(s-1) = 2g at β = 2, or (1, 0) for β < 2, without any filtering.
pub fn raw_indicial_roots(spec: &PotentialSpec) -> (IndicialRoot, IndicialRoot) {
    if spec.beta < 2.0 {
        return (IndicialRoot::Real(1.0), IndicialRoot::Real(0.0));
    }
    let disc = 1.0 + 8.0 * spec.g;
    if disc >= 0.0 {
        let r = disc.sqrt();
        (IndicialRoot::Real(0.5 * (1.0 + r)), IndicialRoot::Real(0.5 * (1.0 - r)))
    } else {
        let im = 0.5 * (-disc).sqrt();
        (
            IndicialRoot::Complex { re: 0.5, im },
            IndicialRoot::Complex { re: 0.5, im: -im },
        )
    }
}

/// Indicial exponents and the subset admitted by Hermiticity of the
/// potential-energy operator (Re s > 1/2 at β = 2).
pub fn indicial_roots(spec: &PotentialSpec) -> Result<IndicialSolution> {
    let (s_plus, s_minus) = raw_indicial_roots(spec);
    let admissible_s = if spec.beta == 2.0 {
        if spec.g <= CRITICAL_COUPLING {
            return Err(Error::Supercritical { g: spec.g });
        }
        vec![s_plus.re()]
    } else if spec.beta >= 1.0 {
        vec![1.0]
    } else {
        vec![0.0, 1.0]
    };
    Ok(IndicialSolution {
        s_plus,
        s_minus,
        admissible_s,
    })
}

/// Admissible origin exponent s₊ = (1 + √(1 + 8g))/2 of an inverse-square coupling.
pub fn inverse_square_exponent(g: f64) -> Result<f64> {
    if !(g > CRITICAL_COUPLING) {
        return Err(Error::Supercritical { g });
    }
    Ok(0.5 * (1.0 + (1.0 + 8.0 * g).sqrt()))
}

/// The critical inverse-square coupling α_c = -ℏ²/(8m) in units ℏ = m = 1.
pub fn critical_coupling() -> f64 {
    CRITICAL_COUPLING
}

pub fn is_subcritical(g: f64) -> bool {
    g > CRITICAL_COUPLING
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }

    pub fn from_sign(p: i32) -> Result<Self> {
        match p {
            1 => Ok(Parity::Even),
            -1 => Ok(Parity::Odd),
            _ => Err(Error::InvalidParameter(format!("parity must be +1 or -1, got {p}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OriginValue {
    Zero,
    Finite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OriginDerivative {
    Zero,
    Finite,
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Degeneracy {
    Nondegenerate,
    Double,
}

/// Rows of the (ψ(0⁺), ψ′(0⁺)) table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OriginRow {
    InverseSquareRepulsive,
    InverseSquareAttractive,
    Intermediate,
    WeakRegular,
    WeakDirichlet,
}

/// Rows of the parity-extension table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtensionRow {
    InverseSquare,
    Intermediate,
    WeakRegular,
    WeakDirichlet,
}

/// Classification of one admissible branch ψ ~ ζ^s.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryClassification {
    pub s: f64,
    pub psi_at_origin: OriginValue,
    pub dpsi_at_origin: OriginDerivative,
    pub allowed_parities: Vec<Parity>,
    pub degeneracy: Degeneracy,
    #[serde(skip)]
    pub origin_row: OriginRow,
    #[serde(skip)]
    pub extension_row: ExtensionRow,
}

impl BoundaryClassification {
    pub fn allows(&self, parity: Parity) -> bool {
        self.allowed_parities.contains(&parity)
    }
}

/// One entry per admissible exponent: a single branch for 1 ≤ β ≤ 2, the
/// s = 0 and s = 1 branches (in that order) for β < 1.
pub fn classify_boundary(spec: &PotentialSpec) -> Result<Vec<BoundaryClassification>> {
    let roots = indicial_roots(spec)?;
    if spec.beta == 2.0 {
        let s = roots.admissible_s[0];
        let (dpsi, row) = if spec.g > 0.0 {
            (OriginDerivative::Zero, OriginRow::InverseSquareRepulsive)
        } else if spec.g < 0.0 {
            (OriginDerivative::Infinite, OriginRow::InverseSquareAttractive)
        } else {
            return Err(Error::VanishingCoupling);
        };
        return Ok(vec![BoundaryClassification {
            s,
            psi_at_origin: OriginValue::Zero,
            dpsi_at_origin: dpsi,
            allowed_parities: vec![Parity::Even, Parity::Odd],
            degeneracy: Degeneracy::Double,
            origin_row: row,
            extension_row: ExtensionRow::InverseSquare,
        }]);
    }
    if spec.beta >= 1.0 {
        return Ok(vec![BoundaryClassification {
            s: 1.0,
            psi_at_origin: OriginValue::Zero,
            dpsi_at_origin: OriginDerivative::Finite,
            allowed_parities: vec![Parity::Odd],
            degeneracy: Degeneracy::Nondegenerate,
            origin_row: OriginRow::Intermediate,
            extension_row: ExtensionRow::Intermediate,
        }]);
    }
    Ok(vec![
        BoundaryClassification {
            s: 0.0,
            psi_at_origin: OriginValue::Finite,
            dpsi_at_origin: OriginDerivative::Zero,
            allowed_parities: vec![Parity::Even],
            degeneracy: Degeneracy::Nondegenerate,
            origin_row: OriginRow::WeakRegular,
            extension_row: ExtensionRow::WeakRegular,
        },
        BoundaryClassification {
            s: 1.0,
            psi_at_origin: OriginValue::Zero,
            dpsi_at_origin: OriginDerivative::Finite,
            allowed_parities: vec![Parity::Odd],
            degeneracy: Degeneracy::Nondegenerate,
            origin_row: OriginRow::WeakDirichlet,
            extension_row: ExtensionRow::WeakDirichlet,
        },
    ])
}

/// Union of the parities admitted by any branch, sorted (even before odd).
pub fn allowed_parities(spec: &PotentialSpec) -> Result<Vec<Parity>> {
    let mut all: Vec<Parity> = classify_boundary(spec)?
        .into_iter()
        .flat_map(|c| c.allowed_parities)
        .collect();
    all.sort();
    all.dedup();
    Ok(all)
}

/// Samples of a function on the whole line.
#[derive(Debug, Clone, PartialEq)]
pub struct FullLineSamples {
    pub zeta: Vec<f64>,
    pub psi: Vec<f64>,
}

/// Builds ψ^(p)(ζ) = [θ(ζ) + p θ(-ζ)] ψ(|ζ|) from half-line samples that
/// start at ζ = 0. An odd extension of a function that does not vanish at
/// the origin would be discontinuous and is rejected.
pub fn extend_to_full_line(
    zeta: &[f64],
    psi: &[f64],
    parity: Parity,
    branch: &BoundaryClassification,
) -> Result<FullLineSamples> {
    if zeta.len() != psi.len() || zeta.is_empty() {
        return Err(Error::InvalidParameter("half-line samples must be non-empty and paired".into()));
    }
    if zeta[0] != 0.0 {
        return Err(Error::InvalidParameter("half-line samples must include zeta = 0".into()));
    }
    if zeta.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter("half-line abscissae must be strictly increasing".into()));
    }
    if !branch.allows(parity) {
        return Err(Error::ParityNotAllowed {
            parity: parity.sign() as i8,
            reason: format!("branch s = {} admits only {:?}", branch.s, branch.allowed_parities),
        });
    }
    let scale = psi.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if parity == Parity::Odd && psi[0].abs() > 1e-12 * scale {
        return Err(Error::ParityNotAllowed {
            parity: -1,
            reason: format!("psi(0) = {} != 0 would make the odd extension discontinuous", psi[0]),
        });
    }

    let p = parity.sign();
    let n = zeta.len();
    let mut out_zeta = Vec::with_capacity(2 * n - 1);
    let mut out_psi = Vec::with_capacity(2 * n - 1);
    for k in (1..n).rev() {
        out_zeta.push(-zeta[k]);
        out_psi.push(p * psi[k]);
    }
    out_zeta.push(0.0);
    out_psi.push(if parity == Parity::Odd { 0.0 } else { psi[0] });
    out_zeta.extend_from_slice(&zeta[1..]);
    out_psi.extend_from_slice(&psi[1..]);
    Ok(FullLineSamples {
        zeta: out_zeta,
        psi: out_psi,
    })
}

/// Inverse-square coupling seen by the radial function u = ζR of angular
/// momentum l in three dimensions: g₂ + l(l+1)/2.
pub fn effective_coupling_3d(g2: f64, l: u32) -> f64 {
    let l = f64::from(l);
    g2 + 0.5 * l * (l + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(beta: f64, g: f64) -> PotentialSpec {
        PotentialSpec::new(beta, g).unwrap()
    }

    #[test]
    fn inverse_square_roots() {
        let sol = indicial_roots(&spec(2.0, 1.0)).unwrap();
        assert_eq!(sol.s_plus, IndicialRoot::Real(2.0));
        assert_eq!(sol.s_minus, IndicialRoot::Real(-1.0));
        assert_eq!(sol.admissible_s, vec![2.0]);
    }

    #[test]
    fn weaker_singularities() {
        let sol = indicial_roots(&spec(1.0, -10.0)).unwrap();
        assert_eq!((sol.s_plus, sol.s_minus), (IndicialRoot::Real(1.0), IndicialRoot::Real(0.0)));
        assert_eq!(sol.admissible_s, vec![1.0]);
        assert_eq!(indicial_roots(&spec(1.7, 3.0)).unwrap().admissible_s, vec![1.0]);
        assert_eq!(indicial_roots(&spec(0.5, -1.0)).unwrap().admissible_s, vec![0.0, 1.0]);
    }

    #[test]
    fn critical_double_root_is_supercritical() {
        let s = spec(2.0, -0.125);
        assert_eq!(raw_indicial_roots(&s), (IndicialRoot::Real(0.5), IndicialRoot::Real(0.5)));
        assert_eq!(indicial_roots(&s), Err(Error::Supercritical { g: -0.125 }));
        let (p, _) = raw_indicial_roots(&spec(2.0, -0.2));
        assert!(matches!(p, IndicialRoot::Complex { re, .. } if re == 0.5));
    }

    #[test]
    fn critical_value() {
        assert_eq!(critical_coupling(), -0.125);
        assert!(is_subcritical(-0.124_999));
        assert!(!is_subcritical(-0.2));
        assert!(!is_subcritical(-0.125));
    }

    #[test]
    fn rejects_out_of_range_beta() {
        assert!(PotentialSpec::new(0.0, 1.0).is_err());
        assert!(PotentialSpec::new(2.5, 1.0).is_err());
        assert!(PotentialSpec::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn repulsive_inverse_square_row() {
        let c = classify_boundary(&spec(2.0, 0.3)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].psi_at_origin, OriginValue::Zero);
        assert_eq!(c[0].dpsi_at_origin, OriginDerivative::Zero);
        assert_eq!(c[0].allowed_parities, vec![Parity::Even, Parity::Odd]);
        assert_eq!(c[0].degeneracy, Degeneracy::Double);
    }

    #[test]
    fn attractive_inverse_square_row() {
        let c = classify_boundary(&spec(2.0, -0.1)).unwrap();
        assert_eq!(c[0].dpsi_at_origin, OriginDerivative::Infinite);
        assert_eq!(c[0].degeneracy, Degeneracy::Double);
    }

    #[test]
    fn intermediate_row() {
        let c = classify_boundary(&spec(1.5, 2.0)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].psi_at_origin, OriginValue::Zero);
        assert_eq!(c[0].dpsi_at_origin, OriginDerivative::Finite);
        assert_eq!(c[0].allowed_parities, vec![Parity::Odd]);
        assert_eq!(c[0].degeneracy, Degeneracy::Nondegenerate);
    }

    #[test]
    fn weak_rows() {
        let c = classify_boundary(&spec(0.5, -1.0)).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].s, 0.0);
        assert_eq!(c[0].psi_at_origin, OriginValue::Finite);
        assert_eq!(c[0].dpsi_at_origin, OriginDerivative::Zero);
        assert_eq!(c[0].allowed_parities, vec![Parity::Even]);
        assert_eq!(c[1].s, 1.0);
        assert_eq!(c[1].allowed_parities, vec![Parity::Odd]);
        assert_eq!(allowed_parities(&spec(0.5, -1.0)).unwrap(), vec![Parity::Even, Parity::Odd]);
    }

    #[test]
    fn vanishing_inverse_square_coupling() {
        assert_eq!(classify_boundary(&spec(2.0, 0.0)), Err(Error::VanishingCoupling));
    }

    #[test]
    fn supercritical_classification() {
        assert!(matches!(classify_boundary(&spec(2.0, -0.2)), Err(Error::Supercritical { .. })));
    }

    #[test]
    fn odd_extension() {
        let zeta: Vec<f64> = (0..50).map(|i| i as f64 * 0.1).collect();
        let psi: Vec<f64> = zeta.iter().map(|z| z * (-z).exp()).collect();
        let branch = &classify_boundary(&spec(1.0, -1.0)).unwrap()[0];
        let full = extend_to_full_line(&zeta, &psi, Parity::Odd, branch).unwrap();
        assert_eq!(full.zeta.len(), 99);
        assert_eq!(full.psi[49], 0.0);
        for k in 1..50 {
            assert_eq!(full.zeta[49 - k], -full.zeta[49 + k]);
            assert_eq!(full.psi[49 - k], -full.psi[49 + k]);
        }
    }

    #[test]
    fn odd_extension_needs_vanishing_origin() {
        let zeta = [0.0, 0.5, 1.0];
        let psi = [0.7, 0.4, 0.2];
        let branch = &classify_boundary(&spec(2.0, 0.3)).unwrap()[0];
        assert!(matches!(
            extend_to_full_line(&zeta, &psi, Parity::Odd, branch),
            Err(Error::ParityNotAllowed { parity: -1, .. })
        ));
    }

    #[test]
    fn even_extension_of_regular_branch() {
        let zeta: Vec<f64> = (0..20).map(|i| i as f64 * 0.25).collect();
        let psi: Vec<f64> = zeta.iter().map(|z| (-z).exp()).collect();
        let branches = classify_boundary(&spec(0.5, -1.0)).unwrap();
        let full = extend_to_full_line(&zeta, &psi, Parity::Even, &branches[0]).unwrap();
        assert_eq!(full.psi[19], 1.0);
        assert_eq!(full.psi[0], full.psi[38]);
        // the s = 1 branch is odd only
        assert!(extend_to_full_line(&zeta, &psi, Parity::Even, &branches[1]).is_err());
    }

    #[test]
    fn even_extension_rejected_for_intermediate_beta() {
        let zeta = [0.0, 1.0];
        let psi = [0.0, 0.3];
        let branch = &classify_boundary(&spec(1.5, -1.0)).unwrap()[0];
        assert!(matches!(
            extend_to_full_line(&zeta, &psi, Parity::Even, branch),
            Err(Error::ParityNotAllowed { parity: 1, .. })
        ));
    }

    #[test]
    fn three_dimensional_coupling() {
        assert_eq!(effective_coupling_3d(0.3, 0), 0.3);
        assert_eq!(effective_coupling_3d(0.0, 1), 1.0);
        assert!((effective_coupling_3d(-0.1, 2) - 2.9).abs() < 1e-15);
    }

    #[test]
    fn kratzer_dominance() {
        let k = PotentialSpec::kratzer(-10.0, 0.0).unwrap();
        assert_eq!((k.beta, k.g, k.g1), (1.0, -10.0, None));
        let k = PotentialSpec::kratzer(-10.0, 0.3).unwrap();
        assert_eq!((k.beta, k.g, k.g1), (2.0, 0.3, Some(-10.0)));
        assert!((k.potential(2.0) - (-5.0 + 0.075)).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn root_satisfies_indicial_equation(g in -0.124_999_f64..50.0) {
            let s = indicial_roots(&spec(2.0, g)).unwrap().admissible_s[0];
            prop_assert!((s * (s - 1.0) - 2.0 * g).abs() < 1e-12 * (1.0 + g.abs()));
            prop_assert!(s > 0.5);
        }

        #[test]
        fn admissible_root_monotone(g in -0.124_999_f64..10.0, dg in 1e-9_f64..1.0) {
            let a = inverse_square_exponent(g).unwrap();
            let b = inverse_square_exponent(g + dg).unwrap();
            prop_assert!(b > a);
        }

        #[test]
        fn every_valid_spec_is_classified(beta in 0.01_f64..=2.0, g in -0.124_f64..5.0) {
            prop_assume!(g != 0.0);
            let c = classify_boundary(&spec(beta, g)).unwrap();
            prop_assert!(!c.is_empty());
            for b in &c {
                prop_assert_eq!(b.degeneracy == Degeneracy::Double, beta == 2.0);
                prop_assert_eq!(
                    b.degeneracy == Degeneracy::Double,
                    b.allowed_parities == vec![Parity::Even, Parity::Odd]
                );
            }
        }
    }

    #[test]
    fn admissible_root_approaches_half() {
        let mut last = f64::INFINITY;
        for k in 1..12 {
            let g = CRITICAL_COUPLING + 10f64.powi(-k);
            let s = inverse_square_exponent(g).unwrap();
            assert!(s > 0.5 && s < last);
            last = s;
        }
        assert!(last - 0.5 < 2e-5);
    }
}
