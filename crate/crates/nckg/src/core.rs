//! Shared domain types: physical constants, quantum numbers, unit
//! conversions and the energy/moment record types used by every module.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::quadrature::IntegralResult;

/// CODATA fine-structure constant.
pub const ALPHA_CODATA: f64 = 7.297_352_569_3e-3;
/// Electron mass in eV.
pub const M_E_EV_CODATA: f64 = 510_998.95;
/// ℏ in eV·s.
pub const HBAR_EV_S_CODATA: f64 = 6.582_119_569e-16;

/// The single source of dimensional truth.
///
/// θ is a single scalar (only θ₃ ≠ 0), carried in eV⁻²; internal
/// computations use natural units with mₑ = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub alpha: f64,
    /// Electron mass in eV.
    pub m_e: f64,
    /// ℏ in eV·s, used for Hz → eV conversion.
    pub hbar_ev_s: f64,
    /// Non-commutativity parameter in eV⁻².
    pub theta: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        PhysicalConstants {
            alpha: ALPHA_CODATA,
            m_e: M_E_EV_CODATA,
            hbar_ev_s: HBAR_EV_S_CODATA,
            theta: 0.0,
        }
    }
}

#[derive(Debug, Deserialize, Default)]
struct ConstantsFile {
    alpha: Option<f64>,
    m_e_ev: Option<f64>,
    hbar_ev_s: Option<f64>,
    theta_ev_minus2: Option<f64>,
}

impl PhysicalConstants {
    pub fn new(alpha: f64, m_e: f64, hbar_ev_s: f64, theta: f64) -> Result<Self> {
        let c = PhysicalConstants {
            alpha,
            m_e,
            hbar_ev_s,
            theta,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::Domain(format!(
                "alpha must lie in (0, 1), got {}",
                self.alpha
            )));
        }
        if !(self.m_e > 0.0) {
            return Err(Error::Domain(format!("m_e must be > 0, got {}", self.m_e)));
        }
        if !(self.hbar_ev_s > 0.0) {
            return Err(Error::Domain(format!(
                "hbar_ev_s must be > 0, got {}",
                self.hbar_ev_s
            )));
        }
        if !(self.theta >= 0.0) {
            return Err(Error::Domain(format!(
                "theta must be >= 0, got {}",
                self.theta
            )));
        }
        Ok(())
    }

    /// Load from a JSON config file; missing keys fall back to CODATA defaults.
    pub fn from_config(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Domain(format!("cannot read config {}: {e}", path.display())))?;
        let file: ConstantsFile = serde_json::from_str(&text)
            .map_err(|e| Error::Domain(format!("invalid config {}: {e}", path.display())))?;
        let defaults = PhysicalConstants::default();
        PhysicalConstants::new(
            file.alpha.unwrap_or(defaults.alpha),
            file.m_e_ev.unwrap_or(defaults.m_e),
            file.hbar_ev_s.unwrap_or(defaults.hbar_ev_s),
            file.theta_ev_minus2.unwrap_or(defaults.theta),
        )
    }

    /// Replace alpha, keeping everything else.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        PhysicalConstants::new(alpha, self.m_e, self.hbar_ev_s, self.theta)
    }

    /// Replace theta (eV⁻²), keeping everything else.
    pub fn with_theta(&self, theta: f64) -> Result<Self> {
        PhysicalConstants::new(self.alpha, self.m_e, self.hbar_ev_s, theta)
    }

    /// θ in natural units (mₑ = 1): θ_nat = θ[eV⁻²]·mₑ².
    pub fn theta_natural(&self) -> f64 {
        self.theta * self.m_e * self.m_e
    }
}

/// Relativistic quantum numbers: radial degree n ≥ 0, orbital l ≥ 0,
/// magnetic m_l with |m_l| ≤ l.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuantumNumbers {
    n: u32,
    l: u32,
    m_l: i32,
}

impl QuantumNumbers {
    pub fn new(n: i64, l: i64, m_l: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::Domain(format!("radial quantum number n = {n} < 0")));
        }
        if l < 0 {
            return Err(Error::Domain(format!("orbital quantum number l = {l} < 0")));
        }
        if m_l.abs() > l {
            return Err(Error::Domain(format!("|m_l| = {} > l = {l}", m_l.abs())));
        }
        Ok(QuantumNumbers {
            n: n as u32,
            l: l as u32,
            m_l: m_l as i32,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m_l(&self) -> i32 {
        self.m_l
    }

    /// Principal quantum number n_p = n + l + 1 (display only).
    pub fn n_principal(&self) -> u32 {
        self.n + self.l + 1
    }
}

/// Unit system selector for boundary conversions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    /// ℏ = c = 1, energies in units of mₑ.
    Natural,
    Electronvolt,
}

impl UnitSystem {
    /// Convert an energy from this unit system into eV.
    pub fn energy_to_ev(&self, value: f64, c: &PhysicalConstants) -> f64 {
        match self {
            UnitSystem::Natural => value * c.m_e,
            UnitSystem::Electronvolt => value,
        }
    }

    /// Convert an energy in eV into this unit system.
    pub fn energy_from_ev(&self, value_ev: f64, c: &PhysicalConstants) -> f64 {
        match self {
            UnitSystem::Natural => value_ev / c.m_e,
            UnitSystem::Electronvolt => value_ev,
        }
    }
}

/// Energy in natural units (mₑ = 1) → eV.
pub fn to_ev(value: f64, c: &PhysicalConstants) -> f64 {
    value * c.m_e
}

/// Frequency in Hz → photon energy in eV: E = hν = 2πℏν.
pub fn hz_to_ev(frequency: f64, c: &PhysicalConstants) -> f64 {
    2.0 * std::f64::consts::PI * c.hbar_ev_s * frequency
}

/// Unperturbed energy plus the θ-shift terms, all in natural units.
///
/// `total` is the sum of the other four fields by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyBreakdown {
    pub e0: f64,
    /// First-order shift, the θ¹ term (odd in m_l).
    pub shift_theta1: f64,
    /// θ² term proportional to f(5).
    pub shift_theta2_f5: f64,
    /// θ² term proportional to f(6).
    pub shift_theta2_f6: f64,
    pub total: f64,
}

impl EnergyBreakdown {
    pub fn new(e0: f64, shift_theta1: f64, shift_theta2_f5: f64, shift_theta2_f6: f64) -> Self {
        EnergyBreakdown {
            e0,
            shift_theta1,
            shift_theta2_f5,
            shift_theta2_f6,
            total: e0 + shift_theta1 + shift_theta2_f5 + shift_theta2_f6,
        }
    }

    pub fn unperturbed(e0: f64) -> Self {
        EnergyBreakdown::new(e0, 0.0, 0.0, 0.0)
    }
}

/// A closed-form moment value next to its independent quadrature oracle and
/// the verbatim evaluation of the formula as printed.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentComparison {
    /// Moment order: the moment is ⟨r^-k⟩.
    pub k: i32,
    /// Series-engine value (oracle-validated route).
    pub closed_form: f64,
    /// Quadrature oracle value with error estimate.
    pub oracle: IntegralResult,
    /// Value of the literally-printed formula; may disagree with the oracle
    /// where the printed expression carries a transcription slip.
    pub paper_fidelity: Option<f64>,
    /// |closed_form − oracle| / |oracle|.
    pub rel_discrepancy: f64,
}

impl MomentComparison {
    pub fn new(k: i32, closed_form: f64, oracle: IntegralResult, paper_fidelity: Option<f64>) -> Self {
        let rel_discrepancy = if oracle.value != 0.0 {
            ((closed_form - oracle.value) / oracle.value).abs()
        } else {
            closed_form.abs()
        };
        MomentComparison {
            k,
            closed_form,
            oracle,
            paper_fidelity,
            rel_discrepancy,
        }
    }

    /// Relative deviation of the verbatim printed formula from the oracle.
    pub fn paper_rel_discrepancy(&self) -> Option<f64> {
        self.paper_fidelity.map(|p| {
            if self.oracle.value != 0.0 {
                ((p - self.oracle.value) / self.oracle.value).abs()
            } else {
                p.abs()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn natural_unit_is_electron_mass() {
        let c = PhysicalConstants::default();
        assert_eq!(to_ev(1.0, &c), 510_998.95);
        assert_eq!(to_ev(0.0, &c), 0.0);
    }

    #[test]
    fn ground_state_scale_in_ev() {
        // mₑα²/2 with CODATA constants is the Rydberg energy.
        let c = PhysicalConstants::default().with_alpha(1.0 / 137.035999).unwrap();
        let e = to_ev(-c.alpha * c.alpha / 2.0, &c);
        assert_relative_eq!(e, -13.6057, max_relative = 1e-4);
    }

    #[test]
    fn hz_to_ev_values() {
        let c = PhysicalConstants::default();
        assert_eq!(hz_to_ev(0.0, &c), 0.0);
        assert_relative_eq!(hz_to_ev(1.0, &c), 4.1357e-15, max_relative = 1e-4);
        // 14 kHz, the 1s Lamb-shift accuracy scale.
        assert_relative_eq!(hz_to_ev(14.0e3, &c), 5.79e-11, max_relative = 1e-2);
    }

    #[test]
    fn unit_round_trip_is_identity() {
        let c = PhysicalConstants::default();
        for &v in &[1.0, -13.6057, 3.2e-11, 7.7e8] {
            let back = UnitSystem::Natural.energy_from_ev(UnitSystem::Natural.energy_to_ev(v, &c), &c);
            assert_relative_eq!(back, v, max_relative = 1e-14);
        }
    }

    #[test]
    fn quantum_number_guards() {
        assert!(QuantumNumbers::new(0, 0, 0).is_ok());
        assert!(QuantumNumbers::new(3, 2, -2).is_ok());
        for (n, l, m) in [(-1, 0, 0), (0, -1, 0), (0, 1, 2), (2, 0, 1), (0, 2, -3)] {
            assert!(QuantumNumbers::new(n, l, m).is_err(), "({n},{l},{m}) accepted");
        }
    }

    #[test]
    fn constants_validation() {
        assert!(PhysicalConstants::new(0.0, 1.0, 1.0, 0.0).is_err());
        assert!(PhysicalConstants::new(1.5, 1.0, 1.0, 0.0).is_err());
        assert!(PhysicalConstants::new(0.007, -1.0, 1.0, 0.0).is_err());
        assert!(PhysicalConstants::new(0.007, 1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn breakdown_total_is_sum() {
        let b = EnergyBreakdown::new(1.0, 1e-10, -3e-20, 4e-21);
        assert_eq!(b.total, 1.0 + 1e-10 + -3e-20 + 4e-21);
        let u = EnergyBreakdown::unperturbed(0.5);
        assert_eq!(u.total, 0.5);
    }
}
