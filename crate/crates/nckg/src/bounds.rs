//! Inversion of the θ energy shifts: given a spectroscopic accuracy, the
//! largest θ whose predicted shift stays below it.
//!
//! Conventions: accuracies arrive in eV (or Hz, converted with E = hν),
//! the inversion runs in natural units, and results are reported in eV⁻²
//! and GeV⁻² together with the equivalent scale Λ = θ_max^{-1/2}.

use crate::core::{hz_to_ev, PhysicalConstants, QuantumNumbers};
use crate::error::{Error, Result};
use crate::kgnc;
use crate::ncfield::{angular_factor, AngularMode};
use crate::nrlimit::{self, HydrogenState};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundState {
    Relativistic(QuantumNumbers),
    NonRelativistic(HydrogenState),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundOrder {
    First,
    Second,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundRequest {
    pub state: BoundState,
    /// Accuracy in eV, > 0.
    pub accuracy_ev: f64,
    pub order: BoundOrder,
}

impl BoundRequest {
    pub fn new(state: BoundState, accuracy_ev: f64, order: BoundOrder) -> Result<Self> {
        if !(accuracy_ev > 0.0) {
            return Err(Error::Domain(format!(
                "accuracy must be > 0 eV, got {accuracy_ev}"
            )));
        }
        Ok(BoundRequest {
            state,
            accuracy_ev,
            order,
        })
    }

    /// Same request with the accuracy given as a frequency (E = hν).
    pub fn with_accuracy_hz(state: BoundState, hz: f64, order: BoundOrder, c: &PhysicalConstants) -> Result<Self> {
        BoundRequest::new(state, hz_to_ev(hz, c), order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominantTerm {
    FirstOrder,
    SecondOrder,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    pub theta_max_ev2: f64,
    pub theta_max_gev2: f64,
    /// Λ = θ_max^{-1/2} in GeV.
    pub lambda_gev: f64,
    pub dominant_term: DominantTerm,
    /// |ΔE(θ_max)|/accuracy − 1, the round-trip residual.
    pub round_trip_residual: f64,
}

/// Shift coefficients in natural units: ΔE(θ_nat) = c1·θ_nat + c2·θ_nat².
/// Only the requested pieces are evaluated so that convergence guards of
/// an unused order cannot block the inversion. The angular treatment is
/// the spherical average throughout.
fn shift_coefficients(
    state: &BoundState,
    c: &PhysicalConstants,
    need_c1: bool,
    need_c2: bool,
) -> Result<(f64, f64)> {
    let alpha = c.alpha;
    let af = angular_factor(AngularMode::SphericalAverage, 0, 0);
    let (m_l, e_factor, w) = match state {
        BoundState::Relativistic(q) => {
            let w = kgnc::radial_wavefunction(q, c)?;
            (q.m_l(), kgnc::unperturbed_energy(q, c)?, w)
        }
        BoundState::NonRelativistic(s) => {
            // Non-relativistic E-dependent term carries 2mₑ = 2.
            (s.m_l(), 2.0, nrlimit::hydrogen_wavefunction(s)?)
        }
    };
    let engine = |k: i32| kgnc::moment_closed_engine(w.n, w.effective_exponent, w.a, k);
    let c1 = if need_c1 && m_l != 0 {
        -(alpha * alpha * m_l as f64 / 2.0) * engine(4)?
    } else {
        0.0
    };
    let c2 = if need_c2 {
        -(alpha.powi(3) / 5.0) * e_factor * engine(5)?
            - (af / 16.0 + 0.2) * alpha.powi(4) * engine(6)?
    } else {
        0.0
    };
    Ok((c1, c2))
}

/// |ΔE| at θ (natural units) for a request's state, natural units.
fn shift_magnitude(c1: f64, c2: f64, theta_nat: f64) -> f64 {
    (c1 * theta_nat + c2 * theta_nat * theta_nat).abs()
}

/// Solve |ΔE(θ)| = accuracy for θ ≥ 0.
///
/// first:  θ = acc/|c1| (m_l = 0 → NoFirstOrderSensitivity)
/// second: θ = √(acc/|c2|)
/// both:   smallest positive root of |c1θ + c2θ²| = acc
pub fn theta_bound(req: &BoundRequest, c: &PhysicalConstants) -> Result<BoundResult> {
    let acc_nat = req.accuracy_ev / c.m_e;
    let (need_c1, need_c2) = match req.order {
        BoundOrder::First => (true, false),
        BoundOrder::Second => (false, true),
        BoundOrder::Both => (true, true),
    };
    let (c1, c2) = shift_coefficients(&req.state, c, need_c1, need_c2)?;
    if req.order == BoundOrder::First && c1 == 0.0 {
        return Err(Error::NoFirstOrderSensitivity);
    }

    let theta_nat = smallest_positive_root(c1, c2, acc_nat)?;
    // Newton polish on g(θ) = |c1θ + c2θ²| − acc.
    let theta_nat = polish(c1, c2, acc_nat, theta_nat);

    let dominant = if (c1 * theta_nat).abs() >= (c2 * theta_nat * theta_nat).abs() {
        DominantTerm::FirstOrder
    } else {
        DominantTerm::SecondOrder
    };
    let residual = (shift_magnitude(c1, c2, theta_nat) / acc_nat - 1.0).abs();

    let theta_ev2 = theta_nat / (c.m_e * c.m_e);
    let theta_gev2 = theta_ev2 * 1e18;
    Ok(BoundResult {
        theta_max_ev2: theta_ev2,
        theta_max_gev2: theta_gev2,
        lambda_gev: theta_gev2.powf(-0.5),
        dominant_term: dominant,
        round_trip_residual: residual,
    })
}

fn smallest_positive_root(c1: f64, c2: f64, acc: f64) -> Result<f64> {
    if c1 == 0.0 && c2 == 0.0 {
        return Err(Error::Domain(
            "shift vanishes identically; no bound exists".to_string(),
        ));
    }
    if c2 == 0.0 {
        return Ok(acc / c1.abs());
    }
    if c1 == 0.0 {
        return Ok((acc / c2.abs()).sqrt());
    }
    // Roots of c2θ² + c1θ ∓ acc = 0 for both signs of the modulus.
    let mut best = f64::INFINITY;
    for target in [acc, -acc] {
        let disc = c1 * c1 + 4.0 * c2 * target;
        if disc < 0.0 {
            continue;
        }
        let sq = disc.sqrt();
        for root in [(-c1 + sq) / (2.0 * c2), (-c1 - sq) / (2.0 * c2)] {
            if root > 0.0 && root < best {
                best = root;
            }
        }
    }
    if best.is_finite() {
        Ok(best)
    } else {
        Err(Error::RootFinding(
            "no positive root for the shift modulus equation".to_string(),
        ))
    }
}

fn polish(c1: f64, c2: f64, acc: f64, mut theta: f64) -> f64 {
    for _ in 0..8 {
        let s = c1 * theta + c2 * theta * theta;
        let g = s.abs() - acc;
        let dg = (c1 + 2.0 * c2 * theta) * s.signum();
        if dg == 0.0 {
            break;
        }
        let next = theta - g / dg;
        if !(next > 0.0) || !next.is_finite() {
            break;
        }
        if ((next - theta) / theta).abs() < 1e-15 {
            theta = next;
            break;
        }
        theta = next;
    }
    theta
}

/// |ΔE(θ_nat)| in eV for the request's state, used for round-trip tests.
pub fn shift_at(state: &BoundState, c: &PhysicalConstants, theta_nat: f64, order: BoundOrder) -> Result<f64> {
    let (need_c1, need_c2) = match order {
        BoundOrder::First => (true, false),
        BoundOrder::Second => (false, true),
        BoundOrder::Both => (true, true),
    };
    let (c1, c2) = shift_coefficients(state, c, need_c1, need_c2)?;
    Ok(shift_magnitude(c1, c2, theta_nat) * c.m_e)
}

/// Reference value the literature quotes for comparison, in GeV⁻².
pub const REFERENCE_BOUND_GEV2: f64 = 2.5e-7;
