//! Seiberg-Witten deformed Coulomb gauge field to O(θ²) and the
//! perturbation terms it induces in the radial equation.
//!
//! θ points along z (only θ₃ ≠ 0), so θ^{ij} = ε^{ij3}θ and
//! θ^{ij}x_j = θ(y, −x, 0). The vector deformation is purely azimuthal:
//! x⃗·â = 0 exactly.

use crate::core::PhysicalConstants;
use crate::error::{Error, Result};

/// Angular treatment of the (θ^{ij}x_j)² → θ²r²·A contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngularMode {
    /// ⟨sin²θ⟩ = 2/3, the spherical average; yields the 29/120 coefficient.
    SphericalAverage,
    /// Exact ⟨sin²θ⟩_{lm} = 1 − (2l²+2l−1−2m_l²)/((2l−1)(2l+3)).
    ExactLm,
}

/// A = ⟨1 − cos²θ⟩ in the chosen mode. Reduces to 2/3 at (l, m_l) = (0, 0).
pub fn angular_factor(mode: AngularMode, l: u32, m_l: i32) -> f64 {
    match mode {
        AngularMode::SphericalAverage => 2.0 / 3.0,
        AngularMode::ExactLm => {
            let lf = l as f64;
            let mf = m_l as f64;
            1.0 - (2.0 * lf * lf + 2.0 * lf - 1.0 - 2.0 * mf * mf)
                / ((2.0 * lf - 1.0) * (2.0 * lf + 3.0))
        }
    }
}

/// Evaluation point for the deformed fields and perturbation terms.
/// All lengths are natural (units of 1/mₑ); θ is carried in eV⁻² and
/// converted internally.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPoint {
    pub r: f64,
    /// Cartesian position; consistent with r when given.
    pub position: Option<[f64; 3]>,
    /// Energy entering the E-dependent term, natural units.
    pub energy: f64,
    /// L_z eigenvalue m_l for the first-order term.
    pub m_l: i32,
    /// Orbital l, needed only for the exact angular factor.
    pub l: Option<u32>,
}

impl FieldPoint {
    pub fn new(r: f64, position: Option<[f64; 3]>, energy: f64, m_l: i32, l: Option<u32>) -> Result<Self> {
        if !(r > 0.0) {
            return Err(Error::Domain(format!("field point needs r > 0, got {r}")));
        }
        if let Some(p) = position {
            let norm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            if ((norm - r) / r).abs() > 1e-12 {
                return Err(Error::Domain(format!(
                    "|position| = {norm} inconsistent with r = {r}"
                )));
            }
        }
        Ok(FieldPoint {
            r,
            position,
            energy,
            m_l,
            l,
        })
    }
}

/// Deformed scalar potential â₀ = −e/r + e⁵θ²/(10 r⁵), e = √α.
/// The θ² coefficient carries the (θ^{ij})² = 2θ² contraction.
pub fn a0_deformed(p: &FieldPoint, c: &PhysicalConstants) -> f64 {
    let e = c.alpha.sqrt();
    let th = c.theta_natural();
    -e / p.r + e.powi(5) * th * th / (10.0 * p.r.powi(5))
}

/// Deformed vector potential â = (e³θ/(4r⁴))·(y, −x, 0).
/// Requires a full position; returns Domain error without one.
pub fn ai_deformed(p: &FieldPoint, c: &PhysicalConstants) -> Result<[f64; 3]> {
    let pos = p.position.ok_or_else(|| {
        Error::Domain("vector potential needs a cartesian position".to_string())
    })?;
    let e = c.alpha.sqrt();
    let th = c.theta_natural();
    let pref = e.powi(3) * th / (4.0 * p.r.powi(4));
    Ok([pref * pos[1], -pref * pos[0], 0.0])
}

/// The four perturbation terms of the radial equation, each evaluated
/// pointwise at r (natural units):
///
/// theta_l       = −(α²/(2r⁴))·θ·m_l
/// e_theta2      = −(α³/(5r⁵))·E·θ²
/// x_contraction = −(α⁴A/(16r⁶))·θ²   (from (θ^{ij}x_j)² → θ²r²A)
/// r6            = −(α⁴/(5r⁶))·θ²
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbationTerms {
    pub theta_l: f64,
    pub e_theta2: f64,
    pub x_contraction: f64,
    pub r6: f64,
}

impl PerturbationTerms {
    pub fn sum(&self) -> f64 {
        self.theta_l + self.e_theta2 + self.x_contraction + self.r6
    }
}

pub fn perturbation_terms(
    p: &FieldPoint,
    c: &PhysicalConstants,
    mode: AngularMode,
) -> Result<PerturbationTerms> {
    let th = c.theta_natural();
    let a = c.alpha;
    let r = p.r;
    let af = match mode {
        AngularMode::SphericalAverage => angular_factor(mode, 0, 0),
        AngularMode::ExactLm => {
            let l = p.l.ok_or_else(|| {
                Error::Domain("exact angular factor needs l at the field point".to_string())
            })?;
            if p.m_l.unsigned_abs() > l {
                return Err(Error::Domain(format!(
                    "|m_l| = {} > l = {l} at field point",
                    p.m_l.unsigned_abs()
                )));
            }
            angular_factor(mode, l, p.m_l)
        }
    };
    Ok(PerturbationTerms {
        theta_l: -(a * a / (2.0 * r.powi(4))) * th * p.m_l as f64,
        e_theta2: -(a.powi(3) / (5.0 * r.powi(5))) * p.energy * th * th,
        x_contraction: -(a.powi(4) * af / (16.0 * r.powi(6))) * th * th,
        r6: -(a.powi(4) / (5.0 * r.powi(6))) * th * th,
    })
}
