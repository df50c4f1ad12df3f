//! Non-relativistic (hydrogen) picture: Bohr energies, hydrogenic radial
//! wavefunctions, their inverse-power moments and θ shifts, plus the
//! consistency measure tying the relativistic spectrum to the Bohr limit.
//!
//! Natural units throughout; the Bohr radius is 1/α when mₑ = 1.

use crate::core::{EnergyBreakdown, MomentComparison, PhysicalConstants, QuantumNumbers};
use crate::error::{Error, Result};
use crate::kgnc::{self, RadialWavefunction, WavefunctionKind};
use crate::ncfield::{angular_factor, AngularMode};
use crate::quadrature;

/// Hydrogen state labeled by the principal quantum number n_p ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HydrogenState {
    n_principal: u32,
    l: u32,
    m_l: i32,
    /// a_B = 1/α in natural units.
    pub bohr_radius: f64,
}

impl HydrogenState {
    pub fn new(n_principal: i64, l: i64, m_l: i64, c: &PhysicalConstants) -> Result<Self> {
        if n_principal < 1 {
            return Err(Error::Domain(format!(
                "principal quantum number n_p = {n_principal} < 1"
            )));
        }
        if l < 0 || l > n_principal - 1 {
            return Err(Error::Domain(format!(
                "hydrogen needs 0 <= l <= n_p-1, got l = {l}, n_p = {n_principal}"
            )));
        }
        if m_l.abs() > l {
            return Err(Error::Domain(format!("|m_l| = {} > l = {l}", m_l.abs())));
        }
        Ok(HydrogenState {
            n_principal: n_principal as u32,
            l: l as u32,
            m_l: m_l as i32,
            bohr_radius: 1.0 / c.alpha,
        })
    }

    pub fn n_principal(&self) -> u32 {
        self.n_principal
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m_l(&self) -> i32 {
        self.m_l
    }

    /// Radial node count n_r = n_p − l − 1.
    pub fn n_radial(&self) -> u32 {
        self.n_principal - self.l - 1
    }
}

/// ε_{n_p} = −α²/(2 n_p²), natural units (rest mass excluded).
pub fn bohr_energy(s: &HydrogenState, c: &PhysicalConstants) -> f64 {
    let np = s.n_principal as f64;
    -c.alpha * c.alpha / (2.0 * np * np)
}

/// Normalized hydrogenic radial wavefunction: the shared descriptor with
/// integer exponent l and decay constant 1/(a_B·n_p).
pub fn hydrogen_wavefunction(s: &HydrogenState) -> Result<RadialWavefunction> {
    let a = 1.0 / (s.bohr_radius * s.n_principal as f64);
    RadialWavefunction::normalized(WavefunctionKind::Hydrogenic, s.n_radial(), s.l as f64, a)
}

/// Hydrogenic f(4), f(5), f(6) exactly as printed, with n the principal
/// quantum number and a the Bohr radius.
pub fn hyd_moment_paper_fidelity(s: &HydrogenState, k: i32) -> Option<f64> {
    let n = s.n_principal as f64;
    let l = s.l as f64;
    let a = s.bohr_radius;
    let value = match k {
        4 => {
            4.0 * (3.0 * n * n - l * (l + 1.0))
                / (a.powi(4)
                    * n.powi(5)
                    * l
                    * (l + 1.0)
                    * (2.0 * l - 1.0)
                    * (2.0 * l + 1.0)
                    * (2.0 * l + 3.0))
        }
        5 => {
            4.0 / (3.0 * a.powi(5) * n.powi(5) * (l - 1.0) * l * (l + 1.0) * (l + 2.0)
                * (2.0 * l + 1.0))
                * (-1.0
                    + 5.0 * (3.0 * n * n - l * (l + 1.0))
                        / ((2.0 * l - 1.0) * (2.0 * l + 3.0)))
        }
        6 => {
            4.0 / (a.powi(6) * n.powi(5) * l * (l + 1.0) * (2.0 * l - 3.0) * (2.0 * l + 1.0)
                * (2.0 * l + 5.0))
                * (-7.0 / (3.0 * (l - 1.0) * (l + 2.0))
                    - 3.0 * (3.0 * n * n - l * (l + 1.0)) / (n * n * (2.0 * l - 1.0) * (2.0 * l + 3.0))
                    + 35.0 * (3.0 * n * n - l * (l + 1.0))
                        / (3.0
                            * (l - 1.0)
                            * (l + 2.0)
                            * (2.0 * l - 1.0)
                            * (2.0 * l + 1.0)
                            * (2.0 * l + 3.0)))
        }
        _ => return None,
    };
    value.is_finite().then_some(value)
}

/// Closed-form hydrogenic ⟨r^-k⟩ next to the quadrature oracle and the
/// verbatim printed formula. Diverges unless k < 2l+3.
pub fn hydrogen_moment_closed(
    s: &HydrogenState,
    c: &PhysicalConstants,
    k: i32,
) -> Result<MomentComparison> {
    let _ = c;
    let w = hydrogen_wavefunction(s)?;
    let closed = kgnc::moment_closed_engine(w.n, w.effective_exponent, w.a, k)?;
    let oracle = quadrature::radial_moment_oracle(&w, k)?;
    let paper = hyd_moment_paper_fidelity(s, k);
    Ok(MomentComparison::new(k, closed, oracle, paper))
}

/// Non-relativistic ΔE^nc: same structure as the relativistic shift with
/// E⁰f(5) replaced by 2mₑf(5) (2 in natural units). The e0 field is zero.
pub fn nr_energy_shift(
    s: &HydrogenState,
    c: &PhysicalConstants,
    mode: AngularMode,
) -> Result<EnergyBreakdown> {
    let theta = c.theta_natural();
    if theta == 0.0 {
        return Ok(EnergyBreakdown::new(0.0, 0.0, 0.0, 0.0));
    }
    let alpha = c.alpha;
    let w = hydrogen_wavefunction(s)?;
    let engine = |k: i32| kgnc::moment_closed_engine(w.n, w.effective_exponent, w.a, k);

    let shift1 = if s.m_l == 0 {
        0.0
    } else {
        -(alpha * alpha * s.m_l as f64 / 2.0) * engine(4)? * theta
    };
    let shift2_f5 = -(alpha.powi(3) / 5.0) * 2.0 * engine(5)? * theta * theta;
    let af = angular_factor(mode, s.l, s.m_l);
    let shift2_f6 = -(af / 16.0 + 0.2) * alpha.powi(4) * engine(6)? * theta * theta;

    Ok(EnergyBreakdown::new(0.0, shift1, shift2_f5, shift2_f6))
}

/// ε_{n_p} + ΔE^nc, natural units (rest mass excluded from e0).
pub fn nr_total_energy(
    s: &HydrogenState,
    c: &PhysicalConstants,
    mode: AngularMode,
) -> Result<EnergyBreakdown> {
    let shifts = nr_energy_shift(s, c, mode)?;
    Ok(EnergyBreakdown::new(
        bohr_energy(s, c),
        shifts.shift_theta1,
        shifts.shift_theta2_f5,
        shifts.shift_theta2_f6,
    ))
}

/// |(E⁰_{n,l} − mₑ)/ε_{n_p} − 1| with n_p = n + l + 1: how far the exact
/// binding energy sits from the Bohr value, relatively. O(α²) for small α.
pub fn nonrel_consistency(q: &QuantumNumbers, c: &PhysicalConstants) -> Result<f64> {
    let e0 = kgnc::unperturbed_energy(q, c)?;
    let s = HydrogenState::new(q.n_principal() as i64, q.l() as i64, 0, c)?;
    let eps = bohr_energy(&s, c);
    Ok(((e0 - 1.0) / eps - 1.0).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn consts() -> PhysicalConstants {
        PhysicalConstants::default().with_alpha(1.0 / 137.035999).unwrap()
    }

    #[test]
    fn state_guards() {
        let c = consts();
        assert!(HydrogenState::new(1, 0, 0, &c).is_ok());
        assert!(HydrogenState::new(0, 0, 0, &c).is_err());
        assert!(HydrogenState::new(2, 2, 0, &c).is_err());
        assert!(HydrogenState::new(3, 1, 2, &c).is_err());
        let s = HydrogenState::new(3, 1, -1, &c).unwrap();
        assert_eq!(s.n_radial(), 1);
        assert_relative_eq!(s.bohr_radius, 137.035999, max_relative = 1e-12);
    }

    #[test]
    fn bohr_energy_in_ev() {
        let c = consts();
        let s1 = HydrogenState::new(1, 0, 0, &c).unwrap();
        let s2 = HydrogenState::new(2, 1, 0, &c).unwrap();
        assert_relative_eq!(
            crate::core::to_ev(bohr_energy(&s1, &c), &c),
            -13.6057,
            max_relative = 1e-4
        );
        assert_relative_eq!(bohr_energy(&s2, &c), bohr_energy(&s1, &c) / 4.0, max_relative = 1e-14);
    }

    #[test]
    fn wavefunction_normalization() {
        let c = consts();
        for np in 1..=5i64 {
            for l in 0..np {
                let s = HydrogenState::new(np, l, 0, &c).unwrap();
                let w = hydrogen_wavefunction(&s).unwrap();
                let norm = quadrature::radial_moment_oracle(&w, 0).unwrap();
                assert_relative_eq!(norm.value, 1.0, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn ground_state_closed_form() {
        // R_{10}(r) = 2 a_B^{-3/2} r e^{-r/a_B} (our convention keeps the
        // extra factor r relative to the usual R(r)).
        let c = consts();
        let s = HydrogenState::new(1, 0, 0, &c).unwrap();
        let w = hydrogen_wavefunction(&s).unwrap();
        let ab = s.bohr_radius;
        for &r in &[0.1 * ab, ab, 3.7 * ab] {
            let expect = 2.0 * ab.powf(-1.5) * r * (-r / ab).exp();
            assert_relative_eq!(w.eval(r), expect, max_relative = 1e-12);
        }
    }

    #[test]
    fn moment_2p_f4_standard_result() {
        // (n_p, l) = (2, 1): ⟨r⁻⁴⟩ = 1/(24 a_B⁴).
        let c = consts();
        let s = HydrogenState::new(2, 1, 0, &c).unwrap();
        let m = hydrogen_moment_closed(&s, &c, 4).unwrap();
        let expect = 1.0 / (24.0 * s.bohr_radius.powi(4));
        assert_relative_eq!(m.closed_form, expect, max_relative = 1e-12);
        assert!(m.rel_discrepancy <= 1e-10);
        assert_relative_eq!(m.paper_fidelity.unwrap(), expect, max_relative = 1e-10);
    }

    #[test]
    fn moment_divergence_guard() {
        let c = consts();
        let s10 = HydrogenState::new(1, 0, 0, &c).unwrap();
        assert!(hydrogen_moment_closed(&s10, &c, 4).is_err());
        let s21 = HydrogenState::new(2, 1, 0, &c).unwrap();
        assert!(hydrogen_moment_closed(&s21, &c, 5).is_err());
        let s32 = HydrogenState::new(3, 2, 0, &c).unwrap();
        assert!(hydrogen_moment_closed(&s32, &c, 6).is_ok());
    }

    #[test]
    fn kramers_pasternack_chain() {
        // (s+1)/n_p²·⟨r^s⟩ − (2s+1)a_B⟨r^{s-1}⟩ + (s/4)((2l+1)²−s²)a_B²⟨r^{s-2}⟩ = 0
        // with s = −1 and s = −2 ties ⟨r⁻¹⟩..⟨r⁻⁴⟩ together.
        let c = consts();
        let st = HydrogenState::new(3, 2, 0, &c).unwrap();
        let w = hydrogen_wavefunction(&st).unwrap();
        let mom = |k: i32| quadrature::radial_moment_oracle(&w, k).unwrap().value;
        let ab = st.bohr_radius;
        let np = st.n_principal() as f64;
        let l = st.l() as f64;
        let r = [mom(1), mom(2), mom(3), mom(4)];
        for s in [-1.0f64, -2.0] {
            let idx = (-s) as usize; // ⟨r^s⟩ = r[idx-1]
            let lhs = (s + 1.0) / (np * np) * r[idx - 1] - (2.0 * s + 1.0) * ab * r[idx]
                + (s / 4.0) * ((2.0 * l + 1.0).powi(2) - s * s) * ab * ab * r[idx + 1];
            let scale = ab * r[idx];
            assert!((lhs / scale).abs() < 1e-9, "s = {s}: residual {}", lhs / scale);
        }
    }

    #[test]
    fn printed_hydrogenic_f4_matches_oracle() {
        let c = consts();
        for (np, l) in [(2i64, 1i64), (3, 1), (3, 2), (4, 2)] {
            let s = HydrogenState::new(np, l, 0, &c).unwrap();
            let m = hydrogen_moment_closed(&s, &c, 4).unwrap();
            let pd = m.paper_rel_discrepancy().unwrap();
            assert!(pd <= 1e-9, "({np},{l}): printed f(4) off by {pd}");
        }
    }

    #[test]
    fn nr_shift_structure() {
        let c = consts().with_theta(1e-20).unwrap();
        let s = HydrogenState::new(4, 3, 2, &c).unwrap();
        let b = nr_energy_shift(&s, &c, AngularMode::SphericalAverage).unwrap();
        assert!(b.shift_theta1 < 0.0);
        assert!(b.shift_theta2_f5 < 0.0);
        assert!(b.shift_theta2_f6 < 0.0);
        // m_l = 0 kills the first-order term only.
        let s0 = HydrogenState::new(4, 3, 0, &c).unwrap();
        let b0 = nr_energy_shift(&s0, &c, AngularMode::SphericalAverage).unwrap();
        assert_eq!(b0.shift_theta1, 0.0);
        assert_eq!(b0.shift_theta2_f5, b.shift_theta2_f5);
    }

    #[test]
    fn consistency_is_order_alpha_squared() {
        let c = consts();
        for (n, l) in [(0i64, 0i64), (1, 0), (0, 1), (2, 1), (1, 3)] {
            let q = QuantumNumbers::new(n, l, 0).unwrap();
            let dev = nonrel_consistency(&q, &c).unwrap();
            assert!(
                dev <= 2.0 * c.alpha * c.alpha,
                "({n},{l}): deviation {dev} exceeds 2α²"
            );
        }
        // The deviation vanishes as α → 0.
        let tiny = PhysicalConstants::default().with_alpha(1e-4).unwrap();
        let q = QuantumNumbers::new(1, 1, 0).unwrap();
        assert!(nonrel_consistency(&q, &tiny).unwrap() < 1e-7);
    }
}
