//! Randomized invariants over the public API.

use nckg::bounds::{self, BoundOrder, BoundRequest, BoundState};
use nckg::core::{hz_to_ev, PhysicalConstants, QuantumNumbers};
use nckg::kgnc;
use nckg::ncfield::{angular_factor, AngularMode};
use nckg::nrlimit::{self, HydrogenState};
use nckg::output;
use proptest::prelude::*;

fn constants(alpha: f64) -> PhysicalConstants {
    PhysicalConstants::default().with_alpha(alpha).unwrap()
}

proptest! {
    #[test]
    fn energy_bounded_and_monotone(
        alpha in 0.01f64..0.45,
        n in 0i64..10,
        l in 0i64..6,
    ) {
        let c = constants(alpha);
        let q = QuantumNumbers::new(n, l, 0).unwrap();
        let e = kgnc::unperturbed_energy(&q, &c).unwrap();
        prop_assert!(e > 0.0 && e < 1.0);
        let q_up = QuantumNumbers::new(n + 1, l, 0).unwrap();
        prop_assert!(kgnc::unperturbed_energy(&q_up, &c).unwrap() > e);
        let id = kgnc::unperturbed_energy_identity(&q, &c).unwrap();
        prop_assert!(((e - id) / id).abs() < 1e-12);
    }

    #[test]
    fn nu_exponent_bracketed(alpha in 0.0f64..0.49, l in 0u32..8) {
        let nu = kgnc::nu_exponent(l, alpha).unwrap();
        prop_assert!(nu <= l as f64);
        prop_assert!(nu > l as f64 - 0.5);
    }

    #[test]
    fn convergent_moments_positive(
        n in 0i64..4,
        l in 1i64..5,
        k in 4i32..7,
    ) {
        let c = constants(1.0 / 137.035999);
        let q = QuantumNumbers::new(n, l, 0).unwrap();
        let nu = kgnc::nu_exponent(l as u32, c.alpha).unwrap();
        match kgnc::moment_closed(&q, &c, k) {
            Ok(m) => {
                prop_assert!(m.closed_form > 0.0);
                prop_assert!(m.rel_discrepancy <= 1e-9);
            }
            Err(nckg::Error::DivergentMoment(_)) => {
                prop_assert!(2.0 * nu + 2.0 - k as f64 <= -1.0);
            }
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error: {e}"))),
        }
    }

    #[test]
    fn hydrogen_moments_decrease_with_np(np in 2i64..6, k in 4i32..5) {
        // Higher principal quantum number pushes the density outward, so
        // <r^-4> must decrease (fixed l = 1).
        let c = constants(1.0 / 137.035999);
        let lo = HydrogenState::new(np, 1, 0, &c).unwrap();
        let hi = HydrogenState::new(np + 1, 1, 0, &c).unwrap();
        let m_lo = nrlimit::hydrogen_moment_closed(&lo, &c, k).unwrap();
        let m_hi = nrlimit::hydrogen_moment_closed(&hi, &c, k).unwrap();
        prop_assert!(m_hi.closed_form < m_lo.closed_form);
    }

    #[test]
    fn angular_factor_in_range(l in 0i32..8, seed in 0i32..17) {
        let m = if l == 0 { 0 } else { (seed % (2 * l + 1)) - l };
        let a = angular_factor(AngularMode::ExactLm, l as u32, m);
        prop_assert!(a >= 0.0 && a <= 2.0);
        // Symmetric in the sign of m.
        prop_assert!((a - angular_factor(AngularMode::ExactLm, l as u32, -m)).abs() < 1e-15);
    }

    #[test]
    fn first_order_shift_is_linear_in_theta(scale in 1.0f64..100.0) {
        let base_theta = 1e-27;
        let c1 = constants(1.0 / 137.035999).with_theta(base_theta).unwrap();
        let c2 = constants(1.0 / 137.035999).with_theta(base_theta * scale).unwrap();
        let q = QuantumNumbers::new(0, 2, 1).unwrap();
        let s1 = kgnc::energy_shift_nc(&q, &c1, AngularMode::SphericalAverage).unwrap();
        let s2 = kgnc::energy_shift_nc(&q, &c2, AngularMode::SphericalAverage).unwrap();
        prop_assert!((s2.shift_theta1 / s1.shift_theta1 / scale - 1.0).abs() < 1e-12);
        prop_assert!((s2.shift_theta2_f5 / s1.shift_theta2_f5 / (scale * scale) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bound_monotone_in_accuracy(hz_lo in 1.0f64..1e5, factor in 1.5f64..100.0) {
        let c = constants(1.0 / 137.035999);
        let s = HydrogenState::new(2, 1, 1, &c).unwrap();
        let st = BoundState::NonRelativistic(s);
        let lo = BoundRequest::new(st, hz_to_ev(hz_lo, &c), BoundOrder::First).unwrap();
        let hi = BoundRequest::new(st, hz_to_ev(hz_lo * factor, &c), BoundOrder::First).unwrap();
        let b_lo = bounds::theta_bound(&lo, &c).unwrap();
        let b_hi = bounds::theta_bound(&hi, &c).unwrap();
        prop_assert!(b_hi.theta_max_ev2 > b_lo.theta_max_ev2);
        prop_assert!(b_lo.round_trip_residual <= 1e-10);
    }

    #[test]
    fn float_formatting_round_trips(v in proptest::num::f64::NORMAL) {
        let s = output::fmt_float(v);
        prop_assert_eq!(s.parse::<f64>().unwrap(), v);
    }

    #[test]
    fn quantum_number_guard(n in -3i64..5, l in -3i64..5, m in -6i64..7) {
        let valid = n >= 0 && l >= 0 && m.abs() <= l;
        prop_assert_eq!(QuantumNumbers::new(n, l, m).is_ok(), valid);
    }

    #[test]
    fn hz_conversion_linear(hz in 1.0f64..1e12, factor in 2.0f64..10.0) {
        let c = PhysicalConstants::default();
        let a = hz_to_ev(hz, &c);
        let b = hz_to_ev(hz * factor, &c);
        prop_assert!((b / a / factor - 1.0).abs() < 1e-12);
    }
}
