//! Self-verification: every module's key invariants bundled into one
//! runnable suite. Each check reports a name, pass/fail, and a measured
//! figure so failures are diagnosable from the report alone.

use crate::bounds::{self, BoundOrder, BoundRequest, BoundState};
use crate::core::{hz_to_ev, PhysicalConstants, QuantumNumbers};
use crate::error::Error;
use crate::kgnc;
use crate::ncfield::{self, AngularMode, FieldPoint};
use crate::nrlimit::{self, HydrogenState};
use crate::nu;
use crate::quadrature;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Check {
        Check {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

/// Run the full suite. `warnings` collects expected printed-formula
/// discrepancies; they do not fail any check.
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run_all() -> VerifyReport {
    let mut checks = Vec::new();
    let mut warnings = Vec::new();
    checks.push(check_energy_identity());
    checks.push(check_nu_rootfind());
    checks.push(check_normalization());
    checks.push(check_moment_oracles());
    checks.push(check_printed_formula_audit(&mut warnings));
    checks.push(check_shift_reconstruction());
    checks.push(check_nonrel_limit());
    checks.push(check_splitting_structure());
    checks.push(check_bound_round_trip(&mut warnings));
    VerifyReport { checks, warnings }
}

fn check_energy_identity() -> Check {
    let mut worst: f64 = 0.0;
    for &alpha in &[1.0 / 137.035999, 0.2] {
        let c = PhysicalConstants::default().with_alpha(alpha).unwrap();
        for n in 0..=8i64 {
            for l in 0..=5i64 {
                let q = QuantumNumbers::new(n, l, 0).unwrap();
                let e = kgnc::unperturbed_energy(&q, &c).unwrap();
                let e_id = kgnc::unperturbed_energy_identity(&q, &c).unwrap();
                worst = worst.max(((e - e_id) / e_id).abs());
            }
        }
    }
    Check::new(
        "energy_closed_form_identity",
        worst <= 1e-12,
        format!("max relative deviation {worst:.3e} (tol 1e-12)"),
    )
}

fn check_nu_rootfind() -> Check {
    let mut worst: f64 = 0.0;
    for &alpha in &[1.0 / 137.035999, 0.2] {
        let c = PhysicalConstants::default().with_alpha(alpha).unwrap();
        for n in 0..=8u32 {
            for l in 0..=5u32 {
                let q = QuantumNumbers::new(n as i64, l as i64, 0).unwrap();
                let e_closed = kgnc::unperturbed_energy(&q, &c).unwrap();
                // Seed deliberately off the exact value.
                let seed = e_closed * (1.0 - 2e-4);
                match nu::kg_energy_rootfind(n, l, alpha, seed) {
                    Ok(e_root) => worst = worst.max(((e_root - e_closed) / e_closed).abs()),
                    Err(e) => {
                        return Check::new(
                            "nu_rootfind_cross_check",
                            false,
                            format!("root-find failed at (n={n}, l={l}, alpha={alpha}): {e}"),
                        )
                    }
                }
            }
        }
    }
    Check::new(
        "nu_rootfind_cross_check",
        worst <= 1e-10,
        format!("max relative deviation {worst:.3e} (tol 1e-10)"),
    )
}

fn check_normalization() -> Check {
    let c = PhysicalConstants::default().with_alpha(1.0 / 137.035999).unwrap();
    let mut worst: f64 = 0.0;
    for n in 0..=3i64 {
        for l in 0..=3i64 {
            let q = QuantumNumbers::new(n, l, 0).unwrap();
            let w = kgnc::radial_wavefunction(&q, &c).unwrap();
            let r = quadrature::radial_moment_oracle(&w, 0).unwrap();
            worst = worst.max((r.value - 1.0).abs());
        }
    }
    for np in 1..=5i64 {
        for l in 0..np {
            let s = HydrogenState::new(np, l, 0, &c).unwrap();
            let w = nrlimit::hydrogen_wavefunction(&s).unwrap();
            let r = quadrature::radial_moment_oracle(&w, 0).unwrap();
            worst = worst.max((r.value - 1.0).abs());
        }
    }
    Check::new(
        "wavefunction_normalization",
        worst <= 1e-9,
        format!("max |norm - 1| = {worst:.3e} (tol 1e-9)"),
    )
}

fn check_moment_oracles() -> Check {
    let c = PhysicalConstants::default().with_alpha(1.0 / 137.035999).unwrap();
    let mut worst: f64 = 0.0;
    let mut divergent_ok = true;
    for n in 0..=4i64 {
        for l in 0..=4i64 {
            let q = QuantumNumbers::new(n, l, 0).unwrap();
            let nu_exp = kgnc::nu_exponent(l as u32, c.alpha).unwrap();
            for k in [4, 5, 6] {
                let convergent = 2.0 * nu_exp + 2.0 - k as f64 > -1.0;
                match kgnc::moment_closed(&q, &c, k) {
                    Ok(m) if convergent => worst = worst.max(m.rel_discrepancy),
                    Ok(_) => divergent_ok = false,
                    Err(Error::DivergentMoment(_)) if !convergent => {}
                    Err(_) => divergent_ok = false,
                }
            }
            if n < 4 && l < 4 {
                let np = n + l + 1;
                let s = HydrogenState::new(np, l, 0, &c).unwrap();
                for k in [4i32, 5, 6] {
                    let convergent = 2 * l + 2 - k as i64 > -1;
                    match nrlimit::hydrogen_moment_closed(&s, &c, k) {
                        Ok(m) if convergent => worst = worst.max(m.rel_discrepancy),
                        Ok(_) => divergent_ok = false,
                        Err(Error::DivergentMoment(_)) if !convergent => {}
                        Err(_) => divergent_ok = false,
                    }
                }
            }
        }
    }
    // Standard-result spot check: (n_p=2, l=1), two independent routes.
    let s21 = HydrogenState::new(2, 1, 0, &c).unwrap();
    let m = nrlimit::hydrogen_moment_closed(&s21, &c, 4).unwrap();
    let expect = 1.0 / (24.0 * s21.bohr_radius.powi(4));
    let spot = ((m.closed_form - expect) / expect).abs().max(m.rel_discrepancy);
    worst = worst.max(spot);
    Check::new(
        "moment_oracle_equivalence",
        worst <= 1e-10 && divergent_ok,
        format!("max oracle discrepancy {worst:.3e} (tol 1e-10); divergence guards honored: {divergent_ok}"),
    )
}

fn check_printed_formula_audit(warnings: &mut Vec<String>) -> Check {
    let c = PhysicalConstants::default().with_alpha(1.0 / 137.035999).unwrap();
    let mut engine_worst: f64 = 0.0;
    let mut audited = 0;
    let q = QuantumNumbers::new(0, 2, 0).unwrap();
    if let Ok(m) = kgnc::moment_closed(&q, &c, 6) {
        engine_worst = engine_worst.max(m.rel_discrepancy);
        if let Some(pd) = m.paper_rel_discrepancy() {
            audited += 1;
            if pd > 1e-9 {
                warnings.push(format!(
                    "printed relativistic k=6 formula deviates from oracle by {pd:.3e} at (n=0, l=2); engine value retained"
                ));
            }
        }
    }
    let s = HydrogenState::new(3, 2, 0, &c).unwrap();
    if let Ok(m) = nrlimit::hydrogen_moment_closed(&s, &c, 6) {
        engine_worst = engine_worst.max(m.rel_discrepancy);
        if let Some(pd) = m.paper_rel_discrepancy() {
            audited += 1;
            if pd > 1e-9 {
                warnings.push(format!(
                    "printed hydrogenic k=6 formula deviates from oracle by {pd:.3e} at (n_p=3, l=2); engine value retained"
                ));
            }
        }
    }
    Check::new(
        "printed_formula_audit",
        engine_worst <= 1e-10 && audited == 2,
        format!(
            "engine-vs-oracle {engine_worst:.3e} (tol 1e-10); {audited}/2 printed k=6 formulas audited"
        ),
    )
}

fn check_shift_reconstruction() -> Check {
    // 29/120 = (2/3)/16 + 1/5 exactly in binary.
    if (2.0 / 3.0) / 16.0 + 0.2 != 29.0 / 120.0 {
        return Check::new(
            "shift_reconstruction",
            false,
            "coefficient identity (2/3)/16 + 1/5 = 29/120 failed".to_string(),
        );
    }
    let c = PhysicalConstants::default()
        .with_alpha(1.0 / 137.035999)
        .unwrap()
        .with_theta(1e-20)
        .unwrap();
    let mode = AngularMode::SphericalAverage;
    let mut worst: f64 = 0.0;
    for n in 0..=2i64 {
        for l in 2..=3i64 {
            for ml in [0i64, 1, l] {
                let q = QuantumNumbers::new(n, l, ml).unwrap();
                let w = kgnc::radial_wavefunction(&q, &c).unwrap();
                let e0 = kgnc::unperturbed_energy(&q, &c).unwrap();
                let expect = kgnc::energy_shift_nc(&q, &c, mode).unwrap();
                // Term-by-term expectation values over R(r)².
                let quad = |pick: &dyn Fn(&ncfield::PerturbationTerms) -> f64| -> f64 {
                    quadrature::integrate_halfline(
                        |r| {
                            let p = FieldPoint::new(r, None, e0, q.m_l() as i32, Some(q.l()))
                                .unwrap();
                            let t = ncfield::perturbation_terms(&p, &c, mode).unwrap();
                            w.eval(r).powi(2) * pick(&t)
                        },
                        1e-12,
                    )
                    .map(|r| r.value)
                    .unwrap_or(f64::NAN)
                };
                let t1 = quad(&|t| t.theta_l);
                let t2 = quad(&|t| t.e_theta2);
                let t34 = quad(&|t| t.x_contraction + t.r6);
                let scale = expect.total.abs().max(1e-300);
                let dev = ((t1 - expect.shift_theta1).abs()
                    + (t2 - expect.shift_theta2_f5).abs()
                    + (t34 - expect.shift_theta2_f6).abs())
                    / scale;
                worst = worst.max(dev);
            }
        }
    }
    Check::new(
        "shift_reconstruction",
        worst <= 1e-8,
        format!("max term-by-term reconstruction deviation {worst:.3e} (tol 1e-8)"),
    )
}

fn check_nonrel_limit() -> Check {
    let c = PhysicalConstants::default().with_alpha(1.0 / 137.035999).unwrap();
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for np in 1..=4i64 {
        for l in 0..np {
            let n = np - l - 1;
            let q = QuantumNumbers::new(n, l, 0).unwrap();
            let dev = nrlimit::nonrel_consistency(&q, &c).unwrap();
            worst = worst.max(dev);
            if dev > 2.0 * c.alpha * c.alpha {
                ok = false;
            }
        }
    }
    let tiny = PhysicalConstants::default().with_alpha(1e-4).unwrap();
    let q = QuantumNumbers::new(1, 1, 0).unwrap();
    let dev_tiny = nrlimit::nonrel_consistency(&q, &tiny).unwrap();
    Check::new(
        "nonrelativistic_limit",
        ok && dev_tiny <= 1e-7,
        format!("max deviation {worst:.3e} (tol 2 alpha^2); at alpha=1e-4: {dev_tiny:.3e} (tol 1e-7)"),
    )
}

fn check_splitting_structure() -> Check {
    let c = PhysicalConstants::default()
        .with_alpha(1.0 / 137.035999)
        .unwrap()
        .with_theta(1e-25)
        .unwrap();
    let mode = AngularMode::SphericalAverage;
    let l = 2i64;
    let mut totals = Vec::new();
    let mut second_orders = Vec::new();
    for ml in -l..=l {
        let q = QuantumNumbers::new(0, l, ml).unwrap();
        let b = kgnc::energy_shift_nc(&q, &c, mode).unwrap();
        totals.push(b.shift_theta1);
        second_orders.push(b.shift_theta2_f5 + b.shift_theta2_f6);
    }
    let mut ok = totals.len() == 5;
    let mut worst: f64 = 0.0;
    // Odd in m_l.
    for i in 0..totals.len() {
        let j = totals.len() - 1 - i;
        worst = worst.max((totals[i] + totals[j]).abs() / totals[0].abs().max(1e-300));
    }
    // Equidistant with the predicted spacing.
    let q0 = QuantumNumbers::new(0, l, 0).unwrap();
    let f4 = kgnc::moment_closed(&q0, &c, 4).unwrap().closed_form;
    let predicted = 0.5 * c.alpha * c.alpha * f4 * c.theta_natural();
    for i in 0..totals.len() - 1 {
        let spacing = totals[i] - totals[i + 1];
        worst = worst.max(((spacing - predicted) / predicted).abs());
    }
    // Second order m_l-independent under the spherical average.
    for v in &second_orders {
        worst = worst.max(((v - second_orders[0]) / second_orders[0]).abs());
    }
    ok = ok && worst <= 1e-10;
    Check::new(
        "splitting_structure",
        ok,
        format!("2l+1 lines, max structural deviation {worst:.3e} (tol 1e-10)"),
    )
}

fn check_bound_round_trip(warnings: &mut Vec<String>) -> Check {
    let c = PhysicalConstants::default().with_alpha(1.0 / 137.035999).unwrap();
    let s = HydrogenState::new(2, 1, 1, &c).unwrap();
    let st = BoundState::NonRelativistic(s);
    let req = match BoundRequest::with_accuracy_hz(st, 14.0e3, BoundOrder::First, &c) {
        Ok(r) => r,
        Err(e) => return Check::new("bound_round_trip", false, format!("request failed: {e}")),
    };
    match bounds::theta_bound(&req, &c) {
        Ok(res) => {
            let ratio = res.theta_max_gev2 / bounds::REFERENCE_BOUND_GEV2;
            warnings.push(format!(
                "theta bound {:.6e} GeV^-2 vs reference 2.5e-7 GeV^-2 (ratio {ratio:.3e}); reference derivation is not reproducible from the displayed formulas",
                res.theta_max_gev2
            ));
            let acc_ev = hz_to_ev(14.0e3, &c);
            Check::new(
                "bound_round_trip",
                res.round_trip_residual <= 1e-10,
                format!(
                    "round-trip residual {:.3e} (tol 1e-10) at accuracy {:.6e} eV",
                    res.round_trip_residual, acc_ev
                ),
            )
        }
        Err(e) => Check::new("bound_round_trip", false, format!("inversion failed: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_green() {
        let report = run_all();
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert_eq!(report.checks.len(), 9);
        // The printed k=6 discrepancy and the bound comparison are logged.
        assert!(report.warnings.len() >= 2);
    }
}
