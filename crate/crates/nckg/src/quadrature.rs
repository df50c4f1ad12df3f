//! Independent numerical-integration oracles on [0, ∞): generalized
//! Gauss-Laguerre rules (Golub-Welsch) and an adaptive dyadic-panel
//! integrator, used to validate every closed-form moment, normalization
//! and energy-shift coefficient.

use crate::error::{Error, Result};
use crate::kgnc::RadialWavefunction;
use crate::specfun;

/// Nodes and weights for ∫₀^∞ x^a e^{-x} f(x) dx ≈ Σ w_i f(x_i).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub order: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Exponent a in the weight x^a e^{-x}.
    pub weight_exponent: f64,
}

impl QuadratureRule {
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Result of a numerical integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub converged: bool,
}

/// Generalized Gauss-Laguerre rule for weight x^a e^{-x}, a > -1.
///
/// Nodes are the eigenvalues of the Jacobi matrix of the monic recurrence
/// (diag 2i+a+1, offdiag √(i(i+a))); weights come from the first eigenvector
/// components scaled by the zeroth moment Γ(a+1).
pub fn gauss_laguerre_rule(order: usize, a: f64) -> Result<QuadratureRule> {
    if a <= -1.0 {
        return Err(Error::Domain(format!(
            "gauss_laguerre_rule requires a > -1, got {a}"
        )));
    }
    if order < 1 || order > 200 {
        return Err(Error::Domain(format!(
            "gauss_laguerre_rule order must lie in 1..=200, got {order}"
        )));
    }
    let n = order;
    let mut d: Vec<f64> = (0..n).map(|i| 2.0 * i as f64 + a + 1.0).collect();
    let mut e: Vec<f64> = (0..n)
        .map(|i| {
            if i + 1 < n {
                (((i + 1) as f64) * ((i + 1) as f64 + a)).sqrt()
            } else {
                0.0
            }
        })
        .collect();
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    tridiagonal_eigen_first_components(&mut d, &mut e, &mut z)?;

    let mu0 = specfun::gamma(a + 1.0)?;
    let mut pairs: Vec<(f64, f64)> = d
        .iter()
        .zip(&z)
        .map(|(&x, &zi)| (x, mu0 * zi * zi))
        .collect();
    pairs.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    Ok(QuadratureRule {
        order,
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
        weight_exponent: a,
    })
}

/// QL with implicit shifts on a symmetric tridiagonal matrix, accumulating
/// only the first row of the eigenvector matrix (passed in as `z`).
fn tridiagonal_eigen_first_components(
    d: &mut [f64],
    e: &mut [f64],
    z: &mut [f64],
) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::RootFinding(
                    "tridiagonal QL iteration did not converge".into(),
                ));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    let m = (n + 1) / 2;
    for k in 1..=m {
        let mut x = (std::f64::consts::PI * (k as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((-x, w));
        if 2 * k != n + 1 || n % 2 == 0 {
            out.push((x, w));
        }
    }
    out.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    out
}

fn panel<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, rule: &[(f64, f64)]) -> f64 {
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    rule.iter().map(|&(x, w)| w * f(mid + half * x)).sum::<f64>() * half
}

/// Adaptive integral of f over [0, ∞).
///
/// Panels are dyadic toward both 0 and ∞; each panel is evaluated with
/// embedded 20/40-point Gauss-Legendre rules and their difference feeds the
/// error estimate. `tol` is a relative tolerance on the accumulated value.
/// Integrands with a non-integrable power-law singularity at the origin are
/// reported as [`Error::DivergentIntegral`] (contributions that stop
/// decreasing, or a near-origin partial sum that keeps growing under
/// refinement), never as a silent finite number.
pub fn integrate_halfline<F: Fn(f64) -> f64>(f: F, tol: f64) -> Result<IntegralResult> {
    let coarse = gauss_legendre(20);
    let fine = gauss_legendre(40);

    let mut value = 0.0;
    let mut err = 0.0;

    // Outward panels [2^k, 2^{k+1}].
    let mut quiet = 0;
    for k in 0..64 {
        let lo = (2.0_f64).powi(k);
        let hi = 2.0 * lo;
        let v40 = panel(&f, lo, hi, &fine);
        let v20 = panel(&f, lo, hi, &coarse);
        value += v40;
        err += (v40 - v20).abs();
        if v40.abs() <= 1e-4 * tol * value.abs().max(f64::MIN_POSITIVE) {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
    }

    // Inward panels [2^{-k-1}, 2^{-k}] with geometric tail estimation.
    let mut prev = f64::INFINITY;
    let mut nondecreasing = 0;
    let mut growth_ref: Option<f64> = None;
    let mut origin_sum = 0.0;
    let mut tail = f64::INFINITY;
    for k in 0..1000 {
        let hi = (2.0_f64).powi(-k);
        let lo = 0.5 * hi;
        let v40 = panel(&f, lo, hi, &fine);
        let v20 = panel(&f, lo, hi, &coarse);
        value += v40;
        origin_sum += v40.abs();
        err += (v40 - v20).abs();

        let c = v40.abs();
        if k >= 4 {
            if c >= prev * (1.0 - 1e-9) && c > 0.0 {
                nondecreasing += 1;
            } else {
                nondecreasing = 0;
            }
            if nondecreasing >= 3 {
                return Err(Error::DivergentIntegral(
                    "near-origin panel contributions do not decrease under refinement".into(),
                ));
            }
        }
        if k == 20 {
            growth_ref = Some(origin_sum.max(f64::MIN_POSITIVE));
        }
        if let Some(r) = growth_ref {
            if origin_sum > 10.0 * r {
                return Err(Error::DivergentIntegral(
                    "near-origin partial sum keeps growing under refinement".into(),
                ));
            }
        }

        // Geometric tail bound from the decay ratio of the last two panels.
        if c > 0.0 && prev.is_finite() && prev > 0.0 {
            let rho = c / prev;
            if rho < 1.0 {
                tail = c * rho / (1.0 - rho);
            }
        } else if c == 0.0 {
            tail = 0.0;
        }
        prev = c;
        if tail <= 0.1 * tol * value.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    err += if tail.is_finite() { tail } else { 0.0 };

    let converged = err <= tol * value.abs().max(f64::MIN_POSITIVE);
    Ok(IntegralResult {
        value,
        abs_error_estimate: err,
        converged,
    })
}

/// Quadrature oracle for ∫₀^∞ R²(r) r^{-k} dr.
///
/// With x = 2ar the wavefunction's x^{2ν+2} factor is absorbed into the
/// Gauss-Laguerre weight x^{2ν+2-k} e^{-x}, leaving the squared Laguerre
/// polynomial as the integrand, so convergent cases are exact up to rule
/// order. Converges only when the weight exponent exceeds -1.
pub fn radial_moment_oracle(w: &RadialWavefunction, k: i32) -> Result<IntegralResult> {
    let exponent = 2.0 * w.effective_exponent + 2.0 - k as f64;
    if exponent <= -1.0 {
        return Err(Error::DivergentMoment(format!(
            "moment k = {k} diverges: weight exponent {exponent} <= -1"
        )));
    }
    let n = w.n as usize;
    let lag_a = 2.0 * w.effective_exponent + 1.0;
    let poly_sq = |x: f64| {
        let l = specfun::laguerre(w.n, lag_a, x).expect("laguerre parameters prevalidated");
        l * l
    };
    let rule_lo = gauss_laguerre_rule(n + 4, exponent)?;
    let rule_hi = gauss_laguerre_rule(n + 10, exponent)?;
    let prefactor = w.norm * w.norm * (2.0 * w.a).powi(k - 1);
    let v_lo = prefactor * rule_lo.integrate(poly_sq);
    let v_hi = prefactor * rule_hi.integrate(&poly_sq);
    let err = (v_hi - v_lo).abs().max(1e-15 * v_hi.abs());
    Ok(IntegralResult {
        value: v_hi,
        abs_error_estimate: err,
        converged: true,
    })
}
