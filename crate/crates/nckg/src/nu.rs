//! Reduction engine for generalized hypergeometric-type equations
//! R'' + (τ̃/σ)R' + (σ̃/σ²)R = 0: enumerate the k values that make the
//! square-root argument of π(r) a perfect square, build the π branches,
//! apply the branch-selection rule (τ' < 0 with a root on [0, ∞)), and
//! expose the algebraic eigenvalue condition λ + nτ' + n(n-1)σ''/2 = 0.

use crate::error::{Error, Result};
use crate::specfun::Polynomial;

const COEFF_TOL: f64 = 1e-10;

/// Input polynomials of a generalized hypergeometric-type equation.
#[derive(Debug, Clone, PartialEq)]
pub struct NUProblem {
    pub sigma: Polynomial,
    pub tau_tilde: Polynomial,
    pub sigma_tilde: Polynomial,
}

impl NUProblem {
    pub fn new(sigma: Polynomial, tau_tilde: Polynomial, sigma_tilde: Polynomial) -> Result<Self> {
        if sigma.degree() > 2 || tau_tilde.degree() > 1 || sigma_tilde.degree() > 2 {
            return Err(Error::Domain(
                "NU problem requires deg σ ≤ 2, deg τ̃ ≤ 1, deg σ̃ ≤ 2".into(),
            ));
        }
        if sigma.is_zero() {
            return Err(Error::Domain("σ must not be identically zero".into()));
        }
        Ok(NUProblem {
            sigma,
            tau_tilde,
            sigma_tilde,
        })
    }

    /// (σ' − τ̃)/2, the polynomial part of π outside the square root.
    pub fn p_half(&self) -> Polynomial {
        self.sigma.derivative().sub(&self.tau_tilde).scale(0.5)
    }

    /// Square-root argument ((σ'−τ̃)/2)² − σ̃ + kσ as a polynomial in r.
    pub fn sqrt_argument(&self, k: f64) -> Polynomial {
        let p = self.p_half();
        p.mul(&p).sub(&self.sigma_tilde).add(&self.sigma.scale(k))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchSign {
    Plus,
    Minus,
}

/// One (k, ±) combination with its π, τ = τ̃ + 2π and λ = k + π'.
#[derive(Debug, Clone, PartialEq)]
pub struct NUBranch {
    pub k: f64,
    pub pi: Polynomial,
    pub sign: BranchSign,
    pub tau: Polynomial,
    pub lambda: f64,
}

impl NUBranch {
    /// τ' < 0 and the root of τ lies in [0, ∞).
    pub fn is_admissible(&self) -> bool {
        let t1 = self.tau.coeff(1);
        let t0 = self.tau.coeff(0);
        t1 < 0.0 && -t0 / t1 >= 0.0
    }
}

/// Enumerate all k making the square-root argument a perfect square, and
/// for each the ± branches of π (up to four branches total).
pub fn k_candidates(p: &NUProblem) -> Result<Vec<NUBranch>> {
    // q(r; k) = q2 r² + q1 r + q0 with coefficients linear in k.
    let base = {
        let ph = p.p_half();
        ph.mul(&ph).sub(&p.sigma_tilde)
    };
    let (b2, b1, b0) = (base.coeff(2), base.coeff(1), base.coeff(0));
    let (s2, s1, s0) = (p.sigma.coeff(2), p.sigma.coeff(1), p.sigma.coeff(0));

    // Perfect-square condition: q1² − 4 q2 q0 = 0, a quadratic in k.
    let ca = s1 * s1 - 4.0 * s2 * s0;
    let cb = 2.0 * b1 * s1 - 4.0 * (b2 * s0 + b0 * s2);
    let cc = b1 * b1 - 4.0 * b2 * b0;
    let scale = [ca, cb, cc].iter().fold(0.0_f64, |m, c| m.max(c.abs()));

    let ks: Vec<f64> = if scale == 0.0 {
        // Already a perfect square for every k along the degenerate
        // direction; k = 0 is the canonical candidate.
        vec![0.0]
    } else if ca.abs() <= COEFF_TOL * scale {
        if cb.abs() <= COEFF_TOL * scale {
            if cc.abs() <= COEFF_TOL * scale {
                vec![0.0]
            } else {
                return Err(Error::NoPolynomialSolution(
                    "perfect-square condition has no root in k".into(),
                ));
            }
        } else {
            vec![-cc / cb]
        }
    } else {
        let disc = cb * cb - 4.0 * ca * cc;
        if disc < -COEFF_TOL * scale * scale {
            return Err(Error::NoPolynomialSolution(
                "perfect-square condition has no real k root".into(),
            ));
        }
        let sq = disc.max(0.0).sqrt();
        let k1 = (-cb + sq) / (2.0 * ca);
        let k2 = (-cb - sq) / (2.0 * ca);
        if (k1 - k2).abs() <= COEFF_TOL * (1.0 + k1.abs()) {
            vec![k1]
        } else {
            vec![k1, k2]
        }
    };

    let mut branches = Vec::new();
    for k in ks {
        let q = p.sqrt_argument(k);
        let (q2, q1, q0) = (q.coeff(2), q.coeff(1), q.coeff(0));
        // Zero-tests against the roundoff scale of each coefficient itself,
        // not the largest coefficient of q: a genuinely positive but tiny q2
        // (e.g. 1 − E² near threshold) must stay quadratic.
        let q2_tol = COEFF_TOL * COEFF_TOL * (1.0 + b2.abs() + (k * s2).abs());
        let q1_tol = COEFF_TOL * COEFF_TOL * (1.0 + b1.abs() + (k * s1).abs());
        // Linear u with u² = q.
        let u = if q2 > q2_tol {
            let u1 = q2.sqrt();
            Polynomial::new(vec![q1 / (2.0 * u1), u1])
        } else if q2 < -q2_tol || q1.abs() > q1_tol {
            // Negative leading term or genuinely linear q: not a square.
            continue;
        } else {
            if q0 < 0.0 {
                continue;
            }
            Polynomial::constant(q0.sqrt())
        };
        let ph = p.p_half();
        for (sign, pi) in [
            (BranchSign::Plus, ph.add(&u)),
            (BranchSign::Minus, ph.sub(&u)),
        ] {
            let tau = p.tau_tilde.add(&pi.scale(2.0));
            let lambda = k + pi.derivative().coeff(0);
            branches.push(NUBranch {
                k,
                pi,
                sign,
                tau,
                lambda,
            });
        }
    }
    if branches.is_empty() {
        return Err(Error::NoPolynomialSolution(
            "no k root yields a real perfect square".into(),
        ));
    }
    Ok(branches)
}

/// Selection rule: τ must have negative derivative and a root on [0, ∞).
/// Exactly one branch may qualify; none or several are hard errors.
pub fn select_branch(branches: &[NUBranch]) -> Result<NUBranch> {
    let qualifying: Vec<&NUBranch> = branches.iter().filter(|b| b.is_admissible()).collect();
    match qualifying.len() {
        0 => Err(Error::NoAdmissibleBranch),
        1 => Ok(qualifying[0].clone()),
        n => Err(Error::AmbiguousBranch(n)),
    }
}

/// λ + nτ' + n(n−1)σ''/2; a root of this residual in E (with the problem
/// rebuilt at each E) is an energy eigenvalue.
pub fn eigenvalue_residual(b: &NUBranch, n: u32, sigma: &Polynomial) -> f64 {
    let nf = n as f64;
    let tau_prime = b.tau.coeff(1);
    let sigma_second = 2.0 * sigma.coeff(2);
    b.lambda + nf * tau_prime + 0.5 * nf * (nf - 1.0) * sigma_second
}

/// The Coulomb problem at fixed trial energy E (natural units, mₑ = 1):
/// σ = r, τ̃ = 0, σ̃ = (Er + α)² − r² − l(l+1).
pub fn kg_coulomb_problem(energy: f64, l: u32, alpha: f64) -> Result<NUProblem> {
    if !(alpha >= 0.0) {
        return Err(Error::Domain(format!("alpha must be >= 0, got {alpha}")));
    }
    let lf = l as f64;
    NUProblem::new(
        Polynomial::new(vec![0.0, 1.0]),
        Polynomial::zero(),
        Polynomial::new(vec![
            alpha * alpha - lf * (lf + 1.0),
            2.0 * alpha * energy,
            energy * energy - 1.0,
        ]),
    )
}

/// Branch selection for the Coulomb problem.
///
/// For l = 0 the textual rule admits both τ' < 0 branches (the root of the
/// second one sits at r = 2α²-ish ≥ 0), so a strict [`select_branch`] would
/// report AmbiguousBranch. The tie is broken by origin regularity: take the
/// branch with the larger π(0), i.e. φ ~ r^{½+γ} rather than r^{½−γ}.
/// Returns the branch and whether the tie-break was needed.
pub fn kg_select_branch(branches: &[NUBranch]) -> Result<(NUBranch, bool)> {
    match select_branch(branches) {
        Ok(b) => Ok((b, false)),
        Err(Error::AmbiguousBranch(_)) => {
            let best = branches
                .iter()
                .filter(|b| b.is_admissible())
                .max_by(|x, y| x.pi.coeff(0).partial_cmp(&y.pi.coeff(0)).unwrap())
                .expect("ambiguous implies at least two admissible");
            Ok((best.clone(), true))
        }
        Err(e) => Err(e),
    }
}

/// Residual of the eigenvalue condition for the Coulomb problem at E.
pub fn kg_eigenvalue_residual(energy: f64, n: u32, l: u32, alpha: f64) -> Result<f64> {
    let problem = kg_coulomb_problem(energy, l, alpha)?;
    let branches = k_candidates(&problem)?;
    let (selected, _) = kg_select_branch(&branches)?;
    Ok(eigenvalue_residual(&selected, n, &problem.sigma))
}

/// Energy eigenvalue by bracketed root-finding of the NU residual on
/// (0, mₑ), seeded around `seed` (the closed form) with a ±10⁻³ window:
/// bisection to isolate, then secant polish.
///
/// α = 0 is the free limit with the eigenvalue at the boundary E = mₑ,
/// where no sign change exists; it is returned directly. The search is
/// capped at E = 1 − 10⁻¹⁰: closer to the boundary 1 − E² degenerates the
/// square-root argument, and every bound state in the supported α range
/// has a binding energy far above that margin.
pub fn kg_energy_rootfind(n: u32, l: u32, alpha: f64, seed: f64) -> Result<f64> {
    if alpha == 0.0 {
        return Ok(1.0);
    }
    let res = |e: f64| kg_eigenvalue_residual(e, n, l, alpha);

    let mut lo = (seed - 1e-3).max(1e-9);
    let mut hi = (seed + 1e-3).min(1.0 - 1e-10);
    let mut flo = res(lo)?;
    let mut fhi = res(hi)?;
    let mut widen = 0;
    while flo * fhi > 0.0 {
        widen += 1;
        if widen > 40 {
            return Err(Error::RootFinding(format!(
                "cannot bracket NU eigenvalue near E = {seed}"
            )));
        }
        lo = (lo - 1e-3 * widen as f64).max(1e-9);
        hi = (hi + 1e-3 * widen as f64).min(1.0 - 1e-10);
        flo = res(lo)?;
        fhi = res(hi)?;
    }

    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        let fmid = res(mid)?;
        if fmid == 0.0 {
            return Ok(mid);
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }

    // Secant polish from the bisection bracket.
    let mut x0 = lo;
    let mut x1 = hi;
    let mut f0 = res(x0)?;
    let mut f1 = res(x1)?;
    for _ in 0..40 {
        if (f1 - f0).abs() == 0.0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() || x2 <= 0.0 || x2 >= 1.0 {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = res(x1)?;
        if (x1 - x0).abs() <= 1e-15 * x1.abs() {
            break;
        }
    }
    Ok(x1)
}
