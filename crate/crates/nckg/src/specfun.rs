//! Special functions: log-Gamma, associated Laguerre polynomials, the
//! terminating confluent hypergeometric series F(-n; g; x), and the
//! closed-form weighted moment ∫ x^{p-1} e^{-x} [F(-n;g;x)]² dx.

use crate::error::{Error, Result};

/// Dense real polynomial, coefficients lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Build from coefficients (lowest degree first); trailing zeros trimmed.
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![0.0] }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as f64 + 1.0) * c)
                .collect(),
        )
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, s: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

// Lanczos g = 7, 9 coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln Γ(x) for x > 0, Lanczos approximation.
///
/// Arguments in (0, 0.5) are lifted once by ln Γ(x) = ln Γ(x+1) − ln x;
/// reflection is never needed on this domain.
pub fn lgamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("lgamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        return Ok(lgamma_lanczos(x + 1.0) - x.ln());
    }
    Ok(lgamma_lanczos(x))
}

fn lgamma_lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Γ(x) for x > 0.
pub fn gamma(x: f64) -> Result<f64> {
    Ok(lgamma(x)?.exp())
}

/// Associated Laguerre polynomial L_n^a(x) via the upward three-term
/// recurrence (n+1) L_{n+1} = (2n+a+1-x) L_n − (n+a) L_{n-1}.
pub fn laguerre(n: u32, a: f64, x: f64) -> Result<f64> {
    if a <= -1.0 {
        return Err(Error::Domain(format!("laguerre requires a > -1, got {a}")));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + a + 1.0 - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Coefficients of L_n^a as a [`Polynomial`]:
/// L_n^a(x) = Σ_j (-1)^j C(n+a, n-j) x^j / j!.
pub fn laguerre_polynomial(n: u32, a: f64) -> Result<Polynomial> {
    if a <= -1.0 {
        return Err(Error::Domain(format!("laguerre requires a > -1, got {a}")));
    }
    let mut coeffs = vec![0.0; n as usize + 1];
    // c_0 = C(n+a, n); ratio c_{j+1}/c_j = -(n-j)/((j+1)(a+j+1)).
    let mut c = ((lgamma(n as f64 + a + 1.0)? - lgamma(a + 1.0)?) - lgamma(n as f64 + 1.0)?).exp();
    for j in 0..=n as usize {
        coeffs[j] = c;
        if j < n as usize {
            let jf = j as f64;
            c *= -(n as f64 - jf) / ((jf + 1.0) * (a + jf + 1.0));
        }
    }
    Ok(Polynomial::new(coeffs))
}

/// Terminating confluent hypergeometric series
/// F(-n; g; x) = Σ_{j=0..n} (-n)_j x^j / ((g)_j j!).
pub fn kummer_terminating(n: u32, g: f64, x: f64) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::Domain(format!(
            "kummer_terminating requires g > 0, got {g}"
        )));
    }
    let mut sum = 1.0;
    let mut term = 1.0;
    for j in 0..n {
        let jf = j as f64;
        term *= -(n as f64 - jf) / (g + jf) * x / (jf + 1.0);
        sum += term;
    }
    Ok(sum)
}

/// Closed-form weighted moment
/// M(n, g, p) = ∫₀^∞ x^{p-1} e^{-x} [F(-n; g; x)]² dx,
/// the finite sum
/// n!Γ(p)/(g)_n · Σ_{j=0..n} [n!/(n-j)!] (g-p-j)_{2j} / ((j!)² (g)_j).
///
/// Each term is built from the previous one by a product of ratios, so no
/// intermediate factorial or Pochhammer product can overflow for n ≤ 50.
pub fn laguerre_weighted_moment(n: u32, g: f64, p: f64) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::Domain(format!(
            "laguerre_weighted_moment requires g > 0, got {g}"
        )));
    }
    if !(p > 0.0) {
        return Err(Error::DivergentMoment(format!(
            "moment integral requires p > 0, got p = {p}"
        )));
    }
    // Bracket sum.
    let mut sum = 1.0;
    let mut term = 1.0;
    for j in 1..=n {
        let jf = j as f64;
        // term_j / term_{j-1} = (n-j+1)/j² · (g-p-j)(g-p+j-1)/(g+j-1)
        term *= (n as f64 - jf + 1.0) / (jf * jf) * (g - p - jf) * (g - p + jf - 1.0)
            / (g + jf - 1.0);
        sum += term;
    }
    // Prefactor n!Γ(p)/(g)_n in log space.
    let ln_pref = lgamma(n as f64 + 1.0)? + lgamma(p)? + lgamma(g)? - lgamma(g + n as f64)?;
    Ok(ln_pref.exp() * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Independent lnΓ oracle: descend with Γ(z+1) = zΓ(z) until the
    /// argument lies in [1, 2], then use a high-order Stirling series at
    /// z+20 for the base value.
    fn lgamma_descent_oracle(x: f64) -> f64 {
        let mut z = x;
        let mut acc = 0.0;
        while z < 20.0 {
            acc -= z.ln();
            z += 1.0;
        }
        // Stirling with Bernoulli terms at large z.
        let series = [
            1.0 / 12.0,
            -1.0 / 360.0,
            1.0 / 1260.0,
            -1.0 / 1680.0,
            1.0 / 1188.0,
        ];
        let mut s = 0.0;
        let mut zp = z;
        for &b in &series {
            s += b / zp;
            zp *= z * z;
        }
        acc + (z - 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln() + s
    }

    #[test]
    fn lgamma_small_integers_and_half() {
        assert_relative_eq!(lgamma(5.0).unwrap(), 24.0_f64.ln(), max_relative = 1e-14);
        assert_relative_eq!(
            lgamma(0.5).unwrap(),
            std::f64::consts::PI.sqrt().ln(),
            max_relative = 1e-13
        );
        assert_relative_eq!(lgamma(1.0).unwrap(), 0.0, epsilon = 1e-14);
        assert!(lgamma(0.0).is_err());
        assert!(lgamma(-3.0).is_err());
    }

    #[test]
    fn lgamma_matches_descent_oracle() {
        // Includes 2ν+2 with ν from (l=1, α=1/137.035999).
        let alpha = 1.0 / 137.035999;
        let nu = -0.5 + (2.25_f64 - alpha * alpha).sqrt();
        for &x in &[0.1, 0.3, 0.9, 1.5, 2.0 * nu + 2.0, 7.3, 33.7, 151.2] {
            assert_relative_eq!(
                lgamma(x).unwrap(),
                lgamma_descent_oracle(x),
                max_relative = 1e-12,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn laguerre_base_cases() {
        assert_eq!(laguerre(0, 3.7, 11.0).unwrap(), 1.0);
        assert_relative_eq!(laguerre(1, 2.0, 1.0).unwrap(), 2.0, max_relative = 1e-14);
        assert!(laguerre(2, -1.0, 0.0).is_err());
    }

    #[test]
    fn laguerre_at_zero_matches_binomial_oracle() {
        // L_n^a(0) = Γ(n+a+1)/(n! Γ(a+1)).
        for n in 0..=8u32 {
            for &a in &[0.0, 1.0, 0.3, 2.7] {
                let expect = (lgamma(n as f64 + a + 1.0).unwrap()
                    - lgamma(n as f64 + 1.0).unwrap()
                    - lgamma(a + 1.0).unwrap())
                .exp();
                assert_relative_eq!(
                    laguerre(n, a, 0.0).unwrap(),
                    expect,
                    max_relative = 1e-12
                );
            }
        }
        assert_relative_eq!(laguerre(2, 1.0, 0.0).unwrap(), 3.0, max_relative = 1e-13);
    }

    #[test]
    fn laguerre_polynomial_coeffs_match_eval() {
        for n in 0..=6u32 {
            for &a in &[0.0, 0.3, 2.0] {
                let poly = laguerre_polynomial(n, a).unwrap();
                for &x in &[0.0, 0.5, 1.7, 9.0] {
                    assert_relative_eq!(
                        poly.eval(x),
                        laguerre(n, a, x).unwrap(),
                        max_relative = 1e-11,
                        epsilon = 1e-11
                    );
                }
            }
        }
    }

    #[test]
    fn kummer_base_cases() {
        assert_eq!(kummer_terminating(0, 2.0, 5.0).unwrap(), 1.0);
        assert_relative_eq!(
            kummer_terminating(1, 2.0, 1.0).unwrap(),
            0.5,
            max_relative = 1e-14
        );
        assert!(kummer_terminating(1, 0.0, 1.0).is_err());
    }

    #[test]
    fn kummer_laguerre_identity() {
        // L_n^ν(x) = Γ(n+ν+1)/(Γ(n+1)Γ(ν+1)) F(-n; ν+1; x).
        let alpha = 1.0 / 137.035999;
        let nu_rel = -0.5 + (2.25_f64 - alpha * alpha).sqrt();
        for n in 0..=10u32 {
            for &a in &[0.3, 1.0, 2.0 * nu_rel + 1.0] {
                for &x in &[0.0, 0.7, 1.7, 12.5, 50.0] {
                    let c = (lgamma(n as f64 + a + 1.0).unwrap()
                        - lgamma(n as f64 + 1.0).unwrap()
                        - lgamma(a + 1.0).unwrap())
                    .exp();
                    let lhs = laguerre(n, a, x).unwrap();
                    let rhs = c * kummer_terminating(n, a + 1.0, x).unwrap();
                    // Alternating-series cancellation at large x limits the
                    // achievable agreement between the two routes.
                    assert_relative_eq!(lhs, rhs, max_relative = 1e-10, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn weighted_moment_trivial_and_hand_cases() {
        // n = 0: Γ(p).
        assert_relative_eq!(
            laguerre_weighted_moment(0, 3.0, 4.0).unwrap(),
            6.0,
            max_relative = 1e-13
        );
        // n = 1, g = 4, p = 4 → Γ(4)/4 · {1 + (g-p-1)(g-p)/g} = 1.5.
        assert_relative_eq!(
            laguerre_weighted_moment(1, 4.0, 4.0).unwrap(),
            1.5,
            max_relative = 1e-13
        );
        assert!(matches!(
            laguerre_weighted_moment(2, 4.0, 0.0),
            Err(Error::DivergentMoment(_))
        ));
        assert!(laguerre_weighted_moment(2, -1.0, 1.0).is_err());
    }

    #[test]
    fn weighted_moment_large_n_is_finite() {
        let v = laguerre_weighted_moment(50, 3.5, 2.5).unwrap();
        assert!(v.is_finite());
    }
}
