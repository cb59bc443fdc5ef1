//! Numerical local zeta integrals `ζ(s, ν_k, f) = ∫ f(z) e^{ikθ} |z|^{2s−2} dz`.
//!
//! The angular integral is done exactly: with `u = √(2π) r cos θ`,
//! `v = √(2π) r sin θ`, each monomial `u^a v^b` contributes
//! `(2π)^{(a+b)/2} r^{a+b} ∫ cos^aθ sin^bθ e^{ikθ} dθ`, and the trigonometric
//! integral is `2π` times a Gaussian rational. Only the radial integral
//! `∫_0^R G(r) r^{2s−1} e^{−πr²} dr` is computed numerically.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gamma::gamma_complex;
use super::quad::{QuadratureResult, TanhSinh};
use super::real::{BigComplex, Real};
use crate::error::{Error, Result};
use crate::exact::{GaussianRational, QPoly};
use crate::weil::HermGaussFn;
use crate::zeta_poly::{binomial, zeta_poly_expansion};

/// `(1/2π) ∫_0^{2π} cos^aθ sin^bθ e^{ikθ} dθ`, exactly.
pub fn angular_moment(a: usize, b: usize, k: i64) -> GaussianRational {
    // cos = (e^{iθ} + e^{−iθ})/2, sin = (e^{iθ} − e^{−iθ})/(2i); keep the
    // frequency that cancels e^{ikθ}.
    let mut acc = BigRational::zero();
    for j in 0..=a {
        for l in 0..=b {
            let freq = 2 * (j + l) as i64 - (a + b) as i64;
            if freq + k != 0 {
                continue;
            }
            let c = binomial(a as u64, j as u64) * binomial(b as u64, l as u64);
            let c = if (b - l) % 2 == 1 { -c } else { c };
            acc += BigRational::from_integer(c);
        }
    }
    let scale = BigRational::new(BigInt::one(), BigInt::one() << (a + b));
    GaussianRational::real(acc * scale) * GaussianRational::i_pow(-(b as i64))
}

/// Angular coefficients `E_d = Σ_{a+b=d} c_{ab} · angular_moment(a, b, k)`.
///
/// The integral equals `2π Σ_d E_d (2π)^{d/2} ∫ r^{d+2s−1} e^{−πr²} dr`.
pub fn angular_profile(f: &HermGaussFn, k: i64) -> BTreeMap<usize, GaussianRational> {
    let mut out: BTreeMap<usize, GaussianRational> = BTreeMap::new();
    for (&(a, b), c) in f.terms() {
        let m = angular_moment(a, b, k);
        if m.is_zero() {
            continue;
        }
        let e = out.entry(a + b).or_insert_with(GaussianRational::zero);
        *e += &(c * &m);
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Reusable radial integrator for one `(f, k)` and a band of `Re s`.
///
/// Holds its node cache; one instance per worker.
pub struct ZetaIntegrator {
    /// `(d, 2π·E_d·(2π)^{d/2})`.
    coeffs: Vec<(usize, BigComplex)>,
    rule: Option<TanhSinh>,
    right_tail: f64,
    left_tail: f64,
    sigma_lo: f64,
    p: usize,
    tol: f64,
    max_level: usize,
}

const TAIL: f64 = 1e-30;

impl ZetaIntegrator {
    /// Valid for `Re s ∈ [sigma_lo, sigma_hi]`, `sigma_lo > 0`.
    pub fn new(f: &HermGaussFn, k: i64, sigma_lo: f64, sigma_hi: f64, p: usize) -> Result<Self> {
        if !(sigma_lo > 0.0) || sigma_hi < sigma_lo {
            return Err(Error::Domain(format!("Re s band [{sigma_lo}, {sigma_hi}] must lie in (0, ∞)")));
        }
        let w = p + 16;
        let profile = angular_profile(f, k);
        let two_pi = &Real::pi(w) * &Real::from_i64(2, w);
        let sqrt_two_pi = two_pi.sqrt();
        let mut coeffs = Vec::new();
        let mut bounds = Vec::new();
        for (&d, e) in &profile {
            let c = BigComplex::from_gaussian(e, w).scale(&(&two_pi * &sqrt_two_pi.powi(d)));
            bounds.push((d, c.abs().to_f64()));
            coeffs.push((d, c));
        }
        let mut me = ZetaIntegrator {
            coeffs,
            rule: None,
            right_tail: 0.0,
            left_tail: 0.0,
            sigma_lo,
            p: w,
            tol: 1e-32,
            max_level: 9,
        };
        if me.coeffs.is_empty() {
            return Ok(me);
        }
        // ∫_R^∞ r^α e^{−πr²} dr ≤ R^α e^{−πR²} / (2πR − α/R) once 2πR² > α.
        let tail_at = |r: f64| -> f64 {
            bounds
                .iter()
                .map(|&(d, c)| {
                    let alpha = d as f64 + 2.0 * sigma_hi - 1.0;
                    let den = 2.0 * std::f64::consts::PI * r - alpha.max(0.0) / r;
                    if den <= 0.0 {
                        return f64::INFINITY;
                    }
                    c * (alpha * r.ln() - std::f64::consts::PI * r * r).exp() / den
                })
                .sum()
        };
        let mut r = 1.0;
        while tail_at(r) > TAIL {
            r += 0.25;
        }
        me.right_tail = tail_at(r);
        // ∫_0^ε r^{d+2σ−1} dr ≤ ε^{2σ}/(2σ) for ε < 1.
        let total: f64 = bounds.iter().map(|&(_, c)| c).sum();
        let two_sigma = 2.0 * sigma_lo;
        let eps = ((TAIL * two_sigma / total).ln() / two_sigma).exp().min(1e-3);
        me.left_tail = total * eps.powf(two_sigma) / two_sigma;
        me.rule = Some(TanhSinh::new(Real::from_f64(r, w), eps, w).with_gaussian_weight());
        Ok(me)
    }

    pub fn truncation_radius(&self) -> Option<f64> {
        self.rule.as_ref().map(|r| r.upper().to_f64())
    }

    /// Relative discretization tolerance against the L1 scale of the integrand.
    pub fn set_tolerance(&mut self, tol: f64) {
        self.tol = tol;
    }

    pub fn eval(&mut self, s: &BigComplex) -> Result<QuadratureResult> {
        let out_p = s.precision();
        let Some(rule) = self.rule.as_mut() else {
            return Ok(QuadratureResult { value: BigComplex::zero(out_p), error_estimate: 0.0, evaluations: 0 });
        };
        let sigma = s.re.to_f64();
        if sigma < self.sigma_lo * (1.0 - 1e-12) {
            return Err(Error::Domain(format!("Re s = {sigma} below integrator band {}", self.sigma_lo)));
        }
        let w = self.p;
        let s = s.with_precision(w);
        let exponent = BigComplex::new(&s.re.scale_int(2) - &Real::one(w), s.im.scale_int(2));
        let coeffs = &self.coeffs;
        let max_d = coeffs.last().map_or(0, |(d, _)| *d);
        let (value, diff, _scale, evals, ok) = rule.integrate(self.max_level, self.tol, |nd| {
            // G(x) by Horner over the sparse degree list.
            let mut g = BigComplex::zero(w);
            let mut idx = coeffs.len();
            for d in (0..=max_d).rev() {
                g = g.scale(&nd.x);
                if idx > 0 && coeffs[idx - 1].0 == d {
                    g = &g + &coeffs[idx - 1].1;
                    idx -= 1;
                }
            }
            &g * &exponent.exp_times(&nd.ln_x)
        });
        let estimate = diff + self.right_tail + self.left_tail;
        if !ok {
            return Err(Error::NonConvergent { tolerance: self.tol, estimate, evaluations: evals });
        }
        Ok(QuadratureResult { value: value.with_precision(out_p), error_estimate: estimate, evaluations: evals })
    }
}

impl Real {
    pub(crate) fn scale_int(&self, n: i64) -> Real {
        self * &Real::from_i64(n, self.precision())
    }
}

/// `ζ(s, ν_k, f)` by exact angular extraction and tanh-sinh radial quadrature.
pub fn zeta_numeric(f: &HermGaussFn, k: i64, s: &BigComplex) -> Result<QuadratureResult> {
    let sigma = s.re.to_f64();
    if !(sigma > 0.0) {
        return Err(Error::Domain(format!("Re s = {sigma} must be positive")));
    }
    ZetaIntegrator::new(f, k, sigma, sigma, s.precision())?.eval(s)
}

/// `Γ(s + k/2) π^{1−s} p(s)` for a given polynomial factor.
pub fn zeta_model(p: &QPoly, k: usize, s: &BigComplex) -> Result<BigComplex> {
    let w = s.precision();
    let half_k = Real::from_f64(k as f64 / 2.0, w);
    let shifted = BigComplex::new(&s.re + &half_k, s.im.clone());
    let g = gamma_complex(&shifted)?;
    let pi = Real::pi(w);
    let one_minus = BigComplex::new(&Real::one(w) - &s.re, -&s.im);
    let pi_pow = one_minus.exp_times(&pi.ln());
    let mut pv = BigComplex::zero(w);
    for c in p.coeffs().iter().rev() {
        pv = &(&pv * s) + &BigComplex::from_real(Real::from_rational(c, w));
    }
    Ok(&(&g * &pi_pow) * &pv)
}

/// `ζ(s_i, ν_k, f) / [Γ(s_i + k/2) π^{1−s_i} p_m^{(|k|)}(s_i)]` for each sample.
pub fn zeta_ratio_scan(f: &HermGaussFn, m: usize, k: i64, samples: &[BigComplex]) -> Result<Vec<BigComplex>> {
    let ka = k.unsigned_abs() as usize;
    let rec = zeta_poly_expansion(m, ka);
    if rec.is_zero {
        return Err(Error::Domain(format!("zeta_{m}^({ka}) vanishes identically")));
    }
    let Some(p) = samples.iter().map(BigComplex::precision).max() else {
        return Ok(Vec::new());
    };
    let lo = samples.iter().map(|s| s.re.to_f64()).fold(f64::INFINITY, f64::min);
    let hi = samples.iter().map(|s| s.re.to_f64()).fold(f64::NEG_INFINITY, f64::max);
    let mut integ = ZetaIntegrator::new(f, k, lo, hi, p)?;
    samples
        .iter()
        .map(|s| {
            let z = integ.eval(s)?;
            let model = zeta_model(&rec.coeffs, ka, s)?;
            Ok(&z.value / &model)
        })
        .collect()
}

/// Largest pairwise relative spread `|r_i − r_j| / max|r|` of a ratio list.
pub fn ratio_spread(ratios: &[BigComplex]) -> f64 {
    let Some(first) = ratios.first() else {
        return 0.0;
    };
    let scale = ratios.iter().map(|r| r.abs().to_f64()).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    let _ = first;
    let mut worst: f64 = 0.0;
    for (i, a) in ratios.iter().enumerate() {
        for b in &ratios[i + 1..] {
            worst = worst.max((a - b).abs().to_f64() / scale);
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::weil::hermite_fn;

    #[test]
    fn angular_moments() {
        assert_eq!(angular_moment(0, 0, 0), GaussianRational::one());
        assert!(angular_moment(0, 0, 1).is_zero());
        // cos²: mean 1/2; cos² e^{2iθ}: 1/4.
        assert_eq!(angular_moment(2, 0, 0), GaussianRational::real(rat(1, 2)));
        assert_eq!(angular_moment(2, 0, 2), GaussianRational::real(rat(1, 4)));
        // sin θ e^{iθ} = (e^{2iθ} − 1)/(2i): mean −1/(2i) = i/2.
        assert_eq!(angular_moment(0, 1, 1), GaussianRational::new(rat(0, 1), rat(1, 2)));
        assert!(angular_moment(1, 1, 0).is_zero());
    }

    #[test]
    fn gaussian_at_one() {
        let p = 128;
        let r = zeta_numeric(&hermite_fn(0, 0), 0, &BigComplex::from_f64(1.0, 0.0, p)).unwrap();
        let err = (&r.value - &BigComplex::one(p)).abs().to_f64();
        assert!(err < 1e-28, "err {err}, est {}", r.error_estimate);
        assert!(r.error_estimate < 1e-25);
    }

    #[test]
    fn odd_hermite_vanishes_identically() {
        let r = zeta_numeric(&hermite_fn(3, 0), 0, &BigComplex::from_f64(0.7, 2.0, 128)).unwrap();
        assert!(r.value.is_zero());
        assert_eq!(r.error_estimate, 0.0);
    }

    #[test]
    fn zero_of_linear_factor() {
        let r = zeta_numeric(&hermite_fn(2, 0), 0, &BigComplex::from_f64(0.5, 0.0, 128)).unwrap();
        assert!(r.value.abs().to_f64() <= r.error_estimate.max(1e-30));
    }

    #[test]
    fn ratio_scan_is_constant() {
        let p = 128;
        let samples: Vec<_> = [(1.0, 0.0), (1.5, 0.0), (2.0, 0.0)].iter().map(|&(a, b)| BigComplex::from_f64(a, b, p)).collect();
        let ratios = zeta_ratio_scan(&hermite_fn(4, 0), 4, 0, &samples).unwrap();
        assert!(ratio_spread(&ratios) < 1e-25);
        let f3 = hermite_fn(4, 0).scale(&GaussianRational::from_ints(3, 0));
        let r3 = zeta_ratio_scan(&f3, 4, 0, &samples).unwrap();
        let q = &r3[0] / &ratios[0];
        assert!((&q - &BigComplex::from_f64(3.0, 0.0, p)).abs().to_f64() < 1e-25);
    }
}
