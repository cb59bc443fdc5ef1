//! Orthogonality of `ρ_m(t) = (−i)^d p_m^{(k)}(1/2 + it)` against `|Γ((k+1)/2 + it)|² dt`.

use std::collections::HashMap;

use serde::Serialize;

use super::quad::composite_gauss_legendre;
use super::real::Real;
use crate::error::{Error, Result};
use crate::exact::{critical_line_restriction, QPoly};
use crate::zeta_poly::{is_admissible, zeta_poly_expansion};

/// `|Γ((k+1)/2 + it)|²` in closed form.
///
/// Odd `k`, `n = (k+1)/2`: `πt/sinh(πt) · Π_{j=1}^{n−1}(j² + t²)`.
/// Even `k`: `π/cosh(πt) · Π_{j=1}^{k/2}((j − 1/2)² + t²)`.
pub fn ortho_weight(k: usize, t: &Real) -> Real {
    let p = t.precision();
    let pi = Real::pi(p);
    let t2 = t.square();
    if k % 2 == 1 {
        let n = (k + 1) / 2;
        let head = if t.is_zero() {
            Real::one(p)
        } else {
            let pt = &pi * t;
            &pt / &pt.sinh()
        };
        (1..n).fold(head, |acc, j| &acc * &(&Real::from_i64((j * j) as i64, p) + &t2))
    } else {
        let head = &pi / &(&pi * t).cosh();
        (1..=k / 2).fold(head, |acc, j| {
            let c = Real::from_f64((j as f64 - 0.5).powi(2), p);
            &acc * &(&c + &t2)
        })
    }
}

/// `Σ |c_i|` of `ρ` as an f64 bound for `|ρ(t)| ≤ Σ|c_i| · t^d`, `t ≥ 1`.
fn coeff_bound(rho: &QPoly) -> f64 {
    use num_traits::{Signed, ToPrimitive};
    rho.coeffs().iter().map(|c| c.abs().to_f64().unwrap_or(f64::MAX)).sum()
}

/// Outcome of one weighted critical-line integral.
#[derive(Clone, Debug, Serialize)]
pub struct OrthoValue {
    pub m: usize,
    pub m2: usize,
    pub k: usize,
    pub integral: f64,
    pub error_estimate: f64,
    /// `sqrt(I_mm · I_m'm')`.
    pub norm_product: f64,
    /// `|integral| / norm_product`.
    pub relative: f64,
}

/// Weighted Gauss–Legendre integrator for one `k`, valid for all `m ≤ m_max`.
///
/// Node weights `W_i · w_k(t_i)` and the values `ρ_m(t_i)` are cached.
/// One instance per worker.
pub struct OrthoIntegrator {
    k: usize,
    m_max: usize,
    p: usize,
    t_max: f64,
    tail: f64,
    fine: Vec<(Real, Real)>,
    coarse: Vec<(Real, Real)>,
    values: HashMap<usize, (Vec<Real>, Vec<Real>)>,
}

const TAIL: f64 = 1e-25;
const GL_POINTS: usize = 20;

impl OrthoIntegrator {
    pub fn new(k: usize, m_max: usize, p: usize) -> Result<Self> {
        if m_max < k {
            return Err(Error::Domain(format!("no admissible m <= {m_max} for k = {k}")));
        }
        let rhos: Vec<QPoly> = (k..=m_max)
            .step_by(2)
            .map(|m| critical_line_restriction(&zeta_poly_expansion(m, k).coeffs))
            .collect::<Result<_>>()?;
        let s_max = rhos.iter().map(coeff_bound).fold(0.0, f64::max);
        let d_max = (m_max - k) / 2;
        // Weight ≤ c_w · t^{a_w} e^{−πt} for t ≥ 1.
        let (c_w, a_w) = if k % 2 == 1 {
            let n = (k + 1) / 2;
            let c = 2.0 * std::f64::consts::PI / (1.0 - (-2.0 * std::f64::consts::PI).exp());
            let prod: f64 = (1..n).map(|j| (j * j) as f64 + 1.0).product();
            (c * prod, 1 + 2 * (n - 1))
        } else {
            let prod: f64 = (1..=k / 2).map(|j| (j as f64 - 0.5).powi(2) + 1.0).product();
            (2.0 * std::f64::consts::PI * prod, k)
        };
        let a = (2 * d_max + a_w) as f64;
        // Both tails: 2 · S² · c_w · T^a e^{−πT} / (π − a/T).
        let tail_at = |t: f64| {
            let den = std::f64::consts::PI - a / t;
            if den <= 0.0 {
                return f64::INFINITY;
            }
            2.0 * s_max * s_max * c_w * (a * t.ln() - std::f64::consts::PI * t).exp() / den
        };
        let mut t_max = (a / std::f64::consts::PI + 1.0).ceil().max(2.0);
        while tail_at(t_max) > TAIL {
            t_max += 1.0;
        }
        let weight = |rule: Vec<(Real, Real)>| -> Vec<(Real, Real)> {
            rule.into_iter().map(|(t, w)| {
                let wk = &w * &ortho_weight(k, &t);
                (t, wk)
            })
            .collect()
        };
        let fine = weight(composite_gauss_legendre(-t_max, t_max, 0.25, GL_POINTS, p));
        let coarse = weight(composite_gauss_legendre(-t_max, t_max, 0.5, GL_POINTS, p));
        Ok(OrthoIntegrator { k, m_max, p, t_max, tail: tail_at(t_max), fine, coarse, values: HashMap::new() })
    }

    pub fn truncation(&self) -> f64 {
        self.t_max
    }

    fn rho_values(&mut self, m: usize) -> Result<&(Vec<Real>, Vec<Real>)> {
        if !is_admissible(m, self.k) || m > self.m_max {
            return Err(Error::Domain(format!("(m,k) = ({m},{}) outside this integrator", self.k)));
        }
        if !self.values.contains_key(&m) {
            let rho = critical_line_restriction(&zeta_poly_expansion(m, self.k).coeffs)?;
            let p = self.p;
            let coeffs: Vec<Real> = rho.coeffs().iter().map(|c| Real::from_rational(c, p)).collect();
            let eval = |t: &Real| coeffs.iter().rev().fold(Real::zero(p), |acc, c| &(&acc * t) + c);
            let fine = self.fine.iter().map(|(t, _)| eval(t)).collect();
            let coarse = self.coarse.iter().map(|(t, _)| eval(t)).collect();
            self.values.insert(m, (fine, coarse));
        }
        Ok(&self.values[&m])
    }

    /// `∫ a(t) b(t) w_k(t) dt` for arbitrary real polynomials, fine rule only.
    pub fn weighted_integral(&self, a: &QPoly, b: &QPoly) -> Real {
        let p = self.p;
        let conv = |q: &QPoly| q.coeffs().iter().map(|c| Real::from_rational(c, p)).collect::<Vec<_>>();
        let (ca, cb) = (conv(a), conv(b));
        let eval = |c: &[Real], t: &Real| c.iter().rev().fold(Real::zero(p), |acc, x| &(&acc * t) + x);
        self.fine.iter().fold(Real::zero(p), |acc, (t, w)| &acc + &(&(&eval(&ca, t) * &eval(&cb, t)) * w))
    }

    /// `(fine value, |fine − coarse| + tail)`.
    pub fn integral(&mut self, m: usize, m2: usize) -> Result<(Real, f64)> {
        self.rho_values(m)?;
        self.rho_values(m2)?;
        let (a, b) = (&self.values[&m], &self.values[&m2]);
        let dot = |w: &[(Real, Real)], x: &[Real], y: &[Real]| {
            w.iter().zip(x.iter().zip(y)).fold(Real::zero(x[0].precision()), |acc, ((_, w), (u, v))| &acc + &(&(u * v) * w))
        };
        let fine = dot(&self.fine, &a.0, &b.0);
        let coarse = dot(&self.coarse, &a.1, &b.1);
        let est = (&fine - &coarse).abs().to_f64() + self.tail;
        Ok((fine, est))
    }

    pub fn pair(&mut self, m: usize, m2: usize) -> Result<OrthoValue> {
        let (i, e) = self.integral(m, m2)?;
        let (n1, _) = self.integral(m, m)?;
        let (n2, _) = self.integral(m2, m2)?;
        if n1.is_negative() || n1.is_zero() || n2.is_negative() || n2.is_zero() {
            return Err(Error::violated(format!("positivity of diagonal integrals for k={}", self.k), format!("{n1:?}, {n2:?}")));
        }
        let norm = (&n1 * &n2).sqrt().to_f64();
        let integral = i.to_f64();
        Ok(OrthoValue { m, m2, k: self.k, integral, error_estimate: e, norm_product: norm, relative: integral.abs() / norm })
    }
}

/// `|∫ ρ_m ρ_{m'} w_k dt| ≤ tol · sqrt(I_mm I_{m'm'})`, with both diagonals positive.
pub fn orthogonality_check(m: usize, m2: usize, k: usize, tol: f64) -> Result<bool> {
    let mut integ = OrthoIntegrator::new(k, m.max(m2), super::DEFAULT_PRECISION)?;
    let v = integ.pair(m, m2)?;
    if v.error_estimate > tol * v.norm_product {
        return Err(Error::NonConvergent { tolerance: tol, estimate: v.error_estimate / v.norm_product, evaluations: 0 });
    }
    Ok(v.relative <= tol)
}
