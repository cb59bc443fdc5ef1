//! Polynomial × Gaussian functions in scaled coordinates `u = √(2π)x`, `v = √(2π)y`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{int, GaussianRational, QPoly};
use crate::zeta_poly::{factorial, hermite_poly};

type Support = BTreeMap<(usize, usize), GaussianRational>;

/// `P(u, v)·e^{−(u²+v²)/2}` with `P` stored as a map from exponent pairs to
/// ℚ[i] coefficients. The weight equals `e^{−π(x²+y²)}` exactly.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HermGaussFn {
    coeffs: Support,
}

fn insert(map: &mut Support, key: (usize, usize), c: GaussianRational) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(key).or_insert_with(GaussianRational::zero);
    *e += &c;
    if e.is_zero() {
        map.remove(&key);
    }
}

impl HermGaussFn {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The bare Gaussian weight.
    pub fn gaussian() -> Self {
        Self::monomial(GaussianRational::one(), 0, 0)
    }

    pub fn monomial(c: GaussianRational, a: usize, b: usize) -> Self {
        let mut coeffs = Support::new();
        insert(&mut coeffs, (a, b), c);
        Self { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), GaussianRational)>>(terms: I) -> Self {
        let mut coeffs = Support::new();
        for (k, c) in terms {
            insert(&mut coeffs, k, c);
        }
        Self { coeffs }
    }

    /// `P(u)·Q(v)` for univariate real polynomials.
    pub fn separable(pu: &QPoly, pv: &QPoly) -> Self {
        let mut coeffs = Support::new();
        for (a, ca) in pu.coeffs().iter().enumerate() {
            for (b, cb) in pv.coeffs().iter().enumerate() {
                insert(&mut coeffs, (a, b), GaussianRational::real(ca * cb));
            }
        }
        Self { coeffs }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &GaussianRational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, a: usize, b: usize) -> GaussianRational {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|(a, b)| a + b).max()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn scale_q(&self, q: &BigRational) -> Self {
        self.scale(&GaussianRational::real(q.clone()))
    }

    pub fn conj(&self) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(k, v)| (*k, v.conj())))
    }

    pub fn mul_u(&self) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&(a, b), v)| ((a + 1, b), v.clone())))
    }

    pub fn mul_v(&self) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&(a, b), v)| ((a, b + 1), v.clone())))
    }

    /// Product of polynomial parts; the result carries a single weight, so this
    /// is multiplication by the polynomial part of `other`.
    pub fn mul_poly(&self, other: &Self) -> Self {
        let mut coeffs = Support::new();
        for (&(a, b), x) in &self.coeffs {
            for (&(c, d), y) in &other.coeffs {
                insert(&mut coeffs, (a + c, b + d), x * y);
            }
        }
        Self { coeffs }
    }

    fn poly_du(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .filter(|((a, _), _)| *a > 0)
                .map(|(&(a, b), v)| ((a - 1, b), v.scale(&int(a as i64)))),
        )
    }

    fn poly_dv(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .filter(|((_, b), _)| *b > 0)
                .map(|(&(a, b), v)| ((a, b - 1), v.scale(&int(b as i64)))),
        )
    }

    /// `∂_u` of the full function: `(∂_u P − uP)·weight`.
    pub fn du(&self) -> Self {
        &self.poly_du() - &self.mul_u()
    }

    /// `∂_v` of the full function: `(∂_v P − vP)·weight`.
    pub fn dv(&self) -> Self {
        &self.poly_dv() - &self.mul_v()
    }

    /// Expansion over the basis `f_{m,n} = H_m(u)H_n(v)·weight`.
    pub fn to_hermite(&self) -> HermiteExpansion {
        let max = self.coeffs.keys().map(|(a, b)| *a.max(b)).max().unwrap_or(0);
        let tables: Vec<Vec<BigRational>> = (0..=max).map(monomial_in_hermite).collect();
        let mut terms = Support::new();
        for (&(a, b), c) in &self.coeffs {
            for (i, ca) in tables[a].iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (j, cb) in tables[b].iter().enumerate() {
                    if !cb.is_zero() {
                        insert(&mut terms, (i, j), c.scale(&(ca * cb)));
                    }
                }
            }
        }
        HermiteExpansion { terms }
    }

    /// Evaluate the full function (weight included) in f64 at `(u, v)`.
    pub fn eval_f64(&self, u: f64, v: f64) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let w = (-(u * u + v * v) / 2.0).exp();
        let (mut re, mut im) = (0.0, 0.0);
        for (&(a, b), c) in &self.coeffs {
            let m = u.powi(a as i32) * v.powi(b as i32) * w;
            re += c.re.to_f64().unwrap() * m;
            im += c.im.to_f64().unwrap() * m;
        }
        (re, im)
    }
}

/// `x^n = (n!/2^n) Σ_j H_{n−2j}(x) / (j!(n−2j)!)`, as coefficients on `H_0..H_n`.
pub fn monomial_in_hermite(n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n + 1];
    let scale = BigRational::new(factorial(n as u64), BigInt::one() << n);
    for j in 0..=n / 2 {
        out[n - 2 * j] = &scale / BigRational::from_integer(factorial(j as u64) * factorial((n - 2 * j) as u64));
    }
    out
}

impl<'a> std::ops::Add<&'a HermGaussFn> for &'a HermGaussFn {
    type Output = HermGaussFn;
    fn add(self, o: &HermGaussFn) -> HermGaussFn {
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &o.coeffs {
            insert(&mut coeffs, *k, v.clone());
        }
        HermGaussFn { coeffs }
    }
}

impl<'a> std::ops::Sub<&'a HermGaussFn> for &'a HermGaussFn {
    type Output = HermGaussFn;
    fn sub(self, o: &HermGaussFn) -> HermGaussFn {
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &o.coeffs {
            insert(&mut coeffs, *k, -v);
        }
        HermGaussFn { coeffs }
    }
}

impl fmt::Debug for HermGaussFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|((a, b), c)| format!("({c})u^{a}v^{b}"))
            .collect();
        write!(f, "[{}]·e^(-(u²+v²)/2)", parts.join(" + "))
    }
}

/// Coefficients over the Hermite basis `f_{m,n}`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HermiteExpansion {
    terms: Support,
}

impl HermiteExpansion {
    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), GaussianRational)>>(terms: I) -> Self {
        let mut map = Support::new();
        for (k, c) in terms {
            insert(&mut map, k, c);
        }
        Self { terms: map }
    }

    /// The single basis element `c·f_{m,n}`.
    pub fn basis(m: usize, n: usize, c: GaussianRational) -> Self {
        Self::from_terms([((m, n), c)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: usize, n: usize) -> GaussianRational {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.terms.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map_coeffs(&self, f: impl Fn((usize, usize), &GaussianRational) -> GaussianRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, f(*k, v))))
    }

    pub fn to_fn(&self) -> HermGaussFn {
        let max = self.terms.keys().map(|(a, b)| *a.max(b)).max().unwrap_or(0);
        let hs: Vec<QPoly> = (0..=max).map(hermite_poly).collect();
        let mut out = HermGaussFn::zero();
        for (&(m, n), c) in &self.terms {
            out = &out + &HermGaussFn::separable(&hs[m], &hs[n]).scale(c);
        }
        out
    }
}

impl<'a> std::ops::Sub<&'a HermiteExpansion> for &'a HermiteExpansion {
    type Output = HermiteExpansion;
    fn sub(self, o: &HermiteExpansion) -> HermiteExpansion {
        let mut terms = self.terms.clone();
        for (k, v) in &o.terms {
            insert(&mut terms, *k, -v);
        }
        HermiteExpansion { terms }
    }
}

impl<'a> std::ops::Add<&'a HermiteExpansion> for &'a HermiteExpansion {
    type Output = HermiteExpansion;
    fn add(self, o: &HermiteExpansion) -> HermiteExpansion {
        let mut terms = self.terms.clone();
        for (k, v) in &o.terms {
            insert(&mut terms, *k, v.clone());
        }
        HermiteExpansion { terms }
    }
}

impl fmt::Debug for HermiteExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((m, n), c)| format!("({c})f[{m},{n}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `f_{m,n} = H_m(u)H_n(v)·weight`.
pub fn hermite_fn(m: usize, n: usize) -> HermGaussFn {
    HermGaussFn::separable(&hermite_poly(m), &hermite_poly(n))
}

/// `∫_{−∞}^{∞} u^a e^{−u²} du / √π`: `(a−1)!!/2^{a/2}` for even `a`, zero otherwise.
fn gaussian_moment(a: usize) -> BigRational {
    if a % 2 == 1 {
        return BigRational::zero();
    }
    let dfact = (1..a).step_by(2).fold(BigInt::one(), |acc, j| acc * j);
    BigRational::new(dfact, BigInt::one() << (a / 2))
}

/// Bilinear pairing `⟨f, g⟩ = ∫ f g dx dy`, exact.
///
/// With `dx dy = du dv / (2π)` the two `√π` factors cancel the Jacobian down
/// to a rational `1/2` per moment pair.
pub fn inner_product(f: &HermGaussFn, g: &HermGaussFn) -> GaussianRational {
    let half = BigRational::new(1.into(), 2.into());
    let max = f.coeffs.keys().chain(g.coeffs.keys()).map(|(a, b)| *a.max(b)).max().unwrap_or(0);
    let moments: Vec<BigRational> = (0..=2 * max).map(gaussian_moment).collect();
    let mut acc = GaussianRational::zero();
    for (&(a, b), x) in &f.coeffs {
        for (&(c, d), y) in &g.coeffs {
            let m = &moments[a + c] * &moments[b + d];
            if !m.is_zero() {
                acc += &(x * y).scale(&(m * &half));
            }
        }
    }
    acc
}

/// Sesquilinear form `(f, g) = ⟨f, ḡ⟩`.
pub fn hermitian_product(f: &HermGaussFn, g: &HermGaussFn) -> GaussianRational {
    inner_product(f, &g.conj())
}
