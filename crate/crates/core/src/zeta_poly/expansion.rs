//! Angular decomposition of `H_m(√(2π) r cos θ)` and the Mellin-expansion route.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::orthopoly::{cos_power_expand, hermite_poly};
use super::{is_admissible, Route, ZetaPolyRecord};
use crate::exact::{rat, QPoly};

/// The `cos(kθ)` components of `H_m(√(2π) r cos θ)`.
///
/// Component `k` is `(2π)^{k/2} r^k a(2πr²) cos(kθ)` and the map stores the
/// rational polynomial `a` in the variable `w = 2πr²`.
#[derive(Clone, Debug, PartialEq)]
pub struct AngularDecomposition {
    pub m: usize,
    pub components: BTreeMap<usize, QPoly>,
}

pub fn angular_decompose(m: usize) -> AngularDecomposition {
    let h = hermite_poly(m);
    let tables: Vec<_> = (0..=m).map(cos_power_expand).collect();
    let mut components = BTreeMap::new();
    for k in (m % 2..=m).step_by(2) {
        let coeffs = (0..=(m - k) / 2)
            .map(|j| {
                let i = k + 2 * j;
                let c = tables[i].get(&k).cloned().unwrap_or_else(BigRational::zero);
                h.coeff(i) * c
            })
            .collect();
        components.insert(k, QPoly::new(coeffs));
    }
    AngularDecomposition { m, components }
}

/// Unnormalized polynomial `Σ_j b_j 2^j (s + k/2)_j` from `a(w) = Σ_j b_j w^j`.
///
/// Each `w^j` term contributes `∫ r^{2s−1+k+2j} e^{−πr²} dr = Γ(s+j+k/2) / (2π^{s+j+k/2})`
/// times `(2π)^j`, and `Γ(s+j+k/2) = Γ(s+k/2)·(s+k/2)_j`.
pub(crate) fn raw_expansion_poly(m: usize, k: usize) -> QPoly {
    let dec = angular_decompose(m);
    let a = &dec.components[&k];
    let base = rat(k as i64, 2);
    let mut rising = QPoly::one();
    let mut pow2 = BigRational::one();
    let mut acc = QPoly::zero();
    for (j, b) in a.coeffs().iter().enumerate() {
        if j > 0 {
            let factor = QPoly::linear(BigRational::one(), &base + BigRational::from_integer(BigInt::from(j - 1)));
            rising = &rising * &factor;
            pow2 = pow2 * BigRational::from_integer(2.into());
        }
        acc = &acc + &rising.scale(&(b * &pow2));
    }
    acc
}

/// Scale `λ` with `raw = λ · p`, `p` the primitive-normalized polynomial.
pub fn expansion_scale(m: usize, k: usize) -> Option<BigRational> {
    if !is_admissible(m, k) {
        return None;
    }
    let raw = raw_expansion_poly(m, k);
    let p = raw.primitive_positive();
    Some(raw.leading().unwrap() / p.leading().unwrap())
}

pub fn zeta_poly_expansion(m: usize, k: usize) -> ZetaPolyRecord {
    if !is_admissible(m, k) {
        return ZetaPolyRecord::vanishing(m, k, Route::Expansion);
    }
    let p = raw_expansion_poly(m, k).primitive_positive();
    ZetaPolyRecord::from_poly(m, k, p, Route::Expansion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn decomposition_examples() {
        let d0 = angular_decompose(0);
        assert_eq!(d0.components, BTreeMap::from([(0, QPoly::from_ints(&[1]))]));
        let d2 = angular_decompose(2);
        assert_eq!(d2.components[&0], QPoly::from_ints(&[-2, 2]));
        assert_eq!(d2.components[&2], QPoly::from_ints(&[2]));
        // H_3 = 8x³ − 12x: cos³θ = (3cosθ + cos3θ)/4 gives 6w − 12 and 2.
        let d3 = angular_decompose(3);
        assert_eq!(d3.components[&1], QPoly::from_ints(&[-12, 6]));
        assert_eq!(d3.components[&3], QPoly::from_ints(&[2]));
    }

    #[test]
    fn component_degrees() {
        for m in 0..20 {
            let d = angular_decompose(m);
            for (k, a) in &d.components {
                assert_eq!(a.degree(), Some((m - k) / 2), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn reconstruction_at_sample_point() {
        // Numeric check at (r, θ) = (1, π/7) in f64 for small m.
        let (r, th) = (1.0f64, std::f64::consts::PI / 7.0);
        let two_pi = 2.0 * std::f64::consts::PI;
        for m in 0..10 {
            let h = hermite_poly(m);
            let x = two_pi.sqrt() * r * th.cos();
            let lhs: f64 = h.coeffs().iter().rev().fold(0.0, |acc, c| acc * x + rf(c));
            let dec = angular_decompose(m);
            let rhs: f64 = dec
                .components
                .iter()
                .map(|(&k, a)| {
                    let w = two_pi * r * r;
                    let av: f64 = a.coeffs().iter().rev().fold(0.0, |acc, c| acc * w + rf(c));
                    two_pi.powf(k as f64 / 2.0) * r.powi(k as i32) * av * (k as f64 * th).cos()
                })
                .sum();
            assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1.0), "m={m}: {lhs} vs {rhs}");
        }
    }

    fn rf(c: &BigRational) -> f64 {
        use num_traits::ToPrimitive;
        c.to_f64().unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(zeta_poly_expansion(0, 0).coeffs, QPoly::from_ints(&[1]));
        assert!(zeta_poly_expansion(3, 0).is_zero);
        assert_eq!(zeta_poly_expansion(2, 0).coeffs, QPoly::from_ints(&[-1, 2]));
        assert_eq!(zeta_poly_expansion(4, 0).coeffs, QPoly::from_ints(&[1, -2, 2]));
        assert_eq!(zeta_poly_expansion(3, 1).coeffs, QPoly::from_ints(&[-1, 2]));
    }

    #[test]
    fn expansion_scales() {
        // raw polynomials: 4s − 2, 24s² − 24s + 12, 12s − 6.
        assert_eq!(expansion_scale(2, 0), Some(int(2)));
        assert_eq!(expansion_scale(4, 0), Some(int(12)));
        assert_eq!(expansion_scale(3, 1), Some(int(6)));
        assert_eq!(expansion_scale(3, 0), None);
    }
}
