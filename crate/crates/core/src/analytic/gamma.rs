//! Complex Gamma function at arbitrary precision.
//!
//! Reflection for `Re s < 1/2`, an upward shift `Γ(z) = Γ(z+N) / (z)_N` until
//! `|z+N|` is large enough for the Stirling series to reach working precision,
//! then `ln Γ(z) = (z−½)ln z − z + ½ ln 2π + Σ B_{2n} / (2n(2n−1) z^{2n−1})`.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::real::{BigComplex, Real};
use crate::error::{Error, Result};
use crate::zeta_poly::binomial;

const GUARD_BITS: usize = 40;

/// `B_0, B_1, …, B_n` (with `B_1 = −1/2`), grown on demand and shared.
fn bernoulli_upto(n: usize) -> Vec<BigRational> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut b = cache.lock().unwrap();
    while b.len() <= n {
        let m = b.len();
        // Σ_{j=0}^{m} C(m+1, j) B_j = 0.
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binomial((m + 1) as u64, j as u64)) * bj;
        }
        let next = -acc / BigRational::from_integer(BigInt::from(m + 1));
        b.push(next);
    }
    b[..=n].to_vec()
}

/// Stirling series for `ln Γ(z)`, `|z|` already large and `Re z > 0`.
fn ln_gamma_stirling(z: &BigComplex, w: usize) -> BigComplex {
    let half = Real::from_rational(&BigRational::new(1.into(), 2.into()), w);
    let two_pi = &Real::pi(w) * &Real::from_i64(2, w);
    let ln_z = z.ln();
    let z_minus_half = BigComplex::new(&z.re - &half, z.im.clone());
    let mut acc = &(&z_minus_half * &ln_z) - z;
    acc.re = &acc.re + &(&two_pi.ln() * &half);

    let zinv = z.inv();
    let zinv2 = &zinv * &zinv;
    let mut zpow = zinv.clone();
    let eps = Real::from_f64(0.5, w).powi(w);
    let mut prev_mag: Option<Real> = None;
    let mut n = 1usize;
    loop {
        let b = &bernoulli_upto(2 * n)[2 * n];
        let denom = BigInt::from(2 * n) * BigInt::from(2 * n - 1);
        let c = Real::from_rational(&(b / BigRational::from_integer(denom)), w);
        let term = zpow.scale(&c);
        let mag = term.abs();
        if let Some(pm) = &prev_mag {
            // Asymptotic series: stop before the terms start to grow.
            if &mag > pm {
                break;
            }
        }
        acc = &acc + &term;
        if mag < eps {
            break;
        }
        prev_mag = Some(mag);
        zpow = &zpow * &zinv2;
        n += 1;
    }
    acc
}

/// Complex Gamma at the precision of `s`.
pub fn gamma_complex(s: &BigComplex) -> Result<BigComplex> {
    let p = s.precision();
    let w = p + GUARD_BITS;
    let s = s.with_precision(w);
    let half = Real::from_f64(0.5, w);
    if s.re < half {
        let n = (&s.re + &half).floor();
        let d = BigComplex::new(&s.re - &n, s.im.clone()).abs().to_f64();
        if d < 1e-15 {
            return Err(Error::PoleProximity { at: format!("{}", s.with_precision(p)), distance: format!("{d:e}") });
        }
        // Γ(s) = π / (sin(πs) Γ(1−s)).
        let pi = Real::pi(w);
        let one_minus = BigComplex::new(&Real::one(w) - &s.re, -&s.im);
        let g = gamma_right(&one_minus, w);
        let sin = s.scale(&pi).sin();
        let out = &BigComplex::from_real(pi) / &(&sin * &g);
        return Ok(out.with_precision(p));
    }
    Ok(gamma_right(&s, w).with_precision(p))
}

fn gamma_right(z: &BigComplex, w: usize) -> BigComplex {
    let r0 = 0.12 * w as f64 + 4.0;
    let mut shifted = z.clone();
    let mut poch = BigComplex::one(w);
    let one = Real::one(w);
    while shifted.abs().to_f64() < r0 {
        poch = &poch * &shifted;
        shifted.re = &shifted.re + &one;
    }
    let lg = ln_gamma_stirling(&shifted, w);
    &lg.exp() / &poch
}

/// `|Γ(s)|²`.
pub fn gamma_abs_sqr(s: &BigComplex) -> Result<Real> {
    Ok(gamma_complex(s)?.norm_sqr())
}
