//! Hermite and Laguerre polynomials and the cosine power-reduction table.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{int, QPoly};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Physicists' Hermite polynomial via `H_{n+1} = 2x H_n − 2n H_{n−1}`.
pub fn hermite_poly(m: usize) -> QPoly {
    let mut prev = QPoly::zero();
    let mut cur = QPoly::one();
    let two_x = QPoly::from_ints(&[0, 2]);
    for n in 0..m {
        let next = &(&two_x * &cur) - &prev.scale(&int(2 * n as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized Laguerre polynomial
/// `L_n^(α)(x) = Σ_i (−1)^i C(n+α, n−i) x^i / i!`.
pub fn laguerre_poly(n: usize, alpha: usize) -> QPoly {
    let (n, alpha) = (n as u64, alpha as u64);
    QPoly::new(
        (0..=n)
            .map(|i| {
                let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                BigRational::new(sign * binomial(n + alpha, n - i), factorial(i))
            })
            .collect(),
    )
}

/// Coefficients `c_j` with `cos^n θ = Σ_j c_j cos(jθ)`.
pub fn cos_power_expand(n: usize) -> BTreeMap<usize, BigRational> {
    let mut out = BTreeMap::new();
    if n == 0 {
        out.insert(0, BigRational::one());
        return out;
    }
    let nn = n as u64;
    if n % 2 == 0 {
        let h = nn / 2;
        out.insert(0, BigRational::new(binomial(nn, h), BigInt::one() << n));
        for j in 1..=h {
            out.insert(2 * j as usize, BigRational::new(binomial(nn, h - j), BigInt::one() << (n - 1)));
        }
    } else {
        let h = (nn + 1) / 2;
        for j in 1..=h {
            out.insert((2 * j - 1) as usize, BigRational::new(binomial(nn, h - j), BigInt::one() << (n - 1)));
        }
    }
    out
}
