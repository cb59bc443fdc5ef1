//! Sturm chains, exact real-root counting and the critical-line substitution.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{GaussianRational, QPoly};
use crate::error::{Error, Result};

/// `ρ(t) = (−i)^d · p(1/2 + i·t)` with `d = deg p`.
///
/// `ρ` is real exactly when `p(1 − s) = (−1)^d p(s)`; any surviving
/// imaginary part is reported as [`Error::NonRealRestriction`].
pub fn critical_line_restriction(p: &QPoly) -> Result<QPoly> {
    let Some(d) = p.degree() else {
        return Ok(QPoly::zero());
    };
    let half = BigRational::new(1.into(), 2.into());
    let on_line = p
        .to_gaussian()
        .compose_linear(&GaussianRational::i(), &GaussianRational::real(half));
    let rotated = on_line.scale(&GaussianRational::i_pow(-(d as i64)));
    match rotated.coeffs().iter().position(|c| !c.is_real()) {
        Some(degree) => Err(Error::NonRealRestriction { degree }),
        None => Ok(rotated.to_real().expect("checked real")),
    }
}

/// Inverse of [`critical_line_restriction`]: `p(s) = i^d · ρ(−i(s − 1/2))`.
pub fn critical_line_inverse(rho: &QPoly) -> Result<QPoly> {
    let Some(d) = rho.degree() else {
        return Ok(QPoly::zero());
    };
    let half = BigRational::new(1.into(), 2.into());
    let minus_i = GaussianRational::from_ints(0, -1);
    let back = rho
        .to_gaussian()
        .compose_linear(&minus_i, &(&GaussianRational::from_ints(0, 1) * &GaussianRational::real(half)))
        .scale(&GaussianRational::i_pow(d as i64));
    match back.coeffs().iter().position(|c| !c.is_real()) {
        Some(degree) => Err(Error::NonRealRestriction { degree }),
        None => Ok(back.to_real().expect("checked real")),
    }
}

/// Classical Sturm chain `p0 = ρ, p1 = ρ′, p_{j+1} = −rem(p_{j−1}, p_j)`.
///
/// Each member is divided by the absolute value of its leading coefficient;
/// positive scaling leaves every sign sequence unchanged.
pub fn sturm_chain(rho: &QPoly) -> Vec<QPoly> {
    let norm = |p: QPoly| match p.leading() {
        Some(l) => {
            let inv = BigRational::one() / l.abs();
            p.scale(&inv)
        }
        None => p,
    };
    let mut chain = vec![norm(rho.clone())];
    let d = rho.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(norm(d));
    loop {
        let n = chain.len();
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        chain.push(norm(-&r));
    }
    chain
}

fn sign_changes(chain: &[QPoly], x: &BigRational) -> usize {
    let mut last = Ordering::Equal;
    let mut changes = 0;
    for p in chain {
        let v = p.eval(x);
        let s = v.cmp(&BigRational::zero());
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of `ρ` in the open interval `(lo, hi)`.
pub fn sturm_count(rho: &QPoly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if rho.is_zero() {
        return Err(Error::Domain("Sturm count of the zero polynomial".into()));
    }
    if lo >= hi {
        return Err(Error::Domain(format!("empty interval ({lo}, {hi})")));
    }
    for end in [lo, hi] {
        if rho.eval(end).is_zero() {
            return Err(Error::EndpointRoot { at: end.to_string() });
        }
    }
    let chain = sturm_chain(rho);
    Ok(count_with_chain(&chain, lo, hi))
}

fn count_with_chain(chain: &[QPoly], lo: &BigRational, hi: &BigRational) -> usize {
    sign_changes(chain, lo) - sign_changes(chain, hi)
}

/// True iff `gcd(ρ, ρ′)` is a nonzero constant, i.e. every root is simple.
pub fn squarefree_check(rho: &QPoly) -> bool {
    !rho.is_zero() && rho.gcd(&rho.derivative()).degree() == Some(0)
}

/// `1 + max_j |c_j / c_d|`; every complex root has modulus at most this.
pub fn cauchy_root_bound(rho: &QPoly) -> BigRational {
    let lead = rho.leading().expect("root bound of the zero polynomial").abs();
    let n = rho.coeffs().len() - 1;
    let max = rho.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    BigRational::one() + max
}

/// Total count of distinct real roots over `(−B−1, B+1)`, `B` the Cauchy bound.
pub fn real_root_total(rho: &QPoly) -> Result<usize> {
    if rho.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let b = cauchy_root_bound(rho) + BigRational::one();
    sturm_count(rho, &-b.clone(), &b)
}

/// Disjoint open intervals `(lo, hi)`, each holding exactly one real root,
/// with width below `width`. Endpoints are never roots.
pub fn isolate_real_roots(rho: &QPoly, width: &BigRational) -> Result<Vec<(BigRational, BigRational)>> {
    if rho.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(rho);
    let b = cauchy_root_bound(rho) + BigRational::one();
    let two = BigRational::from_integer(2.into());
    let mut pending = vec![(-b.clone(), b)];
    let mut out = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        let n = count_with_chain(&chain, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &(&hi - &lo) < width {
            out.push((lo, hi));
            continue;
        }
        let mut mid = (&lo + &hi) / &two;
        // Nudge off exact roots so endpoints stay root-free.
        let mut nudge = (&hi - &lo) / BigRational::from_integer(7.into());
        while rho.eval(&mid).is_zero() {
            mid = &mid + &nudge;
            nudge = nudge / &two;
        }
        pending.push((mid.clone(), hi));
        pending.push((lo, mid));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(critical_line_restriction(&QPoly::from_ints(&[1])).unwrap(), QPoly::from_ints(&[1]));
        assert_eq!(critical_line_restriction(&QPoly::from_ints(&[-1, 2])).unwrap(), QPoly::from_ints(&[0, 2]));
        assert_eq!(
            critical_line_restriction(&QPoly::from_ints(&[1, -2, 2])).unwrap(),
            QPoly::from_rationals([q(-1, 2), q(0, 1), q(2, 1)])
        );
    }

    #[test]
    fn restriction_rejects_asymmetric() {
        // s has its root at 0, off the line.
        assert!(matches!(
            critical_line_restriction(&QPoly::from_ints(&[0, 1])),
            Err(Error::NonRealRestriction { .. })
        ));
    }

    #[test]
    fn inverse_recovers() {
        let p = QPoly::from_ints(&[1, -2, 2]);
        let rho = critical_line_restriction(&p).unwrap();
        assert_eq!(critical_line_inverse(&rho).unwrap(), p);
    }

    #[test]
    fn sturm_examples() {
        let t2p1 = QPoly::from_ints(&[1, 0, 1]);
        assert_eq!(sturm_count(&t2p1, &q(-10, 1), &q(10, 1)).unwrap(), 0);
        let rho = QPoly::from_rationals([q(-1, 2), q(0, 1), q(2, 1)]);
        assert_eq!(sturm_count(&rho, &q(-1, 1), &q(1, 1)).unwrap(), 2);
        let cubic = QPoly::from_ints(&[0, -1, 0, 1]);
        assert_eq!(sturm_count(&cubic, &q(-2, 1), &q(2, 1)).unwrap(), 3);
        assert_eq!(sturm_count(&cubic, &q(-1, 2), &q(2, 1)).unwrap(), 2);
    }

    #[test]
    fn sturm_errors() {
        let cubic = QPoly::from_ints(&[0, -1, 0, 1]);
        assert!(matches!(sturm_count(&cubic, &q(-1, 1), &q(2, 1)), Err(Error::EndpointRoot { .. })));
        assert!(matches!(sturm_count(&cubic, &q(2, 1), &q(-2, 1)), Err(Error::Domain(_))));
        assert!(sturm_count(&QPoly::zero(), &q(-1, 1), &q(1, 1)).is_err());
    }

    #[test]
    fn sturm_counts_distinct_roots_of_nonsquarefree() {
        // (t-1)^2 (t+2): two distinct roots.
        let p = &QPoly::from_ints(&[1, -2, 1]) * &QPoly::from_ints(&[2, 1]);
        assert_eq!(real_root_total(&p).unwrap(), 2);
    }

    #[test]
    fn squarefree_examples() {
        assert!(squarefree_check(&QPoly::from_ints(&[-1, 0, 1])));
        assert!(!squarefree_check(&QPoly::from_ints(&[1, -2, 1])));
        assert!(squarefree_check(&QPoly::from_rationals([q(-1, 2), q(0, 1), q(2, 1)])));
        assert!(squarefree_check(&QPoly::from_ints(&[7])));
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_root_bound(&QPoly::from_ints(&[-1, 0, 1])), q(2, 1));
        assert_eq!(cauchy_root_bound(&QPoly::from_rationals([q(-1, 2), q(0, 1), q(2, 1)])), q(5, 4));
        assert_eq!(cauchy_root_bound(&QPoly::from_ints(&[0, 0, 0, 1])), q(1, 1));
    }

    #[test]
    fn isolation_brackets_each_root() {
        let p = QPoly::from_ints(&[0, -1, 0, 1]);
        let w = q(1, 1000);
        let iv = isolate_real_roots(&p, &w).unwrap();
        assert_eq!(iv.len(), 3);
        for ((lo, hi), root) in iv.iter().zip([q(-1, 1), q(0, 1), q(1, 1)]) {
            assert!(lo < &root && &root < hi && &(hi - lo) < &w);
        }
    }
}
