//! Aberth–Ehrlich simultaneous root refinement.

use serde::Serialize;

use super::real::{BigComplex, Real};
use crate::error::{Error, Result};
use crate::exact::UniPoly;

#[derive(Clone, Debug)]
pub struct RootEstimate {
    pub root: BigComplex,
    /// `|p(z)| / |p'(z)|`, the Newton step length at the final iterate.
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSummary {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

impl RootEstimate {
    pub fn summary(&self) -> RootSummary {
        let (re, im) = self.root.to_f64();
        RootSummary { re, im, residual: self.residual }
    }
}

const RESIDUAL_TOL: f64 = 1e-25;
const CLUSTER_TOL: f64 = 1e-15;
const MAX_ITER: usize = 2000;
const MAX_DOUBLINGS: usize = 3;

fn horner(c: &[BigComplex], z: &BigComplex) -> (BigComplex, BigComplex) {
    let p = z.precision();
    let mut v = BigComplex::zero(p);
    let mut d = BigComplex::zero(p);
    for a in c.iter().rev() {
        d = &(&d * z) + &v;
        v = &(&v * z) + a;
    }
    (v, d)
}

fn aberth(p: &UniPoly, w: usize) -> Option<Vec<BigComplex>> {
    let n = p.degree()?;
    let lead = BigComplex::from_gaussian(p.leading()?, w);
    let c: Vec<BigComplex> = p.coeffs().iter().map(|a| &BigComplex::from_gaussian(a, w) / &lead).collect();
    // Fujiwara bound on the root moduli.
    let radius = (0..n)
        .map(|i| c[i].abs().to_f64().powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        * 2.0;
    let radius = radius.max(1e-3);
    let mut z: Vec<BigComplex> = (0..n)
        .map(|j| {
            let th = 2.0 * std::f64::consts::PI * j as f64 / n as f64 + 0.4;
            BigComplex::from_f64(radius * th.cos(), radius * th.sin(), w)
        })
        .collect();
    let stop = Real::from_f64(0.5, w).powi(w - 8);
    let loose = Real::from_f64(0.5, w).powi(w / 2);
    let one = BigComplex::one(w);
    let mut prev_step: Vec<Option<Real>> = vec![None; n];
    for _ in 0..MAX_ITER {
        let mut done = true;
        for i in 0..n {
            let (v, d) = horner(&c, &z[i]);
            if v.is_zero() {
                continue;
            }
            if d.is_zero() {
                // Stationary point: nudge off it.
                z[i] = &z[i] + &BigComplex::from_f64(1e-10, 1e-10, w);
                done = false;
                continue;
            }
            let newton = &v / &d;
            let mut s = BigComplex::zero(w);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    s = &s + &(&z[i] - zj).inv();
                }
            }
            let step = &newton / &(&one - &(&newton * &s));
            let scale = z[i].abs().max(&Real::one(w));
            let len = step.abs();
            // Converged at full precision, or stagnated at the rounding-noise floor.
            let stagnated = len < &loose * &scale
                && prev_step[i].as_ref().is_some_and(|ps| &len.scale_int(2) > ps);
            if len > &stop * &scale && !stagnated {
                done = false;
            }
            prev_step[i] = Some(len);
            z[i] = &z[i] - &step;
        }
        if done {
            return Some(z);
        }
    }
    None
}

fn min_separation(z: &[BigComplex]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            best = best.min((&z[i] - &z[j]).abs().to_f64());
        }
    }
    best
}

/// All complex roots of `p` at `precision` bits, doubling the precision when
/// roots cluster closer than `1e−15` or a residual exceeds `1e−25`.
pub fn root_find(p: &UniPoly, precision: usize) -> Result<Vec<RootEstimate>> {
    let n = match p.degree() {
        None => return Err(Error::Domain("root_find of the zero polynomial".into())),
        Some(0) => return Err(Error::Domain("root_find needs degree >= 1".into())),
        Some(n) => n,
    };
    let mut w = precision;
    let mut last_fail = 0;
    for _ in 0..=MAX_DOUBLINGS {
        let Some(z) = aberth(p, w) else {
            last_fail = MAX_ITER;
            w *= 2;
            continue;
        };
        let coeffs: Vec<BigComplex> = p.coeffs().iter().map(|a| BigComplex::from_gaussian(a, w)).collect();
        let out: Vec<RootEstimate> = z
            .into_iter()
            .map(|root| {
                let (v, d) = horner(&coeffs, &root);
                let residual = if v.is_zero() { 0.0 } else { (&v.abs() / &d.abs()).to_f64() };
                RootEstimate { root: root.with_precision(precision), residual }
            })
            .collect();
        let clustered = n > 1 && min_separation(&out.iter().map(|r| r.root.clone()).collect::<Vec<_>>()) < CLUSTER_TOL;
        let worst = out.iter().map(|r| r.residual).fold(0.0, f64::max);
        if !clustered && worst <= RESIDUAL_TOL {
            return Ok(out);
        }
        if w >= precision << MAX_DOUBLINGS {
            if worst <= RESIDUAL_TOL {
                return Ok(out);
            }
            break;
        }
        w *= 2;
    }
    Err(Error::NoConvergence { iterations: last_fail.max(MAX_ITER) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{GaussianRational, QPoly};

    fn near(z: &BigComplex, re: f64, im: f64) -> bool {
        (z - &BigComplex::from_f64(re, im, z.precision())).abs().to_f64() < 1e-30
    }

    #[test]
    fn linear_and_quadratic() {
        let r = root_find(&QPoly::from_ints(&[-1, 2]).to_gaussian(), 128).unwrap();
        assert_eq!(r.len(), 1);
        assert!(near(&r[0].root, 0.5, 0.0));
        assert!(r[0].residual < 1e-30);

        let r = root_find(&QPoly::from_ints(&[1, -2, 2]).to_gaussian(), 128).unwrap();
        assert!(r.iter().any(|x| near(&x.root, 0.5, 0.5)));
        assert!(r.iter().any(|x| near(&x.root, 0.5, -0.5)));

        let r = root_find(&QPoly::from_ints(&[1, 0, 1]).to_gaussian(), 128).unwrap();
        assert!(r.iter().any(|x| near(&x.root, 0.0, 1.0)));
        assert!(r.iter().any(|x| near(&x.root, 0.0, -1.0)));
    }

    #[test]
    fn complex_coefficients() {
        // (s − i)(s − 2) = s² − (2+i)s + 2i.
        let p = UniPoly::new(vec![
            GaussianRational::from_ints(0, 2),
            GaussianRational::from_ints(-2, -1),
            GaussianRational::from_ints(1, 0),
        ]);
        let r = root_find(&p, 128).unwrap();
        assert!(r.iter().any(|x| near(&x.root, 0.0, 1.0)));
        assert!(r.iter().any(|x| near(&x.root, 2.0, 0.0)));
    }

    #[test]
    fn wilkinson_like() {
        // Π_{j=1}^{12} (s − j): badly conditioned but simple roots.
        let mut p = QPoly::one();
        for j in 1..=12 {
            p = &p * &QPoly::from_ints(&[-j, 1]);
        }
        let r = root_find(&p.to_gaussian(), 128).unwrap();
        for j in 1..=12 {
            assert!(r.iter().any(|x| (&x.root - &BigComplex::from_f64(j as f64, 0.0, 128)).abs().to_f64() < 1e-20));
        }
    }

    #[test]
    fn rejects_constants() {
        assert!(matches!(root_find(&UniPoly::one(), 128), Err(Error::Domain(_))));
    }
}
