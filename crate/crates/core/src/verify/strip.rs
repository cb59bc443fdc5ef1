//! Random instances of the strip-shrinking lemma: if every zero of `q` has
//! `|Re| ≤ c` then every zero of `(s+a)q(s+b) − (s−a)q(s−b)` has `|Re| < c`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analytic::{root_find, Real, DEFAULT_PRECISION};
use crate::error::{Error, Result};
use crate::exact::{rat, BigRational, GaussianRational, QPoly, UniPoly};

/// Required distance between a zero of `r` and the strip boundary.
pub const STRIP_MARGIN: f64 = 1e-20;

#[derive(Clone, Debug, Serialize)]
pub struct StripInstance {
    /// Half-width of the strip containing the zeros of `q`.
    pub c: String,
    pub a: String,
    pub b: String,
    /// Zeros of `q` as `(re, im)` rational strings.
    pub q_roots: Vec<(String, String)>,
    /// Ascending coefficients of `q`.
    pub q_coeffs: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StripOutcome {
    pub instance: StripInstance,
    /// `c − max |Re z|` over the zeros `z` of `r`; `None` when `r` is constant.
    pub margin: Option<f64>,
}

/// `(s+a)q(s+b) − (s−a)q(s−b)`.
pub fn strip_transform(q: &QPoly, a: &BigRational, b: &BigRational) -> QPoly {
    let plus = &QPoly::linear(rat(1, 1), a.clone()) * &q.shift(b);
    let minus = &QPoly::linear(rat(1, 1), -a.clone()) * &q.shift(&-b.clone());
    &plus - &minus
}

fn show(q: &BigRational) -> String {
    q.to_string()
}

/// One instance with a real polynomial `q` of degree ≤ 6 built from its zeros:
/// real zeros and conjugate pairs with real parts on a grid of `[−c, c]`
/// (boundary included) and imaginary parts on a grid of `[−5, 5]`.
pub fn sample_instance(rng: &mut impl Rng) -> (QPoly, BigRational, BigRational, BigRational, Vec<(BigRational, BigRational)>) {
    let c = rat(rng.gen_range(4..=48), 16);
    let a = rat(rng.gen_range(1..=64), rng.gen_range(1..=16));
    let b = rat(rng.gen_range(1..=64), rng.gen_range(1..=16));
    let degree = rng.gen_range(0..=6usize);
    let mut roots = Vec::new();
    let mut q = QPoly::one();
    while roots.len() < degree {
        let re = &c * &rat(rng.gen_range(-16..=16), 16);
        let pair = roots.len() + 2 <= degree && rng.gen_bool(0.5);
        if pair {
            let im = rat(rng.gen_range(1..=40), 8);
            // (s − z)(s − z̄) = s² − 2 Re z · s + |z|².
            let norm = &re * &re + &im * &im;
            q = &q * &QPoly::from_rationals([norm, -(&re * &rat(2, 1)), rat(1, 1)]);
            roots.push((re.clone(), im.clone()));
            roots.push((re, -im));
        } else {
            q = &q * &QPoly::linear(rat(1, 1), -re.clone());
            roots.push((re, rat(0, 1)));
        }
    }
    (q, c, a, b, roots)
}

fn check_instance(
    q: &QPoly,
    c: &BigRational,
    a: &BigRational,
    b: &BigRational,
    roots: &[(BigRational, BigRational)],
    precision: usize,
) -> Result<StripOutcome> {
    let instance = StripInstance {
        c: show(c),
        a: show(a),
        b: show(b),
        q_roots: roots.iter().map(|(x, y)| (show(x), show(y))).collect(),
        q_coeffs: q.coeffs().iter().map(show).collect(),
    };
    let r = strip_transform(q, a, b);
    if r.degree().unwrap_or(0) == 0 {
        return Ok(StripOutcome { instance, margin: None });
    }
    let zeros = root_find(&r.to_gaussian(), precision)?;
    let cr = Real::from_rational(c, precision);
    let margin = zeros
        .iter()
        .map(|z| (&cr - &z.root.re.abs()).to_f64())
        .fold(f64::INFINITY, f64::min);
    Ok(StripOutcome { instance, margin: Some(margin) })
}

/// Runs `trials` seeded instances and returns their outcomes; the first
/// instance whose margin is not above [`STRIP_MARGIN`] is a `PropertyViolated`.
pub fn strip_shrink_outcomes(trials: usize, seed: u64) -> Result<Vec<StripOutcome>> {
    if trials == 0 {
        return Err(Error::Domain("strip_shrink_property needs trials >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let (q, c, a, b, roots) = sample_instance(&mut rng);
        let outcome = check_instance(&q, &c, &a, &b, &roots, DEFAULT_PRECISION)?;
        if outcome.margin.is_some_and(|m| !(m > STRIP_MARGIN)) {
            return Err(Error::PropertyViolated { counterexample: serde_json::to_string(&outcome)? });
        }
        out.push(outcome);
    }
    Ok(out)
}

/// `true` when every seeded instance satisfies the lemma.
pub fn strip_shrink_property(trials: usize, seed: u64) -> Result<bool> {
    strip_shrink_outcomes(trials, seed).map(|_| true)
}

/// Checks one explicitly given instance with complex zeros allowed.
pub fn strip_check_complex(roots: &[GaussianRational], c: &BigRational, a: &BigRational, b: &BigRational) -> Result<Option<f64>> {
    let q = roots.iter().fold(UniPoly::one(), |acc, z| &acc * &UniPoly::linear(GaussianRational::from_ints(1, 0), -z.clone()));
    let (ga, gb) = (GaussianRational::real(a.clone()), GaussianRational::real(b.clone()));
    let one = GaussianRational::from_ints(1, 0);
    let r = &(&UniPoly::linear(one.clone(), ga.clone()) * &q.shift(&gb)) - &(&UniPoly::linear(one, -ga) * &q.shift(&-gb));
    if r.degree().unwrap_or(0) == 0 {
        return Ok(None);
    }
    let zeros = root_find(&r, DEFAULT_PRECISION)?;
    let cr = Real::from_rational(c, DEFAULT_PRECISION);
    Ok(Some(zeros.iter().map(|z| (&cr - &z.root.re.abs()).to_f64()).fold(f64::INFINITY, f64::min)))
}
