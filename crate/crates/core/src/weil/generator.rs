//! The su(2) basis `{J, K, R}` and its action `dω` on polynomial × Gaussian functions.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::hermgauss::HermGaussFn;
use crate::exact::{rat, GaussianRational};

/// 2×2 matrix over ℚ[i], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2(pub [[GaussianRational; 2]; 2]);

impl Mat2 {
    pub fn zero() -> Self {
        let z = GaussianRational::zero;
        Mat2([[z(), z()], [z(), z()]])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let a = &self.0;
        let b = &o.0;
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn sub(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| &self.0[i][j] - &o.0[i][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let e = |i: usize, j: usize| &self.0[i][j] * c;
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn add(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| &self.0[i][j] + &o.0[i][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> GaussianRational {
        &self.0[0][0] + &self.0[1][1]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SU2Generator {
    J,
    K,
    R,
}

impl SU2Generator {
    pub const ALL: [SU2Generator; 3] = [SU2Generator::J, SU2Generator::K, SU2Generator::R];

    pub fn matrix(self) -> Mat2 {
        let z = GaussianRational::zero;
        let one = GaussianRational::one;
        let i = GaussianRational::i;
        match self {
            SU2Generator::J => Mat2([[z(), one()], [-one(), z()]]),
            SU2Generator::K => Mat2([[z(), i()], [i(), z()]]),
            SU2Generator::R => Mat2([[i(), z()], [z(), -i()]]),
        }
    }
}

impl fmt::Display for SU2Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for SU2Generator {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "J" | "j" => Ok(SU2Generator::J),
            "K" | "k" => Ok(SU2Generator::K),
            "R" | "r" => Ok(SU2Generator::R),
            _ => Err(crate::Error::Domain(format!("unknown generator {s:?}"))),
        }
    }
}

/// `a·J + b·K + c·R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    pub j: GaussianRational,
    pub k: GaussianRational,
    pub r: GaussianRational,
}

impl LieElement {
    pub fn from_matrix(m: &Mat2) -> Option<Self> {
        if !m.trace().is_zero() {
            return None;
        }
        // [[p, q], [r, −p]] = aJ + bK + cR with c = −ip, a = (q−r)/2, b = (q+r)/(2i).
        let [[p, q], [r, _]] = &m.0;
        let half = GaussianRational::real(rat(1, 2));
        let c = -(&GaussianRational::i() * p);
        let a = &(q - r) * &half;
        let b = &(&(q + r) * &half) * &GaussianRational::from_ints(0, -1);
        Some(LieElement { j: a, k: b, r: c })
    }

    pub fn to_matrix(&self) -> Mat2 {
        SU2Generator::J
            .matrix()
            .scale(&self.j)
            .add(&SU2Generator::K.matrix().scale(&self.k))
            .add(&SU2Generator::R.matrix().scale(&self.r))
    }

    pub fn is_zero(&self) -> bool {
        self.j.is_zero() && self.k.is_zero() && self.r.is_zero()
    }
}

fn half_i() -> GaussianRational {
    GaussianRational::new(rat(0, 1), rat(1, 2))
}

/// `(i/2)(u² − v²) f`: the multiplication part of `dω(J)`.
pub fn j_multiplication(f: &HermGaussFn) -> HermGaussFn {
    (&f.mul_u().mul_u() - &f.mul_v().mul_v()).scale(&half_i())
}

/// `−(i/2)(∂²_u − ∂²_v) f`: the differential part of `dω(J)`.
pub fn j_differential(f: &HermGaussFn) -> HermGaussFn {
    (&f.du().du() - &f.dv().dv()).scale(&-half_i())
}

/// `−i·uv f`: the multiplication part of `dω(K)`.
pub fn k_multiplication(f: &HermGaussFn) -> HermGaussFn {
    f.mul_u().mul_v().scale(&GaussianRational::from_ints(0, -1))
}

/// `i ∂_u∂_v f`: the differential part of `dω(K)`.
pub fn k_differential(f: &HermGaussFn) -> HermGaussFn {
    f.du().dv().scale(&GaussianRational::i())
}

pub fn apply_generator(x: SU2Generator, f: &HermGaussFn) -> HermGaussFn {
    match x {
        SU2Generator::J => &j_multiplication(f) + &j_differential(f),
        SU2Generator::K => &k_multiplication(f) + &k_differential(f),
        SU2Generator::R => &f.dv().mul_u() - &f.du().mul_v(),
    }
}

pub fn apply_element(x: &LieElement, f: &HermGaussFn) -> HermGaussFn {
    let mut out = HermGaussFn::zero();
    for (g, c) in [(SU2Generator::J, &x.j), (SU2Generator::K, &x.k), (SU2Generator::R, &x.r)] {
        if !c.is_zero() {
            out = &out + &apply_generator(g, f).scale(c);
        }
    }
    out
}

/// `(u² + v²)/2 − (∂²_u + ∂²_v)/2`.
pub fn harmonic_oscillator(f: &HermGaussFn) -> HermGaussFn {
    let half = rat(1, 2);
    let mult = &f.mul_u().mul_u() + &f.mul_v().mul_v();
    let lap = &f.du().du() + &f.dv().dv();
    (&mult - &lap).scale_q(&half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weil::hermgauss::{hermite_fn, HermiteExpansion};

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn matrix_brackets() {
        use SU2Generator::*;
        let br = |x: SU2Generator, y: SU2Generator| LieElement::from_matrix(&x.matrix().bracket(&y.matrix())).unwrap();
        assert_eq!(br(R, J), LieElement { j: g(0, 0), k: g(2, 0), r: g(0, 0) });
        assert_eq!(br(J, K), LieElement { j: g(0, 0), k: g(0, 0), r: g(2, 0) });
        assert_eq!(br(K, R), LieElement { j: g(2, 0), k: g(0, 0), r: g(0, 0) });
        assert!(br(J, J).is_zero());
    }

    #[test]
    fn decomposition_round_trip() {
        let e = LieElement { j: g(1, 2), k: g(-3, 1), r: g(0, 5) };
        assert_eq!(LieElement::from_matrix(&e.to_matrix()), Some(e));
        let mut m = Mat2::zero();
        m.0[0][0] = g(1, 0);
        assert_eq!(LieElement::from_matrix(&m), None);
    }

    #[test]
    fn generator_examples() {
        use SU2Generator::*;
        assert_eq!(apply_generator(J, &hermite_fn(1, 0)), hermite_fn(1, 0).scale(&g(0, 1)));
        assert_eq!(apply_generator(R, &hermite_fn(1, 0)), hermite_fn(0, 1).scale(&g(-1, 0)));
        // The multiplication and differential parts cancel on the Gaussian.
        assert!(apply_generator(K, &hermite_fn(0, 0)).is_zero());
        assert_eq!(
            k_multiplication(&hermite_fn(0, 0)).to_hermite(),
            HermiteExpansion::basis(1, 1, GaussianRational::new(rat(0, 1), rat(-1, 4)))
        );
    }
}
