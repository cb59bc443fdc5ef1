//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::GaussianRational;

/// Exact coefficient field usable in [`Poly`].
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn from_rational(q: BigRational) -> Self;
}

impl Scalar for BigRational {
    fn from_rational(q: BigRational) -> Self {
        q
    }
}

impl Scalar for GaussianRational {
    fn from_rational(q: BigRational) -> Self {
        GaussianRational::real(q)
    }
}

/// Polynomial with coefficients in ascending degree order. The highest
/// stored coefficient is never zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Polynomial over ℚ.
pub type QPoly = Poly<BigRational>;
/// Polynomial over ℚ[i].
pub type UniPoly = Poly<GaussianRational>;

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `s`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, n: usize) -> Self {
        let mut v = vec![T::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    /// `a·s + b`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![b, a])
    }

    pub fn from_rationals<I: IntoIterator<Item = BigRational>>(it: I) -> Self {
        Self::new(it.into_iter().map(T::from_rational).collect())
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::from_rationals(v.iter().map(|&c| BigRational::from_integer(c.into())))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &T::from_rational(BigRational::from_integer(i.into())))
                .collect(),
        )
    }

    /// `p(a·s + b)`.
    pub fn compose_linear(&self, a: &T, b: &T) -> Self {
        let lin = Self::linear(a.clone(), b.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// `p(s + delta)`.
    pub fn shift(&self, delta: &T) -> Self {
        self.compose_linear(&T::one(), delta)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone() / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Scale to leading coefficient one; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = T::one() / l;
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Render in the named variable, highest degree first.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = c.to_string();
            let (neg, body) = match body.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, body),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let compound = body.contains(['+', '-', 'i']);
            let body = if compound { format!("({body})") } else { body };
            match i {
                0 => out.push_str(&body),
                _ => {
                    if body != "1" {
                        out.push_str(&body);
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl QPoly {
    /// Embed into ℚ[i].
    pub fn to_gaussian(&self) -> UniPoly {
        self.map(|c| GaussianRational::real(c.clone()))
    }

    /// Multiply through by the lcm of denominators and divide by the content,
    /// making the leading coefficient positive.
    pub fn primitive_positive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(num_bigint::BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<_> = self.coeffs.iter().map(|c| (c * &BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let content = ints.iter().fold(num_bigint::BigInt::zero(), |g, c| g.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -num_bigint::BigInt::one() } else { num_bigint::BigInt::one() };
        let div = content * sign;
        Self::new(ints.into_iter().map(|c| BigRational::from_integer(c / &div)).collect())
    }
}

impl UniPoly {
    /// The real polynomial, if every coefficient has zero imaginary part.
    pub fn to_real(&self) -> Option<QPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_real().then(|| c.re.clone()))
            .collect::<Option<Vec<_>>>()
            .map(QPoly::new)
    }

    pub fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("s"))
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.display("s"))
    }
}

/// `p(s + delta)` for a polynomial over ℚ.
pub fn poly_shift(p: &QPoly, delta: &BigRational) -> QPoly {
    p.shift(delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn shift_examples() {
        let s2 = QPoly::from_ints(&[0, 0, 1]);
        assert_eq!(poly_shift(&s2, &q(1, 1)), QPoly::from_ints(&[1, 2, 1]));
        let lin = QPoly::from_ints(&[-1, 2]);
        assert_eq!(poly_shift(&lin, &q(1, 2)), QPoly::from_ints(&[0, 2]));
    }

    #[test]
    fn shift_quadratic_against_interpolation() {
        // Oracle: sample p(x + 1/2) at three points and solve the Vandermonde
        // system by Lagrange interpolation.
        let p = QPoly::from_ints(&[1, -2, 2]);
        let delta = q(1, 2);
        let xs = [q(0, 1), q(1, 1), q(2, 1)];
        let ys: Vec<_> = xs.iter().map(|x| p.eval(&(x + &delta))).collect();
        let mut interp = QPoly::zero();
        for i in 0..3 {
            let mut basis = QPoly::one();
            for j in 0..3 {
                if i != j {
                    let factor = QPoly::linear(q(1, 1), -xs[j].clone()).scale(&(q(1, 1) / (&xs[i] - &xs[j])));
                    basis = &basis * &factor;
                }
            }
            interp = &interp + &basis.scale(&ys[i]);
        }
        assert_eq!(interp, QPoly::from_rationals([q(1, 2), q(0, 1), q(2, 1)]));
        assert_eq!(poly_shift(&p, &delta), interp);
    }

    #[test]
    fn division_and_gcd() {
        let a = QPoly::from_ints(&[-1, 0, 1]); // (s-1)(s+1)
        let b = QPoly::from_ints(&[1, -2, 1]); // (s-1)^2
        let (qt, r) = a.div_rem(&b);
        assert_eq!(&(&qt * &b) + &r, a);
        assert_eq!(a.gcd(&b), QPoly::from_ints(&[-1, 1]));
        assert_eq!(QPoly::from_ints(&[3]).gcd(&QPoly::zero()), QPoly::one());
    }

    #[test]
    fn primitive_normalization() {
        let p = QPoly::from_rationals([q(3, 2), q(-3, 1), q(-6, 1)]);
        assert_eq!(p.primitive_positive(), QPoly::from_ints(&[-1, 2, 4]));
        assert!(QPoly::zero().primitive_positive().is_zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(QPoly::from_ints(&[1, -2, 2]).to_string(), "2s^2 - 2s + 1");
        assert_eq!(QPoly::from_rationals([q(-1, 2), q(0, 1), q(2, 1)]).display("t"), "2t^2 - 1/2");
        assert_eq!(QPoly::zero().to_string(), "0");
        let g = UniPoly::new(vec![GaussianRational::from_ints(1, -1), GaussianRational::from_ints(0, 1)]);
        assert_eq!(g.display("t"), "(1i)t + (1-1i)");
    }

    #[test]
    fn derivative_and_degree() {
        let p = QPoly::from_ints(&[5, 0, 0, 2]);
        assert_eq!(p.derivative(), QPoly::from_ints(&[0, 0, 6]));
        assert_eq!(p.degree(), Some(3));
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(QPoly::new(vec![q(0, 1), q(0, 1)]).degree(), None);
    }
}
