//! Arbitrary-precision real and complex scalars over `astro_float::BigFloat`.
//!
//! Each value carries its working precision in bits. Binary operations run at
//! the larger of the two operand precisions, so precision never silently drops.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact::GaussianRational;

pub const DEFAULT_PRECISION: usize = 128;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Clone)]
pub struct Real {
    v: BigFloat,
    p: usize,
}

impl Real {
    fn wrap(v: BigFloat, p: usize) -> Self {
        debug_assert!(!v.is_nan(), "NaN in Real arithmetic");
        Real { v, p }
    }

    pub fn precision(&self) -> usize {
        self.p
    }

    pub fn with_precision(&self, p: usize) -> Self {
        let mut v = self.v.clone();
        if let Some(cur) = v.precision() {
            if cur > p {
                let _ = v.set_precision(p, RM);
            }
        }
        Real::wrap(v, p)
    }

    pub fn zero(p: usize) -> Self {
        Real::wrap(BigFloat::from_i64(0, p), p)
    }

    pub fn one(p: usize) -> Self {
        Real::from_i64(1, p)
    }

    pub fn from_i64(i: i64, p: usize) -> Self {
        Real::wrap(BigFloat::from_i64(i, p), p)
    }

    pub fn from_f64(f: f64, p: usize) -> Self {
        Real::wrap(BigFloat::from_f64(f, p), p)
    }

    pub fn from_bigint(n: &BigInt, p: usize) -> Self {
        let (sign, words) = n.to_u64_digits();
        if words.is_empty() {
            return Real::zero(p);
        }
        let s = if sign == num_bigint::Sign::Minus { Sign::Neg } else { Sign::Pos };
        let e = (64 * words.len()) as i32;
        let mut v = BigFloat::from_words(&words, s, e);
        let _ = v.set_precision(p.max(64 * words.len()), RM);
        Real::wrap(v, p).with_precision(p)
    }

    pub fn from_rational(q: &BigRational, p: usize) -> Self {
        let w = p + 64;
        let n = Real::from_bigint(q.numer(), w);
        let d = Real::from_bigint(q.denom(), w);
        (&n / &d).with_precision(p)
    }

    /// Parse a decimal literal such as `"0.5"` or `"-1.25e3"`.
    pub fn parse(s: &str, p: usize) -> Option<Self> {
        let v = with_consts(|cc| BigFloat::parse(s, astro_float::Radix::Dec, p, RM, cc));
        (!v.is_nan()).then(|| Real::wrap(v, p))
    }

    pub fn pi(p: usize) -> Self {
        Real::wrap(with_consts(|cc| cc.pi(p, RM)), p)
    }

    pub fn ln2(p: usize) -> Self {
        Real::wrap(with_consts(|cc| cc.ln_2(p, RM)), p)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative() && !self.v.is_zero()
    }

    pub fn abs(&self) -> Self {
        Real::wrap(self.v.abs(), self.p)
    }

    pub fn sqrt(&self) -> Self {
        Real::wrap(self.v.sqrt(self.p, RM), self.p)
    }

    pub fn exp(&self) -> Self {
        Real::wrap(with_consts(|cc| self.v.exp(self.p, RM, cc)), self.p)
    }

    pub fn ln(&self) -> Self {
        Real::wrap(with_consts(|cc| self.v.ln(self.p, RM, cc)), self.p)
    }

    pub fn sin(&self) -> Self {
        Real::wrap(with_consts(|cc| self.v.sin(self.p, RM, cc)), self.p)
    }

    pub fn cos(&self) -> Self {
        Real::wrap(with_consts(|cc| self.v.cos(self.p, RM, cc)), self.p)
    }

    pub fn sinh(&self) -> Self {
        Real::wrap(with_consts(|cc| self.v.sinh(self.p, RM, cc)), self.p)
    }

    pub fn cosh(&self) -> Self {
        Real::wrap(with_consts(|cc| self.v.cosh(self.p, RM, cc)), self.p)
    }

    pub fn atan(&self) -> Self {
        Real::wrap(with_consts(|cc| self.v.atan(self.p, RM, cc)), self.p)
    }

    /// Angle of `(x, y)` in `(−π, π]`.
    pub fn atan2(y: &Real, x: &Real) -> Real {
        let p = y.p.max(x.p);
        if x.is_zero() {
            let half_pi = &Real::pi(p) / &Real::from_i64(2, p);
            return if y.is_negative() { -half_pi } else if y.is_zero() { Real::zero(p) } else { half_pi };
        }
        let base = (y / x).atan();
        if !x.is_negative() {
            base
        } else if y.is_negative() {
            &base - &Real::pi(p)
        } else {
            &base + &Real::pi(p)
        }
    }

    pub fn powi(&self, n: usize) -> Self {
        Real::wrap(self.v.powi(n, self.p, RM), self.p)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn max(&self, o: &Real) -> Real {
        if self >= o { self.clone() } else { o.clone() }
    }

    pub fn min(&self, o: &Real) -> Real {
        if self <= o { self.clone() } else { o.clone() }
    }

    pub fn floor(&self) -> Real {
        Real::wrap(self.v.floor(), self.p)
    }

    /// Nearest `f64`; saturates to ±∞ outside the f64 range.
    pub fn to_f64(&self) -> f64 {
        let Some((m, _, s, e, _)) = self.v.as_raw_parts() else {
            return f64::NAN;
        };
        if self.v.is_zero() || m.is_empty() {
            return 0.0;
        }
        let top = m[m.len() - 1] as f64;
        let next = if m.len() > 1 { m[m.len() - 2] as f64 } else { 0.0 };
        let mag = (top + next / 2f64.powi(64)) * 2f64.powi(e - 64);
        if s == Sign::Neg { -mag } else { mag }
    }

    /// Binary exponent `e` with `2^{e−1} ≤ |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.v.is_zero() { None } else { self.v.exponent() }
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let bits = ((digits as f64) * std::f64::consts::LOG2_10).ceil() as usize + 8;
        let v = self.with_precision(bits.max(64));
        let s = with_consts(|cc| v.v.format(astro_float::Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
        shorten_decimal(&s, digits)
    }
}

/// Round the mantissa of an `astro_float` decimal string (`d.ddd…e±x`) to `digits` digits.
fn shorten_decimal(s: &str, digits: usize) -> String {
    let (mant, exp) = match s.find('e') {
        Some(i) => (&s[..i], &s[i..]),
        None => (s, ""),
    };
    let (sign, mant) = mant.strip_prefix('-').map_or(("", mant), |m| ("-", m));
    let ds: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    if ds.len() <= digits {
        return s.to_string();
    }
    let q = BigInt::parse_bytes(ds[..digits].as_bytes(), 10).unwrap();
    let round_up = ds.as_bytes()[digits] >= b'5';
    let q = if round_up { q + 1 } else { q };
    let mut qs = q.to_string();
    let mut exp_val: i64 = exp.trim_start_matches('e').parse().unwrap_or(0);
    if qs.len() > digits {
        qs.truncate(digits);
        exp_val += 1;
    }
    let body = if qs.len() > 1 { format!("{}.{}", &qs[..1], &qs[1..]) } else { qs };
    format!("{sign}{body}e{exp_val}")
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(((self.p as f64) / std::f64::consts::LOG2_10) as usize);
        write!(f, "{}", self.to_decimal(digits.max(1)))
    }
}

impl PartialEq for Real {
    fn eq(&self, o: &Self) -> bool {
        self.v.cmp(&o.v) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        self.v.cmp(&o.v).map(|c| c.cmp(&0))
    }
}

macro_rules! real_binop {
    ($tr:ident, $m:ident) => {
        impl<'a, 'b> $tr<&'b Real> for &'a Real {
            type Output = Real;
            fn $m(self, o: &'b Real) -> Real {
                let p = self.p.max(o.p);
                Real::wrap(self.v.$m(&o.v, p, RM), p)
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $m(self, o: Real) -> Real {
                (&self).$m(&o)
            }
        }
        impl<'b> $tr<&'b Real> for Real {
            type Output = Real;
            fn $m(self, o: &'b Real) -> Real {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Real> for &'a Real {
            type Output = Real;
            fn $m(self, o: Real) -> Real {
                self.$m(&o)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(BigFloat::neg(&self.v), self.p)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

/// Complex number with [`Real`] parts.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: Real,
    pub im: Real,
}

impl BigComplex {
    pub fn new(re: Real, im: Real) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(p: usize) -> Self {
        BigComplex::new(Real::zero(p), Real::zero(p))
    }

    pub fn one(p: usize) -> Self {
        BigComplex::new(Real::one(p), Real::zero(p))
    }

    pub fn i(p: usize) -> Self {
        BigComplex::new(Real::zero(p), Real::one(p))
    }

    pub fn from_real(re: Real) -> Self {
        let p = re.precision();
        BigComplex::new(re, Real::zero(p))
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        BigComplex::new(Real::from_f64(re, p), Real::from_f64(im, p))
    }

    pub fn from_gaussian(z: &GaussianRational, p: usize) -> Self {
        BigComplex::new(Real::from_rational(&z.re, p), Real::from_rational(&z.im, p))
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn with_precision(&self, p: usize) -> Self {
        BigComplex::new(self.re.with_precision(p), self.im.with_precision(p))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re.square() + &self.im.square()
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn arg(&self) -> Real {
        Real::atan2(&self.im, &self.re)
    }

    pub fn scale(&self, r: &Real) -> Self {
        BigComplex::new(&self.re * r, &self.im * r)
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        BigComplex::new(&m * &self.im.cos(), &m * &self.im.sin())
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        BigComplex::new(self.abs().ln(), self.arg())
    }

    pub fn sin(&self) -> Self {
        BigComplex::new(&self.re.sin() * &self.im.cosh(), &self.re.cos() * &self.im.sinh())
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        BigComplex::new(&self.re / &n, -(&self.im / &n))
    }

    /// `x^self` for real `x > 0` given `ln x`.
    pub fn exp_times(&self, ln_x: &Real) -> Self {
        self.scale(ln_x).exp()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + {:?}i", self.re, self.im)
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = f.precision().unwrap_or(20);
        if self.im.is_negative() {
            write!(f, "{:.d$} - {:.d$}i", self.re, self.im.abs())
        } else {
            write!(f, "{:.d$} + {:.d$}i", self.re, self.im)
        }
    }
}

impl<'a, 'b> Add<&'b BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn add(self, o: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a, 'b> Sub<&'b BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn sub(self, o: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a, 'b> Mul<&'b BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn mul(self, o: &BigComplex) -> BigComplex {
        BigComplex::new(&(&self.re * &o.re) - &(&self.im * &o.im), &(&self.re * &o.im) + &(&self.im * &o.re))
    }
}

impl<'a, 'b> Div<&'b BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn div(self, o: &BigComplex) -> BigComplex {
        let n = o.norm_sqr();
        let num = self * &o.conj();
        BigComplex::new(&num.re / &n, &num.im / &n)
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-&self.re, -&self.im)
    }
}

macro_rules! complex_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, o: BigComplex) -> BigComplex {
                (&self).$m(&o)
            }
        }
        impl<'b> $tr<&'b BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, o: &'b BigComplex) -> BigComplex {
                (&self).$m(o)
            }
        }
    };
}

complex_owned!(Add, add);
complex_owned!(Sub, sub);
complex_owned!(Mul, mul);
complex_owned!(Div, div);
