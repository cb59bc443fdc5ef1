//! Functional equation and reflection symmetry as exact polynomial identities.

use num_rational::BigRational;
use num_traits::One;

use super::ZetaPolyRecord;
use crate::error::{Error, Result};
use crate::exact::{int, rat, QPoly};

/// `(m+1)p(s) − [(s + k/2) p(s+1) − (s − k/2 − 1) p(s−1)]`.
///
/// This is the zeta-level three-term relation divided through by
/// `Γ(s + k/2) π^{1−s}`, using `Γ(s + k/2) = (s + k/2 − 1) Γ(s + k/2 − 1)`.
pub fn functional_equation_residual(p: &QPoly, m: usize, k: usize) -> QPoly {
    let half_k = rat(k as i64, 2);
    let plus = QPoly::linear(BigRational::one(), half_k.clone());
    let minus = QPoly::linear(BigRational::one(), -half_k - int(1));
    let rhs = &(&plus * &p.shift(&int(1))) - &(&minus * &p.shift(&int(-1)));
    &p.scale(&int(m as i64 + 1)) - &rhs
}

pub fn functional_equation_check(rec: &ZetaPolyRecord) -> Result<()> {
    if rec.is_zero {
        return Err(Error::Domain(format!("({},{}) is identically zero", rec.m, rec.k)));
    }
    let r = functional_equation_residual(&rec.coeffs, rec.m, rec.k);
    if r.is_zero() {
        Ok(())
    } else {
        Err(Error::violated(format!("functional equation at (m,k)=({},{})", rec.m, rec.k), r))
    }
}

/// `p(1 − s) = (−1)^d p(s)`.
pub fn symmetry_check(rec: &ZetaPolyRecord) -> Result<()> {
    if rec.is_zero {
        return Err(Error::Domain(format!("({},{}) is identically zero", rec.m, rec.k)));
    }
    let p = &rec.coeffs;
    let d = p.degree().unwrap_or(0);
    let reflected = p.compose_linear(&int(-1), &int(1));
    let expected = if d % 2 == 0 { p.clone() } else { -p };
    let r = &reflected - &expected;
    if r.is_zero() {
        Ok(())
    } else {
        Err(Error::violated(format!("reflection symmetry at (m,k)=({},{})", rec.m, rec.k), r))
    }
}
