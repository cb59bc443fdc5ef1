//! Exact scalars, dense polynomials and Sturm-sequence root counting.

mod gaussian;
mod poly;
mod sturm;

pub use gaussian::GaussianRational;
pub use num_rational::BigRational;
pub use poly::{poly_shift, Poly, QPoly, Scalar, UniPoly};
pub use sturm::{
    cauchy_root_bound, critical_line_inverse, critical_line_restriction, isolate_real_roots,
    real_root_total, squarefree_check, sturm_chain, sturm_count,
};

use num_bigint::BigInt;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
