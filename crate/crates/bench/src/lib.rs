//! Shared inputs for the criterion benches.

use lrh_core::analytic::BigComplex;

/// `(m, k)` pairs spanning small to large degree.
pub const PAIRS: [(usize, usize); 4] = [(8, 0), (16, 2), (30, 4), (40, 0)];

/// A point in the right half-plane away from the Gamma poles.
pub fn sample_point(precision: usize) -> BigComplex {
    BigComplex::from_f64(1.25, 3.5, precision)
}
