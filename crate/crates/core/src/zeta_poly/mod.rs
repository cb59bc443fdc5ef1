//! The polynomial factors `p_m^(k)(s)` of the local zeta functions `ζ_m^(k)`.
//!
//! `ζ_m^(k)(s) = Γ(s + k/2) π^{1−s} p_m^(k)(s)` when `(m−k)/2` is a natural
//! number and vanishes identically otherwise. Two independent exact routes
//! construct `p`: the Mellin expansion of the `cos(kθ)` component of the
//! Hermite function, and the eigenproblem of the shifted difference operator
//! coming from the harmonic-oscillator relation.
//!
//! Every polynomial is stored primitive-normalized: integer coefficients with
//! content 1 and a positive leading coefficient.

mod expansion;
mod identities;
mod orthopoly;
mod recurrence;

pub use expansion::{angular_decompose, expansion_scale, zeta_poly_expansion, AngularDecomposition};
pub use identities::{functional_equation_check, functional_equation_residual, symmetry_check};
pub use orthopoly::{binomial, cos_power_expand, factorial, hermite_poly, laguerre_poly};
pub use recurrence::{difference_operator, nullspace, operator_matrix, zeta_poly_recurrence};

use serde::Serialize;

use crate::exact::QPoly;

/// Which construction produced a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Expansion,
    Recurrence,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZetaPolyRecord {
    pub m: usize,
    pub k: usize,
    /// `(m−k)/2`, or `None` for identically vanishing pairs.
    pub degree: Option<usize>,
    pub coeffs: QPoly,
    pub route: Route,
    pub is_zero: bool,
}

impl ZetaPolyRecord {
    pub(crate) fn vanishing(m: usize, k: usize, route: Route) -> Self {
        Self { m, k, degree: None, coeffs: QPoly::zero(), route, is_zero: true }
    }

    pub(crate) fn from_poly(m: usize, k: usize, coeffs: QPoly, route: Route) -> Self {
        debug_assert_eq!(coeffs.degree(), Some((m - k) / 2));
        Self { m, k, degree: coeffs.degree(), coeffs, route, is_zero: false }
    }
}

/// `(m − k)/2 ∈ ℕ`.
pub fn is_admissible(m: usize, k: usize) -> bool {
    k <= m && (m - k) % 2 == 0
}

/// Admissible pairs with `m ≤ m_max`, ordered by `(m, k)`.
pub fn admissible_pairs(m_max: usize) -> Vec<(usize, usize)> {
    (0..=m_max)
        .flat_map(|m| (m % 2..=m).step_by(2).map(move |k| (m, k)))
        .collect()
}
