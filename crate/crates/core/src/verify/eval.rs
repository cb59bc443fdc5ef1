//! Numeric `ζ_m^(k)(s)` for `f_{m,0}` against the exact closed form.

use serde::Serialize;

use crate::analytic::{zeta_model, zeta_numeric, BigComplex, Real};
use crate::error::Result;
use crate::exact::{rat, BigRational};
use crate::weil::hermite_fn;
use crate::zeta_poly::{expansion_scale, zeta_poly_expansion};

/// `C` in `ζ_m^(k)(s) = C · Γ(s+k/2) π^{1−s} p_m^(k)(s)` for `f_{m,0}`:
/// the angular factor `A_k/2π` (`A_0 = 2π`, else `π`) times `2^{k/2} λ`.
/// Returns `(rational part, includes √2)`.
pub fn closed_form_constant(m: usize, k: usize) -> Option<(BigRational, bool)> {
    let lambda = expansion_scale(m, k)?;
    let angular = if k == 0 { rat(1, 1) } else { rat(1, 2) };
    let pow = BigRational::from_integer(num_bigint::BigInt::from(1u8) << (k / 2));
    Some((angular * pow * lambda, k % 2 == 1))
}

#[derive(Clone, Debug, Serialize)]
pub struct EvalComparison {
    pub m: usize,
    pub k: usize,
    pub s: (f64, f64),
    pub numeric: (f64, f64),
    pub exact: (f64, f64),
    pub abs_error: f64,
    /// `abs_error / |exact|`, or `abs_error` when the exact value is zero.
    pub rel_error: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// `C · Γ(s+k/2) π^{1−s} p_m^(k)(s)`; exactly zero for vanishing pairs.
pub fn zeta_exact(m: usize, k: usize, s: &BigComplex) -> Result<BigComplex> {
    let w = s.precision();
    let Some((c, root2)) = closed_form_constant(m, k) else {
        return Ok(BigComplex::zero(w));
    };
    let rec = zeta_poly_expansion(m, k);
    let mut cr = Real::from_rational(&c, w);
    if root2 {
        cr = &cr * &Real::from_i64(2, w).sqrt();
    }
    Ok(zeta_model(&rec.coeffs, k, s)?.scale(&cr))
}

pub fn eval_compare(m: usize, k: usize, s: &BigComplex) -> Result<EvalComparison> {
    let numeric = zeta_numeric(&hermite_fn(m, 0), k as i64, s)?;
    let exact = zeta_exact(m, k, s)?;
    let abs_error = (&numeric.value - &exact).abs().to_f64();
    let mag = exact.abs().to_f64();
    Ok(EvalComparison {
        m,
        k,
        s: s.to_f64(),
        numeric: numeric.value.to_f64(),
        exact: exact.to_f64(),
        abs_error,
        rel_error: if mag > 0.0 { abs_error / mag } else { abs_error },
        error_estimate: numeric.error_estimate,
        evaluations: numeric.evaluations,
    })
}
