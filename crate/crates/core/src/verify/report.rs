//! Per-`(m, k)` certificate: both routes, both identities, exact Sturm count.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::RunConfig;
use crate::analytic::{root_find, Real};
use crate::error::Error;
use crate::exact::{cauchy_root_bound, critical_line_restriction, squarefree_check, sturm_count, QPoly};
use crate::zeta_poly::{
    functional_equation_check, is_admissible, symmetry_check, zeta_poly_expansion, zeta_poly_recurrence,
};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub m: usize,
    pub k: usize,
    /// `(m−k)/2`, or −1 when `ζ_m^(k)` vanishes identically.
    pub degree: i64,
    /// `ζ_m^(k) ≡ 0`; the certificate is then vacuous.
    pub vacuous: bool,
    pub route_agreement: bool,
    pub functional_eq: bool,
    pub symmetry: bool,
    pub sturm_real_roots: usize,
    pub distinct: bool,
    pub lrh_certified: bool,
    pub numeric_residuals: BTreeMap<String, f64>,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl VerifyReport {
    /// Certified, or vacuous with both routes agreeing on the vanishing.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && (self.lrh_certified || (self.vacuous && self.route_agreement))
    }
}

/// Exact certificate only.
pub fn lrh_verify(m: usize, k: usize) -> VerifyReport {
    verify_pair(m, k, None)
}

/// Exact certificate plus the numeric witnesses enabled in `cfg`.
pub fn lrh_verify_with(m: usize, k: usize, cfg: &RunConfig) -> VerifyReport {
    verify_pair(m, k, Some(cfg))
}

fn verify_pair(m: usize, k: usize, cfg: Option<&RunConfig>) -> VerifyReport {
    let start = Instant::now();
    let mut rep = VerifyReport {
        m,
        k,
        degree: -1,
        vacuous: false,
        route_agreement: false,
        functional_eq: false,
        symmetry: false,
        sturm_real_roots: 0,
        distinct: false,
        lrh_certified: false,
        numeric_residuals: BTreeMap::new(),
        failures: Vec::new(),
        timing_ms: None,
    };
    let expansion = zeta_poly_expansion(m, k);
    if !is_admissible(m, k) {
        rep.vacuous = true;
        // The recurrence route must refuse the pair, and the expansion must vanish.
        rep.route_agreement = expansion.is_zero && matches!(zeta_poly_recurrence(m, k), Err(Error::Domain(_)));
        if !rep.route_agreement {
            rep.failures.push("vanishing law: a route produced a nonzero polynomial".into());
        }
        finish(&mut rep, cfg, start);
        return rep;
    }
    let p = expansion.coeffs.clone();
    let d = p.degree().unwrap_or(0);
    rep.degree = d as i64;
    match zeta_poly_recurrence(m, k) {
        Ok(r) if r.coeffs == p => rep.route_agreement = true,
        Ok(r) => rep.failures.push(format!("routes disagree: expansion {p}, recurrence {}", r.coeffs)),
        Err(e) => rep.failures.push(format!("recurrence route: {e}")),
    }
    match functional_equation_check(&expansion) {
        Ok(()) => rep.functional_eq = true,
        Err(e) => rep.failures.push(e.to_string()),
    }
    match symmetry_check(&expansion) {
        Ok(()) => rep.symmetry = true,
        Err(e) => rep.failures.push(e.to_string()),
    }
    match critical_line_restriction(&p) {
        Ok(rho) => {
            rep.distinct = squarefree_check(&rho);
            let count = if d == 0 {
                Ok(0)
            } else {
                let b = cauchy_root_bound(&rho) + num_rational::BigRational::from_integer(1.into());
                sturm_count(&rho, &-b.clone(), &b)
            };
            match count {
                Ok(n) => rep.sturm_real_roots = n,
                Err(e) => rep.failures.push(format!("sturm count: {e}")),
            }
        }
        Err(e) => rep.failures.push(format!("critical-line restriction: {e}")),
    }
    rep.lrh_certified = rep.sturm_real_roots == d && rep.distinct && rep.symmetry;
    if !rep.lrh_certified && rep.failures.is_empty() {
        rep.failures.push(format!("sturm count {} for degree {d}, distinct = {}", rep.sturm_real_roots, rep.distinct));
    }
    if let Some(cfg) = cfg {
        if cfg.numeric_roots && d > 0 {
            numeric_witness(&mut rep, &p, cfg);
        }
    }
    finish(&mut rep, cfg, start);
    rep
}

fn numeric_witness(rep: &mut VerifyReport, p: &QPoly, cfg: &RunConfig) {
    match root_find(&p.to_gaussian(), cfg.precision_bits) {
        Ok(roots) => {
            let half = Real::from_f64(0.5, cfg.precision_bits);
            let off = roots.iter().map(|r| (&r.root.re - &half).abs().to_f64()).fold(0.0, f64::max);
            let res = roots.iter().map(|r| r.residual).fold(0.0, f64::max);
            rep.numeric_residuals.insert("max_abs_re_minus_half".into(), off);
            rep.numeric_residuals.insert("max_root_residual".into(), res);
            if off > cfg.tolerances.root_real_part {
                rep.failures.push(format!("numeric zero off the critical line by {off:e}"));
            }
        }
        Err(e) => rep.failures.push(format!("root finder: {e}")),
    }
}

fn finish(rep: &mut VerifyReport, cfg: Option<&RunConfig>, start: Instant) {
    if cfg.is_some_and(|c| c.timing) {
        rep.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
}
