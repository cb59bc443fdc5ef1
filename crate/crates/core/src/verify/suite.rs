//! Grid runner: certificates, identity suites, numeric cross-checks, reports.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{lrh_verify_with, strip_shrink_outcomes, OutputFormat, RunConfig, VerifyReport};
use crate::analytic::{ratio_spread, zeta_ratio_scan, BigComplex, OrthoIntegrator, OrthoValue};
use crate::error::{Error, Result};
use crate::weil::{hermite_fn, weil_identity_suite};
use crate::zeta_poly::is_admissible;

/// Sample points for the zeta ratio checks, `Re s ∈ [3/4, 3]`.
pub const RATIO_SAMPLES: [(f64, f64); 5] = [(0.75, 0.0), (1.25, 1.5), (1.75, -2.0), (2.5, 0.5), (3.0, 3.0)];

#[derive(Clone, Debug, Serialize)]
pub struct RatioCheck {
    pub m: usize,
    pub k: usize,
    pub spread: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthoCheck {
    #[serde(flatten)]
    pub value: OrthoValue,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteSummary {
    pub pairs: usize,
    pub nonvacuous: usize,
    pub certified: usize,
    pub failed_reports: usize,
    /// `None` when skipped.
    pub weil_suite: Option<bool>,
    pub ortho_checks: usize,
    pub ortho_failures: usize,
    pub ortho_worst_relative: f64,
    pub ratio_checks: usize,
    pub ratio_failures: usize,
    pub ratio_worst_spread: f64,
    pub strip_trials: usize,
    pub strip_passed: Option<bool>,
    pub failures: Vec<String>,
    pub all_passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub reports: Vec<VerifyReport>,
    pub ortho: Vec<OrthoCheck>,
    pub ratios: Vec<RatioCheck>,
    pub summary: SuiteSummary,
}

impl SuiteOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.summary.all_passed {
            0
        } else {
            1
        }
    }
}

fn ortho_checks(cfg: &RunConfig) -> Vec<Result<Vec<OrthoCheck>>> {
    let m_top = cfg.m_max.min(16);
    let tol = cfg.tolerances.ortho;
    cfg.ortho_k
        .par_iter()
        .filter(|&&k| k <= m_top)
        .map(|&k| {
            let mut integ = OrthoIntegrator::new(k, m_top, cfg.precision_bits)?;
            let ms: Vec<usize> = (k..=m_top).step_by(2).collect();
            let mut out = Vec::new();
            for (i, &m) in ms.iter().enumerate() {
                for &m2 in &ms[i + 1..] {
                    let v = integ.pair(m, m2)?;
                    let passed = v.relative <= tol && v.error_estimate <= tol * v.norm_product;
                    out.push(OrthoCheck { value: v, passed });
                }
            }
            Ok(out)
        })
        .collect()
}

fn ratio_checks(cfg: &RunConfig) -> Vec<Result<RatioCheck>> {
    let samples: Vec<BigComplex> =
        RATIO_SAMPLES.iter().map(|&(a, b)| BigComplex::from_f64(a, b, cfg.precision_bits)).collect();
    let pairs: Vec<(usize, usize)> = (0..=cfg.ratio_m_max.min(cfg.m_max))
        .flat_map(|m| (0..=m).filter(move |&k| is_admissible(m, k)).map(move |k| (m, k)))
        .filter(|(_, k)| cfg.k_filter.as_ref().map_or(true, |f| f.contains(k)))
        .collect();
    pairs
        .par_iter()
        .map(|&(m, k)| {
            let ratios = zeta_ratio_scan(&hermite_fn(m, 0), m, k as i64, &samples)?;
            let spread = ratio_spread(&ratios);
            Ok(RatioCheck { m, k, spread, passed: spread <= cfg.tolerances.ratio_spread })
        })
        .collect()
}

fn run_all(cfg: &RunConfig) -> Result<SuiteOutcome> {
    let start = Instant::now();
    let mut summary = SuiteSummary::default();
    let mut reports: Vec<VerifyReport> = cfg.grid().par_iter().map(|&(m, k)| lrh_verify_with(m, k, cfg)).collect();
    reports.sort_by_key(|r| (r.m, r.k));
    summary.pairs = reports.len();
    summary.nonvacuous = reports.iter().filter(|r| !r.vacuous).count();
    summary.certified = reports.iter().filter(|r| r.lrh_certified).count();
    summary.failed_reports = reports.iter().filter(|r| !r.passed()).count();
    for r in reports.iter().filter(|r| !r.passed()) {
        summary.failures.push(format!("({},{}): {}", r.m, r.k, r.failures.join("; ")));
    }

    if let Some(bound) = cfg.weil_degree_bound {
        let res = weil_identity_suite(bound);
        if let Err(e) = &res {
            summary.failures.push(format!("weil suite: {e}"));
        }
        summary.weil_suite = Some(res.is_ok());
    }

    let mut ortho = Vec::new();
    for batch in ortho_checks(cfg) {
        match batch {
            Ok(v) => ortho.extend(v),
            Err(e) => summary.failures.push(format!("orthogonality: {e}")),
        }
    }
    ortho.sort_by_key(|c| (c.value.k, c.value.m, c.value.m2));
    summary.ortho_checks = ortho.len();
    summary.ortho_failures = ortho.iter().filter(|c| !c.passed).count();
    summary.ortho_worst_relative = ortho.iter().map(|c| c.value.relative).fold(0.0, f64::max);
    for c in ortho.iter().filter(|c| !c.passed) {
        summary.failures.push(format!(
            "orthogonality k={} ({},{}): relative {:e}",
            c.value.k, c.value.m, c.value.m2, c.value.relative
        ));
    }

    let mut ratios = Vec::new();
    for r in ratio_checks(cfg) {
        match r {
            Ok(v) => ratios.push(v),
            Err(e) => summary.failures.push(format!("zeta ratio: {e}")),
        }
    }
    ratios.sort_by_key(|c| (c.m, c.k));
    summary.ratio_checks = ratios.len();
    summary.ratio_failures = ratios.iter().filter(|c| !c.passed).count();
    summary.ratio_worst_spread = ratios.iter().map(|c| c.spread).fold(0.0, f64::max);
    for c in ratios.iter().filter(|c| !c.passed) {
        summary.failures.push(format!("zeta ratio ({},{}): spread {:e}", c.m, c.k, c.spread));
    }

    if cfg.strip_trials > 0 {
        summary.strip_trials = cfg.strip_trials;
        let res = strip_shrink_outcomes(cfg.strip_trials, cfg.seed);
        if let Err(e) = &res {
            summary.failures.push(format!("strip shrinking: {e}"));
        }
        summary.strip_passed = Some(res.is_ok());
    }

    summary.all_passed = summary.failures.is_empty();
    if cfg.timing {
        summary.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(SuiteOutcome { reports, ortho, ratios, summary })
}

/// Runs every configured check on a pool of `cfg.parallelism` workers.
pub fn run_suite(cfg: &RunConfig) -> Result<SuiteOutcome> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    pool.install(|| run_all(cfg))
}

/// Writes the outcome in `format`. CSV carries the per-pair reports only.
pub fn write_outcome(out: &SuiteOutcome, format: OutputFormat, mut w: impl Write) -> Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut w, out)?;
            writeln!(w)?;
        }
        OutputFormat::Csv => {
            let mut c = csv::Writer::from_writer(w);
            c.write_record([
                "m", "k", "degree", "vacuous", "route_agreement", "functional_eq", "symmetry",
                "sturm_real_roots", "distinct", "lrh_certified", "passed", "max_abs_re_minus_half", "failures",
            ])?;
            for r in &out.reports {
                let re = r.numeric_residuals.get("max_abs_re_minus_half").map_or(String::new(), |v| format!("{v:e}"));
                c.write_record([
                    r.m.to_string(),
                    r.k.to_string(),
                    r.degree.to_string(),
                    r.vacuous.to_string(),
                    r.route_agreement.to_string(),
                    r.functional_eq.to_string(),
                    r.symmetry.to_string(),
                    r.sturm_real_roots.to_string(),
                    r.distinct.to_string(),
                    r.lrh_certified.to_string(),
                    r.passed().to_string(),
                    re,
                    r.failures.join("; "),
                ])?;
            }
            c.flush()?;
        }
        OutputFormat::Text => {
            for r in &out.reports {
                let status = match (r.vacuous, r.passed()) {
                    (true, true) => "vacuous",
                    (false, true) => "certified",
                    _ => "FAILED",
                };
                write!(w, "m={:>2} k={:>2} degree={:>2} real_roots={:>2} {status}", r.m, r.k, r.degree, r.sturm_real_roots)?;
                if let Some(t) = r.timing_ms {
                    write!(w, " ({t:.1} ms)")?;
                }
                writeln!(w)?;
            }
            let s = &out.summary;
            writeln!(w, "pairs: {} ({} nonvacuous, {} certified)", s.pairs, s.nonvacuous, s.certified)?;
            if let Some(ok) = s.weil_suite {
                writeln!(w, "weil identities: {}", if ok { "ok" } else { "FAILED" })?;
            }
            writeln!(w, "orthogonality: {} checks, {} failed, worst relative {:e}", s.ortho_checks, s.ortho_failures, s.ortho_worst_relative)?;
            writeln!(w, "zeta ratios: {} checks, {} failed, worst spread {:e}", s.ratio_checks, s.ratio_failures, s.ratio_worst_spread)?;
            if let Some(ok) = s.strip_passed {
                writeln!(w, "strip shrinking: {} trials, {}", s.strip_trials, if ok { "ok" } else { "FAILED" })?;
            }
            for f in &s.failures {
                writeln!(w, "failure: {f}")?;
            }
            writeln!(w, "{}", if s.all_passed { "ALL PASSED" } else { "FAILED" })?;
        }
    }
    Ok(())
}
