//! Orchestration: per-pair certificates, property runs, suite reports, tables.

mod config;
mod eval;
mod export;
mod report;
mod strip;
mod suite;

pub use config::{OutputFormat, RunConfig, Tolerances};
pub use eval::{closed_form_constant, eval_compare, zeta_exact, EvalComparison};
pub use export::{critical_zeros, export_table, rational_to_decimal, record_json, render_table, ROOT_DIGITS};
pub use report::{lrh_verify, lrh_verify_with, VerifyReport};
pub use strip::{
    sample_instance, strip_check_complex, strip_shrink_outcomes, strip_shrink_property, strip_transform, StripInstance,
    StripOutcome, STRIP_MARGIN,
};
pub use suite::{run_suite, write_outcome, OrthoCheck, RatioCheck, SuiteOutcome, SuiteSummary, RATIO_SAMPLES};
