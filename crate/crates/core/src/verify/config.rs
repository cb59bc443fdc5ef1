use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analytic::DEFAULT_PRECISION;
use crate::error::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" | "txt" => Ok(OutputFormat::Text),
            _ => Err(Error::Domain(format!("unknown output format {s:?}"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Off-diagonal orthogonality integral relative to `sqrt(I_mm I_m'm')`.
    pub ortho: f64,
    /// Relative spread of zeta ratios across sample points.
    pub ratio_spread: f64,
    /// `|Re s − 1/2|` for numerically located zeros.
    pub root_real_part: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { ortho: 1e-10, ratio_spread: 1e-8, root_real_part: 1e-20 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub m_max: usize,
    /// Restrict the grid to these `k`; `None` runs every `k ≤ m`.
    pub k_filter: Option<Vec<usize>>,
    pub precision_bits: usize,
    pub tolerances: Tolerances,
    pub output_format: OutputFormat,
    pub parallelism: usize,
    /// Total degree bound for the Weil identity suite; `None` skips it.
    pub weil_degree_bound: Option<usize>,
    /// `k` values for the orthogonality checks, with `m, m′ ≤ min(m_max, 16)`.
    pub ortho_k: Vec<usize>,
    /// Largest `m` for the zeta ratio spot checks.
    pub ratio_m_max: usize,
    /// Locate the zeros of each `p` numerically as a second witness.
    pub numeric_roots: bool,
    /// Trials for the strip-shrinking property; zero skips it.
    pub strip_trials: usize,
    pub seed: u64,
    /// Record wall-clock timings in reports (makes output nondeterministic).
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m_max: 8,
            k_filter: None,
            precision_bits: DEFAULT_PRECISION,
            tolerances: Tolerances::default(),
            output_format: OutputFormat::Json,
            parallelism: 1,
            weil_degree_bound: Some(6),
            ortho_k: vec![0, 1, 2, 3],
            ratio_m_max: 6,
            numeric_roots: true,
            strip_trials: 0,
            seed: 42,
            timing: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.precision_bits < 64 {
            return Err(Error::Domain(format!("precision_bits = {} is below 64", self.precision_bits)));
        }
        if self.parallelism == 0 {
            return Err(Error::Domain("parallelism must be at least 1".into()));
        }
        Ok(())
    }

    /// Grid `(m, k)` with `0 ≤ k ≤ m ≤ m_max`, vacuous pairs included.
    pub fn grid(&self) -> Vec<(usize, usize)> {
        (0..=self.m_max)
            .flat_map(|m| (0..=m).map(move |k| (m, k)))
            .filter(|(_, k)| self.k_filter.as_ref().map_or(true, |f| f.contains(k)))
            .collect()
    }
}
