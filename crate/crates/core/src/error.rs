use thiserror::Error;

/// Failures raised by the exact, symbolic and numeric layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("critical-line restriction has a non-real coefficient at t^{degree}")]
    NonRealRestriction { degree: usize },

    #[error("polynomial vanishes at interval endpoint {at}")]
    EndpointRoot { at: String },

    #[error("eigenspace for eigenvalue {eigenvalue} has dimension {dimension}, expected 1")]
    DegenerateEigenspace { eigenvalue: String, dimension: usize },

    #[error("identity violated: {what}; residual {residual}")]
    IdentityViolated { what: String, residual: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("argument {at} is within {distance} of a pole of the gamma function")]
    PoleProximity { at: String, distance: String },

    #[error("quadrature did not reach tolerance {tolerance:e} (estimate {estimate:e}, {evaluations} evaluations)")]
    NonConvergent {
        tolerance: f64,
        estimate: f64,
        evaluations: usize,
    },

    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("property violated; counterexample: {counterexample}")]
    PropertyViolated { counterexample: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn violated(what: impl Into<String>, residual: impl ToString) -> Self {
        Error::IdentityViolated {
            what: what.into(),
            residual: residual.to_string(),
        }
    }
}
