//! High-precision numerics: the independent cross-checks for the exact results.

mod gamma;
mod ortho;
mod quad;
mod real;
mod roots;
mod zeta;

pub use gamma::{gamma_abs_sqr, gamma_complex};
pub use quad::{composite_gauss_legendre, gauss_legendre, Node, QuadratureResult, QuadratureSummary, TanhSinh};
pub use real::{BigComplex, Real, DEFAULT_PRECISION};
pub use zeta::{angular_moment, angular_profile, ratio_spread, zeta_model, zeta_numeric, zeta_ratio_scan, ZetaIntegrator};
pub use ortho::{ortho_weight, orthogonality_check, OrthoIntegrator, OrthoValue};
pub use roots::{root_find, RootEstimate, RootSummary};
