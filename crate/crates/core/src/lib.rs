pub mod error;
pub mod exact;

pub use error::{Error, Result};
pub mod zeta_poly;
pub mod weil;
pub mod analytic;
pub mod verify;
