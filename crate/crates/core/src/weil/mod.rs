//! Lie-algebra action of the Weil representation on Hermite–Gaussian functions.
//!
//! Everything is expressed in `u = √(2π)x`, `v = √(2π)y`, where the weight
//! `e^{−π(x²+y²)}` becomes `e^{−(u²+v²)/2}` and every operator, Hermite function
//! and `b_{m,n}` has coefficients in ℚ[i].

mod checks;
mod fourier;
mod generator;
mod hermgauss;

pub use checks::{
    bmn_fn, bmn_orthogonality, commutator_check, harmonic_oscillator_check, hermite_norm, intertwining_check,
    ladder_check, ladder_prediction, membership_check, oscillator_symmetry_residual, rotation_eigen_check,
    skew_hermitian_residual, subspace_invariance_check, weil_identity_suite,
};
pub use fourier::{fourier_expansion, fourier_transform, inverse_fourier_transform, parity};
pub use generator::{
    apply_element, apply_generator, harmonic_oscillator, j_differential, j_multiplication, k_differential,
    k_multiplication, LieElement, Mat2, SU2Generator,
};
pub use hermgauss::{hermite_fn, hermitian_product, inner_product, monomial_in_hermite, HermGaussFn, HermiteExpansion};
