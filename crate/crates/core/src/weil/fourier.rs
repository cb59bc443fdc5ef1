//! Fourier transform `f̂(z) = ∫ f(z′) ψ(2zz′) dz′` with `ψ(z) = e^{iπ Re z}`.
//!
//! The kernel is `e^{2πi(xx′ − yy′)}`, a 2-D transform with opposite signs in the
//! two variables. The Hermite function `H_m(u)e^{−u²/2}` is an eigenfunction of
//! the 1-D transform with eigenvalue `i^m` (resp. `(−i)^m` for the flipped sign),
//! so `f_{m,n}` has eigenvalue `i^{m−n}`.

use super::hermgauss::{HermGaussFn, HermiteExpansion};
use crate::exact::GaussianRational;

fn eigen_scale(f: &HermGaussFn, sign: i64) -> HermGaussFn {
    let e = f.to_hermite();
    let scaled = e.map_coeffs(|(m, n), c| c * &GaussianRational::i_pow(sign * (m as i64 - n as i64)));
    scaled.to_fn()
}

pub fn fourier_transform(f: &HermGaussFn) -> HermGaussFn {
    eigen_scale(f, 1)
}

pub fn inverse_fourier_transform(f: &HermGaussFn) -> HermGaussFn {
    eigen_scale(f, -1)
}

/// Eigen-expansion form, for callers already holding Hermite coefficients.
pub fn fourier_expansion(e: &HermiteExpansion) -> HermiteExpansion {
    e.map_coeffs(|(m, n), c| c * &GaussianRational::i_pow(m as i64 - n as i64))
}

/// `f(−u, −v)`.
pub fn parity(f: &HermGaussFn) -> HermGaussFn {
    HermGaussFn::from_terms(f.terms().map(|(&(a, b), c)| {
        let c = if (a + b) % 2 == 1 { -c } else { c.clone() };
        ((a, b), c)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weil::hermgauss::hermite_fn;

    #[test]
    fn examples() {
        assert_eq!(fourier_transform(&hermite_fn(0, 0)), hermite_fn(0, 0));
        assert_eq!(fourier_transform(&hermite_fn(1, 0)), hermite_fn(1, 0).scale(&GaussianRational::i()));
        assert_eq!(fourier_transform(&hermite_fn(1, 1)), hermite_fn(1, 1));
        let f = hermite_fn(2, 1);
        assert_eq!(fourier_transform(&fourier_transform(&f)), f.scale(&GaussianRational::from_ints(-1, 0)));
    }

    #[test]
    fn double_transform_is_parity() {
        let f = HermGaussFn::from_terms([
            ((0, 0), GaussianRational::from_ints(1, 1)),
            ((3, 1), GaussianRational::from_ints(0, 2)),
            ((2, 3), GaussianRational::from_ints(-5, 0)),
        ]);
        assert_eq!(fourier_transform(&fourier_transform(&f)), parity(&f));
        assert_eq!(inverse_fourier_transform(&fourier_transform(&f)), f);
    }

    /// Direct 2-D quadrature of the defining integral in scaled coordinates,
    /// `f̂(u,v) = (1/2π) ∫∫ f(u′,v′) e^{i(uu′ − vv′)} du′ dv′`, by the trapezoid
    /// rule (spectrally accurate for Gaussian-decaying integrands).
    fn transform_by_quadrature(f: &HermGaussFn, u: f64, v: f64) -> (f64, f64) {
        let h = 0.04;
        let n = (12.0 / h) as i64;
        let (mut re, mut im) = (0.0, 0.0);
        for a in -n..=n {
            let up = a as f64 * h;
            for b in -n..=n {
                let vp = b as f64 * h;
                let (fr, fi) = f.eval_f64(up, vp);
                if fr == 0.0 && fi == 0.0 {
                    continue;
                }
                let (s, c) = (u * up - v * vp).sin_cos();
                re += fr * c - fi * s;
                im += fr * s + fi * c;
            }
        }
        let w = h * h / (2.0 * std::f64::consts::PI);
        (re * w, im * w)
    }

    #[test]
    fn eigenvalues_match_direct_quadrature() {
        for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            let f = hermite_fn(m, n);
            let symbolic = fourier_transform(&f);
            for &(u, v) in &[(0.3, -0.7), (1.1, 0.4), (-0.9, 1.6)] {
                let (qr, qi) = transform_by_quadrature(&f, u, v);
                let (sr, si) = symbolic.eval_f64(u, v);
                assert!((qr - sr).abs() < 1e-10 && (qi - si).abs() < 1e-10, "f[{m},{n}] at ({u},{v}): {qr}+{qi}i vs {sr}+{si}i");
            }
        }
    }
}
