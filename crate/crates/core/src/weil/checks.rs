//! Exact identity checks for the Weil action on Hermite–Gaussian functions.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::fourier::{fourier_transform, inverse_fourier_transform};
use super::generator::{
    apply_element, apply_generator, harmonic_oscillator, j_differential, j_multiplication, k_differential,
    k_multiplication, LieElement, SU2Generator,
};
use super::hermgauss::{hermite_fn, inner_product, hermitian_product, HermGaussFn, HermiteExpansion};
use crate::error::{Error, Result};
use crate::exact::{int, GaussianRational};
use crate::zeta_poly::{binomial, laguerre_poly};

fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

fn expect_eq(what: impl FnOnce() -> String, lhs: &HermiteExpansion, rhs: &HermiteExpansion) -> Result<()> {
    let r = lhs - rhs;
    if r.is_zero() {
        Ok(())
    } else {
        Err(Error::violated(what(), format!("{r:?}")))
    }
}

/// Ladder expansion predicted for `dω(X) f_{m,n}`, boundary terms dropped.
pub fn ladder_prediction(x: SU2Generator, m: usize, n: usize) -> HermiteExpansion {
    let mut terms = Vec::new();
    match x {
        SU2Generator::J => terms.push(((m, n), g(0, m as i64 - n as i64))),
        SU2Generator::R => {
            if n > 0 {
                terms.push(((m + 1, n - 1), g(n as i64, 0)));
            }
            if m > 0 {
                terms.push(((m - 1, n + 1), g(-(m as i64), 0)));
            }
        }
        SU2Generator::K => {
            if n > 0 {
                terms.push(((m + 1, n - 1), g(0, -(n as i64))));
            }
            if m > 0 {
                terms.push(((m - 1, n + 1), g(0, -(m as i64))));
            }
        }
    }
    HermiteExpansion::from_terms(terms)
}

/// `J f = i(m−n) f`, `R f = n f_{m+1,n−1} − m f_{m−1,n+1}`, `K f = −in f_{m+1,n−1} − im f_{m−1,n+1}`.
pub fn ladder_check(m: usize, n: usize) -> Result<()> {
    let f = hermite_fn(m, n);
    for x in SU2Generator::ALL {
        let lhs = apply_generator(x, &f).to_hermite();
        expect_eq(|| format!("ladder for {x} at ({m},{n})"), &lhs, &ladder_prediction(x, m, n))?;
    }
    Ok(())
}

fn basis_up_to(degree_bound: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=degree_bound).flat_map(move |t| (0..=t).map(move |m| (m, t - m)))
}

/// `[dω X, dω Y] f = dω([X, Y]) f` for all `f_{m,n}` with `m + n ≤ degree_bound`.
pub fn commutator_check(x: SU2Generator, y: SU2Generator, degree_bound: usize) -> Result<()> {
    let bracket = LieElement::from_matrix(&x.matrix().bracket(&y.matrix())).expect("brackets are traceless");
    for (m, n) in basis_up_to(degree_bound) {
        let f = hermite_fn(m, n);
        let xy = apply_generator(x, &apply_generator(y, &f));
        let yx = apply_generator(y, &apply_generator(x, &f));
        let lhs = (&xy - &yx).to_hermite();
        let rhs = apply_element(&bracket, &f).to_hermite();
        expect_eq(|| format!("[{x},{y}] on f[{m},{n}]"), &lhs, &rhs)?;
    }
    Ok(())
}

/// `F⁻¹ ∘ (i/2)(u²−v²) ∘ F = −(i/2)(∂²_u−∂²_v)` and `F⁻¹ ∘ (−iuv) ∘ F = −i∂_u∂_v`.
pub fn intertwining_check(degree_bound: usize) -> Result<()> {
    for (m, n) in basis_up_to(degree_bound) {
        let f = hermite_fn(m, n);
        let fh = fourier_transform(&f);
        let lhs = inverse_fourier_transform(&j_multiplication(&fh)).to_hermite();
        expect_eq(|| format!("J intertwining on f[{m},{n}]"), &lhs, &j_differential(&f).to_hermite())?;
        let lhs = inverse_fourier_transform(&k_multiplication(&fh)).to_hermite();
        let rhs = k_differential(&f).scale(&g(-1, 0)).to_hermite();
        expect_eq(|| format!("K intertwining on f[{m},{n}]"), &lhs, &rhs)?;
    }
    Ok(())
}

fn check_bmn_indices(m: usize, n: i64) -> Result<usize> {
    let a = n.unsigned_abs() as usize;
    if a > m || (m - a) % 2 == 1 {
        return Err(Error::Domain(format!("b[{m},{n}] needs |n| <= m and m - |n| even")));
    }
    Ok(a)
}

/// `(u ± iv)^{|n|} L^{(|n|)}_{(m−|n|)/2}(u² + v²) · weight`, the sign following `n`.
pub fn bmn_fn(m: usize, n: i64) -> Result<HermGaussFn> {
    let a = check_bmn_indices(m, n)?;
    let sign = if n >= 0 { 1 } else { -1 };
    let angular = HermGaussFn::from_terms((0..=a).map(|j| {
        let c = GaussianRational::i_pow(sign * j as i64).scale(&BigRational::from_integer(binomial(a as u64, j as u64)));
        ((a - j, j), c)
    }));
    let lag = laguerre_poly((m - a) / 2, a);
    let r2 = HermGaussFn::from_terms([((2, 0), g(1, 0)), ((0, 2), g(1, 0))]);
    let mut radial = HermGaussFn::zero();
    let mut power = HermGaussFn::gaussian();
    for c in lag.coeffs() {
        radial = &radial + &power.scale_q(c);
        power = power.mul_poly(&r2);
    }
    Ok(angular.mul_poly(&radial))
}

/// `dω(R) b_{m,n} = i n b_{m,n}`.
pub fn rotation_eigen_check(m: usize, n: i64) -> Result<()> {
    let b = bmn_fn(m, n)?;
    let lhs = apply_generator(SU2Generator::R, &b);
    let rhs = b.scale(&g(0, n));
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::violated(format!("rotation eigenvalue of b[{m},{n}]"), format!("{:?}", &lhs - &rhs)))
    }
}

fn support_in_layer(e: &HermiteExpansion, m: usize) -> Option<(usize, usize)> {
    e.support().find(|&(a, b)| a + b != m)
}

/// `b_{m,n} ∈ W_m = span{f_{j,m−j}}`.
pub fn membership_check(m: usize, n: i64) -> Result<()> {
    let e = bmn_fn(m, n)?.to_hermite();
    match support_in_layer(&e, m) {
        None => Ok(()),
        Some(bad) => Err(Error::violated(format!("b[{m},{n}] outside W_{m}"), format!("term f{bad:?} in {e:?}"))),
    }
}

/// Each generator maps `W_m` into itself.
pub fn subspace_invariance_check(m: usize) -> Result<()> {
    for j in 0..=m {
        for x in SU2Generator::ALL {
            let e = apply_generator(x, &hermite_fn(j, m - j)).to_hermite();
            if let Some(bad) = support_in_layer(&e, m) {
                return Err(Error::violated(
                    format!("{x} f[{j},{}] leaves W_{m}", m - j),
                    format!("term f{bad:?} in {e:?}"),
                ));
            }
        }
    }
    Ok(())
}

/// `((u²+v²)/2 − (∂²_u+∂²_v)/2) f_{m,n} = (m+n+1) f_{m,n}`.
pub fn harmonic_oscillator_check(m: usize, n: usize) -> Result<()> {
    let f = hermite_fn(m, n);
    let lhs = harmonic_oscillator(&f).to_hermite();
    let rhs = HermiteExpansion::basis(m, n, g((m + n + 1) as i64, 0));
    expect_eq(|| format!("harmonic oscillator on f[{m},{n}]"), &lhs, &rhs)
}

/// `(dω(X) f, g) + (f, dω(X) g) = 0` under the Hermitian form `(f, g) = ⟨f, ḡ⟩`.
pub fn skew_hermitian_residual(x: SU2Generator, f: &HermGaussFn, h: &HermGaussFn) -> GaussianRational {
    &hermitian_product(&apply_generator(x, f), h) + &hermitian_product(f, &apply_generator(x, h))
}

/// `⟨H f, g⟩ − ⟨f, H g⟩` for the harmonic oscillator under the bilinear pairing.
pub fn oscillator_symmetry_residual(f: &HermGaussFn, h: &HermGaussFn) -> GaussianRational {
    &inner_product(&harmonic_oscillator(f), h) - &inner_product(f, &harmonic_oscillator(h))
}

/// Orthogonality of distinct layers: `⟨b̄_{m,n}, b_{m',n'}⟩ = 0` unless `(m,n) = (m',n')`.
pub fn bmn_orthogonality(m: usize, n: i64, m2: usize, n2: i64) -> Result<GaussianRational> {
    let b1 = bmn_fn(m, n)?.conj();
    let b2 = bmn_fn(m2, n2)?;
    Ok(inner_product(&b1, &b2))
}

/// Suite entry point: every identity for all degrees up to `degree_bound`.
pub fn weil_identity_suite(degree_bound: usize) -> Result<()> {
    for (m, n) in basis_up_to(degree_bound) {
        ladder_check(m, n)?;
        harmonic_oscillator_check(m, n)?;
    }
    for x in SU2Generator::ALL {
        for y in SU2Generator::ALL {
            commutator_check(x, y, degree_bound)?;
        }
    }
    intertwining_check(degree_bound)?;
    for m in 0..=degree_bound {
        subspace_invariance_check(m)?;
        for n in (-(m as i64)..=m as i64).step_by(2) {
            rotation_eigen_check(m, n)?;
            membership_check(m, n)?;
        }
    }
    Ok(())
}

/// `⟨f, f⟩` of `f_{m,n}`: `2^{m+n} m! n! / 2`.
pub fn hermite_norm(m: usize, n: usize) -> BigRational {
    use crate::zeta_poly::factorial;
    let v = BigInt::from(1u8) << (m + n);
    BigRational::from_integer(v * factorial(m as u64) * factorial(n as u64)) / int(2)
}
