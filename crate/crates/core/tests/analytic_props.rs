use lrh_core::analytic::{
    angular_profile, gamma_abs_sqr, gamma_complex, ortho_weight, zeta_numeric, BigComplex, Real,
};
use lrh_core::exact::GaussianRational;
use lrh_core::weil::{hermite_fn, HermGaussFn};
use num_traits::ToPrimitive;
use proptest::prelude::*;

const P: usize = 128;

/// `Σ_d E_d 2^{d/2} π^{1−s} Γ(s + d/2)`: the zeta integral with the radial
/// Gaussian moment done in closed form.
fn zeta_closed_form(f: &HermGaussFn, k: i64, s: &BigComplex) -> BigComplex {
    let pi = Real::pi(P);
    let pi_pow = BigComplex::new(&Real::one(P) - &s.re, -&s.im).exp_times(&pi.ln());
    let mut acc = BigComplex::zero(P);
    for (d, e) in angular_profile(f, k) {
        let shift = BigComplex::new(&s.re + &Real::from_f64(d as f64 / 2.0, P), s.im.clone());
        let g = gamma_complex(&shift).unwrap();
        let two = Real::from_i64(2, P).sqrt().powi(d);
        acc = &acc + &(&(&BigComplex::from_gaussian(&e, P) * &g) * &pi_pow).scale(&two);
    }
    acc
}

/// `(1/2π) ∫ cos^aθ sin^bθ e^{ikθ} dθ` by the periodic trapezoid rule, exact
/// for trigonometric polynomials once the node count exceeds the degree.
fn trapezoid_moment(a: usize, b: usize, k: i64) -> (f64, f64) {
    let n = 64;
    let (mut re, mut im) = (0.0, 0.0);
    for j in 0..n {
        let th = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
        let base = th.cos().powi(a as i32) * th.sin().powi(b as i32);
        re += base * (k as f64 * th).cos();
        im += base * (k as f64 * th).sin();
    }
    (re / n as f64, im / n as f64)
}

#[test]
fn gamma_recurrence_grid() {
    let mut worst: f64 = 0.0;
    for i in 0..10 {
        for j in 0..10 {
            let s = BigComplex::from_f64(-4.7 + 1.13 * i as f64, -8.0 + 1.71 * j as f64, P);
            let g = gamma_complex(&s).unwrap();
            let g1 = gamma_complex(&(&s + &BigComplex::one(P))).unwrap();
            let rel = (&g1 - &(&s * &g)).abs().to_f64() / g1.abs().to_f64();
            worst = worst.max(rel);
        }
    }
    assert!(worst < 1e-30, "{worst:e}");
}

#[test]
fn angular_profile_matches_trapezoid() {
    for (m, n) in [(0, 0), (2, 1), (3, 3), (4, 0), (1, 5)] {
        let f = hermite_fn(m, n);
        for k in -4..=4 {
            let exact = angular_profile(&f, k);
            let mut by_degree = std::collections::BTreeMap::new();
            for (&(a, b), c) in f.terms() {
                let (mr, mi) = trapezoid_moment(a, b, k);
                let (cr, ci) = (c.re.to_f64().unwrap(), c.im.to_f64().unwrap());
                let e = by_degree.entry(a + b).or_insert((0.0, 0.0));
                e.0 += cr * mr - ci * mi;
                e.1 += cr * mi + ci * mr;
            }
            for (d, (re, im)) in by_degree {
                let z = exact.get(&d).cloned().unwrap_or_else(|| GaussianRational::from_ints(0, 0));
                let (zr, zi) = (z.re.to_f64().unwrap(), z.im.to_f64().unwrap());
                assert!((zr - re).abs() < 1e-9 && (zi - im).abs() < 1e-9, "({m},{n}) k={k} d={d}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn ortho_weight_is_gamma_abs_sqr(k in 0usize..8, t in -12.0f64..12.0) {
        let tt = Real::from_f64(t, P);
        let w = ortho_weight(k, &tt);
        let g = gamma_abs_sqr(&BigComplex::new(Real::from_f64((k as f64 + 1.0) / 2.0, P), tt)).unwrap();
        let rel = (&w - &g).abs().to_f64() / g.to_f64();
        prop_assert!(rel < 1e-30, "k={} t={}: {:e}", k, t, rel);
    }

    #[test]
    fn gamma_conjugate_symmetry(re in 0.1f64..9.0, im in -20.0f64..20.0) {
        let s = BigComplex::from_f64(re, im, P);
        let a = gamma_complex(&s.conj()).unwrap();
        let b = gamma_complex(&s).unwrap().conj();
        prop_assert!((&a - &b).abs().to_f64() <= 1e-30 * b.abs().to_f64());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn zeta_quadrature_matches_closed_form(m in 0usize..5, n in 0usize..5, k in -3i64..=3, re in 0.75f64..3.0, im in -4.0f64..4.0) {
        let f = hermite_fn(m, n);
        let s = BigComplex::from_f64(re, im, P);
        let q = zeta_numeric(&f, k, &s).unwrap();
        let exact = zeta_closed_form(&f, k, &s);
        let err = (&q.value - &exact).abs().to_f64();
        let scale = exact.abs().to_f64().max(1e-10);
        prop_assert!(err <= 1e-25 * scale, "({},{}) k={} s={}+{}i: {:e}", m, n, k, re, im, err);
        prop_assert!(err <= q.error_estimate.max(1e-30) * 10.0);
    }
}
