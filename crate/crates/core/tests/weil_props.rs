use lrh_core::exact::GaussianRational;
use lrh_core::weil::{
    apply_generator, fourier_transform, harmonic_oscillator, hermitian_product, hermite_fn, inner_product,
    inverse_fourier_transform, HermGaussFn, SU2Generator,
};
use proptest::prelude::*;

fn gaussian_int() -> impl Strategy<Value = GaussianRational> {
    (-5i64..=5, -5i64..=5).prop_map(|(a, b)| GaussianRational::from_ints(a, b))
}

/// Polynomial times the Gaussian with total degree at most `bound`.
fn hg_fn(bound: usize) -> impl Strategy<Value = HermGaussFn> {
    prop::collection::vec(((0..=bound), (0..=bound), gaussian_int()), 0..6).prop_map(move |terms| {
        HermGaussFn::from_terms(terms.into_iter().filter(|(a, b, _)| a + b <= bound).map(|(a, b, c)| ((a, b), c)))
    })
}

fn generator() -> impl Strategy<Value = SU2Generator> {
    prop::sample::select(SU2Generator::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generator_action_is_linear(x in generator(), f in hg_fn(6), g in hg_fn(6), a in gaussian_int(), b in gaussian_int()) {
        let combo = &f.scale(&a) + &g.scale(&b);
        let lhs = apply_generator(x, &combo);
        let rhs = &apply_generator(x, &f).scale(&a) + &apply_generator(x, &g).scale(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hermite_round_trip(f in hg_fn(12)) {
        prop_assert_eq!(f.to_hermite().to_fn(), f);
    }

    #[test]
    fn fourier_has_order_four(f in hg_fn(8)) {
        let f4 = (0..4).fold(f.clone(), |acc, _| fourier_transform(&acc));
        prop_assert_eq!(&f4, &f);
        prop_assert_eq!(inverse_fourier_transform(&fourier_transform(&f)), f);
    }

    #[test]
    fn fourier_is_unitary(f in hg_fn(6), g in hg_fn(6)) {
        prop_assert_eq!(hermitian_product(&fourier_transform(&f), &fourier_transform(&g)), hermitian_product(&f, &g));
    }

    #[test]
    fn generators_skew_hermitian(x in generator(), f in hg_fn(6), g in hg_fn(6)) {
        let r = &hermitian_product(&apply_generator(x, &f), &g) + &hermitian_product(&f, &apply_generator(x, &g));
        prop_assert!(num_traits::Zero::is_zero(&r), "{x}: {r}");
    }

    #[test]
    fn rotation_skew_bilinear(f in hg_fn(6), g in hg_fn(6)) {
        let x = SU2Generator::R;
        let r = &inner_product(&apply_generator(x, &f), &g) + &inner_product(&f, &apply_generator(x, &g));
        prop_assert!(num_traits::Zero::is_zero(&r));
    }

    #[test]
    fn oscillator_symmetric_bilinear(f in hg_fn(6), g in hg_fn(6)) {
        let r = &inner_product(&harmonic_oscillator(&f), &g) - &inner_product(&f, &harmonic_oscillator(&g));
        prop_assert!(num_traits::Zero::is_zero(&r));
    }

    #[test]
    fn hermite_eval_matches_definition(m in 0usize..6, n in 0usize..6, u in -3.0f64..3.0, v in -3.0f64..3.0) {
        // Physicists' Hermite polynomials by the three-term recurrence.
        fn h(k: usize, x: f64) -> f64 {
            let (mut a, mut b) = (1.0, 2.0 * x);
            if k == 0 { return a; }
            for j in 1..k {
                let c = 2.0 * x * b - 2.0 * j as f64 * a;
                a = b;
                b = c;
            }
            b
        }
        let expected = h(m, u) * h(n, v) * (-(u * u + v * v) / 2.0).exp();
        let (re, im) = hermite_fn(m, n).eval_f64(u, v);
        prop_assert!((re - expected).abs() <= 1e-9 * (1.0 + expected.abs()), "{re} vs {expected}");
        prop_assert_eq!(im, 0.0);
    }
}

#[test]
fn j_and_k_are_symmetric_bilinear() {
    // Purely imaginary operator coefficients: symmetric, not skew, under ⟨f, g⟩.
    for x in [SU2Generator::J, SU2Generator::K] {
        let mut nonzero = 0;
        for (a, b, c, d) in [(0, 0, 2, 0), (0, 0, 0, 2), (1, 1, 0, 0), (2, 0, 0, 2), (1, 0, 1, 0), (3, 1, 2, 0), (1, 1, 2, 0), (2, 0, 1, 1), (3, 1, 2, 2)] {
            let (f, g) = (hermite_fn(a, b), hermite_fn(c, d));
            let lhs = inner_product(&apply_generator(x, &f), &g);
            let rhs = inner_product(&f, &apply_generator(x, &g));
            assert_eq!(lhs, rhs, "{x} on f[{a},{b}], f[{c},{d}]");
            nonzero += usize::from(!num_traits::Zero::is_zero(&lhs));
        }
        assert!(nonzero > 0, "{x}: every pairing vanished");
    }
}
