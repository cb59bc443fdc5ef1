use std::path::PathBuf;

use lrh_core::analytic::{ratio_spread, zeta_model, zeta_numeric, BigComplex};
use lrh_core::exact::{BigRational, QPoly};
use lrh_core::verify::{render_table, OutputFormat};
use lrh_core::weil::hermite_fn;
use lrh_core::zeta_poly::zeta_poly_expansion;
use serde_json::Value;

const CASES: [(usize, usize); 5] = [(0, 0), (2, 0), (3, 0), (3, 1), (4, 0)];

fn golden(m: usize, k: usize) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", &format!("p_{m}_{k}.json")].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

fn golden_poly(m: usize, k: usize) -> (i64, QPoly) {
    let v: Value = serde_json::from_str(&golden(m, k)).unwrap();
    let rec = &v[0];
    let coeffs: Vec<BigRational> =
        rec["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().parse().unwrap()).collect();
    (rec["degree"].as_i64().unwrap(), QPoly::from_rationals(coeffs))
}

#[test]
fn tables_are_byte_stable() {
    for (m, k) in CASES {
        let fresh = render_table(&[zeta_poly_expansion(m, k)], OutputFormat::Json).unwrap();
        assert_eq!(fresh, golden(m, k), "({m},{k})");
    }
}

#[test]
fn hand_derived_values() {
    assert_eq!(golden_poly(0, 0).1, QPoly::from_ints(&[1]));
    assert_eq!(golden_poly(2, 0).1, QPoly::from_ints(&[-1, 2]));
    assert_eq!(golden_poly(4, 0).1, QPoly::from_ints(&[1, -2, 2]));
    assert_eq!(golden_poly(3, 1).1, QPoly::from_ints(&[-1, 2]));
    let (d, p) = golden_poly(3, 0);
    assert_eq!(d, -1);
    assert!(p.is_zero());
}

#[test]
fn quadrature_confirms_golden_polynomials() {
    let p = 128;
    let samples: Vec<BigComplex> =
        [(0.8, 0.0), (1.3, 2.0), (2.2, -1.5), (2.9, 0.4)].iter().map(|&(a, b)| BigComplex::from_f64(a, b, p)).collect();
    for (m, k) in CASES {
        let (d, poly) = golden_poly(m, k);
        let f = hermite_fn(m, 0);
        if d < 0 {
            for s in &samples {
                let z = zeta_numeric(&f, k as i64, s).unwrap();
                assert!(z.value.abs().to_f64() < 1e-30, "({m},{k}) should vanish");
            }
            continue;
        }
        let ratios: Vec<BigComplex> = samples
            .iter()
            .map(|s| &zeta_numeric(&f, k as i64, s).unwrap().value / &zeta_model(&poly, k, s).unwrap())
            .collect();
        assert!(ratio_spread(&ratios) < 1e-25, "({m},{k}) spread {:e}", ratio_spread(&ratios));
        assert!(ratios[0].abs().to_f64() > 1e-3);
    }
}
