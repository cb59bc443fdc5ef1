use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lrh_bench::PAIRS;
use lrh_core::exact::{critical_line_restriction, real_root_total, squarefree_check};
use lrh_core::verify::lrh_verify;
use lrh_core::zeta_poly::{zeta_poly_expansion, zeta_poly_recurrence};

fn routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("routes");
    g.sample_size(10).measurement_time(Duration::from_secs(3));
    for (m, k) in PAIRS {
        g.bench_with_input(BenchmarkId::new("expansion", format!("{m}_{k}")), &(m, k), |b, &(m, k)| {
            b.iter(|| zeta_poly_expansion(m, k))
        });
        g.bench_with_input(BenchmarkId::new("recurrence", format!("{m}_{k}")), &(m, k), |b, &(m, k)| {
            b.iter(|| zeta_poly_recurrence(m, k).unwrap())
        });
    }
    g.finish();
}

fn sturm(c: &mut Criterion) {
    let mut g = c.benchmark_group("sturm");
    g.sample_size(10);
    for (m, k) in PAIRS {
        let rho = critical_line_restriction(&zeta_poly_expansion(m, k).coeffs).unwrap();
        g.bench_with_input(BenchmarkId::new("count", format!("{m}_{k}")), &rho, |b, rho| {
            b.iter(|| (real_root_total(rho).unwrap(), squarefree_check(rho)))
        });
    }
    g.finish();
}

fn certificate(c: &mut Criterion) {
    let mut g = c.benchmark_group("certificate");
    g.sample_size(10).measurement_time(Duration::from_secs(5));
    g.bench_function("lrh_verify_40_2", |b| b.iter(|| lrh_verify(40, 2)));
    g.finish();
}

criterion_group!(benches, routes, sturm, certificate);
criterion_main!(benches);
