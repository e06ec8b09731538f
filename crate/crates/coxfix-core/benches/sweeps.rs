//! Parallel vs sequential sweep timings.
//!
//! `cargo bench` runs with the default `parallel` feature; the `seq`
//! variants call the always-available sequential path so both appear in
//! one run. `bw_spheres_b3` is skewed (one interval holds most of the
//! faces) while `gorenstein_a4` is a balanced bag of medium intervals.

use criterion::{criterion_group, criterion_main, Criterion};

use coxfix_core::bench_support as exec;
use coxfix_core::catalog::catalog;
use coxfix_core::orders::{bruhat_leq, build_interval, is_eulerian, Interval};
use coxfix_core::suites::{run_suite, SuiteConfig};
use coxfix_core::system::CoxeterSystem;
use coxfix_core::topology::{is_gorenstein_star_z2, ComplexZ2, DEFAULT_FACE_CAP};
use coxfix_core::twisted::{twisted_involutions, GraphAutomorphism};

fn sphere_sweep_bench(c: &mut Criterion) {
    let sys = CoxeterSystem::new(catalog("B3").unwrap());
    let ball = sys.full_group().unwrap();
    let mut pairs = Vec::new();
    for &u in &ball.elements {
        for &v in &ball.elements {
            if sys.length(u) < sys.length(v) && bruhat_leq(&sys, u, v) {
                pairs.push((u, v));
            }
        }
    }
    let work = |pair: &(coxfix_core::Element, coxfix_core::Element)| {
        let (u, v) = *pair;
        let iv = build_interval(&ball.elements, |a, b| bruhat_leq(&sys, a, b), u, v).unwrap();
        let complex = ComplexZ2::order_complex(&iv.open_poset(), DEFAULT_FACE_CAP).unwrap();
        complex
            .betti()
            .reduced_betti(sys.length(v) as i64 - sys.length(u) as i64 - 2)
    };

    let mut group = c.benchmark_group("bw_spheres_b3");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| {
            let out = exec::map_collect_seq(&pairs, work);
            assert!(out.iter().all(|&b| b == 1));
        })
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par", |b| {
        b.iter(|| {
            let out = exec::map_collect(&pairs, work);
            assert!(out.iter().all(|&b| b == 1));
        })
    });
    group.finish();
}

fn gorenstein_sweep_bench(c: &mut Criterion) {
    // intervals of Invol(S5) of length <= 5, prebuilt; the timed region
    // is the pure per-interval topology work
    let sys = CoxeterSystem::new(catalog("A4").unwrap());
    let ball = sys.full_group().unwrap();
    let theta = GraphAutomorphism::identity(sys.rank());
    let members = twisted_involutions(&sys, &theta, &ball);
    let mut intervals: Vec<Interval> = Vec::new();
    for &u in &members {
        for &v in &members {
            if sys.length(u) < sys.length(v) && bruhat_leq(&sys, u, v) {
                let iv = build_interval(&members, |a, b| bruhat_leq(&sys, a, b), u, v).unwrap();
                if iv.length() <= 5 {
                    intervals.push(iv);
                }
            }
        }
    }
    let work = |iv: &Interval| {
        let gor = is_gorenstein_star_z2(iv, DEFAULT_FACE_CAP).unwrap();
        gor.pass && is_eulerian(iv).unwrap()
    };

    let mut group = c.benchmark_group("gorenstein_a4");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| {
            let out = exec::map_collect_seq(&intervals, work);
            assert!(out.iter().all(|&ok| ok));
        })
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par", |b| {
        b.iter(|| {
            let out = exec::map_collect(&intervals, work);
            assert!(out.iter().all(|&ok| ok));
        })
    });
    group.finish();
}

fn suite_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite_twisted_gorenstein_a3");
    group.sample_size(10);
    let mut config = SuiteConfig::for_catalog("A3").unwrap();
    config.max_interval = Some(5);
    group.bench_function("run", |b| {
        b.iter(|| {
            let report = run_suite("twisted-gorenstein", &config).unwrap();
            assert!(report.all_pass());
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    sphere_sweep_bench,
    gorenstein_sweep_bench,
    suite_bench
);
criterion_main!(benches);
