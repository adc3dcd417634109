//! Benchmarks for the streaming modular evaluators against the exact paths.
//!
//! The factored-residue stream is the fast path for the headline sums; the
//! contract is O(1) amortized work per term with p-factors stripped before
//! any modular division. These benches watch the step rate, the full
//! vanishing-sum evaluation, the gamma-table build used by sweep workloads,
//! and the Lucas digit binomial.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use supercong_core::binomseq::{central_binom_stream, central_prefix_sum};
use supercong_core::exactnum::binomial_exact;
use supercong_core::modcore::{lucas_binomial, PrimePowerModulus};
use supercong_core::padicgamma::GammaTable;

fn ctx(p: u64, a: u32, e: u8) -> PrimePowerModulus {
    PrimePowerModulus::new(p, a, e).unwrap()
}

fn stream_steps(c: &mut Criterion) {
    let mut g = c.benchmark_group("central_binom_stream");
    for &(p, e) in &[(499u64, 2u8), (9973, 2), (999983, 1)] {
        let k_max = 100_000u64;
        g.throughput(Throughput::Elements(k_max));
        g.bench_with_input(BenchmarkId::new(format!("p={p},e={e}"), k_max), &k_max, |b, &k| {
            let c = ctx(p, 1, e);
            b.iter(|| {
                let mut acc = 0u64;
                for term in central_binom_stream(c, k) {
                    acc ^= term.unit.to_u64().unwrap() ^ term.valuation as u64;
                }
                black_box(acc)
            })
        });
    }
    g.finish();
}

fn vanishing_sum(c: &mut Criterion) {
    let mut g = c.benchmark_group("two_thirds_prefix_sum");
    for &(p, a) in &[(199u64, 2u32), (499, 2)] {
        g.bench_function(format!("p={p},a={a}"), |b| {
            let cx = ctx(p, a, 2);
            let upper = 2 * (cx.pa() - 1) / 3;
            b.iter(|| black_box(central_prefix_sum(cx, 1, upper)))
        });
    }
    g.finish();
}

fn stream_vs_exact(c: &mut Criterion) {
    let mut g = c.benchmark_group("central_binomials_to_2000");
    g.bench_function("factored_stream_p31_e2", |b| {
        let cx = ctx(31, 1, 2);
        b.iter(|| {
            black_box(central_binom_stream(cx, 2000).last());
        })
    });
    g.bench_function("exact_bigint", |b| {
        b.iter(|| {
            let mut central = num::BigInt::from(1);
            for k in 1..=2000u64 {
                central = central * num::BigInt::from(2 * (2 * k - 1)) / num::BigInt::from(k);
            }
            black_box(central)
        })
    });
    g.finish();
}

fn gamma_table_build(c: &mut Criterion) {
    let mut g = c.benchmark_group("gamma_table");
    for &p in &[199u64, 1999] {
        g.bench_function(format!("build_p={p}_e=2"), |b| {
            let cx = ctx(p, 1, 2);
            b.iter(|| black_box(GammaTable::new(cx)))
        });
    }
    g.finish();
}

fn lucas(c: &mut Criterion) {
    c.bench_function("lucas_binomial_p997", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            for n in (0..4000u64).step_by(37) {
                for k in (0..n).step_by(29) {
                    acc ^= lucas_binomial(n, k, 997).unwrap().to_u64().unwrap();
                }
            }
            black_box(acc)
        })
    });
    c.bench_function("exact_binomial_800_400", |b| {
        b.iter(|| black_box(binomial_exact(800, 400)))
    });
}

criterion_group!(
    benches,
    stream_steps,
    vanishing_sum,
    stream_vs_exact,
    gamma_table_build,
    lucas
);
criterion_main!(benches);
