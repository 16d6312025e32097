use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use oddzeta::numeric::rational::{int, ratio};
use oddzeta::numeric::{Complex, PrecisionContext, Real};
use oddzeta::rapid::{bench_table, SeriesFamily};
use oddzeta::reference::{trig_dirichlet, Angle, TrigKind, TrigSumSpec};
use oddzeta::verify::{verify_batch, IdentityCase, IdentityId, Order};
use oddzeta::Execution;

const MODES: [(&str, Execution); 2] = [
    ("parallel", Execution::Parallel),
    ("sequential", Execution::Sequential),
];

fn dirichlet_sum(c: &mut Criterion) {
    let ctx = PrecisionContext::new(30).unwrap();
    let p = ctx.working_bits();
    let spec = TrigSumSpec {
        angle: Angle::PiMultiple(ratio(2, 3)),
        s: Complex::from_real(Real::from_u64(3, p)),
        terms: 20_000,
        kind: TrigKind::Cos,
    };
    let mut group = c.benchmark_group("trig_dirichlet");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| trig_dirichlet(&spec, &ctx, exec).unwrap())
        });
    }
    group.finish();
}

fn identity_batch(c: &mut Criterion) {
    let ctx = PrecisionContext::new(30).unwrap();
    let mut cases = Vec::new();
    for r in 1..=3 {
        for x in [ratio(1, 3), ratio(1, 2), ratio(2, 3), int(1)] {
            cases.push(IdentityCase {
                id: IdentityId::LogCosine,
                order: Some(Order::R(r)),
                x,
                n_terms: 2_000,
                k_terms: 40,
            });
        }
    }
    let mut group = c.benchmark_group("verify_batch");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| verify_batch(&cases, &ctx, exec))
        });
    }
    group.finish();
}

fn family_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("bench_table");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| bench_table(&SeriesFamily::ALL, 1, 50, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, dirichlet_sum, identity_batch, family_bench);
criterion_main!(benches);
