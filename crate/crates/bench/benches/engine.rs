use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use w22_core::scalar::int;
use w22_core::verify::{run_suite, Options, SuiteId};
use w22_core::{multiply, AlgebraElement, GenKind, Generator, Quantization, TwistConfig};

fn word(gens: &[Generator]) -> AlgebraElement {
    gens.iter().fold(AlgebraElement::one(), |acc, &g| {
        multiply(&acc, &AlgebraElement::generator(g))
    })
}

fn pbw_product(c: &mut Criterion) {
    let a = word(&[Generator::l(3), Generator::w(-2), Generator::l(-1)]);
    let b = word(&[Generator::l(2), Generator::l(-3), Generator::w(1)]);
    c.bench_function("pbw_product_degree3", |bench| {
        bench.iter(|| multiply(black_box(&a), black_box(&b)))
    });
}

fn twist_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("twist_elements");
    for order in [2usize, 4, 6] {
        let cfg = TwistConfig::new(1, GenKind::L, order).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(order), &cfg, |bench, cfg| {
            bench.iter(|| Quantization::new(*cfg).twist(&int(1)))
        });
    }
    group.finish();
}

fn twisted_coproduct(c: &mut Criterion) {
    let mut group = c.benchmark_group("twisted_coproduct");
    for kind in [GenKind::L, GenKind::W] {
        let q = Quantization::new(TwistConfig::new(1, kind, 4).unwrap());
        let a = AlgebraElement::generator(Generator::l(-2));
        group.bench_function(BenchmarkId::new("delta", kind), |bench| {
            bench.iter(|| q.delta(black_box(&a)))
        });
        group.bench_function(BenchmarkId::new("antipode", kind), |bench| {
            bench.iter(|| q.antipode(black_box(&a)))
        });
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    let opts = Options::default();
    let l = TwistConfig::new(1, GenKind::L, 3).unwrap();
    let w = TwistConfig::new(1, GenKind::W, 3).unwrap();
    for (id, cfg) in [
        (SuiteId::Lemma2_2, l),
        (SuiteId::Lemma2_4, l),
        (SuiteId::Theorem1_4, l),
        (SuiteId::Theorem1_5, w),
    ] {
        group.bench_function(id.name(), |bench| {
            bench.iter(|| run_suite(id, &cfg, &opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    pbw_product,
    twist_construction,
    twisted_coproduct,
    suites
);
criterion_main!(benches);
