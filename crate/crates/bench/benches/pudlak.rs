use criterion::{criterion_group, criterion_main, Criterion};
use inseg_core::order::named;
use inseg_core::pudlak::rep_verify;
use inseg_core::{RepSequence, RuleVariant};
use std::hint::black_box;

fn expansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("pudlak");
    group.sample_size(10);
    for tag in ["b2", "n5"] {
        let l = named(tag).unwrap();
        let top = l.top();
        group.bench_function(format!("build {tag} to stage 2"), |b| {
            b.iter(|| {
                RepSequence::build(black_box(l.clone()), top, RuleVariant::B, 3, 50_000).unwrap()
            })
        });
        let r = RepSequence::build(l.clone(), top, RuleVariant::B, 3, 50_000).unwrap();
        group.bench_function(format!("verify {tag} to stage 2"), |b| {
            b.iter(|| rep_verify(black_box(&r), 2).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, expansion);
criterion_main!(benches);
