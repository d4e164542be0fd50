use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use nilsol_core::{derivation_algebra, family_extended, rat, soliton_test};

fn derivations(c: &mut Criterion) {
    let mut group = c.benchmark_group("derivation_algebra");
    for (m, k) in [(8, 0), (9, 0), (8, 2), (9, 3)] {
        let g = family_extended(m, k, &rat(2, 1)).unwrap().algebra;
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("m{m}_k{k}")),
            &g,
            |b, g| b.iter(|| derivation_algebra(black_box(g))),
        );
    }
    group.finish();
}

fn soliton(c: &mut Criterion) {
    let mut group = c.benchmark_group("soliton_test");
    for (m, k) in [(8, 0), (9, 0), (8, 2), (9, 3)] {
        let g = family_extended(m, k, &rat(2, 1)).unwrap().algebra;
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("m{m}_k{k}")),
            &g,
            |b, g| b.iter(|| soliton_test(black_box(g))),
        );
    }
    group.finish();
}

criterion_group!(benches, derivations, soliton);
criterion_main!(benches);
