use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use flawless_bench::bench_matroids;
use flawless_core::constructions::{complete, family_graphs, graphic};
use flawless_core::invariants::{bc_f_vector, tutte, tutte_subset_expansion, TutteCache};
use flawless_core::LinearOrder;

fn tutte_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("tutte");
    for (name, m) in bench_matroids() {
        group.bench_function(format!("memo/{name}"), |b| b.iter(|| tutte(black_box(&m))));
        if m.len() <= 10 {
            group.bench_function(format!("expansion/{name}"), |b| {
                b.iter(|| tutte_subset_expansion(black_box(&m)).unwrap())
            });
        }
    }
    group.bench_function("shared-cache/graphs<=6", |b| {
        let family: Vec<_> = family_graphs(6)
            .unwrap()
            .iter()
            .map(|g| graphic(g).unwrap())
            .collect();
        b.iter(|| {
            let mut cache = TutteCache::new();
            for m in &family {
                black_box(cache.tutte(m));
            }
        })
    });
    group.finish();
}

fn face_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("bc_f_vector");
    for (name, m) in bench_matroids() {
        let order = LinearOrder::natural(m.len());
        group.bench_function(name, |b| {
            b.iter(|| bc_f_vector(black_box(&m), &order).unwrap())
        });
    }
    group.finish();
}

fn graphic_construction(c: &mut Criterion) {
    let k5 = complete(5).unwrap();
    c.bench_function("graphic/K5", |b| {
        b.iter(|| graphic(black_box(&k5)).unwrap())
    });
}

criterion_group!(benches, tutte_routes, face_counts, graphic_construction);
criterion_main!(benches);
