use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cjp_core::burau::walk_generator;
use cjp_core::par::with_threads;
use cjp_core::table::KnotTable;
use cjp_core::{colored_jones, CjpOptions};

/// One worker versus the default pool (all cores). Building with
/// `--no-default-features` makes both run the plain sequential path.
const MODES: [(&str, usize); 2] = [("sequential", 1), ("parallel", 0)];

fn engine(c: &mut Criterion) {
    let table = KnotTable::bundled();
    let mut group = c.benchmark_group("colored_jones");
    group.sample_size(20);
    for (name, n) in [("7_4", 3), ("8_1", 3), ("9_40", 3)] {
        let braid = table.lookup(name).unwrap().braid_word().unwrap();
        let id = format!("{name}/N{n}");
        for (label, threads) in MODES {
            group.bench_with_input(BenchmarkId::new(label, &id), &braid, |b, braid| {
                with_threads(threads, || {
                    b.iter(|| colored_jones(braid, n, CjpOptions::default()).unwrap())
                })
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("walk_generator");
    let braid = table.lookup("8_1").unwrap().braid_word().unwrap();
    for (label, threads) in MODES {
        group.bench_with_input(BenchmarkId::new(label, "8_1"), &braid, |b, braid| {
            with_threads(threads, || b.iter(|| walk_generator(braid, false).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, engine);
criterion_main!(benches);
