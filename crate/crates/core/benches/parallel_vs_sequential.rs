use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use verlab_core::fusion::oracle_mismatches;
use verlab_core::growth::nabla_lengths;
use verlab_core::tiltring::ideal_closure_violations;
use verlab_core::{Exec, Prime};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn fusion_oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("fusion_oracles");
    for q in [13u64, 31] {
        let p = Prime::new(q).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, q), &p, |b, &p| {
                b.iter(|| oracle_mismatches(black_box(p), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn ideal_certificate(c: &mut Criterion) {
    let mut group = c.benchmark_group("ideal_certificate");
    let p = Prime::new(5).unwrap();
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| ideal_closure_violations(black_box(p), 2, 75, exec).unwrap())
        });
    }
    group.finish();
}

fn nabla_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("nabla_lengths");
    group.sample_size(10);
    let p = Prime::new(3).unwrap();
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| nabla_lengths(black_box(p), 1500, exec)));
    }
    group.finish();
}

criterion_group!(benches, fusion_oracles, ideal_certificate, nabla_batch);
criterion_main!(benches);
