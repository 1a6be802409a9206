use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fvmlf_core::axioms::suite::run_standard_suite;
use fvmlf_core::image::{filter_image_with, synthetic_scene, FilterKind};
use fvmlf_core::noise::{add_impulse, NoiseKind, NoiseSpec};
use fvmlf_core::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn filters(c: &mut Criterion) {
    let spec = NoiseSpec::new(NoiseKind::FixedValue, 0.1, false, 42).unwrap();
    let noisy = add_impulse(&synthetic_scene(128, 128), &spec);
    let kinds = [
        FilterKind::Vmf { p: 2.0 },
        FilterKind::Fvmf { k: 1024.0 },
        FilterKind::FvmlfFull { k: 1024.0 },
        FilterKind::FvmlfScheme { k: 1024.0 },
    ];
    let mut group = c.benchmark_group("filter_128x128");
    for kind in kinds {
        for (mode, execution) in MODES {
            group.bench_with_input(BenchmarkId::new(kind.name(), mode), &execution, |b, &ex| {
                b.iter(|| filter_image_with(&noisy, kind, 3, ex).unwrap())
            });
        }
    }
    group.finish();
}

fn axiom_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("axiom_suite_200");
    group.sample_size(10);
    for (mode, execution) in MODES {
        group.bench_function(mode, |b| {
            b.iter(|| run_standard_suite(1, 200, execution).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, filters, axiom_suite);
criterion_main!(benches);
