use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use chordless::generate::{generate, Family};
use chordless::labeling::degree_labeling;
use chordless::parallel::{default_workers, host_enumerate_with, KernelConfig};
use chordless::sequential::enumerate_sequential_with;

fn bench_engines(c: &mut Criterion) {
    let families = [
        Family::CompleteBipartite(8, 8),
        Family::Grid(4, 10),
        Family::Grid(5, 6),
        Family::Grid(6, 6),
        Family::Wheel(100),
    ];
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for family in families {
        let g = generate(family).unwrap();
        let labeling = degree_labeling(&g);
        let name = family.to_string();
        group.bench_with_input(BenchmarkId::new("sequential", &name), &g, |b, g| {
            b.iter(|| enumerate_sequential_with(g, &labeling, true).total())
        });
        for workers in [1, default_workers()] {
            let config = KernelConfig {
                workers,
                count_only: true,
                ..KernelConfig::default()
            };
            group.bench_with_input(
                BenchmarkId::new(format!("parallel/w{workers}"), &name),
                &g,
                |b, g| {
                    b.iter(|| {
                        host_enumerate_with(g, labeling.clone(), config.clone())
                            .unwrap()
                            .cycles
                            .total()
                    })
                },
            );
        }
    }
    group.finish();
}

criterion_group!(benches, bench_engines);
criterion_main!(benches);
