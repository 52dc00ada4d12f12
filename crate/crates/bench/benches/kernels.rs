use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use sixjvol_bench::{bench_colors, bench_theta};
use sixjvol_core::hypgeom::{lobachevsky, solve_z0, volume_my, TruncTetra};
use sixjvol_core::rootval::SineTable;
use sixjvol_core::sixj::sixj_lead;

fn bench_lobachevsky(c: &mut Criterion) {
    c.bench_function("lobachevsky", |b| {
        b.iter(|| black_box(lobachevsky(black_box(std::f64::consts::FRAC_PI_4))))
    });
}

fn bench_sine_table(c: &mut Criterion) {
    c.bench_function("sine_table_n4000", |b| {
        b.iter(|| black_box(SineTable::for_root(black_box(4000))))
    });
}

fn bench_sixj(c: &mut Criterion) {
    let mut group = c.benchmark_group("sixj_lead");
    for n in [101u32, 401, 1601] {
        let (colors, table) = bench_colors(n);
        group.bench_function(format!("n{n}"), |b| {
            b.iter_batched(
                || colors,
                |colors| black_box(sixj_lead(&colors, &table).unwrap()),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn bench_volumes(c: &mut Criterion) {
    let theta = bench_theta();
    c.bench_function("solve_z0", |b| b.iter(|| black_box(solve_z0(&theta).unwrap())));
    let tetra = TruncTetra::from_theta(&theta).unwrap();
    c.bench_function("volume_my", |b| b.iter(|| black_box(volume_my(&tetra).unwrap())));
}

criterion_group!(benches, bench_lobachevsky, bench_sine_table, bench_sixj, bench_volumes);
criterion_main!(benches);
