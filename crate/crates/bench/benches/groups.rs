use criterion::{black_box, criterion_group, criterion_main, Criterion};

use coxarr::{CoxeterDatum, CoxeterSystem, Kind};
use coxarr_bench::system;

fn build(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    for (kind, rank) in [
        (Kind::A, 4),
        (Kind::B, 4),
        (Kind::D, 4),
        (Kind::H, 3),
        (Kind::F, 4),
    ] {
        let d = CoxeterDatum::new(kind, rank, None).unwrap();
        g.bench_function(d.to_string(), |b| {
            b.iter(|| CoxeterSystem::new(black_box(d)).unwrap())
        });
    }
    g.finish();
}

fn absolute_length(c: &mut Criterion) {
    let sys = system(Kind::B, 4);
    c.bench_function("carter rank over B4", |b| {
        b.iter(|| {
            sys.ids()
                .map(|x| sys.absolute_length_carter(x).unwrap())
                .sum::<usize>()
        })
    });
    c.bench_function("reflection bfs B4", |b| {
        b.iter(|| {
            let fresh = system(Kind::B, 4);
            fresh.absolute_lengths().len()
        })
    });
}

criterion_group!(benches, build, absolute_length);
criterion_main!(benches);
