use criterion::{criterion_group, criterion_main, Criterion};

use coxarr::bruhat;
use coxarr::typea::{self, Permutation};
use coxarr::{InversionArrangement, Kind};
use coxarr_bench::{middle_element, system};

fn bruhat_queries(c: &mut Criterion) {
    let sys = system(Kind::H, 3);
    let w = middle_element(&sys);
    c.bench_function("ideal H3", |b| b.iter(|| bruhat::ideal(&sys, w).len()));
    c.bench_function("distance condition H3", |b| {
        b.iter(|| bruhat::distance_condition(&sys, w))
    });
    c.bench_function("broken rhombi H3", |b| {
        b.iter(|| bruhat::broken_rhombi(&sys, w).len())
    });
}

fn arrangements(c: &mut Criterion) {
    let sys = system(Kind::A, 4);
    let arr = InversionArrangement::canonical(&sys, sys.longest_element());
    c.bench_function("nbc sets A4 w0", |b| {
        b.iter(|| arr.nbc_sets().unwrap().len())
    });
    c.bench_function("whitney regions A4 w0", |b| {
        b.iter(|| arr.region_count().unwrap())
    });
    c.bench_function("phi check A4 w0", |b| b.iter(|| arr.phi_check().unwrap()));
}

fn collection(c: &mut Criterion) {
    let s5 = typea::symmetric_group(5).unwrap();
    let all: Vec<Permutation> = Permutation::all(5).collect();
    c.bench_function("collection S5", |b| {
        b.iter(|| {
            all.iter()
                .filter(|w| typea::check_collection(&s5, w).unwrap().regions_eq_interval)
                .count()
        })
    });
}

criterion_group!(benches, bruhat_queries, arrangements, collection);
criterion_main!(benches);
