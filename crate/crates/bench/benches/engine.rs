use std::hint::black_box;

use coxperc::percolation::{build_percolating_sequence, build_strong_percolating_sequence};
use coxperc::search::{reflection_moves, search, DEFAULT_STATE_CAP};
use coxperc::{CosetTable, CoxeterGroup, CoxeterSystem, GenSet, IncidenceGraph, DEFAULT_CAP};
use coxperc_bench::maximal_quotient;
use criterion::{criterion_group, criterion_main, Criterion};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for name in ["B3", "H3", "F4", "D5"] {
        let system = CoxeterSystem::builtin(name).unwrap();
        g.bench_function(name, |b| {
            b.iter(|| {
                CosetTable::enumerate(black_box(&system), GenSet::EMPTY, DEFAULT_CAP).unwrap()
            })
        });
    }
    g.finish();
    c.bench_function("group/F4", |b| {
        b.iter(|| CoxeterGroup::builtin(black_box("F4")).unwrap())
    });
}

fn certificates(c: &mut Criterion) {
    let (group, table) = maximal_quotient("F4");
    c.bench_function("strong/F4 all starts", |b| {
        b.iter(|| {
            for w in 1..table.len() {
                black_box(build_strong_percolating_sequence(&group, &table, w).unwrap());
            }
        })
    });
    let regular = group.regular().clone();
    c.bench_function("percolating/F4 regular", |b| {
        b.iter(|| black_box(build_percolating_sequence(&group, &regular)))
    });
    c.bench_function("incidence/24-cell", |b| {
        let all = group.system().all();
        let parts = [
            all.difference(GenSet::single(0)),
            all.difference(GenSet::single(3)),
        ];
        b.iter(|| IncidenceGraph::build(&group, black_box(&parts)).unwrap())
    });
}

fn exhaustive(c: &mut Criterion) {
    let group = CoxeterGroup::builtin("A2xI2(2)").unwrap();
    let table = group
        .quotient(group.system().parse_subset("s1,s3").unwrap())
        .unwrap();
    let (moves, _) = reflection_moves(&group, &table);
    c.bench_function("search/blow-up pair", |b| {
        b.iter(|| search(table.len(), black_box(&moves), &[0, 1], DEFAULT_STATE_CAP).unwrap())
    });
}

criterion_group!(benches, enumeration, certificates, exhaustive);
criterion_main!(benches);
