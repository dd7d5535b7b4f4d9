use criterion::{black_box, criterion_group, criterion_main, Criterion};
use twcert_core::certificate::{verify_certificate, Certificate, Flavor};
use twcert_core::corpus;
use twcert_core::generators::{intro_grid_lengths, make_grid, make_wheel};
use twcert_core::graph::f2_sum;
use twcert_core::metric::{
    distances_from, enumerate_cycles_up_to, rat, LengthFn, DEFAULT_WORK_BUDGET,
};
use twcert_core::treewidth::exact_treewidth_with_limit;

fn bench_f2_sum(c: &mut Criterion) {
    let grid = make_grid(9).unwrap();
    let sets: Vec<_> = grid.faces().iter().map(|f| f.edge_set().clone()).collect();
    c.bench_function("f2_sum grid9 faces", |b| {
        b.iter(|| f2_sum(&grid.graph, black_box(&sets)).unwrap())
    });
}

fn bench_shortest_paths(c: &mut Criterion) {
    let grid = make_grid(9).unwrap();
    let l = intro_grid_lengths(&grid);
    c.bench_function("dijkstra grid9 intro", |b| {
        b.iter(|| distances_from(&grid.graph, &l, black_box(0)))
    });
}

fn bench_cycle_enumeration(c: &mut Criterion) {
    let grid = make_grid(5).unwrap();
    let l = intro_grid_lengths(&grid);
    c.bench_function("enumerate grid5 length<=8", |b| {
        b.iter(|| enumerate_cycles_up_to(&grid.graph, &l, &rat(8, 1), DEFAULT_WORK_BUDGET).unwrap())
    });
}

fn bench_verify(c: &mut Criterion) {
    let grid = make_grid(9).unwrap();
    let l = intro_grid_lengths(&grid);
    let cert = Certificate::new(
        grid.outer_cycle().clone(),
        grid.faces().to_vec(),
        rat(8, 1),
        Flavor::RationalGeodesic,
    )
    .unwrap();
    c.bench_function("verify grid9 certificate", |b| {
        b.iter(|| verify_certificate(&grid.graph, &l, black_box(&cert)).unwrap())
    });
}

fn bench_treewidth(c: &mut Criterion) {
    let wheel = make_wheel(9).unwrap();
    c.bench_function("treewidth wheel9", |b| {
        b.iter(|| exact_treewidth_with_limit(black_box(&wheel.graph), 12).unwrap())
    });
    let mut rng = corpus::rng(40);
    let random = corpus::random_connected_graph(&mut rng, 10, 0.4);
    c.bench_function("treewidth random10", |b| {
        b.iter(|| exact_treewidth_with_limit(black_box(&random), 12).unwrap())
    });
}

fn bench_geodesic_check(c: &mut Criterion) {
    let grid = make_grid(7).unwrap();
    let l = intro_grid_lengths(&grid);
    c.bench_function("geodesic grid7 outer", |b| {
        b.iter(|| {
            twcert_core::metric::is_geodesic_cycle(&grid.graph, &l, black_box(grid.outer_cycle()))
        })
    });
    let unit = LengthFn::unit(&grid.graph);
    c.bench_function("geodesic grid7 outer unit", |b| {
        b.iter(|| {
            twcert_core::metric::is_geodesic_cycle(
                &grid.graph,
                &unit,
                black_box(grid.outer_cycle()),
            )
        })
    });
}

criterion_group!(
    benches,
    bench_f2_sum,
    bench_shortest_paths,
    bench_cycle_enumeration,
    bench_verify,
    bench_treewidth,
    bench_geodesic_check
);
criterion_main!(benches);
