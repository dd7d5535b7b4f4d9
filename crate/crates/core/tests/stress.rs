//! Heavier randomized sweeps, ignored by default. Run with
//! `cargo test -p twcert-core --test stress -- --ignored` (release mode
//! recommended).

use rand::Rng;
use twcert_core::corpus;
use twcert_core::generators::{intro_grid_lengths, make_grid, make_wheel};
use twcert_core::graph::{Cycle, Graph, VertexSet};
use twcert_core::metric::{
    enumerate_cycles_up_to, geodesic_violation_with_matrix, rat, split_into_shorter_pair,
    DistanceMatrix, LengthFn, DEFAULT_WORK_BUDGET,
};
use twcert_core::separators::{absorb_component, extend_separator, Dichotomy};

fn geodesic_cycles(g: &Graph, unit: &LengthFn, matrix: &DistanceMatrix) -> Vec<Cycle> {
    let Some(diam) = matrix.diameter() else {
        return Vec::new();
    };
    let bound = rat(2, 1) * diam + rat(1, 1);
    enumerate_cycles_up_to(g, unit, &bound, DEFAULT_WORK_BUDGET)
        .unwrap()
        .into_iter()
        .filter(|c| geodesic_violation_with_matrix(g, matrix, unit, c).is_none())
        .collect()
}

#[test]
#[ignore = "heavier sweep; run explicitly"]
fn stress_separator_extension() {
    let mut rng = corpus::rng(9901);
    let mut instances = 0usize;
    while instances < 3000 {
        let n = rng.gen_range(5..=11);
        let p = rng.gen_range(0.15..0.45);
        let g = corpus::random_connected_graph(&mut rng, n, p);
        let unit = LengthFn::unit(&g);
        let matrix = DistanceMatrix::new(&g, &unit);
        let geodesics = geodesic_cycles(&g, &unit, &matrix);
        if geodesics.is_empty() {
            continue;
        }
        for _ in 0..6 {
            let c = &geodesics[rng.gen_range(0..geodesics.len())];
            let size = rng.gen_range(1..=(2 * n / 3).max(1));
            let mut seeds: Vec<usize> = (0..n).collect();
            for i in (1..seeds.len()).rev() {
                seeds.swap(i, rng.gen_range(0..=i));
            }
            seeds.truncate(size);
            let x = VertexSet::from_vertices(&g, &seeds).unwrap();
            let d = rng.gen_range(1..=5);
            let fam = extend_separator(&g, c, &x, d).unwrap();
            fam.verify(&g, c, &x)
                .unwrap_or_else(|v| panic!("n={n} |X|={size} d={d}: {v}"));
            instances += 1;
        }
    }
    // landmark cycles too
    for n in 2..=6 {
        let grid = make_grid(n).unwrap();
        let unit = LengthFn::unit(&grid.graph);
        // face cycles are unit-geodesic; the outer cycle is not for n >= 3
        for face in grid.faces() {
            assert!(twcert_core::is_geodesic_cycle(&grid.graph, &unit, face));
            for d in 1..=3 {
                let x = VertexSet::from_vertices(&grid.graph, &[0, grid.vertex_at(n, n)]).unwrap();
                let fam = extend_separator(&grid.graph, face, &x, d).unwrap();
                fam.verify(&grid.graph, face, &x).unwrap();
            }
        }
        let l = intro_grid_lengths(&grid);
        assert!(twcert_core::is_geodesic_cycle(
            &grid.graph,
            &l,
            grid.outer_cycle()
        ));
    }
}

#[test]
#[ignore = "heavier sweep; run explicitly"]
fn stress_dichotomy() {
    let mut rng = corpus::rng(9902);
    let mut instances = 0usize;
    let mut witnessed = 0usize;
    while instances < 3000 {
        let n = rng.gen_range(5..=11);
        let p = rng.gen_range(0.15..0.45);
        let g = corpus::random_connected_graph(&mut rng, n, p);
        let unit = LengthFn::unit(&g);
        let matrix = DistanceMatrix::new(&g, &unit);
        let geodesics = geodesic_cycles(&g, &unit, &matrix);
        if geodesics.is_empty() {
            continue;
        }
        let shorts = enumerate_cycles_up_to(&g, &unit, &rat(6, 1), DEFAULT_WORK_BUDGET).unwrap();
        let short_sets: Vec<_> = shorts.iter().map(|c| c.edge_set().clone()).collect();
        for _ in 0..6 {
            let c = &geodesics[rng.gen_range(0..geodesics.len())];
            let generators: Vec<Cycle> = if rng.gen_bool(0.7) {
                match twcert_core::decompose_in_span(&g, c.edge_set(), &short_sets).unwrap() {
                    Some(indices) if !indices.is_empty() => {
                        indices.iter().map(|&i| shorts[i].clone()).collect()
                    }
                    _ => vec![c.clone()],
                }
            } else {
                vec![c.clone()]
            };
            let size = rng.gen_range(1..=(n / 2).max(1));
            let mut seeds: Vec<usize> = (0..n).collect();
            for i in (1..seeds.len()).rev() {
                seeds.swap(i, rng.gen_range(0..=i));
            }
            seeds.truncate(size);
            let x = VertexSet::from_vertices(&g, &seeds).unwrap();
            let d = rng.gen_range(1..=2);
            let fam = extend_separator(&g, c, &x, d).unwrap();
            if fam.union(&g).count() == g.vertex_count() {
                continue;
            }
            match absorb_component(&g, c, &generators, &fam).unwrap() {
                Dichotomy::Witness { .. } => witnessed += 1,
                Dichotomy::Absorbed { component } => {
                    let union = fam.union(&g);
                    for v in c.vertex_order() {
                        assert!(component.contains(*v) || union.contains(*v));
                    }
                }
            }
            instances += 1;
        }
    }
    assert!(witnessed > 0);
}

#[test]
#[ignore = "heavier sweep; run explicitly"]
fn stress_proposition_equivalence() {
    let mut rng = corpus::rng(9903);
    let mut graphs: Vec<Graph> = (4..=9).map(|n| make_wheel(n).unwrap().graph).collect();
    graphs.push(make_grid(2).unwrap().graph);
    for _ in 0..120 {
        let n = rng.gen_range(3..=8);
        let p = rng.gen_range(0.15..0.6);
        graphs.push(corpus::random_connected_graph(&mut rng, n, p));
    }
    let mut checked = 0usize;
    for g in &graphs {
        let unit = LengthFn::unit(g);
        let rational = corpus::random_lengths(&mut rng, g, &[1, 2, 3, 5]);
        for l in [&unit, &rational] {
            let all = enumerate_cycles_up_to(g, l, &l.total(), DEFAULT_WORK_BUDGET).unwrap();
            let matrix = DistanceMatrix::new(g, l);
            for c in &all {
                let metric = geodesic_violation_with_matrix(g, &matrix, l, c).is_none();
                let algebraic = split_into_shorter_pair(g, l, c, &all).is_none();
                assert_eq!(metric, algebraic);
                checked += 1;
            }
        }
    }
    assert!(checked > 10_000, "only {checked} cycles");
}
