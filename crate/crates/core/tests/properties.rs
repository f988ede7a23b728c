use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sepdp::classes::{
    graph_from_arc_model, is_chordal, random_arc_model, random_chordal, random_connected_graph,
    random_graph,
};
use sepdp::decomposition::{enumerate_pmcs, is_pmc};
use sepdp::dp_connected::{
    connected_feedback_vertex_set, solve_max_induced_tw_connected, ConnectedOptions, GraphClass,
};
use sepdp::dp_treewidth::{fill_table, solve_max_induced_tw};
use sepdp::minsep::{
    enumerate_minimal_separators, enumerate_minimal_separators_capped, full_components,
    PowerSeparatorLift,
};
use sepdp::oracle::{self, Problem};
use sepdp::reductions::{red_blue_to_cvc, BipartiteGraph};
use sepdp::{Budget, Decomposition, Error, Graph, VertexSet};

/// Maximal cliques of a chordal graph from a perfect elimination ordering.
fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let order = sepdp::classes::maximum_cardinality_search(g);
    let mut later = g.vertices();
    let mut cands = Vec::new();
    for &v in &order {
        later.remove(v);
        let mut c = *g.neighbors(v) & later;
        c.insert(v);
        cands.push(c);
    }
    let mut out: Vec<VertexSet> = cands
        .iter()
        .filter(|c| !cands.iter().any(|d| d != *c && c.is_subset(d)))
        .copied()
        .collect();
    out.sort();
    out.dedup();
    out
}

#[test]
fn chordal_pmcs_are_maximal_cliques() {
    for seed in 0..30 {
        let g = random_chordal(25, [0.2, 0.5, 0.9][seed as usize % 3], seed).unwrap();
        let seps = enumerate_minimal_separators(&g).unwrap();
        let pmcs = enumerate_pmcs(&g, &seps, &Budget::default()).unwrap();
        assert_eq!(pmcs, maximal_cliques(&g));
        assert!(pmcs.len() <= g.n());
        assert!(seps.len() < g.n());
    }
}

#[test]
fn pmc_count_is_polynomial_in_separators() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..60 {
        let g = random_graph(rng.gen_range(2..=12), rng.gen_range(0.1..0.7), rng.gen());
        let seps = enumerate_minimal_separators(&g).unwrap();
        let pmcs = enumerate_pmcs(&g, &seps, &Budget::default()).unwrap();
        let (n, d) = (g.n(), seps.len());
        assert!(
            pmcs.len() <= n * d * d + n * d + 1,
            "{} PMCs, n={n}, |Δ|={d}",
            pmcs.len()
        );
        assert!(pmcs.iter().all(|p| is_pmc(&g, p)));
    }
}

#[test]
fn returned_separators_have_two_full_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..50 {
        let g = random_graph(rng.gen_range(2..=16), rng.gen_range(0.1..0.5), rng.gen());
        for s in &enumerate_minimal_separators(&g).unwrap() {
            assert!(full_components(&g, s).len() >= 2);
        }
    }
}

#[test]
fn dp_keys_respect_the_cardinality_guard() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..20 {
        let g = random_graph(rng.gen_range(4..=12), rng.gen_range(0.2..0.6), rng.gen());
        let dec = Decomposition::build(&g, &Budget::default()).unwrap();
        for t in 0..3 {
            let table = fill_table(&dec, t, 1).unwrap();
            for (bi, keys) in table.alpha.iter().enumerate() {
                for w in keys.keys() {
                    assert!(w.len() <= t + 1);
                    assert!(w.is_subset(&dec.blocks[bi].separator));
                }
            }
        }
    }
}

#[test]
fn witnesses_for_larger_t_pass_the_treewidth_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..25 {
        let g = random_graph(rng.gen_range(4..=11), rng.gen_range(0.3..0.8), rng.gen());
        for t in 2..=3 {
            let s = solve_max_induced_tw(&g, t, &Budget::default()).unwrap();
            assert!(oracle::treewidth(&g, &s.set).unwrap() <= t);
            assert_eq!(
                Some(s.size),
                oracle::brute_solve(&g, Problem::MaxInducedTreewidth(t)).unwrap()
            );
        }
    }
}

#[test]
fn lifted_regions_stay_apart() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..40 {
        let g = random_connected_graph(rng.gen_range(4..=16), rng.gen_range(0.0..0.15), rng.gen());
        for k in [3, 5] {
            let lift = PowerSeparatorLift::new(&g, k).unwrap();
            let seps = enumerate_minimal_separators(lift.power()).unwrap();
            for sbar in &seps {
                let w = lift.lift(sbar, None).unwrap();
                let dist = g.distance_matrix();
                let close = w
                    .region_a
                    .iter()
                    .any(|a| w.region_b.iter().any(|b| (dist[a][b] as u64) < 2));
                assert!(!close, "regions of {sbar} touch");
            }
        }
    }
}

#[test]
fn circular_arc_connected_solves_report_bounded_characteristics() {
    for seed in 0..15 {
        let model = random_arc_model(16, 0.35, seed).unwrap();
        let g = graph_from_arc_model(&model).unwrap();
        let class = GraphClass::CircularArc(model);
        match connected_feedback_vertex_set(&g, &class, &Budget::default()) {
            Ok(c) => {
                assert!(c.stats.max_separator_parts <= 2 && c.stats.max_pmc_parts <= 3);
                assert!(c.stats.max_separator_characteristics <= 2);
                assert!(c.stats.max_pmc_characteristics <= 5);
            }
            Err(Error::Infeasible) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn strict_complement_on_forests() {
    let tree = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
    let strict = ConnectedOptions {
        allow_empty_complement: false,
        ..ConnectedOptions::default()
    };
    let general = GraphClass::General {
        max_clique_parts: 6,
    };
    let lenient = solve_max_induced_tw_connected(
        &tree,
        1,
        &general,
        &Budget::default(),
        &ConnectedOptions::default(),
    )
    .unwrap();
    assert_eq!(lenient.size, 5);
    let s =
        solve_max_induced_tw_connected(&tree, 1, &general, &Budget::default(), &strict).unwrap();
    assert_eq!(s.size, 4);
}

#[test]
fn powers_keep_chordality_for_odd_exponents() {
    for seed in 0..20 {
        let g = random_chordal(40, 0.3, seed).unwrap();
        for k in [1, 3, 5] {
            assert!(is_chordal(&g.power(k).unwrap()).0);
        }
    }
}

#[test]
fn separator_budget_is_explicit() {
    // Sparse random graphs have many minimal separators; a tiny cap must fail loudly.
    let g = random_connected_graph(30, 0.05, 1);
    match enumerate_minimal_separators_capped(&g, 3) {
        Err(Error::SeparatorBudget { limit: 3 }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn reduction_sizes() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    for _ in 0..20 {
        let (r, b) = (rng.gen_range(0..6), rng.gen_range(0..6));
        let bip = BipartiteGraph::random(r, b, 0.5, rng.gen()).unwrap();
        let red = red_blue_to_cvc(&bip).unwrap();
        assert_eq!(red.graph.n(), r + b + 1 + r + 1);
        assert_eq!(red.graph.degree(red.hub), b + 1);
    }
}
