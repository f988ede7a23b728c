//! Chordal and circular-arc graphs: recognition, models, generators, and the
//! clique partitions the connected DP relies on.

mod arcs;
mod chordal;

pub use arcs::{
    graph_from_arc_model, pmc_clique_partition, random_arc_model, separator_clique_partition,
    ArcModel,
};
pub use chordal::{
    find_chordless_cycle, is_chordal, is_perfect_elimination_order, maximum_cardinality_search,
    random_chordal, ChordalityWitness,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)`, deterministic per seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n).expect("n within capacity");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// `G(n, p)` plus a random spanning tree, so always connected.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut g = random_graph(n, p, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).expect("valid edge");
    }
    g
}
