use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Recognition certificate: a perfect elimination ordering, or a chordless
/// cycle of length at least four (in cycle order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalityWitness {
    EliminationOrder(Vec<usize>),
    ChordlessCycle(Vec<usize>),
}

/// Maximum cardinality search; the reverse visiting order is a perfect
/// elimination ordering iff the graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|v| !visited.contains(*v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex");
        visited.insert(v);
        order.push(v);
        for u in (*g.neighbors(v) - visited).iter() {
            weight[u] += 1;
        }
    }
    order.reverse();
    order
}

/// Whether every vertex's later neighbours form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        let nb = *g.neighbors(v) & later;
        if !g.is_clique(&nb) {
            return false;
        }
    }
    true
}

pub fn is_chordal(g: &Graph) -> (bool, ChordalityWitness) {
    let order = maximum_cardinality_search(g);
    if is_perfect_elimination_order(g, &order) {
        return (true, ChordalityWitness::EliminationOrder(order));
    }
    let cycle = find_chordless_cycle(g).expect("MCS failed, so a long chordless cycle exists");
    (false, ChordalityWitness::ChordlessCycle(cycle))
}

/// A chordless cycle of length >= 4, if any: for some `v` with two
/// non-adjacent neighbours `u, w`, a shortest `u-w` path avoiding the rest of
/// `N[v]` closes one.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(v).iter().collect();
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let mut blocked = g.closed_neighborhood(&VertexSet::singleton(v));
                blocked.remove(u);
                blocked.remove(w);
                if let Some(path) = shortest_path(g, u, w, &(g.vertices() - blocked)) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::from([from]);
    parent[from] = from;
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in (*g.neighbors(x) & *allowed).iter() {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Random connected chordal graph grown vertex by vertex: each new vertex
/// picks a maximal clique and attaches to a random non-empty subset of it
/// (each member kept with probability `density`).
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "random_chordal needs n >= 1".into(),
        ));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter(format!(
            "density {density} not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n)?;
    let mut cliques: Vec<VertexSet> = vec![VertexSet::singleton(0)];
    for v in 1..n {
        let ci = rng.gen_range(0..cliques.len());
        let clique = cliques[ci];
        let members: Vec<usize> = clique.iter().collect();
        let mut attach: VertexSet = members
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(density))
            .collect();
        if attach.is_empty() {
            attach.insert(members[rng.gen_range(0..members.len())]);
        }
        for u in attach.iter() {
            g.add_edge(u, v)?;
        }
        let mut grown = attach;
        grown.insert(v);
        if attach == clique {
            cliques[ci] = grown;
        } else {
            cliques.push(grown);
        }
    }
    Ok(g)
}
