//! Distance-`d` independent set through graph powers, and the red-blue
//! dominating set to connected vertex cover construction.

use serde::{Deserialize, Serialize};

use crate::decomposition::Budget;
use crate::dp_treewidth::{maximum_independent_set, Solution};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minsep::enumerate_minimal_separators_capped;
use crate::oracle::{self, Problem};
use crate::vertex_set::VertexSet;

/// Largest reduced graph on which [`solution_correspondence_check`] runs.
pub const CORRESPONDENCE_LIMIT: usize = 16;

/// Maximum set of vertices at pairwise distance at least `d`, as a maximum
/// independent set of `G^(d-1)`. Only even `d >= 2` is accepted: for odd
/// `d >= 3` the problem is NP-hard already on chordal graphs.
pub fn distance_d_independent_set(g: &Graph, d: usize, budget: &Budget) -> Result<Solution> {
    if d < 2 || d % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "distance d = {d} unsupported: d must be even and >= 2 (odd d >= 3 is NP-hard on chordal graphs)"
        )));
    }
    let power = g.power(d - 1)?;
    let solution = maximum_independent_set(&power, budget)?;
    let dist = g.distance_matrix();
    let members: Vec<usize> = solution.set.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if (dist[u][v] as u64) < d as u64 {
                return Err(Error::Verification(format!(
                    "vertices {u} and {v} are at distance {} < {d}",
                    dist[u][v]
                )));
            }
        }
    }
    Ok(solution)
}

/// A bipartite graph with its red and blue sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub graph: Graph,
    pub reds: VertexSet,
    pub blues: VertexSet,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, reds: VertexSet, blues: VertexSet) -> Result<Self> {
        graph.check_set(&reds)?;
        graph.check_set(&blues)?;
        if reds.intersects(&blues) {
            return Err(Error::InvalidParameter(format!(
                "vertices {} are both red and blue",
                reds & blues
            )));
        }
        if (reds | blues) != graph.vertices() {
            return Err(Error::InvalidParameter(format!(
                "vertices {} have no colour",
                graph.vertices() - (reds | blues)
            )));
        }
        if let Some((u, v)) = graph
            .edges()
            .find(|&(u, v)| reds.contains(u) == reds.contains(v))
        {
            return Err(Error::InvalidParameter(format!(
                "edge {u}-{v} inside one colour class"
            )));
        }
        Ok(BipartiteGraph { graph, reds, blues })
    }

    /// Random instance: `reds` red vertices, then `blues` blue ones, each
    /// cross pair joined with probability `p`.
    pub fn random(reds: usize, blues: usize, p: f64, seed: u64) -> Result<Self> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut graph = Graph::new(reds + blues)?;
        for r in 0..reds {
            for b in reds..reds + blues {
                if rng.gen_bool(p.clamp(0.0, 1.0)) {
                    graph.add_edge(r, b)?;
                }
            }
        }
        BipartiteGraph::new(graph, (0..reds).collect(), (reds..reds + blues).collect())
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexRole {
    Red,
    Blue,
    Hub,
    /// Pendant attached to the given vertex.
    Pendant(usize),
}

/// The connected vertex cover instance built from a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedBlueReduction {
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
    pub hub: usize,
    pub reds: VertexSet,
    pub blues: VertexSet,
}

impl RedBlueReduction {
    /// Cover size bound matching a dominating set of size `k`.
    pub fn cover_bound(&self, k: usize) -> usize {
        k + self.reds.len() + 1
    }
}

/// Keeps the original vertices, adds a hub `u` adjacent to every blue
/// vertex, then a pendant on each red vertex (ascending) and one on `u`.
pub fn red_blue_to_cvc(b: &BipartiteGraph) -> Result<RedBlueReduction> {
    let n = b.n();
    let hub = n;
    let total = n + 1 + b.reds.len() + 1;
    let mut graph = Graph::new(total)?;
    let mut roles: Vec<VertexRole> = (0..n)
        .map(|v| {
            if b.reds.contains(v) {
                VertexRole::Red
            } else {
                VertexRole::Blue
            }
        })
        .collect();
    roles.push(VertexRole::Hub);
    for (u, v) in b.graph.edges() {
        graph.add_edge(u, v)?;
    }
    for v in b.blues.iter() {
        graph.add_edge(hub, v)?;
    }
    for (i, r) in b.reds.iter().enumerate() {
        graph.add_edge(r, hub + 1 + i)?;
        roles.push(VertexRole::Pendant(r));
    }
    graph.add_edge(hub, total - 1)?;
    roles.push(VertexRole::Pendant(hub));
    Ok(RedBlueReduction {
        graph,
        roles,
        hub,
        reds: b.reds,
        blues: b.blues,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionSeparatorReport {
    pub separators_original: usize,
    pub separators_reduced: usize,
    pub vertices_reduced: usize,
}

impl ReductionSeparatorReport {
    pub fn holds(&self) -> bool {
        self.separators_reduced <= self.separators_original + self.vertices_reduced
    }
}

/// Counts minimal separators before and after [`red_blue_to_cvc`]; the
/// reduced graph has at most `|V(G')|` more.
pub fn verify_reduction_separator_bound(
    b: &BipartiteGraph,
    separator_limit: usize,
) -> Result<ReductionSeparatorReport> {
    let reduced = red_blue_to_cvc(b)?;
    Ok(ReductionSeparatorReport {
        separators_original: enumerate_minimal_separators_capped(&b.graph, separator_limit)?.len(),
        separators_reduced: enumerate_minimal_separators_capped(&reduced.graph, separator_limit)?
            .len(),
        vertices_reduced: reduced.graph.n(),
    })
}

/// Minimum red-blue dominating set and minimum connected vertex cover of the
/// reduced graph, both by exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceOptima {
    pub dominating_set: Option<usize>,
    pub connected_cover: Option<usize>,
}

pub fn correspondence_optima(
    b: &BipartiteGraph,
) -> Result<(RedBlueReduction, CorrespondenceOptima)> {
    let reduced = red_blue_to_cvc(b)?;
    if reduced.graph.n() > CORRESPONDENCE_LIMIT {
        return Err(Error::TooLargeForOracle(format!(
            "reduced graph has {} vertices, limit {CORRESPONDENCE_LIMIT}",
            reduced.graph.n()
        )));
    }
    let dominating_set = oracle::brute_solve(
        &b.graph,
        Problem::RedBlueDominatingSet {
            reds: b.reds,
            blues: b.blues,
        },
    )?;
    let connected_cover = oracle::brute_solve(&reduced.graph, Problem::ConnectedVertexCover)?;
    Ok((
        reduced,
        CorrespondenceOptima {
            dominating_set,
            connected_cover,
        },
    ))
}

/// Whether "dominating set of size <= k" and "connected vertex cover of the
/// reduced graph of size <= k + |R| + 1" agree.
pub fn solution_correspondence_check(b: &BipartiteGraph, k: usize) -> Result<bool> {
    let (reduced, opt) = correspondence_optima(b)?;
    Ok(correspondence_at(&reduced, &opt, k))
}

pub fn correspondence_at(reduced: &RedBlueReduction, opt: &CorrespondenceOptima, k: usize) -> bool {
    let dominated = opt.dominating_set.is_some_and(|s| s <= k);
    let covered = opt
        .connected_cover
        .is_some_and(|s| s <= reduced.cover_bound(k));
    dominated == covered
}
