//! Simple undirected graphs over dense vertex ids `0..n`, with bitset rows.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, CAPACITY};

/// Marker for "no path" in the distance matrix.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    distances: OnceLock<Arc<Vec<Vec<u32>>>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > CAPACITY {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
            distances: OnceLock::new(),
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.distances = OnceLock::new();
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    #[inline]
    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.last() {
            Some(v) if v >= self.n => Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `N(U) = (∪ N(u)) \ U`.
    pub fn open_neighborhood(&self, set: &VertexSet) -> VertexSet {
        self.union_of_rows(set) - *set
    }

    /// `N[U] = U ∪ N(U)`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        self.union_of_rows(set) | *set
    }

    fn union_of_rows(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in set.iter() {
            out |= self.adj[v];
        }
        out
    }

    /// Vertices within distance `k` of `set` (closed), or those minus `set`
    /// itself (open).
    pub fn neighborhood_k(&self, set: &VertexSet, k: usize, closed: bool) -> Result<VertexSet> {
        self.check_set(set)?;
        let mut reached = *set;
        let mut frontier = *set;
        for _ in 0..k {
            if frontier.is_empty() {
                break;
            }
            let next = self.union_of_rows(&frontier) - reached;
            reached |= next;
            frontier = next;
        }
        Ok(if closed { reached } else { reached - *set })
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = *set;
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Component of `G[allowed]` containing `start`.
    pub fn component_within(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        debug_assert!(allowed.contains(start));
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let next = (self.union_of_rows(&frontier) & *allowed) - comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Components of `G[allowed]`, ordered by smallest member.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<VertexSet> {
        let mut left = *allowed & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.component_within(v, &left);
            left -= comp;
            out.push(comp);
        }
        out
    }

    /// Components of `G - removed`, ordered by smallest member.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        self.components_within(&(self.vertices() - *removed))
    }

    pub fn is_connected(&self) -> bool {
        self.components(&VertexSet::new()).len() <= 1
    }

    /// Whether `G[set]` is connected; the empty set counts as connected.
    pub fn is_connected_set(&self, set: &VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(v) => self.component_within(v, set) == *set,
        }
    }

    /// All-pairs BFS distances, computed once per graph.
    pub fn distance_matrix(&self) -> &[Vec<u32>] {
        self.distances
            .get_or_init(|| Arc::new((0..self.n).map(|s| self.bfs(s)).collect()))
    }

    fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        dist[source] = 0;
        let mut seen = VertexSet::singleton(source);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = self.union_of_rows(&frontier) - seen;
            for v in next.iter() {
                dist[v] = d;
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Shortest-path edge count, `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let d = self.distance_matrix()[u][v];
        Ok((d != UNREACHABLE).then_some(d as usize))
    }

    /// `G^k`: same vertices, `uv` an edge iff `0 < dist(u, v) <= k`.
    pub fn power(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidParameter("graph power needs k >= 1".into()));
        }
        if k == 1 {
            return Ok(Graph {
                n: self.n,
                adj: self.adj.clone(),
                distances: OnceLock::new(),
            });
        }
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut ball = self.neighborhood_k(&VertexSet::singleton(v), k, true)?;
            ball.remove(v);
            adj.push(ball);
        }
        Ok(Graph {
            n: self.n,
            adj,
            distances: OnceLock::new(),
        })
    }

    /// `G[set]` relabelled to `0..|set|` in ascending order, together with the
    /// map from new ids to old ids.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = set.iter().filter(|&v| v < self.n).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| (self.adj[v] & *set).iter().map(|u| new_of[u]).collect())
            .collect();
        (
            Graph {
                n: old.len(),
                adj,
                distances: OnceLock::new(),
            },
            old,
        )
    }

    /// Relabel so that vertex `order[i]` becomes `i`.
    pub fn relabelled(&self, order: &[usize]) -> Result<Graph> {
        if order.len() != self.n {
            return Err(Error::InvalidParameter(
                "relabelling must be a permutation".into(),
            ));
        }
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            self.check_vertex(v)?;
            if new_of[v] != usize::MAX {
                return Err(Error::InvalidParameter(
                    "relabelling must be a permutation".into(),
                ));
            }
            new_of[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| self.adj[v].iter().map(|u| new_of[u]).collect())
            .collect();
        Ok(Graph {
            n: self.n,
            adj,
            distances: OnceLock::new(),
        })
    }
}

/// Maps a set expressed in relabelled ids back to the original ids.
pub fn lift_set(set: &VertexSet, old_of: &[usize]) -> VertexSet {
    set.iter().map(|v| old_of[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vs(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    /// Independent all-pairs distances by Floyd–Warshall.
    fn floyd(g: &Graph) -> Vec<Vec<u32>> {
        let n = g.n();
        let mut d = vec![vec![UNREACHABLE; n]; n];
        for u in 0..n {
            d[u][u] = 0;
            for v in g.neighbors(u).iter() {
                d[u][v] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] != UNREACHABLE && d[k][j] != UNREACHABLE {
                        d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                    }
                }
            }
        }
        d
    }

    #[test]
    fn distances_on_path_and_disconnected() {
        let p = Graph::path(3).unwrap();
        assert_eq!(p.distance(0, 2).unwrap(), Some(2));
        assert_eq!(p.distance(1, 1).unwrap(), Some(0));
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distance(0, 3).unwrap(), None);
        assert!(matches!(g.distance(0, 9), Err(Error::InvalidVertex { .. })));
    }

    #[test]
    fn k_neighborhoods() {
        let p = Graph::path(4).unwrap();
        let a = vs(&[0]);
        assert_eq!(p.neighborhood_k(&a, 0, true).unwrap(), a);
        assert_eq!(p.neighborhood_k(&a, 2, true).unwrap(), vs(&[0, 1, 2]));
        assert_eq!(p.neighborhood_k(&vs(&[0, 1]), 1, false).unwrap(), vs(&[2]));
    }

    #[test]
    fn components_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.components(&VertexSet::new()), vec![vs(&[0, 1, 2, 3])]);
        assert_eq!(c4.components(&vs(&[0, 2])), vec![vs(&[1]), vs(&[3])]);
        assert!(c4.components(&c4.vertices()).is_empty());
    }

    #[test]
    fn powers_of_p4() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.power(1).unwrap(), p4);
        let sq = p4.power(2).unwrap();
        // frozen from the Floyd–Warshall oracle: pairs at distance <= 2
        let d = floyd(&p4);
        let expected: Vec<(usize, usize)> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .filter(|&(u, v)| d[u][v] <= 2)
            .collect();
        assert_eq!(expected, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(sq.edges().collect::<Vec<_>>(), expected);
        assert_eq!(p4.power(3).unwrap(), Graph::complete(4).unwrap());
        assert!(p4.power(0).is_err());
    }

    #[test]
    fn induced_and_relabel() {
        let c5 = Graph::cycle(5).unwrap();
        let (h, map) = c5.induced(&vs(&[1, 2, 3]));
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h, Graph::path(3).unwrap());
        let r = c5.relabelled(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(r, c5);
    }

    #[test]
    fn rejects_self_loops_and_capacity() {
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert!(Graph::new(CAPACITY + 1).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..12).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..2 * n).prop_map(move |es| {
                Graph::from_edges(n, es.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn bfs_matches_floyd(g in arb_graph()) {
            prop_assert_eq!(g.distance_matrix().to_vec(), floyd(&g));
        }

        #[test]
        fn power_is_monotone_and_saturates(g in arb_graph(), k in 1usize..5) {
            let a = g.power(k).unwrap();
            let b = g.power(k + 1).unwrap();
            prop_assert!(a.edges().all(|(u, v)| b.has_edge(u, v)));
            let full = g.power(g.n().max(1)).unwrap();
            for comp in g.components(&VertexSet::new()) {
                prop_assert!(full.is_clique(&comp));
            }
        }

        #[test]
        fn components_partition(g in arb_graph(), mask in any::<u16>()) {
            let removed: VertexSet = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            let comps = g.components(&removed);
            let mut union = VertexSet::new();
            for c in &comps {
                prop_assert!(!c.is_empty());
                prop_assert!(union.is_disjoint(c));
                union |= *c;
            }
            prop_assert_eq!(union, g.vertices() - removed);
            for (u, v) in g.edges() {
                if !removed.contains(u) && !removed.contains(v) {
                    prop_assert!(comps.iter().any(|c| c.contains(u) && c.contains(v)));
                }
            }
        }

        #[test]
        fn k_neighborhood_is_iterated_closure(g in arb_graph(), k in 0usize..4, seed in 0usize..12) {
            let u = VertexSet::singleton(seed % g.n());
            let mut step = u;
            for _ in 0..k {
                step = g.closed_neighborhood(&step);
            }
            prop_assert_eq!(g.neighborhood_k(&u, k, true).unwrap(), step);
        }
    }
}
