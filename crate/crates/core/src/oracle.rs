//! Exhaustive baselines for small graphs.
//!
//! Everything here works on `u32` adjacency masks built from [`Graph`] and
//! follows the definitions directly; no solver code is reused.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minsep::SeparatorSet;
use crate::vertex_set::VertexSet;

/// Largest `n` for subset enumeration.
pub const SUBSET_LIMIT: usize = 16;
/// Largest `n` for enumerating all elimination orderings.
pub const ORDERING_LIMIT: usize = 8;
/// Largest `n` for the subset filter over potential maximal cliques.
pub const PMC_FILTER_LIMIT: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Problem {
    MaxIndependentSet,
    MaxInducedForest,
    MaxInducedTreewidth(usize),
    /// Minimum `X` covering every edge with `G[X]` connected.
    ConnectedVertexCover,
    /// Minimum `X` with `G - X` a forest and `G[X]` connected.
    ConnectedFeedbackVertexSet,
    /// Maximum set with pairwise distance at least `d`.
    DistanceIndependentSet(usize),
    /// Minimum set of blue vertices dominating every red one.
    RedBlueDominatingSet {
        reds: VertexSet,
        blues: VertexSet,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmcMethod {
    /// Maximal cliques of the inclusion-minimal fill-in triangulations over
    /// all elimination orderings.
    EliminationOrders,
    /// Every vertex subset checked against the characterisation.
    SubsetFilter,
}

struct Masks {
    n: usize,
    adj: Vec<u32>,
}

impl Masks {
    fn new(g: &Graph, limit: usize, what: &str) -> Result<Self> {
        if g.n() > limit {
            return Err(Error::TooLargeForOracle(format!(
                "{what} needs n <= {limit}, got {}",
                g.n()
            )));
        }
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
            .collect();
        Ok(Masks { n: g.n(), adj })
    }

    fn all(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    fn neighbors_of(&self, set: u32) -> u32 {
        bits(set).fold(0, |m, v| m | self.adj[v]) & !set
    }

    fn component(&self, start: usize, allowed: u32) -> u32 {
        let mut comp = 1u32 << start;
        loop {
            let grown = (comp | bits(comp).fold(0, |m, v| m | self.adj[v])) & allowed;
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    }

    fn components(&self, allowed: u32) -> Vec<u32> {
        let mut left = allowed;
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component(left.trailing_zeros() as usize, allowed);
            out.push(c);
            left &= !c;
        }
        out
    }

    fn is_connected(&self, set: u32) -> bool {
        set == 0 || self.component(set.trailing_zeros() as usize, set) == set
    }

    fn edges_within(&self, set: u32) -> usize {
        bits(set)
            .map(|v| (self.adj[v] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn is_forest(&self, set: u32) -> bool {
        self.edges_within(set) + self.components(set).len() == set.count_ones() as usize
    }

    /// Treewidth of `G[set]` as the minimum over elimination orderings of the
    /// largest later-neighbourhood, computed by dynamic programming over the
    /// set of already-eliminated vertices.
    fn treewidth(&self, set: u32) -> usize {
        let local: Vec<usize> = bits(set).collect();
        let k = local.len();
        if k <= 1 {
            return 0;
        }
        let ladj: Vec<u32> = local
            .iter()
            .map(|&v| {
                local
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v] >> u & 1 == 1)
                    .fold(0, |m, (j, _)| m | 1 << j)
            })
            .collect();
        // Vertices outside `eliminated + v` reachable from `v` through `eliminated`.
        let q = |eliminated: u32, v: usize| -> u32 {
            let mut reach = 1u32 << v;
            loop {
                let inner = reach & (eliminated | 1 << v);
                let grown = reach | bits(inner).fold(0, |m, x| m | ladj[x]);
                if grown == reach {
                    return reach & !(eliminated | 1 << v);
                }
                reach = grown;
            }
        };
        let full = (1u32 << k) - 1;
        let mut best = vec![usize::MAX; 1 << k];
        best[0] = 0;
        for s in 1..=full {
            best[s as usize] = bits(s)
                .map(|v| {
                    let rest = s & !(1 << v);
                    best[rest as usize].max(q(rest, v).count_ones() as usize)
                })
                .min()
                .expect("non-empty set");
        }
        best[full as usize]
    }
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

fn to_set(m: u32) -> VertexSet {
    bits(m).collect()
}

fn to_mask(g: &Graph, s: &VertexSet) -> Result<u32> {
    g.check_set(s)?;
    Ok(s.iter().fold(0, |m, v| m | 1 << v))
}

/// Treewidth of `G[set]` (0 for sets of at most one vertex).
pub fn treewidth(g: &Graph, set: &VertexSet) -> Result<usize> {
    if set.len() > SUBSET_LIMIT {
        return Err(Error::TooLargeForOracle(format!(
            "treewidth of {} vertices, limit {SUBSET_LIMIT}",
            set.len()
        )));
    }
    let (h, _) = g.induced(set);
    let m = Masks::new(&h, SUBSET_LIMIT, "treewidth")?;
    Ok(m.treewidth(m.all()))
}

fn is_minimal_separator_mask(m: &Masks, s: u32) -> bool {
    m.components(m.all() & !s)
        .into_iter()
        .filter(|&c| m.neighbors_of(c) == s)
        .count()
        >= 2
}

/// All minimal separators by checking every subset.
pub fn brute_minimal_separators(g: &Graph) -> Result<SeparatorSet> {
    let m = Masks::new(g, SUBSET_LIMIT, "brute_minimal_separators")?;
    let found = (0..=m.all())
        .filter(|&s| is_minimal_separator_mask(&m, s))
        .map(to_set)
        .collect();
    Ok(SeparatorSet::from_unsorted(found))
}

fn is_pmc_mask(m: &Masks, omega: u32) -> bool {
    if omega == 0 {
        return false;
    }
    let comps = m.components(m.all() & !omega);
    let boundaries: Vec<u32> = comps.iter().map(|&c| m.neighbors_of(c)).collect();
    if boundaries.iter().any(|&b| b == omega) {
        return false;
    }
    bits(omega).all(|x| {
        bits(omega & !(1 << x) & !m.adj[x]).all(|y| {
            boundaries
                .iter()
                .any(|&b| b >> x & 1 == 1 && b >> y & 1 == 1)
        })
    })
}

/// Fill-in graph of an elimination ordering, as adjacency masks.
fn fill_in(m: &Masks, order: &[usize]) -> Vec<u32> {
    let mut adj = m.adj.clone();
    let mut eliminated = 0u32;
    for &v in order {
        let later = adj[v] & !eliminated;
        for u in bits(later) {
            adj[u] |= later & !(1 << u);
        }
        eliminated |= 1 << v;
    }
    adj
}

fn maximal_cliques_of_chordal(adj: &[u32], order: &[usize]) -> Vec<u32> {
    let mut eliminated = 0u32;
    let mut cands = Vec::new();
    for &v in order {
        cands.push((adj[v] & !eliminated) | 1 << v);
        eliminated |= 1 << v;
    }
    cands
        .iter()
        .copied()
        .filter(|&c| !cands.iter().any(|&d| d != c && d & c == c))
        .collect()
}

fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, f);
            items.swap(k, i);
        }
    }
    rec(&mut (0..n).collect(), 0, f);
}

/// All potential maximal cliques, sorted.
pub fn brute_pmcs(g: &Graph, method: PmcMethod) -> Result<Vec<VertexSet>> {
    let found: BTreeSet<VertexSet> = match method {
        PmcMethod::SubsetFilter => {
            let m = Masks::new(g, PMC_FILTER_LIMIT, "brute_pmcs (subset filter)")?;
            (1..=m.all())
                .filter(|&s| is_pmc_mask(&m, s))
                .map(to_set)
                .collect()
        }
        PmcMethod::EliminationOrders => {
            let m = Masks::new(g, ORDERING_LIMIT, "brute_pmcs (elimination orders)")?;
            // Each distinct triangulation with one ordering that produces it.
            let mut triangulations: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
            let mut seen = BTreeSet::new();
            for_each_permutation(m.n, &mut |order| {
                let adj = fill_in(&m, order);
                if seen.insert(adj.clone()) {
                    triangulations.push((adj, order.to_vec()));
                }
            });
            let contains = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x & y == *y);
            triangulations
                .iter()
                .filter(|(h, _)| {
                    !triangulations
                        .iter()
                        .any(|(other, _)| other != h && contains(h, other))
                })
                .flat_map(|(h, order)| maximal_cliques_of_chordal(h, order))
                .map(to_set)
                .collect()
        }
    };
    Ok(found.into_iter().collect())
}

fn best_subset(m: &Masks, maximise: bool, feasible: impl Fn(u32) -> bool) -> Option<usize> {
    let mut sizes: Vec<u32> = (0..=m.n as u32).collect();
    if maximise {
        sizes.reverse();
    }
    let subsets = |size: u32| (0..=m.all()).filter(move |s| s.count_ones() == size);
    sizes
        .into_iter()
        .find(|&size| subsets(size).any(&feasible))
        .map(|s| s as usize)
}

/// Exhaustive optimum: a maximum size for the packing problems, a minimum
/// size for the covering and domination problems, `None` if infeasible.
pub fn brute_solve(g: &Graph, problem: Problem) -> Result<Option<usize>> {
    let m = Masks::new(g, SUBSET_LIMIT, "brute_solve")?;
    let all = m.all();
    let tw_at_most = |f: u32, t: usize| {
        let k = f.count_ones() as usize;
        // A graph of treewidth t has at most t*k - t(t+1)/2 edges.
        (k <= t + 1 || m.edges_within(f) + t * (t + 1) / 2 <= t * k) && m.treewidth(f) <= t
    };
    let covers_edges = |x: u32| bits(all & !x).all(|v| m.adj[v] & !x == 0);
    Ok(match problem {
        Problem::MaxIndependentSet => best_subset(&m, true, |f| bits(f).all(|v| m.adj[v] & f == 0)),
        Problem::MaxInducedForest => best_subset(&m, true, |f| m.is_forest(f)),
        Problem::MaxInducedTreewidth(t) => best_subset(&m, true, |f| tw_at_most(f, t)),
        Problem::ConnectedVertexCover => {
            best_subset(&m, false, |x| covers_edges(x) && m.is_connected(x))
        }
        Problem::ConnectedFeedbackVertexSet => {
            best_subset(&m, false, |x| m.is_forest(all & !x) && m.is_connected(x))
        }
        Problem::DistanceIndependentSet(d) => {
            let dist = g.distance_matrix();
            let far = |u: usize, v: usize| dist[u][v] as u64 >= d as u64;
            best_subset(&m, true, |f| {
                bits(f).all(|u| bits(f).all(|v| u >= v || far(u, v)))
            })
        }
        Problem::RedBlueDominatingSet { reds, blues } => {
            let reds = to_mask(g, &reds)?;
            let blues = to_mask(g, &blues)?;
            best_subset(&m, false, |x| {
                x & !blues == 0 && bits(reds).all(|r| m.adj[r] & x != 0)
            })
        }
    })
}

/// Whether `set` is a potential maximal clique, by the same characterisation
/// the subset filter uses.
pub fn is_pmc(g: &Graph, set: &VertexSet) -> Result<bool> {
    let m = Masks::new(g, 32, "is_pmc")?;
    Ok(is_pmc_mask(&m, to_mask(g, set)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn separator_examples() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(
            brute_minimal_separators(&p4).unwrap().as_slice(),
            &[vs(&[1]), vs(&[2])]
        );
        assert!(brute_minimal_separators(&Graph::complete(5).unwrap())
            .unwrap()
            .is_empty());
        let c5 = brute_minimal_separators(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|s| s.len() == 2));
        let two = Graph::new(2).unwrap();
        assert_eq!(
            brute_minimal_separators(&two).unwrap().as_slice(),
            &[VertexSet::new()]
        );
        assert!(brute_minimal_separators(&Graph::new(17).unwrap()).is_err());
    }

    #[test]
    fn pmc_examples() {
        for method in [PmcMethod::EliminationOrders, PmcMethod::SubsetFilter] {
            let c4 = brute_pmcs(&Graph::cycle(4).unwrap(), method).unwrap();
            assert_eq!(
                c4,
                vec![
                    vs(&[0, 1, 2]),
                    vs(&[0, 1, 3]),
                    vs(&[0, 2, 3]),
                    vs(&[1, 2, 3])
                ]
            );
            let k4 = Graph::complete(4).unwrap();
            assert_eq!(brute_pmcs(&k4, method).unwrap(), vec![k4.vertices()]);
            let p4 = brute_pmcs(&Graph::path(4).unwrap(), method).unwrap();
            assert_eq!(p4, vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 3])]);
        }
    }

    #[test]
    fn pmc_methods_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let n = rng.gen_range(1..=7);
            let g = crate::classes::random_graph(n, rng.gen_range(0.2..0.8), rng.gen());
            assert_eq!(
                brute_pmcs(&g, PmcMethod::EliminationOrders).unwrap(),
                brute_pmcs(&g, PmcMethod::SubsetFilter).unwrap(),
                "{g:?}"
            );
        }
    }

    #[test]
    fn treewidth_examples() {
        let all = |g: &Graph| treewidth(g, &g.vertices()).unwrap();
        assert_eq!(all(&Graph::new(3).unwrap()), 0);
        assert_eq!(all(&Graph::path(5).unwrap()), 1);
        assert_eq!(all(&Graph::cycle(6).unwrap()), 2);
        assert_eq!(all(&Graph::complete(5).unwrap()), 4);
        assert_eq!(all(&Graph::complete_bipartite(3, 3).unwrap()), 3);
        let grid = Graph::from_edges(
            9,
            [
                (0, 1),
                (1, 2),
                (3, 4),
                (4, 5),
                (6, 7),
                (7, 8),
                (0, 3),
                (3, 6),
                (1, 4),
                (4, 7),
                (2, 5),
                (5, 8),
            ],
        )
        .unwrap();
        assert_eq!(all(&grid), 3);
        assert_eq!(treewidth(&grid, &vs(&[0, 1, 3, 4])).unwrap(), 2);
    }

    #[test]
    fn solve_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            brute_solve(&c5, Problem::MaxIndependentSet).unwrap(),
            Some(2)
        );
        assert_eq!(
            brute_solve(&c5, Problem::MaxInducedForest).unwrap(),
            Some(4)
        );
        assert_eq!(
            brute_solve(&c5, Problem::MaxInducedTreewidth(2)).unwrap(),
            Some(5)
        );
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            brute_solve(&k4, Problem::ConnectedFeedbackVertexSet).unwrap(),
            Some(2)
        );
        assert_eq!(
            brute_solve(&k4, Problem::MaxInducedTreewidth(1)).unwrap(),
            Some(2)
        );
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert_eq!(
            brute_solve(&star, Problem::ConnectedVertexCover).unwrap(),
            Some(1)
        );
        let p5 = Graph::path(5).unwrap();
        assert_eq!(
            brute_solve(&p5, Problem::DistanceIndependentSet(4)).unwrap(),
            Some(2)
        );
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            brute_solve(&c6, Problem::DistanceIndependentSet(4)).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn red_blue_examples() {
        let g = Graph::from_edges(4, [(0, 2), (1, 2)]).unwrap();
        let blues = vs(&[0, 1]);
        let p = |reds| Problem::RedBlueDominatingSet { reds, blues };
        assert_eq!(brute_solve(&g, p(vs(&[2]))).unwrap(), Some(1));
        assert_eq!(brute_solve(&g, p(vs(&[2, 3]))).unwrap(), None);
        assert_eq!(brute_solve(&g, p(VertexSet::new())).unwrap(), Some(0));
    }

    #[test]
    fn pmc_check() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_pmc(&c4, &vs(&[0, 1, 2])).unwrap());
        assert!(!is_pmc(&c4, &vs(&[0, 2])).unwrap());
        assert!(!is_pmc(&c4, &c4.vertices()).unwrap());
    }
}
