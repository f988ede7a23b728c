//! Maximum induced subgraph of treewidth at most `t`.
//!
//! For a block `(S, C)` and `W ⊆ S` with `|W| <= t + 1`, `α(S, C, W)` is the
//! size of a largest `F ⊆ S ∪ C` with `F ∩ S = W` whose intersection with
//! every bag of some minimal triangulation is at most `t + 1`. For a good
//! triple `(S, C, Ω)` and `W ⊆ Ω`:
//!
//! ```text
//! β(S, C, Ω, W) = |W| + Σ_i ( α(S_i, C_i, W ∩ S_i) - |W ∩ S_i| )
//! α(S, C, W)    = max { β(S, C, Ω, W') : (S, C, Ω) good, W' ⊆ Ω, W' ∩ S = W }
//! ```
//!
//! where `(S_i, C_i)` are the child blocks of the triple. The γ chain folds
//! the children one at a time; without side constraints it reduces to the
//! sum above. The optimum is the sum of `α(∅, C, ∅)` over the components `C`.

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decomposition::{Budget, Decomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub size: usize,
    pub set: VertexSet,
}

/// Best predecessor for one `α(S, C, W)` key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaEntry {
    pub value: usize,
    pub triple: usize,
    pub chosen: VertexSet,
}

/// Filled `α` tables, one map `W -> entry` per block.
#[derive(Debug)]
pub struct DpTable<'d> {
    pub decomposition: &'d Decomposition,
    pub t: usize,
    pub alpha: Vec<IndexMap<VertexSet, AlphaEntry>>,
}

impl DpTable<'_> {
    pub fn optimum(&self) -> usize {
        self.decomposition
            .roots
            .iter()
            .map(|&r| self.alpha[r][&VertexSet::new()].value)
            .sum()
    }

    /// Number of stored `α` keys.
    pub fn len(&self) -> usize {
        self.alpha.iter().map(IndexMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rebuilds an optimal `F` by following the stored predecessors.
    pub fn reconstruct(&self) -> VertexSet {
        let mut out = VertexSet::new();
        let mut stack: Vec<(usize, VertexSet)> = self
            .decomposition
            .roots
            .iter()
            .map(|&r| (r, VertexSet::new()))
            .collect();
        while let Some((block, w)) = stack.pop() {
            let entry = self.alpha[block][&w];
            let triple = &self.decomposition.triples[block][entry.triple];
            out |= entry.chosen;
            for &child in &triple.children {
                let sep = self.decomposition.blocks[child].separator;
                stack.push((child, entry.chosen & sep));
            }
        }
        out
    }
}

/// Fills per-block tables in block-size order. Blocks of equal size are
/// independent and run on the rayon pool when `threads > 1`.
pub(crate) fn fill_by_size<T, F>(dec: &Decomposition, threads: usize, compute: F) -> Result<Vec<T>>
where
    T: Send + Sync,
    F: Fn(usize, &[Option<T>]) -> Result<T> + Sync,
{
    let mut tables: Vec<Option<T>> = (0..dec.blocks.len()).map(|_| None).collect();
    let pool = if threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?,
        )
    } else {
        None
    };
    for class in dec.size_classes() {
        let done: Vec<(usize, T)> = match &pool {
            Some(pool) => pool.install(|| {
                class
                    .par_iter()
                    .map(|&bi| compute(bi, &tables).map(|t| (bi, t)))
                    .collect::<Result<Vec<_>>>()
            })?,
            None => class
                .iter()
                .map(|&bi| compute(bi, &tables).map(|t| (bi, t)))
                .collect::<Result<Vec<_>>>()?,
        };
        for (bi, t) in done {
            tables[bi] = Some(t);
        }
    }
    Ok(tables
        .into_iter()
        .map(|t| t.expect("every block filled"))
        .collect())
}

pub fn fill_table<'d>(dec: &'d Decomposition, t: usize, threads: usize) -> Result<DpTable<'d>> {
    let alpha = fill_by_size(
        dec,
        threads,
        |bi, done: &[Option<IndexMap<VertexSet, AlphaEntry>>]| {
            let sep = dec.blocks[bi].separator;
            let mut table: IndexMap<VertexSet, AlphaEntry> = IndexMap::new();
            for (ti, triple) in dec.triples[bi].iter().enumerate() {
                'choice: for chosen in triple.pmc.subsets_up_to(t + 1) {
                    let mut value = chosen.len();
                    for &child in &triple.children {
                        let child_sep = dec.blocks[child].separator;
                        let w = chosen & child_sep;
                        let child_table = done[child].as_ref().expect("children precede parents");
                        match child_table.get(&w) {
                            Some(e) => value = value + e.value - w.len(),
                            None => continue 'choice,
                        }
                    }
                    let key = chosen & sep;
                    debug_assert!(key.len() <= t + 1);
                    let better = table.get(&key).is_none_or(|e| value > e.value);
                    if better {
                        table.insert(
                            key,
                            AlphaEntry {
                                value,
                                triple: ti,
                                chosen,
                            },
                        );
                    }
                }
            }
            Ok(table)
        },
    )?;
    Ok(DpTable {
        decomposition: dec,
        t,
        alpha,
    })
}

/// Largest `F` with `tw(G[F]) <= t`.
pub fn solve_max_induced_tw(g: &Graph, t: usize, budget: &Budget) -> Result<Solution> {
    solve_max_induced_tw_threads(g, t, budget, 1)
}

pub fn solve_max_induced_tw_threads(
    g: &Graph,
    t: usize,
    budget: &Budget,
    threads: usize,
) -> Result<Solution> {
    if t + 1 >= g.n() {
        return Ok(Solution {
            size: g.n(),
            set: g.vertices(),
        });
    }
    let dec = Decomposition::build(g, budget)?;
    solve_on(&dec, t, threads)
}

pub fn solve_on(dec: &Decomposition, t: usize, threads: usize) -> Result<Solution> {
    let table = fill_table(dec, t, threads)?;
    let size = table.optimum();
    let set = table.reconstruct();
    if set.len() != size {
        return Err(Error::Verification(format!(
            "reconstructed witness has {} vertices, table says {size}",
            set.len()
        )));
    }
    Ok(Solution { size, set })
}

pub fn maximum_independent_set(g: &Graph, budget: &Budget) -> Result<Solution> {
    solve_max_induced_tw(g, 0, budget)
}

pub fn maximum_induced_forest(g: &Graph, budget: &Budget) -> Result<Solution> {
    solve_max_induced_tw(g, 1, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn solve(g: &Graph, t: usize) -> Solution {
        solve_max_induced_tw(g, t, &Budget::default()).unwrap()
    }

    #[test]
    fn mis_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let s = solve(&c5, 0);
        assert_eq!(s.size, 2);
        assert!(c5.is_independent(&s.set));
        assert_eq!(solve(&Graph::complete(6).unwrap(), 0).size, 1);
        let edgeless = Graph::new(5).unwrap();
        assert_eq!(solve(&edgeless, 0).set, edgeless.vertices());
        let p4 = Graph::path(4).unwrap();
        let s = solve(&p4, 0);
        let allowed: [VertexSet; 3] = [[0, 2], [0, 3], [1, 3]].map(|x| x.into_iter().collect());
        assert!(allowed.contains(&s.set), "{:?}", s.set);
    }

    #[test]
    fn forest_examples() {
        assert_eq!(solve(&Graph::complete(4).unwrap(), 1).size, 2);
        let tree = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(solve(&tree, 1).size, 7);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(solve(&c6, 1).size, 5);
        assert_eq!(solve(&c6, 2).size, 6);
    }

    #[test]
    fn disconnected_sums_components() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(solve(&g, 0).size, 1 + 1 + 2);
    }

    #[test]
    fn agrees_with_oracle_and_is_monotone() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.1..0.8);
            let g = crate::classes::random_graph(n, p, rng.gen());
            let mut last = 0;
            for t in 0..3 {
                let s = solve(&g, t);
                assert!(oracle::treewidth(&g, &s.set).unwrap() <= t);
                assert_eq!(
                    Some(s.size),
                    oracle::brute_solve(&g, oracle::Problem::MaxInducedTreewidth(t)).unwrap()
                );
                assert!(s.size >= last);
                last = s.size;
            }
        }
    }

    #[test]
    fn threads_give_same_answer() {
        let g = crate::classes::random_graph(11, 0.35, 5);
        let a = solve_max_induced_tw_threads(&g, 1, &Budget::default(), 1).unwrap();
        let b = solve_max_induced_tw_threads(&g, 1, &Budget::default(), 4).unwrap();
        assert_eq!(a.size, b.size);
    }
}
