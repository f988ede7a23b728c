//! Potential maximal cliques, blocks and good triples: the index structure
//! shared by both dynamic programs.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{lift_set, Graph};
use crate::minsep::{enumerate_minimal_separators_capped, full_components, SeparatorSet};
use crate::vertex_set::VertexSet;

/// `Ω` is a PMC iff `G - Ω` has no full component and every non-adjacent
/// pair of `Ω` is covered by `N(D)` for some component `D` of `G - Ω`.
pub fn is_pmc(g: &Graph, omega: &VertexSet) -> bool {
    if omega.is_empty() || g.check_set(omega).is_err() {
        return false;
    }
    let borders: Vec<VertexSet> = g
        .components(omega)
        .iter()
        .map(|d| g.open_neighborhood(d))
        .collect();
    if borders.iter().any(|b| b == omega) {
        return false;
    }
    omega.iter().all(|u| {
        let mut covered = *g.neighbors(u);
        for b in borders.iter().filter(|b| b.contains(u)) {
            covered |= *b;
        }
        let mut need = *omega;
        need.remove(u);
        need.is_subset(&covered)
    })
}

/// Default PMC budget, same shape as the separator budget.
pub fn default_pmc_budget(n: usize) -> usize {
    (10 * n * n * n).max(10)
}

/// Enumeration budgets; `None` means the `10 n^3` default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_separators: Option<usize>,
    pub max_pmcs: Option<usize>,
}

impl Budget {
    pub fn separators(&self, n: usize) -> usize {
        self.max_separators
            .unwrap_or_else(|| crate::minsep::default_separator_budget(n))
    }

    pub fn pmcs(&self, n: usize) -> usize {
        self.max_pmcs.unwrap_or_else(|| default_pmc_budget(n))
    }
}

/// All potential maximal cliques of `g`, in canonical order.
///
/// Works per connected component, adding vertices in BFS order and updating
/// the PMC family of each prefix graph from the previous one (the
/// one-more-vertex scheme). `seps` must be `Δ(G)`; the last prefix of every
/// component reuses it.
pub fn enumerate_pmcs(g: &Graph, seps: &SeparatorSet, budget: &Budget) -> Result<Vec<VertexSet>> {
    let sep_limit = budget.separators(g.n());
    let pmc_limit = budget.pmcs(g.n());
    let mut out: Vec<VertexSet> = Vec::new();
    for comp in g.components(&VertexSet::new()) {
        let order = bfs_order(g, &comp);
        let (h, old_of) = g.induced(&comp);
        // relabel so that prefixes of the BFS order are `0..i`
        let mut pos = vec![0; g.n()];
        for (i, &v) in old_of.iter().enumerate() {
            pos[v] = i;
        }
        let order_in_h: Vec<usize> = order.iter().map(|&v| pos[v]).collect();
        let h = h.relabelled(&order_in_h)?;
        let to_g: Vec<usize> = order.clone();

        let mut rank = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let whole: Vec<VertexSet> = seps
            .iter()
            .filter(|s| !s.is_empty() && s.is_subset(&comp))
            .map(|s| s.iter().map(|v| rank[v]).collect())
            .collect();
        let pmcs = pmcs_of_connected(&h, &whole, sep_limit, pmc_limit.saturating_sub(out.len()))?;
        out.extend(pmcs.iter().map(|p| lift_set(p, &to_g)));
        if out.len() > pmc_limit {
            return Err(Error::PmcBudget { limit: pmc_limit });
        }
    }
    out.sort();
    Ok(out)
}

fn bfs_order(g: &Graph, comp: &VertexSet) -> Vec<usize> {
    let start = comp.first().expect("non-empty component");
    let mut order = vec![start];
    let mut seen = VertexSet::singleton(start);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for u in (*g.neighbors(v) & *comp - seen).iter() {
            seen.insert(u);
            order.push(u);
        }
    }
    order
}

/// PMCs of a connected graph whose vertices `0..i` induce a connected
/// subgraph for every `i`. `last_seps` is `Δ(h)`.
fn pmcs_of_connected(
    h: &Graph,
    last_seps: &[VertexSet],
    sep_limit: usize,
    pmc_limit: usize,
) -> Result<Vec<VertexSet>> {
    let n = h.n();
    let mut pmcs: Vec<VertexSet> = vec![VertexSet::singleton(0)];
    let mut prev_seps: HashSet<VertexSet> = HashSet::new();
    for a in 1..n {
        let (prefix, _) = h.induced(&VertexSet::full(a + 1));
        let seps: Vec<VertexSet> = if a + 1 == n {
            last_seps.to_vec()
        } else {
            enumerate_minimal_separators_capped(&prefix, sep_limit)?
                .as_slice()
                .to_vec()
        };

        let mut verdicts: HashMap<VertexSet, bool> = HashMap::new();
        let mut next: Vec<VertexSet> = Vec::new();
        let mut consider = |cand: VertexSet, next: &mut Vec<VertexSet>| -> Result<bool> {
            if let Some(&known) = verdicts.get(&cand) {
                return Ok(known);
            }
            let ok = is_pmc(&prefix, &cand);
            verdicts.insert(cand, ok);
            if ok {
                if next.len() == pmc_limit {
                    return Err(Error::PmcBudget { limit: pmc_limit });
                }
                next.push(cand);
            }
            Ok(ok)
        };

        for p in &pmcs {
            if !consider(*p, &mut next)? {
                let mut grown = *p;
                grown.insert(a);
                consider(grown, &mut next)?;
            }
        }
        for s in &seps {
            let mut with_a = *s;
            with_a.insert(a);
            consider(with_a, &mut next)?;
            if !s.contains(a) && !prev_seps.contains(s) {
                let comps = prefix.components(s);
                for t in &seps {
                    for c in &comps {
                        let cand = *s | (*t & *c);
                        consider(cand, &mut next)?;
                    }
                }
            }
        }
        pmcs = next;
        prev_seps = seps.into_iter().collect();
    }
    Ok(pmcs)
}

/// `(S, C)`: `S` a minimal separator (or empty), `C` a full component of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub separator: VertexSet,
    pub component: VertexSet,
}

impl Block {
    pub fn size(&self) -> usize {
        self.separator.len() + self.component.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.separator | self.component
    }
}

/// A good triple `(S, C, Ω)` with its child blocks `(S_i, C_i)`, one per
/// component `C_i` of `G[C \ Ω]`, ordered by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodTriple {
    pub block: Block,
    pub pmc: VertexSet,
    pub children: Vec<Block>,
}

/// Every block `(S, C)` with `S ∈ Δ(G) ∪ {∅}`, sorted by `|S ∪ C|` and then
/// canonically by `S`, `C`. The empty separator contributes one block per
/// connected component.
pub fn blocks_sorted(g: &Graph, seps: &SeparatorSet) -> Vec<Block> {
    let mut blocks: Vec<Block> = g
        .components(&VertexSet::new())
        .into_iter()
        .map(|c| Block {
            separator: VertexSet::new(),
            component: c,
        })
        .collect();
    for s in seps.iter().filter(|s| !s.is_empty()) {
        for c in full_components(g, s) {
            blocks.push(Block {
                separator: *s,
                component: c,
            });
        }
    }
    blocks.sort_by(|x, y| {
        (x.size(), x.separator, x.component).cmp(&(y.size(), y.separator, y.component))
    });
    blocks
}

pub fn good_triples_for(g: &Graph, block: &Block, pmcs: &[VertexSet]) -> Vec<GoodTriple> {
    let span = block.vertices();
    pmcs.iter()
        .filter(|p| block.separator.is_subset(p) && **p != block.separator && p.is_subset(&span))
        .map(|p| GoodTriple {
            block: *block,
            pmc: *p,
            children: g
                .components_within(&(block.component - *p))
                .into_iter()
                .map(|c| Block {
                    separator: g.open_neighborhood(&c),
                    component: c,
                })
                .collect(),
        })
        .collect()
}

/// Triple with children resolved to block indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedTriple {
    pub pmc: VertexSet,
    pub children: Vec<usize>,
}

/// Separators, PMCs, blocks and good triples of one graph.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub separators: SeparatorSet,
    pub pmcs: Vec<VertexSet>,
    pub blocks: Vec<Block>,
    /// Good triples per block, parallel to `blocks`.
    pub triples: Vec<Vec<IndexedTriple>>,
    /// Blocks `(∅, C)`, one per connected component.
    pub roots: Vec<usize>,
}

impl Decomposition {
    pub fn build(g: &Graph, budget: &Budget) -> Result<Self> {
        let separators = enumerate_minimal_separators_capped(g, budget.separators(g.n()))?;
        let pmcs = enumerate_pmcs(g, &separators, budget)?;
        Self::from_parts(g, separators, pmcs)
    }

    pub fn from_parts(g: &Graph, separators: SeparatorSet, pmcs: Vec<VertexSet>) -> Result<Self> {
        let blocks = blocks_sorted(g, &separators);
        let index: HashMap<VertexSet, usize> = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (b.component, i))
            .collect();
        let mut triples = Vec::with_capacity(blocks.len());
        for (bi, block) in blocks.iter().enumerate() {
            let mut list = Vec::new();
            for t in good_triples_for(g, block, &pmcs) {
                let mut children = Vec::with_capacity(t.children.len());
                for child in &t.children {
                    let ci = *index.get(&child.component).ok_or_else(|| {
                        Error::Verification(format!(
                            "child component {} of triple {} is not a block",
                            child.component, t.pmc
                        ))
                    })?;
                    if ci >= bi || blocks[ci].separator != child.separator {
                        return Err(Error::Verification(format!(
                            "child block {} does not precede {}",
                            child.component, block.component
                        )));
                    }
                    children.push(ci);
                }
                list.push(IndexedTriple {
                    pmc: t.pmc,
                    children,
                });
            }
            triples.push(list);
        }
        let roots = blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.separator.is_empty())
            .map(|(i, _)| i)
            .collect();
        Ok(Decomposition {
            separators,
            pmcs,
            blocks,
            triples,
            roots,
        })
    }

    pub fn triple_count(&self) -> usize {
        self.triples.iter().map(Vec::len).sum()
    }

    /// Block indices grouped by size, ascending. Blocks in one group never
    /// depend on each other.
    pub fn size_classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut last = usize::MAX;
        for (i, b) in self.blocks.iter().enumerate() {
            if b.size() != last {
                out.push(Vec::new());
                last = b.size();
            }
            out.last_mut().unwrap().push(i);
        }
        out
    }
}
