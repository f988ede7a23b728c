//! Maximum `F` with `tw(G[F]) <= t` and `G - F` connected.
//!
//! The tables of [`crate::dp_treewidth`] gain one more index, a
//! *characteristic*: the partition that the components of `G[S ∪ C] - F`
//! induce on `S \ W` (block keys) or `Ω \ W` (triple keys). When `S` is
//! non-empty, a partial solution leaving a component of `G[S ∪ C] - F` that
//! misses `S` is dropped, since that component can never reach the rest of
//! the graph. At the root only characteristics with a single part survive.
//!
//! Characteristics compose through [`map_correctly`]: the partition of
//! `Ω \ W` given by the components of `G[Ω \ W]` after completing every part
//! of every child characteristic into a clique.
//!
//! The number of characteristics per key is bounded by the Bell number of
//! the clique-partition width of `S` (or `Ω`); callers supply those clique
//! partitions, and every reachable characteristic is checked against them.
//! Chordal graphs have width 1, circular-arc graphs width 2 for separators
//! and 3 for PMCs.
//!
//! On a disconnected graph the complement must sit inside one component, so
//! [`solve_max_induced_tw_connected`] solves each component separately.

use std::collections::HashMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::classes::{self, ArcModel};
use crate::decomposition::{Block, Budget, Decomposition};
use crate::dp_treewidth::{fill_by_size, solve_max_induced_tw};
use crate::error::{Error, Result};
use crate::graph::{lift_set, Graph};
use crate::vertex_set::VertexSet;

/// A partition into non-empty disjoint parts, sorted by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Characteristic {
    parts: SmallVec<[VertexSet; 3]>,
}

impl Characteristic {
    pub fn new<I: IntoIterator<Item = VertexSet>>(parts: I) -> Self {
        let mut parts: SmallVec<[VertexSet; 3]> =
            parts.into_iter().filter(|p| !p.is_empty()).collect();
        parts.sort_by_key(|p| p.first());
        Characteristic { parts }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn support(&self) -> VertexSet {
        self.parts.iter().fold(VertexSet::new(), |acc, p| acc | *p)
    }

    /// Restriction to `set`; `None` if some part misses `set`.
    fn restrict(&self, set: &VertexSet) -> Option<Characteristic> {
        let mut parts: SmallVec<[VertexSet; 3]> = SmallVec::new();
        for p in &self.parts {
            let q = *p & *set;
            if q.is_empty() {
                return None;
            }
            parts.push(q);
        }
        // restriction keeps the order by smallest member only up to ties; re-sort
        Some(Characteristic::new(parts))
    }

    /// Joins all parts that meet `glue`. `self` must partition a superset of
    /// `glue`.
    fn merge_part(&mut self, glue: &VertexSet) {
        let mut joined = VertexSet::new();
        let mut hit = 0;
        self.parts.retain(|p| {
            if p.intersects(glue) {
                joined |= *p;
                hit += 1;
                false
            } else {
                true
            }
        });
        if hit > 0 {
            self.parts.push(joined);
            self.parts.sort_by_key(|p| p.first());
        }
    }
}

/// Cliques of `G` that partition a target set.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CliquePartition {
    pub cliques: Vec<VertexSet>,
}

impl CliquePartition {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Whether the cliques are cliques of `g`, pairwise disjoint, and cover
    /// exactly `target`.
    pub fn is_valid_for(&self, g: &Graph, target: &VertexSet) -> bool {
        let mut union = VertexSet::new();
        for c in &self.cliques {
            if c.is_empty() || c.intersects(&union) || !g.is_clique(c) {
                return false;
            }
            union |= *c;
        }
        union == *target
    }

    /// Number of cliques meeting `set`.
    pub fn width_on(&self, set: &VertexSet) -> usize {
        self.cliques.iter().filter(|c| c.intersects(set)).count()
    }

    /// Greedy cover: repeatedly grow a clique from the smallest uncovered
    /// vertex. No width guarantee.
    pub fn greedy(g: &Graph, target: &VertexSet) -> Self {
        let mut left = *target;
        let mut cliques = Vec::new();
        while let Some(v) = left.first() {
            let mut clique = VertexSet::singleton(v);
            let mut candidates = left & *g.neighbors(v);
            while let Some(u) = candidates.first() {
                clique.insert(u);
                candidates &= *g.neighbors(u);
            }
            left -= clique;
            cliques.push(clique);
        }
        CliquePartition { cliques }
    }
}

/// Clique partitions for every minimal separator and every PMC.
#[derive(Debug, Clone, Default)]
pub struct CliquePartitions {
    pub separators: HashMap<VertexSet, CliquePartition>,
    pub pmcs: HashMap<VertexSet, CliquePartition>,
}

impl CliquePartitions {
    /// Chordal graphs: every separator and PMC is itself a clique.
    pub fn chordal(g: &Graph, dec: &Decomposition) -> Result<Self> {
        let single = |s: &VertexSet, kind: &'static str| {
            if g.is_clique(s) {
                Ok((*s, CliquePartition { cliques: vec![*s] }))
            } else {
                Err(Error::CliqueWidth {
                    set: format!("{kind} {s}"),
                    needed: 2,
                    limit: 1,
                })
            }
        };
        Ok(CliquePartitions {
            separators: dec
                .separators
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| single(s, "separator"))
                .collect::<Result<_>>()?,
            pmcs: dec
                .pmcs
                .iter()
                .map(|p| single(p, "PMC"))
                .collect::<Result<_>>()?,
        })
    }

    /// Partitions read off the scanpoints of an arc model.
    pub fn circular_arc(model: &ArcModel, dec: &Decomposition) -> Result<Self> {
        Ok(CliquePartitions {
            separators: dec
                .separators
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| classes::separator_clique_partition(model, s).map(|p| (*s, p)))
                .collect::<Result<_>>()?,
            pmcs: dec
                .pmcs
                .iter()
                .map(|p| classes::pmc_clique_partition(model, p).map(|c| (*p, c)))
                .collect::<Result<_>>()?,
        })
    }

    /// Greedy covers, failing once a set needs more than `limit` cliques.
    pub fn greedy(g: &Graph, dec: &Decomposition, limit: usize) -> Result<Self> {
        let cover = |s: &VertexSet| {
            let p = CliquePartition::greedy(g, s);
            if p.len() > limit {
                Err(Error::CliqueWidth {
                    set: s.to_string(),
                    needed: p.len(),
                    limit,
                })
            } else {
                Ok((*s, p))
            }
        };
        Ok(CliquePartitions {
            separators: dec
                .separators
                .iter()
                .filter(|s| !s.is_empty())
                .map(cover)
                .collect::<Result<_>>()?,
            pmcs: dec.pmcs.iter().map(cover).collect::<Result<_>>()?,
        })
    }

    fn separator(&self, s: &VertexSet) -> Result<&CliquePartition> {
        self.separators
            .get(s)
            .ok_or_else(|| Error::MissingCliquePartition(format!("separator {s}")))
    }

    fn pmc(&self, p: &VertexSet) -> Result<&CliquePartition> {
        self.pmcs
            .get(p)
            .ok_or_else(|| Error::MissingCliquePartition(format!("PMC {p}")))
    }
}

/// Which scope a characteristic is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Separator,
    Pmc(VertexSet),
}

/// The characteristic of `F` for `(S, C, W)` or `(S, C, Ω, W)`, or `None`
/// when `S` is non-empty and some component of `G[S ∪ C] - F` misses the
/// scope.
pub fn characteristic_of(
    g: &Graph,
    f: &VertexSet,
    block: &Block,
    w: &VertexSet,
    scope: Scope,
) -> Option<Characteristic> {
    let scope_set = match scope {
        Scope::Separator => block.separator,
        Scope::Pmc(omega) => omega,
    };
    debug_assert_eq!(*f & scope_set, *w);
    let rest = block.vertices() - *f;
    let mut parts = Vec::new();
    for d in g.components_within(&rest) {
        let p = d & scope_set;
        if p.is_empty() {
            if !block.separator.is_empty() {
                return None;
            }
        } else {
            parts.push(p);
        }
    }
    Some(Characteristic::new(parts))
}

/// Partition of `Ω \ W` by the components of `G[Ω \ W]` with every part of
/// every characteristic in `cs` completed into a clique.
pub fn map_correctly(
    g: &Graph,
    omega: &VertexSet,
    w: &VertexSet,
    cs: &[Characteristic],
) -> Result<Characteristic> {
    let scope = *omega - *w;
    for c in cs {
        if let Some(bad) = c.parts().iter().find(|p| !p.is_subset(&scope)) {
            return Err(Error::InvalidParameter(format!(
                "characteristic part {bad} is not inside {scope}"
            )));
        }
    }
    let mut out = Characteristic::new(g.components_within(&scope));
    for c in cs {
        for p in c.parts() {
            out.merge_part(p);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedOptions {
    /// Accept `F = V` (empty complement) as a connected complement.
    pub allow_empty_complement: bool,
    /// Largest clique-partition width accepted from the greedy fallback.
    pub max_clique_parts: usize,
    pub threads: usize,
}

impl Default for ConnectedOptions {
    fn default() -> Self {
        ConnectedOptions {
            allow_empty_complement: true,
            max_clique_parts: 6,
            threads: 1,
        }
    }
}

/// Instrumentation of one connected solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicStats {
    /// Most parts seen in a block-key characteristic.
    pub max_separator_parts: usize,
    /// Most parts seen in a triple-key characteristic.
    pub max_pmc_parts: usize,
    /// Most distinct characteristics reached for one `(S, C, W)`.
    pub max_separator_characteristics: usize,
    /// Most distinct characteristics reached for one `(S, C, Ω, W)`.
    pub max_pmc_characteristics: usize,
    /// Widest clique partition among separators / PMCs.
    pub separator_clique_width: usize,
    pub pmc_clique_width: usize,
    pub alpha_entries: usize,
}

impl CharacteristicStats {
    fn absorb(&mut self, other: &CharacteristicStats) {
        self.max_separator_parts = self.max_separator_parts.max(other.max_separator_parts);
        self.max_pmc_parts = self.max_pmc_parts.max(other.max_pmc_parts);
        self.max_separator_characteristics = self
            .max_separator_characteristics
            .max(other.max_separator_characteristics);
        self.max_pmc_characteristics = self
            .max_pmc_characteristics
            .max(other.max_pmc_characteristics);
        self.alpha_entries += other.alpha_entries;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Entry {
    value: usize,
    triple: usize,
    chosen: VertexSet,
    beta_characteristic: Characteristic,
}

type AlphaTable = IndexMap<VertexSet, IndexMap<Characteristic, Entry>>;

struct BlockResult {
    table: AlphaTable,
    stats: CharacteristicStats,
}

/// `(value, predecessor characteristic, child characteristic)`.
type GammaLevel = IndexMap<Characteristic, (usize, Option<(Characteristic, Characteristic)>)>;

/// The γ chain for one triple and one `W`; level `i` holds `γ_i`, level 0
/// the children-free base case. Empty result means `β = -∞` throughout.
fn gamma_chain(
    g: &Graph,
    dec: &Decomposition,
    tables: &[Option<BlockResult>],
    pmc: &VertexSet,
    children: &[usize],
    chosen: &VertexSet,
    keep_levels: bool,
) -> Vec<GammaLevel> {
    let scope = *pmc - *chosen;
    let mut base = GammaLevel::new();
    base.insert(
        Characteristic::new(g.components_within(&scope)),
        (chosen.len(), None),
    );
    let mut levels = vec![base];
    for &child in children {
        let child_sep = dec.blocks[child].separator;
        let w = *chosen & child_sep;
        let table = &tables[child]
            .as_ref()
            .expect("children precede parents")
            .table;
        let Some(options) = table.get(&w) else {
            return Vec::new();
        };
        let prev = levels.last().unwrap();
        let mut next = GammaLevel::new();
        for (c_prev, &(v_prev, _)) in prev {
            for (c_child, e) in options {
                let mut merged = c_prev.clone();
                for p in c_child.parts() {
                    debug_assert!(p.is_subset(&scope));
                    merged.merge_part(p);
                }
                let value = v_prev + e.value - w.len();
                let better = next.get(&merged).is_none_or(|(v, _)| value > *v);
                if better {
                    let back = keep_levels.then(|| (c_prev.clone(), c_child.clone()));
                    next.insert(merged, (value, back));
                }
            }
        }
        if next.is_empty() {
            return Vec::new();
        }
        if keep_levels {
            levels.push(next);
        } else {
            levels = vec![next];
        }
    }
    levels
}

fn fill_block(
    g: &Graph,
    dec: &Decomposition,
    t: usize,
    partitions: &CliquePartitions,
    opts: &ConnectedOptions,
    bi: usize,
    done: &[Option<BlockResult>],
) -> Result<BlockResult> {
    let sep = dec.blocks[bi].separator;
    let sep_cliques = if sep.is_empty() {
        None
    } else {
        Some(partitions.separator(&sep)?)
    };
    let mut table = AlphaTable::new();
    let mut stats = CharacteristicStats::default();
    for (ti, triple) in dec.triples[bi].iter().enumerate() {
        let pmc_cliques = partitions.pmc(&triple.pmc)?;
        for chosen in triple.pmc.subsets_up_to(t + 1) {
            let levels = gamma_chain(g, dec, done, &triple.pmc, &triple.children, &chosen, false);
            let Some(beta) = levels.last() else { continue };

            let width = pmc_cliques.width_on(&(triple.pmc - chosen));
            stats.max_pmc_characteristics = stats.max_pmc_characteristics.max(beta.len());
            for c in beta.keys() {
                stats.max_pmc_parts = stats.max_pmc_parts.max(c.len());
                if c.len() > width {
                    return Err(Error::CharacteristicBound {
                        set: format!("PMC {}", triple.pmc),
                        parts: c.len(),
                        cliques: width,
                    });
                }
            }

            let key = chosen & sep;
            for (c, &(value, _)) in beta {
                let restricted = if sep.is_empty() {
                    let ok = c.len() == 1 || (c.is_empty() && opts.allow_empty_complement);
                    if !ok {
                        continue;
                    }
                    Characteristic::default()
                } else {
                    match c.restrict(&sep) {
                        Some(r) => r,
                        None => continue,
                    }
                };
                let slot = table.entry(key).or_default();
                let better = slot.get(&restricted).is_none_or(|e| value > e.value);
                if better {
                    slot.insert(
                        restricted,
                        Entry {
                            value,
                            triple: ti,
                            chosen,
                            beta_characteristic: c.clone(),
                        },
                    );
                }
            }
        }
    }
    if let Some(cliques) = sep_cliques {
        for (w, options) in &table {
            let width = cliques.width_on(&(sep - *w));
            stats.max_separator_characteristics =
                stats.max_separator_characteristics.max(options.len());
            for c in options.keys() {
                stats.max_separator_parts = stats.max_separator_parts.max(c.len());
                if c.len() > width {
                    return Err(Error::CharacteristicBound {
                        set: format!("separator {sep}"),
                        parts: c.len(),
                        cliques: width,
                    });
                }
            }
        }
    }
    stats.alpha_entries = table.values().map(IndexMap::len).sum();
    Ok(BlockResult { table, stats })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedSolution {
    pub size: usize,
    pub set: VertexSet,
    pub stats: CharacteristicStats,
}

/// Runs the connected DP on a prebuilt decomposition of a connected `g`.
pub fn solve_connected_on(
    g: &Graph,
    dec: &Decomposition,
    t: usize,
    partitions: &CliquePartitions,
    opts: &ConnectedOptions,
) -> Result<ConnectedSolution> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if g.n() == 0 {
        return Ok(ConnectedSolution {
            size: 0,
            set: VertexSet::new(),
            stats: CharacteristicStats::default(),
        });
    }
    for (s, p) in &partitions.separators {
        if !p.is_valid_for(g, s) {
            return Err(Error::InvalidParameter(format!(
                "clique partition of {s} is invalid"
            )));
        }
    }
    for (s, p) in &partitions.pmcs {
        if !p.is_valid_for(g, s) {
            return Err(Error::InvalidParameter(format!(
                "clique partition of {s} is invalid"
            )));
        }
    }

    let results = fill_by_size(dec, opts.threads, |bi, done| {
        fill_block(g, dec, t, partitions, opts, bi, done)
    })?;
    let mut stats = CharacteristicStats {
        separator_clique_width: partitions
            .separators
            .values()
            .map(CliquePartition::len)
            .max()
            .unwrap_or(0),
        pmc_clique_width: partitions
            .pmcs
            .values()
            .map(CliquePartition::len)
            .max()
            .unwrap_or(0),
        ..Default::default()
    };
    for r in &results {
        stats.absorb(&r.stats);
    }
    let tables: Vec<Option<BlockResult>> = results.into_iter().map(Some).collect();

    let root = dec.roots[0];
    let root_key = (VertexSet::new(), Characteristic::default());
    let size = tables[root]
        .as_ref()
        .and_then(|r| r.table.get(&root_key.0))
        .and_then(|m| m.get(&root_key.1))
        .map(|e| e.value)
        .ok_or(Error::Infeasible)?;

    let set = reconstruct(g, dec, &tables, root, root_key)?;
    verify(g, t, &set, size, opts)?;
    Ok(ConnectedSolution { size, set, stats })
}

fn reconstruct(
    g: &Graph,
    dec: &Decomposition,
    tables: &[Option<BlockResult>],
    root: usize,
    root_key: (VertexSet, Characteristic),
) -> Result<VertexSet> {
    let mut out = VertexSet::new();
    let mut stack = vec![(root, root_key.0, root_key.1)];
    while let Some((block, w, c)) = stack.pop() {
        let entry = tables[block]
            .as_ref()
            .and_then(|r| r.table.get(&w))
            .and_then(|m| m.get(&c))
            .ok_or_else(|| Error::Verification(format!("missing table entry for block {block}")))?;
        let triple = &dec.triples[block][entry.triple];
        out |= entry.chosen;
        let levels = gamma_chain(
            g,
            dec,
            tables,
            &triple.pmc,
            &triple.children,
            &entry.chosen,
            true,
        );
        let mut current = entry.beta_characteristic.clone();
        for (i, &child) in triple.children.iter().enumerate().rev() {
            let (_, back) = levels
                .get(i + 1)
                .and_then(|l| l.get(&current))
                .ok_or_else(|| Error::Verification("broken γ back-pointer".into()))?;
            let (prev, child_c) = back.clone().expect("levels kept");
            stack.push((child, entry.chosen & dec.blocks[child].separator, child_c));
            current = prev;
        }
    }
    Ok(out)
}

fn verify(
    g: &Graph,
    t: usize,
    set: &VertexSet,
    size: usize,
    opts: &ConnectedOptions,
) -> Result<()> {
    if set.len() != size {
        return Err(Error::Verification(format!(
            "witness has {} vertices, table says {size}",
            set.len()
        )));
    }
    let rest = g.vertices() - *set;
    if rest.is_empty() && !opts.allow_empty_complement {
        return Err(Error::Verification("complement is empty".into()));
    }
    if !g.is_connected_set(&rest) {
        return Err(Error::Verification(
            "complement of the witness is disconnected".into(),
        ));
    }
    let ok = match t {
        0 => g.is_independent(set),
        1 => {
            let (h, _) = g.induced(set);
            h.edge_count() + h.components(&VertexSet::new()).len() == h.n()
        }
        _ => true,
    };
    if !ok {
        return Err(Error::Verification(format!(
            "witness violates treewidth {t}"
        )));
    }
    Ok(())
}

/// Graph classes with a known clique-partition source.
#[derive(Debug, Clone)]
pub enum GraphClass {
    Chordal,
    CircularArc(ArcModel),
    /// Greedy clique covers with the given width limit.
    General {
        max_clique_parts: usize,
    },
}

impl GraphClass {
    /// The class description for the subgraph induced by `set`.
    pub fn restricted(&self, set: &VertexSet) -> GraphClass {
        match self {
            GraphClass::CircularArc(model) => GraphClass::CircularArc(model.induced(set)),
            other => other.clone(),
        }
    }

    pub fn partitions(&self, g: &Graph, dec: &Decomposition) -> Result<CliquePartitions> {
        match self {
            GraphClass::Chordal => {
                let (chordal, _) = classes::is_chordal(g);
                if !chordal {
                    return Err(Error::InvalidParameter("graph is not chordal".into()));
                }
                CliquePartitions::chordal(g, dec)
            }
            GraphClass::CircularArc(model) => {
                if classes::graph_from_arc_model(model)? != *g {
                    return Err(Error::InvalidArcModel(
                        "model does not match the graph".into(),
                    ));
                }
                CliquePartitions::circular_arc(model, dec)
            }
            GraphClass::General { max_clique_parts } => {
                CliquePartitions::greedy(g, dec, *max_clique_parts)
            }
        }
    }
}

/// Builds the decomposition and clique partitions, then solves.
pub fn solve_max_induced_tw_connected(
    g: &Graph,
    t: usize,
    class: &GraphClass,
    budget: &Budget,
    opts: &ConnectedOptions,
) -> Result<ConnectedSolution> {
    if !g.is_connected() {
        return solve_disconnected(g, t, class, budget, opts);
    }
    let dec = Decomposition::build(g, budget)?;
    let partitions = class.partitions(g, &dec)?;
    solve_connected_on(g, &dec, t, &partitions, opts)
}

/// A connected complement lives inside one component `K`; every other
/// component then lies wholly in `F` and must have treewidth at most `t`.
fn solve_disconnected(
    g: &Graph,
    t: usize,
    class: &GraphClass,
    budget: &Budget,
    opts: &ConnectedOptions,
) -> Result<ConnectedSolution> {
    let components = g.components(&VertexSet::new());
    let mut whole = Vec::with_capacity(components.len());
    for c in &components {
        let (h, _) = g.induced(c);
        whole.push(solve_max_induced_tw(&h, t, budget)?.size == c.len());
    }
    let mut best: Option<ConnectedSolution> = None;
    if opts.allow_empty_complement && whole.iter().all(|&w| w) {
        best = Some(ConnectedSolution {
            size: g.n(),
            set: g.vertices(),
            stats: CharacteristicStats::default(),
        });
    }
    let strict = ConnectedOptions {
        allow_empty_complement: false,
        ..*opts
    };
    for (i, c) in components.iter().enumerate() {
        let others_whole = whole.iter().enumerate().all(|(j, &w)| j == i || w);
        if !others_whole {
            continue;
        }
        let (h, old_of) = g.induced(c);
        let inner = solve_max_induced_tw_connected(&h, t, &class.restricted(c), budget, &strict)?;
        let set = lift_set(&inner.set, &old_of) | (g.vertices() - *c);
        if best.as_ref().is_none_or(|b| set.len() > b.size) {
            best = Some(ConnectedSolution {
                size: set.len(),
                set,
                stats: inner.stats,
            });
        }
    }
    let best = best.ok_or(Error::Infeasible)?;
    verify(g, t, &best.set, best.size, opts)?;
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedCover {
    pub size: usize,
    pub set: VertexSet,
    pub stats: CharacteristicStats,
}

fn complement_cover(g: &Graph, s: ConnectedSolution) -> ConnectedCover {
    let set = g.vertices() - s.set;
    ConnectedCover {
        size: set.len(),
        set,
        stats: s.stats,
    }
}

/// Minimum connected vertex cover, as the complement of the `t = 0` solve.
pub fn connected_vertex_cover(
    g: &Graph,
    class: &GraphClass,
    budget: &Budget,
) -> Result<ConnectedCover> {
    let s = solve_max_induced_tw_connected(g, 0, class, budget, &ConnectedOptions::default())?;
    Ok(complement_cover(g, s))
}

/// Minimum connected feedback vertex set, as the complement of the `t = 1`
/// solve.
pub fn connected_feedback_vertex_set(
    g: &Graph,
    class: &GraphClass,
    budget: &Budget,
) -> Result<ConnectedCover> {
    let s = solve_max_induced_tw_connected(g, 1, class, budget, &ConnectedOptions::default())?;
    Ok(complement_cover(g, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, Problem};

    fn vs(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    fn star() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn characteristic_of_star() {
        let g = star();
        let block = Block {
            separator: vs(&[0]),
            component: vs(&[1, 2, 3]),
        };
        let c = characteristic_of(
            &g,
            &vs(&[1, 2]),
            &block,
            &VertexSet::new(),
            Scope::Separator,
        )
        .unwrap();
        assert_eq!(c.parts(), &[vs(&[0])]);
        // F = {0} strands 1, 2, 3 inside C
        assert_eq!(
            characteristic_of(&g, &vs(&[0]), &block, &vs(&[0]), Scope::Separator),
            None
        );
        let whole = Block {
            separator: VertexSet::new(),
            component: g.vertices(),
        };
        let c = characteristic_of(
            &g,
            &VertexSet::new(),
            &whole,
            &VertexSet::new(),
            Scope::Pmc(vs(&[0, 1])),
        )
        .unwrap();
        assert_eq!(c.parts(), &[vs(&[0, 1])]);
    }

    #[test]
    fn map_correctly_examples() {
        let g = Graph::new(3).unwrap();
        let omega = vs(&[0, 1]);
        let base = map_correctly(&g, &omega, &VertexSet::new(), &[]).unwrap();
        assert_eq!(base.parts(), &[vs(&[0]), vs(&[1])]);
        assert_eq!(
            map_correctly(&g, &omega, &VertexSet::new(), &[base.clone()]).unwrap(),
            base
        );
        let c1 = Characteristic::new([vs(&[0])]);
        let c2 = Characteristic::new([vs(&[0, 1])]);
        let merged = map_correctly(&g, &omega, &VertexSet::new(), &[c1, c2]).unwrap();
        assert_eq!(merged.parts(), &[vs(&[0, 1])]);
        assert!(map_correctly(&g, &omega, &vs(&[1]), &[Characteristic::new([vs(&[1])])]).is_err());
    }

    #[test]
    fn cvc_examples() {
        let cvc = |g: &Graph| {
            connected_vertex_cover(g, &GraphClass::Chordal, &Budget::default()).unwrap()
        };
        let s = cvc(&star());
        assert_eq!((s.size, s.set), (1, vs(&[0])));
        assert_eq!(cvc(&Graph::complete(5).unwrap()).size, 4);
        let c4 = Graph::cycle(4).unwrap();
        let s = connected_vertex_cover(
            &c4,
            &GraphClass::General {
                max_clique_parts: 6,
            },
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(s.size, 3);
        let s = solve_max_induced_tw_connected(
            &c4,
            0,
            &GraphClass::General {
                max_clique_parts: 6,
            },
            &Budget::default(),
            &ConnectedOptions::default(),
        )
        .unwrap();
        assert_eq!(s.size, 1);
    }

    #[test]
    fn cfvs_examples() {
        let cfvs = |g: &Graph| {
            connected_feedback_vertex_set(
                g,
                &GraphClass::General {
                    max_clique_parts: 6,
                },
                &Budget::default(),
            )
            .unwrap()
        };
        let tree = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(cfvs(&tree).size, 0);
        assert_eq!(cfvs(&Graph::complete(4).unwrap()).size, 2);
        assert_eq!(cfvs(&Graph::cycle(4).unwrap()).size, 1);
    }

    #[test]
    fn empty_complement_flag() {
        let tree = Graph::path(4).unwrap();
        let dec = Decomposition::build(&tree, &Budget::default()).unwrap();
        let parts = CliquePartitions::chordal(&tree, &dec).unwrap();
        let strict = ConnectedOptions {
            allow_empty_complement: false,
            ..Default::default()
        };
        let s = solve_connected_on(&tree, &dec, 1, &parts, &strict).unwrap();
        assert_eq!(s.size, 3);
        let s = solve_connected_on(&tree, &dec, 1, &parts, &ConnectedOptions::default()).unwrap();
        assert_eq!(s.size, 4);
    }

    #[test]
    fn disconnected_inputs() {
        let budget = Budget::default();
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            connected_vertex_cover(&two_edges, &GraphClass::Chordal, &budget),
            Err(Error::Infeasible)
        );
        let cfvs =
            connected_feedback_vertex_set(&two_edges, &GraphClass::Chordal, &budget).unwrap();
        assert_eq!(cfvs.size, 0);
        let edge_and_isolated = Graph::from_edges(3, [(0, 1)]).unwrap();
        let cvc =
            connected_vertex_cover(&edge_and_isolated, &GraphClass::Chordal, &budget).unwrap();
        assert_eq!(cvc.size, 1);
        let dec = Decomposition::build(&two_edges, &budget).unwrap();
        let partitions = CliquePartitions::chordal(&two_edges, &dec).unwrap();
        assert_eq!(
            solve_connected_on(
                &two_edges,
                &dec,
                0,
                &partitions,
                &ConnectedOptions::default()
            ),
            Err(Error::DisconnectedInput)
        );
    }

    #[test]
    fn disconnected_matches_oracle() {
        for seed in 0..40 {
            let model = classes::random_arc_model(9, 0.15, seed).unwrap();
            let g = classes::graph_from_arc_model(&model).unwrap();
            let class = GraphClass::CircularArc(model);
            let budget = Budget::default();
            let got = |r: Result<ConnectedCover>| match r {
                Ok(c) => Some(c.size),
                Err(Error::Infeasible) => None,
                Err(e) => panic!("{e}"),
            };
            assert_eq!(
                got(connected_vertex_cover(&g, &class, &budget)),
                oracle::brute_solve(&g, Problem::ConnectedVertexCover).unwrap(),
                "{g:?}"
            );
            assert_eq!(
                got(connected_feedback_vertex_set(&g, &class, &budget)),
                oracle::brute_solve(&g, Problem::ConnectedFeedbackVertexSet).unwrap(),
                "{g:?}"
            );
        }
    }

    #[test]
    fn chordal_class_rejects_cycles() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(connected_vertex_cover(&c5, &GraphClass::Chordal, &Budget::default()).is_err());
    }

    #[test]
    fn matches_oracle_on_random_chordal() {
        for seed in 0..25 {
            let g = classes::random_chordal(9, 0.5, seed).unwrap();
            let cvc = connected_vertex_cover(&g, &GraphClass::Chordal, &Budget::default()).unwrap();
            assert_eq!(
                Some(cvc.size),
                oracle::brute_solve(&g, Problem::ConnectedVertexCover).unwrap(),
                "{g:?}"
            );
            let cfvs = connected_feedback_vertex_set(&g, &GraphClass::Chordal, &Budget::default())
                .unwrap();
            assert_eq!(
                Some(cfvs.size),
                oracle::brute_solve(&g, Problem::ConnectedFeedbackVertexSet).unwrap(),
                "{g:?}"
            );
            assert!(cvc.stats.max_separator_parts <= 1 && cvc.stats.max_pmc_parts <= 1);
        }
    }

    /// Spot check of the rejection rule: whenever a partial solution is
    /// rejected for a block, no superset agreeing with it on `S ∪ C`
    /// leaves a connected complement.
    #[test]
    fn rejection_is_sound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let n = rng.gen_range(4..=8);
            let g = classes::random_graph(n, 0.45, rng.gen());
            if !g.is_connected() {
                continue;
            }
            let dec = Decomposition::build(&g, &Budget::default()).unwrap();
            for block in dec.blocks.iter().filter(|b| !b.separator.is_empty()) {
                let span = block.vertices();
                let outside = g.vertices() - span;
                for mask in 0u32..1 << n {
                    let f: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1).collect();
                    if !f.is_subset(&span) {
                        continue;
                    }
                    let w = f & block.separator;
                    if characteristic_of(&g, &f, block, &w, Scope::Separator).is_some() {
                        continue;
                    }
                    for ext in 0u32..1 << n {
                        let extra: VertexSet = (0..n).filter(|v| ext >> v & 1 == 1).collect();
                        if !extra.is_subset(&outside) {
                            continue;
                        }
                        let rest = g.vertices() - (f | extra);
                        // the only connected completion is one that keeps
                        // the stranded component alone
                        if g.is_connected_set(&rest) && !rest.is_empty() {
                            assert!(rest.is_subset(&block.component), "{g:?} {block:?} {f}");
                            assert!((block.separator | outside).is_subset(&(f | extra)));
                        }
                    }
                }
            }
        }
    }
}
