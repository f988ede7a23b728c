//! Circular-arc intersection models.
//!
//! Endpoints live on `2n` integer slots around a circle. Arc `(s, e)` covers
//! the slots from `s` clockwise to `e`. Scanpoint `i` sits between slots `i`
//! and `i + 1 (mod 2n)`; an arc passes through it when it covers both slots
//! and `i` is not its end.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dp_connected::CliquePartition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcModel {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl ArcModel {
    pub fn new(arcs: Vec<(usize, usize)>) -> Result<Self> {
        let model = ArcModel {
            n: arcs.len(),
            arcs,
        };
        model.validate()?;
        Ok(model)
    }

    pub fn slots(&self) -> usize {
        2 * self.n
    }

    pub fn validate(&self) -> Result<()> {
        if self.arcs.len() != self.n {
            return Err(Error::InvalidArcModel(format!(
                "n = {} but {} arcs given",
                self.n,
                self.arcs.len()
            )));
        }
        let slots = self.slots();
        let mut used = vec![false; slots];
        for &(s, e) in &self.arcs {
            for p in [s, e] {
                if p >= slots {
                    return Err(Error::InvalidArcModel(format!(
                        "endpoint {p} outside 0..{slots}"
                    )));
                }
                if used[p] {
                    return Err(Error::InvalidArcModel(format!("duplicate endpoint {p}")));
                }
                used[p] = true;
            }
        }
        Ok(())
    }

    /// Whether arc `v` covers slot `p`.
    pub fn covers(&self, v: usize, p: usize) -> bool {
        let (s, e) = self.arcs[v];
        if s <= e {
            s <= p && p <= e
        } else {
            p >= s || p <= e
        }
    }

    /// Arcs through scanpoint `i`.
    pub fn through_scanpoint(&self, i: usize) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.covers(v, i) && self.arcs[v].1 != i)
            .collect()
    }

    /// Model of the arcs in `set`, renumbered in ascending order, with the
    /// surviving endpoints re-ranked onto `2|set|` slots.
    pub fn induced(&self, set: &VertexSet) -> ArcModel {
        let kept: Vec<usize> = set.iter().filter(|&v| v < self.n).collect();
        let mut points: Vec<(usize, usize, bool)> = kept
            .iter()
            .enumerate()
            .flat_map(|(i, &v)| [(self.arcs[v].0, i, false), (self.arcs[v].1, i, true)])
            .collect();
        points.sort_unstable();
        let mut arcs = vec![(0, 0); kept.len()];
        for (slot, &(_, i, is_end)) in points.iter().enumerate() {
            if is_end {
                arcs[i].1 = slot;
            } else {
                arcs[i].0 = slot;
            }
        }
        ArcModel {
            n: kept.len(),
            arcs,
        }
    }

    /// Same model with every endpoint shifted by `by` slots.
    pub fn rotated(&self, by: usize) -> ArcModel {
        let slots = self.slots();
        ArcModel {
            n: self.n,
            arcs: self
                .arcs
                .iter()
                .map(|&(s, e)| ((s + by) % slots, (e + by) % slots))
                .collect(),
        }
    }
}

/// Intersection graph of the arcs.
pub fn graph_from_arc_model(model: &ArcModel) -> Result<Graph> {
    model.validate()?;
    let mut g = Graph::new(model.n)?;
    for u in 0..model.n {
        for v in u + 1..model.n {
            let (su, eu) = model.arcs[u];
            let (sv, ev) = model.arcs[v];
            if model.covers(u, sv)
                || model.covers(u, ev)
                || model.covers(v, su)
                || model.covers(v, eu)
            {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Candidate scanpoints for `target`: distinct non-empty arc sets through a
/// scanpoint that stay inside `target`.
fn scan_sets_within(model: &ArcModel, target: &VertexSet) -> Vec<VertexSet> {
    let mut sets: Vec<VertexSet> = (0..model.slots())
        .map(|i| model.through_scanpoint(i))
        .filter(|s| !s.is_empty() && s.is_subset(target))
        .collect();
    sets.sort();
    sets.dedup();
    sets
}

fn partition_from(sets: &[VertexSet]) -> CliquePartition {
    let mut covered = VertexSet::new();
    let mut cliques = Vec::new();
    for s in sets {
        let part = *s - covered;
        if !part.is_empty() {
            cliques.push(part);
            covered |= part;
        }
    }
    CliquePartition { cliques }
}

/// Fewest scan sets (at most `max`) whose union is exactly `target`.
fn cover_by_scanpoints(
    model: &ArcModel,
    target: &VertexSet,
    max: usize,
) -> Option<CliquePartition> {
    if target.is_empty() {
        return Some(CliquePartition::default());
    }
    let sets = scan_sets_within(model, target);
    fn search(
        sets: &[VertexSet],
        target: &VertexSet,
        from: usize,
        acc: VertexSet,
        left: usize,
        chosen: &mut Vec<VertexSet>,
    ) -> bool {
        if acc == *target {
            return true;
        }
        if left == 0 {
            return false;
        }
        for i in from..sets.len() {
            if sets[i].is_subset(&acc) {
                continue;
            }
            chosen.push(sets[i]);
            if search(sets, target, i + 1, acc | sets[i], left - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    (1..=max).find_map(|count| {
        let mut chosen = Vec::new();
        search(&sets, target, 0, VertexSet::new(), count, &mut chosen)
            .then(|| partition_from(&chosen))
    })
}

/// Splits a minimal separator into at most two cliques, each the arcs
/// through one scanpoint of a scanline realising `S`.
pub fn separator_clique_partition(model: &ArcModel, sep: &VertexSet) -> Result<CliquePartition> {
    cover_by_scanpoints(model, sep, 2).ok_or_else(|| Error::ModelDoesNotWitness {
        kind: "separator",
        set: sep.to_string(),
    })
}

/// Splits a potential maximal clique into at most three cliques, each the
/// arcs through one scanpoint.
pub fn pmc_clique_partition(model: &ArcModel, pmc: &VertexSet) -> Result<CliquePartition> {
    cover_by_scanpoints(model, pmc, 3).ok_or_else(|| Error::ModelDoesNotWitness {
        kind: "PMC",
        set: pmc.to_string(),
    })
}

/// Random model: arc starts uniform on the circle, lengths uniform in
/// `[0.2, 1] * coverage` of the circumference (capped below a full turn),
/// endpoints then ranked onto the `2n` slots.
pub fn random_arc_model(n: usize, coverage: f64, seed: u64) -> Result<ArcModel> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "random_arc_model needs n >= 1".into(),
        ));
    }
    if !(coverage > 0.0 && coverage.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "coverage {coverage} must be positive"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<(f64, usize, bool)> = Vec::with_capacity(2 * n);
    for v in 0..n {
        let start: f64 = rng.gen_range(0.0..1.0);
        let len = (coverage * rng.gen_range(0.2..1.0)).min(0.95);
        points.push((start, v, false));
        points.push(((start + len).fract(), v, true));
    }
    points.sort_by(|a, b| a.0.total_cmp(&b.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut arcs = vec![(0, 0); n];
    for (slot, &(_, v, is_end)) in points.iter().enumerate() {
        if is_end {
            arcs[v].1 = slot;
        } else {
            arcs[v].0 = slot;
        }
    }
    ArcModel::new(arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{enumerate_pmcs, Budget};
    use crate::minsep::enumerate_minimal_separators;

    fn vs(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    /// Four arcs in a ring, each overlapping its two neighbours.
    fn ring() -> ArcModel {
        ArcModel::new(vec![(0, 3), (2, 5), (4, 7), (6, 1)]).unwrap()
    }

    #[test]
    fn intersection_graphs() {
        let disjoint = ArcModel::new(vec![(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(graph_from_arc_model(&disjoint).unwrap().edge_count(), 0);
        let common = ArcModel::new(vec![(0, 5), (1, 4), (2, 3)]).unwrap();
        assert_eq!(
            graph_from_arc_model(&common).unwrap(),
            Graph::complete(3).unwrap()
        );
        assert_eq!(
            graph_from_arc_model(&ring()).unwrap(),
            Graph::cycle(4).unwrap()
        );
    }

    #[test]
    fn invalid_models() {
        assert!(ArcModel::new(vec![(0, 1), (1, 2)]).is_err());
        assert!(ArcModel::new(vec![(0, 9)]).is_err());
        let bad = ArcModel {
            n: 3,
            arcs: vec![(0, 1)],
        };
        assert!(graph_from_arc_model(&bad).is_err());
    }

    #[test]
    fn ring_partitions() {
        let m = ring();
        let p = separator_clique_partition(&m, &vs(&[0, 2])).unwrap();
        assert_eq!(p.cliques, vec![vs(&[0]), vs(&[2])]);
        let common = ArcModel::new(vec![(0, 5), (1, 4), (2, 3)]).unwrap();
        let g = graph_from_arc_model(&common).unwrap();
        assert_eq!(
            pmc_clique_partition(&common, &g.vertices()).unwrap().len(),
            1
        );
    }

    #[test]
    fn random_models_have_scanline_partitions() {
        for seed in 0..30 {
            let m = random_arc_model(14, 0.35, seed).unwrap();
            let g = graph_from_arc_model(&m).unwrap();
            let seps = enumerate_minimal_separators(&g).unwrap();
            for s in seps.iter().filter(|s| !s.is_empty()) {
                let p = separator_clique_partition(&m, s).unwrap();
                assert!(p.len() <= 2 && p.is_valid_for(&g, s), "{m:?} {s}");
            }
            for pmc in enumerate_pmcs(&g, &seps, &Budget::default()).unwrap() {
                let p = pmc_clique_partition(&m, &pmc).unwrap();
                assert!(p.len() <= 3 && p.is_valid_for(&g, &pmc), "{m:?} {pmc}");
            }
        }
    }

    #[test]
    fn rotation_invariance() {
        for seed in 0..10 {
            let m = random_arc_model(12, 0.4, seed).unwrap();
            let g = graph_from_arc_model(&m).unwrap();
            for by in [1, 5, 17] {
                assert_eq!(graph_from_arc_model(&m.rotated(by)).unwrap(), g);
            }
        }
    }

    #[test]
    fn induced_models() {
        for seed in 0..10 {
            let m = random_arc_model(12, 0.4, seed).unwrap();
            let g = graph_from_arc_model(&m).unwrap();
            let keep: VertexSet = (0..12).filter(|v| v % 3 != 1).collect();
            let (h, _) = g.induced(&keep);
            assert_eq!(graph_from_arc_model(&m.induced(&keep)).unwrap(), h);
        }
    }

    #[test]
    fn generator_edges() {
        let one = random_arc_model(1, 0.5, 0).unwrap();
        assert_eq!(one.arcs.len(), 1);
        let dense = graph_from_arc_model(&random_arc_model(12, 3.0, 1).unwrap()).unwrap();
        assert!(dense.edge_count() * 2 > 12 * 11 / 2);
        assert_eq!(
            random_arc_model(20, 0.3, 9).unwrap(),
            random_arc_model(20, 0.3, 9).unwrap()
        );
    }
}
