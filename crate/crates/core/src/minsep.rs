//! Minimal separators: recognition, enumeration, and the map that lifts a
//! minimal separator of an odd power `G^(2l+1)` back to one of `G`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Components `C` of `G - S` with `N(C) = S`.
pub fn full_components(g: &Graph, sep: &VertexSet) -> Vec<VertexSet> {
    g.components(sep)
        .into_iter()
        .filter(|c| g.open_neighborhood(c) == *sep)
        .collect()
}

/// `S` is a minimal separator iff `G - S` has at least two full components.
///
/// With this definition the empty set is a minimal separator exactly when
/// `G` is disconnected.
pub fn is_minimal_separator(g: &Graph, sep: &VertexSet) -> bool {
    if g.check_set(sep).is_err() {
        return false;
    }
    let mut full = 0;
    for c in g.components(sep) {
        if g.open_neighborhood(&c) == *sep {
            full += 1;
            if full == 2 {
                return true;
            }
        }
    }
    false
}

/// Whether `S` is an `a,b`-minimal separator: `a` and `b` lie in two distinct
/// full components of `G - S`.
pub fn is_ab_minimal_separator(g: &Graph, sep: &VertexSet, a: usize, b: usize) -> bool {
    if sep.contains(a) || sep.contains(b) || a >= g.n() || b >= g.n() {
        return false;
    }
    let allowed = g.vertices() - *sep;
    let ca = g.component_within(a, &allowed);
    if ca.contains(b) {
        return false;
    }
    let cb = g.component_within(b, &allowed);
    g.open_neighborhood(&ca) == *sep && g.open_neighborhood(&cb) == *sep
}

/// Deduplicated minimal separators in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SeparatorSet {
    separators: Vec<VertexSet>,
}

impl SeparatorSet {
    pub fn from_unsorted(mut separators: Vec<VertexSet>) -> Self {
        separators.sort();
        separators.dedup();
        SeparatorSet { separators }
    }

    pub fn len(&self) -> usize {
        self.separators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separators.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.separators.iter()
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.separators
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.separators.binary_search(s).is_ok()
    }
}

impl<'a> IntoIterator for &'a SeparatorSet {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.separators.iter()
    }
}

/// Default enumeration budget: `10 n^3` separators.
pub fn default_separator_budget(n: usize) -> usize {
    (10 * n * n * n).max(10)
}

pub fn enumerate_minimal_separators(g: &Graph) -> Result<SeparatorSet> {
    enumerate_minimal_separators_capped(g, default_separator_budget(g.n()))
}

/// All minimal separators of `g`, or [`Error::SeparatorBudget`] once more than
/// `limit` have been found.
///
/// Seeds with `N(D)` for every component `D` of `G - N[v]`, then closes under
/// `S -> N(D)` for components `D` of `G - (S ∪ N(x))`, `x ∈ S`.
pub fn enumerate_minimal_separators_capped(g: &Graph, limit: usize) -> Result<SeparatorSet> {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut found: Vec<VertexSet> = Vec::new();
    let mut push = |s: VertexSet, found: &mut Vec<VertexSet>| -> Result<()> {
        if seen.insert(s) {
            if found.len() == limit {
                return Err(Error::SeparatorBudget { limit });
            }
            found.push(s);
        }
        Ok(())
    };

    for v in 0..g.n() {
        let closed = g.closed_neighborhood(&VertexSet::singleton(v));
        for d in g.components(&closed) {
            push(g.open_neighborhood(&d), &mut found)?;
        }
    }

    let mut next = 0;
    while next < found.len() {
        let s = found[next];
        next += 1;
        for x in s.iter() {
            let removed = s | *g.neighbors(x);
            for d in g.components(&removed) {
                push(g.open_neighborhood(&d), &mut found)?;
            }
        }
    }
    Ok(SeparatorSet::from_unsorted(found))
}

/// Which clause of the lifting map's contract failed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    #[error("power exponent {0} is not odd")]
    EvenPower(usize),
    #[error("{0} is not a minimal separator of the power graph")]
    NotPowerSeparator(VertexSet),
    #[error("vertices {a} and {b} are not in distinct full components of G^k - S̄")]
    BadEndpoints { a: usize, b: usize },
    #[error("dist(D_a, D_b) < 2")]
    RegionsTooClose,
    #[error("b is not separated from N[D_a]")]
    EndpointAbsorbed,
    #[error("lifted set {0} is not an a,b-minimal separator of G")]
    NotSeparatorOfG(VertexSet),
    #[error("N^l[S] = {got} differs from S̄ = {expected}")]
    BallMismatch { got: VertexSet, expected: VertexSet },
    #[error(transparent)]
    Graph(#[from] Error),
}

/// Intermediate sets of one lifting, kept for inspection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftWitness {
    pub power_separator: VertexSet,
    pub a: usize,
    pub b: usize,
    pub region_a: VertexSet,
    pub region_b: VertexSet,
    pub side_b: VertexSet,
    pub separator: VertexSet,
}

/// Lifts minimal separators of `G^k` (k odd) to minimal separators of `G`.
pub struct PowerSeparatorLift<'g> {
    graph: &'g Graph,
    power: Graph,
    radius: usize,
}

impl<'g> PowerSeparatorLift<'g> {
    pub fn new(graph: &'g Graph, k: usize) -> Result<Self, LiftError> {
        if k % 2 == 0 {
            return Err(LiftError::EvenPower(k));
        }
        Ok(PowerSeparatorLift {
            graph,
            power: graph.power(k)?,
            radius: (k - 1) / 2,
        })
    }

    pub fn power(&self) -> &Graph {
        &self.power
    }

    /// Runs the construction for a fixed `(a, b)` pair, or for the first pair
    /// of full components that works when `ends` is `None`.
    pub fn lift(
        &self,
        sbar: &VertexSet,
        ends: Option<(usize, usize)>,
    ) -> Result<LiftWitness, LiftError> {
        self.graph.check_set(sbar)?;
        if !is_minimal_separator(&self.power, sbar) {
            return Err(LiftError::NotPowerSeparator(*sbar));
        }
        if let Some((a, b)) = ends {
            return self.lift_pair(sbar, a, b);
        }
        let full = full_components(&self.power, sbar);
        let mut last = None;
        for (i, ca) in full.iter().enumerate() {
            for cb in &full[i + 1..] {
                let (a, b) = (ca.first().unwrap(), cb.first().unwrap());
                match self.lift_pair(sbar, a, b) {
                    Ok(w) => return Ok(w),
                    Err(e) => last = Some(e),
                }
            }
        }
        Err(last.unwrap_or(LiftError::NotPowerSeparator(*sbar)))
    }

    fn lift_pair(&self, sbar: &VertexSet, a: usize, b: usize) -> Result<LiftWitness, LiftError> {
        let g = self.graph;
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        if !is_ab_minimal_separator(&self.power, sbar, a, b) {
            return Err(LiftError::BadEndpoints { a, b });
        }
        if sbar.is_empty() {
            return Ok(LiftWitness {
                power_separator: *sbar,
                a,
                b,
                region_a: VertexSet::new(),
                region_b: VertexSet::new(),
                side_b: VertexSet::new(),
                separator: VertexSet::new(),
            });
        }
        let outside = self.power.vertices() - *sbar;
        let comp_a = self.power.component_within(a, &outside);
        let comp_b = self.power.component_within(b, &outside);
        let region_a = g.neighborhood_k(&comp_a, self.radius, true)?;
        let region_b = g.neighborhood_k(&comp_b, self.radius, true)?;

        let blocked = g.closed_neighborhood(&region_a);
        if blocked.intersects(&region_b) {
            return Err(LiftError::RegionsTooClose);
        }
        if blocked.contains(b) {
            return Err(LiftError::EndpointAbsorbed);
        }
        let side_b = g.component_within(b, &(g.vertices() - blocked));
        let separator = g.open_neighborhood(&side_b);

        if !is_ab_minimal_separator(g, &separator, a, b) {
            return Err(LiftError::NotSeparatorOfG(separator));
        }
        let ball = g.neighborhood_k(&separator, self.radius, true)?;
        if ball != *sbar {
            return Err(LiftError::BallMismatch {
                got: ball,
                expected: *sbar,
            });
        }
        Ok(LiftWitness {
            power_separator: *sbar,
            a,
            b,
            region_a,
            region_b,
            side_b,
            separator,
        })
    }
}

/// One-shot form of [`PowerSeparatorLift::lift`]; returns the separator of `G`.
pub fn lift_power_separator(
    g: &Graph,
    k: usize,
    sbar: &VertexSet,
    ends: Option<(usize, usize)>,
) -> Result<VertexSet, LiftError> {
    PowerSeparatorLift::new(g, k)?
        .lift(sbar, ends)
        .map(|w| w.separator)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSeparatorReport {
    pub k: usize,
    pub separators_of_graph: usize,
    pub separators_of_power: usize,
    pub witnesses: Vec<LiftWitness>,
    /// Power separators whose lifting failed, with the reason.
    pub failures: Vec<(VertexSet, String)>,
    pub injective: bool,
    pub lifted_into_graph_separators: bool,
}

impl PowerSeparatorReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
            && self.injective
            && self.lifted_into_graph_separators
            && self.separators_of_power <= self.separators_of_graph
    }
}

/// Enumerates `Δ(G)` and `Δ(G^k)` and lifts every member of the latter.
pub fn verify_odd_power_separators(
    g: &Graph,
    k: usize,
    budget: usize,
) -> Result<PowerSeparatorReport> {
    let lift = PowerSeparatorLift::new(g, k).map_err(|e| match e {
        LiftError::Graph(e) => e,
        other => Error::InvalidParameter(other.to_string()),
    })?;
    let base = enumerate_minimal_separators_capped(g, budget)?;
    let powered = enumerate_minimal_separators_capped(lift.power(), budget)?;

    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    for sbar in &powered {
        match lift.lift(sbar, None) {
            Ok(w) => witnesses.push(w),
            Err(e) => failures.push((*sbar, e.to_string())),
        }
    }
    let images: HashSet<VertexSet> = witnesses.iter().map(|w| w.separator).collect();
    let injective = images.len() == witnesses.len();
    let lifted_into_graph_separators = witnesses.iter().all(|w| base.contains(&w.separator));
    Ok(PowerSeparatorReport {
        k,
        separators_of_graph: base.len(),
        separators_of_power: powered.len(),
        witnesses,
        failures,
        injective,
        lifted_into_graph_separators,
    })
}
