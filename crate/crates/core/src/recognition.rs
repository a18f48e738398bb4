//! Detection of the two forbidden induced subgraphs (the claw `K1,3` and
//! `(K2 ∪ K1) + K2`, called W here) and the four-way neighborhood
//! classification every in-class vertex satisfies.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::clique::{max_clique_in_neighborhood, max_clique_within, maximum_cliques_within};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A role-labeled induced copy of one of the forbidden graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ForbiddenWitness {
    /// `center` adjacent to three pairwise non-adjacent leaves (ascending).
    Claw { center: usize, leaves: [usize; 3] },
    /// `(K2 ∪ K1) + K2`: `a`–`b` is the edge, `c` the isolated vertex, and
    /// `d`–`e` the edge joined to all three. Non-edges are exactly `ac`, `bc`.
    W { a: usize, b: usize, c: usize, d: usize, e: usize },
}

impl ForbiddenWitness {
    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            ForbiddenWitness::Claw { center, leaves } => {
                vec![center, leaves[0], leaves[1], leaves[2]]
            }
            ForbiddenWitness::W { a, b, c, d, e } => vec![a, b, c, d, e],
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ForbiddenWitness::Claw { .. } => "claw",
            ForbiddenWitness::W { .. } => "w",
        }
    }

    /// Re-checks the labeled edge/non-edge pattern against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        if vs.iter().any(|&v| v >= g.vertex_count()) {
            return false;
        }
        let distinct: VertexSet = vs.iter().copied().collect();
        if distinct.len() != vs.len() {
            return false;
        }
        match *self {
            ForbiddenWitness::Claw { center, leaves } => {
                leaves.iter().all(|&l| g.has_edge(center, l))
                    && !g.has_edge(leaves[0], leaves[1])
                    && !g.has_edge(leaves[0], leaves[2])
                    && !g.has_edge(leaves[1], leaves[2])
            }
            ForbiddenWitness::W { a, b, c, d, e } => {
                let edges = [(a, b), (d, e), (a, d), (a, e), (b, d), (b, e), (c, d), (c, e)];
                edges.iter().all(|&(x, y)| g.has_edge(x, y)) && !g.has_edge(a, c) && !g.has_edge(b, c)
            }
        }
    }
}

impl fmt::Display for ForbiddenWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenWitness::Claw { center, leaves } => {
                write!(f, "claw centered at {center} with leaves {leaves:?}")
            }
            ForbiddenWitness::W { a, b, c, d, e } => {
                write!(f, "(K2+K1)+K2 with edge {a}-{b}, isolated {c}, joined edge {d}-{e}")
            }
        }
    }
}

/// Class-membership verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    InClass,
    Excluded(ForbiddenWitness),
}

impl Membership {
    pub fn is_in_class(&self) -> bool {
        matches!(self, Membership::InClass)
    }

    pub fn witness(&self) -> Option<ForbiddenWitness> {
        match self {
            Membership::InClass => None,
            Membership::Excluded(w) => Some(*w),
        }
    }
}

/// Least claw: by center, then by the sorted leaf triple.
pub fn find_claw(g: &Graph) -> Option<ForbiddenWitness> {
    g.vertices().find_map(|center| {
        let nbrs = g.neighbors(center);
        if nbrs.len() < 3 {
            return None;
        }
        for x in nbrs.iter() {
            let free_x = nbrs.above(x).difference(g.neighbors(x));
            for y in free_x.iter() {
                if let Some(z) = free_x.above(y).difference(g.neighbors(y)).first() {
                    return Some(ForbiddenWitness::Claw { center, leaves: [x, y, z] });
                }
            }
        }
        None
    })
}

/// Least W, searching edges `d < e` ascending, then adjacent pairs `a < b`
/// of the common neighborhood, then `c`.
pub fn find_forbidden_w(g: &Graph) -> Option<ForbiddenWitness> {
    for (d, e) in g.edges() {
        let common = g.neighbors(d).intersection(g.neighbors(e));
        if common.len() < 3 {
            continue;
        }
        for a in common.iter() {
            let a_nbrs = g.neighbors(a);
            for b in common.above(a).intersection(a_nbrs).iter() {
                let mut outside = common.difference(a_nbrs).difference(g.neighbors(b));
                outside.remove(a);
                outside.remove(b);
                if let Some(c) = outside.first() {
                    return Some(ForbiddenWitness::W { a, b, c, d, e });
                }
            }
        }
    }
    None
}

/// Claws are searched first.
pub fn is_in_class(g: &Graph) -> Membership {
    match find_claw(g).or_else(|| find_forbidden_w(g)) {
        Some(w) => Membership::Excluded(w),
        None => Membership::InClass,
    }
}

/// Which of the four neighborhood outcomes holds at a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NeighborhoodOutcome {
    /// `N(u)` induces a 5-cycle.
    CycleC5,
    /// `N(u)` induces a path on 4 vertices.
    PathP4,
    /// `R` is complete and each `r ∈ R` misses exactly one vertex of `Q`,
    /// distinct across `R`. Maps `r` to the vertex it misses.
    UniqueMiss(BTreeMap<usize, usize>),
    /// `R` is complete with no `R`–`Q` edges. Includes `R = ∅`.
    IsolatedR,
    /// None of the four holds. Carries a forbidden subgraph inside the
    /// closed neighborhood when one exists.
    Violation(Option<ForbiddenWitness>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodShape {
    pub outcome: NeighborhoodOutcome,
    /// Maximum clique of the subgraph induced by `N(u)` used for the split.
    pub q: VertexSet,
    /// `N(u) − Q`.
    pub r: VertexSet,
}

/// Classifies `N(u)` against the lexicographically least maximum clique of
/// the neighborhood. Outcomes are tested in the order C5, P4, unique-miss,
/// isolated.
pub fn classify_neighborhood(g: &Graph, u: usize) -> Result<NeighborhoodShape> {
    let q = max_clique_in_neighborhood(g, u)?.vertices;
    let nbrs = g.neighbors(u);
    let r = nbrs.difference(&q);
    let outcome = match outcome_for_split(g, nbrs, &q, &r) {
        Some(outcome) => outcome,
        None => NeighborhoodOutcome::Violation(closed_neighborhood_witness(g, u)),
    };
    Ok(NeighborhoodShape { outcome, q, r })
}

/// True iff one of the four outcomes holds for every maximum clique of the
/// neighborhood of `u`.
pub fn verify_lemma1_all_cliques(g: &Graph, u: usize) -> Result<bool> {
    g.check_vertex(u)?;
    if let Membership::Excluded(w) = is_in_class(g) {
        return Err(Error::NotInClass(w));
    }
    Ok(lemma1_holds_for_all_cliques(g, g.neighbors(u)))
}

/// Same check over an arbitrary neighborhood set, without the class check.
pub(crate) fn lemma1_holds_for_all_cliques(g: &Graph, nbrs: &VertexSet) -> bool {
    if is_c5(g, nbrs) || is_p4(g, nbrs) {
        return true;
    }
    maximum_cliques_within(g, nbrs).iter().all(|q| outcome_for_split(g, nbrs, q, &nbrs.difference(q)).is_some())
}

/// Outcome for a neighborhood split into a clique `q` and the rest `r`, or
/// `None` if none of the four applies.
pub(crate) fn outcome_for_split(
    g: &Graph,
    nbrs: &VertexSet,
    q: &VertexSet,
    r: &VertexSet,
) -> Option<NeighborhoodOutcome> {
    if is_c5(g, nbrs) {
        return Some(NeighborhoodOutcome::CycleC5);
    }
    if is_p4(g, nbrs) {
        return Some(NeighborhoodOutcome::PathP4);
    }
    if !g.is_clique(r) {
        return None;
    }
    if r.is_empty() {
        return Some(NeighborhoodOutcome::IsolatedR);
    }
    if let Some(map) = unique_miss_map(g, q, r) {
        return Some(NeighborhoodOutcome::UniqueMiss(map));
    }
    if r.iter().all(|x| g.neighbors(x).intersection_len(q) == 0) {
        return Some(NeighborhoodOutcome::IsolatedR);
    }
    None
}

fn unique_miss_map(g: &Graph, q: &VertexSet, r: &VertexSet) -> Option<BTreeMap<usize, usize>> {
    let mut map = BTreeMap::new();
    let mut hit = VertexSet::new();
    for x in r.iter() {
        let missed = q.difference(g.neighbors(x));
        if missed.len() != 1 {
            return None;
        }
        let y = missed.first()?;
        if !hit.insert(y) {
            return None;
        }
        map.insert(x, y);
    }
    Some(map)
}

/// `set` induces a 5-cycle.
pub(crate) fn is_c5(g: &Graph, set: &VertexSet) -> bool {
    // A 2-regular graph on five vertices is connected.
    set.len() == 5 && set.iter().all(|v| g.neighbors(v).intersection_len(set) == 2)
}

/// `set` induces a path on four vertices.
pub(crate) fn is_p4(g: &Graph, set: &VertexSet) -> bool {
    if set.len() != 4 {
        return false;
    }
    let mut degrees: Vec<usize> = set.iter().map(|v| g.neighbors(v).intersection_len(set)).collect();
    degrees.sort_unstable();
    // Among 4-vertex graphs with three edges only P4 has this sequence.
    degrees == [1, 1, 2, 2]
}

fn closed_neighborhood_witness(g: &Graph, u: usize) -> Option<ForbiddenWitness> {
    let sub = g.induced_subgraph(&g.closed_neighborhood(u)).ok()?;
    let local = is_in_class(&sub.graph).witness()?;
    let map = |v: usize| sub.original[v];
    Some(match local {
        ForbiddenWitness::Claw { center, leaves } => {
            ForbiddenWitness::Claw { center: map(center), leaves: leaves.map(map) }
        }
        ForbiddenWitness::W { a, b, c, d, e } => {
            ForbiddenWitness::W { a: map(a), b: map(b), c: map(c), d: map(d), e: map(e) }
        }
    })
}

/// Maximum clique of `N(u) ∩ within`, for callers working on a prefix of
/// the vertex set.
pub(crate) fn split_neighborhood(g: &Graph, u: usize, within: &VertexSet) -> (VertexSet, VertexSet, VertexSet) {
    let nbrs = g.neighbors(u).intersection(within);
    let q = max_clique_within(g, &nbrs).vertices;
    let r = nbrs.difference(&q);
    (nbrs, q, r)
}
