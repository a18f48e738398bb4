//! Incremental ω-coloring of in-class graphs.
//!
//! Vertices are inserted one at a time. Each prefix is kept properly colored
//! with `target = ω` colors when its maximum degree is at most `2ω - 3` and
//! `ω + 1` otherwise (ω and Δ of the prefix). A newly inserted vertex `u` is
//! colored by the first rule that succeeds:
//!
//! 1. a color in `1..=target` missing from `N(u)`;
//! 2. a single Kempe interchange that frees a color at `u`;
//! 3. the recoloring moves available when `u` lies on a clique `Q` of size
//!    ω: the unique-miss triple move (two non-adjacent neighbors `x ∈ R`,
//!    `y ∈ Q` take the color of a third vertex `z ∈ Q`) and the maximal
//!    sequence move (walk `v_0 = u, v_1, ..` through `Q`, shift colors along
//!    the walk, possibly after interchanging a two-colored path);
//! 4. an exact `target`-coloring of the whole prefix.
//!
//! Step 4 always exists for in-class graphs, so the output is correct even
//! with steps 2 and 3 disabled. [`RepairTrace`] records which step colored
//! each vertex.

use std::cmp::Reverse;

use serde::Serialize;

use crate::clique::clique_number_within;
use crate::coloring::{k_colorable, Color, Coloring, EXACT_MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::kempe::{component_from, components_in, swap_in_place};
use crate::recognition::{is_in_class, outcome_for_split, split_neighborhood, Membership, NeighborhoodOutcome};

/// True when `Δ ≤ 2ω − 3`. The null graph satisfies it vacuously.
pub fn theorem_bound_holds(n: usize, delta: usize, omega: usize) -> bool {
    n == 0 || delta + 3 <= 2 * omega
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InsertionOrder {
    #[default]
    Ascending,
    /// Descending degree, ties by index.
    DescendingDegree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorerConfig {
    pub order: InsertionOrder,
    pub kempe_repair: bool,
    pub proof_moves: bool,
    /// Re-verify every prefix coloring after each insertion.
    pub check_prefixes: bool,
}

impl Default for ColorerConfig {
    fn default() -> Self {
        ColorerConfig { order: InsertionOrder::Ascending, kempe_repair: true, proof_moves: true, check_prefixes: false }
    }
}

impl ColorerConfig {
    /// Exact fallback only.
    pub fn fallback_only() -> Self {
        ColorerConfig { kempe_repair: false, proof_moves: false, ..Self::default() }
    }
}

/// Which sub-move of the unique-miss case fired. `x ∈ R` carries a color
/// absent from `Q`, `y ∈ Q` is the vertex `x` misses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UniqueMissStep {
    /// `y` takes the color of `x`, `u` takes the old color of `y`.
    RecolorMissed,
    /// `x` takes the color of `y`, `u` takes the old color of `x`.
    RecolorOutsider,
    /// `x` and `y` take the color of `z`, `z` takes `alpha`, `u` takes the
    /// other of the two freed colors.
    Triple { z: usize, alpha: Color },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniqueMissMove {
    pub x: usize,
    pub y: usize,
    pub step: UniqueMissStep,
}

/// Colors were shifted along `sequence` (`v_0 = u` first): each `v_j`
/// before `shift_end` took the old color of `v_{j+1}` and
/// `sequence[shift_end]` took `new_color`, after optionally interchanging
/// the two colors on `interchanged`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceMove {
    pub sequence: Vec<usize>,
    pub shift_end: usize,
    pub new_color: Color,
    pub interchanged: Option<(Vec<usize>, (Color, Color))>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mechanism", rename_all = "snake_case")]
pub enum Mechanism {
    FreeColor,
    KempeSwap { pair: (Color, Color), component: Vec<usize> },
    UniqueMiss(UniqueMissMove),
    Sequence(SequenceMove),
    ExactFallback { target: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub vertex: usize,
    pub target: usize,
    #[serde(flatten)]
    pub mechanism: Mechanism,
}

/// How each vertex got its color. Counts are aggregates of `log`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RepairTrace {
    pub free_colorings: usize,
    pub kempe_swaps: usize,
    pub case11_moves: usize,
    pub case12_moves: usize,
    pub exact_fallbacks: usize,
    pub log: Vec<TraceEntry>,
}

impl RepairTrace {
    fn record(&mut self, vertex: usize, target: usize, mechanism: Mechanism) {
        match mechanism {
            Mechanism::FreeColor => self.free_colorings += 1,
            Mechanism::KempeSwap { .. } => self.kempe_swaps += 1,
            Mechanism::UniqueMiss(_) => self.case11_moves += 1,
            Mechanism::Sequence(_) => self.case12_moves += 1,
            Mechanism::ExactFallback { .. } => self.exact_fallbacks += 1,
        }
        self.log.push(TraceEntry { vertex, target, mechanism });
    }

    /// Whether the counters agree with the log.
    pub fn is_consistent(&self) -> bool {
        let mut fresh = RepairTrace::default();
        for e in &self.log {
            fresh.record(e.vertex, e.target, e.mechanism.clone());
        }
        fresh == *self
    }
}

/// An ω-coloring of an in-class graph with `Δ ≤ 2ω − 3`.
pub fn omega_color_strict(g: &Graph) -> Result<(Coloring, RepairTrace)> {
    ConstructiveColorer::default().color_strict(g)
}

/// A coloring with ω colors when `Δ ≤ 2ω − 3` and at most ω + 1 otherwise.
pub fn class_color(g: &Graph) -> Result<(Coloring, RepairTrace)> {
    ConstructiveColorer::default().color_class(g)
}

#[derive(Clone, Debug, Default)]
pub struct ConstructiveColorer {
    pub config: ColorerConfig,
}

impl ConstructiveColorer {
    pub fn new(config: ColorerConfig) -> Self {
        ConstructiveColorer { config }
    }

    pub fn color_strict(&self, g: &Graph) -> Result<(Coloring, RepairTrace)> {
        check_scale(g)?;
        if let Membership::Excluded(w) = is_in_class(g) {
            return Err(Error::NotInClass(w));
        }
        let delta = g.max_degree();
        let omega = crate::clique::omega(g);
        if !theorem_bound_holds(g.vertex_count(), delta, omega) {
            return Err(Error::BoundViolated { delta, omega });
        }
        self.color_unchecked(g)
    }

    pub fn color_class(&self, g: &Graph) -> Result<(Coloring, RepairTrace)> {
        check_scale(g)?;
        if let Membership::Excluded(w) = is_in_class(g) {
            return Err(Error::NotInClass(w));
        }
        self.color_unchecked(g)
    }

    /// Runs the pipeline without the membership check. Only meaningful on
    /// in-class graphs; fails with [`Error::ClaimViolation`] if some prefix
    /// has no coloring with its target number of colors.
    pub(crate) fn color_unchecked(&self, g: &Graph) -> Result<(Coloring, RepairTrace)> {
        check_scale(g)?;
        let mut order: Vec<usize> = g.vertices().collect();
        if self.config.order == InsertionOrder::DescendingDegree {
            order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
        }
        let mut state = PrefixState::new(g);
        let mut trace = RepairTrace::default();
        for &u in &order {
            let target = state.insert(u);
            let mechanism = self.color_vertex(&mut state, u, target)?;
            trace.record(u, target, mechanism);
            if self.config.check_prefixes {
                state.check_proper(target)?;
            }
        }
        Ok((Coloring::from_assignment(state.colors).canonical(), trace))
    }

    fn color_vertex(&self, state: &mut PrefixState<'_>, u: usize, target: usize) -> Result<Mechanism> {
        if let Some(c) = state.free_color(u, target) {
            state.colors[u] = c;
            return Ok(Mechanism::FreeColor);
        }
        if self.config.kempe_repair {
            if let Some(m) = state.kempe_repair(u, target) {
                return Ok(m);
            }
        }
        if self.config.proof_moves {
            if let Some(m) = state.proof_moves(u, target) {
                return Ok(m);
            }
        }
        state.exact_recolor(target)?;
        Ok(Mechanism::ExactFallback { target })
    }
}

fn check_scale(g: &Graph) -> Result<()> {
    let n = g.vertex_count();
    if n > EXACT_MAX_VERTICES {
        return Err(Error::ScaleExceeded { n, max: EXACT_MAX_VERTICES });
    }
    Ok(())
}

/// The inserted prefix, its coloring (0 = uncolored), and its ω and Δ.
struct PrefixState<'g> {
    g: &'g Graph,
    colors: Vec<Color>,
    inserted: VertexSet,
    degree: Vec<usize>,
    delta: usize,
    omega: usize,
}

impl<'g> PrefixState<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        PrefixState {
            g,
            colors: vec![0; n],
            inserted: VertexSet::with_universe(n),
            degree: vec![0; n],
            delta: 0,
            omega: 0,
        }
    }

    /// Adds `u` to the prefix and returns the prefix's color target.
    fn insert(&mut self, u: usize) -> usize {
        let nbrs = self.g.neighbors(u).intersection(&self.inserted);
        self.inserted.insert(u);
        self.degree[u] = nbrs.len();
        for w in nbrs.iter() {
            self.degree[w] += 1;
            self.delta = self.delta.max(self.degree[w]);
        }
        self.delta = self.delta.max(self.degree[u]);
        // ω only grows through cliques containing the new vertex.
        self.omega = self.omega.max(1 + clique_number_within(self.g, &nbrs));
        if theorem_bound_holds(self.inserted.len(), self.delta, self.omega) {
            self.omega
        } else {
            self.omega + 1
        }
    }

    fn prefix_neighbors(&self, v: usize) -> VertexSet {
        self.g.neighbors(v).intersection(&self.inserted)
    }

    fn used_colors(colors: &[Color], set: &VertexSet, target: usize) -> Vec<bool> {
        let mut used = vec![false; target + 1];
        for w in set.iter() {
            let c = colors[w] as usize;
            if c != 0 && c <= target {
                used[c] = true;
            }
        }
        used
    }

    fn least_free(colors: &[Color], set: &VertexSet, target: usize) -> Option<Color> {
        let used = Self::used_colors(colors, set, target);
        (1..=target).find(|&c| !used[c]).map(|c| c as Color)
    }

    fn free_color(&self, u: usize, target: usize) -> Option<Color> {
        Self::least_free(&self.colors, &self.prefix_neighbors(u), target)
    }

    /// Color pairs in lexicographic order, components by least vertex; the
    /// first interchange that frees a color at `u` wins.
    fn kempe_repair(&mut self, u: usize, target: usize) -> Option<Mechanism> {
        let nbrs = self.prefix_neighbors(u);
        for a in 1..=target as Color {
            for b in a + 1..=target as Color {
                for comp in components_in(self.g, &self.colors, a, b) {
                    if comp.intersection_len(&nbrs) == 0 {
                        continue;
                    }
                    let mut trial = self.colors.clone();
                    swap_in_place(&mut trial, &comp, a, b);
                    if let Some(c) = Self::least_free(&trial, &nbrs, target) {
                        trial[u] = c;
                        self.colors = trial;
                        return Some(Mechanism::KempeSwap { pair: (a, b), component: comp.to_vec() });
                    }
                }
            }
        }
        None
    }

    /// Commits `trial` if every vertex in `changed` has a color in
    /// `1..=target` that no colored neighbor shares.
    fn try_commit(&mut self, trial: Vec<Color>, changed: &VertexSet, target: usize) -> bool {
        let ok = changed.iter().all(|v| {
            let c = trial[v];
            c != 0 && c as usize <= target && self.g.neighbors(v).iter().all(|w| trial[w] != c)
        });
        if ok {
            self.colors = trial;
        }
        ok
    }

    fn try_recolor(&mut self, changes: &[(usize, Color)], target: usize) -> bool {
        let mut trial = self.colors.clone();
        let mut changed = VertexSet::new();
        for &(v, c) in changes {
            trial[v] = c;
            changed.insert(v);
        }
        self.try_commit(trial, &changed, target)
    }

    /// The recoloring moves for a vertex on a clique of size ω, chosen by
    /// the shape of its neighborhood.
    fn proof_moves(&mut self, u: usize, target: usize) -> Option<Mechanism> {
        let (nbrs, q, r) = split_neighborhood(self.g, u, &self.inserted);
        if q.len() + 1 != self.omega {
            return None;
        }
        match outcome_for_split(self.g, &nbrs, &q, &r)? {
            NeighborhoodOutcome::UniqueMiss(map) => self.unique_miss_move(u, &q, &r, &map, target),
            NeighborhoodOutcome::IsolatedR => self.sequence_move(u, &q, target),
            _ => None,
        }
    }

    fn unique_miss_move(
        &mut self,
        u: usize,
        q: &VertexSet,
        r: &VertexSet,
        map: &std::collections::BTreeMap<usize, usize>,
        target: usize,
    ) -> Option<Mechanism> {
        let in_q = Self::used_colors(&self.colors, q, target);
        let in_r = Self::used_colors(&self.colors, r, target);
        for (&x, &y) in map {
            let cx = self.colors[x];
            if in_q[cx as usize] {
                continue;
            }
            let cy = self.colors[y];
            let found = |step| Some(Mechanism::UniqueMiss(UniqueMissMove { x, y, step }));
            if self.try_recolor(&[(y, cx), (u, cy)], target) {
                return found(UniqueMissStep::RecolorMissed);
            }
            if self.try_recolor(&[(x, cy), (u, cx)], target) {
                return found(UniqueMissStep::RecolorOutsider);
            }
            for z in q.iter().filter(|&z| z != y) {
                let cz = self.colors[z];
                if in_r[cz as usize] {
                    continue;
                }
                for (alpha, other) in [(cy, cx), (cx, cy)] {
                    if self.try_recolor(&[(x, cz), (y, cz), (z, alpha), (u, other)], target) {
                        return found(UniqueMissStep::Triple { z, alpha });
                    }
                }
            }
        }
        None
    }

    /// Builds a maximal sequence `v_0 = u, v_1, ..` of clique vertices where
    /// the color of `v_{i+1}` is absent from `N(v_i) − Q`, then tries to
    /// shift colors down the sequence.
    fn sequence_move(&mut self, u: usize, q: &VertexSet, target: usize) -> Option<Mechanism> {
        let mut clique = q.clone();
        clique.insert(u);
        let q_colors = Self::used_colors(&self.colors, q, target);
        let holder_of = |colors: &[Color], c: Color| q.iter().find(|&w| colors[w] == c);

        let mut seq = vec![u];
        loop {
            let v = *seq.last().expect("sequence starts at u");
            let outside = self.prefix_neighbors(v).difference(&clique);
            let out_used = Self::used_colors(&self.colors, &outside, target);
            let mut extension = None;
            for c in 1..=target as Color {
                if c == self.colors[v] || out_used[c as usize] {
                    continue;
                }
                if !q_colors[c as usize] {
                    if let Some(m) = self.shift(&seq, seq.len() - 1, c, None, target) {
                        return Some(m);
                    }
                    continue;
                }
                let w = holder_of(&self.colors, c).expect("color is present on Q");
                if extension.is_none() && !seq.contains(&w) {
                    extension = Some(w);
                }
            }
            match extension {
                Some(w) => seq.push(w),
                None => break,
            }
        }
        let k = seq.len() - 1;
        if k == 0 {
            return None;
        }

        let last_outside = self.prefix_neighbors(seq[k]).difference(&clique);
        let last_used = Self::used_colors(&self.colors, &last_outside, target);
        for d in (1..=target as Color).filter(|&d| !q_colors[d as usize]) {
            // A sequence vertex with no d-neighbor takes d directly.
            for i in 1..=k {
                if let Some(m) = self.shift(&seq, i, d, None, target) {
                    return Some(m);
                }
            }
            // v_{t+1} = seq[s] with its color free at the last vertex.
            for s in 1..k {
                let a = self.colors[seq[s]];
                if last_used[a as usize] {
                    continue;
                }
                let through_next = component_from(self.g, &self.colors, seq[s], d, a);
                if let Some(m) = self.shift(&seq, s - 1, a, Some((through_next, (d, a))), target) {
                    return Some(m);
                }
                let d_neighbors: Vec<usize> = last_outside.iter().filter(|&w| self.colors[w] == d).collect();
                for w in d_neighbors {
                    let chain = component_from(self.g, &self.colors, w, d, a);
                    if chain.contains(seq[s]) {
                        continue;
                    }
                    if let Some(m) = self.shift(&seq, k, d, Some((chain, (d, a))), target) {
                        return Some(m);
                    }
                }
            }
        }
        None
    }

    /// Optionally interchanges a two-colored component, then gives each
    /// `seq[j]` (`j < end`) the old color of `seq[j+1]` and `seq[end]` the
    /// color `new_color`.
    fn shift(
        &mut self,
        seq: &[usize],
        end: usize,
        new_color: Color,
        interchange: Option<(VertexSet, (Color, Color))>,
        target: usize,
    ) -> Option<Mechanism> {
        let mut trial = self.colors.clone();
        let mut changed = VertexSet::new();
        if let Some((comp, (a, b))) = &interchange {
            swap_in_place(&mut trial, comp, *a, *b);
            changed = comp.clone();
        }
        for j in 0..end {
            trial[seq[j]] = self.colors[seq[j + 1]];
            changed.insert(seq[j]);
        }
        trial[seq[end]] = new_color;
        changed.insert(seq[end]);
        if !self.try_commit(trial, &changed, target) {
            return None;
        }
        Some(Mechanism::Sequence(SequenceMove {
            sequence: seq.to_vec(),
            shift_end: end,
            new_color,
            interchanged: interchange.map(|(comp, pair)| (comp.to_vec(), pair)),
        }))
    }

    fn exact_recolor(&mut self, target: usize) -> Result<()> {
        let sub = self.g.induced_subgraph(&self.inserted)?;
        let coloring = k_colorable(&sub.graph, target).ok_or_else(|| {
            Error::ClaimViolation(format!(
                "prefix on {} vertices has no {target}-coloring (omega {}, max degree {})",
                sub.graph.vertex_count(),
                self.omega,
                self.delta
            ))
        })?;
        for (new, &old) in sub.original.iter().enumerate() {
            self.colors[old] = coloring.color(new);
        }
        Ok(())
    }

    fn check_proper(&self, target: usize) -> Result<()> {
        for v in self.inserted.iter() {
            let c = self.colors[v];
            if c == 0 || c as usize > target {
                return Err(Error::ClaimViolation(format!("prefix vertex {v} has color {c} outside 1..={target}")));
            }
            if let Some(w) = self.prefix_neighbors(v).iter().find(|&w| self.colors[w] == c) {
                return Err(Error::ClaimViolation(format!("prefix edge {v}-{w} is monochromatic")));
            }
        }
        Ok(())
    }
}
