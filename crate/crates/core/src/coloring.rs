//! Colorings, properness checks, DSATUR, and the exact chromatic-number
//! oracle.

use serde::Serialize;

use crate::clique::max_clique;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A color id. Colors start at 1; 0 marks an uncolored vertex.
pub type Color = u32;

/// Largest graph the exact oracle accepts.
pub const EXACT_MAX_VERTICES: usize = 64;

/// A vertex → color assignment.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    assignment: Vec<Color>,
    colors_used: usize,
}

impl Coloring {
    pub fn from_assignment(assignment: Vec<Color>) -> Self {
        let colors_used = count_distinct(&assignment);
        Coloring { assignment, colors_used }
    }

    pub fn assignment(&self) -> &[Color] {
        &self.assignment
    }

    pub fn into_assignment(self) -> Vec<Color> {
        self.assignment
    }

    pub fn color(&self, v: usize) -> Color {
        self.assignment[v]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Number of distinct colors present.
    pub fn colors_used(&self) -> usize {
        self.colors_used
    }

    pub fn max_color(&self) -> Color {
        self.assignment.iter().copied().max().unwrap_or(0)
    }

    /// Vertices carrying `color`.
    pub fn class(&self, color: Color) -> VertexSet {
        self.assignment.iter().enumerate().filter(|&(_, &c)| c == color).map(|(v, _)| v).collect()
    }

    /// Renumbers colors by first occurrence in vertex order.
    pub fn canonical(&self) -> Coloring {
        Coloring::from_assignment(canonical_relabel(&self.assignment))
    }

    pub fn is_canonical(&self) -> bool {
        canonical_relabel(&self.assignment) == self.assignment
    }
}

fn count_distinct(assignment: &[Color]) -> usize {
    let mut seen: Vec<Color> = assignment.iter().copied().filter(|&c| c != 0).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

pub(crate) fn canonical_relabel(assignment: &[Color]) -> Vec<Color> {
    let mut map: Vec<(Color, Color)> = Vec::new();
    assignment
        .iter()
        .map(|&c| {
            if c == 0 {
                return 0;
            }
            match map.iter().find(|(old, _)| *old == c) {
                Some(&(_, new)) => new,
                None => {
                    let new = map.len() as Color + 1;
                    map.push((c, new));
                    new
                }
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Properness {
    Proper,
    /// Least monochromatic edge `(u, v)`, `u < v`.
    Improper(usize, usize),
}

pub fn verify_proper(g: &Graph, c: &Coloring) -> Result<Properness> {
    if c.len() != g.vertex_count() {
        return Err(Error::ColoringLength { len: c.len(), n: g.vertex_count() });
    }
    if let Some(v) = c.assignment.iter().position(|&x| x == 0) {
        return Err(Error::PartialColoring { vertex: v });
    }
    Ok(g.edges()
        .find(|&(u, v)| c.color(u) == c.color(v))
        .map_or(Properness::Proper, |(u, v)| Properness::Improper(u, v)))
}

/// DSATUR: repeatedly colors the uncolored vertex with the most distinct
/// neighbor colors (ties by degree, then lowest index) with its least free
/// color. Output is canonically relabeled.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut state = SaturationState::new(g, n.max(1));
    while let Some(v) = state.pick() {
        let c = (1..).find(|&c| state.is_free(v, c)).expect("some color is free");
        state.assign(v, c);
    }
    Coloring::from_assignment(canonical_relabel(&state.colors))
}

/// A proper coloring with at most `k` colors, if one exists.
///
/// Backtracking over DSATUR order. A maximum clique is precolored `1..ω`
/// and new colors are only opened one at a time, which removes color
/// permutation symmetry.
pub fn k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Coloring::from_assignment(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let clique = max_clique(g);
    if clique.size > k {
        return None;
    }
    let mut state = SaturationState::new(g, k);
    for (i, v) in clique.vertices.iter().enumerate() {
        state.assign(v, i as Color + 1);
    }
    let opened = clique.size as Color;
    if backtrack(&mut state, k as Color, opened) {
        Some(Coloring::from_assignment(canonical_relabel(&state.colors)))
    } else {
        None
    }
}

fn backtrack(state: &mut SaturationState<'_>, k: Color, opened: Color) -> bool {
    let Some(v) = state.pick() else {
        return true;
    };
    let limit = k.min(opened + 1);
    for c in 1..=limit {
        if !state.is_free(v, c) {
            continue;
        }
        state.assign(v, c);
        if backtrack(state, k, opened.max(c)) {
            return true;
        }
        state.unassign(v);
    }
    false
}

/// Chromatic number with a witness coloring.
///
/// Tries `k = ω, ω+1, ..` below the DSATUR count; DSATUR's coloring is the
/// witness when no smaller `k` works.
pub fn exact_chromatic(g: &Graph) -> Result<(usize, Coloring)> {
    let n = g.vertex_count();
    if n > EXACT_MAX_VERTICES {
        return Err(Error::ScaleExceeded { n, max: EXACT_MAX_VERTICES });
    }
    if n == 0 {
        return Ok((0, Coloring::from_assignment(Vec::new())));
    }
    let greedy = dsatur_greedy(g);
    let lower = crate::clique::omega(g);
    for k in lower..greedy.colors_used() {
        if let Some(c) = k_colorable(g, k) {
            return Ok((k, c));
        }
    }
    Ok((greedy.colors_used(), greedy))
}

/// Incremental saturation bookkeeping shared by DSATUR and the exact search.
struct SaturationState<'g> {
    g: &'g Graph,
    colors: Vec<Color>,
    /// `counts[v * stride + c]`: neighbors of `v` colored `c`.
    counts: Vec<u32>,
    saturation: Vec<usize>,
    stride: usize,
}

impl<'g> SaturationState<'g> {
    fn new(g: &'g Graph, max_color: usize) -> Self {
        let n = g.vertex_count();
        // DSATUR never needs more than Δ + 1 colors.
        let stride = max_color.max(g.max_degree() + 1) + 1;
        SaturationState { g, colors: vec![0; n], counts: vec![0; n * stride], saturation: vec![0; n], stride }
    }

    fn is_free(&self, v: usize, c: Color) -> bool {
        self.counts[v * self.stride + c as usize] == 0
    }

    fn assign(&mut self, v: usize, c: Color) {
        self.colors[v] = c;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.counts[w * self.stride + c as usize];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.counts[w * self.stride + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{blown_up_odd_cycle, petersen, wheel};

    #[test]
    fn proper_and_improper() {
        let k2 = Graph::complete(2);
        let good = Coloring::from_assignment(vec![1, 2]);
        let bad = Coloring::from_assignment(vec![1, 1]);
        assert_eq!(verify_proper(&k2, &good).unwrap(), Properness::Proper);
        assert_eq!(verify_proper(&k2, &bad).unwrap(), Properness::Improper(0, 1));
        assert!(matches!(
            verify_proper(&k2, &Coloring::from_assignment(vec![1, 0])),
            Err(Error::PartialColoring { vertex: 1 })
        ));
        assert!(matches!(verify_proper(&k2, &Coloring::from_assignment(vec![1])), Err(Error::ColoringLength { .. })));
    }

    #[test]
    fn dsatur_counts() {
        assert_eq!(dsatur_greedy(&Graph::complete(4)).colors_used(), 4);
        assert_eq!(dsatur_greedy(&Graph::cycle(6).unwrap()).colors_used(), 2);
        assert_eq!(dsatur_greedy(&Graph::cycle(5).unwrap()).colors_used(), 3);
        assert!(dsatur_greedy(&Graph::cycle(7).unwrap()).is_canonical());
    }

    #[test]
    fn k_colorable_decisions() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(k_colorable(&c5, 2).is_none());
        let three = k_colorable(&c5, 3).unwrap();
        assert_eq!(verify_proper(&c5, &three).unwrap(), Properness::Proper);
        assert!(k_colorable(&wheel(5).unwrap(), 3).is_none());
        assert!(k_colorable(&Graph::empty(0), 0).is_some());
        assert!(k_colorable(&Graph::empty(1), 0).is_none());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(exact_chromatic(&wheel(5).unwrap()).unwrap().0, 4);
        assert_eq!(exact_chromatic(&blown_up_odd_cycle(2, 2).unwrap()).unwrap().0, 4);
        assert_eq!(exact_chromatic(&Graph::complete(4)).unwrap().0, 4);
        assert_eq!(exact_chromatic(&petersen()).unwrap().0, 3);
        let (chi, witness) = exact_chromatic(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(chi, 3);
        assert!(witness.is_canonical());
        assert_eq!(verify_proper(&Graph::cycle(5).unwrap(), &witness).unwrap(), Properness::Proper);
    }

    #[test]
    fn oracle_scale_limit() {
        assert!(matches!(exact_chromatic(&Graph::empty(65)), Err(Error::ScaleExceeded { n: 65, max: 64 })));
    }

    #[test]
    fn canonical_relabeling() {
        let c = Coloring::from_assignment(vec![3, 1, 3, 2]);
        assert_eq!(c.canonical().assignment(), &[1, 2, 1, 3]);
        assert_eq!(c.colors_used(), 3);
    }
}
