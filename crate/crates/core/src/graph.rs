//! Immutable simple undirected graphs over dense vertex ids `0..n`, with
//! word-parallel neighbor sets.

use std::fmt;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] accepts.
pub const MAX_VERTICES: usize = 1024;

const WORD_BITS: usize = 64;

/// An ordered set of vertex ids backed by a bitset.
///
/// Iteration is always ascending. Sets of different word lengths compare
/// equal when they hold the same members.
#[derive(Clone, Default)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Empty set with room for ids `0..n` preallocated.
    pub fn with_universe(n: usize) -> Self {
        let mut words = SmallVec::new();
        words.resize(n.div_ceil(WORD_BITS), 0);
        VertexSet { words }
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut set = Self::with_universe(n);
        for (i, w) in set.words.iter_mut().enumerate() {
            let lo = i * WORD_BITS;
            let hi = (lo + WORD_BITS).min(n);
            let bits = hi - lo;
            *w = if bits == WORD_BITS { u64::MAX } else { (1u64 << bits) - 1 };
        }
        set
    }

    pub fn singleton(v: usize) -> Self {
        let mut set = Self::new();
        set.insert(v);
        set
    }

    /// Returns true if `v` was newly inserted.
    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] & (1 << b) != 0;
        self.words[w] |= 1 << b;
        !had
    }

    /// Returns true if `v` was present.
    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        match self.words.get_mut(w) {
            Some(word) => {
                let had = *word & (1 << b) != 0;
                *word &= !(1 << b);
                had
            }
            None => false,
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words.get(v / WORD_BITS).is_some_and(|w| w & (1 << (v % WORD_BITS)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let words = self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect();
        VertexSet { words }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words.iter().zip(other.words.iter()).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (long, short) = if self.words.len() >= other.words.len() { (self, other) } else { (other, self) };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(short.words.iter()) {
            *w |= s;
        }
        VertexSet { words }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        VertexSet { words }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (i, w) in self.words.iter_mut().enumerate() {
            *w &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().enumerate().all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Members strictly greater than `v`.
    pub fn above(&self, v: usize) -> VertexSet {
        let mut out = self.clone();
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        for (i, word) in out.words.iter_mut().enumerate() {
            if i < w {
                *word = 0;
            } else if i == w {
                *word &= if b == WORD_BITS - 1 { 0 } else { !0u64 << (b + 1) };
            }
        }
        out
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn significant_words(&self) -> &[u64] {
        let len = self.words.iter().rposition(|&w| w != 0).map_or(0, |i| i + 1);
        &self.words[..len]
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.significant_words() == other.significant_words()
    }
}

impl Eq for VertexSet {}

impl Hash for VertexSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.significant_words().hash(state);
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order of the ascending member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::new();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// Degrees of every vertex plus the maximum degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
}

/// A simple undirected graph on vertices `0..n`. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse to one.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adjacency = vec![VertexSet::with_universe(n); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if adjacency[u].insert(v) {
                adjacency[v].insert(u);
                edge_count += 1;
            }
        }
        Ok(Graph { adjacency, edge_count })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::new(n, std::iter::empty()).expect("edgeless graph within the vertex cap")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph within the vertex cap")
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::ParamRange(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path within the vertex cap")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    /// `N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.adjacency[v].clone();
        set.insert(v);
        set
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, max_degree }
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| self.adjacency[u].above(u).iter().map(move |v| (u, v)).collect::<Vec<_>>())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.vertex_count() })
        }
    }

    /// The subgraph induced by `subset`. New vertex `i` is the `i`-th smallest
    /// member of `subset`.
    pub fn induced_subgraph(&self, subset: &VertexSet) -> Result<InducedSubgraph> {
        if let Some(v) = subset.iter().find(|&v| v >= self.vertex_count()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.vertex_count() });
        }
        let original: Vec<usize> = subset.to_vec();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in original.iter().enumerate() {
            index[old] = new;
        }
        let edges = original.iter().enumerate().flat_map(|(new_u, &old_u)| {
            self.adjacency[old_u]
                .intersection(subset)
                .above(old_u)
                .iter()
                .map(|old_v| (new_u, index[old_v]))
                .collect::<Vec<_>>()
        });
        let graph = Graph::new(original.len(), edges)?;
        Ok(InducedSubgraph { graph, original })
    }

    pub fn is_clique(&self, subset: &VertexSet) -> bool {
        subset.iter().all(|v| subset.difference(&self.adjacency[v]).len() == 1)
    }

    pub fn is_independent(&self, subset: &VertexSet) -> bool {
        subset.iter().all(|v| self.adjacency[v].intersection_len(subset) == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[new]` is the id of the new vertex in the parent graph.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    /// New id of a parent vertex, if it was kept.
    pub fn new_index(&self, old: usize) -> Option<usize> {
        self.original.binary_search(&old).ok()
    }

    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.original[v]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three_vertices() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degree_profile().degrees, vec![1, 2, 1]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn five_cycle_degrees() {
        let g = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let profile = g.degree_profile();
        assert_eq!(profile.degrees, vec![2; 5]);
        assert_eq!(profile.max_degree, 2);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree_profile().degrees, vec![1, 1, 0, 0]);
    }

    #[test]
    fn self_loop_and_range_errors() {
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop { vertex: 1 })));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
        assert!(matches!(Graph::new(MAX_VERTICES + 1, []), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn empty_graph_has_zero_max_degree() {
        assert_eq!(Graph::empty(0).degree_profile().max_degree, 0);
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = Graph::complete(5);
        let sub = k5.induced_subgraph(&[1, 3, 4].into_iter().collect()).unwrap();
        assert_eq!(sub.graph, Graph::complete(3));
        assert_eq!(sub.original, vec![1, 3, 4]);
        assert_eq!(sub.new_index(3), Some(1));

        let c5 = Graph::cycle(5).unwrap();
        let sub = c5.induced_subgraph(&[0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(sub.graph, Graph::path(3));

        assert!(c5.induced_subgraph(&VertexSet::singleton(9)).is_err());
    }

    #[test]
    fn vertex_set_ops_across_word_boundaries() {
        let a: VertexSet = [1, 63, 64, 200].into_iter().collect();
        let b: VertexSet = [63, 200, 500].into_iter().collect();
        assert_eq!(a.intersection(&b).to_vec(), vec![63, 200]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 63, 64, 200, 500]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 64]);
        assert_eq!(a.above(63).to_vec(), vec![64, 200]);
        assert_eq!(a.above(64).to_vec(), vec![200]);
        assert_eq!(a.first(), Some(1));
        assert_eq!(VertexSet::full(70).len(), 70);
        assert_eq!(VertexSet::full(64).len(), 64);

        let mut c = VertexSet::with_universe(256);
        c.insert(3);
        assert_eq!(c, VertexSet::singleton(3));
    }

    #[test]
    fn edges_are_sorted() {
        let g = Graph::new(4, [(3, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }
}
