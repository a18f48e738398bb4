//! Exact maximum cliques: branch and bound with greedy-coloring upper bounds.
//!
//! Every returned clique is the lexicographically least (as an ascending
//! vertex list) among the maximum cliques of the searched region, so callers
//! get reproducible answers independent of search order.

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// A clique together with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub vertices: VertexSet,
    pub size: usize,
}

impl CliqueResult {
    fn from_set(vertices: VertexSet) -> Self {
        let size = vertices.len();
        CliqueResult { vertices, size }
    }
}

/// Lexicographically least maximum clique of `g`.
pub fn max_clique(g: &Graph) -> CliqueResult {
    max_clique_within(g, &g.all_vertices())
}

/// Clique number. 0 for the empty graph.
pub fn omega(g: &Graph) -> usize {
    clique_number_within(g, &g.all_vertices())
}

/// Maximum clique of the subgraph induced by `N(u)`.
pub fn max_clique_in_neighborhood(g: &Graph, u: usize) -> Result<CliqueResult> {
    g.check_vertex(u)?;
    Ok(max_clique_within(g, g.neighbors(u)))
}

/// Maximum clique among those containing `u`.
pub fn max_clique_through(g: &Graph, u: usize) -> Result<CliqueResult> {
    let mut q = max_clique_in_neighborhood(g, u)?.vertices;
    q.insert(u);
    Ok(CliqueResult::from_set(q))
}

/// Size of the largest clique inside `candidates`.
pub fn clique_number_within(g: &Graph, candidates: &VertexSet) -> usize {
    let mut search = Search::new(g, 0, usize::MAX);
    search.run(candidates.clone());
    search.best
}

/// Whether `candidates` contains a clique on `k` vertices.
pub fn has_clique_of_size(g: &Graph, candidates: &VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if candidates.len() < k {
        return false;
    }
    let mut search = Search::new(g, k - 1, k);
    search.run(candidates.clone());
    search.best >= k
}

/// Lexicographically least maximum clique inside `candidates`.
pub fn max_clique_within(g: &Graph, candidates: &VertexSet) -> CliqueResult {
    let target = clique_number_within(g, candidates);
    let mut chosen = VertexSet::new();
    let mut pool = candidates.clone();
    let mut need = target;
    for v in candidates.iter() {
        if need == 0 {
            break;
        }
        if !pool.contains(v) {
            continue;
        }
        // Vertices below v were already rejected as the next member.
        let rest = pool.above(v).intersection(g.neighbors(v));
        if has_clique_of_size(g, &rest, need - 1) {
            chosen.insert(v);
            pool = rest;
            need -= 1;
        }
    }
    debug_assert_eq!(need, 0);
    CliqueResult::from_set(chosen)
}

/// Every maximum clique inside `candidates`, in ascending lexicographic order.
pub fn maximum_cliques_within(g: &Graph, candidates: &VertexSet) -> Vec<VertexSet> {
    let target = clique_number_within(g, candidates);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(target);
    enumerate_cliques(g, &mut current, candidates.clone(), target, &mut out);
    out
}

fn enumerate_cliques(g: &Graph, current: &mut Vec<usize>, pool: VertexSet, target: usize, out: &mut Vec<VertexSet>) {
    if current.len() == target {
        out.push(current.iter().copied().collect());
        return;
    }
    if current.len() + pool.len() < target {
        return;
    }
    for v in pool.iter() {
        let next = pool.above(v).intersection(g.neighbors(v));
        if current.len() + 1 + next.len() < target {
            continue;
        }
        current.push(v);
        enumerate_cliques(g, current, next, target, out);
        current.pop();
    }
}

/// Tomita-style search. Candidates are colored greedily in descending-degree
/// order (ties by index) and expanded from the highest color class down.
struct Search<'g> {
    g: &'g Graph,
    best: usize,
    stop_at: usize,
    depth: usize,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, floor: usize, stop_at: usize) -> Self {
        Search { g, best: floor, stop_at, depth: 0 }
    }

    fn run(&mut self, candidates: VertexSet) {
        if candidates.is_empty() {
            return;
        }
        self.best = self.best.max(1);
        if self.best >= self.stop_at {
            return;
        }
        self.expand(candidates);
    }

    fn expand(&mut self, mut candidates: VertexSet) {
        let (order, bounds) = self.color_sort(&candidates);
        for i in (0..order.len()).rev() {
            if self.depth + bounds[i] <= self.best || self.best >= self.stop_at {
                return;
            }
            let v = order[i];
            let next = candidates.intersection(self.g.neighbors(v));
            self.depth += 1;
            if next.is_empty() {
                self.best = self.best.max(self.depth);
            } else {
                self.expand(next);
            }
            self.depth -= 1;
            candidates.remove(v);
        }
    }

    /// Returns candidates grouped by greedy color class, with the class index
    /// (an upper bound on the clique size among that prefix) per vertex.
    fn color_sort(&self, candidates: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let g = self.g;
        let mut remaining: Vec<usize> = candidates.to_vec();
        remaining.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut order = Vec::with_capacity(remaining.len());
        let mut bounds = Vec::with_capacity(remaining.len());
        let mut color = 0;
        while !remaining.is_empty() {
            color += 1;
            let mut class = VertexSet::new();
            remaining.retain(|&v| {
                if g.neighbors(v).intersection_len(&class) == 0 {
                    class.insert(v);
                    order.push(v);
                    bounds.push(color);
                    false
                } else {
                    true
                }
            });
        }
        (order, bounds)
    }
}
