//! Graph families: wheels, blown-up odd cycles, line graphs, seeded random
//! in-class samples and exhaustive labeled enumeration.
//!
//! All randomness comes from SplitMix64. An edge `{i, j}` (visited in
//! ascending lexicographic order of `(i, j)`, `i < j`) is present when the
//! next output, shifted right by 11 and scaled by 2^-53, is below `p`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::recognition::is_in_class;

/// Largest `n` for exhaustive labeled enumeration.
pub const ENUMERATION_MAX_VERTICES: usize = 7;

/// Hub `0` joined to the rim cycle `1..=k`. `wheel(5)` is the 6-vertex W6.
pub fn wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::ParamRange(format!("wheel rim needs at least 3 vertices, got {k}")));
    }
    let spokes = (1..=k).map(|i| (0, i));
    let rim = (1..=k).map(|i| (i, i % k + 1));
    Graph::new(k + 1, spokes.chain(rim))
}

/// `C_{2n+1}` with the positions `1, 3, .., 2n-1` each replaced by a clique
/// on `m` vertices, completely joined to both neighboring positions.
///
/// Vertices are numbered position by position. The result has
/// `(2n+1) + (m-1)·n` vertices, `ω = m+1`, `Δ = 2m` and `χ = m+2`.
pub fn blown_up_odd_cycle(n: usize, m: usize) -> Result<Graph> {
    if n < 2 || m < 1 {
        return Err(Error::ParamRange(format!("blow-up needs n >= 2 and m >= 1, got n = {n}, m = {m}")));
    }
    let positions = 2 * n + 1;
    let mut blocks: Vec<std::ops::Range<usize>> = Vec::with_capacity(positions);
    let mut next = 0;
    for p in 1..=positions {
        let size = if p % 2 == 1 && p < 2 * n { m } else { 1 };
        blocks.push(next..next + size);
        next += size;
    }
    let mut edges = Vec::new();
    for (i, block) in blocks.iter().enumerate() {
        for u in block.clone() {
            edges.extend((u + 1..block.end).map(|v| (u, v)));
            let following = &blocks[(i + 1) % positions];
            edges.extend(following.clone().map(|v| (u, v)));
        }
    }
    Graph::new(next, edges)
}

/// Line graph of `h`: one vertex per edge of `h` (in `h.edges()` order),
/// adjacent when the edges share an endpoint.
pub fn line_graph(h: &Graph) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.vertex_count()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        incident[a].push(i);
        incident[b].push(i);
    }
    let pairs = incident
        .iter()
        .flat_map(|list| list.iter().enumerate().flat_map(move |(k, &x)| list[k + 1..].iter().map(move |&y| (x, y))))
        .collect::<Vec<_>>();
    Graph::new(edges.len(), pairs)
}

/// Line graph of the simple graph on `n` vertices with the given edges.
pub fn line_graph_of_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    line_graph(&Graph::new(n, edges.iter().copied())?)
}

/// A deterministic G(n, p) draw from `rng`.
pub fn random_gnp(n: usize, p: f64, rng: &mut SplitMix64) -> Result<Graph> {
    check_probability(p)?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if unit_interval(rng) < p {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

/// First G(n, p) draw that is in the class, or `None` after `max_tries`.
pub fn random_in_class(n: usize, p: f64, seed: u64, max_tries: usize) -> Result<Option<Graph>> {
    check_probability(p)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    for _ in 0..max_tries {
        let g = random_gnp(n, p, &mut rng)?;
        if is_in_class(&g).is_in_class() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Uniform draw from `[0, 1)` with 53 bits of precision.
pub fn unit_interval(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::ParamRange(format!("edge probability {p} is outside [0, 1]")))
    }
}

/// Number of vertex pairs, i.e. the bit width of a labeled-graph mask.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The labeled graph whose edge set is `mask`: bit `k` stands for the `k`-th
/// pair in the order `(0,1), (0,2), .., (0,n-1), (1,2), ..`.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    debug_assert!(n <= 11);
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("pairs are in range and loop-free")
}

/// Every labeled graph on `n` vertices in ascending mask order.
pub fn all_labeled(n: usize) -> Result<LabeledGraphs> {
    if n > ENUMERATION_MAX_VERTICES {
        return Err(Error::ScaleExceeded { n, max: ENUMERATION_MAX_VERTICES });
    }
    Ok(LabeledGraphs { n, next: 0, end: 1u64 << pair_count(n) })
}

/// Labeled graphs on `n` vertices that pass `predicate`.
pub fn enumerate_labeled<P>(n: usize, mut predicate: P) -> Result<impl Iterator<Item = Graph>>
where
    P: FnMut(&Graph) -> bool,
{
    Ok(all_labeled(n)?.filter(move |g| predicate(g)))
}

#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = labeled_graph(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// Outer 5-cycle `0..5`, spokes `i – i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen graph is valid")
}

/// Where a line graph's underlying graph comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum LineSource {
    Spec(Box<GenSpec>),
    Edges { n: usize, edges: Vec<(usize, usize)> },
}

/// A named graph family with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    Wheel(usize),
    BlowupOddCycle { n: usize, m: usize },
    LineGraphOf(LineSource),
    RandomInClass { n: usize, edge_prob: f64, seed: u64, max_tries: usize },
    AllLabeled(usize),
}

impl GenSpec {
    /// Graphs of the family. Single-graph families yield one graph, or none
    /// when a random search gives up.
    pub fn graphs(&self) -> Result<Box<dyn Iterator<Item = Graph>>> {
        let single = |g: Option<Graph>| -> Box<dyn Iterator<Item = Graph>> { Box::new(g.into_iter()) };
        Ok(match self {
            GenSpec::Wheel(k) => single(Some(wheel(*k)?)),
            GenSpec::BlowupOddCycle { n, m } => single(Some(blown_up_odd_cycle(*n, *m)?)),
            GenSpec::LineGraphOf(LineSource::Edges { n, edges }) => single(Some(line_graph_of_edges(*n, edges)?)),
            GenSpec::LineGraphOf(LineSource::Spec(inner)) => {
                let sources: Vec<Graph> = inner.graphs()?.collect();
                let lines = sources.iter().map(line_graph).collect::<Result<Vec<_>>>()?;
                Box::new(lines.into_iter())
            }
            GenSpec::RandomInClass { n, edge_prob, seed, max_tries } => {
                single(random_in_class(*n, *edge_prob, *seed, *max_tries)?)
            }
            GenSpec::AllLabeled(n) => Box::new(all_labeled(*n)?),
        })
    }
}
