//! Two-color (Kempe) components: extraction, shape classification, and
//! color interchange.

use std::collections::VecDeque;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentShape {
    Path,
    Cycle,
    /// Neither; carries the least vertex of internal degree ≥ 3.
    Other(usize),
}

/// A connected component of the subgraph induced by two color classes.
/// A value snapshot: it does not track later changes to the coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeComponent {
    pub vertices: VertexSet,
    pub shape: ComponentShape,
    pub color_pair: (Color, Color),
}

/// Components of the `alpha`/`beta` subgraph, ordered by least vertex.
pub fn two_color_components(g: &Graph, c: &Coloring, alpha: Color, beta: Color) -> Result<Vec<KempeComponent>> {
    if alpha == beta {
        return Err(Error::SameColorPair(alpha));
    }
    Ok(components_in(g, c.assignment(), alpha, beta)
        .into_iter()
        .map(|vertices| KempeComponent { shape: classify_shape(g, &vertices), vertices, color_pair: (alpha, beta) })
        .collect())
}

/// Exchanges the pair's two colors on the component's vertices.
pub fn swap_component(c: &Coloring, comp: &KempeComponent) -> Result<Coloring> {
    let (alpha, beta) = comp.color_pair;
    if let Some(v) = comp.vertices.iter().find(|&v| v >= c.len() || (c.color(v) != alpha && c.color(v) != beta)) {
        return Err(Error::StaleComponent { vertex: v });
    }
    let mut assignment = c.assignment().to_vec();
    swap_in_place(&mut assignment, &comp.vertices, alpha, beta);
    Ok(Coloring::from_assignment(assignment))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Result1Verdict {
    AllPathOrCycle,
    Violation(KempeComponent),
}

/// Checks that every two-color component, over every color pair, is a path
/// or a cycle. Reports the first offender in pair-then-component order.
pub fn check_result1(g: &Graph, c: &Coloring) -> Result1Verdict {
    let k = c.max_color();
    for alpha in 1..=k {
        for beta in alpha + 1..=k {
            for vertices in components_in(g, c.assignment(), alpha, beta) {
                let shape = classify_shape(g, &vertices);
                if let ComponentShape::Other(_) = shape {
                    return Result1Verdict::Violation(KempeComponent { vertices, shape, color_pair: (alpha, beta) });
                }
            }
        }
    }
    Result1Verdict::AllPathOrCycle
}

/// Shape of a connected vertex set. Single vertices and single edges are
/// paths.
pub fn classify_shape(g: &Graph, vertices: &VertexSet) -> ComponentShape {
    let mut edges_twice = 0;
    let mut all_two = true;
    for v in vertices.iter() {
        let d = g.neighbors(v).intersection_len(vertices);
        if d >= 3 {
            return ComponentShape::Other(v);
        }
        all_two &= d == 2;
        edges_twice += d;
    }
    if all_two && !vertices.is_empty() {
        ComponentShape::Cycle
    } else {
        debug_assert_eq!(edges_twice / 2 + 1, vertices.len());
        ComponentShape::Path
    }
}

/// Connected components of the vertices colored `alpha` or `beta`, ordered
/// by least vertex. Uncolored (0) vertices never belong to one.
pub(crate) fn components_in(g: &Graph, colors: &[Color], alpha: Color, beta: Color) -> Vec<VertexSet> {
    let mut seen = VertexSet::with_universe(colors.len());
    let mut out = Vec::new();
    for start in 0..colors.len() {
        if seen.contains(start) || (colors[start] != alpha && colors[start] != beta) {
            continue;
        }
        let comp = component_from(g, colors, start, alpha, beta);
        for v in comp.iter() {
            seen.insert(v);
        }
        out.push(comp);
    }
    out
}

/// The `alpha`/`beta` component containing `start`.
pub(crate) fn component_from(g: &Graph, colors: &[Color], start: usize, alpha: Color, beta: Color) -> VertexSet {
    let mut comp = VertexSet::with_universe(colors.len());
    if colors[start] != alpha && colors[start] != beta {
        return comp;
    }
    comp.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v).iter() {
            if (colors[w] == alpha || colors[w] == beta) && comp.insert(w) {
                queue.push_back(w);
            }
        }
    }
    comp
}

pub(crate) fn swap_in_place(colors: &mut [Color], vertices: &VertexSet, alpha: Color, beta: Color) {
    for v in vertices.iter() {
        if colors[v] == alpha {
            colors[v] = beta;
        } else if colors[v] == beta {
            colors[v] = alpha;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{verify_proper, Properness};

    fn p4() -> (Graph, Coloring) {
        (Graph::path(4), Coloring::from_assignment(vec![1, 2, 1, 2]))
    }

    #[test]
    fn path_component() {
        let (g, c) = p4();
        let comps = two_color_components(&g, &c, 1, 2).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].shape, ComponentShape::Path);
        assert_eq!(comps[0].vertices.len(), 4);
    }

    #[test]
    fn cycle_component() {
        let g = Graph::cycle(6).unwrap();
        let c = Coloring::from_assignment(vec![1, 2, 1, 2, 1, 2]);
        let comps = two_color_components(&g, &c, 1, 2).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].shape, ComponentShape::Cycle);
    }

    #[test]
    fn star_component_and_result1_violation() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = Coloring::from_assignment(vec![1, 2, 2, 2]);
        let comps = two_color_components(&g, &c, 1, 2).unwrap();
        assert_eq!(comps[0].shape, ComponentShape::Other(0));
        assert!(matches!(check_result1(&g, &c), Result1Verdict::Violation(_)));
    }

    #[test]
    fn degenerate_components_are_paths() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let c = Coloring::from_assignment(vec![1, 2, 1]);
        let comps = two_color_components(&g, &c, 1, 2).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|k| k.shape == ComponentShape::Path));
        assert_eq!(comps[1].vertices, VertexSet::singleton(2));
    }

    #[test]
    fn swap_is_an_involution() {
        let (g, c) = p4();
        let comp = &two_color_components(&g, &c, 1, 2).unwrap()[0];
        let swapped = swap_component(&c, comp).unwrap();
        assert_eq!(swapped.assignment(), &[2, 1, 2, 1]);
        assert_eq!(verify_proper(&g, &swapped).unwrap(), Properness::Proper);
        assert_eq!(swap_component(&swapped, comp).unwrap(), c);
    }

    #[test]
    fn errors() {
        let (g, c) = p4();
        assert!(matches!(two_color_components(&g, &c, 2, 2), Err(Error::SameColorPair(2))));
        let comp = two_color_components(&g, &c, 1, 2).unwrap().remove(0);
        let changed = Coloring::from_assignment(vec![3, 2, 1, 2]);
        assert!(matches!(swap_component(&changed, &comp), Err(Error::StaleComponent { vertex: 0 })));
    }

    #[test]
    fn result1_on_odd_cycle() {
        let g = Graph::cycle(5).unwrap();
        let c = Coloring::from_assignment(vec![1, 2, 1, 2, 3]);
        assert_eq!(check_result1(&g, &c), Result1Verdict::AllPathOrCycle);
    }
}
