use proptest::prelude::*;

use clawchroma::clique::{clique_number_within, max_clique, omega};
use clawchroma::colorer::{class_color, theorem_bound_holds, ColorerConfig, ConstructiveColorer, InsertionOrder};
use clawchroma::coloring::{dsatur_greedy, exact_chromatic, verify_proper, Properness};
use clawchroma::dimacs::{parse_dimacs, write_dimacs};
use clawchroma::generators::{enumerate_labeled, random_in_class};
use clawchroma::kempe::{swap_component, two_color_components};
use clawchroma::recognition::{find_claw, find_forbidden_w, is_in_class};
use clawchroma::{Graph, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut bits = bits.into_iter();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if bits.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn in_class_strategy() -> impl Strategy<Value = Graph> {
    (4usize..=14, 0.3f64..0.95, any::<u64>())
        .prop_filter_map("no in-class draw", |(n, p, seed)| random_in_class(n, p, seed, 200).unwrap())
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edge_count(g in graph_strategy(16)) {
        let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
        prop_assert_eq!(g.degree_profile().max_degree, g.max_degree());
    }

    #[test]
    fn induced_on_everything_is_identity(g in graph_strategy(16)) {
        let sub = g.induced_subgraph(&g.all_vertices()).unwrap();
        prop_assert_eq!(&sub.graph, &g);
        prop_assert_eq!(sub.original, (0..g.vertex_count()).collect::<Vec<_>>());
    }

    #[test]
    fn induced_subgraph_keeps_adjacency(g in graph_strategy(14), mask in any::<u16>()) {
        let keep: VertexSet = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        let sub = g.induced_subgraph(&keep).unwrap();
        for (i, &a) in sub.original.iter().enumerate() {
            for (j, &b) in sub.original.iter().enumerate() {
                prop_assert_eq!(sub.graph.has_edge(i, j), g.has_edge(a, b));
            }
        }
        prop_assert!(omega(&sub.graph) <= omega(&g));
    }

    #[test]
    fn dimacs_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(parse_dimacs(&write_dimacs(&g, &["x"])).unwrap().graph, g);
    }

    #[test]
    fn witnesses_are_induced(g in graph_strategy(10)) {
        for w in find_claw(&g).into_iter().chain(find_forbidden_w(&g)) {
            prop_assert!(w.holds_in(&g));
        }
        if let Some(w) = is_in_class(&g).witness() {
            prop_assert!(w.holds_in(&g));
        }
    }

    #[test]
    fn clique_is_a_clique_and_monotone(g in graph_strategy(16), mask in any::<u16>()) {
        let q = max_clique(&g);
        prop_assert!(g.is_clique(&q.vertices));
        prop_assert_eq!(q.vertices.len(), q.size);
        let part: VertexSet = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        prop_assert!(clique_number_within(&g, &part) <= q.size);
    }

    #[test]
    fn swap_is_an_involution_preserving_properness(g in graph_strategy(12), a in 1u32..5, b in 1u32..5) {
        prop_assume!(a != b);
        let c = dsatur_greedy(&g);
        for comp in two_color_components(&g, &c, a, b).unwrap() {
            let once = swap_component(&c, &comp).unwrap();
            prop_assert_eq!(verify_proper(&g, &once).unwrap(), Properness::Proper);
            prop_assert_eq!(swap_component(&once, &comp).unwrap(), c.clone());
        }
    }

    #[test]
    fn chromatic_bounds(g in graph_strategy(11)) {
        let (chi, witness) = exact_chromatic(&g).unwrap();
        prop_assert!(omega(&g) <= chi);
        prop_assert!(chi <= dsatur_greedy(&g).colors_used());
        prop_assert_eq!(verify_proper(&g, &witness).unwrap(), Properness::Proper);
    }

    #[test]
    fn class_colorer_output_is_proper(g in in_class_strategy()) {
        let (c, trace) = class_color(&g).unwrap();
        prop_assert_eq!(verify_proper(&g, &c).unwrap(), Properness::Proper);
        prop_assert!(trace.is_consistent());
        let w = omega(&g);
        prop_assert!(c.colors_used() <= w + 1);
        if theorem_bound_holds(g.vertex_count(), g.max_degree(), w) {
            prop_assert_eq!(c.colors_used(), w);
        }
    }
}

#[test]
fn colorer_variants_meet_omega_on_small_theorem_graphs() {
    let configs = [
        ColorerConfig::default(),
        ColorerConfig { kempe_repair: false, ..ColorerConfig::default() },
        ColorerConfig { order: InsertionOrder::DescendingDegree, ..ColorerConfig::default() },
        ColorerConfig { check_prefixes: true, ..ColorerConfig::default() },
        ColorerConfig::fallback_only(),
    ];
    let graphs: Vec<Graph> = enumerate_labeled(6, |g| {
        theorem_bound_holds(g.vertex_count(), g.max_degree(), omega(g)) && is_in_class(g).is_in_class()
    })
    .unwrap()
    .collect();
    assert!(!graphs.is_empty());
    for config in configs {
        let colorer = ConstructiveColorer::new(config.clone());
        for g in &graphs {
            let (c, trace) = colorer.color_strict(g).unwrap();
            assert_eq!(verify_proper(g, &c).unwrap(), Properness::Proper);
            assert_eq!(c.colors_used(), omega(g), "{config:?} {g:?}");
            assert!(trace.is_consistent());
        }
    }
}
