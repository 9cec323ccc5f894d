use proptest::prelude::*;

use hopfgraph::checker::{generate_graphs, oracle, scramble, GeneratorConfig};
use hopfgraph::io::dsl::parse_graph;
use hopfgraph::io::dsl::GraphDocument;
use hopfgraph::partition::enumerate_covering_partitions;
use hopfgraph::{are_isomorphic, canonical_key, coproduct, counit, CoalgebraConfig, CoverVariant, OrientedGraph};

fn graph(seed: u64, cycle_free: bool) -> OrientedGraph {
    let cfg = GeneratorConfig {
        max_vertices: 5,
        max_internal_edges: 6,
        edge_type_count: 2,
        external_leg_probability: 0.3,
        cycle_free_only: cycle_free,
        seed,
    };
    generate_graphs(&cfg, 1).unwrap().remove(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_key_ignores_labels(seed in any::<u64>(), shuffle in any::<u64>()) {
        let g = graph(seed, false);
        let h = scramble(&g, shuffle);
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert!(oracle::isomorphic(&g, &h));
    }

    #[test]
    fn coproduct_ignores_labels(seed in any::<u64>(), shuffle in any::<u64>()) {
        let g = graph(seed, false);
        let h = scramble(&g, shuffle);
        for cfg in CoalgebraConfig::all().into_iter().filter(|c| c.accepts(&g)) {
            prop_assert_eq!(coproduct(&g, cfg).unwrap(), coproduct(&h, cfg).unwrap());
        }
    }

    #[test]
    fn isomorphism_agrees_with_oracle(a in any::<u64>(), b in any::<u64>()) {
        let g = graph(a, false);
        let h = graph(b, false);
        prop_assert_eq!(are_isomorphic(&g, &h), oracle::isomorphic(&g, &h));
    }

    #[test]
    fn covers_agree_with_oracle(seed in any::<u64>(), cycle_free in any::<bool>()) {
        let g = graph(seed, cycle_free);
        for variant in CoverVariant::ALL {
            if variant.requires_cycle_free() && !g.is_cycle_free() {
                continue;
            }
            let mut fast: Vec<Vec<Vec<_>>> = enumerate_covering_partitions(&g, variant)
                .unwrap()
                .iter()
                .map(|p| {
                    let mut blocks: Vec<Vec<_>> = p.blocks().iter().map(|b| {
                        let mut b = b.clone();
                        b.sort();
                        b
                    }).collect();
                    blocks.sort();
                    blocks
                })
                .collect();
            fast.sort();
            prop_assert_eq!(fast, oracle::covering_partitions(&g, variant));
        }
    }

    #[test]
    fn dsl_roundtrip(seed in any::<u64>()) {
        let g = graph(seed, false);
        let text = GraphDocument::from_graph("g", &g).to_text();
        let back = parse_graph(&text).unwrap();
        prop_assert!(are_isomorphic(&g, &back));
    }

    #[test]
    fn counit_vanishes_on_graphs_with_edges(seed in any::<u64>()) {
        let g = graph(seed, false);
        let x = hopfgraph::AlgebraElement::from_graph(&g, hopfgraph::Mode::Bialgebra);
        let expected = if g.internal_count() == 0 { 1 } else { 0 };
        prop_assert_eq!(counit(&x, CoalgebraConfig::default()), hopfgraph::rational(expected));
    }
}
