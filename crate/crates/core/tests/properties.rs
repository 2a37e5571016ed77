//! Property tests over randomly generated small simple graphs.

use proptest::prelude::*;

use tcm_core::{
    cycles, cycle_matroid, in_gf2_span, parse_graph6, spanning_forests, write_graph6, EdgeSet,
    LabeledGraph,
};

/// Random simple graph on `n` vertices from an adjacency bitmask.
fn graph_from_mask(n: usize, mask: u32) -> LabeledGraph {
    let mut g = LabeledGraph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    let mut bit = 0;
    let mut label = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(label, u, v).unwrap();
                label += 1;
            }
            bit += 1;
        }
    }
    g
}

fn arb_graph() -> impl Strategy<Value = LabeledGraph> {
    (2usize..=6).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0u32..(1u32 << pairs)).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn symmetric_difference_of_cycle_family_is_even(
        g in arb_graph(),
        picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..4)
    ) {
        let cs = cycles(&g);
        let mut delta = EdgeSet::empty();
        for p in &picks {
            if !cs.is_empty() {
                delta = delta ^ cs[p.index(cs.len())];
            }
        }
        prop_assert!(g.is_even_subset(delta).unwrap());
    }

    #[test]
    fn family_symmetric_differences_lie_in_the_span(
        g in arb_graph(),
        picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..4)
    ) {
        let cs = cycles(&g);
        let mut delta = EdgeSet::empty();
        for p in &picks {
            if !cs.is_empty() {
                delta = delta ^ cs[p.index(cs.len())];
            }
        }
        prop_assert!(in_gf2_span(delta, &cs));
    }

    #[test]
    fn forests_are_maximal_and_acyclic(g in arb_graph()) {
        let cs = cycles(&g);
        let ground = g.edge_set();
        for forest in spanning_forests(&g) {
            prop_assert!(cs.iter().all(|c| !c.is_subset_of(forest)));
            for extra in (ground - forest).iter() {
                let extended = forest.with(extra);
                prop_assert!(cs.iter().any(|c| c.is_subset_of(extended)));
            }
        }
    }

    #[test]
    fn cycle_classes_partition_the_cycles(g in arb_graph()) {
        let total = cycles(&g).len();
        let split = tcm_core::hamiltonian_cycles(&g).len()
            + tcm_core::quasi_hamiltonian_cycles(&g).len()
            + tcm_core::small_cycles(&g).len();
        prop_assert_eq!(total, split);
    }

    #[test]
    fn graph6_write_then_parse_is_identity(g in arb_graph()) {
        let s = write_graph6(&g).unwrap();
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6(&back).unwrap(), s);
    }

    #[test]
    fn edge_exchange_is_an_involution(g in arb_graph(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let labels: Vec<usize> = g.edge_set().iter().collect();
        if labels.len() >= 2 {
            let e1 = labels[a.index(labels.len())];
            let e2 = labels[b.index(labels.len())];
            let once = tcm_core::edge_exchange(&g, e1, e2).unwrap();
            let twice = tcm_core::edge_exchange(&once, e1, e2).unwrap();
            prop_assert_eq!(twice, g);
        }
    }

    #[test]
    fn truncation_formula_agrees_on_random_graphs(g in arb_graph()) {
        if g.edge_count() > 0 {
            let m = cycle_matroid(&g).unwrap();
            if m.rank() >= 1 {
                let formula = m.truncation_circuits().unwrap();
                let direct = m.truncate().unwrap().circuits().to_vec();
                prop_assert_eq!(formula, direct);
            }
        }
    }

    #[test]
    fn truncation_keeps_the_axioms(g in arb_graph()) {
        if g.edge_count() > 0 {
            let m = cycle_matroid(&g).unwrap();
            prop_assert!(m.verify_axioms());
            if m.rank() >= 1 {
                prop_assert!(m.truncate().unwrap().verify_axioms());
            }
        }
    }
}
