use proptest::prelude::*;

use core_index::canon::{canonical_form, is_isomorphic};
use core_index::count::{
    core_index, core_index_bruteforce, count_containing, count_containing_vertex, f_all_vertices, f_vector,
    subgraph_core, tree_core_index,
};
use core_index::families::{graph_from_mask, tree_from_prufer, FamilySpec};
use core_index::format::{from_edge_list_text, from_graph6, to_edge_list, to_graph6};
use core_index::graph::{Graph, VertexSet};
use core_index::perturb::contract_bridge;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        let top = if pairs == 0 { 1 } else { 1u64 << pairs };
        (Just(n), 0..top).prop_map(|(n, mask)| graph_from_mask(n, mask).unwrap())
    })
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..n, n - 2).prop_map(move |seq| tree_from_prufer(n, &seq))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn engine_matches_brute_force(g in graph(7)) {
        prop_assert_eq!(core_index(&g), core_index_bruteforce(&g).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in graph(10)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(from_edge_list_text(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn relabeling_preserves_everything((g, perm) in graph(8).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(core_index(&g), core_index(&h));
    }

    #[test]
    fn adding_an_edge_raises_f(g in graph(7), a in 0usize..7, b in 0usize..7) {
        let n = g.n();
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        prop_assert!(core_index(&g.with_edge(u, v).unwrap()) > core_index(&g));
    }

    #[test]
    fn union_is_additive(a in graph(5), b in graph(5)) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(core_index(&u), core_index(&a) + core_index(&b));
    }

    #[test]
    fn tree_engines_agree(t in tree(14)) {
        prop_assert_eq!(tree_core_index(&t).unwrap(), core_index(&t));
        let rerooted = f_all_vertices(&t).unwrap();
        for v in 0..t.n() {
            prop_assert_eq!(&rerooted[v], &count_containing_vertex(&t, v).unwrap());
        }
    }

    #[test]
    fn tree_core_is_small(t in tree(14)) {
        let core = subgraph_core(&t).unwrap().to_vec();
        prop_assert!(core.len() == 1 || (core.len() == 2 && t.has_edge(core[0], core[1])));
    }

    #[test]
    fn tree_bounds_hold(t in tree(16)) {
        let n = t.n();
        let lo = FamilySpec::Path { n }.expected_core_index().unwrap();
        let hi = FamilySpec::Star { n }.expected_core_index().unwrap();
        let f = core_index(&t);
        prop_assert!(lo <= f && f <= hi);
    }

    #[test]
    fn vertex_counts_match_set_counts(g in graph(7), v in 0usize..7) {
        let v = v % g.n();
        prop_assert_eq!(count_containing_vertex(&g, v).unwrap(), count_containing(&g, VertexSet::singleton(v)).unwrap());
        prop_assert!(&f_vector(&g).unwrap()[v] <= &core_index(&g));
    }

    #[test]
    fn bridge_contraction_gap_is_exact(t in tree(10), pick in any::<prop::sample::Index>()) {
        let edges = t.edges();
        let (u, v) = edges[pick.index(edges.len())];
        prop_assume!(t.degree(u) >= 2 && t.degree(v) >= 2);
        let out = contract_bridge(&t, u, v).unwrap();
        prop_assert!(out.holds());
        prop_assert!(out.f_after > out.f_before);
    }
}
