mod common;

use proptest::prelude::*;
use unavoidable::balance::{char_bp_witness, half_family};
use unavoidable::canon::{are_isomorphic, canonical_form, canonical_graph};
use unavoidable::constructions::{
    kst_bounds, layered_blue_edges, layered_coloring, multicolor_partition_coloring, BOUND_TOLERANCE,
};
use unavoidable::multicolor::{classify_colors, search_clique_grid, verify_multicolor_b};
use unavoidable::params::{greedy_strong_edge_coloring, is_induced_matching, strong_edge_greedy_bound};
use unavoidable::patterns::{
    find_balanced_copy, find_induced, find_weakly_induced, verify_embedding, Containment, EmbedMode, FamilyMember,
    PatternFamily,
};
use unavoidable::search::{ex2_exact, with_workers, zarankiewicz_exact, SearchOptions};
use unavoidable::{graph6, reference, SimpleGraph, TwoColoring};

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, keep)| {
            let edges: Vec<_> = common::pairs(n).into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_ignores_labels((g, p) in graph(9).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let h = g.relabel(&p);
        prop_assert_eq!(canonical_form(&g).certificate, canonical_form(&h).certificate);
        prop_assert_eq!(canonical_graph(&g), canonical_graph(&h));
    }

    #[test]
    fn isomorphism_matches_brute_force(a in graph(6), b in graph(6)) {
        let brute = common::isomorphic(&common::matrix(a.n(), &a.edges()), &common::matrix(b.n(), &b.edges()));
        prop_assert_eq!(are_isomorphic(&a, &b), brute);
    }

    #[test]
    fn graph6_decodes_what_it_encodes(g in graph(11)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(11)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn class_sizes_partition_the_edges(g in graph(11)) {
        let c = TwoColoring::from_red(g.n(), g.clone()).unwrap();
        let s = c.class_sizes();
        prop_assert_eq!(s.red + s.blue, g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(s.min, s.red.min(s.blue));
        prop_assert_eq!(c.swap_colors().class_sizes().red, s.blue);
    }

    #[test]
    fn detectors_agree_with_brute_force(host in graph(7), h in graph(5)) {
        let fast = find_induced(&host, &h);
        prop_assert_eq!(fast.is_some(), reference::has_induced(&host, &h));
        if let Some(img) = fast {
            prop_assert!(verify_embedding(&host, &h, &img, EmbedMode::Induced));
        }
        for strict in [false, true] {
            let fast = find_weakly_induced(&host, &h, strict);
            prop_assert_eq!(fast.is_some(), reference::has_weakly_induced(&host, &h, strict));
        }
        if h.edge_count() > 0 {
            let c = TwoColoring::from_red(host.n(), host.clone()).unwrap();
            prop_assert_eq!(find_balanced_copy(&c, &h).is_some(), reference::has_balanced_copy(&c, &h));
        }
    }

    #[test]
    fn strict_weak_containment_is_induced_containment(host in graph(7), h in graph(5)) {
        prop_assert_eq!(find_weakly_induced(&host, &h, true).is_some(), find_induced(&host, &h).is_some());
    }

    #[test]
    fn strong_edge_colorings_are_valid(g in graph(12)) {
        let sec = greedy_strong_edge_coloring(&g);
        prop_assert_eq!(sec.classes.len(), g.edge_count());
        prop_assert!(sec.class_count <= strong_edge_greedy_bound(g.max_degree()));
        for i in 0..sec.class_count {
            prop_assert!(is_induced_matching(&g, &sec.class_edges(i)));
        }
    }

    #[test]
    fn balanceability_matches_subset_scan(g in graph(7)) {
        prop_assume!(g.edge_count() > 0);
        let e = g.edge_count();
        let ok = |x: usize| x == e / 2 || x == e.div_ceil(2);
        let subsets = 0..1u128 << g.n();
        let cut = subsets.clone().any(|s| ok(g.edges_across(s)));
        let inside = subsets.into_iter().any(|s| ok(g.edges_within(s)));
        let w = char_bp_witness(&g).unwrap();
        prop_assert_eq!(w.is_some(), cut && inside);
        if let Some(w) = w {
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn half_family_members_are_distinct_halves(g in graph(6)) {
        prop_assume!(g.edge_count() > 0);
        let e = g.edge_count();
        let fam = half_family(&g).unwrap();
        for (i, m) in fam.members.iter().enumerate() {
            let k = m.graph.edge_count();
            prop_assert!(k == e / 2 || k == e.div_ceil(2));
            for other in &fam.members[..i] {
                prop_assert!(!are_isomorphic(&m.graph.strip_isolated(), &other.graph.strip_isolated()));
            }
        }
    }

    #[test]
    fn zarankiewicz_below_counting_bound(m in 1usize..=5, n in 1usize..=5, s in 1usize..=3, t in 1usize..=3) {
        prop_assume!(s <= t);
        let cert = zarankiewicz_exact(m, n, s, t).unwrap();
        let bound = kst_bounds(m, n, s, t).unwrap().zarankiewicz;
        if s <= m && t <= n {
            prop_assert!(cert.value as f64 <= bound + BOUND_TOLERANCE);
        }
    }

    #[test]
    fn layered_colorings_match_their_formula(n in 10usize..=16, r in 2usize..=3, s in 2usize..=3, t in 2usize..=4) {
        prop_assume!(t >= s);
        let c = layered_coloring(n, r, s, t).unwrap();
        prop_assert_eq!(c.class_sizes().blue, layered_blue_edges(n, r, s, t));
    }

    #[test]
    fn partition_colorings_classify_as_expected(n in 6usize..=14, k in 3usize..=4, t in 2usize..=3) {
        prop_assume!(n / (k - 1) >= t);
        let c = multicolor_partition_coloring(n, k).unwrap();
        let class = classify_colors(&c, t).unwrap();
        prop_assert!(class.a_f.iter().eq([k].iter()));
        prop_assert_eq!(class.b_f.len(), k - 1);
        prop_assert!(class.verify(&c));
        if let Some(grid) = search_clique_grid(&c, t).unwrap() {
            prop_assert!(verify_multicolor_b(&c, t, &grid).unwrap());
        }
    }
}

fn member_graph() -> impl Strategy<Value = SimpleGraph> {
    graph(4).prop_filter("members are neither complete nor edgeless", |g| {
        g.n() >= 2 && !g.is_complete() && !g.is_edgeless()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn searches_agree_across_modes_and_workers(a in member_graph(), b in member_graph()) {
        let members = [a, b]
            .into_iter()
            .map(|g| FamilyMember { containment: Containment::InducedMono, graph: g })
            .collect();
        let fam = PatternFamily::new("random", members).unwrap();
        let raw = ex2_exact(5, &fam, SearchOptions::raw()).unwrap();
        let one = with_workers(Some(1), || ex2_exact(5, &fam, SearchOptions::default()).unwrap());
        let four = with_workers(Some(4), || ex2_exact(5, &fam, SearchOptions::default()).unwrap());
        prop_assert_eq!(raw.value, one.value);
        prop_assert_eq!(&raw.witness, &one.witness);
        prop_assert_eq!(one.to_canonical_json(), four.to_canonical_json());
        let brute = {
            let mats: Vec<_> = fam.members.iter().map(|m| common::matrix(m.graph.n(), &m.graph.edges())).collect();
            let o = common::FamilyOracle::new(5, &mats);
            common::max_min_class(5, |mask| o.contains(mask)).unwrap().0
        };
        prop_assert_eq!(raw.value, brute);
    }
}
