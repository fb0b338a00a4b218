//! Exact small values, each computed by a brute-force oracle and frozen here.

mod common;

use common::*;
use unavoidable::canon::are_isomorphic;
use unavoidable::coloring::EnumerationMode;
use unavoidable::enumerate::{canonical_level, enumerate_graphs};
use unavoidable::graph::NamedGraph;
use unavoidable::params::matching_number;
use unavoidable::patterns::{EmbedMode, PatternFamily};
use unavoidable::search::{
    bal_exact, bipartite_ramsey_check, ex2_exact, ex_kst_exact, verify_bal, verify_ex2, zarankiewicz_exact,
    SearchOptions,
};
use unavoidable::{SimpleGraph, TwoColoring};

fn to_matrix(g: &SimpleGraph) -> Matrix {
    matrix(g.n(), &g.edges())
}

fn oracle_family(n: usize, fam: &PatternFamily) -> FamilyOracle {
    let members: Vec<Matrix> = fam.members.iter().map(|m| to_matrix(&m.graph)).collect();
    FamilyOracle::new(n, &members)
}

fn oracle_ex2(n: usize, fam: &PatternFamily) -> usize {
    let o = oracle_family(n, fam);
    max_min_class(n, |m| o.contains(m)).expect("monochromatic colorings qualify").0
}

#[test]
fn ex2_f13_on_six_vertices() {
    let fam = PatternFamily::f(1, 3).unwrap();
    assert_eq!(oracle_ex2(6, &fam), 7);
    for opts in [SearchOptions::raw(), SearchOptions::default()] {
        let cert = ex2_exact(6, &fam, opts).unwrap();
        assert_eq!(cert.value, 7);
        assert!(verify_ex2(&cert, &fam, EmbedMode::Weak));
        let mask = cert.witness_coloring().unwrap().red_mask().unwrap();
        assert!(!oracle_family(6, &fam).contains(mask));
    }
}

#[test]
fn ex2_f22_on_seven_vertices() {
    let fam = PatternFamily::f(2, 2).unwrap();
    assert_eq!(oracle_ex2(7, &fam), 6);
    assert_eq!(ex2_exact(7, &fam, SearchOptions::default()).unwrap().value, 6);
    assert_eq!(ex2_exact(7, &fam, SearchOptions::raw()).unwrap().value, 6);
}

#[test]
fn ex2_layered_families_on_seven_vertices() {
    for ((r, s, t), want) in [((2, 2, 2), 6), ((2, 2, 3), 10), ((3, 1, 3), 10)] {
        let fam = PatternFamily::l(r, s, t).unwrap();
        assert_eq!(oracle_ex2(7, &fam), want, "L_{r},{s},{t}");
        assert_eq!(ex2_exact(7, &fam, SearchOptions::default()).unwrap().value, want);
    }
}

#[test]
fn ex2_l313_on_eight_vertices_is_half_the_edges() {
    // 14 = C(8,2)/2 is the largest possible smaller class, so an admissible
    // witness settles the value.
    let fam = PatternFamily::l(3, 1, 3).unwrap();
    let cert = ex2_exact(8, &fam, SearchOptions::default()).unwrap();
    assert_eq!(cert.value, 14);
    let mask = cert.witness_coloring().unwrap().red_mask().unwrap();
    assert_eq!(mask.count_ones(), 14);
    assert!(!oracle_family(8, &fam).contains(mask));
}

#[test]
fn bal_on_six_vertices() {
    for g in [NamedGraph::Path(3), NamedGraph::Complete(3), NamedGraph::Matching(2)] {
        let g = g.build().unwrap();
        let o = BalanceOracle::new(6, &to_matrix(&g));
        let want = max_min_class(6, |m| o.contains(m)).unwrap().0;
        assert_eq!(want, 0);
        let cert = bal_exact(6, &g, SearchOptions::default()).unwrap();
        assert_eq!(cert.value, want);
        assert!(verify_bal(&cert, &g));
    }
}

#[test]
fn bal_matches_oracle_on_small_patterns() {
    for g in [NamedGraph::Star(3), NamedGraph::Cycle(4), NamedGraph::Path(4)] {
        let g = g.build().unwrap();
        for n in 5..=6 {
            let o = BalanceOracle::new(n, &to_matrix(&g));
            let want = max_min_class(n, |m| o.contains(m)).map_or(0, |b| b.0);
            assert_eq!(bal_exact(n, &g, SearchOptions::default()).unwrap().value, want, "{g:?} n={n}");
            assert_eq!(bal_exact(n, &g, SearchOptions::raw()).unwrap().value, want, "{g:?} n={n}");
        }
    }
}

#[test]
fn zarankiewicz_small_values() {
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
        let want = zarankiewicz(m, n, 2, 2);
        assert_eq!(zarankiewicz_exact(m, n, 2, 2).unwrap().value, want, "z({m},{n})");
    }
    assert_eq!(zarankiewicz(2, 2, 2, 2), 3);
    assert_eq!(zarankiewicz(4, 4, 2, 2), 9);
    assert_eq!(zarankiewicz_exact(3, 4, 2, 3).unwrap().value, zarankiewicz(3, 4, 2, 3));
    assert_eq!(zarankiewicz_exact(4, 3, 3, 2).unwrap().value, zarankiewicz(4, 3, 3, 2));
}

#[test]
fn turan_c4_values() {
    let oracle: Vec<usize> = (1..=6).map(|n| turan_kst(n, 2, 2)).collect();
    assert_eq!(oracle, vec![0, 1, 3, 4, 6, 7]);
    let fast: Vec<usize> = (1..=6).map(|n| ex_kst_exact(n, 2, 2).unwrap().value).collect();
    assert_eq!(fast, oracle);
}

#[test]
fn bipartite_ramsey_small() {
    // A coloring of K_{3,3} without a monochromatic C_4 exists, none of K_{5,5}.
    assert!(!bipartite_ramsey_check(2, 3).unwrap().0);
    assert!(!bipartite_ramsey_check(2, 4).unwrap().0);
    assert!(bipartite_ramsey_check(2, 5).unwrap().0);
}

#[test]
fn isomorphism_classes_on_four_vertices() {
    // Dedup the 64 labeled graphs by permutation.
    let mut reps: Vec<Matrix> = Vec::new();
    for mask in 0..64 {
        let g = from_mask(4, mask);
        if !reps.iter().any(|r| isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    assert_eq!(reps.len(), 11);
    assert_eq!(canonical_level(4).unwrap().len(), reps.len());
}

#[test]
fn three_edge_graphs() {
    let got = enumerate_graphs(3, true).unwrap();
    let want = [
        SimpleGraph::complete(3),
        NamedGraph::Path(4).build().unwrap(),
        NamedGraph::Star(3).build().unwrap(),
        SimpleGraph::disjoint_union(&[NamedGraph::Path(3).build().unwrap(), SimpleGraph::complete(2)]).unwrap(),
        NamedGraph::Matching(3).build().unwrap(),
    ];
    assert_eq!(got.len(), 5);
    for w in &want {
        assert_eq!(got.iter().filter(|g| are_isomorphic(g, w)).count(), 1);
    }
}

#[test]
fn matching_numbers_match_brute_force() {
    for n in 1..=6 {
        for &mask in canonical_level(n).unwrap().iter() {
            let g = SimpleGraph::from_edge_mask(n, mask);
            assert_eq!(matching_number(&g), common::matching_number(&to_matrix(&g)), "{:?}", g);
        }
    }
}

#[test]
fn raw_enumeration_counts_colorings() {
    let fam = PatternFamily::f(1, 2).unwrap();
    let cert = ex2_exact(6, &fam, SearchOptions::raw()).unwrap();
    assert_eq!(cert.nodes_searched, 1 << 15);
    let c = TwoColoring::monochromatic(6, true);
    assert_eq!(cert.witness_coloring().unwrap().class_sizes().min, c.class_sizes().blue);
    assert!(ex2_exact(9, &fam, SearchOptions { mode: EnumerationMode::Raw, ..SearchOptions::default() }).is_err());
}
