mod common;

use std::collections::BTreeSet;

use common::{arb_graph, classes_by_sequence, k2_plus_k3, seq};
use proptest::prelude::*;
use unigraphs::classify::{
    derive_f, hcu_pair_condition, hcu_pair_split, hcu_nonsplit_condition, hcu_sequence_nonsplit, is_hcu, is_hcu_sequence,
    is_hu, is_unigraph, l1, l2, l2_nonsplit, l2_split, star_pairs, y_graphs, Route, Witness,
};
use unigraphs::enumerate::all_graphs;
use unigraphs::realize::{enumerate_realizations, realize_one};
use unigraphs::search::is_minimal_forbidden;
use unigraphs::split::{inverse, is_split_graph};
use unigraphs::{ks_partitions, CrossDegreePair, Graph};

fn pair(a: &[usize], b: &[usize]) -> CrossDegreePair {
    CrossDegreePair::new(a.to_vec(), b.to_vec())
}

#[test]
fn constant_lists() {
    assert_eq!(l1().len(), 7);
    assert_eq!(l2_nonsplit().len(), 6);
    assert_eq!(l2_split().len(), 14);
    assert_eq!(l2().len(), 20);
    assert_eq!(star_pairs().len(), 11);
    assert!(l2_nonsplit().contains(&seq(&[5, 4, 3, 3, 3, 1, 1])));
    assert!(l2_split().contains(&seq(&[5, 5, 4, 4, 2, 2, 1, 1])));
    for s in l2_nonsplit() {
        assert!(!s.is_split().unwrap(), "{s}");
    }
    for s in l2_split() {
        assert!(s.is_split().unwrap(), "{s}");
    }
}

#[test]
fn star_pairs_cover_the_split_sequences() {
    let from_pairs: BTreeSet<_> = star_pairs().iter().flat_map(|p| p.to_sequences()).collect();
    let listed: BTreeSet<_> = l2_split().into_iter().collect();
    assert_eq!(from_pairs, listed);
    let shared = star_pairs().iter().filter(|p| p.to_sequences().len() == 1).count();
    assert_eq!(shared, 8);
}

#[test]
fn forbidden_set_for_hereditary_unigraphs() {
    let f = derive_f();
    assert_eq!(f.len(), 16);
    let k2_c4 = Graph::complete(2).disjoint_union(&Graph::cycle(4)).unwrap();
    for g in [k2_c4.clone(), k2_c4.complement(), Graph::path(5), k2_plus_k3()] {
        assert!(f.iter().any(|h| h.is_isomorphic(&g)), "{g}");
    }
}

#[test]
fn unigraph_examples() {
    let g = realize_one(&seq(&[3, 3, 3, 3, 3, 1])).unwrap();
    assert!(is_unigraph(&g, Route::Auto).unwrap().member);
    assert!(is_unigraph(&g, Route::Brute).unwrap().member);
    assert!(!is_unigraph(&Graph::path(5), Route::Auto).unwrap().member);
    assert!(!is_unigraph(&k2_plus_k3(), Route::Auto).unwrap().member);
    assert!(is_unigraph(&Graph::empty(1), Route::Auto).unwrap().member);
    assert!(is_unigraph(&Graph::empty(0), Route::Auto).is_err());
    assert!(is_unigraph(&g, Route::Rao).is_err());
    match is_unigraph(&Graph::cycle(5), Route::Structural).unwrap().witness {
        Witness::Families(tags) => assert_eq!(tags.len(), 1),
        w => panic!("unexpected witness {w:?}"),
    }
}

#[test]
fn unigraph_routes_agree_small() {
    for n in 1..=6 {
        for g in all_graphs(n).unwrap() {
            let a = is_unigraph(&g, Route::Structural).unwrap().member;
            let b = is_unigraph(&g, Route::Brute).unwrap().member;
            assert_eq!(a, b, "{g}");
        }
    }
}

#[test]
fn hu_examples() {
    let g = realize_one(&seq(&[3, 3, 3, 3, 3, 1])).unwrap();
    for route in [Route::Rao, Route::Forbidden, Route::Brute] {
        assert!(!is_hu(&g, route).unwrap().member, "{route}");
        assert!(is_hu(&Graph::empty(1), route).unwrap().member, "{route}");
        assert!(!is_hu(&Graph::path(5), route).unwrap().member, "{route}");
    }
    let v = is_hu(&Graph::path(5), Route::Auto).unwrap();
    assert_eq!(v.witness, Witness::Sequence(seq(&[2, 2, 2, 1, 1])));
}

#[test]
fn hu_routes_agree_small() {
    for n in 1..=6 {
        for g in all_graphs(n).unwrap() {
            let rao = is_hu(&g, Route::Rao).unwrap().member;
            assert_eq!(rao, is_hu(&g, Route::Forbidden).unwrap().member, "{g}");
            assert_eq!(rao, is_hu(&g, Route::Brute).unwrap().member, "{g}");
        }
    }
}

#[test]
fn nonsplit_sequence_conditions() {
    assert_eq!(hcu_nonsplit_condition(&seq(&[2, 2, 2, 2, 2])).unwrap(), Some(5));
    assert!(hcu_sequence_nonsplit(&seq(&[2, 2, 2, 2, 2])).unwrap());
    assert!(!hcu_sequence_nonsplit(&seq(&[2, 2, 2, 1, 1])).unwrap());
    assert_eq!(hcu_nonsplit_condition(&seq(&[1, 1, 1, 1])).unwrap(), Some(1));
    assert!(hcu_sequence_nonsplit(&seq(&[2, 1, 1])).is_err());
    assert!(hcu_sequence_nonsplit(&seq(&[2, 2, 2, 2, 0])).is_err());
}

#[test]
fn split_pair_conditions() {
    assert_eq!(hcu_pair_condition(&pair(&[1, 1], &[1, 1])).unwrap(), Some("1a"));
    assert!(!hcu_pair_split(&pair(&[2, 2, 1, 1], &[2, 2, 1, 1])).unwrap());
    assert!(hcu_pair_split(&pair(&[2, 2, 1, 1], &[2, 2, 2])).unwrap());
    assert!(hcu_pair_split(&pair(&[1, 0], &[1])).is_err());
    for p in star_pairs() {
        assert!(!hcu_pair_split(&p).unwrap(), "{p}");
    }
}

#[test]
fn hcu_examples() {
    let both = enumerate_realizations(&seq(&[3, 2, 2, 2, 1])).unwrap();
    assert_eq!(both.len(), 2);
    for route in [Route::Sequence, Route::Rao, Route::Forbidden, Route::Structural] {
        for g in &both {
            assert!(is_hcu(g, route).unwrap().member, "{route} {g}");
        }
        assert!(!is_hcu(&Graph::path(5), route).unwrap().member, "{route}");
        assert!(is_hcu(&Graph::cycle(5), route).unwrap().member, "{route}");
    }
    let v = is_hcu(&Graph::path(5), Route::Auto).unwrap();
    assert_eq!(v.route, Route::Sequence);
    assert_eq!(v.witness, Witness::Sequence(seq(&[2, 2, 2, 1, 1])));
    let v = is_hcu(&Graph::path(5), Route::Rao).unwrap();
    assert_eq!(v.witness, Witness::Sequence(seq(&[2, 2, 2, 1, 1])));
    match is_hcu(&Graph::path(6), Route::Forbidden).unwrap().witness {
        Witness::Subgraph { graph, vertices } => {
            assert_eq!(vertices.len(), graph.n());
            assert!(graph.is_isomorphic(&Graph::path(5)));
        }
        w => panic!("unexpected witness {w:?}"),
    }
}

#[test]
fn hcu_routes_agree_small() {
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            let by_sequence = is_hcu(&g, Route::Sequence).unwrap().member;
            assert_eq!(by_sequence, is_hcu(&g, Route::Rao).unwrap().member, "{g}");
            assert_eq!(by_sequence, is_hcu(&g, Route::Forbidden).unwrap().member, "{g}");
            assert_eq!(by_sequence, is_hcu(&g, Route::Structural).unwrap().member, "{g}");
        }
    }
}

#[test]
fn hcu_is_a_property_of_the_degree_sequence() {
    for n in 1..=7 {
        for (s, graphs) in classes_by_sequence(n) {
            let verdicts: BTreeSet<bool> =
                graphs.iter().map(|g| is_hcu(g, Route::Structural).unwrap().member).collect();
            assert_eq!(verdicts.len(), 1, "{s}");
            assert_eq!(verdicts.contains(&true), is_hcu_sequence(&s).unwrap(), "{s}");
        }
    }
}

#[test]
fn hcu_closed_under_complement_and_inversion() {
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            let member = is_hcu(&g, Route::Sequence).unwrap().member;
            assert_eq!(member, is_hcu(&g.complement(), Route::Sequence).unwrap().member, "{g}");
            if is_split_graph(&g) {
                for p in ks_partitions(&g) {
                    let inv = inverse(&g, &p).unwrap();
                    assert_eq!(member, is_hcu(&inv, Route::Sequence).unwrap().member, "{g}");
                    assert_eq!(member, is_hcu(&inv.complement(), Route::Sequence).unwrap().member, "{g}");
                }
            }
        }
    }
}

#[test]
fn membership_sets_are_closed_under_decrementation() {
    for n in 2..=7 {
        for s in unigraphs::degseq::graphic_sequences(n) {
            let hcu = is_hcu_sequence(&s).unwrap();
            let hu = is_hu(&realize_one(&s).unwrap(), Route::Rao).unwrap().member;
            for d in s.graphic_decrementations() {
                if hcu {
                    assert!(is_hcu_sequence(&d).unwrap(), "{s} -> {d}");
                }
                if hu {
                    assert!(is_hu(&realize_one(&d).unwrap(), Route::Rao).unwrap().member, "{s} -> {d}");
                }
            }
        }
    }
}

#[test]
fn bundled_artifact_is_consistent() {
    let y = y_graphs();
    assert_eq!(y.len(), 94);
    let set: BTreeSet<Graph> = y.iter().map(Graph::canonical).collect();
    assert_eq!(set.len(), y.len());
    for s in l2() {
        for g in enumerate_realizations(&s).unwrap() {
            assert!(set.contains(&g), "{s} {g}");
        }
    }
    for g in y {
        assert!(is_minimal_forbidden(g).unwrap(), "{g}");
        assert!(set.contains(&g.complement().canonical()), "{g}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sequence_and_structural_routes_agree(g in arb_graph(10)) {
        let a = is_hcu(&g, Route::Sequence).unwrap().member;
        prop_assert_eq!(a, is_hcu(&g, Route::Structural).unwrap().member);
        prop_assert_eq!(a, is_hcu(&g.complement(), Route::Sequence).unwrap().member);
    }

    #[test]
    fn hu_implies_hcu(g in arb_graph(9)) {
        if is_hu(&g, Route::Rao).unwrap().member {
            prop_assert!(is_hcu(&g, Route::Sequence).unwrap().member);
        }
    }
}
