mod common;

use std::collections::{BTreeSet, HashSet};

use common::{arb_graph, classes_by_sequence, non_increasing, seq};
use proptest::prelude::*;
use unigraphs::degseq::graphic_sequences;
use unigraphs::enumerate::all_graphs;
use unigraphs::tyshkevich::{compose, decompose};
use unigraphs::{rao_contains, DegreeSequence, Graph, KSPartition};

#[test]
fn graphicality_examples() {
    assert!(seq(&[3, 3, 3, 3, 3, 1]).is_graphic());
    assert!(!seq(&[3, 1]).is_graphic());
    assert!(!seq(&[1, 1, 1]).is_graphic());
    assert!(seq(&[]).is_graphic());
}

#[test]
fn erdos_gallai_matches_realization_existence() {
    for n in 0..=8 {
        let realized: BTreeSet<DegreeSequence> = if n == 0 {
            [DegreeSequence::default()].into()
        } else {
            all_graphs(n).unwrap().iter().map(|g| g.degree_sequence()).collect()
        };
        for terms in non_increasing(n, n) {
            let s = DegreeSequence::new(terms);
            assert_eq!(s.is_graphic(), realized.contains(&s), "{s}");
        }
        let listed: BTreeSet<DegreeSequence> = graphic_sequences(n).into_iter().collect();
        assert_eq!(listed, realized);
    }
}

#[test]
fn split_sequence_examples() {
    assert!(!seq(&[2, 2, 2, 1, 1]).is_split().unwrap());
    assert!(seq(&[1, 1]).is_split().unwrap());
    assert!(!seq(&[2, 2, 2, 2]).is_split().unwrap());
    assert!(seq(&[1, 1, 1]).is_split().is_err());
}

#[test]
fn split_test_matches_partition_search() {
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            let split = !unigraphs::split::brute_force_partitions(&g).is_empty();
            assert_eq!(g.degree_sequence().is_split().unwrap(), split, "{g}");
        }
    }
}

#[test]
fn kw_reduction_examples() {
    let s = seq(&[4, 3, 2, 2, 2, 1]);
    assert_eq!(s.kw_reduction(5).unwrap(), seq(&[3, 3, 2, 2, 2]));
    assert_eq!(s.kw_reduction(1).unwrap(), seq(&[3, 2, 1, 1, 1]));
    assert_eq!(seq(&[0, 0]).kw_reduction(0).unwrap(), seq(&[0]));
    assert!(s.kw_reduction(6).is_err());
}

#[test]
fn kw_reduction_is_a_graphic_decrementation() {
    for n in 1..=8 {
        for s in graphic_sequences(n) {
            for i in 0..n {
                let r = s.kw_reduction(i).unwrap();
                assert!(r.is_graphic());
                assert!(s.decrementations(s.terms()[i]).unwrap().contains(&r), "{s} at {i}");
            }
        }
    }
}

/// Lowering a different tied term gives the same multiset.
#[test]
fn kw_reduction_tie_rule_is_immaterial() {
    for n in 1..=7 {
        for s in graphic_sequences(n) {
            for i in 0..n {
                let d = s.terms()[i];
                let mut rest = s.terms().to_vec();
                rest.remove(i);
                for x in rest.iter_mut().take(d) {
                    *x -= 1;
                }
                assert_eq!(DegreeSequence::new(rest), s.kw_reduction(i).unwrap());
            }
        }
    }
}

#[test]
fn augmentation_table() {
    let s = seq(&[3, 2, 2, 1]);
    let as_set = |v: Vec<DegreeSequence>| v.into_iter().collect::<BTreeSet<_>>();
    assert_eq!(
        as_set(s.augmentations(2).unwrap()),
        as_set(vec![seq(&[4, 3, 2, 2, 1]), seq(&[4, 2, 2, 2, 2]), seq(&[3, 3, 3, 2, 1]), seq(&[3, 3, 2, 2, 2])])
    );
    assert_eq!(s.augmentations(0).unwrap(), vec![seq(&[3, 2, 2, 1, 0])]);
    assert_eq!(s.augmentations(4).unwrap(), vec![seq(&[4, 4, 3, 3, 2])]);
    assert!(s.augmentations(5).is_err());
}

#[test]
fn decrementation_examples() {
    assert!(seq(&[4, 3, 2, 2, 1]).decrementations(2).unwrap().contains(&seq(&[3, 2, 2, 1])));
    assert_eq!(seq(&[0, 0]).decrementations(0).unwrap(), vec![seq(&[0])]);
    assert!(seq(&[2, 2, 2]).decrementations(1).is_err());
    assert!(seq(&[2, 1, 0]).decrementations(2).is_err());
}

#[test]
fn augmentation_and_decrementation_are_dual() {
    for n in 1..=6 {
        let small = graphic_sequences(n);
        let large: HashSet<DegreeSequence> = graphic_sequences(n + 1).into_iter().collect();
        for pi in &small {
            for k in 0..=n {
                for rho in pi.augmentations(k).unwrap() {
                    assert!(rho.decrementations(k).unwrap().contains(pi));
                }
            }
        }
        for rho in &large {
            for k in rho.distinct_values() {
                let Ok(decs) = rho.decrementations(k) else { continue };
                for pi in decs {
                    assert!(pi.augmentations(k).unwrap().contains(rho), "{rho} -> {pi}");
                }
            }
        }
    }
}

#[test]
fn rao_examples() {
    assert!(rao_contains(&seq(&[2, 2, 2, 1, 1]), &seq(&[2, 2, 2])).unwrap());
    assert!(rao_contains(&seq(&[2, 2, 2, 1, 1]), &seq(&[2, 2, 2, 1, 1])).unwrap());
    assert!(!rao_contains(&seq(&[1, 1, 1, 1]), &seq(&[2, 2, 2])).unwrap());
    assert!(rao_contains(&seq(&[1, 1, 1]), &seq(&[1])).is_err());
}

/// Rao containment coincides with induced containment between some pair of realizations.
#[test]
fn rao_containment_matches_induced_realizations() {
    let levels: Vec<_> = (1..=6).map(classes_by_sequence).collect();
    for big in &levels {
        for (rho, hosts) in big {
            for small in &levels[..rho.len()] {
                for (pi, patterns) in small {
                    let oracle = hosts.iter().any(|h| patterns.iter().any(|p| h.contains_induced(p)));
                    let chain = augmentation_chain_exists(pi, rho);
                    assert_eq!(rao_contains(rho, pi).unwrap(), oracle, "{rho} over {pi}");
                    assert_eq!(chain, oracle, "augmentation chain {pi} to {rho}");
                }
            }
        }
    }
}

fn augmentation_chain_exists(pi: &DegreeSequence, rho: &DegreeSequence) -> bool {
    let mut level: BTreeSet<DegreeSequence> = [pi.clone()].into();
    while level.iter().next().is_some_and(|s| s.len() < rho.len()) {
        level = level.iter().flat_map(|s| s.all_augmentations()).collect();
    }
    level.contains(rho)
}

#[test]
fn decomposability_examples() {
    assert!(seq(&[3, 1, 1, 1]).is_decomposable().unwrap());
    assert!(!seq(&[2, 2, 2, 1, 1]).is_decomposable().unwrap());
    assert!(seq(&[2, 2, 2]).is_decomposable().unwrap());
    assert!(!seq(&[0]).is_decomposable().unwrap());
    assert!(seq(&[1, 1, 1]).is_decomposable().is_err());
}

#[test]
fn sequence_decomposability_matches_graph_decomposition() {
    for n in 1..=7 {
        for (s, graphs) in classes_by_sequence(n) {
            for g in graphs {
                assert_eq!(s.is_decomposable().unwrap(), decompose(&g).unwrap().len() > 1, "{g}");
            }
        }
    }
}

fn figure_one_graph() -> Graph {
    let p4 = Graph::path(4);
    let p4_part = KSPartition::new(0b0110, 0b1001);
    let single = Graph::empty(1);
    let single_part = KSPartition::new(0, 1);
    let rest = compose(&single, &single_part, &Graph::cycle(4)).unwrap();
    compose(&p4, &p4_part, &rest).unwrap()
}

#[test]
fn sequence_decomposition_examples() {
    let s = figure_one_graph().degree_sequence();
    assert_eq!(s, seq(&[7, 7, 4, 4, 4, 4, 2, 1, 1]));
    let expected = vec![seq(&[2, 2, 1, 1]), seq(&[0]), seq(&[2, 2, 2, 2])];
    assert_eq!(s.decompose().unwrap().sequences(), expected);
    assert_eq!(s.decompose_by_degrees().unwrap().sequences(), expected);
    let c5 = seq(&[2, 2, 2, 2, 2]);
    assert_eq!(c5.decompose().unwrap().sequences(), vec![c5.clone()]);
    // A dominating vertex, then the three leaves as separate isolated components.
    let star = seq(&[3, 1, 1, 1]).decompose().unwrap();
    assert_eq!(star.sequences(), vec![seq(&[0]); 4]);
    assert!(star.components[0].pair.as_ref().unwrap().alpha() == [0]);
}

#[test]
fn both_sequence_decompositions_agree() {
    for n in 1..=8 {
        for s in graphic_sequences(n) {
            let by_graph = s.decompose().unwrap();
            let by_degrees = s.decompose_by_degrees().unwrap();
            assert_eq!(by_graph.sequences(), by_degrees.sequences(), "{s}");
            assert_eq!(by_graph.len() > 1, s.is_decomposable().unwrap());
        }
    }
}

/// A decomposable KW-reduction of an indecomposable sequence peels a lone vertex at one end.
#[test]
fn decomposable_kw_reductions_peel_a_single_vertex() {
    for n in 2..=8 {
        for s in graphic_sequences(n).into_iter().filter(|s| !s.is_decomposable().unwrap()) {
            for i in 0..n {
                let r = s.kw_reduction(i).unwrap();
                if r.is_decomposable().unwrap() {
                    let parts = r.decompose().unwrap().sequences();
                    let lone = |p: &DegreeSequence| p.terms() == [0];
                    assert!(lone(&parts[0]) || lone(parts.last().unwrap()), "{s} at {i}: {parts:?}");
                }
            }
        }
    }
}

#[test]
fn text_forms() {
    let s: DegreeSequence = "(3, 2,2,1)".parse().unwrap();
    assert_eq!(s.to_string(), "3,2,2,1");
    assert_eq!("1,3,2,2".parse::<DegreeSequence>().unwrap(), s);
    assert!("3,x".parse::<DegreeSequence>().is_err());
}

proptest! {
    #[test]
    fn complement_of_graphic_is_graphic(g in arb_graph(12)) {
        let s = g.degree_sequence();
        prop_assert!(s.complement().is_graphic());
        prop_assert_eq!(s.complement().complement(), s.clone());
        prop_assert_eq!(s.is_decomposable().unwrap(), s.complement().is_decomposable().unwrap());
        prop_assert_eq!(s.is_decomposable().unwrap(), decompose(&g).unwrap().len() > 1);
    }

    #[test]
    fn augmentations_of_graphic_sequences_realize(g in arb_graph(9), k in 0usize..10) {
        let s = g.degree_sequence();
        let k = k.min(s.len());
        for a in s.augmentations(k).unwrap() {
            prop_assert_eq!(a.len(), s.len() + 1);
            prop_assert_eq!(a.sum(), s.sum() + 2 * k);
        }
    }
}
