mod common;

use std::collections::BTreeSet;

use common::{arb_graph, seq};
use proptest::prelude::*;
use unigraphs::enumerate::all_graphs;
use unigraphs::graph::Graph;
use unigraphs::split::{
    brute_force_partitions, inverse, pair_to_sequence, sequence_to_pairs, swing_vertices, CrossDegreePair, Side,
};
use unigraphs::tyshkevich::decompose;
use unigraphs::{ks_partitions, DegreeSequence, KSPartition};

fn pair(a: &[usize], b: &[usize]) -> CrossDegreePair {
    CrossDegreePair::new(a.to_vec(), b.to_vec())
}

#[test]
fn partition_examples() {
    let p4 = Graph::path(4);
    assert_eq!(ks_partitions(&p4), vec![KSPartition::new(0b0110, 0b1001)]);
    assert_eq!(swing_vertices(&p4), 0);
    assert!(ks_partitions(&Graph::cycle(5)).is_empty());
    // Empty parts allowed: {a}|{b}, {b}|{a} and {a,b}|{}.
    let k2 = Graph::complete(2);
    assert_eq!(ks_partitions(&k2).len(), 3);
    assert_eq!(swing_vertices(&k2), 0b11);
}

#[test]
fn partitions_match_brute_force() {
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            assert_eq!(ks_partitions(&g), brute_force_partitions(&g), "{g}");
        }
    }
}

#[test]
fn indecomposable_split_graphs_have_one_partition() {
    for n in 2..=7 {
        for g in all_graphs(n).unwrap() {
            let parts = ks_partitions(&g);
            if !parts.is_empty() && decompose(&g).unwrap().len() == 1 {
                assert_eq!(parts.len(), 1, "{g}");
                assert_eq!(swing_vertices(&g), 0);
            }
        }
    }
}

/// The degree criterion (degree equal to the clique number) disagrees with the two-partition definition.
#[test]
fn swing_degree_criterion_disagrees_on_k2() {
    let k2 = Graph::complete(2);
    let omega = ks_partitions(&k2).iter().map(|p| p.clique.count_ones() as usize).max().unwrap();
    assert_eq!(omega, 2);
    assert!((0..2).all(|v| k2.degree(v) != omega));
    assert_eq!(swing_vertices(&k2), 0b11);
}

#[test]
fn inverse_examples() {
    let p4 = Graph::path(4);
    let p = ks_partitions(&p4)[0];
    let inv = inverse(&p4, &p).unwrap();
    assert!(inv.is_isomorphic(&p4));
    assert_eq!(inverse(&inv, &p.swapped()).unwrap(), p4);
    let k2 = Graph::complete(2);
    assert_eq!(inverse(&k2, &KSPartition::new(0b01, 0b10)).unwrap(), k2);
    assert!(inverse(&Graph::cycle(4), &KSPartition::new(0b0011, 0b1100)).is_err());
}

#[test]
fn cross_degree_examples() {
    let p4 = Graph::path(4);
    assert_eq!(CrossDegreePair::of_graph(&p4, &ks_partitions(&p4)[0]), pair(&[1, 1], &[1, 1]));
    assert_eq!(CrossDegreePair::of_graph(&Graph::complete(2), &KSPartition::new(1, 2)), pair(&[1], &[1]));
    let star = Graph::star(3);
    assert_eq!(CrossDegreePair::of_graph(&star, &KSPartition::new(1, 0b1110)), pair(&[3], &[1, 1, 1]));
    assert_eq!(pair(&[1, 1, 1], &[3]).alpha(), &[3]);
}

#[test]
fn inverse_preserves_cross_degrees_and_indecomposability() {
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            for p in ks_partitions(&g) {
                let inv = inverse(&g, &p).unwrap();
                assert!(p.swapped().is_valid_for(&inv));
                assert_eq!(CrossDegreePair::of_graph(&g, &p), CrossDegreePair::of_graph(&inv, &p.swapped()));
                assert_eq!(inverse(&inv, &p.swapped()).unwrap(), g);
                assert_eq!(decompose(&g).unwrap().len() == 1, decompose(&inv).unwrap().len() == 1);
            }
        }
    }
}

#[test]
fn gale_ryser_examples() {
    assert!(pair(&[2, 2, 1, 1], &[2, 2, 2]).is_graphic());
    assert!(!pair(&[4, 4, 1, 1, 1], &[4, 4, 1, 1, 1]).is_graphic());
    assert!(pair(&[1], &[1]).is_graphic());
    assert!(!pair(&[2], &[1]).is_graphic());
}

/// Every bipartite degree pair realized with sides of size `n` and `m`.
fn bipartite_pairs(n: usize, m: usize) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << (n * m)) {
        let mut a = vec![0; n];
        let mut b = vec![0; m];
        for i in 0..n {
            for j in 0..m {
                if mask >> (i * m + j) & 1 == 1 {
                    a[i] += 1;
                    b[j] += 1;
                }
            }
        }
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable_by(|x, y| y.cmp(x));
        out.insert((a, b));
    }
    out
}

#[test]
fn gale_ryser_matches_bipartite_realizations() {
    for total in 1..=8 {
        for n in 0..=total {
            let m = total - n;
            let realized = bipartite_pairs(n, m);
            for a in common::non_increasing(n, m) {
                for b in common::non_increasing(m, n) {
                    let p = CrossDegreePair::new(a.clone(), b.clone());
                    assert_eq!(p.is_graphic(), realized.contains(&(a.clone(), b.clone())), "{p}");
                    if p.is_graphic() {
                        let (g, part) = unigraphs::realize::realize_pair(&p).unwrap();
                        assert_eq!(CrossDegreePair::of_graph(&g, &part), p);
                    } else {
                        assert!(unigraphs::realize::realize_pair(&p).is_err());
                    }
                }
            }
        }
    }
}

#[test]
fn pair_decomposability_examples() {
    assert!(!pair(&[1, 1], &[1, 1]).is_decomposable().unwrap());
    assert!(pair(&[1], &[1]).is_decomposable().unwrap());
    assert!(!pair(&[2, 2, 1, 1], &[2, 2, 1, 1]).is_decomposable().unwrap());
    assert!(pair(&[2], &[2]).is_decomposable().is_err());
    // P3 with its clique on the longer side: the zero cross-degree is invisible from the other side.
    let p3 = pair(&[1, 0], &[1]);
    assert!(p3.is_decomposable().unwrap());
    assert!(!p3.is_decomposable_from(Side::Beta).unwrap());
}

#[test]
fn pair_decomposability_matches_graph_decomposition() {
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            for p in ks_partitions(&g) {
                let cd = CrossDegreePair::of_graph(&g, &p);
                let by_graph = decompose(&g).unwrap().len() > 1;
                assert_eq!(cd.is_decomposable().unwrap(), by_graph, "{g} {cd} {p:?}");
                // Each one-sided reading is sound on its own.
                assert!(!cd.is_decomposable_from(Side::Alpha).unwrap() || by_graph);
                assert!(!cd.is_decomposable_from(Side::Beta).unwrap() || by_graph);
            }
        }
    }
}

#[test]
fn pair_reduction_examples() {
    // The canonical order stores (3,3,2) first, so the six-term side is beta.
    let p = pair(&[2, 2, 1, 1, 1, 1], &[3, 3, 2]);
    assert_eq!(p.reduction(Side::Beta, 2).unwrap(), pair(&[2, 2, 1, 1, 1], &[3, 2, 2]));
    let z = pair(&[2, 0], &[1, 1]);
    assert_eq!(z.reduction(Side::Alpha, 1).unwrap(), pair(&[2], &[1, 1]));
    assert!(p.reduction(Side::Alpha, 3).is_err());
}

/// Reducing a stable-side term is the KW-reduction at that vertex of the associated sequence.
#[test]
fn pair_reduction_is_a_kw_reduction() {
    for total in 2..=7 {
        for n in 1..total {
            let m = total - n;
            for (a, b) in bipartite_pairs(n, m) {
                let p = CrossDegreePair::new(a.clone(), b.clone());
                // Clique side `b`, stable side `a`.
                let clique_side = if p.beta() == b.as_slice() { Side::Beta } else { Side::Alpha };
                let stable_side = if clique_side == Side::Beta { Side::Alpha } else { Side::Beta };
                let s = p.to_sequence(clique_side);
                for (i, &ai) in a.iter().enumerate() {
                    let idx = m + i;
                    assert_eq!(s.terms()[idx], ai);
                    let reduced = p.reduction(stable_side, i).unwrap();
                    if m < 2 {
                        continue;
                    }
                    let via_sequence = s.kw_reduction(idx).unwrap();
                    let reduced_clique = if reduced.beta() == &a_side_after(&b, ai)[..] { Side::Beta } else { Side::Alpha };
                    assert_eq!(reduced.to_sequence(reduced_clique), via_sequence, "{p} at {i}");
                }
            }
        }
    }
}

fn a_side_after(b: &[usize], ai: usize) -> Vec<usize> {
    let mut b = b.to_vec();
    for x in b.iter_mut().take(ai) {
        *x -= 1;
    }
    b.sort_unstable_by(|x, y| y.cmp(x));
    b
}

#[test]
fn pair_sequence_examples() {
    assert_eq!(pair_to_sequence(&pair(&[1, 1], &[1, 1])).unwrap(), seq(&[2, 2, 1, 1]));
    assert_eq!(pair_to_sequence(&pair(&[1], &[1])).unwrap(), seq(&[1, 1]));
    let star = pair(&[2, 2, 1, 1, 1], &[3, 2, 2]);
    assert_eq!(
        star.to_sequences(),
        vec![seq(&[5, 4, 4, 2, 2, 1, 1, 1]), seq(&[6, 6, 5, 5, 5, 3, 2, 2])]
    );
    assert!(sequence_to_pairs(&seq(&[2, 2, 2, 2])).is_err());
    assert_eq!(sequence_to_pairs(&seq(&[2, 2, 1, 1])).unwrap(), vec![pair(&[1, 1], &[1, 1])]);
}

#[test]
fn sequence_to_pairs_covers_every_partition() {
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            let parts = ks_partitions(&g);
            if parts.is_empty() {
                continue;
            }
            let expected: BTreeSet<CrossDegreePair> =
                parts.iter().map(|p| CrossDegreePair::of_graph(&g, p)).collect();
            let found: BTreeSet<CrossDegreePair> =
                sequence_to_pairs(&g.degree_sequence()).unwrap().into_iter().collect();
            assert_eq!(found, expected, "{g}");
            for cd in &expected {
                assert!(cd.to_sequences().contains(&g.degree_sequence()) || cd.to_sequences().iter().any(|s| *s == g.degree_sequence()));
            }
        }
    }
}

#[test]
fn pair_text_form() {
    let p: CrossDegreePair = "1,1,2 | 3,1".parse().unwrap();
    assert_eq!(p, pair(&[2, 1, 1], &[3, 1]));
    assert_eq!(p.to_string(), "3,1 | 2,1,1");
    assert!("1,2".parse::<CrossDegreePair>().is_err());
}

#[test]
fn sequence_of_pair_round_trips() {
    for s in (1..=7).flat_map(unigraphs::degseq::graphic_sequences) {
        if !s.is_split().unwrap() {
            continue;
        }
        for p in sequence_to_pairs(&s).unwrap() {
            assert!(p.to_sequences().contains(&s), "{s} {p}");
        }
    }
    let _ = DegreeSequence::default();
}

proptest! {
    #[test]
    fn complement_pair_matches_complement_graph(g in arb_graph(10)) {
        for p in ks_partitions(&g) {
            let cd = CrossDegreePair::of_graph(&g, &p);
            let gc = g.complement();
            prop_assert_eq!(CrossDegreePair::of_graph(&gc, &p.swapped()), cd.complement());
        }
    }
}
