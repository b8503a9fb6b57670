#![allow(dead_code)]

use std::collections::BTreeMap;

use unigraphs::enumerate::all_graphs;
use unigraphs::{DegreeSequence, Graph};

/// Every isomorphism class on `n` vertices grouped by degree sequence.
pub fn classes_by_sequence(n: usize) -> BTreeMap<DegreeSequence, Vec<Graph>> {
    let mut out: BTreeMap<DegreeSequence, Vec<Graph>> = BTreeMap::new();
    for g in all_graphs(n).unwrap() {
        out.entry(g.degree_sequence()).or_default().push(g);
    }
    out
}

pub fn seq(terms: &[usize]) -> DegreeSequence {
    DegreeSequence::new(terms.to_vec())
}

/// Every non-increasing sequence of length `n` with terms at most `max`.
pub fn non_increasing(n: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in 0..=max {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out
}

pub fn k2_plus_k3() -> Graph {
    Graph::complete(2).disjoint_union(&Graph::complete(3)).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}
