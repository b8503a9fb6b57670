use std::collections::HashSet;

use crate::canon::CanonicalForm;
use crate::degseq::{is_graphic_terms, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, Graph};
use crate::split::{CrossDegreePair, KSPartition};

/// Longest sequence accepted by `enumerate_realizations`.
pub const ENUMERATION_MAX_TERMS: usize = 14;

/// Havel–Hakimi realization: vertex `i` gets degree `d_i`, each step joining the current
/// highest residual vertex to the next highest ones.
pub fn realize_one(seq: &DegreeSequence) -> Result<Graph> {
    seq.require_graphic()?;
    let n = seq.len();
    let mut g = Graph::new(n)?;
    let mut residual: Vec<usize> = seq.terms().to_vec();
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&v| residual[v] > 0).collect();
        if order.is_empty() {
            break;
        }
        order.sort_by_key(|&v| (std::cmp::Reverse(residual[v]), v));
        let v = order[0];
        let d = residual[v];
        if d >= order.len() {
            return Err(Error::NotGraphic(seq.to_string()));
        }
        for &u in &order[1..=d] {
            g.add_edge(v, u);
            residual[u] -= 1;
        }
        residual[v] = 0;
    }
    Ok(g)
}

/// One graph per isomorphism class of realizations, in canonical form and sorted.
pub fn enumerate_realizations(seq: &DegreeSequence) -> Result<Vec<Graph>> {
    seq.require_graphic()?;
    if seq.len() > ENUMERATION_MAX_TERMS {
        return Err(Error::CapacityExceeded {
            what: "realization enumeration",
            limit: ENUMERATION_MAX_TERMS,
            got: seq.len(),
        });
    }
    let n = seq.len();
    let mut state = Enumeration {
        n,
        rows: vec![0; n],
        residual: seq.terms().to_vec(),
        seen: HashSet::new(),
    };
    state.extend(0);
    let mut out: Vec<Graph> = state.seen.into_iter().map(|c| c.to_graph()).collect();
    out.sort();
    Ok(out)
}

pub fn realization_count(seq: &DegreeSequence) -> Result<usize> {
    Ok(enumerate_realizations(seq)?.len())
}

pub fn is_unigraphic(seq: &DegreeSequence) -> Result<bool> {
    Ok(realization_count(seq)? == 1)
}

struct Enumeration {
    n: usize,
    rows: Vec<u64>,
    residual: Vec<usize>,
    seen: HashSet<CanonicalForm>,
}

impl Enumeration {
    /// Vertices before `i` are closed; choose the rest of `i`'s neighbourhood among later vertices.
    fn extend(&mut self, i: usize) {
        if i == self.n {
            let g = Graph::from_rows(self.rows.clone()).expect("symmetric rows");
            self.seen.insert(g.canonical_form());
            return;
        }
        let need = self.residual[i];
        let closed = full_mask(i);
        // Later vertices with equal residual and equal closed neighbourhood are interchangeable.
        let mut classes: Vec<(usize, u64, Vec<usize>)> = Vec::new();
        for j in i + 1..self.n {
            if self.residual[j] == 0 {
                continue;
            }
            let key = (self.residual[j], self.rows[j] & closed);
            match classes.iter_mut().find(|c| (c.0, c.1) == key) {
                Some(c) => c.2.push(j),
                None => classes.push((key.0, key.1, vec![j])),
            }
        }
        let available: usize = classes.iter().map(|c| c.2.len()).sum();
        if available < need {
            return;
        }
        let mut counts = vec![0usize; classes.len()];
        self.choose(i, &classes, 0, need, &mut counts);
    }

    fn choose(&mut self, i: usize, classes: &[(usize, u64, Vec<usize>)], at: usize, left: usize, counts: &mut Vec<usize>) {
        if at == classes.len() {
            if left == 0 {
                self.apply(i, classes, counts);
            }
            return;
        }
        let remaining: usize = classes[at..].iter().map(|c| c.2.len()).sum();
        if remaining < left {
            return;
        }
        for c in 0..=classes[at].2.len().min(left) {
            counts[at] = c;
            self.choose(i, classes, at + 1, left - c, counts);
        }
        counts[at] = 0;
    }

    fn apply(&mut self, i: usize, classes: &[(usize, u64, Vec<usize>)], counts: &[usize]) {
        let chosen: Vec<usize> = classes
            .iter()
            .zip(counts)
            .flat_map(|(c, &k)| c.2[..k].iter().copied())
            .collect();
        for &j in &chosen {
            self.rows[i] |= bit(j);
            self.rows[j] |= bit(i);
            self.residual[j] -= 1;
        }
        let saved = self.residual[i];
        self.residual[i] = 0;
        if is_graphic_terms(&self.residual[i + 1..]) {
            self.extend(i + 1);
        }
        self.residual[i] = saved;
        for &j in &chosen {
            self.rows[i] &= !bit(j);
            self.rows[j] &= !bit(i);
            self.residual[j] += 1;
        }
    }
}

/// Split realization of a pair with `beta` as the clique, built greedily: each stable vertex
/// takes the clique vertices of largest remaining cross-degree.
pub fn realize_pair(pair: &CrossDegreePair) -> Result<(Graph, KSPartition)> {
    pair.require_graphic()?;
    let clique_side = pair.beta();
    let stable_side = pair.alpha();
    let m = clique_side.len();
    let n = m + stable_side.len();
    let mut g = Graph::new(n)?;
    for u in 0..m {
        for v in u + 1..m {
            g.add_edge(u, v);
        }
    }
    let mut residual = clique_side.to_vec();
    for (i, &a) in stable_side.iter().enumerate() {
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&u| (std::cmp::Reverse(residual[u]), u));
        for &u in &order[..a] {
            if residual[u] == 0 {
                return Err(Error::PairNotGraphic(pair.to_string()));
            }
            residual[u] -= 1;
            g.add_edge(u, m + i);
        }
    }
    if residual.iter().any(|&r| r != 0) {
        return Err(Error::PairNotGraphic(pair.to_string()));
    }
    Ok((g, KSPartition::new(full_mask(m), full_mask(n) & !full_mask(m))))
}
