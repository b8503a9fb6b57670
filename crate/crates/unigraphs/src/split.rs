use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, mask_iter, Graph};

/// Clique and stable-set vertex masks covering the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSPartition {
    pub clique: u64,
    pub stable: u64,
}

impl KSPartition {
    pub fn new(clique: u64, stable: u64) -> KSPartition {
        KSPartition { clique, stable }
    }

    pub fn from_clique(g: &Graph, clique: u64) -> KSPartition {
        KSPartition { clique, stable: g.vertex_mask() & !clique }
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.clique & self.stable == 0
            && self.clique | self.stable == g.vertex_mask()
            && g.is_clique(self.clique)
            && g.is_stable(self.stable)
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.is_valid_for(g) {
            Ok(())
        } else {
            Err(Error::InvalidPartition(format!(
                "clique {:?} / stable {:?} on {}",
                mask_iter(self.clique).collect::<Vec<_>>(),
                mask_iter(self.stable).collect::<Vec<_>>(),
                g
            )))
        }
    }

    pub fn swapped(&self) -> KSPartition {
        KSPartition { clique: self.stable, stable: self.clique }
    }

    pub fn clique_vertices(&self) -> Vec<usize> {
        mask_iter(self.clique).collect()
    }

    pub fn stable_vertices(&self) -> Vec<usize> {
        mask_iter(self.stable).collect()
    }

    /// The partition restricted to `vs`, relabeled in the order of `vs`.
    pub fn restrict(&self, vs: &[usize]) -> KSPartition {
        let mut clique = 0;
        let mut stable = 0;
        for (i, &v) in vs.iter().enumerate() {
            if self.clique & bit(v) != 0 {
                clique |= bit(i);
            } else if self.stable & bit(v) != 0 {
                stable |= bit(i);
            }
        }
        KSPartition { clique, stable }
    }
}

/// All KS-partitions, in increasing order of clique mask; empty exactly when `g` is not split.
pub fn ks_partitions(g: &Graph) -> Vec<KSPartition> {
    let Some(start) = first_partition(g) else {
        return Vec::new();
    };
    let all = g.vertex_mask();
    let mut found: BTreeSet<u64> = BTreeSet::new();
    let mut frontier = vec![start.clique];
    found.insert(start.clique);
    while let Some(k) = frontier.pop() {
        let s = all & !k;
        let mut candidates = Vec::new();
        for v in mask_iter(s) {
            candidates.push(k | bit(v));
            for u in mask_iter(k) {
                candidates.push((k & !bit(u)) | bit(v));
            }
        }
        for u in mask_iter(k) {
            candidates.push(k & !bit(u));
        }
        for c in candidates {
            if !found.contains(&c) && g.is_clique(c) && g.is_stable(all & !c) {
                found.insert(c);
                frontier.push(c);
            }
        }
    }
    found.into_iter().map(|c| KSPartition::from_clique(g, c)).collect()
}

/// A partition read off the degree ordering, if the graph is split.
fn first_partition(g: &Graph) -> Option<KSPartition> {
    let seq = g.degree_sequence();
    if !seq.is_split_unchecked() {
        return None;
    }
    let m = seq.split_threshold();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let clique = order[..m].iter().fold(0u64, |acc, &v| acc | bit(v));
    let p = KSPartition::from_clique(g, clique);
    if p.is_valid_for(g) {
        return Some(p);
    }
    // Ties at the threshold: the degree-(m-1) vertices adjacent to the rest of the top form the clique.
    let high = order[..m].iter().filter(|&&v| g.degree(v) > seq.terms()[m - 1]).fold(0u64, |a, &v| a | bit(v));
    let tied = order.iter().filter(|&&v| g.degree(v) == seq.terms()[m - 1]).fold(0u64, |a, &v| a | bit(v));
    for v in mask_iter(tied) {
        let c = high | bit(v);
        let mut clique = c;
        for w in mask_iter(tied & !bit(v)) {
            if g.neighbors(w) & clique == clique && (clique | bit(w)).count_ones() as usize <= m {
                clique |= bit(w);
            }
        }
        let p = KSPartition::from_clique(g, clique);
        if p.is_valid_for(g) {
            return Some(p);
        }
    }
    brute_force_partitions(g).into_iter().next()
}

/// Exhaustive partition search, kept for small graphs and as a test oracle.
pub fn brute_force_partitions(g: &Graph) -> Vec<KSPartition> {
    let n = g.n();
    assert!(n <= 20, "brute-force partition search is for small graphs");
    let all = g.vertex_mask();
    (0..(1u64 << n))
        .filter(|&c| g.is_clique(c) && g.is_stable(all & !c))
        .map(|c| KSPartition::from_clique(g, c))
        .collect()
}

/// Vertices lying in the clique of one KS-partition and the stable set of another.
pub fn swing_vertices(g: &Graph) -> u64 {
    let parts = ks_partitions(g);
    let in_clique = parts.iter().fold(0u64, |a, p| a | p.clique);
    let in_stable = parts.iter().fold(0u64, |a, p| a | p.stable);
    in_clique & in_stable
}

pub fn is_split_graph(g: &Graph) -> bool {
    g.degree_sequence().is_split_unchecked()
}

/// Complete the stable set and empty the clique; the result has `p.swapped()` as its partition.
pub fn inverse(g: &Graph, p: &KSPartition) -> Result<Graph> {
    p.check(g)?;
    let mut rows = g.rows().to_vec();
    for v in 0..g.n() {
        if p.clique & bit(v) != 0 {
            rows[v] &= !p.clique;
        } else {
            rows[v] |= p.stable & !bit(v);
        }
    }
    Graph::from_rows(rows)
}

/// Unordered pair of non-increasing cross-degree sequences, the lexicographically larger side stored first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossDegreePair {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Alpha,
    Beta,
}

impl CrossDegreePair {
    pub fn new(mut a: Vec<usize>, mut b: Vec<usize>) -> CrossDegreePair {
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable_by(|x, y| y.cmp(x));
        if a >= b {
            CrossDegreePair { alpha: a, beta: b }
        } else {
            CrossDegreePair { alpha: b, beta: a }
        }
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn len(&self) -> usize {
        self.alpha.len() + self.beta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Cross-degrees of a split graph under partition `p`.
    pub fn of_graph(g: &Graph, p: &KSPartition) -> CrossDegreePair {
        let k = p.clique.count_ones() as usize;
        let a = mask_iter(p.clique).map(|v| g.degree(v) + 1 - k).collect();
        let b = mask_iter(p.stable).map(|v| g.degree(v)).collect();
        CrossDegreePair::new(a, b)
    }

    pub fn try_of_graph(g: &Graph, p: &KSPartition) -> Result<CrossDegreePair> {
        p.check(g)?;
        Ok(CrossDegreePair::of_graph(g, p))
    }

    /// Pair of a split sequence using the top `split_threshold` terms as the clique.
    pub(crate) fn from_split_sequence(seq: &DegreeSequence) -> CrossDegreePair {
        let m = seq.split_threshold();
        let d = seq.terms();
        let a = d[..m].iter().map(|&x| x + 1 - m).collect();
        CrossDegreePair::new(a, d[m..].to_vec())
    }

    /// Gale–Ryser test.
    pub fn is_graphic(&self) -> bool {
        gale_ryser(&self.alpha, &self.beta)
    }

    pub(crate) fn require_graphic(&self) -> Result<()> {
        if self.is_graphic() {
            Ok(())
        } else {
            Err(Error::PairNotGraphic(self.to_string()))
        }
    }

    /// Decomposability via the Gale–Ryser equality criterion. The criterion is read with either
    /// side playing alpha: a zero term or a full term is only caught on its own side.
    pub fn is_decomposable(&self) -> Result<bool> {
        self.require_graphic()?;
        Ok(decomposable_from_side(&self.alpha, &self.beta, self.len())
            || decomposable_from_side(&self.beta, &self.alpha, self.len()))
    }

    /// The criterion read with the given side as alpha only.
    pub fn is_decomposable_from(&self, side: Side) -> Result<bool> {
        self.require_graphic()?;
        Ok(match side {
            Side::Alpha => decomposable_from_side(&self.alpha, &self.beta, self.len()),
            Side::Beta => decomposable_from_side(&self.beta, &self.alpha, self.len()),
        })
    }

    /// Remove the `index`-th term (0-based) of `side` and lower that many top terms of the other side.
    pub fn reduction(&self, side: Side, index: usize) -> Result<CrossDegreePair> {
        self.require_graphic()?;
        let (own, other) = match side {
            Side::Alpha => (&self.alpha, &self.beta),
            Side::Beta => (&self.beta, &self.alpha),
        };
        if index >= own.len() {
            return Err(Error::IndexOutOfRange { index, len: own.len() });
        }
        let a = own[index];
        if a > other.len() || other[..a].contains(&0) {
            return Err(Error::PairNotGraphic(self.to_string()));
        }
        let mut own2 = own.clone();
        own2.remove(index);
        let mut other2 = other.clone();
        for x in other2.iter_mut().take(a) {
            *x -= 1;
        }
        Ok(CrossDegreePair::new(own2, other2))
    }

    /// Degree sequence of a realization whose clique is the given side.
    pub fn to_sequence(&self, clique_side: Side) -> DegreeSequence {
        let (clique, stable) = match clique_side {
            Side::Alpha => (&self.alpha, &self.beta),
            Side::Beta => (&self.beta, &self.alpha),
        };
        let m = clique.len();
        let mut terms: Vec<usize> = clique.iter().map(|&b| b + m.saturating_sub(1)).collect();
        terms.extend_from_slice(stable);
        DegreeSequence::new(terms)
    }

    /// Both sequences of realizations, one per choice of clique side.
    pub fn to_sequences(&self) -> Vec<DegreeSequence> {
        let set: BTreeSet<DegreeSequence> =
            [self.to_sequence(Side::Alpha), self.to_sequence(Side::Beta)].into_iter().collect();
        set.into_iter().collect()
    }

    /// The same pair with the two sides read the other way, which is the pair of the complement.
    pub fn complement(&self) -> CrossDegreePair {
        let m = self.beta.len();
        let n = self.alpha.len();
        CrossDegreePair::new(
            self.alpha.iter().map(|&a| m - a).collect(),
            self.beta.iter().map(|&b| n - b).collect(),
        )
    }
}

/// Pair of a realization of the given graph; errors on an invalid partition.
pub fn cross_degree_pair(g: &Graph, p: &KSPartition) -> Result<CrossDegreePair> {
    CrossDegreePair::try_of_graph(g, p)
}

pub fn pair_to_sequence(p: &CrossDegreePair) -> Result<DegreeSequence> {
    p.require_graphic()?;
    Ok(p.to_sequence(Side::Beta))
}

/// Every cross-degree pair obtainable from a KS-partition of a realization of `seq`.
pub fn sequence_to_pairs(seq: &DegreeSequence) -> Result<Vec<CrossDegreePair>> {
    if !seq.is_split()? {
        return Err(Error::Precondition(format!("{seq} is not a split sequence")));
    }
    let d = seq.terms();
    let n = d.len();
    let m = seq.split_threshold();
    let mut out = BTreeSet::new();
    for c in m.saturating_sub(1)..=(m + 1).min(n) {
        let Some(cross): Option<Vec<usize>> =
            d[..c].iter().map(|&x| x.checked_sub(c.saturating_sub(1))).collect()
        else {
            continue;
        };
        let stable = &d[c..];
        if cross.iter().any(|&x| x > n - c) || stable.iter().any(|&x| x > c) {
            continue;
        }
        let pair = CrossDegreePair::new(cross, stable.to_vec());
        if pair.is_graphic() {
            out.insert(pair);
        }
    }
    Ok(out.into_iter().collect())
}

fn gale_ryser(a: &[usize], b: &[usize]) -> bool {
    let (n, m) = (a.len(), b.len());
    if a.iter().any(|&x| x > m) || b.iter().any(|&x| x > n) {
        return false;
    }
    if a.iter().sum::<usize>() != b.iter().sum::<usize>() {
        return false;
    }
    (1..=n).all(|k| gr_lhs(a, k) <= gr_rhs(b, k))
}

fn gr_lhs(a: &[usize], k: usize) -> usize {
    a[..k].iter().sum()
}

fn gr_rhs(b: &[usize], k: usize) -> usize {
    b.iter().map(|&x| x.min(k)).sum()
}

fn decomposable_from_side(a: &[usize], b: &[usize], total: usize) -> bool {
    if total <= 1 {
        return false;
    }
    let (n, m) = (a.len(), b.len());
    if n == 0 {
        return b.iter().all(|&x| x == 0);
    }
    if a[n - 1] == 0 || a[n - 1] == m {
        return true;
    }
    (1..n).any(|k| a[k - 1] > a[k] && gr_lhs(a, k) == gr_rhs(b, k))
}

impl fmt::Display for CrossDegreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &[usize]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{} | {}", side(&self.alpha), side(&self.beta))
    }
}

impl FromStr for CrossDegreePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<CrossDegreePair> {
        let Some((left, right)) = s.split_once('|') else {
            return Err(Error::Parse(format!("pair {s:?} needs the form \"a1,..,an | b1,..,bm\"")));
        };
        let a: DegreeSequence = left.parse()?;
        let b: DegreeSequence = right.parse()?;
        Ok(CrossDegreePair::new(a.into_terms(), b.into_terms()))
    }
}

pub(crate) fn all_vertices(n: usize) -> u64 {
    full_mask(n)
}
