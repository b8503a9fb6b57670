use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::split::CrossDegreePair;

/// Degree sequence kept sorted in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut terms: Vec<usize>) -> DegreeSequence {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(terms)
    }

    pub fn terms(&self) -> &[usize] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn distinct_values(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.dedup();
        v
    }

    /// Erdős–Gallai test.
    pub fn is_graphic(&self) -> bool {
        is_graphic_terms(&self.0)
    }

    pub(crate) fn require_graphic(&self) -> Result<()> {
        if self.is_graphic() {
            Ok(())
        } else {
            Err(Error::NotGraphic(self.to_string()))
        }
    }

    /// max{i : d_i >= i - 1}, 1-based; zero for the empty sequence.
    pub fn split_threshold(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, &d)| d >= i)
            .map(|(i, _)| i + 1)
            .next_back()
            .unwrap_or(0)
    }

    /// Hammer–Simeone equality; the sequence must be graphic.
    pub fn is_split(&self) -> Result<bool> {
        self.require_graphic()?;
        Ok(self.is_split_unchecked())
    }

    pub(crate) fn is_split_unchecked(&self) -> bool {
        let m = self.split_threshold();
        let head: usize = self.0[..m].iter().sum();
        let tail: usize = self.0[m..].iter().sum();
        head == m * m.saturating_sub(1) + tail
    }

    /// Degree sequence of the complement of any realization.
    pub fn complement(&self) -> DegreeSequence {
        let n = self.len();
        DegreeSequence::new(self.0.iter().map(|&d| n - 1 - d).collect())
    }

    /// Delete the term at `index` (0-based) and lower the largest remaining terms by one.
    pub fn kw_reduction(&self, index: usize) -> Result<DegreeSequence> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange { index, len: self.len() });
        }
        self.require_graphic()?;
        let d = self.0[index];
        let mut rest: Vec<usize> = self.0.clone();
        rest.remove(index);
        if d > rest.len() || rest[..d].contains(&0) {
            return Err(Error::NotGraphic(self.to_string()));
        }
        // Among equal terms the later ones are lowered; the multiset is the same either way.
        if d > 0 {
            let boundary = rest[d - 1];
            let above = rest.iter().take_while(|&&x| x > boundary).count();
            let tied = rest.iter().filter(|&&x| x == boundary).count();
            let from_tied = d - above;
            for (i, x) in rest.iter_mut().enumerate() {
                if i < above || (i >= above + tied - from_tied && i < above + tied) {
                    *x -= 1;
                }
            }
        }
        Ok(DegreeSequence::new(rest))
    }

    /// Increase `k` distinct terms by one and insert a new term `k`; all distinct results, sorted.
    pub fn augmentations(&self, k: usize) -> Result<Vec<DegreeSequence>> {
        if k > self.len() {
            return Err(Error::IndexOutOfRange { index: k, len: self.len() });
        }
        let groups = value_groups(&self.0);
        let mut out = BTreeSet::new();
        let mut picks = vec![0usize; groups.len()];
        choose_counts(&groups, 0, k, &mut picks, &mut |picks| {
            let mut terms = Vec::with_capacity(self.len() + 1);
            for (&(value, count), &j) in groups.iter().zip(picks.iter()) {
                terms.extend(std::iter::repeat_n(value + 1, j));
                terms.extend(std::iter::repeat_n(value, count - j));
            }
            terms.push(k);
            out.insert(DegreeSequence::new(terms));
        });
        Ok(out.into_iter().collect())
    }

    pub fn all_augmentations(&self) -> Vec<DegreeSequence> {
        let mut out = BTreeSet::new();
        for k in 0..=self.len() {
            out.extend(self.augmentations(k).expect("k within range"));
        }
        out.into_iter().collect()
    }

    /// Remove a term equal to `k` and lower `k` of the remaining positive terms by one.
    pub fn decrementations(&self, k: usize) -> Result<Vec<DegreeSequence>> {
        let Some(pos) = self.0.iter().position(|&d| d == k) else {
            return Err(Error::Precondition(format!("{k} is not a term of {self}")));
        };
        let positive = self.0.iter().filter(|&&d| d > 0).count();
        if k > 0 && positive < k + 1 {
            return Err(Error::Precondition(format!(
                "decrementing {self} by {k} needs {} positive terms",
                k + 1
            )));
        }
        let mut rest = self.0.clone();
        rest.remove(pos);
        let zeros = rest.iter().filter(|&&d| d == 0).count();
        let positive_part: Vec<usize> = rest.iter().copied().filter(|&d| d > 0).collect();
        let groups = value_groups(&positive_part);
        let mut out = BTreeSet::new();
        let mut picks = vec![0usize; groups.len()];
        choose_counts(&groups, 0, k, &mut picks, &mut |picks| {
            let mut terms = Vec::with_capacity(rest.len());
            for (&(value, count), &j) in groups.iter().zip(picks.iter()) {
                terms.extend(std::iter::repeat_n(value - 1, j));
                terms.extend(std::iter::repeat_n(value, count - j));
            }
            terms.extend(std::iter::repeat_n(0, zeros));
            out.insert(DegreeSequence::new(terms));
        });
        Ok(out.into_iter().collect())
    }

    /// Every decrementation by every term, sorted and deduplicated.
    pub fn all_decrementations(&self) -> Vec<DegreeSequence> {
        let mut out = BTreeSet::new();
        for k in self.distinct_values() {
            if let Ok(ds) = self.decrementations(k) {
                out.extend(ds);
            }
        }
        out.into_iter().collect()
    }

    pub fn graphic_decrementations(&self) -> Vec<DegreeSequence> {
        self.all_decrementations().into_iter().filter(|d| d.is_graphic()).collect()
    }

    /// Erdős–Gallai criterion for Tyshkevich decomposability.
    pub fn is_decomposable(&self) -> Result<bool> {
        self.require_graphic()?;
        Ok(self.is_decomposable_unchecked())
    }

    pub(crate) fn is_decomposable_unchecked(&self) -> bool {
        let d = &self.0;
        let n = d.len();
        if n <= 1 {
            return false;
        }
        if d[n - 1] == 0 || d[n - 1] == n - 1 {
            return true;
        }
        let t = self.split_threshold();
        (1..t).any(|k| d[k - 1] > d[k] && eg_lhs(d, k) == eg_rhs(d, k))
    }

    /// Decomposition obtained by realizing the sequence once and decomposing that graph.
    pub fn decompose(&self) -> Result<SequenceDecomposition> {
        self.require_graphic()?;
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let g = crate::realize::realize_one(self)?;
        let dec = crate::tyshkevich::decompose(&g)?;
        Ok(SequenceDecomposition::from_graph_decomposition(&dec))
    }

    /// Decomposition computed from the terms alone by peeling the smallest valid left part.
    pub fn decompose_by_degrees(&self) -> Result<SequenceDecomposition> {
        self.require_graphic()?;
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut components = Vec::new();
        let mut current = self.0.clone();
        while let Some((left, pair, rest)) = peel_left(&current) {
            components.push(SequenceComponent { sequence: DegreeSequence::new(left), pair: Some(pair) });
            current = rest;
        }
        let last = DegreeSequence::new(current);
        let pair = last.is_split_unchecked().then(|| CrossDegreePair::from_split_sequence(&last));
        components.push(SequenceComponent { sequence: last, pair });
        Ok(SequenceDecomposition { components })
    }
}

/// One component of a sequence decomposition; split components carry their cross-degree pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequenceComponent {
    pub sequence: DegreeSequence,
    pub pair: Option<CrossDegreePair>,
}

/// Components listed leftmost first, the last one being the possibly non-split remainder.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequenceDecomposition {
    pub components: Vec<SequenceComponent>,
}

impl SequenceDecomposition {
    pub fn sequences(&self) -> Vec<DegreeSequence> {
        self.components.iter().map(|c| c.sequence.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub(crate) fn from_graph_decomposition(dec: &crate::tyshkevich::Decomposition) -> SequenceDecomposition {
        let components = dec
            .components
            .iter()
            .map(|c| SequenceComponent {
                sequence: c.graph.degree_sequence(),
                pair: c.partition.map(|p| CrossDegreePair::of_graph(&c.graph, &p)),
            })
            .collect();
        SequenceDecomposition { components }
    }
}

/// Smallest (clique, stable, rest) split of the sorted terms; returns the left sequence, its pair and the reduced rest.
fn peel_left(d: &[usize]) -> Option<(Vec<usize>, CrossDegreePair, Vec<usize>)> {
    let n = d.len();
    for s in 1..n {
        let h = n - s;
        for p in 0..=s {
            let q = s - p;
            let clique = &d[..p];
            let stable = &d[n - q..];
            let middle = &d[p..n - q];
            let Some(cross): Option<Vec<usize>> =
                clique.iter().map(|&x| x.checked_sub(h + p.saturating_sub(1))).collect()
            else {
                continue;
            };
            if cross.iter().any(|&c| c > q) || stable.iter().any(|&x| x > p) {
                continue;
            }
            if p == 0 && stable.iter().any(|&x| x != 0) {
                continue;
            }
            if cross.iter().sum::<usize>() != stable.iter().sum::<usize>() {
                continue;
            }
            let pair = CrossDegreePair::new(cross.clone(), stable.to_vec());
            if !pair.is_graphic() {
                continue;
            }
            let Some(rest): Option<Vec<usize>> = middle.iter().map(|&x| x.checked_sub(p)).collect() else {
                continue;
            };
            if rest.iter().any(|&x| x + 1 > h) || !is_graphic_terms(&rest) {
                continue;
            }
            let mut left: Vec<usize> = clique.iter().map(|&x| x - h).collect();
            left.extend_from_slice(stable);
            return Some((left, pair, rest));
        }
    }
    None
}

fn eg_lhs(d: &[usize], k: usize) -> usize {
    d[..k].iter().sum()
}

fn eg_rhs(d: &[usize], k: usize) -> usize {
    k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>()
}

/// Erdős–Gallai test on terms sorted in non-increasing order.
pub(crate) fn is_graphic_terms(d: &[usize]) -> bool {
    let n = d.len();
    if d.windows(2).any(|w| w[0] < w[1]) {
        let mut sorted = d.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        return is_graphic_terms(&sorted);
    }
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    if n > 0 && d[0] >= n {
        return false;
    }
    (1..=n).all(|k| eg_lhs(d, k) <= eg_rhs(d, k))
}

fn value_groups(terms: &[usize]) -> Vec<(usize, usize)> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &t in terms {
        match groups.last_mut() {
            Some((v, c)) if *v == t => *c += 1,
            _ => groups.push((t, 1)),
        }
    }
    groups
}

fn choose_counts(
    groups: &[(usize, usize)],
    at: usize,
    remaining: usize,
    picks: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if at == groups.len() {
        if remaining == 0 {
            emit(picks);
        }
        return;
    }
    let available: usize = groups[at..].iter().map(|g| g.1).sum();
    if available < remaining {
        return;
    }
    for j in 0..=groups[at].1.min(remaining) {
        picks[at] = j;
        choose_counts(groups, at + 1, remaining - j, picks, emit);
    }
    picks[at] = 0;
}

/// Whether `rho` Rao-contains `pi`, i.e. `pi` is reachable from `rho` by iterated decrementations.
pub fn rao_contains(rho: &DegreeSequence, pi: &DegreeSequence) -> Result<bool> {
    rho.require_graphic()?;
    pi.require_graphic()?;
    let mut failed = HashSet::new();
    Ok(reaches(rho, pi, &pi.complement(), &mut failed))
}

fn reaches(
    current: &DegreeSequence,
    target: &DegreeSequence,
    target_complement: &DegreeSequence,
    failed: &mut HashSet<DegreeSequence>,
) -> bool {
    if current.len() == target.len() {
        return current == target;
    }
    if current.len() < target.len() || !dominates(current, target, target_complement) {
        return false;
    }
    if failed.contains(current) {
        return false;
    }
    for next in current.graphic_decrementations() {
        if reaches(&next, target, target_complement, failed) {
            return true;
        }
    }
    failed.insert(current.clone());
    false
}

/// Induced subgraphs can only lower sorted degrees and sorted co-degrees term by term.
fn dominates(current: &DegreeSequence, target: &DegreeSequence, target_complement: &DegreeSequence) -> bool {
    let c = current.terms();
    if c.iter().zip(target.terms()).any(|(a, b)| a < b) {
        return false;
    }
    let cc = current.complement();
    cc.terms().iter().zip(target_complement.terms()).all(|(a, b)| a >= b)
}

/// Every graphic sequence with `n` terms, in increasing lexicographic order.
pub fn graphic_sequences(n: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    let mut terms = Vec::with_capacity(n);
    fn rec(n: usize, max: usize, terms: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
        if terms.len() == n {
            if is_graphic_terms(terms) {
                out.push(DegreeSequence(terms.clone()));
            }
            return;
        }
        for d in 0..=max {
            terms.push(d);
            rec(n, d, terms, out);
            terms.pop();
        }
    }
    if n == 0 {
        return vec![DegreeSequence::default()];
    }
    rec(n, n - 1, &mut terms, &mut out);
    out.sort();
    out
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<DegreeSequence> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() {
            return Ok(DegreeSequence::default());
        }
        let terms = trimmed
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad term {t:?} in {s:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        Ok(DegreeSequence::new(terms))
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(terms: Vec<usize>) -> Self {
        DegreeSequence::new(terms)
    }
}

impl<const N: usize> From<[usize; N]> for DegreeSequence {
    fn from(terms: [usize; N]) -> Self {
        DegreeSequence::new(terms.to_vec())
    }
}
