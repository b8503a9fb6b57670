use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::degseq::{rao_contains, DegreeSequence};
use crate::error::{Error, Result};
use crate::families::{in_class_i, recognize, FamilyTag};
use crate::graph::Graph;
use crate::realize::{enumerate_realizations, realization_count, ENUMERATION_MAX_TERMS};
use crate::split::CrossDegreePair;
use crate::tyshkevich::decompose;

/// Forbidden induced subgraphs of the hereditary closure: one graph6 per line, `#` comments.
pub const Y_ARTIFACT: &str = include_str!("../data/y.g6");

const L1: [&[usize]; 7] = [
    &[2, 2, 2, 1, 1],
    &[3, 2, 2, 2, 1],
    &[3, 3, 2, 2, 2],
    &[2, 2, 1, 1, 1, 1],
    &[4, 3, 3, 2, 1, 1],
    &[4, 4, 3, 2, 2, 1],
    &[4, 4, 4, 4, 3, 3],
];

const L2_NONSPLIT: [&[usize]; 6] = [
    &[3, 3, 2, 2, 2],
    &[2, 2, 2, 1, 1],
    &[2, 2, 1, 1, 1, 1],
    &[4, 4, 4, 4, 3, 3],
    &[5, 4, 3, 3, 3, 1, 1],
    &[5, 5, 3, 3, 3, 2, 1],
];

const L2_SPLIT: [&[usize]; 14] = [
    &[5, 5, 4, 4, 2, 2, 1, 1],
    &[5, 4, 4, 2, 2, 1, 1, 1],
    &[5, 5, 4, 2, 2, 2, 1, 1],
    &[5, 5, 5, 4, 2, 2, 2, 1],
    &[5, 5, 5, 5, 2, 2, 2, 2],
    &[6, 5, 4, 4, 3, 2, 1, 1],
    &[6, 5, 5, 4, 3, 2, 2, 1],
    &[6, 5, 5, 4, 3, 3, 1, 1],
    &[6, 5, 5, 5, 3, 2, 2, 2],
    &[6, 6, 4, 4, 3, 2, 2, 1],
    &[6, 6, 5, 4, 3, 3, 2, 1],
    &[6, 6, 5, 5, 3, 3, 2, 2],
    &[6, 6, 5, 5, 5, 3, 2, 2],
    &[6, 6, 6, 5, 5, 3, 3, 2],
];

const STAR_PAIRS: [(&[usize], &[usize]); 11] = [
    (&[2, 2, 1, 1, 1], &[3, 2, 2]),
    (&[2, 2, 2, 1, 1], &[3, 3, 2]),
    (&[2, 2, 1, 1], &[2, 2, 1, 1]),
    (&[3, 2, 1, 1], &[3, 2, 1, 1]),
    (&[2, 2, 2, 1], &[2, 2, 2, 1]),
    (&[2, 2, 2, 2], &[2, 2, 2, 2]),
    (&[3, 2, 2, 1], &[3, 2, 2, 1]),
    (&[3, 3, 1, 1], &[3, 2, 2, 1]),
    (&[3, 2, 2, 2], &[3, 2, 2, 2]),
    (&[3, 3, 2, 1], &[3, 3, 2, 1]),
    (&[3, 3, 2, 2], &[3, 3, 2, 2]),
];

fn sequences(list: &[&[usize]]) -> Vec<DegreeSequence> {
    list.iter().map(|t| DegreeSequence::new(t.to_vec())).collect()
}

/// Rao-minimal forbidden sequences of the hereditary unigraphs.
pub fn l1() -> Vec<DegreeSequence> {
    sequences(&L1)
}

/// Rao-minimal forbidden non-split sequences of the hereditary closure.
pub fn l2_nonsplit() -> Vec<DegreeSequence> {
    sequences(&L2_NONSPLIT)
}

/// Rao-minimal forbidden split sequences of the hereditary closure.
pub fn l2_split() -> Vec<DegreeSequence> {
    sequences(&L2_SPLIT)
}

pub fn l2() -> Vec<DegreeSequence> {
    let mut out = l2_nonsplit();
    out.extend(l2_split());
    out
}

/// Indecomposable forbidden cross-degree pairs on eight vertices.
pub fn star_pairs() -> Vec<CrossDegreePair> {
    STAR_PAIRS.iter().map(|(a, b)| CrossDegreePair::new(a.to_vec(), b.to_vec())).collect()
}

/// Minimal forbidden induced subgraphs of the hereditary unigraphs: realizations of L1, K2+C4
/// and its complement.
pub fn derive_f() -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    for s in l1() {
        for g in enumerate_realizations(&s).expect("L1 sequences are graphic") {
            seen.insert(g);
        }
    }
    let k2_c4 = Graph::complete(2).disjoint_union(&Graph::cycle(4)).expect("six vertices");
    seen.insert(k2_c4.canonical());
    seen.insert(k2_c4.complement().canonical());
    seen.into_iter().collect()
}

/// The forbidden induced subgraphs read from the bundled artifact, smallest first.
pub fn y_graphs() -> &'static [Graph] {
    static Y: OnceLock<Vec<Graph>> = OnceLock::new();
    Y.get_or_init(|| parse_graph6_lines(Y_ARTIFACT).expect("bundled artifact is valid graph6"))
}

/// Parse graph6 lines, skipping blanks and `#` comments.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(Graph::from_graph6)
        .collect()
}

/// Conditions for an indecomposable non-split sequence to be realized in the hereditary closure;
/// returns the first satisfied condition number.
pub fn hcu_nonsplit_condition(seq: &DegreeSequence) -> Result<Option<u8>> {
    if seq.is_split()? {
        return Err(Error::Precondition(format!("{seq} is split")));
    }
    if seq.is_decomposable()? {
        return Err(Error::Precondition(format!("{seq} is decomposable")));
    }
    Ok(nonsplit_condition(seq.terms()))
}

pub fn hcu_sequence_nonsplit(seq: &DegreeSequence) -> Result<bool> {
    Ok(hcu_nonsplit_condition(seq)?.is_some())
}

fn nonsplit_condition(d: &[usize]) -> Option<u8> {
    let n = d.len();
    // 1-based access; out-of-range terms fail every comparison.
    let at = |i: usize| if i >= 1 && i <= n { Some(d[i - 1]) } else { None };
    if n < 2 || d[n - 1] < 1 || d[0] + 2 > n {
        return None;
    }
    if at(2) == Some(1) {
        return Some(1);
    }
    if at(n - 1) == Some(n - 2) {
        return Some(2);
    }
    if d[0] == n - 2 && at(2) == Some(2) {
        return Some(3);
    }
    if d[n - 1] == 1 && n >= 3 && at(n - 1) == Some(n - 3) {
        return Some(4);
    }
    if d == [2, 2, 2, 2, 2] {
        return Some(5);
    }
    None
}

/// Conditions for an indecomposable cross-degree pair; returns the first satisfied label.
pub fn hcu_pair_condition(pair: &CrossDegreePair) -> Result<Option<&'static str>> {
    if pair.is_decomposable()? {
        return Err(Error::Precondition(format!("{pair} is decomposable")));
    }
    Ok(pair_condition(pair.alpha(), pair.beta()))
}

pub fn hcu_pair_split(pair: &CrossDegreePair) -> Result<bool> {
    Ok(hcu_pair_condition(pair)?.is_some())
}

fn pair_condition(a: &[usize], b: &[usize]) -> Option<&'static str> {
    let (n, m) = (a.len(), b.len());
    if n == 0 || m == 0 || a[n - 1] < 1 || b[m - 1] < 1 || a[0] + 1 > m || b[0] + 1 > n {
        return None;
    }
    let get = |s: &[usize], i: usize| if i >= 1 && i <= s.len() { Some(s[i - 1]) } else { None };
    let checks: [(&str, bool); 8] = [
        ("1a", get(a, 2) == Some(1)),
        ("2a", n >= 2 && get(a, n - 1) == Some(m - 1)),
        ("3a", b[0] == n - 1 && a[0] <= 2),
        ("4a", b[m - 1] == 1 && a[n - 1] + 2 >= m),
        ("1b", get(b, 2) == Some(1)),
        ("2b", m >= 2 && get(b, m - 1) == Some(n - 1)),
        ("3b", a[0] == m - 1 && b[0] <= 2),
        ("4b", a[n - 1] == 1 && b[m - 1] + 2 >= n),
    ];
    checks.iter().find(|c| c.1).map(|c| c.0)
}

/// Membership of a sequence's realizations in the hereditary closure, component by component.
/// Returns the first component that fails, if any.
pub fn hcu_failing_component(seq: &DegreeSequence) -> Result<Option<DegreeSequence>> {
    let dec = seq.decompose_by_degrees()?;
    for c in &dec.components {
        let ok = if c.sequence.len() == 1 {
            true
        } else {
            match &c.pair {
                Some(p) => pair_condition(p.alpha(), p.beta()).is_some(),
                None => nonsplit_condition(c.sequence.terms()).is_some(),
            }
        };
        if !ok {
            return Ok(Some(c.sequence.clone()));
        }
    }
    Ok(None)
}

pub fn is_hcu_sequence(seq: &DegreeSequence) -> Result<bool> {
    Ok(hcu_failing_component(seq)?.is_none())
}

/// A sequence whose realizations are not in the hereditary closure.
pub fn is_forbidden(seq: &DegreeSequence) -> Result<bool> {
    Ok(!is_hcu_sequence(seq)?)
}

/// Membership in the hereditary unigraphs by sequence: no L1 element is Rao-contained.
pub fn hu_rao_witness(seq: &DegreeSequence) -> Result<Option<DegreeSequence>> {
    for s in l1() {
        if rao_contains(seq, &s)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

pub fn hcu_rao_witness(seq: &DegreeSequence) -> Result<Option<DegreeSequence>> {
    for s in l2() {
        if s.len() <= seq.len() && rao_contains(seq, &s)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    Unigraph,
    Hu,
    Hcu,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Auto,
    Structural,
    Sequence,
    Rao,
    Forbidden,
    Brute,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    Sequence(DegreeSequence),
    Subgraph { graph: Graph, vertices: Vec<usize> },
    Families(Vec<Option<FamilyTag>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub class: Class,
    pub member: bool,
    pub route: Route,
    pub witness: Witness,
}

fn first_induced(g: &Graph, forbidden: &[Graph]) -> Option<(Graph, Vec<usize>)> {
    let seq = g.degree_sequence();
    forbidden
        .iter()
        .filter(|h| h.n() <= g.n())
        .filter(|h| h.degree_sequence().terms().iter().zip(seq.terms()).all(|(x, y)| x <= y))
        .find_map(|h| g.find_induced(h).map(|w| (h.clone(), w)))
}

fn subgraph_verdict(class: Class, route: Route, found: Option<(Graph, Vec<usize>)>) -> Verdict {
    match found {
        Some((graph, vertices)) => Verdict { class, member: false, route, witness: Witness::Subgraph { graph, vertices } },
        None => Verdict { class, member: true, route, witness: Witness::None },
    }
}

fn sequence_verdict(class: Class, route: Route, found: Option<DegreeSequence>) -> Verdict {
    match found {
        Some(s) => Verdict { class, member: false, route, witness: Witness::Sequence(s) },
        None => Verdict { class, member: true, route, witness: Witness::None },
    }
}

fn check_enumerable(g: &Graph) -> Result<()> {
    if g.n() > ENUMERATION_MAX_TERMS {
        return Err(Error::CapacityExceeded { what: "realization counting", limit: ENUMERATION_MAX_TERMS, got: g.n() });
    }
    Ok(())
}

fn nonempty(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// Structural route (default): decompose and recognize every component. Brute route: count realizations.
pub fn is_unigraph(g: &Graph, route: Route) -> Result<Verdict> {
    nonempty(g)?;
    match route {
        Route::Auto | Route::Structural => {
            let dec = decompose(g)?;
            let tags: Vec<Option<FamilyTag>> =
                dec.components.iter().map(|c| recognize(&c.graph)).collect::<Result<_>>()?;
            let member = tags.iter().all(Option::is_some);
            Ok(Verdict { class: Class::Unigraph, member, route: Route::Structural, witness: Witness::Families(tags) })
        }
        Route::Brute => {
            check_enumerable(g)?;
            let member = realization_count(&g.degree_sequence())? == 1;
            Ok(Verdict { class: Class::Unigraph, member, route, witness: Witness::None })
        }
        other => Err(Error::Precondition(format!("route {other:?} does not apply to unigraphs"))),
    }
}

/// Rao route (default): no L1 sequence is Rao-contained. Forbidden route: no member of `derive_f`
/// is induced. Brute route: every induced subgraph has a unique realization.
pub fn is_hu(g: &Graph, route: Route) -> Result<Verdict> {
    nonempty(g)?;
    match route {
        Route::Auto | Route::Rao => Ok(sequence_verdict(Class::Hu, Route::Rao, hu_rao_witness(&g.degree_sequence())?)),
        Route::Forbidden => Ok(subgraph_verdict(Class::Hu, route, first_induced(g, &derive_f()))),
        Route::Brute => {
            check_enumerable(g)?;
            let mut counted = std::collections::HashMap::new();
            for mask in 1..=g.vertex_mask() {
                let h = g.induced_mask(mask);
                let s = h.degree_sequence();
                let unique = match counted.get(&s) {
                    Some(&u) => u,
                    None => {
                        let u = realization_count(&s)? == 1;
                        counted.insert(s.clone(), u);
                        u
                    }
                };
                if !unique {
                    let vertices = crate::graph::mask_iter(mask).collect();
                    return Ok(Verdict { class: Class::Hu, member: false, route, witness: Witness::Subgraph { graph: h, vertices } });
                }
            }
            Ok(Verdict { class: Class::Hu, member: true, route, witness: Witness::None })
        }
        other => Err(Error::Precondition(format!("route {other:?} does not apply to HU"))),
    }
}

/// Sequence route (default), Rao route against L2, forbidden route against the bundled artifact,
/// and a structural route checking every component against the families.
pub fn is_hcu(g: &Graph, route: Route) -> Result<Verdict> {
    nonempty(g)?;
    match route {
        Route::Auto | Route::Sequence => {
            Ok(sequence_verdict(Class::Hcu, Route::Sequence, hcu_failing_component(&g.degree_sequence())?))
        }
        Route::Rao => Ok(sequence_verdict(Class::Hcu, route, hcu_rao_witness(&g.degree_sequence())?)),
        Route::Forbidden => Ok(subgraph_verdict(Class::Hcu, route, first_induced(g, y_graphs()))),
        Route::Structural | Route::Brute => {
            let dec = decompose(g)?;
            let mut member = true;
            let mut tags = Vec::new();
            for c in &dec.components {
                tags.push(recognize(&c.graph)?);
                member &= in_class_i(&c.graph)?;
            }
            Ok(Verdict { class: Class::Hcu, member, route: Route::Structural, witness: Witness::Families(tags) })
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Unigraph => "unigraph",
            Class::Hu => "hu",
            Class::Hcu => "hcu",
        })
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Auto => "auto",
            Route::Structural => "structural",
            Route::Sequence => "sequence",
            Route::Rao => "rao",
            Route::Forbidden => "forbidden",
            Route::Brute => "brute",
        })
    }
}
