use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bit, mask_iter, Graph};
use crate::split::{inverse, ks_partitions, swing_vertices, KSPartition};
use crate::tyshkevich::is_indecomposable;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    C5,
    K1,
    T1 { m: usize },
    T2 { m: usize, n: usize },
    T3 { m: usize },
    T4 { p: usize, q: usize },
    /// `(p_i, q_i)` groups: `q_i` clique vertices with `p_i` leaves each.
    T5 { groups: Vec<(usize, usize)> },
    T6 { p: usize, q1: usize, q2: usize },
    T7 { p: usize, q: usize },
}

impl Family {
    pub fn is_split(&self) -> bool {
        !matches!(self, Family::C5 | Family::T1 { .. } | Family::T2 { .. } | Family::T3 { .. })
    }

    fn check(&self) -> Result<()> {
        let ok = match self {
            Family::C5 | Family::K1 => true,
            Family::T1 { m } => *m >= 2,
            Family::T2 { m, n } => *m >= 1 && *n >= 2,
            Family::T3 { m } => *m >= 1,
            Family::T4 { p, q } => *p >= 1 && *q >= 2,
            Family::T5 { groups } => groups.len() >= 2 && groups.iter().all(|&(p, q)| p >= 1 && q >= 1),
            Family::T6 { p, q1, q2 } => *p >= 1 && *q1 >= 1 && *q2 >= 1,
            Family::T7 { p, q } => *p >= 1 && *q >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(format!("parameters out of range for {self}")))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Plain,
    Complement,
    Inverse,
    InverseComplement,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Plain, Variant::Complement, Variant::Inverse, Variant::InverseComplement];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Complement => "complement",
            Variant::Inverse => "inverse",
            Variant::InverseComplement => "inverse-complement",
        }
    }

    fn needs_split(&self) -> bool {
        matches!(self, Variant::Inverse | Variant::InverseComplement)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyTag {
    pub family: Family,
    pub variant: Variant,
}

impl FamilyTag {
    pub fn new(family: Family, variant: Variant) -> FamilyTag {
        FamilyTag { family, variant }
    }

    pub fn plain(family: Family) -> FamilyTag {
        FamilyTag { family, variant: Variant::Plain }
    }
}

/// A constructed family member with its KS-partition (split families) and named vertices.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub partition: Option<KSPartition>,
    pub labels: BTreeMap<&'static str, usize>,
}

struct Builder {
    edges: Vec<(usize, usize)>,
    n: usize,
    clique: u64,
    labels: BTreeMap<&'static str, usize>,
}

impl Builder {
    fn new() -> Builder {
        Builder { edges: Vec::new(), n: 0, clique: 0, labels: BTreeMap::new() }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn clique_vertex(&mut self) -> usize {
        let v = self.vertex();
        self.clique |= bit(v);
        v
    }

    fn leaves(&mut self, owner: usize, count: usize) -> Vec<usize> {
        (0..count)
            .map(|_| {
                let v = self.vertex();
                self.edges.push((owner, v));
                v
            })
            .collect()
    }

    fn finish(self, split: bool) -> Result<LabeledGraph> {
        let mut g = Graph::from_edges(self.n, &self.edges)?;
        let partition = split.then(|| {
            let all = g.vertex_mask();
            for u in mask_iter(self.clique) {
                for v in mask_iter(self.clique) {
                    if u < v {
                        g.add_edge(u, v);
                    }
                }
            }
            KSPartition::new(self.clique, all & !self.clique)
        });
        Ok(LabeledGraph { graph: g, partition, labels: self.labels })
    }
}

fn construct_plain(family: &Family) -> Result<LabeledGraph> {
    family.check()?;
    let mut b = Builder::new();
    match family {
        Family::C5 => {
            let vs: Vec<usize> = (0..5).map(|_| b.vertex()).collect();
            for i in 0..5 {
                b.edges.push((vs[i], vs[(i + 1) % 5]));
            }
        }
        Family::K1 => {
            b.vertex();
        }
        Family::T1 { m } => {
            for _ in 0..*m {
                let u = b.vertex();
                b.leaves(u, 1);
            }
        }
        Family::T2 { m, n } => {
            for _ in 0..*m {
                let u = b.vertex();
                b.leaves(u, 1);
            }
            let center = b.vertex();
            b.leaves(center, *n);
        }
        Family::T3 { m } => {
            let c = b.vertex();
            let a = b.vertex();
            let bb = b.vertex();
            let d = b.vertex();
            b.edges.extend([(c, bb), (bb, a), (a, d), (d, c)]);
            b.labels.extend([("a", a), ("b", bb), ("c", c), ("d", d)]);
            for _ in 0..*m {
                let x = b.vertex();
                let y = b.vertex();
                b.edges.extend([(c, x), (c, y), (x, y)]);
            }
        }
        Family::T4 { p, q } => {
            for _ in 0..*q {
                let k = b.clique_vertex();
                b.leaves(k, *p);
            }
        }
        Family::T5 { groups } => {
            for &(p, q) in groups {
                for _ in 0..q {
                    let k = b.clique_vertex();
                    b.leaves(k, p);
                }
            }
        }
        Family::T6 { p, q1, q2 } => build_t6(&mut b, *p, *q1, *q2),
        Family::T7 { p, q } => {
            build_t6(&mut b, *p, 2, *q);
            let e = b.labels["e"];
            let f = b.clique_vertex();
            b.labels.insert("f", f);
            let stable: Vec<usize> = (0..b.n).filter(|&v| b.clique & bit(v) == 0 && v != e).collect();
            for v in stable {
                b.edges.push((f, v));
            }
        }
    }
    b.finish(family.is_split())
}

/// Q1 vertices come first; the first of them is labeled `x1`.
fn build_t6(b: &mut Builder, p: usize, q1: usize, q2: usize) {
    let e = b.vertex();
    b.labels.insert("e", e);
    for i in 0..q1 {
        let k = b.clique_vertex();
        if i == 0 {
            b.labels.insert("x1", k);
        }
        b.edges.push((k, e));
        b.leaves(k, p);
    }
    for _ in 0..q2 {
        let k = b.clique_vertex();
        b.leaves(k, p + 1);
    }
}

/// Build a family member; labels keep pointing at the same vertices under every variant.
pub fn construct(tag: &FamilyTag) -> Result<LabeledGraph> {
    let plain = construct_plain(&tag.family)?;
    if tag.variant.needs_split() && plain.partition.is_none() {
        return Err(Error::Precondition(format!("{} is not split and has no inverse", tag.family)));
    }
    let LabeledGraph { graph, partition, labels } = plain;
    let (graph, partition) = match tag.variant {
        Variant::Plain => (graph, partition),
        Variant::Complement => (graph.complement(), partition.map(|p| p.swapped())),
        Variant::Inverse => {
            let p = partition.expect("split family");
            (inverse(&graph, &p)?, Some(p.swapped()))
        }
        Variant::InverseComplement => {
            let p = partition.expect("split family");
            (inverse(&graph, &p)?.complement(), Some(p))
        }
    };
    Ok(LabeledGraph { graph, partition, labels })
}

/// The tag of an indecomposable unigraph, or `None` if `g` is an indecomposable non-unigraph.
pub fn recognize(g: &Graph) -> Result<Option<FamilyTag>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_indecomposable(g)? {
        return Err(Error::Precondition(format!("{g} is decomposable")));
    }
    if g.n() == 1 {
        return Ok(Some(FamilyTag::plain(Family::K1)));
    }
    for (variant, h) in variants(g) {
        if let Some(family) = recognize_plain(&h) {
            return Ok(Some(FamilyTag::new(family, variant)));
        }
    }
    Ok(None)
}

/// `g` with each variant undone, so a plain family match on the result tags `g` with that variant.
fn variants(g: &Graph) -> Vec<(Variant, Graph)> {
    let mut out = vec![(Variant::Plain, g.clone()), (Variant::Complement, g.complement())];
    if let Some(p) = ks_partitions(g).first() {
        let inv = inverse(g, p).expect("valid partition");
        out.push((Variant::Inverse, inv.clone()));
        out.push((Variant::InverseComplement, inv.complement()));
    }
    out
}

fn same_shape(h: &Graph, family: Family) -> Option<Family> {
    let built = construct_plain(&family).ok()?;
    (built.graph.degree_sequence() == h.degree_sequence() && built.graph.is_isomorphic(h)).then_some(family)
}

fn recognize_plain(h: &Graph) -> Option<Family> {
    let n = h.n();
    let d = h.degree_sequence();
    let terms = d.terms();
    if n == 5 && terms.iter().all(|&x| x == 2) {
        if let Some(f) = same_shape(h, Family::C5) {
            return Some(f);
        }
    }
    if n >= 4 && n.is_multiple_of(2) && terms.iter().all(|&x| x == 1) {
        return same_shape(h, Family::T1 { m: n / 2 });
    }
    if n >= 5 && terms[0] >= 2 && terms[1..].iter().all(|&x| x == 1) && (n - 1 - terms[0]).is_multiple_of(2) && n - 1 > terms[0] {
        if let Some(f) = same_shape(h, Family::T2 { m: (n - 1 - terms[0]) / 2, n: terms[0] }) {
            return Some(f);
        }
    }
    if n >= 6 && n.is_multiple_of(2) {
        if let Some(f) = same_shape(h, Family::T3 { m: (n - 4) / 2 }) {
            return Some(f);
        }
    }
    let parts = ks_partitions(h);
    let p = *parts.first()?;
    if let Some(f) = leaf_family(h, &p) {
        return Some(f);
    }
    // T6 on n = (q1+q2) + q1*p + q2*(p+1) + 1 vertices, T7 on that with q1 = 2 plus one.
    for pp in 1..n {
        for q1 in 1..n {
            for q2 in 1..n {
                let size = q1 + q2 + q1 * pp + q2 * (pp + 1) + 1;
                if size > n {
                    break;
                }
                if size == n {
                    if let Some(f) = same_shape(h, Family::T6 { p: pp, q1, q2 }) {
                        return Some(f);
                    }
                }
                if q1 == 2 && size + 1 == n {
                    if let Some(f) = same_shape(h, Family::T7 { p: pp, q: q2 }) {
                        return Some(f);
                    }
                }
            }
        }
    }
    None
}

/// T4 or T5: every stable vertex is a leaf and every clique vertex has at least one.
fn leaf_family(h: &Graph, p: &KSPartition) -> Option<Family> {
    if mask_iter(p.stable).any(|v| h.degree(v) != 1) {
        return None;
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for v in mask_iter(p.clique) {
        let leaves = (h.neighbors(v) & p.stable).count_ones() as usize;
        if leaves == 0 {
            return None;
        }
        *counts.entry(leaves).or_default() += 1;
    }
    let groups: Vec<(usize, usize)> = counts.into_iter().rev().collect();
    let family = match groups.as_slice() {
        [(p, q)] if *q >= 2 => Family::T4 { p: *p, q: *q },
        [_] | [] => return None,
        _ => Family::T5 { groups },
    };
    Some(family)
}

/// Which of the five conditions places a graph in the class of indecomposable non-unigraphs
/// induced in a unigraph, and on which variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NWitness {
    pub condition: u8,
    pub variant: Variant,
}

/// Membership in the class of indecomposable non-unigraphs that are induced in an indecomposable unigraph.
pub fn in_class_n(g: &Graph) -> Option<NWitness> {
    if g.n() < 2 || g.dominating_vertices() != 0 || g.isolated_vertices() != 0 || swing_vertices(g) != 0 {
        return None;
    }
    for (variant, h) in variants(g) {
        if let Some(condition) = n_condition(&h) {
            return Some(NWitness { condition, variant });
        }
    }
    None
}

/// Indecomposable unigraph or member of the class above; errors on decomposable input.
pub fn in_class_i(g: &Graph) -> Result<bool> {
    Ok(recognize(g)?.is_some() || in_class_n(g).is_some())
}

fn n_condition(h: &Graph) -> Option<u8> {
    if let Some(c) = t3_condition(h) {
        return Some(c);
    }
    let p = *ks_partitions(h).first()?;
    if t6_condition(h, &p) {
        return Some(3);
    }
    t7_condition(h, &p)
}

/// Conditions (1) and (2): `c` misses only `a`, the neighbours of `a` are the C4 vertices `b`/`d`,
/// and everything else hangs off `c` as a matching.
fn t3_condition(h: &Graph) -> Option<u8> {
    let n = h.n();
    let all = h.vertex_mask();
    for c in 0..n {
        let missed = all & !h.neighbors(c) & !bit(c);
        if missed.count_ones() != 1 {
            continue;
        }
        let a = missed.trailing_zeros() as usize;
        let bd = h.neighbors(a);
        let k = bd.count_ones();
        if !(1..=2).contains(&k) || bd & !h.neighbors(c) != 0 {
            continue;
        }
        if mask_iter(bd).any(|v| h.neighbors(v) != bit(a) | bit(c)) {
            continue;
        }
        let rest = all & !bd & !bit(a) & !bit(c);
        if mask_iter(rest).any(|v| (h.neighbors(v) & rest).count_ones() > 1) {
            continue;
        }
        let lone = mask_iter(rest).any(|v| h.neighbors(v) & rest == 0);
        let triangle = mask_iter(rest).any(|v| h.neighbors(v) & rest != 0);
        if k == 2 && lone {
            return Some(1);
        }
        if k == 1 && triangle {
            return Some(2);
        }
    }
    None
}

/// Some clique vertex adjacent to `e` and some clique vertex not adjacent to it have different degrees.
fn unequal_pair(h: &Graph, clique: u64, e: usize) -> bool {
    let near = clique & h.neighbors(e);
    let far = clique & !h.neighbors(e);
    mask_iter(near).any(|u| mask_iter(far).any(|w| h.degree(u) != h.degree(w)))
}

/// Condition (3): one stable vertex `e` of degree at least two, every other stable vertex a leaf.
fn t6_condition(h: &Graph, p: &KSPartition) -> bool {
    let heavy: Vec<usize> = mask_iter(p.stable).filter(|&v| h.degree(v) >= 2).collect();
    let [e] = heavy.as_slice() else { return false };
    mask_iter(p.stable).all(|v| v == *e || h.degree(v) == 1) && unequal_pair(h, p.clique, *e)
}

/// Conditions (4) and (5) on the roles `e`, optional `f` and `x1` of a T7 host. The clique pair in
/// (4) is taken among the T6 clique vertices, so `f` is left out.
fn t7_condition(h: &Graph, p: &KSPartition) -> Option<u8> {
    let mut found_five = false;
    for e in mask_iter(p.stable) {
        let ne = h.neighbors(e);
        if ne.count_ones() > 2 || ne == 0 {
            continue;
        }
        let others = p.stable & !bit(e);
        let f_choices = std::iter::once(None).chain(mask_iter(p.clique & !ne).map(Some));
        for f in f_choices {
            let f_mask = f.map_or(0, bit);
            if let Some(f) = f {
                if h.neighbors(f) & p.stable != others {
                    continue;
                }
            }
            if mask_iter(others).any(|v| (h.neighbors(v) & !f_mask).count_ones() > 1) {
                continue;
            }
            if ne.count_ones() == 2 && unequal_pair(h, p.clique & !f_mask, e) {
                return Some(4);
            }
            if let Some(f) = f {
                found_five |= t7_five(h, e, f, others);
            }
        }
    }
    found_five.then_some(5)
}

/// Condition (5) with `x1` ranging over the neighbours of `e`. When `e` is the only vertex of
/// degree 1, the other neighbour of the degree-2 vertex must also differ in degree from `x1`;
/// otherwise swapping the two owners gives back the same graph.
fn t7_five(h: &Graph, e: usize, f: usize, others: u64) -> bool {
    let leaves = (0..h.n()).filter(|&v| h.degree(v) == 1);
    let (mut any_leaf, mut leaf_besides_e) = (false, false);
    for v in leaves {
        any_leaf = true;
        leaf_besides_e |= v != e;
    }
    if !any_leaf {
        return false;
    }
    mask_iter(h.neighbors(e)).any(|x1| {
        let excluded = bit(x1) | bit(f);
        mask_iter(others).any(|v| {
            h.degree(v) == 2
                && mask_iter(h.neighbors(v) & !excluded).any(|u| leaf_besides_e || h.degree(u) != h.degree(x1))
        })
    })
}

/// Every family member (all variants, split ones up to isomorphism) on at most `max_vertices` vertices.
pub fn members_up_to(max_vertices: usize) -> Vec<(FamilyTag, Graph)> {
    let mut families = vec![Family::C5, Family::K1];
    let n = max_vertices;
    for m in 2..=n / 2 {
        families.push(Family::T1 { m });
    }
    for m in 1..=n {
        for k in 2..=n {
            if 2 * m + k < n {
                families.push(Family::T2 { m, n: k });
            }
        }
    }
    for m in 1..=n {
        if 2 * m + 4 <= n {
            families.push(Family::T3 { m });
        }
    }
    for p in 1..=n {
        for q in 2..=n {
            if q * (p + 1) <= n {
                families.push(Family::T4 { p, q });
            }
        }
    }
    let mut groups = Vec::new();
    t5_groups(n, usize::MAX, &mut groups, &mut families);
    for p in 1..=n {
        for q1 in 1..=n {
            for q2 in 1..=n {
                if q1 + q2 + q1 * p + q2 * (p + 1) < n {
                    families.push(Family::T6 { p, q1, q2 });
                }
                if q1 == 2 && q1 + q2 + q1 * p + q2 * (p + 1) + 1 < n {
                    families.push(Family::T7 { p, q: q2 });
                }
            }
        }
    }
    families.retain(|f| construct_plain(f).is_ok_and(|g| g.graph.n() <= max_vertices));
    let mut out = Vec::new();
    for f in families {
        for v in Variant::ALL {
            let tag = FamilyTag::new(f.clone(), v);
            if let Ok(g) = construct(&tag) {
                out.push((tag, g.graph));
            }
        }
    }
    out
}

/// T5 parameter lists with strictly decreasing leaf counts fitting in `room` vertices.
fn t5_groups(room: usize, below: usize, groups: &mut Vec<(usize, usize)>, out: &mut Vec<Family>) {
    if groups.len() >= 2 {
        out.push(Family::T5 { groups: groups.clone() });
    }
    for p in 1..below.min(room + 1) {
        for q in 1.. {
            if q * (p + 1) > room {
                break;
            }
            groups.push((p, q));
            t5_groups(room - q * (p + 1), p, groups, out);
            groups.pop();
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::C5 => write!(f, "C5"),
            Family::K1 => write!(f, "K1"),
            Family::T1 { m } => write!(f, "T1(m={m})"),
            Family::T2 { m, n } => write!(f, "T2(m={m},n={n})"),
            Family::T3 { m } => write!(f, "T3(m={m})"),
            Family::T4 { p, q } => write!(f, "T4(p={p},q={q})"),
            Family::T5 { groups } => {
                let parts: Vec<String> = groups
                    .iter()
                    .enumerate()
                    .map(|(i, (p, q))| format!("p{}={p},q{}={q}", i + 1, i + 1))
                    .collect();
                write!(f, "T5({})", parts.join(","))
            }
            Family::T6 { p, q1, q2 } => write!(f, "T6(p={p},q1={q1},q2={q2})"),
            Family::T7 { p, q } => write!(f, "T7(p={p},q={q})"),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};variant={}", self.family, self.variant.name())
    }
}
