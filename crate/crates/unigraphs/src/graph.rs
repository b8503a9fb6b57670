use std::fmt;

use crate::canon::{canonical_form, CanonicalForm};
use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph on at most 64 vertices, one adjacency word per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bits of a mask in increasing order.
pub(crate) fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Empty graph on `n` vertices; panics above 64 vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::new(n).expect("vertex limit")
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let all = full_mask(n);
        for v in 0..n {
            g.rows[v] = all & !bit(v);
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("valid star")
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from adjacency rows; rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let all = full_mask(n);
        for (v, &r) in rows.iter().enumerate() {
            if r & !all != 0 || r & bit(v) != 0 {
                return Err(Error::Precondition(format!("row {v} has invalid bits")));
            }
            for u in mask_iter(r) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::Precondition(format!("row {v} is not symmetric")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in mask_iter(self.rows[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let rows = (0..self.n).map(|v| !self.rows[v] & all & !bit(v)).collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by `vs`, relabeled 0.. in the order given.
    pub fn induced(&self, vs: &[usize]) -> Result<Graph> {
        for &v in vs {
            self.check_vertex(v)?;
        }
        let mut seen = 0u64;
        for &v in vs {
            if seen & bit(v) != 0 {
                return Err(Error::Precondition(format!("vertex {v} listed twice")));
            }
            seen |= bit(v);
        }
        Ok(self.induced_unchecked(vs))
    }

    pub(crate) fn induced_unchecked(&self, vs: &[usize]) -> Graph {
        let k = vs.len();
        let mut rows = vec![0u64; k];
        for i in 0..k {
            let r = self.rows[vs[i]];
            let mut row = 0u64;
            for (j, &w) in vs.iter().enumerate() {
                if r & bit(w) != 0 {
                    row |= bit(j);
                }
            }
            rows[i] = row;
        }
        Graph { n: k, rows }
    }

    /// Subgraph induced by the vertices of `mask`, kept in increasing order.
    pub fn induced_mask(&self, mask: u64) -> Graph {
        let vs: Vec<usize> = mask_iter(mask & self.vertex_mask()).collect();
        self.induced_unchecked(&vs)
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_mask(self.vertex_mask() & !bit(v))
    }

    /// Relabel so that old vertex `perm[i]` becomes vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        self.induced_unchecked(perm)
    }

    /// Disjoint union with `other` placed after the vertices of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::new(n)?;
        for v in 0..self.n {
            g.rows[v] = self.rows[v];
        }
        for v in 0..other.n {
            g.rows[self.n + v] = other.rows[v] << self.n;
        }
        Ok(g)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(self)
    }

    /// Canonically relabeled copy; isomorphic graphs give equal results.
    pub fn canonical(&self) -> Graph {
        self.canonical_form().to_graph()
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut a = self.degrees();
        let mut b = other.degrees();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        self.canonical_form() == other.canonical_form()
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        mask_iter(mask).all(|v| self.rows[v] & mask == mask & !bit(v))
    }

    pub fn is_stable(&self, mask: u64) -> bool {
        mask_iter(mask).all(|v| self.rows[v] & mask == 0)
    }

    /// Some vertex set of `self` inducing a copy of `h`; `witness[i]` is the image of vertex `i` of `h`.
    pub fn find_induced(&self, h: &Graph) -> Option<Vec<usize>> {
        crate::induced::find_induced(self, h)
    }

    pub fn contains_induced(&self, h: &Graph) -> bool {
        self.find_induced(h).is_some()
    }

    /// Delete edges `ab`, `cd` and add `ad`, `bc`.
    pub fn two_switch(&self, a: usize, b: usize, c: usize, d: usize) -> Result<Graph> {
        for v in [a, b, c, d] {
            self.check_vertex(v)?;
        }
        let distinct = bit(a) | bit(b) | bit(c) | bit(d);
        if distinct.count_ones() != 4 {
            return Err(Error::Precondition("2-switch needs four distinct vertices".into()));
        }
        if !self.has_edge(a, b) || !self.has_edge(c, d) {
            return Err(Error::Precondition("2-switch needs edges ab and cd".into()));
        }
        if self.has_edge(a, d) || self.has_edge(b, c) {
            return Err(Error::Precondition("2-switch needs non-edges ad and bc".into()));
        }
        let mut g = self.clone();
        g.remove_edge(a, b);
        g.remove_edge(c, d);
        g.add_edge(a, d);
        g.add_edge(b, c);
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::encode(self)
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        crate::graph6::decode(s)
    }

    pub fn dominating_vertices(&self) -> u64 {
        let all = self.vertex_mask();
        (0..self.n)
            .filter(|&v| self.rows[v] == all & !bit(v))
            .fold(0, |m, v| m | bit(v))
    }

    pub fn isolated_vertices(&self) -> u64 {
        (0..self.n).filter(|&v| self.rows[v] == 0).fold(0, |m, v| m | bit(v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.to_graph6(), self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}
