use crate::error::{Error, Result};
use crate::graph::{bit, mask_iter, Graph};
use crate::split::{ks_partitions, KSPartition};

/// One indecomposable component; `vertices[i]` is the source vertex behind local vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    pub partition: Option<KSPartition>,
    pub vertices: Vec<usize>,
}

impl Component {
    pub fn is_split(&self) -> bool {
        self.partition.is_some()
    }

    /// Clique mask in source vertex numbering.
    pub fn source_clique(&self) -> u64 {
        self.partition.map_or(0, |p| {
            mask_iter(p.clique).fold(0u64, |acc, i| acc | bit(self.vertices[i]))
        })
    }
}

/// Components listed leftmost first; the last one is the remainder and may be non-split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<Component>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn last(&self) -> &Component {
        self.components.last().expect("decompositions are nonempty")
    }

    /// The KS-partition of the whole graph implied by the component partitions, if every component is split.
    pub fn implied_partition(&self, n: usize) -> Option<KSPartition> {
        self.last().partition?;
        let clique = self.components.iter().fold(0u64, |acc, c| acc | c.source_clique());
        Some(KSPartition::new(clique, crate::split::all_vertices(n) & !clique))
    }
}

/// Disjoint union of `g` and `h` with every clique vertex of `g` joined to every vertex of `h`.
pub fn compose(g: &Graph, p: &KSPartition, h: &Graph) -> Result<Graph> {
    p.check(g)?;
    let offset = g.n();
    let mut out = g.disjoint_union(h)?;
    for u in mask_iter(p.clique) {
        for v in 0..h.n() {
            out.add_edge(u, offset + v);
        }
    }
    Ok(out)
}

/// Compose the components back together, right to left.
pub fn recompose(dec: &Decomposition) -> Result<Graph> {
    let Some((last, rest)) = dec.components.split_last() else {
        return Err(Error::EmptyGraph);
    };
    let mut g = last.graph.clone();
    for c in rest.iter().rev() {
        let p = c.partition.ok_or_else(|| Error::Precondition("non-final component must be split".into()))?;
        g = compose(&c.graph, &p, &g)?;
    }
    Ok(g)
}

pub fn decompose(g: &Graph) -> Result<Decomposition> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut components = Vec::new();
    let mut rest: Vec<usize> = (0..g.n()).collect();
    loop {
        let h = g.induced_unchecked(&rest);
        match peel(&h) {
            Some((clique, stable)) => {
                let mut local: Vec<usize> = mask_iter(clique | stable).collect();
                local.sort_unstable();
                let vertices: Vec<usize> = local.iter().map(|&i| rest[i]).collect();
                let graph = h.induced_unchecked(&local);
                let partition = KSPartition {
                    clique: local.iter().enumerate().filter(|&(_, &v)| clique & bit(v) != 0).fold(0, |a, (i, _)| a | bit(i)),
                    stable: local.iter().enumerate().filter(|&(_, &v)| stable & bit(v) != 0).fold(0, |a, (i, _)| a | bit(i)),
                };
                components.push(Component { graph, partition: Some(partition), vertices });
                rest = rest
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| (clique | stable) & bit(i) == 0)
                    .map(|(_, &v)| v)
                    .collect();
            }
            None => {
                let partition = ks_partitions(&h).into_iter().next();
                components.push(Component { graph: h, partition, vertices: rest });
                return Ok(Decomposition { components });
            }
        }
    }
}

pub fn is_indecomposable(g: &Graph) -> Result<bool> {
    Ok(decompose(g)?.len() == 1)
}

/// Smallest left split part (clique mask, stable mask), read off the degree order.
fn peel(h: &Graph) -> Option<(u64, u64)> {
    let n = h.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    for s in 1..n {
        for p in 0..=s {
            let q = s - p;
            let clique = order[..p].iter().fold(0u64, |a, &v| a | bit(v));
            let stable = order[n - q..].iter().fold(0u64, |a, &v| a | bit(v));
            let middle = h.vertex_mask() & !clique & !stable;
            if !h.is_clique(clique) || !h.is_stable(stable) {
                continue;
            }
            let joined = mask_iter(clique).all(|v| h.neighbors(v) & middle == middle);
            let separated = mask_iter(stable).all(|v| h.neighbors(v) & middle == 0);
            if joined && separated {
                return Some((clique, stable));
            }
        }
    }
    None
}
