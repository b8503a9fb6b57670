use std::collections::HashSet;

use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

pub const ORACLE_MAX_VERTICES: usize = 8;

/// One graph per isomorphism class on `n` vertices, in canonical form, sorted by edge count then code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "exhaustive graph enumeration",
            limit: ORACLE_MAX_VERTICES,
            got: n,
        });
    }
    Ok(build_levels(n).pop().expect("level n"))
}

/// All graphs on at most `n` vertices, smallest first (excluding the graph on zero vertices).
pub fn all_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "exhaustive graph enumeration",
            limit: ORACLE_MAX_VERTICES,
            got: n,
        });
    }
    Ok(build_levels(n).into_iter().skip(1).flatten().collect())
}

fn build_levels(n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(0)]];
    for k in 1..=n {
        let level = levels.last().expect("previous level");
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        for g in level {
            for nbrs in 0u64..(1u64 << (k - 1)) {
                let mut rows = g.rows().to_vec();
                for (v, row) in rows.iter_mut().enumerate() {
                    if nbrs & bit(v) != 0 {
                        *row |= bit(k - 1);
                    }
                }
                rows.push(nbrs);
                let h = Graph::from_rows(rows).expect("extension is symmetric");
                seen.insert(h.canonical_form());
            }
        }
        let mut next: Vec<Graph> = seen.into_iter().map(|c| c.to_graph()).collect();
        next.sort_by(|a, b| a.edge_count().cmp(&b.edge_count()).then_with(|| a.cmp(b)));
        levels.push(next);
    }
    levels
}
