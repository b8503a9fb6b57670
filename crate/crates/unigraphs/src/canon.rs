use std::cmp::Ordering;

use crate::graph::{bit, mask_iter, Graph};

/// Canonical adjacency code: equal for two graphs exactly when they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    code: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> &[u64] {
        &self.code
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_rows(self.code.clone()).expect("canonical rows are a valid graph")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (code, _) = canonical_labeling(g);
    CanonicalForm { n: g.n(), code }
}

/// Returns the canonical code and the labeling achieving it (`lab[i]` is the vertex placed at position `i`).
pub fn canonical_labeling(g: &Graph) -> (Vec<u64>, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut cells = initial_partition(g);
    refine(g, &mut cells);
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    let mut path = Vec::new();
    search.descend(&cells, &mut path);
    let (code, lab) = search.best.expect("at least one leaf");
    (code, lab)
}

fn initial_partition(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut by_degree: Vec<u64> = vec![0; n];
    for v in 0..n {
        by_degree[g.degree(v)] |= bit(v);
    }
    by_degree.into_iter().filter(|&c| c != 0).collect()
}

/// Refine to an equitable partition; splits are ordered by neighbor counts so the result is label-invariant.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut changed = false;
        'outer: for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.count_ones() == 1 {
                    continue;
                }
                let mut counts: Vec<(u32, usize)> = mask_iter(cell)
                    .map(|v| ((g.neighbors(v) & splitter).count_ones(), v))
                    .collect();
                let first = counts[0].0;
                if counts.iter().all(|&(k, _)| k == first) {
                    continue;
                }
                counts.sort_unstable();
                let mut pieces: Vec<u64> = Vec::new();
                let mut current = counts[0].0;
                let mut mask = 0u64;
                for &(k, v) in &counts {
                    if k != current {
                        pieces.push(mask);
                        mask = 0;
                        current = k;
                    }
                    mask |= bit(v);
                }
                pieces.push(mask);
                cells.splice(c..=c, pieces);
                changed = true;
                break 'outer;
            }
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn descend(&mut self, cells: &[u64], path: &mut Vec<usize>) {
        let target = cells.iter().position(|c| c.count_ones() > 1);
        let Some(t) = target else {
            self.leaf(cells);
            return;
        };
        let cell = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        for v in mask_iter(cell) {
            if !explored.is_empty() && self.same_orbit(v, &explored, path) {
                continue;
            }
            let mut next: Vec<u64> = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(bit(v));
            next.push(cell & !bit(v));
            next.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut next);
            path.push(v);
            self.descend(&next, path);
            path.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = relabeled_rows(self.g, &lab);
        match &self.best {
            None => self.best = Some((code, lab)),
            Some((best_code, best_lab)) => match code.cmp(best_code) {
                Ordering::Greater => self.best = Some((code, lab)),
                Ordering::Equal => {
                    let mut auto = vec![0usize; lab.len()];
                    for i in 0..lab.len() {
                        auto[lab[i]] = best_lab[i];
                    }
                    if auto.iter().enumerate().any(|(i, &j)| i != j) {
                        self.automorphisms.push(auto);
                    }
                }
                Ordering::Less => {}
            },
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under known automorphisms fixing the path.
    fn same_orbit(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.automorphisms {
            if path.iter().any(|&p| auto[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in auto.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

fn relabeled_rows(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    lab.iter()
        .map(|&v| mask_iter(g.neighbors(v)).fold(0u64, |r, w| r | bit(pos[w])))
        .collect()
}
