use crate::graph::{bit, mask_iter, Graph};

/// Backtracking search for an induced copy of `h` in `g`, filtering images by degree and co-degree.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let (ng, nh) = (g.n(), h.n());
    if nh > ng {
        return None;
    }
    if nh == 0 {
        return Some(Vec::new());
    }
    let order = placement_order(h);
    let all = g.vertex_mask();
    let allowed: Vec<u64> = (0..nh)
        .map(|v| {
            let dv = h.degree(v);
            let cv = nh - 1 - dv;
            (0..ng)
                .filter(|&u| g.degree(u) >= dv && ng - 1 - g.degree(u) >= cv)
                .fold(0u64, |m, u| m | bit(u))
        })
        .collect();
    let mut image = vec![usize::MAX; nh];
    if place(g, h, &order, &allowed, all, 0, 0, &mut image) {
        Some(image)
    } else {
        None
    }
}

/// Connected-first order: each next vertex has the most already-placed neighbors, ties by degree.
fn placement_order(h: &Graph) -> Vec<usize> {
    let nh = h.n();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(nh);
    for _ in 0..nh {
        let v = (0..nh)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((h.neighbors(v) & placed).count_ones(), h.degree(v), usize::MAX - v))
            .expect("unplaced vertex");
        placed |= bit(v);
        order.push(v);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn place(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    allowed: &[u64],
    all: u64,
    depth: usize,
    used: u64,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mut cand = allowed[v] & !used;
    for &w in &order[..depth] {
        let gw = image[w];
        if h.has_edge(v, w) {
            cand &= g.neighbors(gw);
        } else {
            cand &= all & !g.neighbors(gw) & !bit(gw);
        }
        if cand == 0 {
            return false;
        }
    }
    for u in mask_iter(cand) {
        image[v] = u;
        if place(g, h, order, allowed, all, depth + 1, used | bit(u), image) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}
