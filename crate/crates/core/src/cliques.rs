//! Exact clique counting.
//!
//! `count_cliques(g, t)` returns the number of `t`-vertex subsets inducing a
//! complete subgraph. Counting recurses on candidate-set intersections in
//! ascending vertex order after a degeneracy relabelling, so candidate masks
//! shrink as fast as the graph allows.

use thiserror::Error;

use crate::graph::{bit, bits, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliqueError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

/// Vertices in removal order of a repeated minimum-degree peel.
pub(crate) fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut remaining = g.full_mask();
    let mut order = Vec::with_capacity(n);
    while remaining != 0 {
        let v = bits(remaining)
            .min_by_key(|&v| (g.neighbors(v) & remaining).count_ones())
            .expect("remaining nonempty");
        order.push(v);
        remaining &= !bit(v);
    }
    order
}

fn cliques_in_mask(g: &Graph, cand: u64, size: usize) -> u64 {
    if size == 0 {
        return 1;
    }
    if (cand.count_ones() as usize) < size {
        return 0;
    }
    if size == 1 {
        return u64::from(cand.count_ones());
    }
    let mut total = 0;
    for v in bits(cand) {
        // restrict to neighbours above v so each subset is counted once
        let above = !(bit(v) | (bit(v) - 1));
        total += cliques_in_mask(g, cand & g.neighbors(v) & above, size - 1);
    }
    total
}

/// Number of `t`-cliques in `g`. `t = 1` counts vertices, `t = 2` edges.
pub fn count_cliques(g: &Graph, t: usize) -> u64 {
    assert!(t >= 1, "clique order must be at least 1");
    match t {
        1 => g.order() as u64,
        2 => g.edge_count() as u64,
        _ => {
            let order = degeneracy_order(g);
            let mut perm = vec![0usize; g.order()];
            for (pos, &v) in order.iter().enumerate() {
                perm[v] = pos;
            }
            let h = g.relabel(&perm);
            cliques_in_mask(&h, h.full_mask(), t)
        }
    }
}

/// Number of `t`-cliques containing `v`; equals the number of
/// `(t-1)`-cliques inside the neighbourhood of `v`.
pub fn count_cliques_at(g: &Graph, v: usize, t: usize) -> Result<u64, CliqueError> {
    assert!(t >= 2, "per-vertex clique order must be at least 2");
    if v >= g.order() {
        return Err(CliqueError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(cliques_in_mask(g, g.neighbors(v), t - 1))
}
