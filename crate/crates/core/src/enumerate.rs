//! Exhaustive non-isomorphic graph generation.
//!
//! Graphs are generated by augmentation: order levels grow one vertex at a
//! time (every graph on `n` vertices arises from deleting a vertex of one
//! on `n + 1`), edge levels grow one edge at a time. Candidates are
//! canonicalized and deduplicated per level, so memory stays proportional
//! to one isomorphism-class level rather than the labelled universe.
//! Computed levels are cached process-wide; the expensive canonicalization
//! fan-out runs on the rayon pool outside any lock.

use std::collections::HashSet;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::canonical_form;
use crate::graph::{bit, Graph};

/// Largest order `enumerate_graphs` will expand.
pub const ENUMERATION_ORDER_LIMIT: usize = 9;

/// Largest edge budget the edge-level generators accept.
pub const EDGE_BUDGET_LIMIT: usize = 13;

/// Order cap for the edge-level universe (matches the canonical-form limit).
pub const EDGE_UNIVERSE_ORDER_LIMIT: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("order {0} exceeds the enumeration ceiling of {ENUMERATION_ORDER_LIMIT}")]
    OrderCeiling(usize),
    #[error("edge budget {0} exceeds the ceiling of {EDGE_BUDGET_LIMIT}")]
    EdgeCeiling(usize),
    #[error("need 3 <= t < k for a core search, got t = {t}, k = {k}")]
    BadCliqueOrder { t: usize, k: usize },
}

fn vertex_levels() -> &'static Mutex<Vec<Arc<Vec<Graph>>>> {
    static LEVELS: OnceLock<Mutex<Vec<Arc<Vec<Graph>>>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(vec![Arc::new(vec![Graph::empty(0).expect("order 0")])]))
}

fn next_vertex_level(parents: &[Graph]) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let candidates: Vec<(u8, u128)> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let top = parent.full_mask();
            (0..=top).map(move |mask| {
                canonical_form(&parent.with_vertex(mask))
                    .expect("enumeration stays within the canonical limit")
                    .code()
            })
        })
        .collect();
    for code in candidates {
        if seen.insert(code) {
            out.push(code);
        }
    }
    out.sort_unstable();
    out.into_iter()
        .map(|(order, code)| graph_from_code(order as usize, code))
        .collect()
}

fn graph_from_code(order: usize, code: u128) -> Graph {
    crate::canon::graph_of_code(order, code)
}

/// One canonical representative per isomorphism class of order `n`,
/// sorted by canonical code; optionally filtered to a fixed edge count.
pub fn enumerate_graphs(n: usize, edge_filter: Option<usize>) -> Result<Vec<Graph>, EnumerateError> {
    if n > ENUMERATION_ORDER_LIMIT {
        return Err(EnumerateError::OrderCeiling(n));
    }
    let level = vertex_level(n);
    Ok(match edge_filter {
        None => level.as_ref().clone(),
        Some(m) => level.iter().filter(|g| g.edge_count() == m).cloned().collect(),
    })
}

/// Cached canonical level of order `n` (callers must pre-check the limit).
pub(crate) fn vertex_level(n: usize) -> Arc<Vec<Graph>> {
    loop {
        let current = {
            let levels = vertex_levels().lock().expect("vertex level cache");
            if levels.len() > n {
                return levels[n].clone();
            }
            levels.last().expect("level 0 present").clone()
        };
        // compute outside the lock; a racing thread at worst repeats work
        let next = Arc::new(next_vertex_level(&current));
        let mut levels = vertex_levels().lock().expect("vertex level cache");
        if Arc::ptr_eq(levels.last().expect("nonempty"), &current) {
            levels.push(next);
        }
    }
}

fn edge_levels() -> &'static Mutex<Vec<Arc<Vec<Graph>>>> {
    static LEVELS: OnceLock<Mutex<Vec<Arc<Vec<Graph>>>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(vec![Arc::new(vec![Graph::empty(0).expect("order 0")])]))
}

/// All single-edge extensions of `g` within the order cap: a new edge
/// between existing vertices, a pendant edge to a new vertex, or a fresh
/// disjoint edge.
fn edge_extensions(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                let mut h = g.clone();
                h.add_edge_mut(u, v);
                out.push(h);
            }
        }
    }
    if n < EDGE_UNIVERSE_ORDER_LIMIT {
        for u in 0..n {
            out.push(g.with_vertex(bit(u)));
        }
    }
    if n + 2 <= EDGE_UNIVERSE_ORDER_LIMIT {
        let h = g.with_vertex(0);
        out.push(h.with_vertex(bit(n)));
    }
    out
}

fn next_edge_level(parents: &[Graph]) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let candidates: Vec<(u8, u128)> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            edge_extensions(parent).into_iter().map(|h| {
                canonical_form(&h)
                    .expect("edge universe stays within the canonical limit")
                    .code()
            })
        })
        .collect();
    for code in candidates {
        if seen.insert(code) {
            out.push(code);
        }
    }
    out.sort_unstable();
    out.into_iter()
        .map(|(order, code)| graph_from_code(order as usize, code))
        .collect()
}

/// Cached level of graphs with exactly `m` edges, no isolated vertices,
/// and order at most [`EDGE_UNIVERSE_ORDER_LIMIT`].
pub(crate) fn edge_level(m: usize) -> Arc<Vec<Graph>> {
    loop {
        let current = {
            let levels = edge_levels().lock().expect("edge level cache");
            if levels.len() > m {
                return levels[m].clone();
            }
            levels.last().expect("level 0 present").clone()
        };
        let next = Arc::new(next_edge_level(&current));
        let mut levels = edge_levels().lock().expect("edge level cache");
        if Arc::ptr_eq(levels.last().expect("nonempty"), &current) {
            levels.push(next);
        }
    }
}

/// All non-isomorphic graphs with at most `m` edges, minimum degree at
/// least `t - 1`, and no isolated vertices. Deleting a vertex of degree
/// below `t - 1` never removes a `K_t`, so the edge-variant maximum is
/// always attained on such a core.
pub fn enumerate_edge_cores(m: usize, t: usize, k: usize) -> Result<Vec<Graph>, EnumerateError> {
    if m > EDGE_BUDGET_LIMIT {
        return Err(EnumerateError::EdgeCeiling(m));
    }
    if t < 3 || t >= k {
        return Err(EnumerateError::BadCliqueOrder { t, k });
    }
    let mut out = Vec::new();
    for e in 0..=m {
        for g in edge_level(e).iter() {
            if g.order() == 0 || g.min_degree() >= t - 1 {
                out.push(g.clone());
            }
        }
    }
    Ok(out)
}

/// Graphs with exactly `m` edges, no isolated vertices, order at most
/// [`EDGE_UNIVERSE_ORDER_LIMIT`] — the comparison universe for edge-variant
/// extremal sets.
pub fn enumerate_edge_universe(m: usize) -> Result<Vec<Graph>, EnumerateError> {
    if m > EDGE_BUDGET_LIMIT {
        return Err(EnumerateError::EdgeCeiling(m));
    }
    Ok(edge_level(m).as_ref().clone())
}
