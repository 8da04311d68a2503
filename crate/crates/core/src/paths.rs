//! Exact longest simple path and longest simple cycle.
//!
//! Both run a dynamic program over (vertex subset, endpoint) states per
//! connected component. Exactness is the whole point here, so components
//! larger than [`COMPONENT_DP_LIMIT`] vertices are an error rather than an
//! approximation.

use thiserror::Error;

use crate::graph::{bits, Graph};

/// Per-component ceiling for the subset dynamic programs.
pub const COMPONENT_DP_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("connected component of {size} vertices exceeds the exact-search limit of {COMPONENT_DP_LIMIT}")]
    ComponentTooLarge { size: usize },
}

/// Path-length and cycle-length summary of a graph against a threshold `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessProfile {
    pub longest_path_order: usize,
    pub circumference: usize,
    pub threshold: usize,
    /// No path on `threshold` vertices exists.
    pub pk_free: bool,
    /// No cycle of length at least `threshold` exists.
    pub ck_free: bool,
}

impl FreenessProfile {
    pub fn pk_free_for(&self, k: usize) -> bool {
        self.longest_path_order < k
    }

    pub fn ck_free_for(&self, k: usize) -> bool {
        self.circumference < k
    }
}

fn component_local(g: &Graph, comp: u64) -> Vec<u32> {
    let verts: Vec<usize> = bits(comp).collect();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    verts
        .iter()
        .map(|&v| {
            let mut m = 0u32;
            for w in bits(g.neighbors(v) & comp) {
                m |= 1 << index[w];
            }
            m
        })
        .collect()
}

fn component_longest_path(adj: &[u32]) -> usize {
    let c = adj.len();
    let mut dp = vec![0u32; 1 << c];
    for i in 0..c {
        dp[1 << i] = 1 << i;
    }
    let mut best = 1;
    for mask in 1u32..(1 << c) {
        let ends = dp[mask as usize];
        if ends == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        let mut rest = ends;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut ext = adj[v] & !mask;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                dp[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    best
}

fn component_circumference(adj: &[u32]) -> usize {
    let c = adj.len();
    let mut best = 0;
    for s in 0..c {
        if (adj[s].count_ones() as usize) < 2 {
            continue;
        }
        // paths start at s and only use vertices >= s, so every cycle is
        // counted from its least vertex
        let allowed: u32 = !((1u32 << s) - 1);
        let mut dp = vec![0u32; 1 << c];
        dp[1 << s] = 1 << s;
        for mask in (1u32 << s)..(1 << c) {
            let ends = dp[mask as usize];
            if ends == 0 {
                continue;
            }
            let len = mask.count_ones() as usize;
            let mut rest = ends;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if len >= 3 && v != s && adj[v] >> s & 1 == 1 {
                    best = best.max(len);
                }
                let mut ext = adj[v] & !mask & allowed;
                while ext != 0 {
                    let w = ext.trailing_zeros() as usize;
                    ext &= ext - 1;
                    dp[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
    best
}

fn checked_components(g: &Graph) -> Result<Vec<Vec<u32>>, AnalysisError> {
    g.component_masks()
        .into_iter()
        .map(|comp| {
            let size = comp.count_ones() as usize;
            if size > COMPONENT_DP_LIMIT {
                Err(AnalysisError::ComponentTooLarge { size })
            } else {
                Ok(component_local(g, comp))
            }
        })
        .collect()
}

/// Maximum number of vertices on a simple path. A single vertex is a path
/// of order 1; the graph on zero vertices has longest path order 0.
pub fn longest_path_order(g: &Graph) -> Result<usize, AnalysisError> {
    if g.order() == 0 {
        return Ok(0);
    }
    let mut best = 1;
    for adj in checked_components(g)? {
        if adj.len() >= 2 {
            best = best.max(component_longest_path(&adj));
        }
    }
    Ok(best)
}

/// Length of the longest simple cycle; 0 for forests.
pub fn circumference(g: &Graph) -> Result<usize, AnalysisError> {
    let mut best = 0;
    for adj in checked_components(g)? {
        if adj.len() >= 3 {
            best = best.max(component_circumference(&adj));
        }
    }
    Ok(best)
}

/// Longest path, circumference, and the derived freeness flags for `k`.
pub fn freeness_profile(g: &Graph, k: usize) -> Result<FreenessProfile, AnalysisError> {
    let longest = longest_path_order(g)?;
    let circ = circumference(g)?;
    Ok(FreenessProfile {
        longest_path_order: longest,
        circumference: circ,
        threshold: k,
        pk_free: longest < k,
        ck_free: circ < k,
    })
}
