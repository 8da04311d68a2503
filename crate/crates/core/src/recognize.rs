//! Structural recognizers for the extremal families.
//!
//! Every predicate here decides membership from structure alone (block
//! decompositions, component shapes, colex comparisons) — clique counts are
//! never consulted, so the recognizers stay independent of the brute-force
//! counting they are verified against.

use thiserror::Error;

use crate::blocks::blocks;
use crate::canon::{canonical_form, CanonError};
use crate::cliques::count_cliques;
use crate::construct::{colex_graph, Attachment, ConstructError, GlueRecipe};
use crate::formulas::{binomial, colex_split, cycle_decompose, path_decompose, PathOrCycle};
use crate::graph::{bit, bits, Graph};
use crate::graph6::encode;
use crate::paths::{circumference, longest_path_order, AnalysisError};

/// Order ceiling for the witness decomposition.
pub const DECOMPOSE_ORDER_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("order {0} exceeds the decomposition limit of {DECOMPOSE_ORDER_LIMIT}")]
    OrderCeiling(usize),
    #[error("edge budget {b} exceeds C(k-1, 2) = {max}")]
    LeftoverBudgetOutOfRange { b: usize, max: usize },
    #[error("family member fails the freeness it should imply: {graph6}")]
    Inconsistent { graph6: String },
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// Decomposition of a graph into `K_{k-1}` blocks plus a leftover graph,
/// with a replayable gluing recipe.
#[derive(Clone, Debug)]
pub struct ForestOfCliquesWitness {
    /// Number of `K_{k-1}` blocks found (the maximum possible).
    pub q: usize,
    /// Vertex masks of the clique blocks.
    pub clique_blocks: Vec<u64>,
    /// Graph formed by the remaining edges, compacted.
    pub leftover: Graph,
    /// Sequential gluing that reproduces the input up to isomorphism.
    pub recipe: GlueRecipe,
}

/// Splits `g` into its `K_{k-1}` blocks and the leftover formed by all
/// remaining edges. Blocks pairwise share at most one vertex and their
/// incidence is acyclic, so the decomposition always exists; `q` is maximal
/// because every edge-disjoint `K_{k-1}` is necessarily a block.
pub fn decompose_forest_of_cliques(
    g: &Graph,
    k: usize,
) -> Result<Option<ForestOfCliquesWitness>, RecognizeError> {
    assert!(k >= 3, "forbidden-structure threshold must be at least 3");
    if g.order() > DECOMPOSE_ORDER_LIMIT {
        return Err(RecognizeError::OrderCeiling(g.order()));
    }
    let decomposition = blocks(g);
    let clique_size = (k - 1) as u32;
    let clique_edges = binomial(k - 1, 2) as usize;
    let mut clique_blocks = Vec::new();
    let mut other_blocks = Vec::new();
    for &block in decomposition.blocks() {
        if block.count_ones() == clique_size && g.edges_within(block) == clique_edges {
            clique_blocks.push(block);
        } else {
            other_blocks.push(block);
        }
    }

    // leftover: the union of the non-clique blocks, compacted
    let leftover_mask = other_blocks.iter().fold(0u64, |m, &b| m | b);
    let leftover = leftover_subgraph(g, &other_blocks, leftover_mask);

    // parts for the recipe: each clique, each leftover component, and one
    // K_1 per isolated vertex so the replay is exact
    let mut parts: Vec<u64> = clique_blocks.clone();
    let leftover_global = g.induced_components(&other_blocks, leftover_mask);
    parts.extend(leftover_global);
    for v in bits(g.isolated_mask()) {
        parts.push(bit(v));
    }
    parts.sort_by_key(|&m| m.trailing_zeros());
    let recipe = recipe_from_parts(g, &parts);

    Ok(Some(ForestOfCliquesWitness {
        q: clique_blocks.len(),
        clique_blocks,
        leftover,
        recipe,
    }))
}

fn leftover_subgraph(g: &Graph, other_blocks: &[u64], mask: u64) -> Graph {
    let verts: Vec<usize> = bits(mask).collect();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for &block in other_blocks {
        for u in bits(block) {
            for v in bits(g.neighbors(u) & block) {
                if u < v {
                    edges.push((index[u], index[v]));
                }
            }
        }
    }
    Graph::from_edges(verts.len(), &edges).expect("leftover edges are in range")
}

impl Graph {
    /// Connected components of the union of the given blocks, as global
    /// vertex masks. Two blocks belong to one component when they chain
    /// through shared vertices.
    fn induced_components(&self, blocks: &[u64], mask: u64) -> Vec<u64> {
        let mut comps: Vec<u64> = Vec::new();
        for &b in blocks {
            let mut merged = b;
            comps.retain(|&c| {
                if c & merged != 0 {
                    merged |= c;
                    false
                } else {
                    true
                }
            });
            comps.push(merged);
        }
        debug_assert_eq!(comps.iter().fold(0, |m, &c| m | c), mask);
        comps.sort_by_key(|&m| m.trailing_zeros());
        comps
    }
}

/// Builds a sequential recipe from part masks whose pairwise intersections
/// form an acyclic incidence (always true for block-derived parts).
fn recipe_from_parts(g: &Graph, parts: &[u64]) -> GlueRecipe {
    let mut blocks_out: Vec<Graph> = Vec::with_capacity(parts.len());
    let mut attachments: Vec<Attachment> = Vec::new();
    let mut placed_index = vec![usize::MAX; g.order()];
    let mut placed_mask = 0u64;
    let mut next_index = 0usize;
    let mut done = vec![false; parts.len()];

    for root in 0..parts.len() {
        if done[root] {
            continue;
        }
        // BFS over parts chained by shared vertices
        let mut queue = vec![root];
        done[root] = true;
        while let Some(p) = queue.pop() {
            let part = parts[p];
            let verts: Vec<usize> = bits(part).collect();
            let block = g.induced(part);
            let attachment = if blocks_out.is_empty() {
                None
            } else if part & placed_mask == 0 {
                Some(Attachment::NewComponent)
            } else {
                let shared = bits(part & placed_mask).next().expect("shared vertex");
                let local = verts.iter().position(|&v| v == shared).expect("member");
                Some(Attachment::Identify {
                    block_vertex: local,
                    placed_vertex: placed_index[shared],
                })
            };
            for &v in &verts {
                if placed_mask & bit(v) == 0 {
                    placed_index[v] = next_index;
                    next_index += 1;
                }
            }
            placed_mask |= part;
            blocks_out.push(block);
            if let Some(a) = attachment {
                attachments.push(a);
            }
            // enqueue unplaced parts that now touch the placed set,
            // smallest first for determinism
            let mut touching: Vec<usize> = (0..parts.len())
                .filter(|&i| !done[i] && parts[i] & placed_mask != 0)
                .collect();
            touching.sort_unstable_by(|a, b| b.cmp(a));
            for i in touching {
                done[i] = true;
                queue.push(i);
            }
        }
    }
    GlueRecipe {
        blocks: blocks_out,
        attachments,
    }
}

fn is_free(g: &Graph, k: usize, variant: PathOrCycle) -> Result<bool, AnalysisError> {
    Ok(match variant {
        PathOrCycle::Path => longest_path_order(g)? < k,
        PathOrCycle::Cycle => circumference(g)? < k,
    })
}

/// Membership in the leftover family for the cycle-free edge classification:
/// writing `b = C(r, 2) + s`, the family is `{L_b}` when `s >= t-1`; all
/// `b`-edge cycle-free graphs containing `K_r` when `r >= t`; and all
/// `b`-edge cycle-free graphs otherwise.
pub fn in_family_c(l: &Graph, b: usize, k: usize, t: usize) -> Result<bool, RecognizeError> {
    in_leftover_family(l, b, k, t, PathOrCycle::Cycle)
}

/// Path-free counterpart of [`in_family_c`].
pub fn in_family_l(l: &Graph, b: usize, k: usize, t: usize) -> Result<bool, RecognizeError> {
    in_leftover_family(l, b, k, t, PathOrCycle::Path)
}

fn in_leftover_family(
    l: &Graph,
    b: usize,
    k: usize,
    t: usize,
    variant: PathOrCycle,
) -> Result<bool, RecognizeError> {
    let max = binomial(k - 1, 2) as usize;
    if b > max {
        return Err(RecognizeError::LeftoverBudgetOutOfRange { b, max });
    }
    if l.edge_count() != b {
        return Ok(false);
    }
    if b == 0 {
        return Ok(true);
    }
    let (r, s) = colex_split(b);
    if s >= t - 1 {
        let stripped = l.strip_isolated();
        let target = colex_graph(b)?;
        return Ok(canonical_form(&stripped)? == canonical_form(&target)?);
    }
    if !is_free(l, k, variant)? {
        return Ok(false);
    }
    if r >= t {
        return Ok(count_cliques(l, r) >= 1);
    }
    Ok(true)
}

/// Whether `g` attains the vertex-variant path-free maximum: the clique
/// union `qK_{k-1} + K_r` when `t <= r`, and `q` clique components plus an
/// arbitrary remainder on `r` vertices when `t > r`.
pub fn is_extremal_vertex_path(g: &Graph, k: usize, t: usize) -> Result<bool, RecognizeError> {
    assert!((3..k).contains(&t), "need 3 <= t < k");
    let n = g.order();
    let (q, r) = path_decompose(n, k);
    let mut clique_components = 0usize;
    let mut complete_of_r = 0usize;
    let mut other = 0usize;
    for comp in g.component_masks() {
        let size = comp.count_ones() as usize;
        if size == k - 1 && g.is_clique_mask(comp) {
            clique_components += 1;
        } else if size == r && g.is_clique_mask(comp) {
            complete_of_r += 1;
        } else {
            other += 1;
        }
    }
    if t <= r {
        // unique extremal graph: exactly q cliques K_{k-1} and one K_r
        Ok(clique_components == q && complete_of_r == 1 && other == 0)
    } else {
        Ok(clique_components == q)
    }
}

/// Whether `g` attains the vertex-variant cycle-free maximum. For `t <= r`
/// the decomposition must be exactly `q` clique blocks glued as one tree
/// with a `K_r`; for `t > r` any gluing of at least `q` clique blocks on
/// exactly `n` vertices qualifies. Accepted graphs that are not actually
/// cycle-free raise [`RecognizeError::Inconsistent`].
pub fn is_extremal_vertex_cycle(g: &Graph, k: usize, t: usize) -> Result<bool, RecognizeError> {
    assert!((3..k).contains(&t), "need 3 <= t < k");
    let n = g.order();
    assert!(n >= 1, "cycle variant needs n >= 1");
    let (q, r) = cycle_decompose(n, k);
    let witness = decompose_forest_of_cliques(g, k)?.expect("decomposition always exists");
    let member = if t <= r {
        g.is_connected()
            && witness.q == q
            && witness.leftover.order() == r
            && witness.leftover.is_clique_mask(witness.leftover.full_mask())
    } else {
        witness.q >= q
    };
    if member && circumference(g)? >= k {
        return Err(RecognizeError::Inconsistent {
            graph6: encode(g).unwrap_or_else(|_| format!("order {}", g.order())),
        });
    }
    Ok(member)
}

/// Whether `g` attains the edge-variant maximum for its own edge count
/// `m = q C(k-1, 2) + b`. The cycle variant asks for `q` clique blocks glued
/// forest-fashion with a leftover in the colex family; the path variant
/// additionally requires the cliques to be full components and the leftover
/// path-free. Comparison ignores isolated vertices.
pub fn is_extremal_edge(
    g: &Graph,
    k: usize,
    t: usize,
    variant: PathOrCycle,
) -> Result<bool, RecognizeError> {
    assert!((3..k).contains(&t), "need 3 <= t < k");
    let g = g.strip_isolated();
    let m = g.edge_count();
    let block = binomial(k - 1, 2) as usize;
    let q = m / block;
    let b = m % block;
    match variant {
        PathOrCycle::Cycle => {
            let witness = decompose_forest_of_cliques(&g, k)?.expect("always exists");
            if witness.q != q {
                return Ok(false);
            }
            in_family_c(&witness.leftover, b, k, t)
        }
        PathOrCycle::Path => {
            let mut cliques = 0usize;
            let mut leftover_mask = 0u64;
            for comp in g.component_masks() {
                if comp.count_ones() as usize == k - 1 && g.is_clique_mask(comp) {
                    cliques += 1;
                } else {
                    leftover_mask |= comp;
                }
            }
            if cliques != q {
                return Ok(false);
            }
            in_family_l(&g.induced(leftover_mask), b, k, t)
        }
    }
}
