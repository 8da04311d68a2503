//! Constructions of the extremal graphs and families.
//!
//! Everything the closed-form maxima are attained by is built here: disjoint
//! clique unions, colex graphs, complete splits (clique joined to an
//! independent set), and block gluings where consecutive blocks share a
//! single vertex. `enumerate_family` expands a multiset of blocks into every
//! non-isomorphic gluing.

use std::collections::HashSet;

use thiserror::Error;

use crate::canon::{canonical_form, CanonError, CanonicalForm};
use crate::formulas::colex_split;
use crate::graph::{bit, Graph, GraphError, MAX_VERTICES};

/// Ceiling on the total block order accepted by `enumerate_family`.
pub const FAMILY_ORDER_CEILING: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error("recipe has {blocks} blocks but {attachments} attachments (need blocks - 1)")]
    ArityMismatch { blocks: usize, attachments: usize },
    #[error("attachment references vertex {vertex} outside {what} of order {order}")]
    AttachmentOutOfRange {
        vertex: usize,
        order: usize,
        what: &'static str,
    },
    #[error("gluing produced a duplicate edge between blocks")]
    EdgeCollision,
    #[error("tree gluings require connected, nonempty blocks")]
    DisconnectedBlock,
    #[error("total block order {0} exceeds the enumeration ceiling of {FAMILY_ORDER_CEILING}")]
    CeilingExceeded(usize),
    #[error("classical parameters violate the parity/residue conditions: {0}")]
    ConditionsViolated(&'static str),
}

/// The unique decomposition `m = C(r, 2) + s` with `0 <= s < r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColexDecomposition {
    pub m: usize,
    pub r: usize,
    pub s: usize,
}

pub fn colex_decompose(m: usize) -> ColexDecomposition {
    let (r, s) = colex_split(m);
    ColexDecomposition { m, r, s }
}

/// Disjoint union of `q` copies of `K_a` and one `K_r`.
pub fn union_cliques(q: usize, a: usize, r: usize) -> Result<Graph, ConstructError> {
    assert!(a >= 1, "clique order must be positive");
    let n = q * a + r;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut g = Graph::empty(n)?;
    for c in 0..q {
        for i in 0..a {
            for j in (i + 1)..a {
                g.add_edge_mut(c * a + i, c * a + j);
            }
        }
    }
    for i in 0..r {
        for j in (i + 1)..r {
            g.add_edge_mut(q * a + i, q * a + j);
        }
    }
    Ok(g)
}

/// The colex graph `L_m`: the first `m` pairs in colexicographic order.
/// Equals `K_r` plus one vertex adjacent to `s` clique vertices when
/// `m = C(r, 2) + s`, `0 < s < r`.
pub fn colex_graph(m: usize) -> Result<Graph, ConstructError> {
    // generate pairs (i, j), i < j, ordered by (j, i)
    let mut edges = Vec::with_capacity(m);
    'outer: for j in 1..MAX_VERTICES {
        for i in 0..j {
            if edges.len() == m {
                break 'outer;
            }
            edges.push((i, j));
        }
    }
    if edges.len() < m {
        return Err(GraphError::TooManyVertices(MAX_VERTICES + 1).into());
    }
    let n = edges.iter().map(|&(_, j)| j + 1).max().unwrap_or(0);
    Ok(Graph::from_edges(n, &edges)?)
}

/// Complete join of `K_a` with an independent set of `b` vertices;
/// `C(a, 2) + a b` edges.
pub fn split_graph(a: usize, b: usize) -> Result<Graph, ConstructError> {
    let n = a + b;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut g = Graph::empty(n)?;
    for i in 0..a {
        for j in (i + 1)..a {
            g.add_edge_mut(i, j);
        }
        for j in a..n {
            g.add_edge_mut(i, j);
        }
    }
    Ok(g)
}

/// How one block joins the partial gluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Attachment {
    /// Start a new connected component.
    NewComponent,
    /// Identify `block_vertex` of the incoming block with an already
    /// placed vertex.
    Identify {
        block_vertex: usize,
        placed_vertex: usize,
    },
}

/// An ordered list of blocks plus, for each block after the first, how it
/// attaches to what has been placed so far.
#[derive(Clone, Debug)]
pub struct GlueRecipe {
    pub blocks: Vec<Graph>,
    pub attachments: Vec<Attachment>,
}

/// Places `block` onto `placed`, returning the new graph and the global
/// index of each block vertex.
fn place_block(
    placed: &Graph,
    block: &Graph,
    attachment: Attachment,
) -> Result<(Graph, Vec<usize>), ConstructError> {
    match attachment {
        Attachment::NewComponent => {
            let offset = placed.order();
            let g = placed.disjoint_union(block)?;
            Ok((g, (0..block.order()).map(|v| offset + v).collect()))
        }
        Attachment::Identify {
            block_vertex,
            placed_vertex,
        } => {
            if block_vertex >= block.order() {
                return Err(ConstructError::AttachmentOutOfRange {
                    vertex: block_vertex,
                    order: block.order(),
                    what: "the incoming block",
                });
            }
            if placed_vertex >= placed.order() {
                return Err(ConstructError::AttachmentOutOfRange {
                    vertex: placed_vertex,
                    order: placed.order(),
                    what: "the placed graph",
                });
            }
            let n = placed.order() + block.order() - 1;
            if n > MAX_VERTICES {
                return Err(GraphError::TooManyVertices(n).into());
            }
            let mut map = Vec::with_capacity(block.order());
            let mut next = placed.order();
            for v in 0..block.order() {
                if v == block_vertex {
                    map.push(placed_vertex);
                } else {
                    map.push(next);
                    next += 1;
                }
            }
            let mut g = Graph::empty(n)?;
            for (u, v) in placed.edges() {
                g.add_edge_mut(u, v);
            }
            for (u, v) in block.edges() {
                if g.has_edge(map[u], map[v]) {
                    return Err(ConstructError::EdgeCollision);
                }
                g.add_edge_mut(map[u], map[v]);
            }
            Ok((g, map))
        }
    }
}

/// Replays a recipe: block edge sets stay disjoint, every identification
/// merges exactly one vertex.
pub fn glue(recipe: &GlueRecipe) -> Result<Graph, ConstructError> {
    let expected = recipe.blocks.len().saturating_sub(1);
    if recipe.attachments.len() != expected {
        return Err(ConstructError::ArityMismatch {
            blocks: recipe.blocks.len(),
            attachments: recipe.attachments.len(),
        });
    }
    let mut g = Graph::empty(0)?;
    for (i, block) in recipe.blocks.iter().enumerate() {
        let attachment = if i == 0 {
            Attachment::NewComponent
        } else {
            recipe.attachments[i - 1]
        };
        let (next, _) = place_block(&g, block, attachment)?;
        g = next;
    }
    Ok(g)
}

/// Gluing discipline for `enumerate_family`.
///
/// `Tree` and `Forest` are the sequential readings: every block after the
/// first shares exactly one vertex with the union placed so far (`Forest`
/// also allows starting fresh components). The `Strict*` modes additionally
/// require the block-intersection auxiliary graph of the finished gluing to
/// be literally a tree (forest), which excludes, e.g., three cliques glued
/// at one shared vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyMode {
    Tree,
    Forest,
    StrictTree,
    StrictForest,
}

impl FamilyMode {
    fn allows_new_components(self) -> bool {
        matches!(self, FamilyMode::Forest | FamilyMode::StrictForest)
    }

    fn is_strict(self) -> bool {
        matches!(self, FamilyMode::StrictTree | FamilyMode::StrictForest)
    }
}

/// All non-isomorphic results of gluing the given multiset of blocks,
/// optionally filtered to a fixed order.
pub fn enumerate_family(
    blocks: &[Graph],
    mode: FamilyMode,
    order_filter: Option<usize>,
) -> Result<Vec<CanonicalForm>, ConstructError> {
    let total: usize = blocks.iter().map(Graph::order).sum();
    if total > FAMILY_ORDER_CEILING {
        return Err(ConstructError::CeilingExceeded(total));
    }
    if matches!(mode, FamilyMode::Tree | FamilyMode::StrictTree)
        && blocks.iter().any(|b| b.order() == 0 || !b.is_connected())
    {
        return Err(ConstructError::DisconnectedBlock);
    }

    // group identical blocks so interchangeable choices are explored once
    let mut class_reps: Vec<(CanonicalForm, Graph)> = Vec::new();
    let mut remaining: Vec<usize> = Vec::new();
    for b in blocks {
        let cf = canonical_form(b)?;
        match class_reps.iter().position(|(c, _)| *c == cf) {
            Some(i) => remaining[i] += 1,
            None => {
                class_reps.push((cf, b.clone()));
                remaining.push(1);
            }
        }
    }

    let mut ctx = FamilyDfs {
        mode,
        order_filter,
        class_reps: class_reps.into_iter().map(|(_, g)| g).collect(),
        results: HashSet::new(),
        memo: HashSet::new(),
        error: None,
    };
    let start = Graph::empty(0)?;
    ctx.go(&start, &mut remaining, &mut Vec::new());
    if let Some(err) = ctx.error {
        return Err(err);
    }
    let mut out: Vec<CanonicalForm> = ctx.results.into_iter().collect();
    out.sort();
    Ok(out)
}

struct FamilyDfs {
    mode: FamilyMode,
    order_filter: Option<usize>,
    class_reps: Vec<Graph>,
    results: HashSet<CanonicalForm>,
    memo: HashSet<(u8, u128, Vec<usize>)>,
    error: Option<ConstructError>,
}

impl FamilyDfs {
    fn go(&mut self, g: &Graph, remaining: &mut Vec<usize>, parts: &mut Vec<u64>) {
        if self.error.is_some() {
            return;
        }
        if remaining.iter().all(|&c| c == 0) {
            self.complete(g, parts);
            return;
        }
        if !self.mode.is_strict() {
            // memoize on the isomorphism class of the partial gluing
            let cf = match canonical_form(g) {
                Ok(cf) => cf,
                Err(e) => {
                    self.error = Some(e.into());
                    return;
                }
            };
            let (order, code) = cf.code();
            if !self.memo.insert((order, code, remaining.clone())) {
                return;
            }
        }
        for class in 0..self.class_reps.len() {
            if remaining[class] == 0 {
                continue;
            }
            remaining[class] -= 1;
            let block = self.class_reps[class].clone();
            if g.order() == 0 || self.mode.allows_new_components() {
                self.try_place(g, &block, Attachment::NewComponent, remaining, parts);
            }
            if g.order() > 0 {
                for placed_vertex in 0..g.order() {
                    for block_vertex in 0..block.order() {
                        self.try_place(
                            g,
                            &block,
                            Attachment::Identify {
                                block_vertex,
                                placed_vertex,
                            },
                            remaining,
                            parts,
                        );
                    }
                }
            }
            remaining[class] += 1;
        }
    }

    fn try_place(
        &mut self,
        g: &Graph,
        block: &Graph,
        attachment: Attachment,
        remaining: &mut Vec<usize>,
        parts: &mut Vec<u64>,
    ) {
        if self.error.is_some() {
            return;
        }
        match place_block(g, block, attachment) {
            Ok((next, map)) => {
                let mask = map.iter().fold(0u64, |m, &v| m | bit(v));
                parts.push(mask);
                self.go(&next, remaining, parts);
                parts.pop();
            }
            Err(e) => self.error = Some(e),
        }
    }

    fn complete(&mut self, g: &Graph, parts: &[u64]) {
        if let Some(n) = self.order_filter {
            if g.order() != n {
                return;
            }
        }
        if self.mode.is_strict() && !auxiliary_is_valid(parts, self.mode) {
            return;
        }
        match canonical_form(g) {
            Ok(cf) => {
                self.results.insert(cf);
            }
            Err(e) => self.error = Some(e.into()),
        }
    }
}

/// Checks the literal auxiliary-graph condition: blocks as nodes, an edge
/// whenever two blocks share a vertex; a forest, and for `StrictTree` a
/// single tree spanning all blocks.
fn auxiliary_is_valid(parts: &[u64], mode: FamilyMode) -> bool {
    let l = parts.len();
    let mut parent: Vec<usize> = (0..l).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    let mut edges = 0;
    for i in 0..l {
        for j in (i + 1)..l {
            if parts[i] & parts[j] != 0 {
                edges += 1;
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri == rj {
                    return false; // cycle in the auxiliary graph
                }
                parent[ri] = rj;
            }
        }
    }
    match mode {
        FamilyMode::StrictTree => edges == l.saturating_sub(1),
        _ => true,
    }
}

/// Which classical edge-extremal family the exceptional construction
/// belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalVariant {
    /// No path on `k` vertices; `k` even, remainder `k/2` or `k/2 - 1`.
    Path,
    /// No cycle of length at least `k`; `k` odd, remainder `(k+1)/2` or
    /// `(k-1)/2`.
    Cycle,
}

/// The exceptional edge-extremal graph: `t_blocks` copies of `K_{k-1}`
/// together with a complete split graph, disjoint for the path variant and
/// glued at one vertex for the cycle variant.
pub fn exceptional_classical(
    variant: ClassicalVariant,
    n: usize,
    k: usize,
    t_blocks: usize,
) -> Result<Graph, ConstructError> {
    match variant {
        ClassicalVariant::Path => {
            if k < 4 || !k.is_multiple_of(2) {
                return Err(ConstructError::ConditionsViolated("path variant needs even k >= 4"));
            }
            let (q, r) = crate::formulas::path_decompose(n, k);
            // t_blocks = q degenerates to the clique-union extremal graph
            if q == 0 || t_blocks > q {
                return Err(ConstructError::ConditionsViolated("need 0 <= t_blocks <= q"));
            }
            if r != k / 2 && r + 1 != k / 2 {
                return Err(ConstructError::ConditionsViolated(
                    "path remainder must be k/2 or k/2 - 1",
                ));
            }
            let clique = k / 2 - 1;
            let independents = n - t_blocks * (k - 1) - clique;
            let h = split_graph(clique, independents)?;
            Ok(union_cliques(t_blocks, k - 1, 0)?.disjoint_union(&h)?)
        }
        ClassicalVariant::Cycle => {
            if k < 3 || k.is_multiple_of(2) {
                return Err(ConstructError::ConditionsViolated("cycle variant needs odd k >= 3"));
            }
            if n == 0 {
                return Err(ConstructError::ConditionsViolated("cycle variant needs n >= 1"));
            }
            let (q, r) = crate::formulas::cycle_decompose(n, k);
            if q == 0 || t_blocks > q {
                return Err(ConstructError::ConditionsViolated("need 0 <= t_blocks <= q"));
            }
            if r != k.div_ceil(2) && r != (k - 1) / 2 {
                return Err(ConstructError::ConditionsViolated(
                    "cycle remainder must be (k+1)/2 or (k-1)/2",
                ));
            }
            let clique = (k - 1) / 2;
            let independents = n - t_blocks * (k - 2) - clique;
            let mut g = split_graph(clique, independents)?;
            let block = Graph::complete(k - 1)?;
            for _ in 0..t_blocks {
                let (next, _) = place_block(
                    &g,
                    &block,
                    Attachment::Identify {
                        block_vertex: 0,
                        placed_vertex: 0,
                    },
                )?;
                g = next;
            }
            Ok(g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::count_cliques;
    use crate::formulas::{ex_cycle_edges, ex_path_edges};

    #[test]
    fn colex_decompose_examples() {
        assert_eq!(colex_decompose(7), ColexDecomposition { m: 7, r: 4, s: 1 });
        assert_eq!(colex_decompose(10), ColexDecomposition { m: 10, r: 5, s: 0 });
        assert_eq!(colex_decompose(1), ColexDecomposition { m: 1, r: 2, s: 0 });
    }

    #[test]
    fn union_cliques_examples() {
        let g = union_cliques(2, 3, 1).unwrap();
        assert_eq!((g.order(), g.edge_count()), (7, 6));
        assert_eq!(count_cliques(&g, 3), 2);
        assert_eq!(union_cliques(0, 5, 4).unwrap(), Graph::complete(4).unwrap());
        assert_eq!(union_cliques(1, 4, 0).unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn colex_graph_takes_the_first_pairs() {
        // first five pairs: {0,1} {0,2} {1,2} {0,3} {1,3}
        let g = colex_graph(5).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(count_cliques(&g, 3), 2);
        assert_eq!(colex_graph(3).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(colex_graph(0).unwrap().order(), 0);
    }

    #[test]
    fn colex_graph_is_clique_plus_attached_vertex() {
        for m in 0..=30 {
            let d = colex_decompose(m);
            let g = colex_graph(m).unwrap();
            assert_eq!(g.edge_count(), m);
            let expect_order = if d.s > 0 { d.r + 1 } else { d.r };
            assert_eq!(g.order(), expect_order, "m={m}");
        }
    }

    #[test]
    fn split_graph_examples() {
        let star = split_graph(1, 4).unwrap();
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star.edge_count() as u64, ex_path_edges(5, 4));
        let s26 = split_graph(2, 6).unwrap();
        assert_eq!(s26.edge_count(), 13);
        assert_eq!(s26.edge_count() as u64, ex_cycle_edges(8, 5));
        assert_eq!(split_graph(0, 3).unwrap().edge_count(), 0);
    }

    #[test]
    fn glue_two_triangles_into_bowtie() {
        let t = Graph::complete(3).unwrap();
        let recipe = GlueRecipe {
            blocks: vec![t.clone(), t],
            attachments: vec![Attachment::Identify {
                block_vertex: 0,
                placed_vertex: 0,
            }],
        };
        let g = glue(&recipe).unwrap();
        assert_eq!((g.order(), g.edge_count()), (5, 6));
        assert_eq!(count_cliques(&g, 3), 2);
    }

    #[test]
    fn glue_three_triangles_at_one_vertex_is_friendship() {
        let t = Graph::complete(3).unwrap();
        let recipe = GlueRecipe {
            blocks: vec![t.clone(), t.clone(), t],
            attachments: vec![
                Attachment::Identify { block_vertex: 0, placed_vertex: 0 },
                Attachment::Identify { block_vertex: 0, placed_vertex: 0 },
            ],
        };
        let g = glue(&recipe).unwrap();
        assert_eq!((g.order(), g.edge_count()), (7, 9));
        assert_eq!(g.degree(0), 6);
    }

    #[test]
    fn glue_with_new_component_is_disjoint_union() {
        let recipe = GlueRecipe {
            blocks: vec![Graph::complete(4).unwrap(), Graph::complete(2).unwrap()],
            attachments: vec![Attachment::NewComponent],
        };
        let g = glue(&recipe).unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 7));
        assert!(!g.is_connected());
    }

    #[test]
    fn glue_order_and_edges_add_up() {
        let recipe = GlueRecipe {
            blocks: vec![
                Graph::complete(4).unwrap(),
                Graph::complete(3).unwrap(),
                Graph::complete(2).unwrap(),
            ],
            attachments: vec![
                Attachment::Identify { block_vertex: 2, placed_vertex: 1 },
                Attachment::Identify { block_vertex: 0, placed_vertex: 5 },
            ],
        };
        let g = glue(&recipe).unwrap();
        assert_eq!(g.order(), 4 + 3 + 2 - 2);
        assert_eq!(g.edge_count(), 6 + 3 + 1);
    }

    #[test]
    fn glue_rejects_bad_attachments() {
        let recipe = GlueRecipe {
            blocks: vec![Graph::complete(3).unwrap(), Graph::complete(3).unwrap()],
            attachments: vec![Attachment::Identify { block_vertex: 3, placed_vertex: 0 }],
        };
        assert!(matches!(
            glue(&recipe).unwrap_err(),
            ConstructError::AttachmentOutOfRange { vertex: 3, .. }
        ));
        let recipe = GlueRecipe {
            blocks: vec![Graph::complete(3).unwrap(), Graph::complete(3).unwrap()],
            attachments: vec![],
        };
        assert!(matches!(glue(&recipe).unwrap_err(), ConstructError::ArityMismatch { .. }));
    }

    #[test]
    fn family_of_two_triangles_tree_is_the_bowtie() {
        let t = Graph::complete(3).unwrap();
        let fams = enumerate_family(&[t.clone(), t], FamilyMode::Tree, Some(5)).unwrap();
        assert_eq!(fams.len(), 1);
        let g = fams[0].to_graph();
        assert_eq!((g.order(), g.edge_count()), (5, 6));
    }

    #[test]
    fn family_of_k4_and_k3_forest_has_two_members() {
        let fams = enumerate_family(
            &[Graph::complete(4).unwrap(), Graph::complete(3).unwrap()],
            FamilyMode::Forest,
            None,
        )
        .unwrap();
        assert_eq!(fams.len(), 2);
    }

    #[test]
    fn family_of_one_block_is_itself() {
        let t = Graph::complete(3).unwrap();
        let fams = enumerate_family(std::slice::from_ref(&t), FamilyMode::Tree, None).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0], canonical_form(&t).unwrap());
    }

    #[test]
    fn strict_tree_excludes_three_blocks_at_one_vertex() {
        let t = Graph::complete(3).unwrap();
        let blocks = vec![t.clone(), t.clone(), t];
        let sequential = enumerate_family(&blocks, FamilyMode::Tree, None).unwrap();
        let strict = enumerate_family(&blocks, FamilyMode::StrictTree, None).unwrap();
        // sequential: friendship graph + chain; strict: chain only
        assert_eq!(sequential.len(), 2);
        assert_eq!(strict.len(), 1);
        assert!(sequential.contains(&strict[0]));
        let chain = strict[0].to_graph();
        let friendship = sequential
            .iter()
            .find(|cf| **cf != strict[0])
            .unwrap()
            .to_graph();
        assert_eq!(chain.order(), 7);
        assert!(friendship.edges().len() == 9 && (0..7).any(|v| friendship.degree(v) == 6));
    }

    #[test]
    fn tree_mode_rejects_disconnected_blocks() {
        let two_k1 = Graph::empty(2).unwrap();
        assert_eq!(
            enumerate_family(&[two_k1], FamilyMode::Tree, None).unwrap_err(),
            ConstructError::DisconnectedBlock
        );
    }

    #[test]
    fn family_ceiling_is_enforced() {
        let big = Graph::complete(11).unwrap();
        assert!(matches!(
            enumerate_family(&[big.clone(), big], FamilyMode::Forest, None).unwrap_err(),
            ConstructError::CeilingExceeded(22)
        ));
    }

    #[test]
    fn exceptional_path_graphs() {
        // n = 5, k = 4: the star K_{1,4}
        let g = exceptional_classical(ClassicalVariant::Path, 5, 4, 0).unwrap();
        assert_eq!(g.edge_count() as u64, ex_path_edges(5, 4));
        assert_eq!(g.order(), 5);
        assert!((0..5).any(|v| g.degree(v) == 4));
        // t_blocks = 1: K_3 plus K_2
        let g = exceptional_classical(ClassicalVariant::Path, 5, 4, 1).unwrap();
        assert_eq!(g.edge_count() as u64, ex_path_edges(5, 4));
        assert_eq!(count_cliques(&g, 3), 1);
        assert!(!g.is_connected());
    }

    #[test]
    fn exceptional_cycle_graphs() {
        // n = 8, k = 5: K_2 joined to 6 independent vertices
        let g = exceptional_classical(ClassicalVariant::Cycle, 8, 5, 0).unwrap();
        assert_eq!(g.edge_count() as u64, ex_cycle_edges(8, 5));
        assert_eq!(g.order(), 8);
        // with one clique block glued on, the edge count still matches
        let g = exceptional_classical(ClassicalVariant::Cycle, 11, 5, 1).unwrap();
        assert_eq!(g.edge_count() as u64, ex_cycle_edges(11, 5));
        assert!(g.is_connected());
    }

    #[test]
    fn exceptional_rejects_wrong_parity() {
        assert!(exceptional_classical(ClassicalVariant::Path, 8, 5, 0).is_err());
        assert!(exceptional_classical(ClassicalVariant::Cycle, 8, 4, 0).is_err());
        // k = 4, n = 6: remainder 0 fails the residue condition
        assert!(exceptional_classical(ClassicalVariant::Path, 6, 4, 0).is_err());
    }
}
