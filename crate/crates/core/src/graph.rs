//! Bitset-backed simple undirected graphs on up to 64 vertices.
//!
//! Each vertex stores its neighbourhood as one `u64` word, so set
//! intersections (the inner loop of clique counting and path search) are
//! single machine operations. Graphs are plain values: every operation in
//! this crate takes them by reference and returns fresh ones, which makes
//! all of the library trivially safe to use from parallel workers.

use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex count (one adjacency word per vertex).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("order {0} exceeds the {MAX_VERTICES}-vertex limit")]
    TooManyVertices(usize),
}

/// Finite simple undirected graph.
///
/// Invariants: adjacency is symmetric, the diagonal is empty, and every
/// adjacency word only uses the low `order` bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Iterates the set bit positions of a mask, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
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

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an unordered edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let full = g.full_mask();
        for v in 0..n {
            g.adj[v] = full & !bit(v);
        }
        Ok(g)
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.adj.iter().map(|a| a.count_ones()).sum();
        (total / 2) as usize
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).min().unwrap_or(0)
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Mask with one bit per vertex.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Edge list with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !(bit(u) | (bit(u) - 1))) {
                out.push((u, v));
            }
        }
        out
    }

    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    /// New graph with one extra vertex adjacent to the vertices in `mask`.
    pub(crate) fn with_vertex(&self, mask: u64) -> Graph {
        debug_assert!(self.n < MAX_VERTICES);
        debug_assert_eq!(mask & !self.full_mask(), 0);
        let mut adj = self.adj.clone();
        for v in bits(mask) {
            adj[v] |= bit(self.n);
        }
        adj.push(mask);
        Graph { n: self.n + 1, adj }
    }

    /// Relabels vertices: `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.add_edge_mut(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced by `mask`, compacted to vertices `0..popcount(mask)`
    /// in ascending original order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask).collect();
        let mut g = Graph::empty(verts.len()).expect("subset order");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_mut(i, j);
                }
            }
        }
        g
    }

    /// Vertex masks of the connected components, ordered by least vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & bit(v) != 0 {
                continue;
            }
            let mut comp = bit(v);
            let mut frontier = bit(v);
            while frontier != 0 {
                let mut next = 0u64;
                for u in bits(frontier) {
                    next |= self.adj[u] & !comp;
                }
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// Mask of degree-0 vertices.
    pub fn isolated_mask(&self) -> u64 {
        let mut m = 0u64;
        for v in 0..self.n {
            if self.adj[v] == 0 {
                m |= bit(v);
            }
        }
        m
    }

    /// Removes all degree-0 vertices, compacting labels.
    pub fn strip_isolated(&self) -> Graph {
        self.induced(self.full_mask() & !self.isolated_mask())
    }

    /// Number of edges with both endpoints inside `mask`.
    pub fn edges_within(&self, mask: u64) -> usize {
        let total: u32 = bits(mask).map(|v| (self.adj[v] & mask).count_ones()).sum();
        (total / 2) as usize
    }

    /// Whether `mask` induces a complete subgraph.
    pub fn is_clique_mask(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == mask & !bit(v))
    }

    /// Disjoint union; the second operand is relabelled with an offset.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        for v in 0..other.n {
            adj.push(other.adj[v] << self.n);
        }
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
