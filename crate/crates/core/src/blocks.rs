//! Biconnected blocks, cut vertices, and the block–cut incidence.
//!
//! A block is a maximal 2-connected subgraph or a bridge; blocks partition
//! the edge set, two blocks share at most one vertex, and the incidence
//! between blocks and cut vertices is acyclic within every connected
//! component. Isolated vertices belong to no block.

use crate::graph::{bit, bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<u64>,
    cut_vertices: u64,
    incidence: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Vertex masks of the blocks, in discovery order.
    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Mask of all cut vertices.
    pub fn cut_vertices(&self) -> u64 {
        self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices & bit(v) != 0
    }

    /// Bipartite block–cut incidence as `(block index, cut vertex)` pairs.
    pub fn incidence(&self) -> &[(usize, usize)] {
        &self.incidence
    }
}

/// Hopcroft–Tarjan biconnected-component decomposition.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut state = Dfs {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cut_vertices: 0,
    };
    for root in 0..n {
        if state.disc[root] == usize::MAX && g.degree(root) > 0 {
            let children = state.visit(root, usize::MAX);
            if children >= 2 {
                state.cut_vertices |= bit(root);
            }
        }
    }
    debug_assert!(state.edge_stack.is_empty());
    let mut incidence = Vec::new();
    for (i, &block) in state.blocks.iter().enumerate() {
        for v in bits(block & state.cut_vertices) {
            incidence.push((i, v));
        }
    }
    BlockDecomposition {
        blocks: state.blocks,
        cut_vertices: state.cut_vertices,
        incidence,
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<u64>,
    cut_vertices: u64,
}

impl Dfs<'_> {
    fn visit(&mut self, v: usize, parent: usize) -> usize {
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        self.timer += 1;
        let mut children = 0;
        for w in bits(self.g.neighbors(v)) {
            if w == parent {
                continue;
            }
            if self.disc[w] == usize::MAX {
                children += 1;
                self.edge_stack.push((v, w));
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent != usize::MAX {
                        self.cut_vertices |= bit(v);
                    }
                    let mut block = 0u64;
                    loop {
                        let (a, b) = self.edge_stack.pop().expect("block edge on stack");
                        block |= bit(a) | bit(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[v] {
                self.edge_stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        children
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn bowtie_has_two_blocks_one_cut() {
        let d = blocks(&bowtie());
        assert_eq!(d.block_count(), 2);
        assert_eq!(d.cut_vertices(), bit(2));
        assert_eq!(d.incidence().len(), 2);
    }

    #[test]
    fn path_on_three_vertices() {
        let d = blocks(&Graph::path_graph(3).unwrap());
        assert_eq!(d.block_count(), 2);
        assert_eq!(d.cut_vertices(), bit(1));
    }

    #[test]
    fn k4_is_one_block() {
        let d = blocks(&Graph::complete(4).unwrap());
        assert_eq!(d.block_count(), 1);
        assert_eq!(d.cut_vertices(), 0);
        assert_eq!(d.blocks()[0], 0b1111);
    }

    #[test]
    fn isolated_vertices_yield_no_blocks() {
        let d = blocks(&Graph::empty(4).unwrap());
        assert_eq!(d.block_count(), 0);
        assert_eq!(d.cut_vertices(), 0);
    }

    #[test]
    fn blocks_partition_edges() {
        // two triangles joined by a bridge, plus a pendant
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6)],
        )
        .unwrap();
        let d = blocks(&g);
        let per_block: usize = d.blocks().iter().map(|&b| g.edges_within(b)).sum();
        assert_eq!(per_block, g.edge_count());
    }

    #[test]
    fn friendship_graph_blocks() {
        // three triangles glued at vertex 0
        let g = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)],
        )
        .unwrap();
        let d = blocks(&g);
        assert_eq!(d.block_count(), 3);
        assert_eq!(d.cut_vertices(), bit(0));
        for &b in d.blocks() {
            assert_eq!(b.count_ones(), 3);
        }
    }

    #[test]
    fn block_cut_incidence_is_acyclic_per_component() {
        // chain of 3 triangles: 0-1-2, 2-3-4, 4-5-6
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6)],
        )
        .unwrap();
        let d = blocks(&g);
        // tree on blocks + cut vertices: nodes = blocks + cuts, edges = incidence
        let nodes = d.block_count() + d.cut_vertices().count_ones() as usize;
        assert_eq!(d.incidence().len(), nodes - 1);
    }
}
