//! Canonical labelling for small graphs.
//!
//! The canonical form is the minimum adjacency encoding reachable through
//! an individualization–refinement search: iterated degree refinement keeps
//! an ordered partition of the vertices, and branching individualizes one
//! vertex of the first non-singleton cell at a time. Branches whose placed
//! prefix already encodes worse than the best known leaf are cut, as are
//! twin vertices (equal neighbourhoods outside the pair), which keeps the
//! search shallow on highly symmetric inputs.
//!
//! Two graphs have equal canonical forms exactly when they are isomorphic;
//! the exactness ceiling is [`CANONICAL_ORDER_LIMIT`] vertices.

use thiserror::Error;

use crate::graph::{bit, Graph};

/// Orders above this limit are rejected rather than canonicalized.
pub const CANONICAL_ORDER_LIMIT: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("order {0} exceeds the canonical-form limit of {CANONICAL_ORDER_LIMIT}")]
    OrderAboveLimit(usize),
}

/// A graph relabelled into its canonical position ordering.
///
/// Equality and ordering consider only `(order, code)`; the permutation is
/// a witness and differs between isomorphic inputs.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    order: usize,
    code: u128,
    edges: Vec<(u8, u8)>,
    permutation: Vec<u8>,
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.code == other.code
    }
}

impl Eq for CanonicalForm {}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.code.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order, self.code).cmp(&(other.order, other.code))
    }
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Packed colex bits of the canonical upper triangle.
    pub fn code(&self) -> (u8, u128) {
        (self.order as u8, self.code)
    }

    /// Canonical edge list, colex-sorted.
    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    /// Relabelling that realizes the form: `permutation[v]` is the canonical
    /// position of input vertex `v`.
    pub fn permutation(&self) -> &[u8] {
        &self.permutation
    }

    /// Rebuilds the canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u as usize, v as usize))
            .collect();
        Graph::from_edges(self.order, &edges).expect("canonical edges are valid")
    }
}

/// Position of pair `(i, j)` with `i < j` in colex order.
#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Earlier pairs occupy more significant bits, so comparing codes as
/// integers is lexicographic in placement order — which is what makes the
/// prefix pruning in the search sound.
#[inline]
fn pair_bit(total: usize, i: usize, j: usize) -> u128 {
    1u128 << (total - 1 - pair_index(i, j))
}

fn code_of(g: &Graph, placed: &[usize], order: usize) -> u128 {
    let total = order * (order - 1) / 2;
    let mut code = 0u128;
    for (jpos, &vj) in placed.iter().enumerate().skip(1) {
        for (ipos, &vi) in placed.iter().enumerate().take(jpos) {
            if g.has_edge(vi, vj) {
                code |= pair_bit(total, ipos, jpos);
            }
        }
    }
    code
}

fn edges_of_code(order: usize, code: u128) -> Vec<(u8, u8)> {
    let total = order * order.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    for j in 1..order {
        for i in 0..j {
            if code & pair_bit(total, i, j) != 0 {
                edges.push((i as u8, j as u8));
            }
        }
    }
    edges
}

/// Rebuilds a graph from a canonical code.
pub(crate) fn graph_of_code(order: usize, code: u128) -> Graph {
    let edges: Vec<(usize, usize)> = edges_of_code(order, code)
        .into_iter()
        .map(|(u, v)| (u as usize, v as usize))
        .collect();
    Graph::from_edges(order, &edges).expect("code pairs are in range")
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let n = g.order();
    if n > CANONICAL_ORDER_LIMIT {
        return Err(CanonError::OrderAboveLimit(n));
    }
    if n == 0 {
        return Ok(CanonicalForm {
            order: 0,
            code: 0,
            edges: Vec::new(),
            permutation: Vec::new(),
        });
    }
    let m = g.edge_count();
    if m == 0 || m == n * (n - 1) / 2 {
        // refinement can never split these; any labelling is canonical
        let placed: Vec<usize> = (0..n).collect();
        let code = code_of(g, &placed, n);
        return Ok(CanonicalForm {
            order: n,
            code,
            edges: edges_of_code(n, code),
            permutation: (0..n as u8).collect(),
        });
    }
    let mut search = Search {
        g,
        n,
        best_code: 0,
        best_perm: Vec::new(),
        found: false,
    };
    let cells = refine(g, vec![(0..n).collect()]);
    search.descend(&cells);
    debug_assert!(search.found);
    Ok(CanonicalForm {
        order: n,
        code: search.best_code,
        edges: edges_of_code(n, search.best_code),
        permutation: search.best_perm,
    })
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    Ok(canonical_form(g)?.to_graph())
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best_code: u128,
    best_perm: Vec<u8>,
    found: bool,
}

impl Search<'_> {
    fn descend(&mut self, cells: &[Vec<usize>]) {
        let prefix = cells.iter().take_while(|c| c.len() == 1).count();
        let placed: Vec<usize> = cells[..prefix].iter().map(|c| c[0]).collect();
        let partial = code_of(self.g, &placed, self.n);
        if self.found {
            // the placed prefix fixes the top C(prefix, 2) bits of any leaf
            let total = self.n * (self.n - 1) / 2;
            let nbits = prefix * prefix.saturating_sub(1) / 2;
            let mask = if nbits == 0 {
                0
            } else {
                ((1u128 << nbits) - 1) << (total - nbits)
            };
            if partial > self.best_code & mask {
                return;
            }
        }
        if prefix == cells.len() {
            if !self.found || partial < self.best_code {
                self.found = true;
                self.best_code = partial;
                let mut perm = vec![0u8; self.n];
                for (pos, &v) in placed.iter().enumerate() {
                    perm[v] = pos as u8;
                }
                self.best_perm = perm;
            }
            return;
        }
        let target = &cells[prefix];
        let mut tried: Vec<usize> = Vec::with_capacity(target.len());
        for &u in target {
            if tried.iter().any(|&v| self.twins(u, v)) {
                continue;
            }
            tried.push(u);
            let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..prefix]);
            child.push(vec![u]);
            child.push(target.iter().copied().filter(|&w| w != u).collect());
            child.extend_from_slice(&cells[prefix + 1..]);
            let refined = refine(self.g, child);
            self.descend(&refined);
        }
    }

    /// Swapping `u` and `v` is an automorphism.
    fn twins(&self, u: usize, v: usize) -> bool {
        let m = !(bit(u) | bit(v));
        self.g.neighbors(u) & m == self.g.neighbors(v) & m
    }
}

/// Iterated neighbour-count refinement of an ordered partition. Sub-cells
/// are ordered by signature, so the result is equivariant under relabelling.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | bit(v)))
            .collect();
        let mut split_at = None;
        for (ci, cell) in cells.iter().enumerate() {
            if cell.len() <= 1 {
                continue;
            }
            let sigs: Vec<Vec<u32>> = cell
                .iter()
                .map(|&v| masks.iter().map(|&mk| (g.neighbors(v) & mk).count_ones()).collect())
                .collect();
            if sigs.iter().any(|s| s != &sigs[0]) {
                split_at = Some((ci, sigs));
                break;
            }
        }
        let Some((ci, sigs)) = split_at else {
            return cells;
        };
        let cell = cells.remove(ci);
        let mut groups: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
        for (v, sig) in cell.into_iter().zip(sigs) {
            match groups.iter_mut().find(|(s, _)| *s == sig) {
                Some((_, members)) => members.push(v),
                None => groups.push((sig, vec![v])),
            }
        }
        groups.sort_by(|a, b| a.0.cmp(&b.0));
        for (offset, (_, members)) in groups.into_iter().enumerate() {
            cells.insert(ci + offset, members);
        }
    }
}
