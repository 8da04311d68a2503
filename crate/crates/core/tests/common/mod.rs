//! Independent oracles for the integration suites.
//!
//! Everything here recomputes answers by brute force over labelled objects
//! (all permutations, all vertex sequences), deliberately sharing no code
//! with the library paths it checks.

#![allow(dead_code)]

use cliquewise::graph::Graph;

/// All permutations of `0..n` (usable as position -> vertex maps).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Minimum adjacency encoding over all labellings; a (slow, independent)
/// complete isomorphism invariant for `n <= 8`.
pub fn reference_iso_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 8, "reference code uses u64 bits");
    let mut best = u64::MAX;
    for perm in permutations(n) {
        // perm[position] = original vertex
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if g.has_edge(perm[i], perm[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    }
    if n == 0 {
        0
    } else {
        best
    }
}

/// Longest simple path order by depth-first extension of every start.
pub fn reference_longest_path(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut best = 1;
    let mut stack = Vec::new();
    for start in 0..n {
        stack.push(start);
        extend_path(g, &mut stack, &mut best);
        stack.pop();
    }
    best
}

fn extend_path(g: &Graph, stack: &mut Vec<usize>, best: &mut usize) {
    *best = (*best).max(stack.len());
    let last = *stack.last().unwrap();
    for v in 0..g.order() {
        if g.has_edge(last, v) && !stack.contains(&v) {
            stack.push(v);
            extend_path(g, stack, best);
            stack.pop();
        }
    }
}

/// Longest simple cycle length by depth-first search from each minimal
/// cycle vertex; 0 when the graph is a forest.
pub fn reference_circumference(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        stack.push(start);
        extend_cycle(g, start, &mut stack, &mut best);
        stack.pop();
    }
    best
}

fn extend_cycle(g: &Graph, start: usize, stack: &mut Vec<usize>, best: &mut usize) {
    let last = *stack.last().unwrap();
    for v in start..g.order() {
        if !g.has_edge(last, v) {
            continue;
        }
        if v == start && stack.len() >= 3 {
            *best = (*best).max(stack.len());
        }
        if v > start && !stack.contains(&v) {
            stack.push(v);
            extend_cycle(g, start, stack, best);
            stack.pop();
        }
    }
}

/// Number of isomorphism classes on `n` labelled vertices, by exhaustive
/// dedup of all `2^C(n,2)` labelled graphs.
pub fn reference_class_count(n: usize) -> usize {
    assert!(n <= 6, "labelled dedup is only tractable for n <= 6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        seen.insert(reference_iso_code(&g));
    }
    seen.len()
}

/// Number of `t`-subsets inducing cliques, checked subset by subset.
pub fn reference_clique_count(g: &Graph, t: usize) -> u64 {
    fn rec(g: &Graph, t: usize, from: usize, subset: &mut Vec<usize>, count: &mut u64) {
        if subset.len() == t {
            *count += 1;
            return;
        }
        for v in from..g.order() {
            if subset.iter().all(|&u| g.has_edge(u, v)) {
                subset.push(v);
                rec(g, t, v + 1, subset, count);
                subset.pop();
            }
        }
    }
    let mut count = 0;
    rec(g, t, 0, &mut Vec::new(), &mut count);
    count
}
