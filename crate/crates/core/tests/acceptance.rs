//! Acceptance suite: every claim the library makes, replayed end to end by
//! exhaustive search at desk scale. One summary line prints per criterion
//! (run with `--nocapture` to see them); every comparison is exact integer
//! equality.

mod common;

use std::collections::{BTreeSet, HashSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cliquewise::canon::{canonical_form, canonical_graph};
use cliquewise::cliques::count_cliques;
use cliquewise::construct::{
    colex_decompose, colex_graph, exceptional_classical, glue, split_graph, union_cliques,
    Attachment, ClassicalVariant, GlueRecipe,
};
use cliquewise::enumerate::enumerate_graphs;
use cliquewise::formulas::{
    binomial, cycle_decompose, ex_cycle_edges, ex_path_edges, kk_value, lemma_convexity,
    lemma_team_identity, luo_bound, majorizes, max_kt_vertex, path_decompose, split_sequence,
    ExtremalQuery, PathOrCycle, QueryVariant,
};
use cliquewise::graph::Graph;
use cliquewise::graph6::{decode, encode};
use cliquewise::paths::freeness_profile;
use cliquewise::verify::verify_cell;

fn report(id: usize, name: &str, failures: &[String], detail: String) {
    if failures.is_empty() {
        println!("acceptance {id} ({name}): PASS — {detail}");
    } else {
        println!("acceptance {id} ({name}): FAIL — {} problem(s)", failures.len());
        for f in failures.iter().take(20) {
            println!("    {f}");
        }
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:?}");
}

fn canonical_line(g: &Graph) -> String {
    encode(&canonical_graph(g).expect("within canonical limit")).expect("encodable")
}

#[test]
fn acceptance_1_vertex_path_classification() {
    let mut failures = Vec::new();
    let mut cells = 0;
    for k in 4..=7 {
        for t in 3..k {
            for n in 1..=8 {
                cells += 1;
                let q = ExtremalQuery::new(QueryVariant::VertexPath, n, k, t);
                match verify_cell(&q) {
                    Ok(r) => {
                        if !r.is_match {
                            failures.push(format!(
                                "cell k={k} t={t} n={n}: formula {} brute {} counterexamples {:?}",
                                r.formula_value, r.brute_value, r.counterexamples
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("cell k={k} t={t} n={n}: {e}")),
                }
            }
        }
    }
    report(1, "vertex-path", &failures, format!("{cells} cells match"));
}

#[test]
fn acceptance_2_vertex_cycle_classification() {
    let mut failures = Vec::new();
    let mut cells = 0;
    for k in 4..=7 {
        for t in 3..k {
            for n in 1..=8 {
                cells += 1;
                let q = ExtremalQuery::new(QueryVariant::VertexCycle, n, k, t);
                match verify_cell(&q) {
                    Ok(r) => {
                        if !r.is_match {
                            failures.push(format!(
                                "cell k={k} t={t} n={n}: formula {} brute {} counterexamples {:?}",
                                r.formula_value, r.brute_value, r.counterexamples
                            ));
                        }
                        if !r.inconsistency_flags.is_empty() {
                            failures.push(format!(
                                "cell k={k} t={t} n={n}: flags {:?}",
                                r.inconsistency_flags
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("cell k={k} t={t} n={n}: {e}")),
                }
            }
        }
    }
    report(
        2,
        "vertex-cycle",
        &failures,
        format!("{cells} cells match, zero inconsistency flags"),
    );
}

fn edge_criterion(id: usize, name: &str, variant: QueryVariant) {
    let mut failures = Vec::new();
    let mut cells = 0;
    for k in 4..=5 {
        for t in 3..=4 {
            if t >= k {
                continue;
            }
            for m in 0..=11 {
                cells += 1;
                let q = ExtremalQuery::new(variant, m, k, t);
                match verify_cell(&q) {
                    Ok(r) => {
                        if !r.is_match {
                            failures.push(format!(
                                "cell k={k} t={t} m={m}: formula {} brute {} counterexamples {:?}",
                                r.formula_value, r.brute_value, r.counterexamples
                            ));
                        }
                        if !r.inconsistency_flags.is_empty() {
                            failures.push(format!(
                                "cell k={k} t={t} m={m}: flags {:?}",
                                r.inconsistency_flags
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("cell k={k} t={t} m={m}: {e}")),
                }
            }
        }
    }
    report(id, name, &failures, format!("{cells} cells match"));
}

#[test]
fn acceptance_3_edge_cycle_classification() {
    edge_criterion(3, "edge-cycle", QueryVariant::EdgeCycle);
}

#[test]
fn acceptance_4_edge_path_classification() {
    edge_criterion(4, "edge-path", QueryVariant::EdgePath);
}

#[test]
fn acceptance_5_kruskal_katona() {
    let mut failures = Vec::new();
    let level = enumerate_graphs(8, None).unwrap();
    // (edges, k_3, k_4, k_5) per graph, computed once
    let facts: Vec<(usize, [u64; 3])> = level
        .iter()
        .map(|g| (g.edge_count(), [3, 4, 5].map(|t| count_cliques(g, t))))
        .collect();
    let mut checked = 0;
    for m in 0..=15 {
        for t in 3..=5 {
            checked += 1;
            let expected = kk_value(m, t);
            let mut best = 0;
            for (edges, kt) in &facts {
                if *edges == m {
                    best = best.max(kt[t - 3]);
                }
            }
            if best != expected {
                failures.push(format!("m={m} t={t}: max {best} != kk {expected}"));
                continue;
            }
            let maximizers: BTreeSet<String> = level
                .iter()
                .zip(&facts)
                .filter(|(_, (edges, kt))| *edges == m && kt[t - 3] == expected)
                .map(|(g, _)| canonical_line(&g.strip_isolated()))
                .collect();
            let d = colex_decompose(m);
            let colex_line = canonical_line(&colex_graph(m).unwrap());
            if !maximizers.contains(&colex_line) {
                failures.push(format!("m={m} t={t}: colex graph is not a maximizer"));
            }
            if m > 0 && d.s >= t - 1 {
                // unique maximizer case
                if maximizers.len() != 1 {
                    failures.push(format!(
                        "m={m} t={t}: expected the colex graph to be unique, got {} maximizers",
                        maximizers.len()
                    ));
                }
            } else if d.r >= t {
                for line in &maximizers {
                    let g = decode(line).unwrap();
                    if count_cliques(&g, d.r) == 0 {
                        failures.push(format!("m={m} t={t}: maximizer without K_{}", d.r));
                    }
                }
            } else if d.r < t && expected != 0 {
                failures.push(format!("m={m} t={t}: expected zero maximum"));
            }
        }
    }
    report(
        5,
        "kruskal-katona",
        &failures,
        format!("{checked} (m, t) cells over graphs of order <= 8"),
    );
}

#[test]
fn acceptance_6_classical_edge_theorems() {
    let mut failures = Vec::new();
    let mut cells = 0;
    for n in 1..=8usize {
        let level = enumerate_graphs(n, None).unwrap();
        let profiles: Vec<_> = level
            .iter()
            .map(|g| freeness_profile(g, usize::MAX).unwrap())
            .collect();
        for k in 3..=7usize {
            cells += 2;

            // path side
            let expected = ex_path_edges(n, k);
            let mut best = 0usize;
            for (g, p) in level.iter().zip(&profiles) {
                if p.longest_path_order < k {
                    best = best.max(g.edge_count());
                }
            }
            if best as u64 != expected {
                failures.push(format!("path n={n} k={k}: max edges {best} != {expected}"));
            }
            let extremal: BTreeSet<String> = level
                .iter()
                .zip(&profiles)
                .filter(|(g, p)| p.longest_path_order < k && g.edge_count() as u64 == expected)
                .map(|(g, _)| canonical_line(g))
                .collect();
            let (q, r) = path_decompose(n, k);
            let clique_union = union_cliques(q, k - 1, r).unwrap();
            if !extremal.contains(&canonical_line(&clique_union)) {
                failures.push(format!("path n={n} k={k}: clique union missing"));
            }
            if k % 2 == 0 && q >= 1 {
                let residue_ok = r == k / 2 || r + 1 == k / 2;
                for tb in 0..=q {
                    let clique = k / 2 - 1;
                    if n < tb * (k - 1) + clique {
                        continue;
                    }
                    let b = n - tb * (k - 1) - clique;
                    if residue_ok {
                        let g = exceptional_classical(ClassicalVariant::Path, n, k, tb).unwrap();
                        if !extremal.contains(&canonical_line(&g)) {
                            failures.push(format!(
                                "path n={n} k={k} t_blocks={tb}: exceptional graph missing"
                            ));
                        }
                    } else {
                        let shape = union_cliques(tb, k - 1, 0)
                            .unwrap()
                            .disjoint_union(&split_graph(clique, b).unwrap())
                            .unwrap();
                        if extremal.contains(&canonical_line(&shape)) {
                            failures.push(format!(
                                "path n={n} k={k} t_blocks={tb}: split shape should not be extremal"
                            ));
                        }
                    }
                }
            }

            // cycle side
            let expected = ex_cycle_edges(n, k);
            let mut best = 0usize;
            for (g, p) in level.iter().zip(&profiles) {
                if p.circumference < k {
                    best = best.max(g.edge_count());
                }
            }
            if best as u64 != expected {
                failures.push(format!("cycle n={n} k={k}: max edges {best} != {expected}"));
            }
            let extremal: BTreeSet<String> = level
                .iter()
                .zip(&profiles)
                .filter(|(g, p)| p.circumference < k && g.edge_count() as u64 == expected)
                .map(|(g, _)| canonical_line(g))
                .collect();
            let (q, r) = cycle_decompose(n, k);
            let glued = glued_cliques_with_residue(q, k, r);
            if !extremal.contains(&canonical_line(&glued)) {
                failures.push(format!("cycle n={n} k={k}: glued clique family missing"));
            }
            if k % 2 == 1 && q >= 1 {
                let residue_ok = r == k.div_ceil(2) || r == (k - 1) / 2;
                let clique = (k - 1) / 2;
                for tb in 0..=q {
                    if n < tb * (k - 2) + clique {
                        continue;
                    }
                    let b = n - tb * (k - 2) - clique;
                    if residue_ok {
                        let g = exceptional_classical(ClassicalVariant::Cycle, n, k, tb).unwrap();
                        if !extremal.contains(&canonical_line(&g)) {
                            failures.push(format!(
                                "cycle n={n} k={k} t_blocks={tb}: exceptional graph missing"
                            ));
                        }
                    } else {
                        let mut shape = split_graph(clique, b).unwrap();
                        for _ in 0..tb {
                            shape = glue(&GlueRecipe {
                                blocks: vec![shape, Graph::complete(k - 1).unwrap()],
                                attachments: vec![Attachment::Identify {
                                    block_vertex: 0,
                                    placed_vertex: 0,
                                }],
                            })
                            .unwrap();
                        }
                        if shape.order() == n && extremal.contains(&canonical_line(&shape)) {
                            failures.push(format!(
                                "cycle n={n} k={k} t_blocks={tb}: split shape should not be extremal"
                            ));
                        }
                    }
                }
            }
        }
    }
    report(
        6,
        "classical-edge-maxima",
        &failures,
        format!("{cells} (n, k) sides, exceptional families exactly under parity/residue"),
    );
}

/// One tree gluing of q copies of K_{k-1} and a K_r, all at one vertex.
fn glued_cliques_with_residue(q: usize, k: usize, r: usize) -> Graph {
    if q == 0 {
        return Graph::complete(r).unwrap();
    }
    let mut blocks = vec![Graph::complete(k - 1).unwrap(); q];
    if r >= 2 {
        blocks.push(Graph::complete(r).unwrap());
    }
    let attachments = vec![
        Attachment::Identify {
            block_vertex: 0,
            placed_vertex: 0,
        };
        blocks.len() - 1
    ];
    glue(&GlueRecipe { blocks, attachments }).unwrap()
}

#[test]
fn acceptance_7_lemma_suites() {
    let mut failures = Vec::new();

    // convexity of binomials over the full tuple grid
    let mut convexity_checked = 0u64;
    for t in 2..=6usize {
        for x in 0..=15usize {
            for w in 0..=15usize {
                for y in 0..=15usize {
                    let z = match (x + w).checked_sub(y) {
                        Some(z) if z <= 15 => z,
                        _ => continue,
                    };
                    if x < y || x < z || x < t {
                        continue;
                    }
                    convexity_checked += 1;
                    let out = lemma_convexity(x, w, y, z, t).unwrap();
                    if !out.holds {
                        failures.push(format!("convexity fails at x={x} w={w} y={y} z={z} t={t}"));
                    }
                    if x > y && x > z && !out.strict {
                        failures.push(format!(
                            "convexity should be strict at x={x} w={w} y={y} z={z} t={t}"
                        ));
                    }
                }
            }
        }
    }

    // team-counting inequality
    let mut team_checked = 0u64;
    for x in 0..=12 {
        for y in 0..=12 {
            for t in 3..=6 {
                team_checked += 1;
                if !lemma_team_identity(x, y, t) {
                    failures.push(format!("team inequality fails at x={x} y={y} t={t}"));
                }
            }
        }
    }

    // Karamata on random majorizing pairs with f = C(., t-1)
    let mut rng = StdRng::seed_from_u64(0x4a5a_11a7);
    for case in 0..1000 {
        let len = rng.gen_range(2..=8);
        let mut y: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=12)).collect();
        y.sort_unstable_by(|a, b| b.cmp(a));
        let mut x = y.clone();
        for _ in 0..rng.gen_range(0..10) {
            let i = rng.gen_range(0..len);
            let j = rng.gen_range(0..len);
            if i < j && x[j] >= 1 && (i == 0 || x[i - 1] > x[i]) && (j + 1 == len || x[j] > x[j + 1])
            {
                x[i] += 1;
                x[j] -= 1;
            }
        }
        if !majorizes(&x, &y).unwrap() {
            failures.push(format!("case {case}: generated pair does not majorize"));
            continue;
        }
        for t in 3..=5usize {
            let fx: u64 = x.iter().map(|&v| binomial(v as usize, t - 1)).sum();
            let fy: u64 = y.iter().map(|&v| binomial(v as usize, t - 1)).sum();
            if fx < fy {
                failures.push(format!("Karamata fails for x={x:?} y={y:?} t={t}"));
            }
        }
    }

    // split sequences: descending, sum-preserving, width-capped
    for case in 0..500 {
        let delta = rng.gen_range(1..=8u64);
        let len = rng.gen_range(1..=6);
        let degrees: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=30)).collect();
        let s = split_sequence(delta, &degrees);
        if !s.windows(2).all(|w| w[0] >= w[1]) {
            failures.push(format!("case {case}: split sequence not descending"));
        }
        if s.iter().sum::<u64>() != degrees.iter().sum::<u64>() {
            failures.push(format!("case {case}: split sequence changes the total"));
        }
        if s.iter().any(|&v| v > delta) {
            failures.push(format!("case {case}: split entry exceeds the width"));
        }
    }

    // the exact maxima never exceed the density bounds
    for k in 4..=7 {
        for t in 3..k {
            for n in 0..=24 {
                let exact = max_kt_vertex(PathOrCycle::Path, n, k, t).unwrap();
                if luo_bound(PathOrCycle::Path, n, k, t).unwrap() < exact {
                    failures.push(format!("path bound fails at n={n} k={k} t={t}"));
                }
                if n >= 1 {
                    let exact = max_kt_vertex(PathOrCycle::Cycle, n, k, t).unwrap();
                    if luo_bound(PathOrCycle::Cycle, n, k, t).unwrap() < exact {
                        failures.push(format!("cycle bound fails at n={n} k={k} t={t}"));
                    }
                }
            }
        }
    }

    report(
        7,
        "lemma-suites",
        &failures,
        format!(
            "{convexity_checked} convexity tuples, {team_checked} team tuples, \
             1000 Karamata pairs, 500 split sequences, density bounds"
        ),
    );
}

#[test]
fn acceptance_8_infrastructure() {
    let mut failures = Vec::new();

    // enumeration counts against the labelled-dedup oracle
    let frozen = [1usize, 1, 2, 4, 11, 34, 156];
    for (n, &expected) in frozen.iter().enumerate() {
        let ours = enumerate_graphs(n, None).unwrap().len();
        let reference = common::reference_class_count(n);
        if ours != reference || ours != expected {
            failures.push(format!(
                "n={n}: enumerated {ours}, reference {reference}, expected {expected}"
            ));
        }
    }

    // graph6 round-trip identity on every graph of order <= 7
    let mut round_tripped = 0;
    for n in 0..=7 {
        for g in enumerate_graphs(n, None).unwrap() {
            round_tripped += 1;
            let line = encode(&g).unwrap();
            if decode(&line).unwrap() != g {
                failures.push(format!("round trip differs for {line}"));
            }
        }
    }

    // canonical-form invariance on a 500-graph sample, 100 relabellings each
    let level = enumerate_graphs(7, None).unwrap();
    let sample: Vec<&Graph> = level.iter().step_by(2).take(500).collect();
    if sample.len() != 500 {
        failures.push(format!("sample size {} != 500", sample.len()));
    }
    let mut rng = StdRng::seed_from_u64(0xca40);
    for g in sample {
        let cf = canonical_form(g).unwrap();
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..g.order()).collect();
            for i in (1..perm.len()).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            if canonical_form(&g.relabel(&perm)).unwrap() != cf {
                failures.push(format!("relabelling changed the form of {g:?}"));
                break;
            }
        }
    }

    report(
        8,
        "infrastructure",
        &failures,
        format!("counts 1,1,2,4,11,34,156; {round_tripped} round trips; 500x100 relabellings"),
    );
}

#[test]
fn acceptance_examples_pin_the_paperwork() {
    // a handful of fixed values the suite elsewhere relies on
    let mut failures = Vec::new();
    let checks: Vec<(&str, u64, u64)> = vec![
        ("ex_path(10,4)", ex_path_edges(10, 4), 9),
        ("ex_cycle(10,4)", ex_cycle_edges(10, 4), 13),
        ("max_kt_vertex(path,7,4,3)", max_kt_vertex(PathOrCycle::Path, 7, 4, 3).unwrap(), 2),
        ("max_kt_vertex(cycle,7,4,3)", max_kt_vertex(PathOrCycle::Cycle, 7, 4, 3).unwrap(), 3),
        ("kk(10,3)", kk_value(10, 3), 10),
    ];
    for (name, got, want) in checks {
        if got != want {
            failures.push(format!("{name}: got {got}, want {want}"));
        }
    }
    let mut seen = HashSet::new();
    for g in enumerate_graphs(4, None).unwrap() {
        seen.insert(canonical_form(&g).unwrap());
    }
    if seen.len() != 11 {
        failures.push(format!("expected 11 classes on 4 vertices, got {}", seen.len()));
    }
    assert!(failures.is_empty(), "{failures:?}");
}
