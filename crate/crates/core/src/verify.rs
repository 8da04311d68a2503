//! Brute-force verification of the extremal claims.
//!
//! A cell is one `(variant, size, k, t)` query. Verification enumerates the
//! full search space for the cell, takes the true maximum and the set of
//! attaining graphs, evaluates the closed formula, and runs the structural
//! recognizer over every free graph in the space. The report records both
//! values, both sets, and their symmetric difference; a mismatching cell is
//! data, never an abort.
//!
//! Per-graph statistics (longest path, circumference, clique counts) are
//! cached per enumeration level so suites touch each graph once.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, CanonError};
use crate::cliques::count_cliques;
use crate::enumerate::{
    vertex_level, edge_level, EnumerateError, EDGE_BUDGET_LIMIT, ENUMERATION_ORDER_LIMIT,
};
use crate::formulas::{ExtremalQuery, FormulaError, PathOrCycle, QueryVariant};
use crate::graph::Graph;
use crate::graph6::{encode, Graph6Error};
use crate::paths::{circumference, longest_path_order, AnalysisError};
use crate::recognize::{
    is_extremal_edge, is_extremal_vertex_cycle, is_extremal_vertex_path, RecognizeError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Recognize(#[from] RecognizeError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

/// Per-graph facts shared by every cell that touches an enumeration level.
#[derive(Clone, Debug)]
struct GraphStat {
    graph: Graph,
    g6: String,
    longest_path: usize,
    circumference: usize,
    kt: [u64; 4], // t = 3, 4, 5, 6
}

impl GraphStat {
    fn of(graph: Graph) -> GraphStat {
        let longest_path = longest_path_order(&graph).expect("levels stay within the DP limit");
        let circ = circumference(&graph).expect("levels stay within the DP limit");
        let kt = [3, 4, 5, 6].map(|t| count_cliques(&graph, t));
        let g6 = encode(&graph).expect("levels stay within graph6 range");
        GraphStat {
            graph,
            g6,
            longest_path,
            circumference: circ,
            kt,
        }
    }

    fn count(&self, t: usize) -> u64 {
        if (3..=6).contains(&t) {
            self.kt[t - 3]
        } else {
            count_cliques(&self.graph, t)
        }
    }

    fn is_free(&self, k: usize, variant: PathOrCycle) -> bool {
        match variant {
            PathOrCycle::Path => self.longest_path < k,
            PathOrCycle::Cycle => self.circumference < k,
        }
    }
}

fn stats_of_level(graphs: &[Graph]) -> Vec<GraphStat> {
    graphs.par_iter().cloned().map(GraphStat::of).collect()
}

fn vertex_stats(n: usize) -> Result<Arc<Vec<GraphStat>>, VerifyError> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<GraphStat>>>>> = OnceLock::new();
    if n > ENUMERATION_ORDER_LIMIT {
        return Err(EnumerateError::OrderCeiling(n).into());
    }
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("vertex stats").get(&n) {
        return Ok(hit.clone());
    }
    let stats = Arc::new(stats_of_level(&vertex_level(n)));
    cache.lock().expect("vertex stats").insert(n, stats.clone());
    Ok(stats)
}

fn edge_stats(m: usize) -> Result<Arc<Vec<GraphStat>>, VerifyError> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<GraphStat>>>>> = OnceLock::new();
    if m > EDGE_BUDGET_LIMIT {
        return Err(EnumerateError::EdgeCeiling(m).into());
    }
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("edge stats").get(&m) {
        return Ok(hit.clone());
    }
    let stats = Arc::new(stats_of_level(&edge_level(m)));
    cache.lock().expect("edge stats").insert(m, stats.clone());
    Ok(stats)
}

/// Value and attaining set of a brute-force sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForceResult {
    pub value: u64,
    /// graph6 lines of the attaining graphs, canonical and sorted.
    pub extremal: Vec<String>,
}

struct CellSpace {
    /// Stats of the graphs forming the comparison universe for this cell.
    universe: Arc<Vec<GraphStat>>,
    /// Value certified by the auxiliary search (cores for edge cells).
    core_value: Option<u64>,
    description: String,
}

fn cell_space(query: &ExtremalQuery, input: Option<&[Graph]>) -> Result<CellSpace, VerifyError> {
    let freeness = query.variant.freeness();
    if let Some(graphs) = input {
        let mut seen = std::collections::HashSet::new();
        let mut universe = Vec::new();
        for g in graphs {
            let keep = if query.variant.is_edge_variant() {
                let stripped = g.strip_isolated();
                stripped.edge_count() == query.size && stripped.order() <= 12
            } else {
                g.order() == query.size
            };
            if !keep {
                continue;
            }
            let g = if query.variant.is_edge_variant() {
                g.strip_isolated()
            } else {
                g.clone()
            };
            let canonical = canonical_form(&g)?;
            if seen.insert(canonical.code()) {
                universe.push(GraphStat::of(canonical.to_graph()));
            }
        }
        universe.sort_by(|a, b| a.g6.cmp(&b.g6));
        let kept = universe.len();
        return Ok(CellSpace {
            universe: Arc::new(universe),
            core_value: None,
            description: format!("user-supplied graphs ({kept} kept after filtering)"),
        });
    }
    if query.variant.is_edge_variant() {
        let m = query.size;
        let universe = edge_stats(m)?;
        // the maximum is always attained on a min-degree core, possibly
        // with fewer edges; certify the fixed-m maximum against that
        let floor = query.t - 1;
        let mut core_value = 0u64;
        for e in 0..=m {
            for stat in edge_stats(e)?.iter() {
                if (stat.graph.order() == 0 || stat.graph.min_degree() >= floor)
                    && stat.is_free(query.k, freeness)
                {
                    core_value = core_value.max(stat.count(query.t));
                }
            }
        }
        Ok(CellSpace {
            universe,
            core_value: Some(core_value),
            description: format!(
                "graphs with exactly {m} edges, no isolated vertices, order <= 12; \
                 value cross-checked against min-degree >= {floor} cores with <= {m} edges"
            ),
        })
    } else {
        let n = query.size;
        Ok(CellSpace {
            universe: vertex_stats(n)?,
            core_value: None,
            description: format!("all non-isomorphic graphs of order {n}"),
        })
    }
}

fn brute_force_in(
    query: &ExtremalQuery,
    space: &CellSpace,
) -> (BruteForceResult, Vec<String>) {
    let freeness = query.variant.freeness();
    let mut value = 0u64;
    for stat in space.universe.iter() {
        if stat.is_free(query.k, freeness) {
            value = value.max(stat.count(query.t));
        }
    }
    let mut flags = Vec::new();
    if let Some(core_value) = space.core_value {
        if core_value != value {
            flags.push(format!(
                "core search maximum {core_value} disagrees with fixed-size maximum {value}"
            ));
        }
    }
    let mut extremal: Vec<String> = space
        .universe
        .iter()
        .filter(|s| s.is_free(query.k, freeness) && s.count(query.t) == value)
        .map(|s| s.g6.clone())
        .collect();
    extremal.sort();
    (BruteForceResult { value, extremal }, flags)
}

/// Maximum `K_t` count over the free graphs in the cell's search space,
/// together with every attaining graph.
pub fn brute_force_max(query: &ExtremalQuery) -> Result<BruteForceResult, VerifyError> {
    query.validate()?;
    let space = cell_space(query, None)?;
    Ok(brute_force_in(query, &space).0)
}

/// Outcome of one verified cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub query: ExtremalQuery,
    pub formula_value: u64,
    pub brute_value: u64,
    /// graph6 lines of the brute-force maximizers.
    pub extremal_graphs: Vec<String>,
    /// graph6 lines the structural recognizer accepts.
    pub recognizer_accept: Vec<String>,
    #[serde(rename = "match")]
    pub is_match: bool,
    /// Symmetric difference of the two lists.
    pub counterexamples: Vec<String>,
    /// Family members that fail the freeness they should imply, plus any
    /// internal cross-check disagreements.
    pub inconsistency_flags: Vec<String>,
    /// What was searched, including any stated truncation.
    pub search_space: String,
    /// Set when the cell could not be evaluated.
    pub error: Option<String>,
}

fn error_report(query: ExtremalQuery, message: String) -> VerificationReport {
    VerificationReport {
        formula_value: query.formula_value().unwrap_or(0),
        query,
        brute_value: 0,
        extremal_graphs: Vec::new(),
        recognizer_accept: Vec::new(),
        is_match: false,
        counterexamples: Vec::new(),
        inconsistency_flags: Vec::new(),
        search_space: String::new(),
        error: Some(message),
    }
}

/// Verifies one cell against its own enumerated search space.
pub fn verify_cell(query: &ExtremalQuery) -> Result<VerificationReport, VerifyError> {
    verify_cell_in(query, None)
}

/// Verifies one cell, optionally against a user-supplied search space.
pub fn verify_cell_in(
    query: &ExtremalQuery,
    input: Option<&[Graph]>,
) -> Result<VerificationReport, VerifyError> {
    query.validate()?;
    let formula_value = query.formula_value()?;
    let space = cell_space(query, input)?;
    let (brute, mut flags) = brute_force_in(query, &space);
    let freeness = query.variant.freeness();

    let mut recognizer_accept = Vec::new();
    for stat in space.universe.iter() {
        if !stat.is_free(query.k, freeness) {
            continue;
        }
        let accepted = match query.variant {
            QueryVariant::VertexPath => is_extremal_vertex_path(&stat.graph, query.k, query.t)?,
            QueryVariant::VertexCycle => {
                match is_extremal_vertex_cycle(&stat.graph, query.k, query.t) {
                    Ok(v) => v,
                    Err(RecognizeError::Inconsistent { graph6 }) => {
                        flags.push(format!("family member not free: {graph6}"));
                        false
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            QueryVariant::EdgeCycle => is_extremal_edge(&stat.graph, query.k, query.t, PathOrCycle::Cycle)?,
            QueryVariant::EdgePath => is_extremal_edge(&stat.graph, query.k, query.t, PathOrCycle::Path)?,
        };
        if accepted {
            recognizer_accept.push(stat.g6.clone());
        }
    }
    recognizer_accept.sort();

    let counterexamples: Vec<String> = brute
        .extremal
        .iter()
        .filter(|g| !recognizer_accept.contains(g))
        .chain(recognizer_accept.iter().filter(|g| !brute.extremal.contains(g)))
        .cloned()
        .collect();
    let is_match = formula_value == brute.value && counterexamples.is_empty();
    Ok(VerificationReport {
        query: *query,
        formula_value,
        brute_value: brute.value,
        extremal_graphs: brute.extremal,
        recognizer_accept,
        is_match,
        counterexamples,
        inconsistency_flags: flags,
        search_space: space.description,
        error: None,
    })
}

/// A rectangular sweep of cells.
#[derive(Clone, Debug)]
pub struct VerifyRequest {
    pub variant: QueryVariant,
    /// Inclusive bounds.
    pub k_range: (usize, usize),
    pub t_range: (usize, usize),
    pub size_range: (usize, usize),
    /// Worker count; results are identical for any value.
    pub jobs: usize,
    /// Optional replacement search space (e.g. externally generated graphs).
    pub input: Option<Vec<Graph>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub cells: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub errors: usize,
    pub inconsistency_flags: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub reports: Vec<VerificationReport>,
    pub summary: SuiteSummary,
}

impl VerifyRequest {
    fn cells(&self) -> Vec<ExtremalQuery> {
        let mut out = Vec::new();
        for k in self.k_range.0..=self.k_range.1 {
            for t in self.t_range.0..=self.t_range.1 {
                if t < 3 || t >= k {
                    continue;
                }
                for size in self.size_range.0..=self.size_range.1 {
                    if self.variant == QueryVariant::VertexCycle && size == 0 {
                        continue;
                    }
                    out.push(ExtremalQuery::new(self.variant, size, k, t));
                }
            }
        }
        out.sort();
        out
    }
}

/// Evaluates every cell in the request. Reports come back sorted by query,
/// byte-identical for any worker count; per-cell failures are recorded in
/// the report rather than aborting the sweep.
pub fn verify_suite(request: &VerifyRequest) -> Result<SuiteOutcome, VerifyError> {
    let cells = request.cells();
    // warm the level caches sequentially so parallel cells only read
    if request.input.is_none() {
        if request.variant.is_edge_variant() {
            let top = request.size_range.1.min(EDGE_BUDGET_LIMIT);
            for m in 0..=top {
                edge_stats(m)?;
            }
        } else {
            let top = request.size_range.1.min(ENUMERATION_ORDER_LIMIT);
            for n in request.size_range.0.min(top)..=top {
                vertex_stats(n)?;
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(request.jobs.max(1))
        .build()
        .expect("worker pool");
    let input = request.input.as_deref();
    let reports: Vec<VerificationReport> = pool.install(|| {
        cells
            .par_iter()
            .map(|q| match verify_cell_in(q, input) {
                Ok(report) => report,
                Err(e) => error_report(*q, e.to_string()),
            })
            .collect()
    });
    let mut summary = SuiteSummary {
        cells: reports.len(),
        ..SuiteSummary::default()
    };
    for r in &reports {
        if r.error.is_some() {
            summary.errors += 1;
        } else if r.is_match {
            summary.matches += 1;
        } else {
            summary.mismatches += 1;
        }
        summary.inconsistency_flags += r.inconsistency_flags.len();
    }
    Ok(SuiteOutcome { reports, summary })
}
