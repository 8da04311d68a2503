//! Exact extremal clique counting for graphs with bounded paths or cycles.
//!
//! The library has three layers:
//!
//! * **Graph kernel** — bitset graphs up to 64 vertices, block
//!   decomposition, canonical labelling, the graph6 codec, exact clique
//!   counting, and exact longest-path / longest-cycle search.
//! * **Extremal machinery** — closed-form maxima with the inequality
//!   lemmas behind them, constructions of every extremal family (clique
//!   unions, colex graphs, split graphs, single-vertex gluings), and
//!   recognizers deciding membership in those families.
//! * **Verification** — non-isomorphic graph enumeration and a brute-force
//!   oracle that replays every claim cell by cell at desk scale, reporting
//!   formula value, brute-force value, and extremal-set agreement.

pub mod blocks;
pub mod canon;
pub mod cliques;
pub mod construct;
pub mod enumerate;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod paths;
pub mod recognize;
pub mod verify;

pub use blocks::{blocks, BlockDecomposition};
pub use canon::{canonical_form, canonical_graph, CanonicalForm, CANONICAL_ORDER_LIMIT};
pub use cliques::{count_cliques, count_cliques_at};
pub use construct::{
    colex_decompose, colex_graph, enumerate_family, exceptional_classical, glue, split_graph,
    union_cliques, Attachment, ClassicalVariant, ColexDecomposition, FamilyMode, GlueRecipe,
};
pub use enumerate::{enumerate_edge_cores, enumerate_edge_universe, enumerate_graphs};
pub use formulas::{
    binomial, ex_cycle_edges, ex_path_edges, f_t_bound, kk_value, lemma_convexity,
    lemma_team_identity, luo_bound, majorizes, max_kt_edge, max_kt_vertex, split_sequence,
    vertex_clique_bound, ExtremalQuery, PathOrCycle, QueryVariant, Rational,
};
pub use graph::{Graph, GraphError, MAX_VERTICES};
pub use paths::{circumference, freeness_profile, longest_path_order, FreenessProfile};
pub use recognize::{
    decompose_forest_of_cliques, in_family_c, in_family_l, is_extremal_edge,
    is_extremal_vertex_cycle, is_extremal_vertex_path, ForestOfCliquesWitness,
};
pub use verify::{
    brute_force_max, verify_cell, verify_suite, BruteForceResult, SuiteOutcome, SuiteSummary,
    VerificationReport, VerifyRequest,
};
