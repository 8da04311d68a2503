//! Command-line front end: closed-form values, constructions, per-graph
//! analysis, recognizers, enumeration, and the cell-by-cell verifier.
//!
//! Graphs travel as graph6 lines: standard input for the streaming
//! subcommands, standard output for everything constructed or enumerated.
//! Exit codes: 0 success, 1 usage or input error, 2 verification mismatch.

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use cliquewise::formulas::{ExtremalQuery, PathOrCycle, QueryVariant};
use cliquewise::graph::Graph;
use cliquewise::recognize::RecognizeError;
use cliquewise::verify::{SuiteOutcome, VerifyRequest};
use cliquewise::{construct, formulas, graph6, paths, recognize, verify};

#[derive(Parser)]
#[command(
    name = "cliquewise",
    version,
    about = "Exact clique-count maxima in path-free and cycle-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a closed-form extremal value.
    Value {
        #[arg(long)]
        variant: ValueVariant,
        /// Forbidden-structure threshold.
        #[arg(long)]
        k: Option<usize>,
        /// Clique order.
        #[arg(long)]
        t: Option<usize>,
        /// Vertex count (vertex and classical variants).
        #[arg(long)]
        n: Option<usize>,
        /// Edge count (edge variants and kk).
        #[arg(long)]
        m: Option<usize>,
    },
    /// Construct an extremal graph and print it as graph6.
    Construct {
        #[arg(long)]
        family: Family,
        /// Number of K_a blocks (cliques family).
        #[arg(long)]
        q: Option<usize>,
        /// Clique order of the repeated blocks (cliques family).
        #[arg(long)]
        a: Option<usize>,
        /// Residual clique order (cliques family).
        #[arg(long)]
        r: Option<usize>,
        /// Edge count (colex family).
        #[arg(long)]
        m: Option<usize>,
        /// Independent-set size (split family).
        #[arg(long)]
        b: Option<usize>,
        /// Vertex count (exceptional family).
        #[arg(long)]
        n: Option<usize>,
        /// Forbidden-structure threshold (exceptional family).
        #[arg(long)]
        k: Option<usize>,
        /// Number of clique blocks kept aside (exceptional family).
        #[arg(long)]
        t_blocks: Option<usize>,
        /// path or cycle (exceptional family).
        #[arg(long)]
        variant: Option<ClassicalKind>,
        /// JSON gluing recipe (glue-file family).
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Read graph6 lines from stdin and print the K_t count per line.
    Count {
        #[arg(long)]
        t: usize,
    },
    /// Read graph6 lines and print longest path, circumference, pk_free, ck_free.
    Check {
        #[arg(long)]
        k: usize,
    },
    /// Read graph6 lines and print accept/reject with a witness.
    Recognize {
        #[arg(long)]
        variant: CellVariant,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// Stream one canonical graph6 line per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only graphs with exactly this many edges.
        #[arg(long)]
        edges: Option<usize>,
    },
    /// Verify formula, brute force, and recognizer agreement over a range
    /// of cells. Exits 2 when any cell mismatches.
    Verify {
        #[arg(long)]
        variant: CellVariant,
        /// Inclusive range, e.g. 4..5
        #[arg(long, value_parser = parse_range)]
        k_range: (usize, usize),
        #[arg(long, value_parser = parse_range)]
        t_range: (usize, usize),
        /// n for vertex variants, m for edge variants.
        #[arg(long, value_parser = parse_range)]
        size_range: (usize, usize),
        /// Worker count; defaults to CLIQUEWISE_JOBS or 1.
        #[arg(long)]
        jobs: Option<usize>,
        /// Verify against graphs from this graph6 file instead of the
        /// internal enumeration.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ValueVariant {
    VertexPath,
    VertexCycle,
    EdgeCycle,
    EdgePath,
    ClassicalPath,
    ClassicalCycle,
    LuoPath,
    LuoCycle,
    Kk,
}

#[derive(Clone, Copy, ValueEnum)]
enum CellVariant {
    VertexPath,
    VertexCycle,
    EdgeCycle,
    EdgePath,
}

impl From<CellVariant> for QueryVariant {
    fn from(v: CellVariant) -> QueryVariant {
        match v {
            CellVariant::VertexPath => QueryVariant::VertexPath,
            CellVariant::VertexCycle => QueryVariant::VertexCycle,
            CellVariant::EdgeCycle => QueryVariant::EdgeCycle,
            CellVariant::EdgePath => QueryVariant::EdgePath,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassicalKind {
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cliques,
    Colex,
    Split,
    GlueFile,
    Exceptional,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let lo: usize = a.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let hi: usize = b.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

/// JSON shape of a gluing recipe file.
#[derive(Deserialize)]
struct RecipeFile {
    /// graph6 line per block.
    blocks: Vec<String>,
    /// One entry per block after the first; null starts a new component.
    attachments: Vec<Option<AttachmentSpec>>,
}

#[derive(Deserialize)]
struct AttachmentSpec {
    block_vertex: usize,
    placed_vertex: usize,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, UsageError> {
    value.ok_or_else(|| UsageError(format!("missing required flag {flag} for this variant")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are successful exits; anything else is usage
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Value { variant, k, t, n, m } => {
            println!("{}", value_of(variant, k, t, n, m)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct {
            family,
            q,
            a,
            r,
            m,
            b,
            n,
            k,
            t_blocks,
            variant,
            file,
        } => {
            let g = match family {
                Family::Cliques => construct::union_cliques(
                    require(q, "--q")?,
                    require(a, "--a")?,
                    r.unwrap_or(0),
                )?,
                Family::Colex => construct::colex_graph(require(m, "--m")?)?,
                Family::Split => construct::split_graph(require(a, "--a")?, require(b, "--b")?)?,
                Family::GlueFile => glue_from_file(&require(file, "--file")?)?,
                Family::Exceptional => {
                    let kind = match require(variant, "--variant")? {
                        ClassicalKind::Path => construct::ClassicalVariant::Path,
                        ClassicalKind::Cycle => construct::ClassicalVariant::Cycle,
                    };
                    construct::exceptional_classical(
                        kind,
                        require(n, "--n")?,
                        require(k, "--k")?,
                        t_blocks.unwrap_or(0),
                    )?
                }
            };
            println!("{}", graph6::encode(&g)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { t } => {
            if t < 1 {
                return Err(UsageError("--t must be at least 1".into()));
            }
            for_each_stdin_graph(|g| Ok(cliquewise::count_cliques(g, t).to_string()))
        }
        Command::Check { k } => for_each_stdin_graph(|g| {
            let profile = paths::freeness_profile(g, k)?;
            Ok(format!(
                "{}\t{}\t{}\t{}",
                profile.longest_path_order, profile.circumference, profile.pk_free, profile.ck_free
            ))
        }),
        Command::Recognize { variant, k, t } => {
            if t < 3 || t >= k {
                return Err(UsageError("need 3 <= t < k".into()));
            }
            let variant = QueryVariant::from(variant);
            for_each_stdin_graph(|g| recognize_line(g, variant, k, t))
        }
        Command::Enumerate { n, edges } => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for g in cliquewise::enumerate_graphs(n, edges)? {
                if !emit(&mut out, &graph6::encode(&g)?)? {
                    break;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            variant,
            k_range,
            t_range,
            size_range,
            jobs,
            input,
            format,
        } => {
            let jobs = jobs
                .or_else(|| {
                    std::env::var("CLIQUEWISE_JOBS")
                        .ok()
                        .and_then(|v| v.parse().ok())
                })
                .unwrap_or(1);
            let input = match input {
                None => None,
                Some(path) => Some(read_graph_file(&path)?),
            };
            let request = VerifyRequest {
                variant: variant.into(),
                k_range,
                t_range,
                size_range,
                jobs,
                input,
            };
            let outcome = verify::verify_suite(&request)?;
            match format {
                Format::Table => print_table(&outcome),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome).map_err(|e| UsageError(e.to_string()))?
                ),
            }
            if outcome.summary.errors > 0 {
                Ok(ExitCode::from(1))
            } else if outcome.summary.mismatches > 0 || outcome.summary.inconsistency_flags > 0 {
                Ok(ExitCode::from(2))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn value_of(
    variant: ValueVariant,
    k: Option<usize>,
    t: Option<usize>,
    n: Option<usize>,
    m: Option<usize>,
) -> Result<String, UsageError> {
    Ok(match variant {
        ValueVariant::VertexPath | ValueVariant::VertexCycle => {
            let q = ExtremalQuery::new(
                if matches!(variant, ValueVariant::VertexPath) {
                    QueryVariant::VertexPath
                } else {
                    QueryVariant::VertexCycle
                },
                require(n, "--n")?,
                require(k, "--k")?,
                require(t, "--t")?,
            );
            q.validate()?;
            q.formula_value()?.to_string()
        }
        ValueVariant::EdgeCycle | ValueVariant::EdgePath => formulas::max_kt_edge(
            require(m, "--m")?,
            require(k, "--k")?,
            require(t, "--t")?,
        )?
        .to_string(),
        ValueVariant::ClassicalPath => {
            formulas::ex_path_edges(require(n, "--n")?, require(k, "--k")?).to_string()
        }
        ValueVariant::ClassicalCycle => {
            formulas::ex_cycle_edges(require(n, "--n")?, require(k, "--k")?).to_string()
        }
        ValueVariant::LuoPath => formulas::luo_bound(
            PathOrCycle::Path,
            require(n, "--n")?,
            require(k, "--k")?,
            require(t, "--t")?,
        )?
        .to_string(),
        ValueVariant::LuoCycle => formulas::luo_bound(
            PathOrCycle::Cycle,
            require(n, "--n")?,
            require(k, "--k")?,
            require(t, "--t")?,
        )?
        .to_string(),
        ValueVariant::Kk => {
            formulas::kk_value(require(m, "--m")?, require(t, "--t")?).to_string()
        }
    })
}

fn glue_from_file(path: &PathBuf) -> Result<Graph, UsageError> {
    let text = std::fs::read_to_string(path)?;
    let spec: RecipeFile = serde_json::from_str(&text)?;
    let blocks: Result<Vec<Graph>, _> = spec.blocks.iter().map(|l| graph6::decode(l)).collect();
    let attachments = spec
        .attachments
        .into_iter()
        .map(|a| match a {
            None => construct::Attachment::NewComponent,
            Some(AttachmentSpec {
                block_vertex,
                placed_vertex,
            }) => construct::Attachment::Identify {
                block_vertex,
                placed_vertex,
            },
        })
        .collect();
    Ok(construct::glue(&construct::GlueRecipe {
        blocks: blocks?,
        attachments,
    })?)
}

fn read_graph_file(path: &PathBuf) -> Result<Vec<Graph>, UsageError> {
    let text = std::fs::read_to_string(path)?;
    let mut graphs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(
            graph6::decode(line)
                .map_err(|e| UsageError(format!("{}:{}: {e}", path.display(), lineno + 1)))?,
        );
    }
    Ok(graphs)
}

/// Writes one line; a closed downstream pipe stops the stream cleanly.
/// Returns whether the consumer is still listening.
fn emit(out: &mut impl Write, line: &str) -> Result<bool, UsageError> {
    match writeln!(out, "{line}") {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(false),
        Err(e) => Err(UsageError(e.to_string())),
    }
}

/// Runs `f` per decoded stdin line and prints its result; malformed lines
/// are reported and the exit code becomes 1, but processing continues.
fn for_each_stdin_graph(
    mut f: impl FnMut(&Graph) -> Result<String, UsageError>,
) -> Result<ExitCode, UsageError> {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut had_error = false;
    for (lineno, line) in stdin.lock().lines().enumerate() {
        let line = line.map_err(|e| UsageError(e.to_string()))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match graph6::decode(line).map_err(UsageError::from).and_then(|g| f(&g)) {
            Ok(result) => {
                if !emit(&mut out, &result)? {
                    break;
                }
            }
            Err(UsageError(msg)) => {
                eprintln!("line {}: {msg}", lineno + 1);
                had_error = true;
            }
        }
    }
    Ok(if had_error {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn recognize_line(g: &Graph, variant: QueryVariant, k: usize, t: usize) -> Result<String, UsageError> {
    match variant {
        QueryVariant::VertexPath => {
            let (q, r) = formulas::path_decompose(g.order(), k);
            Ok(if recognize::is_extremal_vertex_path(g, k, t)? {
                format!("accept q={q} r={r}")
            } else {
                "reject".to_string()
            })
        }
        QueryVariant::VertexCycle => {
            match recognize::is_extremal_vertex_cycle(g, k, t) {
                Ok(true) => {
                    let (q, r) = formulas::cycle_decompose(g.order(), k);
                    Ok(format!("accept q={q} r={r}"))
                }
                Ok(false) => Ok("reject".to_string()),
                Err(RecognizeError::Inconsistent { graph6 }) => {
                    Ok(format!("flagged family-member-not-free {graph6}"))
                }
                Err(e) => Err(e.into()),
            }
        }
        QueryVariant::EdgeCycle | QueryVariant::EdgePath => {
            let flavour = variant.freeness();
            let accepted = recognize::is_extremal_edge(g, k, t, flavour)?;
            if accepted {
                let stripped = g.strip_isolated();
                let witness = recognize::decompose_forest_of_cliques(&stripped, k)?
                    .expect("decomposition always exists");
                Ok(format!(
                    "accept q={} leftover={}",
                    witness.q,
                    graph6::encode(&witness.leftover)?
                ))
            } else {
                Ok("reject".to_string())
            }
        }
    }
}

fn print_table(outcome: &SuiteOutcome) {
    println!(
        "{:<12} {:>3} {:>3} {:>5} {:>8} {:>8} {:>9} {:>9} {:>6}",
        "variant", "k", "t", "size", "formula", "brute", "extremal", "accepted", "match"
    );
    for r in &outcome.reports {
        if let Some(err) = &r.error {
            println!(
                "{:<12} {:>3} {:>3} {:>5} error: {err}",
                r.query.variant.to_string(),
                r.query.k,
                r.query.t,
                r.query.size
            );
            continue;
        }
        println!(
            "{:<12} {:>3} {:>3} {:>5} {:>8} {:>8} {:>9} {:>9} {:>6}",
            r.query.variant.to_string(),
            r.query.k,
            r.query.t,
            r.query.size,
            r.formula_value,
            r.brute_value,
            r.extremal_graphs.len(),
            r.recognizer_accept.len(),
            if r.is_match { "ok" } else { "FAIL" }
        );
        for flag in &r.inconsistency_flags {
            println!("  flag: {flag}");
        }
        for c in &r.counterexamples {
            println!("  counterexample: {c}");
        }
    }
    let s = &outcome.summary;
    println!(
        "cells: {}  matches: {}  mismatches: {}  errors: {}  flags: {}",
        s.cells, s.matches, s.mismatches, s.errors, s.inconsistency_flags
    );
}
