//! Closed-form extremal values and the inequality utilities behind them.
//!
//! Conventions: `C(n, k)` is zero whenever `k > n`, queries carry clique
//! order `3 <= t < k`, and the density bounds are exact rationals so they
//! compare exactly against integer counts.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("sequence is not sorted descending")]
    UnsortedInput,
    #[error("sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

/// Binomial coefficient, zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits in u64 for n <= 64")
}

/// Non-negative rational in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Rational {
        assert!(den > 0, "denominator must be positive");
        let g = gcd(num, den).max(1);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialEq<u64> for Rational {
    fn eq(&self, other: &u64) -> bool {
        self.den == 1 && self.num == *other
    }
}

impl PartialOrd<u64> for Rational {
    fn partial_cmp(&self, other: &u64) -> Option<std::cmp::Ordering> {
        Some((self.num as u128).cmp(&(*other as u128 * self.den as u128)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Path-free or cycle-free flavour of a bound or decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathOrCycle {
    Path,
    Cycle,
}

/// Decomposition `n = q(k-1) + r` with `0 <= r <= k-2`.
pub fn path_decompose(n: usize, k: usize) -> (usize, usize) {
    assert!(k >= 2, "path threshold must be at least 2");
    (n / (k - 1), n % (k - 1))
}

/// Decomposition `n = q(k-2) + r` with `1 <= r <= k-2` (requires `n >= 1`).
pub fn cycle_decompose(n: usize, k: usize) -> (usize, usize) {
    assert!(k >= 3, "cycle threshold must be at least 3");
    assert!(n >= 1, "cycle decomposition needs at least one vertex");
    let q = (n - 1) / (k - 2);
    (q, n - q * (k - 2))
}

/// Maximum edge count of an `n`-vertex graph with no path on `k` vertices:
/// `q C(k-1, 2) + C(r, 2)`.
pub fn ex_path_edges(n: usize, k: usize) -> u64 {
    let (q, r) = path_decompose(n, k);
    q as u64 * binomial(k - 1, 2) + binomial(r, 2)
}

/// Maximum edge count of an `n`-vertex graph with no cycle of length at
/// least `k`: `q C(k-1, 2) + C(r, 2)` under the cycle decomposition.
pub fn ex_cycle_edges(n: usize, k: usize) -> u64 {
    let (q, r) = cycle_decompose(n, k);
    q as u64 * binomial(k - 1, 2) + binomial(r, 2)
}

/// Linear-in-`n` upper bound on the `K_t` count of a path-free or
/// cycle-free graph, as an exact rational (never floored):
/// `n/(k-1) * C(k-1, t)` resp. `(n-1)/(k-2) * C(k-1, t)`.
pub fn luo_bound(variant: PathOrCycle, n: usize, k: usize, t: usize) -> Result<Rational, FormulaError> {
    if !(3..k).contains(&t) {
        return Err(FormulaError::Precondition("need 3 <= t < k"));
    }
    let c = binomial(k - 1, t);
    Ok(match variant {
        PathOrCycle::Path => Rational::new(n as u64 * c, (k - 1) as u64),
        PathOrCycle::Cycle => {
            if n == 0 {
                return Err(FormulaError::Precondition("cycle variant needs n >= 1"));
            }
            Rational::new((n - 1) as u64 * c, (k - 2) as u64)
        }
    })
}

/// Exact maximum `K_t` count over `n`-vertex path-free (`P_k`) or
/// cycle-free (`C_{>=k}`) graphs: `q C(k-1, t) + C(r, t)` under the
/// variant's decomposition of `n`.
pub fn max_kt_vertex(
    variant: PathOrCycle,
    n: usize,
    k: usize,
    t: usize,
) -> Result<u64, FormulaError> {
    if !(3..k).contains(&t) {
        return Err(FormulaError::Precondition("need 3 <= t < k"));
    }
    let (q, r) = match variant {
        PathOrCycle::Path => path_decompose(n, k),
        PathOrCycle::Cycle => {
            if n == 0 {
                return Err(FormulaError::Precondition("cycle variant needs n >= 1"));
            }
            cycle_decompose(n, k)
        }
    };
    Ok(q as u64 * binomial(k - 1, t) + binomial(r, t))
}

/// Exact maximum `K_t` count over cycle-free (equivalently path-free)
/// graphs with `m` edges: `q C(k-1, t) + kk_value(b, t)` where
/// `m = q C(k-1, 2) + b`, `0 <= b < C(k-1, 2)`.
pub fn max_kt_edge(m: usize, k: usize, t: usize) -> Result<u64, FormulaError> {
    if !(3..k).contains(&t) {
        return Err(FormulaError::Precondition("need 3 <= t < k"));
    }
    let block = binomial(k - 1, 2) as usize;
    let q = m / block;
    let b = m % block;
    Ok(q as u64 * binomial(k - 1, t) + kk_value(b, t))
}

/// Kruskal–Katona maximum: the most `K_t`'s any graph with `m` edges can
/// have, attained by the colex graph: `C(r, t) + C(s, t-1)` with
/// `m = C(r, 2) + s`, `0 <= s < r`.
pub fn kk_value(m: usize, t: usize) -> u64 {
    assert!(t >= 3, "clique order must be at least 3");
    let (r, s) = colex_split(m);
    binomial(r, t) + binomial(s, t - 1)
}

/// The unique `(r, s)` with `m = C(r, 2) + s` and `0 <= s < r`
/// (`r = s = 0` only for `m = 0`).
pub(crate) fn colex_split(m: usize) -> (usize, usize) {
    if m == 0 {
        return (0, 0);
    }
    let mut r = 1;
    while binomial(r + 1, 2) as usize <= m {
        r += 1;
    }
    (r, m - binomial(r, 2) as usize)
}

/// `f_t(n, k, a) = C(k-a, t) + (n-k+a) C(a, t-1)`, the 2-connected
/// cycle-free ceiling evaluated at clique parameter `a`.
pub fn f_t_bound(n: usize, k: usize, a: usize, t: usize) -> Result<u64, FormulaError> {
    if n < k || k < 5 || a < 2 {
        return Err(FormulaError::Precondition("need n >= k >= 5 and a >= 2"));
    }
    Ok(binomial(k - a, t) + (n - k + a) as u64 * binomial(a, t - 1))
}

/// Expands each degree `d` into `a_d` copies of `delta` plus one residue
/// `b_d` (`d = a_d delta + b_d`, `0 <= b_d < delta`) and returns the
/// concatenation sorted descending.
pub fn split_sequence(delta: u64, degrees: &[u64]) -> Vec<u64> {
    assert!(delta >= 1, "split width must be positive");
    let mut out = Vec::new();
    for &d in degrees {
        let copies = d / delta;
        for _ in 0..copies {
            out.push(delta);
        }
        out.push(d % delta);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Whether `x` majorizes `y`: both sorted descending, every prefix sum of
/// `x` dominates, and the totals agree. Unsorted input is an error, not a
/// silent sort.
pub fn majorizes(x: &[u64], y: &[u64]) -> Result<bool, FormulaError> {
    if x.len() != y.len() {
        return Err(FormulaError::LengthMismatch(x.len(), y.len()));
    }
    let sorted = |s: &[u64]| s.windows(2).all(|w| w[0] >= w[1]);
    if !sorted(x) || !sorted(y) {
        return Err(FormulaError::UnsortedInput);
    }
    let mut sx = 0u64;
    let mut sy = 0u64;
    for (a, b) in x.iter().zip(y) {
        sx += a;
        sy += b;
        if sx < sy {
            return Ok(false);
        }
    }
    Ok(sx == sy)
}

/// Outcome of the binomial convexity comparison
/// `C(x, t) + C(w, t) >= C(y, t) + C(z, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConvexityOutcome {
    pub holds: bool,
    pub strict: bool,
}

/// Checks `C(x,t) + C(w,t) >= C(y,t) + C(z,t)` under the preconditions
/// `x + w = y + z`, `x >= y`, `x >= z`, `x >= t`, `t >= 2`. The inequality
/// is strict whenever `x > y` and `x > z`.
pub fn lemma_convexity(
    x: usize,
    w: usize,
    y: usize,
    z: usize,
    t: usize,
) -> Result<ConvexityOutcome, FormulaError> {
    if t < 2 {
        return Err(FormulaError::Precondition("need t >= 2"));
    }
    if x + w != y + z {
        return Err(FormulaError::Precondition("need x + w = y + z"));
    }
    if x < y || x < z || x < t {
        return Err(FormulaError::Precondition("need x >= y, x >= z, x >= t"));
    }
    let lhs = binomial(x, t) + binomial(w, t);
    let rhs = binomial(y, t) + binomial(z, t);
    Ok(ConvexityOutcome {
        holds: lhs >= rhs,
        strict: lhs > rhs,
    })
}

/// Team-counting inequality
/// `C(x, t) + y C(x, t-1) + x C(y, t-1) <= C(x+y, t)`.
///
/// The left side counts three disjoint ways to form a `t`-member team from
/// groups of size `x` and `y`; disjointness needs `t >= 3` (at `t = 2`,
/// "one from each group" is counted twice and the inequality fails).
pub fn lemma_team_identity(x: usize, y: usize, t: usize) -> bool {
    assert!(t >= 3, "the team decomposition needs t >= 3");
    binomial(x, t) + y as u64 * binomial(x, t - 1) + x as u64 * binomial(y, t - 1)
        <= binomial(x + y, t)
}

/// Per-vertex clique ceiling by degree: `a C(k-2, t-1) + C(b, t-1)` with
/// `d = a(k-2) + b`, `0 <= b < k-2`.
pub fn vertex_clique_bound(d: usize, k: usize, t: usize) -> Result<u64, FormulaError> {
    if k < 4 {
        return Err(FormulaError::Precondition("need k >= 4"));
    }
    if !(3..k).contains(&t) {
        return Err(FormulaError::Precondition("need 3 <= t < k"));
    }
    let a = d / (k - 2);
    let b = d % (k - 2);
    Ok(a as u64 * binomial(k - 2, t - 1) + binomial(b, t - 1))
}

/// Which extremal maximum a verification cell targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QueryVariant {
    /// Max `K_t` count over `P_k`-free graphs on `n` vertices.
    VertexPath,
    /// Max `K_t` count over `C_{>=k}`-free graphs on `n` vertices.
    VertexCycle,
    /// Max `K_t` count over `C_{>=k}`-free graphs with `m` edges.
    EdgeCycle,
    /// Max `K_t` count over `P_k`-free graphs with `m` edges.
    EdgePath,
}

impl QueryVariant {
    pub fn is_edge_variant(&self) -> bool {
        matches!(self, QueryVariant::EdgeCycle | QueryVariant::EdgePath)
    }

    pub fn freeness(&self) -> PathOrCycle {
        match self {
            QueryVariant::VertexPath | QueryVariant::EdgePath => PathOrCycle::Path,
            QueryVariant::VertexCycle | QueryVariant::EdgeCycle => PathOrCycle::Cycle,
        }
    }
}

impl fmt::Display for QueryVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QueryVariant::VertexPath => "vertex-path",
            QueryVariant::VertexCycle => "vertex-cycle",
            QueryVariant::EdgeCycle => "edge-cycle",
            QueryVariant::EdgePath => "edge-path",
        };
        f.write_str(s)
    }
}

/// One extremal cell: a variant plus its `(size, k, t)` parameters, where
/// `size` is `n` for vertex variants and `m` for edge variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExtremalQuery {
    pub variant: QueryVariant,
    pub size: usize,
    pub k: usize,
    pub t: usize,
}

impl ExtremalQuery {
    pub fn new(variant: QueryVariant, size: usize, k: usize, t: usize) -> ExtremalQuery {
        ExtremalQuery { variant, size, k, t }
    }

    pub fn validate(&self) -> Result<(), FormulaError> {
        if !(3..self.k).contains(&self.t) {
            return Err(FormulaError::Precondition("need 3 <= t < k"));
        }
        if self.variant == QueryVariant::VertexCycle && self.size == 0 {
            return Err(FormulaError::Precondition("vertex-cycle needs n >= 1"));
        }
        Ok(())
    }

    /// The closed-form maximum for this cell.
    pub fn formula_value(&self) -> Result<u64, FormulaError> {
        match self.variant {
            QueryVariant::VertexPath => max_kt_vertex(PathOrCycle::Path, self.size, self.k, self.t),
            QueryVariant::VertexCycle => {
                max_kt_vertex(PathOrCycle::Cycle, self.size, self.k, self.t)
            }
            QueryVariant::EdgeCycle | QueryVariant::EdgePath => {
                max_kt_edge(self.size, self.k, self.t)
            }
        }
    }
}
