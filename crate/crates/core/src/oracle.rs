//! Exponential-time reference computations.
//!
//! Chromatic and flow polynomials by plain deletion–contraction on the
//! lowest-id edge, plus brute-force counters for proper colourings and
//! nowhere-zero flows. Everything else in the crate is checked against these.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use crate::polyring::IntPoly;

/// Default size guards; see [`OracleOptions`].
pub const MAX_CHROMATIC_VERTICES: usize = 14;
pub const MAX_FLOW_EDGES: usize = 16;
/// Cap on the number of assignments the brute-force counters enumerate.
pub const MAX_ENUMERATION: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Refuse chromatic inputs with more vertices (`None` disables the guard).
    pub max_vertices: Option<usize>,
    /// Refuse flow inputs with more edges (`None` disables the guard).
    pub max_edges: Option<usize>,
    /// Cache subresults keyed by a normalised edge list.
    pub memoize: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_vertices: Some(MAX_CHROMATIC_VERTICES),
            max_edges: Some(MAX_FLOW_EDGES),
            memoize: false,
        }
    }
}

impl OracleOptions {
    /// No size guards, memoisation on.
    pub fn unbounded() -> Self {
        OracleOptions { max_vertices: None, max_edges: None, memoize: true }
    }
}

pub fn oracle_chromatic(g: &MultiGraph) -> Result<IntPoly> {
    oracle_chromatic_with(g, &OracleOptions::default())
}

pub fn oracle_chromatic_with(g: &MultiGraph, opts: &OracleOptions) -> Result<IntPoly> {
    if let Some(max) = opts.max_vertices {
        if g.vertex_count() > max {
            return Err(Error::TooLarge(format!(
                "{} vertices exceeds the chromatic oracle limit of {max}",
                g.vertex_count()
            )));
        }
    }
    if g.has_loop() {
        return Ok(IntPoly::zero());
    }
    let mut memo = opts.memoize.then(HashMap::new);
    Ok(chromatic_rec(&simplify(g), &mut memo))
}

type Memo = Option<HashMap<MultiGraph, IntPoly>>;

/// Drops repeated edges (the copy with the lowest id survives) and orients
/// each edge low-to-high. Assumes no loops.
fn simplify(g: &MultiGraph) -> MultiGraph {
    let mut seen = std::collections::HashSet::new();
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .filter(|e| seen.insert(*e))
        .collect();
    MultiGraph::new(g.vertex_count(), edges).expect("endpoints unchanged")
}

/// `g` is loopless and simple.
fn chromatic_rec(g: &MultiGraph, memo: &mut Memo) -> IntPoly {
    if g.edge_count() == 0 {
        return IntPoly::monomial(g.vertex_count());
    }
    let comps = g.components();
    if comps.len() > 1 {
        return IntPoly::product(comps.iter().map(|c| chromatic_rec(&g.induced(c), memo)));
    }
    let key = memo.as_ref().map(|_| normalise(g));
    if let (Some(m), Some(k)) = (memo.as_ref(), key.as_ref()) {
        if let Some(p) = m.get(k) {
            return p.clone();
        }
    }

    let (u, v) = g.edges()[0];
    let deleted = g.delete_edge(0).expect("edge 0 exists");
    let contracted = simplify(&g.contract(u, v).expect("endpoints differ"));
    let p = &chromatic_rec(&deleted, memo) - &chromatic_rec(&contracted, memo);

    if let (Some(m), Some(k)) = (memo.as_mut(), key) {
        m.insert(k, p.clone());
    }
    p
}

/// Relabels vertices in order of first appearance and sorts the edge list.
/// Isolated vertices are kept as a count so the key still fixes the
/// chromatic polynomial.
fn normalise(g: &MultiGraph) -> MultiGraph {
    let mut map = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            for x in [u, v] {
                if map[x] == usize::MAX {
                    map[x] = next;
                    next += 1;
                }
            }
            (map[u].min(map[v]), map[u].max(map[v]))
        })
        .collect();
    edges.sort_unstable();
    MultiGraph::new(g.vertex_count(), edges).expect("relabelled within range")
}

pub fn oracle_flow(g: &MultiGraph) -> Result<IntPoly> {
    oracle_flow_with(g, &OracleOptions::default())
}

pub fn oracle_flow_with(g: &MultiGraph, opts: &OracleOptions) -> Result<IntPoly> {
    if let Some(max) = opts.max_edges {
        if g.edge_count() > max {
            return Err(Error::TooLarge(format!(
                "{} edges exceeds the flow oracle limit of {max}",
                g.edge_count()
            )));
        }
    }
    let mut memo = opts.memoize.then(HashMap::new);
    Ok(flow_rec(g, &mut memo))
}

/// `F(G) = F(G/e) - F(G-e)` on the lowest-id non-loop edge, where `G/e`
/// turns the other edges parallel to `e` into loops.
fn flow_rec(g: &MultiGraph, memo: &mut Memo) -> IntPoly {
    let loops = g.loop_count();
    if loops > 0 {
        let rest: Vec<(usize, usize)> = g.edges().iter().copied().filter(|(u, v)| u != v).collect();
        let rest = MultiGraph::new(g.vertex_count(), rest).expect("endpoints unchanged");
        let f = flow_rec(&rest, memo);
        return f.mul(&IntPoly::linear(-1).pow(loops as u32));
    }
    if g.edge_count() == 0 {
        return IntPoly::one();
    }
    if g.has_bridge() {
        return IntPoly::zero();
    }
    let key = memo.as_ref().map(|_| strip_isolated(&normalise(g)));
    if let (Some(m), Some(k)) = (memo.as_ref(), key.as_ref()) {
        if let Some(p) = m.get(k) {
            return p.clone();
        }
    }

    let contracted = g.contract_edge(0).expect("edge 0 exists");
    let deleted = g.delete_edge(0).expect("edge 0 exists");
    let p = &flow_rec(&contracted, memo) - &flow_rec(&deleted, memo);

    if let (Some(m), Some(k)) = (memo.as_mut(), key) {
        m.insert(k, p.clone());
    }
    p
}

/// Isolated vertices do not affect flows; drop them from memo keys.
fn strip_isolated(g: &MultiGraph) -> MultiGraph {
    let used = g.edges().iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    MultiGraph::new(used, g.edges().to_vec()).expect("normalised labels are dense")
}

fn check_enumeration(base: u64, exp: usize) -> Result<()> {
    let mut total: u128 = 1;
    for _ in 0..exp {
        total = total.saturating_mul(base as u128);
        if total > MAX_ENUMERATION {
            return Err(Error::TooLarge(format!(
                "{base}^{exp} assignments exceeds {MAX_ENUMERATION}"
            )));
        }
    }
    Ok(())
}

/// Number of proper colourings with colours `0..t`, by exhaustive search.
pub fn count_colorings(g: &MultiGraph, t: u64) -> Result<BigInt> {
    let n = g.vertex_count();
    check_enumeration(t, n)?;
    if g.has_loop() {
        return Ok(BigInt::from(0));
    }
    // Each vertex only checks neighbours with smaller ids.
    let mut earlier = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        earlier[u.max(v)].push(u.min(v));
    }
    let mut colour = vec![0u64; n];
    let mut count: u64 = 0;
    count_colorings_rec(0, t, &earlier, &mut colour, &mut count);
    Ok(BigInt::from(count))
}

fn count_colorings_rec(v: usize, t: u64, earlier: &[Vec<usize>], colour: &mut [u64], count: &mut u64) {
    if v == colour.len() {
        *count += 1;
        return;
    }
    for c in 0..t {
        if earlier[v].iter().all(|&w| colour[w] != c) {
            colour[v] = c;
            count_colorings_rec(v + 1, t, earlier, colour, count);
        }
    }
}

/// Number of nowhere-zero `Z_t`-flows, orienting every edge from its lower
/// endpoint to its higher one. Loops are free and contribute `t - 1` each.
pub fn count_flows(g: &MultiGraph, t: u64) -> Result<BigInt> {
    if t == 0 {
        return Err(Error::InvalidSize { min: 1, got: 0 });
    }
    check_enumeration(t - 1, g.edge_count())?;
    let loops = g.loop_count();
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|(u, v)| u != v)
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    // A vertex is checked once the last arc touching it has a value.
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); arcs.len()];
    let mut last = vec![None; g.vertex_count()];
    for (i, &(u, v)) in arcs.iter().enumerate() {
        last[u] = Some(i);
        last[v] = Some(i);
    }
    for (v, l) in last.iter().enumerate() {
        if let Some(i) = l {
            closes[*i].push(v);
        }
    }
    let mut balance = vec![0u64; g.vertex_count()];
    let mut count: u64 = 0;
    count_flows_rec(0, t, &arcs, &closes, &mut balance, &mut count);
    let mut total = BigInt::from(count);
    for _ in 0..loops {
        total *= t - 1;
    }
    Ok(total)
}

fn count_flows_rec(
    i: usize,
    t: u64,
    arcs: &[(usize, usize)],
    closes: &[Vec<usize>],
    balance: &mut [u64],
    count: &mut u64,
) {
    if i == arcs.len() {
        *count += 1;
        return;
    }
    let (tail, head) = arcs[i];
    for x in 1..t {
        balance[tail] = (balance[tail] + t - x) % t;
        balance[head] = (balance[head] + x) % t;
        if closes[i].iter().all(|&v| balance[v] == 0) {
            count_flows_rec(i + 1, t, arcs, closes, balance, count);
        }
        balance[tail] = (balance[tail] + x) % t;
        balance[head] = (balance[head] + t - x) % t;
    }
}
