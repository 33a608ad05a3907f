//! Brute-force oracles, independent of the formula-based fast paths.
//!
//! All functions take explicit size limits so callers can opt into larger
//! (slow) runs; `None` results mean "no such coloring exists" (the value
//! is infinite).

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{self, Coloring, SearchResult};
use crate::graph::{edge, Edge, PlaneGraph};
use crate::transversal::TransversalCertificate;
use crate::uf::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    GuardExceeded(String),
    BudgetExhausted,
    Other(String),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::GuardExceeded(s) => write!(f, "oracle size guard exceeded: {s}"),
            OracleError::BudgetExhausted => write!(f, "oracle search budget exhausted"),
            OracleError::Other(s) => write!(f, "{s}"),
        }
    }
}

/// Size guards. Defaults keep every oracle under a few seconds.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_n: usize,
    pub max_edges: usize,
    pub node_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 9, max_edges: 21, node_budget: 50_000_000 }
    }
}

impl Limits {
    pub fn with_max_n(max_n: usize) -> Self {
        Limits { max_n, max_edges: 3 * max_n.max(8), ..Limits::default() }
    }

    fn check(&self, g: &PlaneGraph) -> Result<(), OracleError> {
        if g.n() > self.max_n {
            return Err(OracleError::GuardExceeded(format!(
                "n = {} > {}",
                g.n(),
                self.max_n
            )));
        }
        if g.edge_count() > self.max_edges {
            return Err(OracleError::GuardExceeded(format!(
                "|E| = {} > {}",
                g.edge_count(),
                self.max_edges
            )));
        }
        Ok(())
    }
}

/// m(G, phi) by direct search: for every used color pair, the fewest edges
/// of that pair whose removal leaves the bichromatic subgraph acyclic,
/// found by increasing-size subset enumeration. No component-count
/// formula involved.
pub fn brute_m(g: &PlaneGraph, phi: &Coloring, lim: &Limits) -> Result<usize, OracleError> {
    lim.check(g)?;
    coloring::require_proper(g, phi).map_err(|e| OracleError::Other(format!("{e}")))?;
    let mut total = 0;
    for (i, j) in phi.used_pairs() {
        let pair: Vec<Edge> = coloring::pair_edges(g, phi, i, j);
        total += min_removals_to_forest(g.n(), &pair, lim)?;
    }
    Ok(total)
}

fn min_removals_to_forest(n: usize, pool: &[Edge], lim: &Limits) -> Result<usize, OracleError> {
    if pool.len() > lim.max_edges {
        return Err(OracleError::GuardExceeded(format!(
            "pair subgraph has {} edges",
            pool.len()
        )));
    }
    for s in 0..=pool.len() {
        let mut chosen: Vec<usize> = Vec::new();
        if pick_forest(n, pool, s, 0, &mut chosen) {
            return Ok(s);
        }
    }
    unreachable!("removing all edges always yields a forest")
}

fn pick_forest(n: usize, pool: &[Edge], s: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == s {
        let mut uf = UnionFind::new(n);
        for (idx, &(u, v)) in pool.iter().enumerate() {
            if chosen.contains(&idx) {
                continue;
            }
            if !uf.union(u, v) {
                return false;
            }
        }
        return true;
    }
    for i in start..pool.len() {
        if pool.len() - i < s - chosen.len() {
            break;
        }
        chosen.push(i);
        if pick_forest(n, pool, s, i + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// m_k(G): minimum of brute_m over all proper colorings with palette
/// 1..=k, enumerated canonically. `None` when G has no proper k-coloring.
pub fn brute_m_k(g: &PlaneGraph, k: u32, lim: &Limits) -> Result<Option<usize>, OracleError> {
    lim.check(g)?;
    let mut best: Option<usize> = None;
    let mut guard_hit: Option<OracleError> = None;
    let complete = coloring::enumerate_colorings(g, k, false, lim.node_budget, true, &mut |phi| {
        match brute_m(g, phi, lim) {
            Ok(m) => {
                if best.is_none_or(|b| m < b) {
                    best = Some(m);
                }
            }
            Err(e) => guard_hit = Some(e),
        }
        best != Some(0) // stop early at the floor
    });
    if let Some(e) = guard_hit {
        return Err(e);
    }
    if !complete && best != Some(0) {
        return Err(OracleError::BudgetExhausted);
    }
    Ok(best)
}

/// m'_k(G): fewest edges whose deletion leaves an acyclically k-colorable
/// graph, by iterative deepening over deletion sets.
pub fn brute_m_prime(g: &PlaneGraph, k: u32, lim: &Limits) -> Result<usize, OracleError> {
    brute_deletion(g, k, false, lim)
}

/// m''_k(G): like m'_k but deleted edges are subdivided instead.
pub fn brute_m_dprime(g: &PlaneGraph, k: u32, lim: &Limits) -> Result<usize, OracleError> {
    brute_deletion(g, k, true, lim)
}

fn brute_deletion(
    g: &PlaneGraph,
    k: u32,
    subdivide: bool,
    lim: &Limits,
) -> Result<usize, OracleError> {
    lim.check(g)?;
    let all = g.edges();
    // memoized acyclic-colorability checks keyed by the surviving edge set
    let mut memo: BTreeMap<Vec<Edge>, bool> = BTreeMap::new();
    for s in 0..=all.len() {
        let mut chosen: Vec<usize> = Vec::new();
        let mut found = Ok(false);
        pick_deletion(g, k, subdivide, &all, s, 0, &mut chosen, lim, &mut memo, &mut found);
        if found? {
            return Ok(s);
        }
    }
    unreachable!("the edgeless graph is acyclically colorable for k >= 1")
}

#[allow(clippy::too_many_arguments)]
fn pick_deletion(
    g: &PlaneGraph,
    k: u32,
    subdivide: bool,
    all: &[Edge],
    s: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    lim: &Limits,
    memo: &mut BTreeMap<Vec<Edge>, bool>,
    found: &mut Result<bool, OracleError>,
) {
    if matches!(found, Ok(true) | Err(_)) {
        return;
    }
    if chosen.len() == s {
        let res = colorable_after(g, k, subdivide, all, chosen, lim, memo);
        *found = res;
        return;
    }
    for i in start..all.len() {
        if all.len() - i < s - chosen.len() {
            break;
        }
        chosen.push(i);
        pick_deletion(g, k, subdivide, all, s, i + 1, chosen, lim, memo, found);
        chosen.pop();
        if matches!(found, Ok(true) | Err(_)) {
            return;
        }
    }
}

fn colorable_after(
    g: &PlaneGraph,
    k: u32,
    subdivide: bool,
    all: &[Edge],
    chosen: &[usize],
    lim: &Limits,
    memo: &mut BTreeMap<Vec<Edge>, bool>,
) -> Result<bool, OracleError> {
    let kept: Vec<Edge> = all
        .iter()
        .enumerate()
        .filter(|(i, _)| !chosen.contains(i))
        .map(|(_, &e)| e)
        .collect();
    let mut key = kept.clone();
    if subdivide {
        // mark the variant so plain-deletion entries are not reused
        key.push((usize::MAX, usize::MAX - chosen.len()));
    }
    if let Some(&ok) = memo.get(&key) {
        return Ok(ok);
    }
    let h = if subdivide {
        let mut edges = kept;
        let mut next = g.n();
        for &i in chosen {
            let (u, v) = all[i];
            edges.push(edge(u, next));
            edges.push(edge(next, v));
            next += 1;
        }
        PlaneGraph::from_edges(next, &edges).map_err(|e| OracleError::Other(format!("{e}")))?
    } else {
        PlaneGraph::from_edges(g.n(), &kept).map_err(|e| OracleError::Other(format!("{e}")))?
    };
    let ok = match coloring::search_coloring(&h, k, true, lim.node_budget) {
        SearchResult::Found(_) => true,
        SearchResult::NoColoring => false,
        SearchResult::BudgetExhausted => return Err(OracleError::BudgetExhausted),
    };
    memo.insert(key, ok);
    Ok(ok)
}

/// Exhaustive search for a U-acyclic transversal of size exactly
/// m(G, phi): the removed edges kill every 2-colored cycle, the removed
/// set induces a forest, and no two U vertices are joined by a removed
/// path. Returns one witness set or `None`.
pub fn brute_optimal_u_acyclic(
    g: &PlaneGraph,
    phi: &Coloring,
    u_set: &BTreeSet<usize>,
    lim: &Limits,
) -> Result<Option<BTreeSet<Edge>>, OracleError> {
    lim.check(g)?;
    coloring::require_proper(g, phi).map_err(|e| OracleError::Other(format!("{e}")))?;
    let m = crate::transversal::m_value(g, phi).map_err(|e| OracleError::Other(format!("{e}")))?;
    let all = g.edges();
    let mut chosen: Vec<usize> = Vec::new();
    let mut out: Option<BTreeSet<Edge>> = None;
    pick_u_acyclic(g, phi, u_set, &all, m, 0, &mut chosen, &mut out);
    Ok(out)
}

fn u_acyclic_ok(
    g: &PlaneGraph,
    phi: &Coloring,
    u_set: &BTreeSet<usize>,
    removed: &BTreeSet<Edge>,
) -> bool {
    // forest + U separation in one union-find pass
    let mut uf = UnionFind::new(g.n());
    for &(u, v) in removed.iter() {
        if !uf.union(u, v) {
            return false;
        }
    }
    let roots: BTreeSet<usize> = u_set.iter().map(|&v| uf.find(v)).collect();
    if roots.len() != u_set.len() {
        return false;
    }
    crate::transversal::kills_all_two_colored_cycles(g, phi, removed)
}

#[allow(clippy::too_many_arguments)]
fn pick_u_acyclic(
    g: &PlaneGraph,
    phi: &Coloring,
    u_set: &BTreeSet<usize>,
    all: &[Edge],
    s: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Option<BTreeSet<Edge>>,
) {
    if out.is_some() {
        return;
    }
    if chosen.len() == s {
        let removed: BTreeSet<Edge> = chosen.iter().map(|&i| all[i]).collect();
        if u_acyclic_ok(g, phi, u_set, &removed) {
            *out = Some(removed);
        }
        return;
    }
    for i in start..all.len() {
        if all.len() - i < s - chosen.len() {
            break;
        }
        chosen.push(i);
        pick_u_acyclic(g, phi, u_set, all, s, i + 1, chosen, out);
        chosen.pop();
        if out.is_some() {
            return;
        }
    }
}

/// Checks a certificate against the brute searcher's own predicates.
pub fn certificate_matches_brute(
    g: &PlaneGraph,
    phi: &Coloring,
    cert: &TransversalCertificate,
) -> bool {
    u_acyclic_ok(g, phi, &cert.u_set, &cert.edges)
}

/// Convenience: smallest proper palette (chromatic number) for tiny graphs.
pub fn brute_chromatic_number(g: &PlaneGraph, lim: &Limits) -> Result<u32, OracleError> {
    lim.check(g)?;
    for k in 1..=(g.n() as u32) {
        match coloring::search_coloring(g, k, false, lim.node_budget) {
            SearchResult::Found(_) => return Ok(k),
            SearchResult::NoColoring => continue,
            SearchResult::BudgetExhausted => return Err(OracleError::BudgetExhausted),
        }
    }
    Ok(g.n() as u32)
}
