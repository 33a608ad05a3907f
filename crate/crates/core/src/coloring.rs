//! Colorings, bichromatic subgraphs, 2-colored-cycle detection, the forced
//! 3-coloring of even-degree triangulations, apex recoloring, and exact
//! backtracking search for proper/acyclic k-colorings.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::graph::{edge, Edge, GraphError, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    Graph(GraphError),
    NotProper { u: usize, v: usize },
    PaletteMismatch(String),
    SameColorPair(u32),
    Inconsistent(String),
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::Graph(e) => write!(f, "{e}"),
            ColoringError::NotProper { u, v } => write!(f, "monochromatic edge ({u},{v})"),
            ColoringError::PaletteMismatch(s) => write!(f, "palette mismatch: {s}"),
            ColoringError::SameColorPair(i) => write!(f, "color pair ({i},{i}) is invalid"),
            ColoringError::Inconsistent(s) => write!(f, "internal inconsistency: {s}"),
        }
    }
}

impl From<GraphError> for ColoringError {
    fn from(e: GraphError) -> Self {
        ColoringError::Graph(e)
    }
}

/// A total assignment of colors 1..=k to the vertices of a graph.
/// The set of colors actually used may be a proper subset of the palette.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Self, ColoringError> {
        if colors.iter().any(|&c| c == 0 || c > k) {
            return Err(ColoringError::PaletteMismatch(format!(
                "colors must lie in 1..={k}"
            )));
        }
        Ok(Coloring { colors, k })
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn palette(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Colors appearing on at least one vertex.
    pub fn used(&self) -> BTreeSet<u32> {
        self.colors.iter().copied().collect()
    }

    pub fn class(&self, c: u32) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }

    /// Unordered pairs of used colors, sorted.
    pub fn used_pairs(&self) -> Vec<(u32, u32)> {
        let used: Vec<u32> = self.used().into_iter().collect();
        let mut out = Vec::new();
        for (a, &i) in used.iter().enumerate() {
            for &j in &used[a + 1..] {
                out.push((i, j));
            }
        }
        out
    }

    /// Restriction of the coloring to a subset of vertices, given by the
    /// map new-index -> old-index.
    pub fn restrict(&self, map: &[usize]) -> Coloring {
        Coloring {
            colors: map.iter().map(|&v| self.colors[v]).collect(),
            k: self.k,
        }
    }
}

pub fn is_proper(g: &PlaneGraph, phi: &Coloring) -> Result<bool, ColoringError> {
    if phi.len() != g.n() {
        return Err(ColoringError::PaletteMismatch(format!(
            "coloring covers {} vertices, graph has {}",
            phi.len(),
            g.n()
        )));
    }
    Ok(g.edges().into_iter().all(|(u, v)| phi.color(u) != phi.color(v)))
}

pub fn require_proper(g: &PlaneGraph, phi: &Coloring) -> Result<(), ColoringError> {
    if !is_proper(g, phi)? {
        let (u, v) = g
            .edges()
            .into_iter()
            .find(|&(u, v)| phi.color(u) == phi.color(v))
            .unwrap();
        return Err(ColoringError::NotProper { u, v });
    }
    Ok(())
}

/// Subgraph induced by classes i and j, with the map back to G's vertices.
pub fn bichromatic_subgraph(
    g: &PlaneGraph,
    phi: &Coloring,
    i: u32,
    j: u32,
) -> Result<(PlaneGraph, Vec<usize>), ColoringError> {
    if i == j {
        return Err(ColoringError::SameColorPair(i));
    }
    require_proper(g, phi)?;
    let vertices: BTreeSet<usize> = (0..g.n())
        .filter(|&v| phi.color(v) == i || phi.color(v) == j)
        .collect();
    Ok(g.induced(&vertices))
}

/// The color pair of an edge under a proper coloring.
pub fn edge_pair(phi: &Coloring, e: Edge) -> (u32, u32) {
    let (a, b) = (phi.color(e.0), phi.color(e.1));
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Edges of G whose endpoints are colored i and j. For a proper coloring the
/// edge sets of the bichromatic subgraphs partition E(G).
pub fn pair_edges(g: &PlaneGraph, phi: &Coloring, i: u32, j: u32) -> Vec<Edge> {
    g.edges()
        .into_iter()
        .filter(|&e| edge_pair(phi, e) == (i.min(j), i.max(j)))
        .collect()
}

/// Searches for a cycle using only two colors; returns the witness as a
/// vertex cycle, or None if the coloring is acyclic.
pub fn two_colored_cycle(
    g: &PlaneGraph,
    phi: &Coloring,
) -> Result<Option<Vec<usize>>, ColoringError> {
    require_proper(g, phi)?;
    for (i, j) in phi.used_pairs() {
        let (h, map) = bichromatic_subgraph(g, phi, i, j)?;
        if let Some(cycle) = find_cycle(&h) {
            return Ok(Some(cycle.into_iter().map(|v| map[v]).collect()));
        }
    }
    Ok(None)
}

/// Same search, on G minus a removed edge set.
pub fn two_colored_cycle_avoiding(
    g: &PlaneGraph,
    phi: &Coloring,
    removed: &BTreeSet<Edge>,
) -> Result<Option<Vec<usize>>, ColoringError> {
    let kept: Vec<Edge> = g.edges().into_iter().filter(|e| !removed.contains(e)).collect();
    let h = PlaneGraph::from_edges(g.n(), &kept)?;
    two_colored_cycle(&h, phi)
}

/// Any cycle in the graph, as a vertex sequence.
pub fn find_cycle(g: &PlaneGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 unseen, 1 done
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        // iterative DFS keeping the tree path
        let mut stack = vec![(root, usize::MAX)];
        let mut onpath: Vec<usize> = Vec::new();
        let mut entered = vec![false; n];
        while let Some(&(v, p)) = stack.last() {
            if !entered[v] {
                entered[v] = true;
                parent[v] = p;
                onpath.push(v);
                for w in g.neighbors(v) {
                    if w == p {
                        continue;
                    }
                    if entered[w] && state[w] == 0 {
                        // back edge: cycle w .. v
                        let mut cyc = vec![v];
                        let mut x = v;
                        while x != w {
                            x = parent[x];
                            cyc.push(x);
                        }
                        cyc.reverse();
                        return Some(cyc);
                    }
                    if !entered[w] {
                        stack.push((w, v));
                    }
                }
            } else {
                stack.pop();
                if onpath.last() == Some(&v) {
                    onpath.pop();
                    state[v] = 1;
                }
            }
        }
        for v in 0..n {
            if entered[v] {
                state[v] = 1;
            }
        }
    }
    None
}

/// The proper 3-coloring of an even-degree (Eulerian) triangulation,
/// constructed by propagating the forced colors across triangles. Returns
/// None when some degree is odd.
pub fn eulerian_three_coloring(g: &PlaneGraph) -> Result<Option<Coloring>, ColoringError> {
    g.is_triangulation()?;
    if (0..g.n()).any(|v| g.degree(v) % 2 == 1) {
        return Ok(None);
    }
    if g.n() == 3 {
        return Ok(Some(Coloring::new(vec![1, 2, 3], 3)?));
    }
    // In the unique 3-coloring every triangle is rainbow, so a colored edge
    // forces the color of every common neighbor of its endpoints.
    let mut colors = vec![0u32; g.n()];
    let (u, v) = g.edges()[0];
    colors[u] = 1;
    colors[v] = 2;
    let mut queue: Vec<Edge> = vec![(u, v)];
    while let Some((a, b)) = queue.pop() {
        let forced = 6 - colors[a] - colors[b];
        let common: Vec<usize> = g
            .neighbors(a)
            .filter(|&w| g.contains_edge(b, w))
            .collect();
        for w in common {
            if colors[w] == 0 {
                colors[w] = forced;
                queue.push((a, w));
                queue.push((b, w));
            } else if colors[w] != forced {
                return Err(ColoringError::Inconsistent(format!(
                    "propagation clash at vertex {w}: {} vs {forced}",
                    colors[w]
                )));
            }
        }
    }
    if colors.contains(&0) {
        return Err(ColoringError::Inconsistent("propagation did not reach all vertices".into()));
    }
    let phi = Coloring::new(colors, 3)?;
    require_proper(g, &phi)?;
    Ok(Some(phi))
}

/// The 4-coloring differing from the 3-coloring only at v, where v gets the
/// new color 4.
pub fn apex_recoloring(
    g: &PlaneGraph,
    phi3: &Coloring,
    v: usize,
) -> Result<Coloring, ColoringError> {
    require_proper(g, phi3)?;
    if phi3.used() != [1, 2, 3].into_iter().collect() {
        return Err(ColoringError::PaletteMismatch(
            "apex recoloring needs a coloring using exactly colors 1..3".into(),
        ));
    }
    let mut colors = phi3.colors().to_vec();
    colors[v] = 4;
    Coloring::new(colors, 4)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchResult {
    Found(Coloring),
    NoColoring,
    BudgetExhausted,
}

impl SearchResult {
    pub fn found(self) -> Option<Coloring> {
        match self {
            SearchResult::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Exact backtracking search for a proper (optionally acyclic) k-coloring.
/// Symmetry is broken by fixing the first vertex to color 1 and introducing
/// colors in increasing order. Deterministic for a fixed vertex order.
pub fn search_coloring(
    g: &PlaneGraph,
    k: u32,
    require_acyclic: bool,
    node_budget: u64,
) -> SearchResult {
    let mut out = None;
    let status = enumerate_colorings(g, k, require_acyclic, node_budget, true, &mut |phi| {
        out = Some(phi.clone());
        false // stop at first
    });
    match (out, status) {
        (Some(phi), _) => SearchResult::Found(phi),
        (None, true) => SearchResult::NoColoring,
        (None, false) => SearchResult::BudgetExhausted,
    }
}

/// Enumerates proper (optionally acyclic) k-colorings. With `canonical` set,
/// only one representative per color-permutation orbit is produced (first
/// vertex fixed to 1, colors introduced in order). The callback returns
/// false to stop. Returns true if the enumeration ran to completion.
pub fn enumerate_colorings(
    g: &PlaneGraph,
    k: u32,
    require_acyclic: bool,
    node_budget: u64,
    canonical: bool,
    f: &mut dyn FnMut(&Coloring) -> bool,
) -> bool {
    let n = g.n();
    if n == 0 {
        f(&Coloring { colors: Vec::new(), k });
        return true;
    }
    let mut colors = vec![0u32; n];
    let mut budget = node_budget;
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &PlaneGraph,
        k: u32,
        require_acyclic: bool,
        canonical: bool,
        colors: &mut Vec<u32>,
        v: usize,
        max_used: u32,
        budget: &mut u64,
        f: &mut dyn FnMut(&Coloring) -> bool,
    ) -> Option<bool> {
        // Some(true): keep going; Some(false): callback stopped; None: budget
        if v == g.n() {
            let phi = Coloring { colors: colors.clone(), k };
            return Some(f(&phi));
        }
        let top = if canonical { k.min(max_used + 1) } else { k };
        for c in 1..=top {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            if g.neighbors(v).any(|w| colors[w] == c) {
                continue;
            }
            colors[v] = c;
            if !require_acyclic || !creates_two_colored_cycle(g, colors, v) {
                match go(g, k, require_acyclic, canonical, colors, v + 1, max_used.max(c), budget, f)
                {
                    Some(true) => {}
                    other => {
                        colors[v] = 0;
                        return other;
                    }
                }
            }
            colors[v] = 0;
        }
        Some(true)
    }
    go(g, k, require_acyclic, canonical, &mut colors, 0, 0, &mut budget, f).is_some()
}

/// After assigning colors[v], checks whether v now lies on a 2-colored cycle
/// among the already-colored vertices. Only the two color classes touched by
/// the assignment need to be examined.
fn creates_two_colored_cycle(g: &PlaneGraph, colors: &[u32], v: usize) -> bool {
    let c = colors[v];
    let other_colors: BTreeSet<u32> = g
        .neighbors(v)
        .filter(|&w| colors[w] != 0)
        .map(|w| colors[w])
        .collect();
    for &c2 in &other_colors {
        // v lies on a {c,c2}-cycle iff two of its c2-neighbors are joined by
        // a path in the colored {c,c2}-subgraph avoiding v
        let nbrs: Vec<usize> = g
            .neighbors(v)
            .filter(|&w| colors[w] == c2)
            .collect();
        if nbrs.len() < 2 {
            continue;
        }
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut stack = vec![nbrs[0]];
        seen.insert(nbrs[0]);
        while let Some(x) = stack.pop() {
            for w in g.neighbors(x) {
                if w == v || seen.contains(&w) {
                    continue;
                }
                if colors[w] == c || colors[w] == c2 {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        if nbrs[1..].iter().any(|w| seen.contains(w)) {
            return true;
        }
    }
    false
}

/// A uniformly-seeded random proper k-coloring found by backtracking with a
/// randomized color order per vertex. None if no proper k-coloring exists.
pub fn random_proper_coloring(
    g: &PlaneGraph,
    k: u32,
    rng: &mut impl Rng,
) -> Option<Coloring> {
    let n = g.n();
    let mut colors = vec![0u32; n];
    fn go(g: &PlaneGraph, k: u32, colors: &mut Vec<u32>, v: usize, rng: &mut impl Rng) -> bool {
        if v == g.n() {
            return true;
        }
        let mut order: Vec<u32> = (1..=k).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        for c in order {
            if g.neighbors(v).any(|w| colors[w] == c) {
                continue;
            }
            colors[v] = c;
            if go(g, k, colors, v + 1, rng) {
                return true;
            }
            colors[v] = 0;
        }
        false
    }
    if go(g, k, &mut colors, 0, rng) {
        Some(Coloring { colors, k })
    } else {
        None
    }
}

/// Partition identity helper: |E(G_ij)| summed over used pairs equals |E(G)|.
pub fn edge_partition_sizes(g: &PlaneGraph, phi: &Coloring) -> BTreeMap<(u32, u32), usize> {
    let mut sizes: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for (i, j) in phi.used_pairs() {
        sizes.insert((i, j), 0);
    }
    for e in g.edges() {
        *sizes.get_mut(&edge_pair(phi, e)).unwrap() += 1;
    }
    sizes
}

pub fn monochrome_edge(g: &PlaneGraph, phi: &Coloring) -> Option<Edge> {
    g.edges()
        .into_iter()
        .find(|&(u, v)| phi.color(u) == phi.color(v))
        .map(|(u, v)| edge(u, v))
}
