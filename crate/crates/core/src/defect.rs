//! Defective-coloring pipeline: starting from an acyclic 5-coloring of a
//! triangulation, delete few edges and recolor to reach an acyclic
//! 4-coloring (at most (3n-12)/5 deletions), then iterate to an acyclic
//! 3-coloring (at most (13n-42)/10 cumulative deletions).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{self, Coloring, ColoringError, SearchResult};
use crate::graph::{edge, Edge, GraphError, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DefectError {
    Coloring(ColoringError),
    Graph(GraphError),
    /// The input coloring has a 2-colored cycle, so rainbow neighbor
    /// triples are not guaranteed.
    NotAcyclic(Vec<usize>),
    /// A class vertex whose neighborhood shows fewer than 3 colors.
    NoRainbowTriple(usize),
    /// A class vertex with at least two neighbors, all of one color.
    OneNeighborColor(usize),
    SearchExhausted,
    NoFiveColoring,
    CompletionFailed(String),
}

impl fmt::Display for DefectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefectError::Coloring(e) => write!(f, "{e}"),
            DefectError::Graph(e) => write!(f, "{e}"),
            DefectError::NotAcyclic(c) => write!(f, "input coloring has a 2-colored cycle {c:?}"),
            DefectError::NoRainbowTriple(v) => {
                write!(f, "vertex {v} has no three distinctly colored neighbors")
            }
            DefectError::OneNeighborColor(v) => {
                write!(f, "vertex {v} sees only one color among its neighbors")
            }
            DefectError::SearchExhausted => write!(f, "coloring search budget exhausted"),
            DefectError::NoFiveColoring => write!(f, "no acyclic 5-coloring found"),
            DefectError::CompletionFailed(s) => write!(f, "triangulation completion failed: {s}"),
        }
    }
}

impl From<ColoringError> for DefectError {
    fn from(e: ColoringError) -> Self {
        DefectError::Coloring(e)
    }
}

impl From<GraphError> for DefectError {
    fn from(e: GraphError) -> Self {
        DefectError::Graph(e)
    }
}

/// One stage's outcome: the deleted edges and the verified coloring of
/// the graph minus them, with the rational bound `bound_num/bound_den`.
#[derive(Clone, Debug)]
pub struct DefectReport {
    pub k: u32,
    pub deleted: BTreeSet<Edge>,
    pub coloring: Coloring,
    pub bound_num: i64,
    pub bound_den: i64,
    pub met: bool,
    pub source: String,
}

impl DefectReport {
    /// |deleted| <= bound, compared exactly in rationals.
    pub fn bound_holds(len: usize, num: i64, den: i64) -> bool {
        (len as i64) * den <= num
    }

    /// Re-check the report against `g`: the coloring must be a proper,
    /// acyclic k-coloring of g minus the deleted edges.
    pub fn verify(&self, g: &PlaneGraph) -> Result<(), DefectError> {
        let kept: Vec<Edge> = g.edges().into_iter().filter(|e| !self.deleted.contains(e)).collect();
        let h = PlaneGraph::from_edges(g.n(), &kept)?;
        coloring::require_proper(&h, &self.coloring)?;
        if self.coloring.palette() != self.k {
            return Err(DefectError::Coloring(ColoringError::PaletteMismatch("palette larger than expected".into())));
        }
        if let Some(c) = coloring::two_colored_cycle(&h, &self.coloring)? {
            return Err(DefectError::NotAcyclic(c));
        }
        if self.met != Self::bound_holds(self.deleted.len(), self.bound_num, self.bound_den) {
            return Err(DefectError::CompletionFailed("met flag inconsistent".into()));
        }
        Ok(())
    }
}

fn require_acyclic(g: &PlaneGraph, phi: &Coloring) -> Result<(), DefectError> {
    coloring::require_proper(g, phi)?;
    if let Some(c) = coloring::two_colored_cycle(g, phi)? {
        return Err(DefectError::NotAcyclic(c));
    }
    Ok(())
}

/// Class c is scored by sum over its vertices of max(d(v) - base, 0);
/// smallest score wins, ties to the smaller color index.
fn choose_class(g: &PlaneGraph, phi: &Coloring, palette: u32, base: usize) -> (u32, usize) {
    let mut best = (u32::MAX, usize::MAX);
    for c in 1..=palette {
        let score: usize = (0..g.n())
            .filter(|&v| phi.color(v) == c)
            .map(|v| g.degree(v).saturating_sub(base))
            .sum();
        if score < best.1 {
            best = (c, score);
        }
    }
    (best.0, best.1)
}

/// Keep up to `want` neighbors of v with pairwise distinct colors,
/// scanning in vertex order (determinism); everything else incident to v
/// is deleted.
fn keep_rainbow(
    g: &PlaneGraph,
    phi: &Coloring,
    v: usize,
    want: usize,
) -> (Vec<usize>, BTreeSet<u32>) {
    let mut kept = Vec::new();
    let mut seen = BTreeSet::new();
    for u in g.neighbors(v) {
        if kept.len() == want {
            break;
        }
        if seen.insert(phi.color(u)) {
            kept.push(u);
        }
    }
    (kept, seen)
}

fn drop_color_map(palette: u32, dropped: u32) -> Vec<u32> {
    // old color -> new color in 1..palette, skipping `dropped`
    let mut map = vec![0u32; (palette + 1) as usize];
    let mut next = 1;
    for c in 1..=palette {
        if c != dropped {
            map[c as usize] = next;
            next += 1;
        }
    }
    map
}

/// One reduction stage: drop the cheapest color class, keep `base`
/// distinctly colored neighbors per class vertex, delete the rest of
/// their incident edges, recolor each class vertex with the missing
/// remaining color.
fn reduce_stage(
    g: &PlaneGraph,
    phi: &Coloring,
    palette: u32,
    base: usize,
) -> Result<(BTreeSet<Edge>, Coloring, usize), DefectError> {
    require_acyclic(g, phi)?;
    if phi.palette() > palette {
        return Err(DefectError::Coloring(ColoringError::PaletteMismatch("palette larger than expected".into())));
    }
    let (class, score) = choose_class(g, phi, palette, base);
    // averaging guarantee: the cheapest of `palette` classes costs at most
    // the total over all vertices divided by the class count
    let total: usize = (0..g.n()).map(|v| g.degree(v).saturating_sub(base)).sum();
    debug_assert!(score * palette as usize <= total);

    let map = drop_color_map(palette, class);
    let mut colors: Vec<u32> = (0..g.n()).map(|v| map[phi.color(v) as usize]).collect();
    let mut deleted: BTreeSet<Edge> = BTreeSet::new();
    #[allow(clippy::needless_range_loop)]
    for v in 0..g.n() {
        if phi.color(v) != class {
            continue;
        }
        let (kept, seen) = keep_rainbow(g, phi, v, base);
        if kept.len() < base.min(g.degree(v)) {
            return Err(match base {
                3 => DefectError::NoRainbowTriple(v),
                _ => DefectError::OneNeighborColor(v),
            });
        }
        for u in g.neighbors(v) {
            if !kept.contains(&u) {
                deleted.insert(edge(u, v));
            }
        }
        let missing = (1..palette)
            .find(|nc| !seen.iter().any(|&c| map[c as usize] == *nc))
            .expect("fewer kept colors than the shrunk palette");
        colors[v] = missing;
    }
    let phi_out = Coloring::new(colors, palette - 1)?;
    Ok((deleted, phi_out, score))
}

/// Acyclic 5-coloring -> acyclic 4-coloring with at most (3n-12)/5
/// deletions on a triangulation.
pub fn reduce_to_four(g: &PlaneGraph, phi5: &Coloring) -> Result<DefectReport, DefectError> {
    let (deleted, phi4, score) = reduce_stage(g, phi5, 5, 3)?;
    debug_assert_eq!(deleted.len(), score);
    let n = g.n() as i64;
    let (num, den) = (3 * n - 12, 5);
    let report = DefectReport {
        k: 4,
        deleted,
        coloring: phi4,
        bound_num: num,
        bound_den: den,
        met: false,
        source: "five-coloring reduction".into(),
    };
    finish(g, report)
}

/// Acyclic 4-coloring of G' = G - prior -> acyclic 3-coloring; the
/// cumulative deletion count obeys (13n-42)/10.
pub fn reduce_to_three(
    g_prime: &PlaneGraph,
    phi4: &Coloring,
    prior_deleted: &BTreeSet<Edge>,
) -> Result<DefectReport, DefectError> {
    let (new_deleted, phi3, _score) = reduce_stage(g_prime, phi4, 4, 2)?;
    let mut deleted = prior_deleted.clone();
    deleted.extend(new_deleted.iter().copied());
    let n = g_prime.n() as i64;
    let (num, den) = (13 * n - 42, 10);
    let mut pruned = g_prime.clone_without_rotation();
    for &(u, v) in &new_deleted {
        pruned.remove_edge(u, v);
    }
    let report = DefectReport {
        k: 3,
        deleted,
        coloring: phi3,
        bound_num: num,
        bound_den: den,
        met: false,
        source: "four-coloring reduction".into(),
    };
    finish_on(&pruned, prior_deleted, report)
}

fn finish(g: &PlaneGraph, report: DefectReport) -> Result<DefectReport, DefectError> {
    finish_on(g, &BTreeSet::new(), report)
}

fn finish_on(
    g_after_prior: &PlaneGraph,
    prior: &BTreeSet<Edge>,
    mut report: DefectReport,
) -> Result<DefectReport, DefectError> {
    report.met =
        DefectReport::bound_holds(report.deleted.len(), report.bound_num, report.bound_den);
    // verify against the original graph: g_after_prior plus prior edges
    let mut g = g_after_prior.clone_without_rotation();
    for &(u, v) in prior {
        if !g.contains_edge(u, v) {
            g.add_edge(u, v)?;
        }
    }
    report.verify(&g)?;
    Ok(report)
}

/// Completes a plane graph (with rotation) to a triangulation by fanning
/// every face of length > 3 from a conflict-free pivot vertex.
pub fn complete_to_triangulation(g: &PlaneGraph) -> Result<PlaneGraph, DefectError> {
    if g.is_triangulation().is_ok() {
        return Ok(g.clone());
    }
    if !g.has_rotation() {
        return Err(DefectError::CompletionFailed(
            "non-triangulation input needs a rotation system".into(),
        ));
    }
    let faces = g.faces()?;
    let mut h = g.clone();
    let mut rot = g.rotation().cloned().unwrap();
    for face in &faces {
        let l = face.len();
        if l <= 3 {
            continue;
        }
        let distinct: BTreeSet<usize> = face.iter().copied().collect();
        if distinct.len() != l {
            return Err(DefectError::CompletionFailed(format!(
                "face walk repeats a vertex: {face:?}"
            )));
        }
        // pivot p = face[s] works when no chord from p already exists
        let pivot = (0..l).find(|&s| {
            (2..l - 1).all(|off| !h.contains_edge(face[s], face[(s + off) % l]))
        });
        let s = pivot.ok_or_else(|| {
            DefectError::CompletionFailed(format!("no chord-free pivot on face {face:?}"))
        })?;
        let at = |i: usize| face[(s + i) % l];
        for off in 2..l - 1 {
            h.add_edge(at(0), at(off))?;
        }
        // rotation: at the pivot the gap (prev, next) opens up to hold the
        // fan, in reverse walk order; each fan target slips the pivot in
        // after its face predecessor
        let row = &mut rot[at(0)];
        let p = row.iter().position(|&q| q == at(l - 1)).unwrap();
        debug_assert_eq!(row[(p + 1) % row.len()], at(1));
        for (k, off) in (2..l - 1).rev().enumerate() {
            row.insert(p + 1 + k, at(off));
        }
        for off in 2..l - 1 {
            let row = &mut rot[at(off)];
            let p = row.iter().position(|&q| q == at(off - 1)).unwrap();
            row.insert(p + 1, at(0));
        }
    }
    h.set_rotation(rot)?;
    h.is_triangulation()?;
    Ok(h)
}

/// Full pipeline: complete to a triangulation, search an acyclic
/// 5-coloring, run both reduction stages, and restrict the reported
/// deletions to edges of the input graph.
pub fn defect_bounds(
    g: &PlaneGraph,
    phi5: Option<&Coloring>,
    node_budget: u64,
) -> Result<(DefectReport, DefectReport), DefectError> {
    let t = complete_to_triangulation(g)?;
    let owned;
    let phi5 = match phi5 {
        Some(p) => p,
        None => {
            owned = match coloring::search_coloring(&t, 5, true, node_budget) {
                SearchResult::Found(c) => c,
                SearchResult::NoColoring => return Err(DefectError::NoFiveColoring),
                SearchResult::BudgetExhausted => return Err(DefectError::SearchExhausted),
            };
            &owned
        }
    };
    let r4 = reduce_to_four(&t, phi5)?;
    let mut t_prime = t.clone_without_rotation();
    for &(u, v) in &r4.deleted {
        t_prime.remove_edge(u, v);
    }
    let r3 = reduce_to_three(&t_prime, &r4.coloring, &r4.deleted)?;
    // completion edges are not part of the input and are never reported
    let restrict = |mut r: DefectReport| -> Result<DefectReport, DefectError> {
        r.deleted.retain(|&(u, v)| g.contains_edge(u, v));
        r.met = DefectReport::bound_holds(r.deleted.len(), r.bound_num, r.bound_den);
        r.verify(g)?;
        Ok(r)
    };
    Ok((restrict(r4)?, restrict(r3)?))
}
