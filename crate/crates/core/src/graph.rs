//! Plane graphs with optional rotation systems, triangulation validation,
//! face extraction, separating-triangle decomposition and the rewrites
//! (path contraction, vertex deletion with retriangulation).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::uf::UnionFind;

/// Undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    LoopEdge(usize),
    VertexOutOfRange(usize),
    MissingRotation,
    RotationMismatch(usize),
    NotConnected,
    NotTriangulation(String),
    ContractionUnsafe(String),
    BadChords(String),
    BadDegree { vertex: usize, degree: usize },
    UnknownLabel(u64),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::LoopEdge(v) => write!(f, "loop edge at vertex {v}"),
            GraphError::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            GraphError::MissingRotation => write!(f, "operation requires a rotation system"),
            GraphError::RotationMismatch(v) => {
                write!(f, "rotation at vertex {v} does not match adjacency")
            }
            GraphError::NotConnected => write!(f, "graph is not connected"),
            GraphError::NotTriangulation(why) => write!(f, "not a triangulation: {why}"),
            GraphError::ContractionUnsafe(why) => write!(f, "contraction unsafe: {why}"),
            GraphError::BadChords(why) => write!(f, "bad chord set: {why}"),
            GraphError::BadDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has unsupported degree {degree}")
            }
            GraphError::UnknownLabel(l) => write!(f, "no vertex with label {l}"),
        }
    }
}

/// A simple undirected graph with an optional combinatorial embedding
/// (per-vertex cyclic neighbor order). Vertex labels are stable across
/// rewrites so certificates computed on rewritten graphs can be lifted
/// back to the original.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    adj: Vec<BTreeSet<usize>>,
    rotation: Option<Vec<Vec<usize>>>,
    labels: Vec<u64>,
}

impl PlaneGraph {
    pub fn new(n: usize) -> Self {
        PlaneGraph {
            adj: vec![BTreeSet::new(); n],
            rotation: None,
            labels: (0..n as u64).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = PlaneGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        for x in [u, v] {
            if x >= self.n() {
                return Err(GraphError::VertexOutOfRange(x));
            }
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Removes an edge if present, keeping any rotation rows consistent.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if !self.contains_edge(u, v) {
            return;
        }
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        if let Some(rot) = self.rotation.as_mut() {
            rot[u].retain(|&w| w != v);
            rot[v].retain(|&w| w != u);
        }
    }

    /// A copy that forgets the embedding (edge deletions on it are cheap
    /// and cannot invalidate face structure).
    pub fn clone_without_rotation(&self) -> PlaneGraph {
        PlaneGraph { adj: self.adj.clone(), rotation: None, labels: self.labels.clone() }
    }

    /// Installs a rotation system. Each row must be a permutation of the
    /// vertex's neighbor set.
    pub fn set_rotation(&mut self, rotation: Vec<Vec<usize>>) -> Result<(), GraphError> {
        if rotation.len() != self.n() {
            return Err(GraphError::RotationMismatch(rotation.len()));
        }
        for (v, row) in rotation.iter().enumerate() {
            let as_set: BTreeSet<usize> = row.iter().copied().collect();
            if as_set != self.adj[v] || as_set.len() != row.len() {
                return Err(GraphError::RotationMismatch(v));
            }
        }
        self.rotation = Some(rotation);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_rotation(&self) -> bool {
        self.rotation.is_some()
    }

    pub fn rotation(&self) -> Option<&Vec<Vec<usize>>> {
        self.rotation.as_ref()
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<u64>) {
        assert_eq!(labels.len(), self.n());
        self.labels = labels;
    }

    pub fn vertex_by_label(&self, label: u64) -> Result<usize, GraphError> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(GraphError::UnknownLabel(label))
    }

    fn fresh_label(&self) -> u64 {
        self.labels.iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.component_of(0, &BTreeSet::new()).len() == self.n()
    }

    /// Vertices reachable from `start` in the graph minus `removed`.
    fn component_of(&self, start: usize, removed: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        if removed.contains(&start) {
            return seen;
        }
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !removed.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn component_count(&self) -> usize {
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for v in 0..self.n() {
            if !seen.contains(&v) {
                count += 1;
                seen.extend(self.component_of(v, &BTreeSet::new()));
            }
        }
        count
    }

    /// Induced subgraph on the given vertices (sorted order), together
    /// with the map from new vertex index to old. Rotation is restricted
    /// when present; labels carry over.
    pub fn induced(&self, vertices: &BTreeSet<usize>) -> (PlaneGraph, Vec<usize>) {
        let map: Vec<usize> = vertices.iter().copied().collect();
        let back: BTreeMap<usize, usize> = map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = PlaneGraph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            g.labels[i] = self.labels[v];
            for &w in &self.adj[v] {
                if let Some(&j) = back.get(&w) {
                    g.adj[i].insert(j);
                }
            }
        }
        if let Some(rot) = &self.rotation {
            let rows = map
                .iter()
                .map(|&v| {
                    rot[v]
                        .iter()
                        .filter_map(|w| back.get(w).copied())
                        .collect::<Vec<_>>()
                })
                .collect();
            g.rotation = Some(rows);
        }
        (g, map)
    }

    /// Facial walks of the embedding. Every directed edge lies on exactly
    /// one returned face.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        let rot = self.rotation.as_ref().ok_or(GraphError::MissingRotation)?;
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut faces = Vec::new();
        for u in 0..self.n() {
            for &v in &rot[u] {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    face.push(a);
                    seen.insert((a, b));
                    // next directed edge: successor of a in the rotation at b
                    let row = &rot[b];
                    let i = row.iter().position(|&x| x == a).unwrap();
                    let c = row[(i + 1) % row.len()];
                    a = b;
                    b = c;
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }

    /// All triangles (3-cliques), sorted.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if v <= u {
                    continue;
                }
                for &w in &self.adj[v] {
                    if w > v && self.adj[u].contains(&w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out
    }

    /// Combinatorial triangulation battery. With a rotation present this is
    /// exact (Euler formula plus all faces of length 3); without one it is a
    /// battery of necessary conditions that is exact on the instance families
    /// used here.
    pub fn is_triangulation(&self) -> Result<(), GraphError> {
        let n = self.n();
        if n < 3 {
            return Err(GraphError::NotTriangulation(format!("only {n} vertices")));
        }
        let m = self.edge_count();
        if m != 3 * n - 6 {
            return Err(GraphError::NotTriangulation(format!(
                "|E| = {m}, expected 3n-6 = {}",
                3 * n - 6
            )));
        }
        if !self.is_connected() {
            return Err(GraphError::NotTriangulation("not connected".into()));
        }
        if self.rotation.is_some() {
            let faces = self.faces()?;
            if let Some(bad) = faces.iter().find(|f| f.len() != 3) {
                return Err(GraphError::NotTriangulation(format!(
                    "face of length {}",
                    bad.len()
                )));
            }
            let f = faces.len();
            if n + f != m + 2 {
                return Err(GraphError::NotTriangulation(format!(
                    "Euler check failed: n - m + f = {}",
                    n as i64 - m as i64 + f as i64
                )));
            }
            return Ok(());
        }
        // No rotation: necessary conditions. Each edge must lie on at least
        // two triangles (n > 3) and each neighborhood must carry a spanning
        // cycle (the link of the vertex).
        if n == 3 {
            return Ok(());
        }
        for (u, v) in self.edges() {
            let common = self.adj[u].intersection(&self.adj[v]).count();
            if common < 2 {
                return Err(GraphError::NotTriangulation(format!(
                    "edge ({u},{v}) lies on {common} triangles"
                )));
            }
        }
        for v in 0..n {
            if !self.neighborhood_has_spanning_cycle(v) {
                return Err(GraphError::NotTriangulation(format!(
                    "neighborhood of {v} carries no spanning cycle"
                )));
            }
        }
        Ok(())
    }

    fn neighborhood_has_spanning_cycle(&self, v: usize) -> bool {
        let nb: Vec<usize> = self.adj[v].iter().copied().collect();
        let d = nb.len();
        if d < 3 {
            return false;
        }
        // Hamiltonian cycle search on the induced neighborhood; degrees are
        // tiny at desk scale.
        let mut order = vec![nb[0]];
        let mut used = vec![false; d];
        used[0] = true;
        self.ham_cycle(&nb, &mut order, &mut used)
    }

    fn ham_cycle(&self, nb: &[usize], order: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if order.len() == nb.len() {
            return self.adj[*order.last().unwrap()].contains(&order[0]);
        }
        let last = *order.last().unwrap();
        for (i, &w) in nb.iter().enumerate() {
            if !used[i] && self.adj[last].contains(&w) {
                used[i] = true;
                order.push(w);
                if self.ham_cycle(nb, order, used) {
                    return true;
                }
                order.pop();
                used[i] = false;
            }
        }
        false
    }

    /// Validation report: simplicity and symmetry are structural, the rest
    /// are recomputed. Never mutates the graph.
    pub fn validate(&self, expect_triangulation: bool) -> ValidationReport {
        let mut report = ValidationReport::new();
        report.push("simple", true, format!("n = {}, |E| = {}", self.n(), self.edge_count()));
        report.push("connected", self.is_connected(), String::new());
        if let Some(rot) = &self.rotation {
            let consistent = rot.iter().enumerate().all(|(v, row)| {
                let s: BTreeSet<usize> = row.iter().copied().collect();
                s == self.adj[v] && s.len() == row.len()
            });
            report.push("rotation-consistent", consistent, String::new());
            if consistent && self.is_connected() {
                match self.faces() {
                    Ok(faces) => {
                        let euler =
                            self.n() as i64 - self.edge_count() as i64 + faces.len() as i64;
                        report.push("euler", euler == 2, format!("n - m + f = {euler}"));
                        report.push("faces", true, format!("{} faces", faces.len()));
                    }
                    Err(e) => report.push("euler", false, format!("{e}")),
                }
            }
        }
        if expect_triangulation {
            match self.is_triangulation() {
                Ok(()) => report.push("triangulation", true, String::new()),
                Err(e) => report.push("triangulation", false, format!("{e}")),
            }
        }
        report
    }

    /// Triangles whose removal disconnects the graph.
    pub fn separating_triangles(&self) -> Result<Vec<[usize; 3]>, GraphError> {
        self.is_triangulation()?;
        let mut out = Vec::new();
        for t in self.triangles() {
            let removed: BTreeSet<usize> = t.iter().copied().collect();
            let rest: Vec<usize> = (0..self.n()).filter(|v| !removed.contains(v)).collect();
            if rest.is_empty() {
                continue;
            }
            let comp = self.component_of(rest[0], &removed);
            if comp.len() < rest.len() {
                out.push(t);
            }
        }
        Ok(out)
    }

    /// Decomposition into 4-connected pieces along separating triangles.
    pub fn decompose(&self) -> Result<DecompositionTree, GraphError> {
        self.is_triangulation()?;
        if self.n() < 4 {
            return Err(GraphError::NotTriangulation("decompose needs n >= 4".into()));
        }
        let mut tree = DecompositionTree {
            pieces: Vec::new(),
            triangles: Vec::new(),
            tree_edges: Vec::new(),
            piece_maps: Vec::new(),
        };
        let all: BTreeSet<usize> = (0..self.n()).collect();
        self.decompose_into(&all, &mut tree)?;
        Ok(tree)
    }

    /// Splits the induced subgraph on `vertices` at one separating triangle
    /// and recurses; returns the index of the piece containing `vertices`'s
    /// lowest vertex... pieces are appended to `tree`.
    fn decompose_into(
        &self,
        vertices: &BTreeSet<usize>,
        tree: &mut DecompositionTree,
    ) -> Result<(), GraphError> {
        let (sub, map) = self.induced(vertices);
        let seps = sub.separating_triangles()?;
        match seps.first() {
            None => {
                tree.pieces.push(sub);
                tree.piece_maps.push(map);
            }
            Some(&t) => {
                let t_orig = [map[t[0]], map[t[1]], map[t[2]]];
                let removed: BTreeSet<usize> = t.iter().copied().collect();
                let rest: Vec<usize> = (0..sub.n()).filter(|v| !removed.contains(v)).collect();
                let comp = sub.component_of(rest[0], &removed);
                let side1: BTreeSet<usize> = comp
                    .iter()
                    .map(|&v| map[v])
                    .chain(t_orig.iter().copied())
                    .collect();
                let side2: BTreeSet<usize> = vertices
                    .iter()
                    .copied()
                    .filter(|v| !side1.contains(v) || t_orig.contains(v))
                    .collect();
                self.decompose_into(&side1, tree)?;
                let a = Self::piece_containing(tree, &t_orig).unwrap();
                self.decompose_into(&side2, tree)?;
                let b = Self::piece_containing_after(tree, &t_orig, a).unwrap();
                let mut tri = t_orig;
                tri.sort_unstable();
                tree.triangles.push(tri);
                tree.tree_edges.push((a, b, tree.triangles.len() - 1));
            }
        }
        Ok(())
    }

    fn piece_containing(tree: &DecompositionTree, t: &[usize; 3]) -> Option<usize> {
        tree.piece_maps
            .iter()
            .position(|map| t.iter().all(|v| map.contains(v)))
    }

    fn piece_containing_after(tree: &DecompositionTree, t: &[usize; 3], skip: usize) -> Option<usize> {
        tree.piece_maps
            .iter()
            .enumerate()
            .position(|(i, map)| i != skip && t.iter().all(|v| map.contains(v)))
    }

    /// Contracts the path v1 - v - v3 to a single new vertex. v1 and v3 must
    /// be non-adjacent; common neighbors of contracted pairs must sit on the
    /// faces being collapsed, otherwise the contraction would leave a
    /// parallel edge and an error is returned.
    pub fn contract_path(
        &self,
        v1: usize,
        v: usize,
        v3: usize,
    ) -> Result<(PlaneGraph, ContractionRecord), GraphError> {
        for x in [v1, v, v3] {
            if x >= self.n() {
                return Err(GraphError::VertexOutOfRange(x));
            }
        }
        if v1 == v3 || v1 == v || v3 == v {
            return Err(GraphError::ContractionUnsafe("path vertices not distinct".into()));
        }
        if !self.contains_edge(v1, v) || !self.contains_edge(v, v3) {
            return Err(GraphError::ContractionUnsafe("not a path".into()));
        }
        if self.contains_edge(v1, v3) {
            return Err(GraphError::ContractionUnsafe(
                "endpoints adjacent; contraction would create a loop".into(),
            ));
        }
        let record = self.snapshot_for_undo(&[v1, v, v3]);
        let fresh = self.fresh_label();
        let step1 = self.contract_edge(v1, v)?;
        let z1 = step1.n() - 1;
        let v3_new = step1.vertex_by_label(self.labels[v3])?;
        let mut g = step1.contract_edge(z1, v3_new)?;
        let merged = g.n() - 1;
        g.labels[merged] = fresh;
        if g.rotation.is_some() {
            // sanity: the splice must keep us on the sphere
            let faces = g.faces()?;
            if g.n() as i64 - g.edge_count() as i64 + faces.len() as i64 != 2 {
                return Err(GraphError::ContractionUnsafe("embedding degenerates".into()));
            }
        }
        Ok((g, record))
    }

    /// Contracts a single edge, simplifying parallel edges produced by
    /// common neighbors. The merged vertex comes last and gets a fresh label.
    /// With a rotation present, common neighbors must appear consecutively in
    /// the spliced rotation (i.e. on the two faces at the edge), otherwise
    /// the simplified graph has no consistent embedding and this errors.
    fn contract_edge(&self, u: usize, w: usize) -> Result<PlaneGraph, GraphError> {
        if !self.contains_edge(u, w) {
            return Err(GraphError::ContractionUnsafe("not an edge".into()));
        }
        let removed = [u, w];
        let keep: Vec<usize> = (0..self.n()).filter(|x| !removed.contains(x)).collect();
        let back: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let merged = keep.len();
        let mut g = PlaneGraph::new(keep.len() + 1);
        for (i, &x) in keep.iter().enumerate() {
            g.labels[i] = self.labels[x];
            for &y in &self.adj[x] {
                if let Some(&j) = back.get(&y) {
                    g.adj[i].insert(j);
                } else {
                    g.adj[i].insert(merged);
                    g.adj[merged].insert(i);
                }
            }
        }
        g.labels[merged] = self.fresh_label();
        if let Some(rot) = &self.rotation {
            let seg = |c: usize, cut: usize| -> Vec<usize> {
                let row = &rot[c];
                let i = row.iter().position(|&x| x == cut).unwrap();
                (1..row.len()).map(|d| row[(i + d) % row.len()]).collect()
            };
            let mut spliced = seg(u, w);
            spliced.extend(seg(w, u));
            // collapse cyclically-consecutive duplicates; any duplicate that
            // is not consecutive means a genuine parallel edge survives
            let mut row: Vec<usize> = Vec::new();
            for x in spliced {
                if row.last() == Some(&x) {
                    continue;
                }
                row.push(x);
            }
            while row.len() > 1 && row.first() == row.last() {
                row.pop();
            }
            let mut seen = BTreeSet::new();
            for &x in &row {
                if !seen.insert(x) {
                    return Err(GraphError::ContractionUnsafe(format!(
                        "parallel edge to vertex {x} cannot be collapsed"
                    )));
                }
            }
            let mut rows: Vec<Vec<usize>> = Vec::with_capacity(g.n());
            for &x in &keep {
                let mut r: Vec<usize> = Vec::new();
                for &y in &rot[x] {
                    let j = if removed.contains(&y) { merged } else { back[&y] };
                    if r.last() == Some(&j) {
                        continue;
                    }
                    r.push(j);
                }
                while r.len() > 1 && r.first() == r.last() {
                    r.pop();
                }
                let mut seen = BTreeSet::new();
                for &j in &r {
                    if !seen.insert(j) {
                        return Err(GraphError::ContractionUnsafe(format!(
                            "rotation at {x} keeps a doubled entry"
                        )));
                    }
                }
                rows.push(r);
            }
            rows.push(row.iter().map(|&x| back.get(&x).copied().unwrap_or(merged)).collect());
            if rows.last().unwrap().contains(&merged) {
                return Err(GraphError::ContractionUnsafe("self-loop in splice".into()));
            }
            g.set_rotation(rows)?;
        } else {
            // combinatorial safety: more than two common neighbors cannot all
            // lie on collapsed faces
            let common = self.adj[u].intersection(&self.adj[w]).count();
            if common > 2 {
                return Err(GraphError::ContractionUnsafe(format!(
                    "{common} common neighbors"
                )));
            }
        }
        Ok(g)
    }

    fn snapshot_for_undo(&self, removed: &[usize]) -> ContractionRecord {
        let affected: BTreeSet<usize> = removed
            .iter()
            .flat_map(|&x| self.adj[x].iter().copied())
            .chain(removed.iter().copied())
            .collect();
        ContractionRecord {
            merged_from: removed.iter().map(|&x| self.labels[x]).collect(),
            merged_label: self.fresh_label(),
            rows: affected
                .iter()
                .map(|&x| VertexSnapshot {
                    label: self.labels[x],
                    neighbors: self.adj[x].iter().map(|&w| self.labels[w]).collect(),
                    rotation: self
                        .rotation
                        .as_ref()
                        .map(|rot| rot[x].iter().map(|&w| self.labels[w]).collect()),
                })
                .collect(),
        }
    }

    /// Deletes a vertex of degree 4 or 5 and retriangulates the hole with
    /// the given chords.
    pub fn delete_and_retriangulate(
        &self,
        v: usize,
        chords: &[(usize, usize)],
    ) -> Result<PlaneGraph, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange(v));
        }
        let d = self.degree(v);
        if d != 4 && d != 5 {
            return Err(GraphError::BadDegree { vertex: v, degree: d });
        }
        let rot = self.rotation.as_ref().ok_or(GraphError::MissingRotation)?;
        let hole: Vec<usize> = rot[v].clone();
        if chords.len() != d - 3 {
            return Err(GraphError::BadChords(format!(
                "need {} chords for a degree-{d} hole, got {}",
                d - 3,
                chords.len()
            )));
        }
        let pos: BTreeMap<usize, usize> = hole.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        for &(a, b) in chords {
            let (ia, ib) = match (pos.get(&a), pos.get(&b)) {
                (Some(&ia), Some(&ib)) => (ia, ib),
                _ => return Err(GraphError::BadChords(format!("({a},{b}) not on the hole"))),
            };
            let gap = (ia + d - ib) % d;
            if gap == 1 || gap == d - 1 {
                return Err(GraphError::BadChords(format!(
                    "({a},{b}) joins consecutive hole vertices"
                )));
            }
            if self.contains_edge(a, b) {
                return Err(GraphError::BadChords(format!("({a},{b}) already an edge")));
            }
        }
        // chords must triangulate the hole polygon
        let total_tris = {
            let mut cyc_edges = d; // hole boundary
            cyc_edges += chords.len();
            // Euler on the polygon: faces = edges - vertices + 1 (outer excluded)
            cyc_edges - d + 1
        };
        if total_tris != d - 2 {
            return Err(GraphError::BadChords("chords do not triangulate the hole".into()));
        }

        let keep: Vec<usize> = (0..self.n()).filter(|&x| x != v).collect();
        let back: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut g = PlaneGraph::new(keep.len());
        for (i, &x) in keep.iter().enumerate() {
            g.labels[i] = self.labels[x];
            for &w in &self.adj[x] {
                if let Some(&j) = back.get(&w) {
                    g.adj[i].insert(j);
                }
            }
        }
        for &(a, b) in chords {
            g.add_edge(back[&a], back[&b])?;
        }
        // Rotation update: drop v everywhere; at each hole vertex insert the
        // chord partners where v used to sit, ordered by walking the hole from
        // the successor side toward the predecessor side.
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(g.n());
        for &x in &keep {
            let mut r: Vec<usize> = Vec::new();
            for &w in &rot[x] {
                if w != v {
                    r.push(back[&w]);
                    continue;
                }
                // x is on the hole; insert chord partners in hole order
                let ix = pos[&x];
                let mut partners: Vec<(usize, usize)> = chords
                    .iter()
                    .filter_map(|&(a, b)| {
                        if a == x {
                            Some((b, (pos[&b] + d - ix) % d))
                        } else if b == x {
                            Some((a, (pos[&a] + d - ix) % d))
                        } else {
                            None
                        }
                    })
                    .collect();
                partners.sort_by_key(|&(_, dist)| dist);
                for (p, _) in partners {
                    r.push(back[&p]);
                }
            }
            rows.push(r);
        }
        g.set_rotation(rows)?;
        if !g.is_triangulation().is_ok() {
            return Err(GraphError::BadChords("result is not a triangulation".into()));
        }
        Ok(g)
    }

    /// Standard 2-connectivity: at least 3 vertices, connected, no cutvertex.
    pub fn is_two_connected(&self) -> bool {
        let n = self.n();
        if n < 3 || !self.is_connected() {
            return false;
        }
        (0..n).all(|v| {
            let removed: BTreeSet<usize> = [v].into_iter().collect();
            let start = (0..n).find(|&x| x != v).unwrap();
            self.component_of(start, &removed).len() == n - 1
        })
    }
}

#[derive(Clone, Debug)]
pub struct VertexSnapshot {
    pub label: u64,
    pub neighbors: Vec<u64>,
    pub rotation: Option<Vec<u64>>,
}

/// Provenance record for a path contraction; enough to rebuild the original
/// graph from the contracted one.
#[derive(Clone, Debug)]
pub struct ContractionRecord {
    pub merged_from: Vec<u64>,
    pub merged_label: u64,
    rows: Vec<VertexSnapshot>,
}

impl ContractionRecord {
    /// Inverse expansion: restores the original graph from the contracted one.
    pub fn undo(&self, contracted: &PlaneGraph) -> Result<PlaneGraph, GraphError> {
        let merged = contracted.vertex_by_label(self.merged_label)?;
        // labels of the restored graph: contracted minus merged, plus removed
        let mut labels: Vec<u64> = contracted
            .labels
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != merged)
            .map(|(_, &l)| l)
            .collect();
        labels.extend(self.merged_from.iter().copied());
        labels.sort_unstable();
        let index: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let snapshot: BTreeMap<u64, &VertexSnapshot> =
            self.rows.iter().map(|s| (s.label, s)).collect();
        let mut g = PlaneGraph::new(labels.len());
        g.labels = labels.clone();
        // adjacency: snapshotted vertices from the record, others from the
        // contracted graph (their neighborhoods were untouched).
        let mut rows: Vec<Option<Vec<usize>>> = vec![None; g.n()];
        let mut any_rot = false;
        for (i, &l) in labels.iter().enumerate() {
            if let Some(s) = snapshot.get(&l) {
                for nl in &s.neighbors {
                    let j = index[nl];
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
                if let Some(r) = &s.rotation {
                    rows[i] = Some(r.iter().map(|nl| index[nl]).collect());
                    any_rot = true;
                }
            } else {
                let v = contracted.vertex_by_label(l)?;
                for w in contracted.neighbors(v) {
                    let wl = contracted.label(w);
                    if wl == self.merged_label {
                        continue; // covered by snapshots
                    }
                    let j = index[&wl];
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
                if let Some(rot) = contracted.rotation() {
                    rows[i] = Some(
                        rot[v]
                            .iter()
                            .filter(|&&w| contracted.label(w) != self.merged_label)
                            .map(|&w| index[&contracted.label(w)])
                            .collect(),
                    );
                }
            }
        }
        if any_rot {
            let rows: Vec<Vec<usize>> = rows.into_iter().map(|r| r.unwrap_or_default()).collect();
            g.set_rotation(rows)?;
        }
        Ok(g)
    }
}

/// Decomposition into the 4-connected pieces, separating triangles and the
/// tree linking pieces sharing a triangle.
#[derive(Clone, Debug)]
pub struct DecompositionTree {
    pub pieces: Vec<PlaneGraph>,
    /// Separating triangles, as vertex triples of the original graph.
    pub triangles: Vec<[usize; 3]>,
    /// (piece, piece, triangle index)
    pub tree_edges: Vec<(usize, usize, usize)>,
    /// piece vertex index -> original vertex index
    pub piece_maps: Vec<Vec<usize>>,
}

impl DecompositionTree {
    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }

    /// Checks the structural invariants: tree shape, the size identity, and
    /// piece quality (4-connected triangulation or at most 4 vertices).
    pub fn check(&self, n: usize) -> Result<(), String> {
        let t = self.pieces.len();
        if self.tree_edges.len() + 1 != t {
            return Err(format!("{} tree edges for {t} pieces", self.tree_edges.len()));
        }
        let mut uf = UnionFind::new(t);
        for &(a, b, _) in &self.tree_edges {
            if !uf.union(a, b) {
                return Err("tree edges contain a cycle".into());
            }
        }
        let total: usize = self.pieces.iter().map(|p| p.n()).sum();
        if total != n + 3 * (t - 1) {
            return Err(format!("size identity violated: {total} != {n} + 3({t}-1)"));
        }
        for p in &self.pieces {
            if p.n() > 4 {
                if p.is_triangulation().is_err() {
                    return Err("piece is not a triangulation".into());
                }
                if !p.separating_triangles().map_err(|e| format!("{e}"))?.is_empty() {
                    return Err("piece has a separating triangle".into());
                }
            }
        }
        Ok(())
    }

    /// Re-glues the pieces along the shared triangles; the result must be
    /// isomorphic (label-identical) to the decomposed graph.
    pub fn reglue(&self, n: usize) -> PlaneGraph {
        let mut g = PlaneGraph::new(n);
        for (p, map) in self.pieces.iter().zip(&self.piece_maps) {
            for (u, v) in p.edges() {
                g.add_edge(map[u], map[v]).unwrap();
            }
        }
        g
    }
}

#[derive(Clone, Debug)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &'static str, pass: bool, detail: String) {
        self.checks.push(ValidationCheck { name, pass, detail });
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}
