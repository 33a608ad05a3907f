//! Generators for the instance families: double wheels, Eulerian double
//! wheels, octahedron replacement, stacked chains, seeded random (stacked)
//! triangulations, the icosahedron, and the isomorph-free catalog of small
//! triangulations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::graph::{GraphError, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceError {
    BadParameter(String),
    Graph(GraphError),
    NotEulerian,
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::BadParameter(s) => write!(f, "bad parameter: {s}"),
            InstanceError::Graph(e) => write!(f, "{e}"),
            InstanceError::NotEulerian => write!(f, "input triangulation is not Eulerian"),
        }
    }
}

impl From<GraphError> for InstanceError {
    fn from(e: GraphError) -> Self {
        InstanceError::Graph(e)
    }
}

/// Generator provenance; regenerating from a descriptor reproduces the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDescriptor {
    pub family: String,
    pub params: Vec<(String, i64)>,
    pub seed: Option<u64>,
    pub version: u32,
}

pub const GENERATOR_VERSION: u32 = 1;

impl InstanceDescriptor {
    pub fn regenerate(&self) -> Result<PlaneGraph, InstanceError> {
        let p = |name: &str| -> Option<i64> {
            self.params.iter().find(|(k, _)| k == name).map(|&(_, v)| v)
        };
        match self.family.as_str() {
            "double-wheel" => double_wheel(p("n").unwrap_or(0) as usize),
            "even-double-wheel" => even_double_wheel(p("n").unwrap_or(0) as usize),
            "stacked-chain" => stacked_chain(p("t").unwrap_or(0) as usize),
            "random" => random_triangulation(p("n").unwrap_or(0) as usize, self.seed.unwrap_or(0)),
            "octahedron" => Ok(octahedron()),
            "icosahedron" => Ok(icosahedron()),
            other => Err(InstanceError::BadParameter(format!("unknown family {other}"))),
        }
    }
}

/// Cycle C_{n-2} joined to two nonadjacent hubs; for odd n >= 7 this is the
/// 4-connected, non-3-colorable extremal family with m_4 = n - 5.
pub fn double_wheel(n: usize) -> Result<PlaneGraph, InstanceError> {
    if n < 7 || n.is_multiple_of(2) {
        return Err(InstanceError::BadParameter(format!(
            "double wheel needs odd n >= 7, got {n}"
        )));
    }
    wheel_graph(n)
}

/// Even rim: an Eulerian (all degrees even), 3-colorable triangulation.
pub fn even_double_wheel(n: usize) -> Result<PlaneGraph, InstanceError> {
    if n < 6 || n % 2 == 1 {
        return Err(InstanceError::BadParameter(format!(
            "even double wheel needs even n >= 6, got {n}"
        )));
    }
    wheel_graph(n)
}

fn wheel_graph(n: usize) -> Result<PlaneGraph, InstanceError> {
    let rim = n - 2;
    let (a, b) = (n - 2, n - 1);
    let mut g = PlaneGraph::new(n);
    for i in 0..rim {
        g.add_edge(i, (i + 1) % rim)?;
        g.add_edge(i, a)?;
        g.add_edge(i, b)?;
    }
    let mut rot: Vec<Vec<usize>> = (0..rim)
        .map(|i| vec![(i + rim - 1) % rim, a, (i + 1) % rim, b])
        .collect();
    rot.push((0..rim).rev().collect()); // hub a
    rot.push((0..rim).collect()); // hub b
    g.set_rotation(rot)?;
    Ok(g)
}

pub fn octahedron() -> PlaneGraph {
    even_double_wheel(6).unwrap()
}

/// The icosahedron: two hubs, two pentagonal rims in antiprism position.
pub fn icosahedron() -> PlaneGraph {
    let a = 0usize;
    let b = |i: usize| 1 + (i % 5); // 1..=5
    let c = |i: usize| 6 + (i % 5); // 6..=10
    let z = 11usize;
    let mut g = PlaneGraph::new(12);
    for i in 0..5 {
        g.add_edge(a, b(i)).unwrap();
        g.add_edge(b(i), b(i + 1)).unwrap();
        g.add_edge(c(i), c(i + 1)).unwrap();
        g.add_edge(b(i), c(i)).unwrap();
        g.add_edge(b(i + 1), c(i)).unwrap();
        g.add_edge(z, c(i)).unwrap();
    }
    let mut rot = vec![Vec::new(); 12];
    rot[a] = (0..5).rev().map(b).collect();
    for i in 0..5 {
        rot[b(i)] = vec![a, b(i + 1), c(i), c(i + 4), b(i + 4)];
        rot[c(i)] = vec![b(i), b(i + 1), c(i + 1), z, c(i + 4)];
    }
    rot[z] = (0..5).map(c).collect();
    g.set_rotation(rot).unwrap();
    g
}

/// Inserts a new apex into the oriented face (x, y, z), updating rotation.
fn insert_apex(g: &mut PlaneGraph, face: (usize, usize, usize)) -> usize {
    let (x, y, z) = face;
    let w = g.n();
    let mut rot = g.rotation().cloned().expect("apex insertion needs rotation");
    // rebuild with one more vertex
    let mut h = PlaneGraph::new(w + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v).unwrap();
    }
    for &t in &[x, y, z] {
        h.add_edge(t, w).unwrap();
    }
    // at each corner, insert w between the face predecessor and successor:
    // face (x,y,z) gives succ_x(z) = y, so w slots in after z at x, etc.
    for &(at, after) in &[(x, z), (y, x), (z, y)] {
        let row = &mut rot[at];
        let i = row.iter().position(|&q| q == after).unwrap();
        row.insert(i + 1, w);
    }
    rot.push(vec![x, z, y]);
    h.set_rotation(rot).unwrap();
    *g = h;
    w
}

/// K4 with its standard embedding; faces (0,1,3), (0,2,1), (0,3,2), (1,2,3).
pub fn k4() -> PlaneGraph {
    let mut g =
        PlaneGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    g.set_rotation(vec![
        vec![1, 2, 3],
        vec![0, 3, 2],
        vec![0, 1, 3],
        vec![0, 2, 1],
    ])
    .unwrap();
    g
}

pub fn k3() -> PlaneGraph {
    let mut g = PlaneGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
    g.set_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
    g
}

/// t K4 pieces glued along facial triangles in a path pattern; n = t + 3.
pub fn stacked_chain(t: usize) -> Result<PlaneGraph, InstanceError> {
    if t < 1 {
        return Err(InstanceError::BadParameter("stacked chain needs t >= 1".into()));
    }
    let mut g = k4();
    let mut face = (1, 2, 3);
    for _ in 1..t {
        let w = insert_apex(&mut g, face);
        face = (face.0, face.1, w);
    }
    Ok(g)
}

/// n - 4 seeded uniform apex insertions into K4. Deterministic per seed.
/// Always stacked, never 4-connected.
pub fn random_triangulation(n: usize, seed: u64) -> Result<PlaneGraph, InstanceError> {
    if n < 4 {
        return Err(InstanceError::BadParameter("random triangulation needs n >= 4".into()));
    }
    let mut rng = SmallRng::seed_from_u64(seed);
    let mut g = k4();
    let mut faces: Vec<(usize, usize, usize)> =
        vec![(0, 1, 3), (0, 2, 1), (0, 3, 2), (1, 2, 3)];
    for _ in 4..n {
        let i = rng.gen_range(0..faces.len());
        let (x, y, z) = faces.swap_remove(i);
        let w = insert_apex(&mut g, (x, y, z));
        faces.push((x, y, w));
        faces.push((y, z, w));
        faces.push((z, x, w));
    }
    Ok(g)
}

/// Replaces each triangle of one face-color class of an Eulerian
/// triangulation by an octahedron. The edge set of the result partitions
/// into |E(H)|/3 octahedra and |V| = 4|V(H)| - 6.
pub fn octahedron_replacement(h: &PlaneGraph) -> Result<PlaneGraph, InstanceError> {
    h.is_triangulation()?;
    if (0..h.n()).any(|v| h.degree(v) % 2 == 1) {
        return Err(InstanceError::NotEulerian);
    }
    let faces = h.faces()?;
    // 2-color the faces across shared edges; the dual of an Eulerian
    // triangulation is bipartite.
    let mut owner: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (f, face) in faces.iter().enumerate() {
        for i in 0..face.len() {
            let (u, v) = (face[i], face[(i + 1) % face.len()]);
            owner.entry((u.min(v), u.max(v))).or_default().push(f);
        }
    }
    let mut side = vec![usize::MAX; faces.len()];
    side[0] = 0;
    let mut stack = vec![0usize];
    while let Some(f) = stack.pop() {
        let face = &faces[f];
        for i in 0..face.len() {
            let (u, v) = (face[i], face[(i + 1) % face.len()]);
            for &g2 in &owner[&(u.min(v), u.max(v))] {
                if g2 == f {
                    continue;
                }
                if side[g2] == usize::MAX {
                    side[g2] = 1 - side[f];
                    stack.push(g2);
                } else if side[g2] == side[f] {
                    return Err(InstanceError::NotEulerian);
                }
            }
        }
    }
    let class: Vec<usize> = (0..faces.len()).filter(|&f| side[f] == 0).collect();
    debug_assert_eq!(class.len() * 3, h.edge_count());

    let mut g = PlaneGraph::new(h.n() + 3 * class.len());
    for (u, v) in h.edges() {
        g.add_edge(u, v)?;
    }
    let mut rot = h.rotation().cloned().unwrap();
    rot.resize(g.n(), Vec::new());
    let mut next = h.n();
    for &f in &class {
        let (a, b, c) = (faces[f][0], faces[f][1], faces[f][2]);
        let (a2, b2, c2) = (next, next + 1, next + 2);
        next += 3;
        for &(u, v) in &[
            (a2, b2),
            (b2, c2),
            (c2, a2),
            (a2, b),
            (a2, c),
            (b2, a),
            (b2, c),
            (c2, a),
            (c2, b),
        ] {
            g.add_edge(u, v)?;
        }
        // rotation splices derived from the seven faces drawn inside (a,b,c)
        splice(&mut rot, a, c, &[b2, c2], b);
        splice(&mut rot, b, a, &[c2, a2], c);
        splice(&mut rot, c, b, &[a2, b2], a);
        rot[a2] = vec![b, c2, b2, c];
        rot[b2] = vec![c, a2, c2, a];
        rot[c2] = vec![b, a, b2, a2];
    }
    g.set_rotation(rot)?;
    Ok(g)
}

/// In rot[at], the consecutive pair (from, to) becomes (from, mid..., to).
fn splice(rot: &mut [Vec<usize>], at: usize, from: usize, mid: &[usize], to: usize) {
    let row = &mut rot[at];
    let i = row.iter().position(|&q| q == from).unwrap();
    debug_assert_eq!(row[(i + 1) % row.len()], to);
    for (off, &m) in mid.iter().enumerate() {
        row.insert(i + 1 + off, m);
    }
}

/// The isomorph-free catalog of plane triangulations with 3 <= n <= 6:
/// K3, K4, the stacked 5-vertex one, the octahedron and the stacked
/// 6-vertex one.
pub fn catalog_small() -> Vec<PlaneGraph> {
    let mut stacked6 = stacked_chain(2).unwrap();
    let _ = insert_apex(&mut stacked6, (1, 2, 4));
    vec![
        k3(),
        k4(),
        stacked_chain(2).unwrap(),
        octahedron(),
        stacked6,
    ]
}

/// Brute enumerator of plane triangulations for n <= 6, up to isomorphism.
/// Candidates are all labeled graphs with 3n-6 edges whose rotation systems
/// (searched exhaustively) admit a spherical embedding with triangular faces.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<PlaneGraph>, InstanceError> {
    if !(3..=6).contains(&n) {
        return Err(InstanceError::BadParameter("enumeration supports 3 <= n <= 6".into()));
    }
    let m = 3 * n - 6;
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut reps: Vec<PlaneGraph> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    enumerate_subsets(&all_pairs, m, 0, &mut chosen, &mut |subset| {
        let edges: Vec<(usize, usize)> = subset.iter().map(|&i| all_pairs[i]).collect();
        let g = PlaneGraph::from_edges(n, &edges).unwrap();
        if !g.is_connected() || (0..n).any(|v| g.degree(v) < 3 && n > 3) {
            return;
        }
        if !embeds_as_triangulation(&g) {
            return;
        }
        if !reps.iter().any(|r| isomorphic(r, &g)) {
            reps.push(g);
        }
    });
    Ok(reps)
}

fn enumerate_subsets(
    pool: &[(usize, usize)],
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == size {
        f(chosen);
        return;
    }
    let need = size - chosen.len();
    for i in start..pool.len() {
        if pool.len() - i < need {
            break;
        }
        chosen.push(i);
        enumerate_subsets(pool, size, i + 1, chosen, f);
        chosen.pop();
    }
}

/// A connected simple graph with 3n - 6 edges is a triangulation exactly
/// when it is planar (it is then maximal planar). With n <= 6 the only
/// possible Kuratowski subdivisions are a K3,3 subgraph, a K5 subgraph,
/// or K5 with a single edge subdivided through the sixth vertex, so a
/// direct check settles planarity.
fn embeds_as_triangulation(g: &PlaneGraph) -> bool {
    let n = g.n();
    if n <= 5 {
        // only K5 itself is nonplanar here and it has too many edges
        return true;
    }
    // K3,3 subgraph: every 3|3 split of a 6-subset
    let verts: Vec<usize> = (0..n).collect();
    let mut six = Vec::new();
    let mut found = false;
    choose(&verts, 6, 0, &mut six, &mut |s| {
        found |= has_k33(g, s);
    });
    if found {
        return false;
    }
    // K5 subgraph or K5 with one subdivided edge
    let mut five = Vec::new();
    choose(&verts, 5, 0, &mut five, &mut |s| {
        let missing: Vec<(usize, usize)> = s
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| s[i + 1..].iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| !g.contains_edge(u, v))
            .collect();
        match missing.len() {
            0 => found = true,
            1 => {
                let (u, v) = missing[0];
                if (0..n).any(|w| !s.contains(&w) && g.contains_edge(w, u) && g.contains_edge(w, v))
                {
                    found = true;
                }
            }
            _ => {}
        }
    });
    !found
}

fn choose(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..pool.len() {
        if pool.len() - i < k - cur.len() {
            break;
        }
        cur.push(pool[i]);
        choose(pool, k, i + 1, cur, f);
        cur.pop();
    }
}

fn has_k33(g: &PlaneGraph, six: &[usize]) -> bool {
    // try all 3|3 splits with six[0] on the left
    let rest = &six[1..];
    let mut pair = Vec::new();
    let mut hit = false;
    choose(rest, 2, 0, &mut pair, &mut |p| {
        let left = [six[0], p[0], p[1]];
        let right: Vec<usize> = rest.iter().copied().filter(|v| !p.contains(v)).collect();
        if left.iter().all(|&u| right.iter().all(|&v| g.contains_edge(u, v))) {
            hit = true;
        }
    });
    hit
}

/// Brute-force graph isomorphism, fine for n <= 8.
pub fn isomorphic(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; a.n()];
    let mut used = vec![false; b.n()];
    extend_iso(a, b, &mut map, &mut used, 0)
}

fn extend_iso(
    a: &PlaneGraph,
    b: &PlaneGraph,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    v: usize,
) -> bool {
    if v == a.n() {
        return true;
    }
    for w in 0..b.n() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let ok = (0..v).all(|x| a.contains_edge(x, v) == b.contains_edge(map[x], w));
        if ok {
            map[v] = w;
            used[w] = true;
            if extend_iso(a, b, map, used, v + 1) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
    }
    false
}

/// Two even double wheels glued along a facial triangle; exercises the
/// decomposition additivity on a two-piece tree.
pub fn glued_even_double_wheels(n1: usize, n2: usize) -> Result<PlaneGraph, InstanceError> {
    let g1 = even_double_wheel(n1)?;
    let g2 = even_double_wheel(n2)?;
    let f1 = g1.faces()?;
    let f2 = g2.faces()?;
    // glue a face of g2 onto a face of g1 (identify the triangles)
    let t1 = &f1[0];
    let t2 = &f2[0];
    let mut g = PlaneGraph::new(n1 + n2 - 3);
    for (u, v) in g1.edges() {
        g.add_edge(u, v)?;
    }
    let mut map2 = vec![usize::MAX; n2];
    for i in 0..3 {
        map2[t2[i]] = t1[i];
    }
    let mut next = n1;
    for m in map2.iter_mut() {
        if *m == usize::MAX {
            *m = next;
            next += 1;
        }
    }
    for (u, v) in g2.edges() {
        g.add_edge(map2[u], map2[v])?;
    }
    // rotation: inside g2's face t2 we embed the rest of g2; splice each
    // identified vertex's rotation at the glued corner.
    let rot1 = g1.rotation().unwrap();
    let rot2 = g2.rotation().unwrap();
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    rot[..n1].clone_from_slice(&rot1[..n1]);
    for v in 0..n2 {
        let mv = map2[v];
        if mv >= n1 {
            // the second wheel fills the inside of g1's face, so its
            // embedding flips orientation: reverse every interior row
            rot[mv] = rot2[v].iter().rev().map(|&w| map2[w]).collect();
        }
    }
    // face t1 of g1 is traced (t1[0], t1[1], t1[2]); face t2 of g2 likewise.
    // Insert g2's extra neighbors of each glued corner into the corner gap,
    // reversing the orientation so the two embeddings nest.
    for i in 0..3 {
        let v2 = t2[i];
        let at = t1[i];
        let prev2 = t2[(i + 2) % 3];
        let next2 = t2[(i + 1) % 3];
        let row2 = &rot2[v2];
        let len = row2.len();
        let p = row2.iter().position(|&q| q == next2).unwrap();
        // walk from next2 to prev2, collecting the strict interior
        let mut interior = Vec::new();
        let mut q = (p + 1) % len;
        while row2[q] != prev2 {
            interior.push(map2[row2[q]]);
            q = (q + 1) % len;
        }
        interior.reverse();
        // insert after the corner's face predecessor in g1: succ_at(prev1) = next1
        let prev1 = t1[(i + 2) % 3];
        let row = &mut rot[at];
        let ip = row.iter().position(|&q2| q2 == prev1).unwrap();
        for (off, &w) in interior.iter().enumerate() {
            row.insert(ip + 1 + off, w);
        }
    }
    g.set_rotation(rot)?;
    Ok(g)
}
