//! Structural tests: embeddings, faces, decomposition, contraction,
//! instance generators.

use std::collections::BTreeSet;

use twocc_core::graph::GraphError;
use twocc_core::instances::{
    self, catalog_small, double_wheel, enumerate_triangulations, even_double_wheel,
    glued_even_double_wheels, icosahedron, isomorphic, k3, k4, octahedron,
    octahedron_replacement, random_triangulation, stacked_chain,
};
use twocc_core::PlaneGraph;

fn assert_triangulation(g: &PlaneGraph) {
    g.is_triangulation().unwrap_or_else(|e| panic!("not a triangulation: {e}"));
    assert_eq!(g.edge_count(), 3 * g.n() - 6);
    let faces = g.faces().unwrap();
    assert_eq!(faces.len(), 2 * g.n() - 4, "Euler face count");
    assert!(faces.iter().all(|f| f.len() == 3));
}

#[test]
fn k4_standard_embedding() {
    assert_triangulation(&k4());
    assert!(k4().separating_triangles().unwrap().is_empty());
}

#[test]
fn k3_two_faces() {
    let g = k3();
    assert_eq!(g.faces().unwrap().len(), 2);
}

#[test]
fn double_wheel_shape() {
    for n in [7, 9, 11, 13] {
        let g = double_wheel(n).unwrap();
        assert_eq!(g.n(), n);
        assert_triangulation(&g);
        assert!(g.separating_triangles().unwrap().is_empty(), "4-connected");
        assert_eq!(g.degree(n - 2), n - 2);
        assert_eq!(g.degree(n - 1), n - 2);
        assert!(!g.contains_edge(n - 2, n - 1), "hubs nonadjacent");
    }
    assert!(double_wheel(6).is_err());
    assert!(double_wheel(5).is_err());
}

#[test]
fn even_double_wheel_is_eulerian() {
    for n in [6, 8, 10, 12] {
        let g = even_double_wheel(n).unwrap();
        assert_triangulation(&g);
        assert!((0..n).all(|v| g.degree(v).is_multiple_of(2)));
    }
    assert!(even_double_wheel(7).is_err());
}

#[test]
fn octahedron_is_even_double_wheel_6() {
    let g = octahedron();
    assert_eq!(g.n(), 6);
    assert!((0..6).all(|v| g.degree(v) == 4));
    assert_triangulation(&g);
}

#[test]
fn icosahedron_shape() {
    let g = icosahedron();
    assert_eq!(g.n(), 12);
    assert!((0..12).all(|v| g.degree(v) == 5));
    assert_triangulation(&g);
    assert!(g.separating_triangles().unwrap().is_empty());
}

#[test]
fn stacked_chain_shape() {
    for t in 1..=6 {
        let g = stacked_chain(t).unwrap();
        assert_eq!(g.n(), t + 3);
        assert_triangulation(&g);
        let d = g.decompose().unwrap();
        assert_eq!(d.piece_count(), t);
        d.check(g.n()).unwrap();
    }
}

#[test]
fn random_triangulation_deterministic_and_valid() {
    for seed in [0u64, 1, 42] {
        for n in [4, 8, 12, 16, 25] {
            let g = random_triangulation(n, seed).unwrap();
            assert_eq!(g.n(), n);
            assert_triangulation(&g);
            let h = random_triangulation(n, seed).unwrap();
            assert_eq!(g.edges(), h.edges());
            assert_eq!(g.rotation(), h.rotation());
        }
    }
    // different seeds usually differ
    let a = random_triangulation(12, 1).unwrap();
    let b = random_triangulation(12, 2).unwrap();
    assert!(a.edges() != b.edges());
}

#[test]
fn glued_wheels_valid() {
    for (n1, n2) in [(6, 6), (6, 8), (8, 10)] {
        let g = glued_even_double_wheels(n1, n2).unwrap();
        assert_eq!(g.n(), n1 + n2 - 3);
        assert_triangulation(&g);
        let d = g.decompose().unwrap();
        assert_eq!(d.piece_count(), 2);
        d.check(g.n()).unwrap();
    }
}

#[test]
fn octahedron_replacement_structure() {
    let h = octahedron();
    let g = octahedron_replacement(&h).unwrap();
    assert_eq!(g.n(), 4 * h.n() - 6);
    assert_triangulation(&g);
    // odd-degree input rejected
    assert!(matches!(
        octahedron_replacement(&k4()),
        Err(instances::InstanceError::NotEulerian)
    ));
}

#[test]
fn octahedron_replacement_partitions_into_octahedra() {
    let h = octahedron();
    let g = octahedron_replacement(&h).unwrap();
    let t = h.edge_count() / 3;
    assert_eq!(t, 4);
    // reconstruct the replaced triangles: new vertices come in consecutive
    // triples h.n() + 3i, each octahedron = one such triple plus the
    // original triangle its members attach to
    let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..t {
        let a2 = h.n() + 3 * i;
        let inner = [a2, a2 + 1, a2 + 2];
        let outer: BTreeSet<usize> = inner
            .iter()
            .flat_map(|&x| g.neighbors(x))
            .filter(|&x| x < h.n())
            .collect();
        assert_eq!(outer.len(), 3);
        let mut verts: Vec<usize> = inner.to_vec();
        verts.extend(&outer);
        // the six vertices induce an octahedron: 12 edges, all degree 4
        let vs: BTreeSet<usize> = verts.iter().copied().collect();
        let (oct, _) = g.induced(&vs);
        assert_eq!(oct.edge_count(), 12);
        assert!((0..6).all(|v| oct.degree(v) == 4));
        for &u in &vs {
            for &v in &vs {
                if u < v && g.contains_edge(u, v) {
                    assert!(covered.insert((u, v)), "edge ({u},{v}) in two octahedra");
                }
            }
        }
    }
    assert_eq!(covered.len(), g.edge_count(), "octahedra partition E(G)");
}

#[test]
fn catalog_and_enumeration_agree() {
    let cat = catalog_small();
    assert_eq!(cat.len(), 5);
    for g in &cat {
        assert_triangulation(g);
    }
    let expected = [(3usize, 1usize), (4, 1), (5, 1), (6, 2)];
    for (n, count) in expected {
        let reps = enumerate_triangulations(n).unwrap();
        assert_eq!(reps.len(), count, "triangulation count for n = {n}");
        let from_cat: Vec<_> = cat.iter().filter(|g| g.n() == n).collect();
        assert_eq!(from_cat.len(), count);
        for g in from_cat {
            assert!(reps.iter().any(|r| isomorphic(r, g)));
        }
    }
}

#[test]
fn contraction_of_double_wheel_rim_path() {
    // contracting a path of three consecutive rim vertices (its common
    // neighbors are exactly the two hubs) yields the next smaller wheel
    let g = double_wheel(9).unwrap();
    let (h, _rec) = g.contract_path(0, 1, 2).unwrap();
    assert_eq!(h.n(), 7);
    h.is_triangulation().unwrap();
    assert!(isomorphic(&h, &double_wheel(7).unwrap()));
}

#[test]
fn contraction_through_octahedron_rejected() {
    // an antipodal path through a degree-4 vertex of the octahedron has a
    // common neighbor outside the path's faces: a genuine parallel edge
    let g = octahedron();
    // vertices 0..3 form the rim; hubs 4, 5. antipodal rim pair 0, 2 via 1
    let r = g.contract_path(0, 1, 2);
    assert!(matches!(r, Err(GraphError::ContractionUnsafe(_))), "{r:?}");
}

#[test]
fn contraction_undo_roundtrip() {
    let g = double_wheel(11).unwrap();
    let (h, rec) = g.contract_path(2, 3, 4).unwrap();
    let back = rec.undo(&h).unwrap();
    assert_eq!(back.edges(), g.edges());
    assert_eq!(back.rotation(), g.rotation());
}

#[test]
fn delete_and_retriangulate_wheel_hub() {
    // deleting a degree-4 rim vertex of the octahedron and adding one
    // chord across the hole restores a triangulation (K4 plus apex = W4?)
    let g = octahedron();
    let h = g.delete_and_retriangulate(0, &[(1, 3)]).unwrap();
    assert_eq!(h.n(), 5);
    h.is_triangulation().unwrap();
}

#[test]
fn separating_triangles_found() {
    let g = stacked_chain(3).unwrap();
    let st = g.separating_triangles().unwrap();
    assert_eq!(st.len(), 2);
    let d = g.decompose().unwrap();
    assert_eq!(d.piece_count(), 3);
    // every piece is K4
    for p in &d.pieces {
        assert!(isomorphic(p, &k4()));
    }
}

#[test]
fn validation_report_flags_problems() {
    let g = double_wheel(7).unwrap();
    assert!(g.validate(true).ok());
    let mut bad = PlaneGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert!(!bad.validate(true).ok());
    bad.add_edge(3, 0).unwrap();
    assert!(!bad.validate(true).ok());
}
