//! Transversal math: the component-count formula, decomposition
//! additivity, U-acyclic certificates, extremal characterization.

use std::collections::BTreeSet;

use rand::rngs::SmallRng;
use rand::SeedableRng;

use twocc_core::coloring::{
    self, apex_recoloring, eulerian_three_coloring, random_proper_coloring, search_coloring,
};
use twocc_core::graph::edge;
use twocc_core::instances::{
    double_wheel, even_double_wheel, glued_even_double_wheels, k4, octahedron, random_triangulation,
    stacked_chain,
};
use twocc_core::transversal::{
    self, characterize_equality, compose_over_decomposition, m_value, min_transversal,
    u_acyclic_transversal, verify_certificate, Bound, EqualityClass,
};
use twocc_core::Coloring;

#[test]
fn octahedron_three_coloring_m_is_n_minus_3() {
    let g = octahedron();
    let phi = eulerian_three_coloring(&g).unwrap().unwrap();
    assert_eq!(m_value(&g, &phi).unwrap(), 3);
}

#[test]
fn rainbow_k4_has_m_zero() {
    let g = k4();
    let phi = Coloring::new(vec![1, 2, 3, 4], 4).unwrap();
    assert_eq!(m_value(&g, &phi).unwrap(), 0);
    let cert = min_transversal(&g, &phi, &BTreeSet::new()).unwrap();
    assert!(cert.edges.is_empty());
}

#[test]
fn eulerian_wheels_exact_values() {
    for n in [6, 8, 10, 12] {
        let g = even_double_wheel(n).unwrap();
        let phi = eulerian_three_coloring(&g).unwrap().unwrap();
        assert_eq!(m_value(&g, &phi).unwrap(), n - 3, "m = n - 3 for 3-colored Eulerian");
        // apex recoloring drops the value to at most n - 5
        for v in 0..n {
            let psi = apex_recoloring(&g, &phi, v).unwrap();
            assert!(m_value(&g, &psi).unwrap() <= n - 5, "n = {n}, apex {v}");
        }
    }
}

#[test]
fn eulerian_bichromatic_subgraphs_two_connected() {
    for n in [6, 8, 10, 12] {
        let g = even_double_wheel(n).unwrap();
        let phi = eulerian_three_coloring(&g).unwrap().unwrap();
        for (i, j) in phi.used_pairs() {
            let (h, _) = coloring::bichromatic_subgraph(&g, &phi, i, j).unwrap();
            assert!(h.is_two_connected(), "G_{i}{j} of n = {n}");
        }
    }
}

#[test]
fn min_transversal_matches_formula_and_kills_cycles() {
    let mut rng = SmallRng::seed_from_u64(11);
    for g in [
        octahedron(),
        double_wheel(9).unwrap(),
        stacked_chain(4).unwrap(),
        random_triangulation(10, 5).unwrap(),
    ] {
        for _ in 0..5 {
            let phi = random_proper_coloring(&g, 5, &mut rng).unwrap();
            let m = m_value(&g, &phi).unwrap();
            let cert = min_transversal(&g, &phi, &BTreeSet::new()).unwrap();
            assert_eq!(cert.size(), m);
            assert!(cert.kills_all);
            let report = verify_certificate(&g, &phi, &cert);
            assert!(report.checks.iter().find(|c| c.name == "kills_all").unwrap().pass);
        }
    }
}

#[test]
fn avoidance_sets_are_respected() {
    // Pick a couple of pair edges as untouchable; the transversal must
    // avoid them and still be minimum.
    let g = double_wheel(9).unwrap();
    let phi = search_coloring(&g, 4, false, 1_000_000).found().unwrap();
    let m = m_value(&g, &phi).unwrap();
    let bichromatic: Vec<_> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| phi.color(u) != phi.color(v))
        .collect();
    let avoid: BTreeSet<_> = bichromatic.iter().take(2).copied().collect();
    let cert = min_transversal(&g, &phi, &avoid).unwrap();
    assert_eq!(cert.size(), m, "avoidance forests never cost extra");
    assert!(avoid.iter().all(|e| !cert.edges.contains(e)));
}

#[test]
fn cyclic_avoidance_rejected() {
    let g = octahedron();
    let phi = eulerian_three_coloring(&g).unwrap().unwrap();
    // a full bichromatic 4-cycle cannot be avoided
    let cyc = coloring::two_colored_cycle(&g, &phi).unwrap().unwrap();
    let avoid: BTreeSet<_> = (0..cyc.len())
        .map(|i| edge(cyc[i], cyc[(i + 1) % cyc.len()]))
        .collect();
    assert!(min_transversal(&g, &phi, &avoid).is_err());
}

#[test]
fn additivity_over_decomposition() {
    let mut rng = SmallRng::seed_from_u64(3);
    for g in [
        stacked_chain(1).unwrap(),
        stacked_chain(3).unwrap(),
        stacked_chain(5).unwrap(),
        glued_even_double_wheels(6, 8).unwrap(),
        random_triangulation(14, 9).unwrap(),
    ] {
        for _ in 0..10 {
            let phi = random_proper_coloring(&g, 5, &mut rng).unwrap();
            let (total, parts) = compose_over_decomposition(&g, &phi).unwrap();
            assert_eq!(total, m_value(&g, &phi).unwrap());
            assert_eq!(total, parts.iter().sum::<usize>());
        }
    }
}

#[test]
fn u_acyclic_certificates_on_double_wheels() {
    for n in [7, 9, 11, 13] {
        let g = double_wheel(n).unwrap();
        let phi = search_coloring(&g, 4, false, 10_000_000).found().unwrap();
        let cert = u_acyclic_transversal(&g, &phi, &BTreeSet::new()).unwrap();
        assert!(cert.passes(), "n = {n}: {cert:?}");
        assert!(cert.optimal);
        assert_eq!(cert.size(), m_value(&g, &phi).unwrap());
        // 4-connected, 4 colors used: the sharper n - 5 bound applies
        if phi.used().len() == 4 {
            assert!(matches!(cert.bound, Bound::NMinus5(_)));
            assert!(cert.size() <= n - 5);
        }
    }
}

#[test]
fn u_acyclic_with_vertex_sets() {
    let g = double_wheel(9).unwrap();
    let phi = search_coloring(&g, 4, false, 10_000_000).found().unwrap();
    // U must span a clique; take an edge and a triangle
    let e = g.edges()[0];
    for u_set in [
        BTreeSet::from([e.0]),
        BTreeSet::from([e.0, e.1]),
        g.triangles()[0].iter().copied().collect::<BTreeSet<_>>(),
    ] {
        let cert = u_acyclic_transversal(&g, &phi, &u_set).unwrap();
        assert!(cert.passes(), "U = {u_set:?}: {cert:?}");
        assert!(cert.optimal);
    }
    // non-clique U rejected
    assert!(u_acyclic_transversal(&g, &phi, &BTreeSet::from([g.n() - 2, g.n() - 1])).is_err());
}

#[test]
fn u_acyclic_on_eulerian_three_colored() {
    for n in [6, 8, 10] {
        let g = even_double_wheel(n).unwrap();
        let phi = eulerian_three_coloring(&g).unwrap().unwrap();
        let cert = u_acyclic_transversal(&g, &phi, &BTreeSet::new()).unwrap();
        assert!(cert.passes());
        assert_eq!(cert.size(), n - 3);
        assert!(matches!(cert.bound, Bound::NMinus3(_)));
    }
}

#[test]
fn equality_characterization() {
    let g = octahedron();
    let phi = eulerian_three_coloring(&g).unwrap().unwrap();
    assert_eq!(characterize_equality(&g, &phi).unwrap(), EqualityClass::EqualsNMinus3);

    let k = k4();
    let rainbow = Coloring::new(vec![1, 2, 3, 4], 4).unwrap();
    assert_eq!(characterize_equality(&k, &rainbow).unwrap(), EqualityClass::EqualsNMinus4);

    // apex-recolored Eulerian wheel drops strictly below n - 4
    let g8 = even_double_wheel(8).unwrap();
    let psi = apex_recoloring(&g8, &eulerian_three_coloring(&g8).unwrap().unwrap(), 0).unwrap();
    assert_eq!(characterize_equality(&g8, &psi).unwrap(), EqualityClass::Below);
}

#[test]
fn characterization_agrees_with_m_value() {
    let mut rng = SmallRng::seed_from_u64(21);
    for g in [
        octahedron(),
        k4(),
        stacked_chain(3).unwrap(),
        double_wheel(7).unwrap(),
        random_triangulation(9, 2).unwrap(),
    ] {
        for _ in 0..20 {
            let phi = random_proper_coloring(&g, 5, &mut rng).unwrap();
            let m = m_value(&g, &phi).unwrap();
            let class = characterize_equality(&g, &phi).unwrap();
            let n = g.n();
            match class {
                EqualityClass::EqualsNMinus3 => assert_eq!(m, n - 3),
                EqualityClass::EqualsNMinus4 => assert_eq!(m, n - 4),
                EqualityClass::Below => assert!(m + 4 < n, "m = {m}, n = {n}"),
            }
        }
    }
}

#[test]
fn certificate_lifting_maps_edges() {
    let g = stacked_chain(3).unwrap();
    let tree = g.decompose().unwrap();
    let piece = &tree.pieces[0];
    let map = &tree.piece_maps[0];
    let phi = random_proper_coloring(piece, 4, &mut SmallRng::seed_from_u64(1)).unwrap();
    let cert = u_acyclic_transversal(piece, &phi, &BTreeSet::new()).unwrap();
    let lifted = transversal::lift_certificate(&cert, map);
    for &(u, v) in &lifted.edges {
        assert!(g.contains_edge(u, v));
    }
}
