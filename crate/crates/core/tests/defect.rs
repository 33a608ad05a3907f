//! Deletion-and-recoloring pipeline: stage bounds, verification, and
//! agreement with oracles on small cases.

use std::collections::BTreeSet;

use twocc_core::coloring::{search_coloring, two_colored_cycle};
use twocc_core::defect::{
    complete_to_triangulation, defect_bounds, reduce_to_four, reduce_to_three, DefectError,
};
use twocc_core::graph::PlaneGraph;
use twocc_core::instances::{
    double_wheel, icosahedron, k3, k4, octahedron, random_triangulation,
};
use twocc_core::oracle::{brute_m_prime, Limits};
use twocc_core::Coloring;

const BUDGET: u64 = 500_000_000;

fn floor_bound(num: i64, den: i64) -> usize {
    (num / den).max(0) as usize
}

#[test]
fn k4_needs_no_deletions() {
    let g = k4();
    let (r4, r3) = defect_bounds(&g, None, BUDGET).unwrap();
    assert!(r4.deleted.is_empty());
    assert!(r4.met);
    assert!(r3.met);
    // bound for K3-sized palettes still sound
    r4.verify(&g).unwrap();
    r3.verify(&g).unwrap();
}

#[test]
fn k4_rainbow_input_keeps_coloring() {
    // acyclic 5-coloring of K4 leaving class 5 empty: stage one deletes
    // nothing and keeps the coloring (up to renaming)
    let g = k4();
    let phi5 = Coloring::new(vec![1, 2, 3, 4], 5).unwrap();
    let r4 = reduce_to_four(&g, &phi5).unwrap();
    assert!(r4.deleted.is_empty());
    assert_eq!(r4.coloring.palette(), 4);
    assert_eq!(r4.coloring.used().len(), 4);
}

#[test]
fn k3_to_three_colors_trivially() {
    let g = k3();
    let phi4 = Coloring::new(vec![1, 2, 3], 4).unwrap();
    let r3 = reduce_to_three(&g, &phi4, &BTreeSet::new()).unwrap();
    assert!(r3.deleted.is_empty());
}

#[test]
fn octahedron_pipeline_exact() {
    let g = octahedron();
    let (r4, r3) = defect_bounds(&g, None, BUDGET).unwrap();
    // the octahedron is not acyclically 4-colorable, so at least one edge
    // goes; the bound (3n-12)/5 = 6/5 allows exactly one
    assert_eq!(r4.deleted.len(), 1);
    assert!(r4.met);
    assert_eq!(brute_m_prime(&g, 4, &Limits::default()).unwrap(), 1);
    // cumulative stage-two bound (13n-42)/10 = 3.6
    assert!(r3.deleted.len() <= 3);
    assert!(r3.met);
}

#[test]
fn icosahedron_pipeline_meets_bounds() {
    let g = icosahedron();
    let (r4, r3) = defect_bounds(&g, None, BUDGET).unwrap();
    assert!(r4.deleted.len() <= floor_bound(3 * 12 - 12, 5), "|E'| <= 4");
    assert!(r3.deleted.len() <= floor_bound(13 * 12 - 42, 10), "|E''| <= 11");
    assert!(r4.met && r3.met);
    for r in [&r4, &r3] {
        let kept: Vec<_> = g.edges().into_iter().filter(|e| !r.deleted.contains(e)).collect();
        let h = PlaneGraph::from_edges(g.n(), &kept).unwrap();
        assert!(two_colored_cycle(&h, &r.coloring).unwrap().is_none());
    }
}

#[test]
fn double_wheel_pipeline() {
    let g = double_wheel(9).unwrap();
    let (r4, r3) = defect_bounds(&g, None, BUDGET).unwrap();
    assert!(r4.met && r3.met);
    r4.verify(&g).unwrap();
    r3.verify(&g).unwrap();
}

#[test]
fn random_triangulations_meet_bounds() {
    for seed in [0u64, 1, 2] {
        for n in [12, 14, 16] {
            let g = random_triangulation(n, seed).unwrap();
            let (r4, r3) = defect_bounds(&g, None, BUDGET).unwrap();
            assert!(r4.met, "n = {n}, seed = {seed}");
            assert!(r3.met, "n = {n}, seed = {seed}");
        }
    }
}

#[test]
fn non_acyclic_input_rejected() {
    let g = octahedron();
    // proper 3-coloring inside a 5-palette has bichromatic 4-cycles
    let phi = twocc_core::coloring::eulerian_three_coloring(&g).unwrap().unwrap();
    let phi5 = Coloring::new(phi.colors().to_vec(), 5).unwrap();
    assert!(matches!(reduce_to_four(&g, &phi5), Err(DefectError::NotAcyclic(_))));
}

#[test]
fn completion_fills_quadrilateral_faces() {
    let mut g = octahedron();
    g.remove_edge(0, 1);
    assert!(g.is_triangulation().is_err());
    let t = complete_to_triangulation(&g).unwrap();
    t.is_triangulation().unwrap();
    assert_eq!(t.n(), g.n());
    // completion edges never show up among reported deletions
    let (r4, r3) = defect_bounds(&g, None, BUDGET).unwrap();
    for r in [&r4, &r3] {
        assert!(r.deleted.iter().all(|&(u, v)| g.contains_edge(u, v)));
        r.verify(&g).unwrap();
    }
}

#[test]
fn supplied_five_coloring_is_honored() {
    let g = icosahedron();
    let phi5 = search_coloring(&g, 5, true, BUDGET).found().unwrap();
    let (r4, _r3) = defect_bounds(&g, Some(&phi5), BUDGET).unwrap();
    assert_eq!(r4.source, "five-coloring reduction");
}

#[test]
fn monotone_sandwich_on_catalog() {
    // constructed |E'| can never beat the brute optimum
    let lim = Limits::default();
    for g in twocc_core::instances::catalog_small() {
        if g.n() < 4 {
            continue;
        }
        let (r4, r3) = defect_bounds(&g, None, BUDGET).unwrap();
        assert!(r4.deleted.len() >= brute_m_prime(&g, 4, &lim).unwrap());
        assert!(r3.deleted.len() >= brute_m_prime(&g, 3, &lim).unwrap());
    }
}
