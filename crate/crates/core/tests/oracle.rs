//! Brute-force oracles against the formula-based fast paths.

use std::collections::BTreeSet;

use rand::rngs::SmallRng;
use rand::SeedableRng;

use twocc_core::coloring::{eulerian_three_coloring, random_proper_coloring, search_coloring};
use twocc_core::instances::{
    catalog_small, double_wheel, even_double_wheel, k4, octahedron, random_triangulation,
};
use twocc_core::oracle::{
    self, brute_m, brute_m_dprime, brute_m_k, brute_m_prime, brute_optimal_u_acyclic, Limits,
};
use twocc_core::transversal::{m_value, u_acyclic_transversal};
use twocc_core::Coloring;

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn brute_m_agrees_with_formula() {
    let mut rng = SmallRng::seed_from_u64(17);
    for g in catalog_small() {
        for _ in 0..10 {
            let phi = random_proper_coloring(&g, 5, &mut rng).unwrap();
            assert_eq!(
                brute_m(&g, &phi, &lim()).unwrap(),
                m_value(&g, &phi).unwrap(),
                "graph n = {}",
                g.n()
            );
        }
    }
}

#[test]
fn double_wheel_brute_m4_is_extremal() {
    for n in [7, 9] {
        let g = double_wheel(n).unwrap();
        let m4 = brute_m_k(&g, 4, &lim()).unwrap();
        assert_eq!(m4, Some(n - 5));
    }
}

#[test]
fn even_wheel_brute_m3_is_n_minus_3() {
    for n in [8, 10] {
        let g = even_double_wheel(n).unwrap();
        let lim = Limits::with_max_n(10);
        assert_eq!(brute_m_k(&g, 3, &lim).unwrap(), Some(n - 3));
    }
}

#[test]
fn infeasible_palette_reports_infinity() {
    assert_eq!(brute_m_k(&k4(), 3, &lim()).unwrap(), None);
    assert_eq!(brute_m_k(&double_wheel(7).unwrap(), 3, &lim()).unwrap(), None);
}

#[test]
fn octahedron_sandwich_at_four_colors() {
    let g = octahedron();
    let mk = brute_m_k(&g, 4, &lim()).unwrap().unwrap();
    let mp = brute_m_prime(&g, 4, &lim()).unwrap();
    let md = brute_m_dprime(&g, 4, &lim()).unwrap();
    assert!(mp <= md && md <= mk, "m' = {mp} <= m'' = {md} <= m_k = {mk}");
    assert_eq!((mp, md, mk), (1, 1, 1));
}

#[test]
fn k4_values_all_zero() {
    let g = k4();
    assert_eq!(brute_m_k(&g, 4, &lim()).unwrap(), Some(0));
    assert_eq!(brute_m_prime(&g, 4, &lim()).unwrap(), 0);
    assert_eq!(brute_m_dprime(&g, 4, &lim()).unwrap(), 0);
}

#[test]
fn size_guard_triggers() {
    let g = random_triangulation(12, 0).unwrap();
    assert!(matches!(
        brute_m_k(&g, 4, &Limits::default()),
        Err(oracle::OracleError::GuardExceeded(_))
    ));
    // raising the limit unlocks it (still cheap for a stacked instance)
    assert!(brute_m(&g, &random_proper_coloring(&g, 5, &mut SmallRng::seed_from_u64(0)).unwrap(),
        &Limits { max_n: 12, max_edges: 30, ..Limits::default() }).is_ok());
}

#[test]
fn brute_u_acyclic_matches_constructive_size() {
    for (g, phi) in [
        (octahedron(), eulerian_three_coloring(&octahedron()).unwrap().unwrap()),
        (
            double_wheel(7).unwrap(),
            search_coloring(&double_wheel(7).unwrap(), 4, false, 1_000_000).found().unwrap(),
        ),
        (k4(), Coloring::new(vec![1, 2, 3, 4], 4).unwrap()),
    ] {
        let u: BTreeSet<usize> = BTreeSet::new();
        let witness = brute_optimal_u_acyclic(&g, &phi, &u, &lim()).unwrap();
        let witness = witness.expect("optimal U-acyclic transversal exists");
        let cert = u_acyclic_transversal(&g, &phi, &u).unwrap();
        assert_eq!(witness.len(), cert.size());
        assert_eq!(cert.size(), m_value(&g, &phi).unwrap());
    }
}

#[test]
fn brute_u_acyclic_with_edge_u_set() {
    let g = octahedron();
    let phi = eulerian_three_coloring(&g).unwrap().unwrap();
    let e = g.edges()[0];
    let u: BTreeSet<usize> = BTreeSet::from([e.0, e.1]);
    let witness = brute_optimal_u_acyclic(&g, &phi, &u, &lim()).unwrap();
    assert!(witness.is_some());
    let cert = u_acyclic_transversal(&g, &phi, &u).unwrap();
    assert!(oracle::certificate_matches_brute(&g, &phi, &cert));
}

#[test]
fn chromatic_numbers_of_families() {
    assert_eq!(oracle::brute_chromatic_number(&octahedron(), &lim()).unwrap(), 3);
    assert_eq!(oracle::brute_chromatic_number(&k4(), &lim()).unwrap(), 4);
    assert_eq!(
        oracle::brute_chromatic_number(&double_wheel(7).unwrap(), &lim()).unwrap(),
        4
    );
}
