//! Randomized invariants over the generator families.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::SmallRng;
use rand::SeedableRng;

use twocc_core::coloring::{self, random_proper_coloring};
use twocc_core::instances::{double_wheel, random_triangulation};
use twocc_core::oracle::{brute_m, Limits};
use twocc_core::transversal::{m_value, min_transversal, u_acyclic_transversal};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_triangulations_are_triangulations(n in 4usize..36, seed in 0u64..1000) {
        let g = random_triangulation(n, seed).unwrap();
        prop_assert!(g.is_triangulation().is_ok());
        prop_assert_eq!(g.edge_count(), 3 * n - 6);
        prop_assert_eq!(g.faces().unwrap().len(), 2 * n - 4);
    }

    #[test]
    fn decomposition_size_identity(n in 5usize..26, seed in 0u64..500) {
        let g = random_triangulation(n, seed).unwrap();
        let tree = g.decompose().unwrap();
        tree.check(n).map_err(TestCaseError::fail)?;
        let total: usize = tree.pieces.iter().map(|p| p.n()).sum();
        prop_assert_eq!(total, n + 3 * (tree.piece_count() - 1));
    }

    #[test]
    fn edge_partition_covers(n in 4usize..20, seed in 0u64..500, cseed in 0u64..100) {
        let g = random_triangulation(n, seed).unwrap();
        let mut rng = SmallRng::seed_from_u64(cseed);
        let phi = random_proper_coloring(&g, 5, &mut rng).unwrap();
        let sizes = coloring::edge_partition_sizes(&g, &phi);
        prop_assert_eq!(sizes.values().sum::<usize>(), g.edge_count());
        prop_assert!(coloring::monochrome_edge(&g, &phi).is_none());
    }

    #[test]
    fn formula_matches_brute_force(n in 4usize..9, seed in 0u64..300, cseed in 0u64..50) {
        let g = random_triangulation(n, seed).unwrap();
        let mut rng = SmallRng::seed_from_u64(cseed);
        let phi = random_proper_coloring(&g, 5, &mut rng).unwrap();
        let fast = m_value(&g, &phi).unwrap();
        let slow = brute_m(&g, &phi, &Limits::default()).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn min_transversal_certificates(n in 4usize..16, seed in 0u64..300, cseed in 0u64..50) {
        let g = random_triangulation(n, seed).unwrap();
        let mut rng = SmallRng::seed_from_u64(cseed);
        let phi = random_proper_coloring(&g, 5, &mut rng).unwrap();
        let cert = min_transversal(&g, &phi, &BTreeSet::new()).unwrap();
        prop_assert!(cert.kills_all);
        prop_assert_eq!(cert.size(), m_value(&g, &phi).unwrap());
    }

    #[test]
    fn u_acyclic_always_verifies(n in 4usize..13, seed in 0u64..200, cseed in 0u64..50) {
        let g = random_triangulation(n, seed).unwrap();
        let mut rng = SmallRng::seed_from_u64(cseed);
        let phi = random_proper_coloring(&g, 5, &mut rng).unwrap();
        let tri = g.triangles()[0];
        let u: BTreeSet<usize> = tri.iter().copied().collect();
        let cert = u_acyclic_transversal(&g, &phi, &u).unwrap();
        prop_assert!(cert.kills_all && cert.forest && cert.no_u_path);
        prop_assert!(cert.optimal);
    }

    #[test]
    fn wheel_contraction_roundtrip(idx in 0usize..7, n_half in 4usize..7) {
        let n = 2 * n_half + 1; // odd, 9..13
        let g = double_wheel(n).unwrap();
        let rim = n - 2;
        let (v1, v, v3) = (idx % rim, (idx + 1) % rim, (idx + 2) % rim);
        let (h, rec) = g.contract_path(v1, v, v3).unwrap();
        prop_assert!(h.is_triangulation().is_ok());
        let back = rec.undo(&h).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.rotation(), g.rotation());
    }
}
