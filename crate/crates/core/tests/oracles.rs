//! Oracle-equivalence and property tests: every algorithmic route in the
//! library is checked against an independent brute-force route on small
//! graphs.

mod support;

use closebound::bounds::{bridges, detect_class_tags};
use closebound::generators::{make_family, random_connected_gnp, random_tree, FamilySpec};
use closebound::graph::{bfs_distances, distance_matrix, structural_summary, UNREACHABLE};
use closebound::independence::{independence_number, independence_number_with_limit};
use closebound::metrics::{betweenness_profile, centrality_profile, closeness_profile, gago_residual};
use closebound::rational::{int, Rational};
use closebound::spectral::laplacian_spectrum;
use num::Zero;
use proptest::prelude::*;

use support::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bfs_matches_path_enumeration(g in arb_graph(8)) {
        for s in 0..g.vertex_count() {
            let bfs = bfs_distances(&g, s);
            let naive = shortest_by_path_enumeration(&g, s);
            for v in 0..g.vertex_count() {
                match naive[v] {
                    Some(d) => prop_assert_eq!(bfs[v], d),
                    None => prop_assert_eq!(bfs[v], UNREACHABLE),
                }
            }
        }
    }

    #[test]
    fn distance_matrix_is_metric(g in arb_connected_graph(8)) {
        let n = g.vertex_count();
        let dm = distance_matrix(&g);
        prop_assert!(dm.is_connected());
        for u in 0..n {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                for w in 0..n {
                    prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
    }

    #[test]
    fn histograms_are_consistent(g in arb_connected_graph(8)) {
        let n = g.vertex_count();
        let dm = distance_matrix(&g);
        let s = structural_summary(&g, &dm).unwrap();
        for v in 0..n {
            let total: u64 = s.distance_histogram[v].iter().sum();
            prop_assert_eq!(total, n as u64 - 1);
            let weighted: u64 = s.distance_histogram[v]
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as u64 + 1) * c)
                .sum();
            prop_assert_eq!(weighted, dm.transmission(v));
            prop_assert!(s.eccentricities[v] >= s.radius && s.eccentricities[v] <= s.diameter);
        }
        prop_assert!(s.diameter <= 2 * s.radius);
    }

    #[test]
    fn brandes_matches_path_enumeration(g in arb_connected_graph(8)) {
        let dm = distance_matrix(&g);
        let got = betweenness_profile(&g, &dm).unwrap().betweenness;
        let want = betweenness_by_path_enumeration(&g);
        prop_assert_eq!(got, want);
    }

    #[test]
    fn gago_identity_holds(g in arb_connected_graph(8)) {
        let dm = distance_matrix(&g);
        let p = centrality_profile(&g, &dm).unwrap();
        prop_assert!(gago_residual(&p, g.vertex_count()).is_zero());
    }

    #[test]
    fn duality_with_equality_iff_transmission_regular(g in arb_connected_graph(8)) {
        let dm = distance_matrix(&g);
        let p = closeness_profile(&g, &dm).unwrap();
        let product = p.mean_distance.clone() * p.graph_closeness.clone();
        prop_assert!(product >= int(1));
        prop_assert_eq!(product == int(1), p.transmission_regular);
    }

    #[test]
    fn branch_and_bound_matches_subset_oracle(g in arb_graph(10)) {
        let n = g.vertex_count();
        let got = independence_number(&g).unwrap();
        prop_assert_eq!(got.alpha, alpha_by_subset_enumeration(&g));
        // alpha = 1 exactly for complete graphs
        prop_assert_eq!(got.alpha == 1, g.edge_count() == n * (n - 1) / 2);
    }

    #[test]
    fn deleting_a_non_bridge_edge_strictly_lowers_closeness(g in arb_connected_graph(8)) {
        let dm = distance_matrix(&g);
        if g.vertex_count() < 2 {
            return Ok(());
        }
        let before = closeness_profile(&g, &dm).unwrap().graph_closeness;
        let bridge_set = bridges(&g);
        for (u, v) in g.edges() {
            if bridge_set.contains(&(u, v)) {
                continue;
            }
            let h = g.delete_edge(u, v).unwrap();
            let hdm = distance_matrix(&h);
            prop_assert!(hdm.is_connected());
            let after = closeness_profile(&h, &hdm).unwrap().graph_closeness;
            prop_assert!(after < before, "edge ({u},{v})");
        }
    }

    #[test]
    fn spectrum_matches_trace_moments(g in arb_connected_graph(7)) {
        let n = g.vertex_count();
        let sp = laplacian_spectrum(&g);
        let moments = laplacian_trace_moments(&g, n);
        for (k, &want) in moments.iter().enumerate() {
            let got: f64 = sp.eigenvalues.iter().map(|t| t.powi(k as i32)).sum();
            let scale = (want.unsigned_abs() as f64).max(1.0);
            prop_assert!(
                (got - want as f64).abs() <= 1e-6 * scale,
                "k = {}, got {}, want {}",
                k, got, want
            );
        }
    }

    #[test]
    fn random_trees_are_trees(seed in 0u64..1024, n in 2usize..40) {
        let t = random_tree(n, seed).unwrap();
        prop_assert_eq!(t.edge_count(), n - 1);
        prop_assert!(t.is_connected());
        prop_assert!(detect_class_tags(&t).tree);
    }
}

#[test]
fn brandes_matches_enumeration_on_families_up_to_n12() {
    let specs = [
        FamilySpec::Hypercube { k: 3 },
        FamilySpec::CompleteBipartite { m: 5, k: 6 },
        FamilySpec::Wheel { n: 9 },
        FamilySpec::CocktailParty { n: 5 },
        FamilySpec::Crown { n: 6 },
        FamilySpec::CircularLadder { n: 6 },
        FamilySpec::Ladder { n: 6 },
        FamilySpec::Cycle { n: 12 },
        FamilySpec::Path { n: 12 },
        FamilySpec::CompleteMinusEdge { n: 9 },
    ];
    for spec in specs {
        let g = make_family(&spec).unwrap();
        assert!(g.vertex_count() <= 12);
        let dm = distance_matrix(&g);
        let got = betweenness_profile(&g, &dm).unwrap().betweenness;
        let want = betweenness_by_path_enumeration(&g);
        assert_eq!(got, want, "{spec}");
    }
}

#[test]
fn brandes_matches_enumeration_on_random_graphs() {
    for seed in 0..8 {
        let g = random_connected_gnp(11, 0.35, seed).unwrap();
        let dm = distance_matrix(&g);
        let got = betweenness_profile(&g, &dm).unwrap().betweenness;
        let want = betweenness_by_path_enumeration(&g);
        assert_eq!(got, want, "seed {seed}");
    }
}

#[test]
fn sigma_counts_exceed_u64_on_large_hypercubes_without_overflow() {
    // Q_8 antipodal pairs have 8! = 40320 shortest paths; the rational
    // accumulation must stay exact. The Gago identity doubles as the check.
    let g = make_family(&FamilySpec::Hypercube { k: 6 }).unwrap();
    let dm = distance_matrix(&g);
    let p = centrality_profile(&g, &dm).unwrap();
    assert!(gago_residual(&p, g.vertex_count()).is_zero());
}

#[test]
fn alpha_matches_oracle_on_families_up_to_n16() {
    let specs = [
        FamilySpec::Crown { n: 8 },
        FamilySpec::Hypercube { k: 4 },
        FamilySpec::CocktailParty { n: 8 },
        FamilySpec::Wheel { n: 16 },
        FamilySpec::CompleteBipartite { m: 7, k: 9 },
        FamilySpec::CircularLadder { n: 8 },
    ];
    for spec in specs {
        let g = make_family(&spec).unwrap();
        let got = independence_number_with_limit(&g, 64).unwrap().alpha;
        assert_eq!(got, alpha_by_subset_enumeration(&g), "{spec}");
    }
}

#[test]
fn mean_distance_of_path_is_brute_forced_up_to_50() {
    // ordered distance sum of P_n is 2*C(n+1, 3)
    for n in 2u64..=50 {
        let g = make_family(&FamilySpec::Path { n: n as usize }).unwrap();
        let dm = distance_matrix(&g);
        let total: u64 = (0..g.vertex_count()).map(|v| dm.transmission(v)).sum();
        assert_eq!(total, (n + 1) * n * (n - 1) / 3);
    }
}

#[test]
fn cycle_transmissions_match_closed_form() {
    for n in 3u64..=40 {
        let g = make_family(&FamilySpec::Cycle { n: n as usize }).unwrap();
        let dm = distance_matrix(&g);
        for v in 0..n as usize {
            assert_eq!(dm.transmission(v), n * n / 4, "C_{n} vertex {v}");
        }
    }
}

#[test]
fn closeness_profile_values_are_reduced_rationals() {
    let g = random_connected_gnp(16, 0.4, 3).unwrap();
    let dm = distance_matrix(&g);
    let p = closeness_profile(&g, &dm).unwrap();
    for c in &p.closeness {
        let rebuilt = Rational::new(c.numer().clone(), c.denom().clone());
        assert_eq!(&rebuilt, c);
        assert!(c.denom() > &num::BigInt::ZERO);
    }
}
