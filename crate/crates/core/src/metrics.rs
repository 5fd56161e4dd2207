//! Exact closeness centrality, mean distance, and betweenness centrality.
//!
//! Closeness of a vertex is (n−1) over its transmission Σ_w d(v,w); the graph
//! value is the vertex average. Mean distance averages over ordered pairs.
//! Betweenness sums σ_st(v)/σ_st over unordered pairs {s,t} with s,t ≠ v,
//! the convention under which C̄_B = (n−1)(l̄−1)/2 holds exactly.

use num::bigint::BigInt;
use num::{BigUint, One, Zero};

use crate::graph::{DistanceMatrix, Graph};
use crate::rational::{self, Rational};
use crate::{Error, Result};

/// Transmission, per-vertex and graph closeness, mean distance, and the
/// transmission-regularity flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosenessProfile {
    pub transmission: Vec<u64>,
    pub closeness: Vec<Rational>,
    pub graph_closeness: Rational,
    pub mean_distance: Rational,
    pub transmission_regular: bool,
}

/// Per-vertex and graph betweenness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetweennessProfile {
    pub betweenness: Vec<Rational>,
    pub graph_betweenness: Rational,
}

/// Both profiles of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralityProfile {
    pub closeness: ClosenessProfile,
    pub betweenness: BetweennessProfile,
}

fn require_connected(dm: &DistanceMatrix) -> Result<()> {
    if dm.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

pub fn closeness_profile(g: &Graph, dm: &DistanceMatrix) -> Result<ClosenessProfile> {
    require_connected(dm)?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::SingleVertex);
    }
    let transmission: Vec<u64> = (0..n).map(|v| dm.transmission(v)).collect();
    let closeness: Vec<Rational> = transmission
        .iter()
        .map(|&t| rational::ratio_u(n as u64 - 1, t))
        .collect();
    let graph_closeness =
        closeness.iter().sum::<Rational>() / rational::uint(n as u64);
    let mean_distance = mean_distance(dm)?;
    let transmission_regular = transmission.iter().all(|&t| t == transmission[0]);
    Ok(ClosenessProfile {
        transmission,
        closeness,
        graph_closeness,
        mean_distance,
        transmission_regular,
    })
}

/// Average distance over ordered vertex pairs, exactly.
pub fn mean_distance(dm: &DistanceMatrix) -> Result<Rational> {
    require_connected(dm)?;
    let n = dm.dimension() as u64;
    if n < 2 {
        return Err(Error::SingleVertex);
    }
    let total: u64 = (0..dm.dimension()).map(|v| dm.transmission(v)).sum();
    Ok(rational::ratio_u(total, n * (n - 1)))
}

/// Brandes-style single-source dependency accumulation with exact rational
/// dependencies and arbitrary-precision path counts.
pub fn betweenness_profile(g: &Graph, dm: &DistanceMatrix) -> Result<BetweennessProfile> {
    require_connected(dm)?;
    let n = g.vertex_count();
    let mut score: Vec<Rational> = vec![Rational::zero(); n];

    for s in 0..n {
        accumulate_from_source(g, dm.row(s), s, &mut score);
    }
    // each unordered pair {s,t} was accumulated from both endpoints
    let half = rational::ratio(1, 2);
    for b in &mut score {
        *b *= &half;
    }
    let graph_betweenness = if n == 0 {
        Rational::zero()
    } else {
        score.iter().sum::<Rational>() / rational::uint(n as u64)
    };
    Ok(BetweennessProfile {
        betweenness: score,
        graph_betweenness,
    })
}

fn accumulate_from_source(g: &Graph, dist: &[u32], s: usize, score: &mut [Rational]) {
    let n = g.vertex_count();
    // vertices in non-decreasing distance order (bucketed BFS order)
    let max_d = dist.iter().copied().max().unwrap_or(0) as usize;
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_d + 1];
    for v in 0..n {
        buckets[dist[v] as usize].push(v);
    }

    let mut sigma: Vec<BigUint> = vec![BigUint::zero(); n];
    sigma[s] = BigUint::one();
    let order: Vec<usize> = buckets.iter().flatten().copied().collect();
    for &w in order.iter().skip(1) {
        let mut count = BigUint::zero();
        for &v in g.neighbors(w) {
            if dist[v] + 1 == dist[w] {
                count += &sigma[v];
            }
        }
        sigma[w] = count;
    }

    let mut delta: Vec<Rational> = vec![Rational::zero(); n];
    for &w in order.iter().rev() {
        if w == s {
            continue;
        }
        // (1 + δ(w)) / σ(w), multiplied by σ(v) for each predecessor v
        let coeff = (Rational::one() + &delta[w])
            / Rational::from_integer(BigInt::from(sigma[w].clone()));
        for &v in g.neighbors(w) {
            if dist[v] + 1 == dist[w] {
                delta[v] += &coeff * Rational::from_integer(BigInt::from(sigma[v].clone()));
            }
        }
        score[w] += &delta[w];
    }
}

pub fn centrality_profile(g: &Graph, dm: &DistanceMatrix) -> Result<CentralityProfile> {
    Ok(CentralityProfile {
        closeness: closeness_profile(g, dm)?,
        betweenness: betweenness_profile(g, dm)?,
    })
}

/// C̄_B − (n−1)(l̄−1)/2, which is exactly zero on every connected graph.
pub fn gago_residual(profile: &CentralityProfile, n: usize) -> Rational {
    let expected = rational::uint(n as u64 - 1)
        * (profile.closeness.mean_distance.clone() - Rational::one())
        / rational::int(2);
    profile.betweenness.graph_betweenness.clone() - expected
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_family, random_connected_gnp, FamilySpec};
    use crate::graph::distance_matrix;
    use crate::rational::ratio;

    fn profile_of(spec: FamilySpec) -> (usize, CentralityProfile) {
        let g = make_family(&spec).unwrap();
        let dm = distance_matrix(&g);
        (g.vertex_count(), centrality_profile(&g, &dm).unwrap())
    }

    #[test]
    fn closeness_of_complete_graph_is_one() {
        let (_, p) = profile_of(FamilySpec::Complete { n: 4 });
        assert!(p.closeness.closeness.iter().all(|c| *c == ratio(1, 1)));
        assert_eq!(p.closeness.graph_closeness, ratio(1, 1));
        assert!(p.closeness.transmission_regular);
    }

    #[test]
    fn closeness_of_p3() {
        let (_, p) = profile_of(FamilySpec::Path { n: 3 });
        assert_eq!(
            p.closeness.closeness,
            vec![ratio(2, 3), ratio(1, 1), ratio(2, 3)]
        );
        assert_eq!(p.closeness.graph_closeness, ratio(7, 9));
        assert!(!p.closeness.transmission_regular);
    }

    #[test]
    fn closeness_of_c5() {
        let (_, p) = profile_of(FamilySpec::Cycle { n: 5 });
        assert_eq!(p.closeness.graph_closeness, ratio(2, 3));
        assert!(p.closeness.transmission_regular);
    }

    #[test]
    fn closeness_rejects_k1_and_disconnected() {
        let g = make_family(&FamilySpec::Path { n: 1 }).unwrap();
        let dm = distance_matrix(&g);
        assert!(matches!(
            closeness_profile(&g, &dm),
            Err(Error::SingleVertex)
        ));
        let h = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let dm = distance_matrix(&h);
        assert!(matches!(
            closeness_profile(&h, &dm),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn mean_distance_examples() {
        for n in [3usize, 5, 8] {
            let g = make_family(&FamilySpec::Complete { n }).unwrap();
            assert_eq!(mean_distance(&distance_matrix(&g)).unwrap(), ratio(1, 1));
        }
        let g = make_family(&FamilySpec::Path { n: 4 }).unwrap();
        assert_eq!(mean_distance(&distance_matrix(&g)).unwrap(), ratio(5, 3));
    }

    #[test]
    fn mean_distance_of_paths_closed_form() {
        // l̄(P_n) = (n+1)/3, checked against the BFS route for n <= 50
        for n in 2..=50 {
            let g = make_family(&FamilySpec::Path { n }).unwrap();
            let got = mean_distance(&distance_matrix(&g)).unwrap();
            assert_eq!(got, ratio(n as i64 + 1, 3), "P_{n}");
        }
    }

    #[test]
    fn betweenness_examples() {
        let (_, p) = profile_of(FamilySpec::Complete { n: 6 });
        assert!(p.betweenness.betweenness.iter().all(|b| b.is_zero()));

        let (_, p) = profile_of(FamilySpec::Path { n: 3 });
        assert_eq!(
            p.betweenness.betweenness,
            vec![Rational::zero(), ratio(1, 1), Rational::zero()]
        );
        assert_eq!(p.betweenness.graph_betweenness, ratio(1, 3));

        let (_, p) = profile_of(FamilySpec::Cycle { n: 4 });
        assert!(p.betweenness.betweenness.iter().all(|b| *b == ratio(1, 2)));
    }

    #[test]
    fn gago_residual_is_zero() {
        for spec in [
            FamilySpec::Path { n: 3 },
            FamilySpec::Complete { n: 7 },
            FamilySpec::Cycle { n: 9 },
            FamilySpec::Star { leaves: 5 },
            FamilySpec::Hypercube { k: 3 },
        ] {
            let (n, p) = profile_of(spec);
            assert!(gago_residual(&p, n).is_zero(), "{spec}");
        }
        let g = random_connected_gnp(20, 0.3, 42).unwrap();
        let dm = distance_matrix(&g);
        let p = centrality_profile(&g, &dm).unwrap();
        assert!(gago_residual(&p, 20).is_zero());
    }

    #[test]
    fn duality_inequality_spot_checks() {
        // l̄ · C̄_C >= 1, equality exactly for transmission-regular graphs
        for (spec, expect_equal) in [
            (FamilySpec::Cycle { n: 6 }, true),
            (FamilySpec::Complete { n: 5 }, true),
            (FamilySpec::Hypercube { k: 3 }, true),
            (FamilySpec::Path { n: 4 }, false),
            (FamilySpec::Star { leaves: 3 }, false),
        ] {
            let (_, p) = profile_of(spec);
            let product = p.closeness.mean_distance.clone() * p.closeness.graph_closeness.clone();
            assert!(product >= ratio(1, 1), "{spec}");
            assert_eq!(product == ratio(1, 1), expect_equal, "{spec}");
            assert_eq!(p.closeness.transmission_regular, expect_equal, "{spec}");
        }
    }
}
