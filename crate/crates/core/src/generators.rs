//! Deterministic constructors for the twelve supported graph families plus
//! seeded random corpora and a recursive self-complementary construction.
//!
//! Conventions (fixed by the closed-form transmissions, not by any picture):
//! the wheel `W_n` has `n` vertices total, hub 0 plus an `(n−1)`-cycle, and
//! the star `S_n` has `n+1` vertices, center 0 plus `n` leaves.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::{Error, Result};

/// One of the twelve graph families, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Complete graph K_n, n ≥ 1.
    Complete { n: usize },
    /// Cycle C_n, n ≥ 3.
    Cycle { n: usize },
    /// Wheel W_n on n vertices (hub + (n−1)-cycle), n ≥ 4.
    Wheel { n: usize },
    /// Star S_n on n+1 vertices (center + n leaves), n ≥ 1.
    Star { leaves: usize },
    /// Near-complete graph K_n − e with e = (0, 1), n ≥ 3.
    CompleteMinusEdge { n: usize },
    /// Cocktail party graph CP(n) = K_2n minus the perfect matching (2i, 2i+1), n ≥ 2.
    CocktailParty { n: usize },
    /// Complete bipartite K_{m,k}, m, k ≥ 1.
    CompleteBipartite { m: usize, k: usize },
    /// Crown graph S⁰_n = K_{n,n} minus a perfect matching, n ≥ 3.
    Crown { n: usize },
    /// Path P_n with vertices v_0..v_{n−1} in order, n ≥ 1.
    Path { n: usize },
    /// Ladder L_n on 2n vertices: rails u_k = k and v_k = n+k, n ≥ 2.
    Ladder { n: usize },
    /// Circular ladder (prism) CL_n on 2n vertices: two concentric n-cycles
    /// plus rungs, n ≥ 3.
    CircularLadder { n: usize },
    /// Hypercube Q_k on 2^k vertices with binary-index adjacency, 1 ≤ k ≤ 20.
    Hypercube { k: usize },
}

impl FamilySpec {
    /// Vertex and edge counts of the family member, by closed formula.
    /// Total even for out-of-range parameters; [`validate`](Self::validate)
    /// is the gate for those.
    pub fn expected_counts(&self) -> (usize, usize) {
        use FamilySpec::*;
        match *self {
            Complete { n } => (n, n * n.saturating_sub(1) / 2),
            Cycle { n } => (n, n),
            Wheel { n } => (n, 2 * n.saturating_sub(1)),
            Star { leaves } => (leaves + 1, leaves),
            CompleteMinusEdge { n } => (n, (n * n.saturating_sub(1) / 2).saturating_sub(1)),
            CocktailParty { n } => (2 * n, 2 * n * n.saturating_sub(1)),
            CompleteBipartite { m, k } => (m + k, m * k),
            Crown { n } => (2 * n, n * n.saturating_sub(1)),
            Path { n } => (n, n.saturating_sub(1)),
            Ladder { n } => (2 * n, (3 * n).saturating_sub(2)),
            CircularLadder { n } => (2 * n, 3 * n),
            Hypercube { k } => (1 << k, k * (1 << k.saturating_sub(1))),
        }
    }

    /// Checks the parameter floors; the error names the violated constraint.
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let check = |ok: bool, constraint: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::input(format!(
                    "{self} violates the parameter constraint: {constraint}"
                )))
            }
        };
        match *self {
            Complete { n } => check(n >= 1, "complete requires n >= 1"),
            Cycle { n } => check(n >= 3, "cycle requires n >= 3"),
            Wheel { n } => check(n >= 4, "wheel requires n >= 4"),
            Star { leaves } => check(leaves >= 1, "star requires n >= 1 leaves"),
            CompleteMinusEdge { n } => {
                check(n >= 3, "complete-minus-edge requires n >= 3 (n = 2 is disconnected)")
            }
            CocktailParty { n } => check(n >= 2, "cocktail-party requires n >= 2"),
            CompleteBipartite { m, k } => {
                check(m >= 1 && k >= 1, "bipartite requires m, k >= 1")
            }
            Crown { n } => check(n >= 3, "crown requires n >= 3 (n = 2 is disconnected)"),
            Path { n } => check(n >= 1, "path requires n >= 1"),
            Ladder { n } => check(n >= 2, "ladder requires n >= 2"),
            CircularLadder { n } => check(n >= 3, "circular-ladder requires n >= 3"),
            Hypercube { k } => check((1..=20).contains(&k), "hypercube requires 1 <= k <= 20"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match *self {
            Complete { n } => write!(f, "complete:{n}"),
            Cycle { n } => write!(f, "cycle:{n}"),
            Wheel { n } => write!(f, "wheel:{n}"),
            Star { leaves } => write!(f, "star:{leaves}"),
            CompleteMinusEdge { n } => write!(f, "complete-minus-edge:{n}"),
            CocktailParty { n } => write!(f, "cocktail-party:{n}"),
            CompleteBipartite { m, k } => write!(f, "bipartite:{m},{k}"),
            Crown { n } => write!(f, "crown:{n}"),
            Path { n } => write!(f, "path:{n}"),
            Ladder { n } => write!(f, "ladder:{n}"),
            CircularLadder { n } => write!(f, "circular-ladder:{n}"),
            Hypercube { k } => write!(f, "hypercube:{k}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the `kind:params` syntax, e.g. `complete:5`, `bipartite:3,4`,
    /// `hypercube:3`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| Error::input(format!("family spec `{s}` must be `kind:params`")))?;
        let ints: Vec<usize> = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::input(format!("family spec `{s}`: bad parameter `{p}`")))
            })
            .collect::<Result<_>>()?;
        let one = || -> Result<usize> {
            if ints.len() == 1 {
                Ok(ints[0])
            } else {
                Err(Error::input(format!(
                    "family spec `{s}`: expected one parameter"
                )))
            }
        };
        let spec = match kind {
            "complete" => FamilySpec::Complete { n: one()? },
            "cycle" => FamilySpec::Cycle { n: one()? },
            "wheel" => FamilySpec::Wheel { n: one()? },
            "star" => FamilySpec::Star { leaves: one()? },
            "complete-minus-edge" => FamilySpec::CompleteMinusEdge { n: one()? },
            "cocktail-party" => FamilySpec::CocktailParty { n: one()? },
            "bipartite" => {
                if ints.len() != 2 {
                    return Err(Error::input(format!(
                        "family spec `{s}`: bipartite expects two parameters `m,k`"
                    )));
                }
                FamilySpec::CompleteBipartite {
                    m: ints[0],
                    k: ints[1],
                }
            }
            "crown" => FamilySpec::Crown { n: one()? },
            "path" => FamilySpec::Path { n: one()? },
            "ladder" => FamilySpec::Ladder { n: one()? },
            "circular-ladder" => FamilySpec::CircularLadder { n: one()? },
            "hypercube" => FamilySpec::Hypercube { k: one()? },
            other => {
                return Err(Error::input(format!("unknown family kind `{other}`")));
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl serde::Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FamilySpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Builds the family member under its canonical vertex numbering.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    use FamilySpec::*;
    let edges: Vec<(usize, usize)> = match *spec {
        Complete { n } => all_pairs(n),
        Cycle { n } => cycle_edges(0, n),
        Wheel { n } => {
            // hub 0, rim 1..n
            let mut e = cycle_edges(1, n - 1);
            e.extend((1..n).map(|v| (0, v)));
            e
        }
        Star { leaves } => (1..=leaves).map(|v| (0, v)).collect(),
        CompleteMinusEdge { n } => all_pairs(n)
            .into_iter()
            .filter(|&e| e != (0, 1))
            .collect(),
        CocktailParty { n } => all_pairs(2 * n)
            .into_iter()
            .filter(|&(u, v)| !(u / 2 == v / 2))
            .collect(),
        CompleteBipartite { m, k } => (0..m)
            .flat_map(|u| (m..m + k).map(move |v| (u, v)))
            .collect(),
        Crown { n } => (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)))
            .collect(),
        Path { n } => (1..n).map(|v| (v - 1, v)).collect(),
        Ladder { n } => {
            let mut e: Vec<_> = (1..n).flat_map(|k| [(k - 1, k), (n + k - 1, n + k)]).collect();
            e.extend((0..n).map(|k| (k, n + k)));
            e
        }
        CircularLadder { n } => {
            let mut e = cycle_edges(0, n);
            e.extend(cycle_edges(n, n));
            e.extend((0..n).map(|k| (k, n + k)));
            e
        }
        Hypercube { k } => (0usize..1 << k)
            .flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b))).filter(move |&(u, w)| u < w))
            .collect(),
    };
    let (n, m) = spec.expected_counts();
    let g = Graph::from_edge_list(n, &edges)?;
    debug_assert_eq!(g.edge_count(), m, "{spec}: edge count mismatch");
    Ok(g)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect()
}

fn cycle_edges(base: usize, len: usize) -> Vec<(usize, usize)> {
    (0..len)
        .map(|i| (base + i, base + (i + 1) % len))
        .collect()
}

/// Erdős–Rényi G(n, p) resampled until connected.
///
/// Deterministic for a fixed seed: ChaCha8 seeded with `seed`, pairs (u, v)
/// with u < v visited in lexicographic order, one f64 draw per pair.
pub fn random_connected_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::input("random graph requires n >= 1"));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::input(format!(
            "edge probability must satisfy 0 < p <= 1, got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::input(format!(
        "no connected G({n}, {p}) draw in 10000 attempts; increase p"
    )))
}

/// Uniform random labeled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::input("random tree requires n >= 1"));
    }
    if n <= 2 {
        let edges: &[(usize, usize)] = if n == 2 { &[(0, 1)] } else { &[] };
        return Graph::from_edge_list(n, edges);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::from_edge_list(n, &prufer_decode(&seq, n))
}

fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n)
        .filter(|&v| degree[v] == 1)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut rest = leaves.into_iter();
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    edges
}

/// Recursive self-complementary construction: base cases K_1 and P_4; each
/// step appends a path a−b−c−d and joins a and d to every existing vertex.
///
/// The output is not certified isomorphic to its complement; the cheaper
/// necessary invariants (edge count n(n−1)/4, degree-sequence symmetry) are
/// asserted by the test suite instead.
pub fn self_complementary(n: usize) -> Result<Graph> {
    if n < 1 || n % 4 == 2 || n % 4 == 3 {
        return Err(Error::input(format!(
            "self-complementary graphs require n ≡ 0 or 1 (mod 4), got n = {n}"
        )));
    }
    let mut size = if n.is_multiple_of(4) { 4 } else { 1 };
    let mut edges: Vec<(usize, usize)> = if size == 4 {
        vec![(0, 1), (1, 2), (2, 3)]
    } else {
        Vec::new()
    };
    while size < n {
        let (a, b, c, d) = (size, size + 1, size + 2, size + 3);
        edges.extend([(a, b), (b, c), (c, d)]);
        for v in 0..size {
            edges.push((a, v));
            edges.push((d, v));
        }
        size += 4;
    }
    let g = Graph::from_edge_list(n, &edges)?;
    debug_assert_eq!(g.edge_count(), n * (n - 1) / 4);
    debug_assert!({
        let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        (0..n).all(|i| degrees[i] + degrees[n - 1 - i] == n - 1)
    });
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_string_round_trip() {
        for s in [
            "complete:5",
            "cycle:6",
            "wheel:7",
            "star:4",
            "complete-minus-edge:5",
            "cocktail-party:3",
            "bipartite:3,4",
            "crown:4",
            "path:9",
            "ladder:3",
            "circular-ladder:5",
            "hypercube:3",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("cycle:2".parse::<FamilySpec>().is_err());
        assert!("wheel:3".parse::<FamilySpec>().is_err());
        assert!("gadget:5".parse::<FamilySpec>().is_err());
        assert!("bipartite:3".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn counts_match_formulas() {
        let grid: Vec<FamilySpec> = vec![
            FamilySpec::Complete { n: 7 },
            FamilySpec::Cycle { n: 9 },
            FamilySpec::Wheel { n: 8 },
            FamilySpec::Star { leaves: 6 },
            FamilySpec::CompleteMinusEdge { n: 6 },
            FamilySpec::CocktailParty { n: 4 },
            FamilySpec::CompleteBipartite { m: 3, k: 5 },
            FamilySpec::Crown { n: 5 },
            FamilySpec::Path { n: 11 },
            FamilySpec::Ladder { n: 6 },
            FamilySpec::CircularLadder { n: 7 },
            FamilySpec::Hypercube { k: 4 },
        ];
        for spec in grid {
            let g = make_family(&spec).unwrap();
            let (n, m) = spec.expected_counts();
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m), "{spec}");
            assert!(g.is_connected(), "{spec} must be connected");
        }
    }

    #[test]
    fn hypercube_q3() {
        let g = make_family(&FamilySpec::Hypercube { k: 3 }).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
        for v in 0..8 {
            assert_eq!(g.degree(v), 3);
        }
    }

    #[test]
    fn cocktail_party_cp3() {
        let g = make_family(&FamilySpec::CocktailParty { n: 3 }).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 12));
        for v in 0..6 {
            assert_eq!(g.degree(v), 4);
            assert!(!g.has_edge(v, v ^ 1));
        }
    }

    #[test]
    fn smallest_ladder_is_c4() {
        let g = make_family(&FamilySpec::Ladder { n: 2 }).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        for v in 0..4 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn regular_families() {
        let cp = make_family(&FamilySpec::CocktailParty { n: 5 }).unwrap();
        assert!((0..10).all(|v| cp.degree(v) == 8));
        let crown = make_family(&FamilySpec::Crown { n: 6 }).unwrap();
        assert!((0..12).all(|v| crown.degree(v) == 5));
        let cl = make_family(&FamilySpec::CircularLadder { n: 6 }).unwrap();
        assert!((0..12).all(|v| cl.degree(v) == 3));
        let q = make_family(&FamilySpec::Hypercube { k: 5 }).unwrap();
        assert!((0..32).all(|v| q.degree(v) == 5));
    }

    #[test]
    fn gnp_determinism_and_extremes() {
        let k5 = random_connected_gnp(5, 1.0, 1).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let k1 = random_connected_gnp(1, 0.5, 9).unwrap();
        assert_eq!(k1.vertex_count(), 1);
        let a = random_connected_gnp(20, 0.3, 42).unwrap();
        let b = random_connected_gnp(20, 0.3, 42).unwrap();
        assert!(a.is_connected());
        assert_eq!(a.edges(), b.edges());
        let c = random_connected_gnp(20, 0.3, 43).unwrap();
        assert_ne!(a.edges(), c.edges());
        assert!(random_connected_gnp(5, 0.0, 1).is_err());
    }

    #[test]
    fn trees_have_right_shape() {
        let k2 = random_tree(2, 5).unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let t3 = random_tree(3, 11).unwrap();
        assert_eq!(t3.edge_count(), 2);
        assert!(t3.is_connected());
        let t = random_tree(10, 7).unwrap();
        assert_eq!(t.edge_count(), 9);
        assert!(t.is_connected());
        assert_eq!(t.edges(), random_tree(10, 7).unwrap().edges());
    }

    #[test]
    fn self_complementary_construction() {
        // base case: P_4, whose complement is again P_4
        let p4 = self_complementary(4).unwrap();
        assert_eq!(p4.edge_count(), 3);
        let mut degrees: Vec<_> = (0..4).map(|v| p4.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2]);

        let c5 = self_complementary(5).unwrap();
        assert_eq!(c5.edge_count(), 5);

        assert!(self_complementary(6).is_err());
        assert!(self_complementary(7).is_err());

        for n in [4usize, 5, 8, 9, 12, 13] {
            let g = self_complementary(n).unwrap();
            assert!(g.is_connected(), "n = {n}");
            assert_eq!(g.edge_count(), n * (n - 1) / 4, "n = {n}");
            let mut s: Vec<_> = (0..n).map(|v| g.degree(v)).collect();
            s.sort_unstable();
            for i in 0..n {
                assert_eq!(s[i] + s[n - 1 - i], n - 1, "degree symmetry at n = {n}");
            }
        }
    }
}
