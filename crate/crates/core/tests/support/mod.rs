//! Independent oracles for the test suite: exhaustive path enumeration,
//! subset brute force, and exact trace moments. These deliberately avoid the
//! library's own algorithmic routes.
//!
//! Shared by several integration-test crates, each of which uses a subset.
#![allow(dead_code)]

use closebound::graph::{distance_matrix, Graph};
use closebound::rational::{ratio_u, Rational};
use num::Zero;
use proptest::prelude::*;

/// Shortest distances from `s` by enumerating every simple path (DFS with a
/// visited set). Exponential; for n <= 8 only.
pub fn shortest_by_path_enumeration(g: &Graph, s: usize) -> Vec<Option<u32>> {
    let n = g.vertex_count();
    let mut best: Vec<Option<u32>> = vec![None; n];
    best[s] = Some(0);
    let mut visited = vec![false; n];
    visited[s] = true;
    fn dfs(g: &Graph, v: usize, depth: u32, visited: &mut [bool], best: &mut [Option<u32>]) {
        for &w in g.neighbors(v) {
            if visited[w] {
                continue;
            }
            let d = depth + 1;
            if best[w].is_none_or(|b| d < b) {
                best[w] = Some(d);
            }
            visited[w] = true;
            dfs(g, w, d, visited, best);
            visited[w] = false;
        }
    }
    dfs(g, s, 0, &mut visited, &mut best);
    best
}

/// Betweenness by explicitly walking every shortest path of every unordered
/// pair. Uses BFS distances only as a guide for which edges can extend a
/// shortest path; every path is materialized and counted.
pub fn betweenness_by_path_enumeration(g: &Graph) -> Vec<Rational> {
    let n = g.vertex_count();
    let dm = distance_matrix(g);
    assert!(dm.is_connected(), "oracle expects a connected graph");
    let mut scores = vec![Rational::zero(); n];
    for s in 0..n {
        for t in (s + 1)..n {
            let dist_t = dm.row(t);
            let mut through = vec![0u64; n];
            let mut sigma = 0u64;
            let mut path = vec![s];
            walk(g, s, t, dist_t, &mut path, &mut through, &mut sigma);
            assert!(sigma > 0);
            for (v, &count) in through.iter().enumerate() {
                if v != s && v != t && count > 0 {
                    scores[v] += ratio_u(count, sigma);
                }
            }
        }
    }
    scores
}

fn walk(
    g: &Graph,
    v: usize,
    t: usize,
    dist_t: &[u32],
    path: &mut Vec<usize>,
    through: &mut [u64],
    sigma: &mut u64,
) {
    if v == t {
        *sigma += 1;
        for &u in &path[1..path.len() - 1] {
            through[u] += 1;
        }
        return;
    }
    for &w in g.neighbors(v) {
        if dist_t[w] + 1 == dist_t[v] {
            path.push(w);
            walk(g, w, t, dist_t, path, through, sigma);
            path.pop();
        }
    }
}

/// Independence number by enumerating all 2^n vertex subsets. For n <= 20.
pub fn alpha_by_subset_enumeration(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20, "subset oracle limited to n <= 20");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |a, &w| a | (1 << w)))
        .collect();
    let mut best = 0u32;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() <= best {
            continue;
        }
        let mut ok = true;
        let mut scan = mask;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if adj[v] & mask != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            best = mask.count_ones();
        }
    }
    best as usize
}

/// Exact integer traces of L^k for k = 0..=k_max; Σ θ_i^k must match.
pub fn laplacian_trace_moments(g: &Graph, k_max: usize) -> Vec<i128> {
    let n = g.vertex_count();
    let mut lap = vec![vec![0i128; n]; n];
    for (v, row) in lap.iter_mut().enumerate() {
        row[v] = g.degree(v) as i128;
        for &w in g.neighbors(v) {
            row[w] = -1;
        }
    }
    let mut power = vec![vec![0i128; n]; n];
    for (i, row) in power.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut moments = Vec::with_capacity(k_max + 1);
    for _ in 0..=k_max {
        moments.push((0..n).map(|i| power[i][i]).sum());
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for k in 0..n {
                let p = power[i][k];
                if p == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += p * lap[k][j];
                }
            }
        }
        power = next;
    }
    moments
}

/// Arbitrary simple graph on 2..=max_n vertices (each pair independently).
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::ANY, pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edge_list(n, &edges).expect("valid edges")
        })
    })
}

/// Arbitrary connected graph on 2..=max_n vertices.
pub fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", |g| g.is_connected())
}
