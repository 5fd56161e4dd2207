//! Simple undirected graphs in canonical adjacency-list form, BFS shortest
//! paths, and elementary structural quantities.

use crate::{Error, Result};

/// Sentinel distance for unreachable vertices.
pub const UNREACHABLE: u32 = u32::MAX;

/// Simple undirected graph on vertices `0..n`.
///
/// Canonical form: adjacency lists are sorted ascending, no self-loops, no
/// duplicate neighbors, and `u ∈ adj(v) ⇔ v ∈ adj(u)`. Immutable after
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds the canonical graph from an edge list. Duplicate pairs (and
    /// reversed duplicates) collapse to a single edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { n, m, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// New graph with one edge removed. The caller checks connectivity of the
    /// result separately.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::input(format!("edge ({u}, {v}) not present")));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        g.m -= 1;
        Ok(g)
    }

    /// True iff a BFS from vertex 0 reaches all `n` vertices.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        bfs_distances(self, 0).iter().all(|&d| d != UNREACHABLE)
    }
}

/// Hop distances from `source`; `UNREACHABLE` marks vertices in other components.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<u32> {
    assert!(source < g.n, "source {} out of range", source);
    let mut dist = vec![UNREACHABLE; g.n];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::with_capacity(g.n);
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v];
        for &w in &g.adj[v] {
            if dist[w] == UNREACHABLE {
                dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs hop distances. Disconnected graphs are representable; metric
/// operations downstream reject them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    rows: Vec<Vec<u32>>,
    connected: bool,
}

impl DistanceMatrix {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn row(&self, v: usize) -> &[u32] {
        &self.rows[v]
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.rows[u][v]
    }

    /// Sum of the row of `v` (the transmission of `v`). Connected case only.
    pub fn transmission(&self, v: usize) -> u64 {
        self.rows[v].iter().map(|&d| u64::from(d)).sum()
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let rows: Vec<Vec<u32>> = (0..g.n).map(|v| bfs_distances(g, v)).collect();
    let connected = g.n <= 1 || rows.iter().all(|r| r.iter().all(|&d| d != UNREACHABLE));
    DistanceMatrix {
        n: g.n,
        rows,
        connected,
    }
}

/// Degree extremes, eccentricities, radius, diameter, and per-vertex distance
/// histograms `d_i(v) = |{u : d(u,v) = i}|` for `i = 1..ε(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralSummary {
    pub degree_min: usize,
    pub degree_max: usize,
    pub radius: u32,
    pub diameter: u32,
    pub eccentricities: Vec<u32>,
    pub distance_histogram: Vec<Vec<u64>>,
}

pub fn structural_summary(g: &Graph, dm: &DistanceMatrix) -> Result<StructuralSummary> {
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let degree_min = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let degree_max = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let eccentricities: Vec<u32> = (0..n)
        .map(|v| dm.row(v).iter().copied().max().unwrap_or(0))
        .collect();
    let radius = eccentricities.iter().copied().min().unwrap_or(0);
    let diameter = eccentricities.iter().copied().max().unwrap_or(0);
    let distance_histogram = (0..n)
        .map(|v| {
            let ecc = eccentricities[v] as usize;
            let mut hist = vec![0u64; ecc];
            for &d in dm.row(v) {
                if d > 0 {
                    hist[d as usize - 1] += 1;
                }
            }
            hist
        })
        .collect();
    Ok(StructuralSummary {
        degree_min,
        degree_max,
        radius,
        diameter,
        eccentricities,
        distance_histogram,
    })
}

/// Parses the edge-list text format: first line `n m`, then `m` lines `u v`,
/// 0-based, whitespace-separated; lines starting with `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::input("empty edge-list input"))?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), line_no, "n")?;
    let m: usize = parse_field(it.next(), line_no, "m")?;
    if it.next().is_some() {
        return Err(Error::input(format!(
            "line {line_no}: expected exactly `n m`"
        )));
    }

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), line_no, "u")?;
        let v: usize = parse_field(it.next(), line_no, "v")?;
        if it.next().is_some() {
            return Err(Error::input(format!(
                "line {line_no}: expected exactly `u v`"
            )));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::input(format!(
            "header declares {m} edges but {} edge lines found",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_field<T: std::str::FromStr>(tok: Option<&str>, line_no: usize, name: &str) -> Result<T> {
    tok.ok_or_else(|| Error::input(format!("line {line_no}: missing field `{name}`")))?
        .parse()
        .map_err(|_| Error::input(format!("line {line_no}: field `{name}` is not a valid integer")))
}

/// Writes the edge-list text format read back by [`parse_edge_list`].
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
