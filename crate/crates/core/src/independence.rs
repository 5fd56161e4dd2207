//! Exact maximum independent set via branch and bound on a bitset graph.
//!
//! Branching vertex: maximum degree in the live subgraph, smallest index on
//! ties. Upper bound: greedy clique cover of the live subgraph. The include
//! branch is explored first so good incumbents arrive early.

use crate::graph::Graph;
use crate::{Error, Result};

/// Default size cap for the exact solver; raise it explicitly via
/// [`independence_number_with_limit`].
pub const DEFAULT_EXACT_LIMIT: usize = 64;

/// Bitset width; graphs beyond this are rejected outright.
pub const HARD_LIMIT: usize = 128;

/// Independence number together with a witness set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceResult {
    pub alpha: usize,
    pub witness: Vec<usize>,
}

pub fn independence_number(g: &Graph) -> Result<IndependenceResult> {
    independence_number_with_limit(g, DEFAULT_EXACT_LIMIT)
}

pub fn independence_number_with_limit(g: &Graph, limit: usize) -> Result<IndependenceResult> {
    let n = g.vertex_count();
    if n > HARD_LIMIT {
        return Err(Error::input(format!(
            "exact alpha supports at most {HARD_LIMIT} vertices (bitset width), got n = {n}"
        )));
    }
    let limit = limit.min(HARD_LIMIT);
    if n > limit {
        return Err(Error::AlphaLimit { n, limit });
    }
    if n == 0 {
        return Ok(IndependenceResult {
            alpha: 0,
            witness: Vec::new(),
        });
    }

    let adj: Vec<u128> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u128, |acc, &w| acc | (1u128 << w))
        })
        .collect();
    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };

    let mut solver = Solver {
        adj: &adj,
        best: greedy_independent(&adj, full),
    };
    solver.branch(full, 0, 0);

    let witness: Vec<usize> = (0..n).filter(|&v| solver.best >> v & 1 == 1).collect();
    let alpha = witness.len();

    // witness verification on every call
    for (i, &u) in witness.iter().enumerate() {
        for &v in &witness[i + 1..] {
            assert!(
                adj[u] >> v & 1 == 0,
                "internal error: witness {u},{v} not independent"
            );
        }
    }
    Ok(IndependenceResult { alpha, witness })
}

struct Solver<'a> {
    adj: &'a [u128],
    best: u128,
}

impl Solver<'_> {
    fn branch(&mut self, mut live: u128, mut chosen: u128, mut size: u32) {
        // take isolated vertices for free
        loop {
            let mut progressed = false;
            let mut scan = live;
            while scan != 0 {
                let v = scan.trailing_zeros();
                scan &= scan - 1;
                if self.adj[v as usize] & live == 0 {
                    live &= !(1u128 << v);
                    chosen |= 1u128 << v;
                    size += 1;
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        if live == 0 {
            if size > self.best.count_ones() {
                self.best = chosen;
            }
            return;
        }
        if size + clique_cover_bound(self.adj, live) <= self.best.count_ones() {
            return;
        }

        // branch on a maximum-degree live vertex, smallest index on ties
        let mut branch_v = 0u32;
        let mut branch_deg = 0u32;
        let mut scan = live;
        let mut first = true;
        while scan != 0 {
            let v = scan.trailing_zeros();
            scan &= scan - 1;
            let deg = (self.adj[v as usize] & live).count_ones();
            if first || deg > branch_deg {
                branch_v = v;
                branch_deg = deg;
                first = false;
            }
        }

        let bit = 1u128 << branch_v;
        self.branch(
            live & !(self.adj[branch_v as usize] | bit),
            chosen | bit,
            size + 1,
        );
        self.branch(live & !bit, chosen, size);
    }
}

/// Greedy maximal independent set (minimum live degree first) used to seed
/// the incumbent.
fn greedy_independent(adj: &[u128], mut live: u128) -> u128 {
    let mut chosen = 0u128;
    while live != 0 {
        let mut pick = 0u32;
        let mut pick_deg = u32::MAX;
        let mut scan = live;
        while scan != 0 {
            let v = scan.trailing_zeros();
            scan &= scan - 1;
            let deg = (adj[v as usize] & live).count_ones();
            if deg < pick_deg {
                pick = v;
                pick_deg = deg;
            }
        }
        chosen |= 1u128 << pick;
        live &= !(adj[pick as usize] | (1u128 << pick));
    }
    chosen
}

/// Partitions the live vertices into greedily grown cliques; an independent
/// set meets each clique at most once, so the count is an upper bound.
fn clique_cover_bound(adj: &[u128], mut live: u128) -> u32 {
    let mut cliques = 0u32;
    while live != 0 {
        let v = live.trailing_zeros();
        live &= !(1u128 << v);
        let mut cand = adj[v as usize] & live;
        while cand != 0 {
            let u = cand.trailing_zeros();
            live &= !(1u128 << u);
            cand &= adj[u as usize] & live;
        }
        cliques += 1;
    }
    cliques
}
