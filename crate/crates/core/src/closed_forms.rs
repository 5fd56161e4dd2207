//! Closed-form closeness centralities for the twelve graph families, under
//! the generators' vertex numbering.
//!
//! The circular-ladder line is special: the printed per-vertex numerator
//! (n−1) disagrees with the BFS oracle on every member (CL_3 gives 2/7
//! printed against 5/7 measured), while the numerator 2n−1 matches exactly
//! (the graph has 2n vertices). Both values are reported; no decision is
//! made about the intended form.

use crate::generators::FamilySpec;
use crate::rational::{ratio_u, uint, Rational};
use crate::Result;

/// Printed vs oracle-consistent value for the circular ladder.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormDiscrepancy {
    pub printed_per_vertex: Rational,
    pub corrected_per_vertex: Rational,
    pub note: String,
}

/// Per-vertex closed forms, the graph-level closed form where one is printed,
/// and the circular-ladder discrepancy when applicable.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormResult {
    pub spec: FamilySpec,
    /// As printed, indexed by the generator's vertex numbering.
    pub per_vertex: Vec<Rational>,
    /// Graph-level closed form; `None` for paths and ladders, which have no
    /// tidy expression.
    pub graph_value: Option<Rational>,
    pub discrepancy: Option<ClosedFormDiscrepancy>,
}

pub fn closed_form_closeness(spec: &FamilySpec) -> Result<ClosedFormResult> {
    use FamilySpec::*;
    spec.validate()?;
    let (nv, _) = spec.expected_counts();
    let n64 = |x: usize| x as u64;

    let (per_vertex, graph_value, discrepancy): (
        Vec<Rational>,
        Option<Rational>,
        Option<ClosedFormDiscrepancy>,
    ) = match *spec {
        Complete { n } => {
            let one = ratio_u(1, 1);
            (vec![one.clone(); n], Some(one), None)
        }
        Cycle { n } => {
            let v = ratio_u(n64(n) - 1, n64(n * n / 4));
            (vec![v.clone(); n], Some(v), None)
        }
        Wheel { n } => {
            let hub = ratio_u(1, 1);
            let rim = ratio_u(n64(n) - 1, 2 * n64(n) - 5);
            let mut per = vec![rim; n];
            per[0] = hub;
            let graph = ratio_u(n64(n * n) - 4, n64(n) * (2 * n64(n) - 5));
            (per, Some(graph), None)
        }
        Star { leaves } => {
            let s = n64(leaves);
            let center = ratio_u(1, 1);
            let leaf = ratio_u(s, 2 * s - 1);
            let mut per = vec![leaf; leaves + 1];
            per[0] = center;
            let graph = ratio_u(s * s + 2 * s - 1, 2 * s * s + s - 1);
            (per, Some(graph), None)
        }
        CompleteMinusEdge { n } => {
            let endpoint = ratio_u(n64(n) - 1, n64(n));
            let other = ratio_u(1, 1);
            let mut per = vec![other; n];
            per[0] = endpoint.clone();
            per[1] = endpoint;
            let graph = ratio_u(n64(n * n) - 2, n64(n * n));
            (per, Some(graph), None)
        }
        CocktailParty { n } => {
            let v = ratio_u(2 * n64(n) - 1, 2 * n64(n));
            (vec![v.clone(); 2 * n], Some(v), None)
        }
        CompleteBipartite { m, k } => {
            let (m64, k64) = (n64(m), n64(k));
            // vertices 0..m are the m-side, m..m+k the k-side
            let m_side = ratio_u(m64 + k64 - 1, k64 + 2 * m64 - 2);
            let k_side = ratio_u(m64 + k64 - 1, m64 + 2 * k64 - 2);
            let mut per = vec![m_side.clone(); m];
            per.extend(std::iter::repeat_n(k_side.clone(), k));
            let graph = ratio_u(m64 + k64 - 1, m64 + k64)
                * (uint(m64) / uint(k64 + 2 * m64 - 2) + uint(k64) / uint(m64 + 2 * k64 - 2));
            (per, Some(graph), None)
        }
        Crown { n } => {
            let v = ratio_u(2 * n64(n) - 1, 3 * n64(n));
            (vec![v.clone(); 2 * n], Some(v), None)
        }
        Path { n } => {
            let per = (0..n).map(|k| path_vertex_closeness(n64(n), n64(k))).collect();
            (per, None, None)
        }
        Ladder { n } => {
            let rail: Vec<Rational> = (0..n)
                .map(|k| ladder_vertex_closeness(n64(n), n64(k)))
                .collect();
            let mut per = rail.clone();
            per.extend(rail);
            (per, None, None)
        }
        CircularLadder { n } => {
            let den = 2 * n64(n * n / 4) + n64(n);
            let printed = ratio_u(n64(n) - 1, den);
            let corrected = ratio_u(2 * n64(n) - 1, den);
            let disc = ClosedFormDiscrepancy {
                printed_per_vertex: printed.clone(),
                corrected_per_vertex: corrected,
                note: format!(
                    "circular-ladder closed form: printed numerator n-1 does not match the \
                     BFS oracle on CL_{n}; numerator 2n-1 (the graph has 2n vertices) matches \
                     exactly"
                ),
            };
            (vec![printed.clone(); 2 * n], Some(printed), Some(disc))
        }
        Hypercube { k } => {
            let v = ratio_u((1u64 << k) - 1, n64(k) * (1u64 << (k - 1)));
            (vec![v.clone(); 1 << k], Some(v), None)
        }
    };

    debug_assert_eq!(per_vertex.len(), nv);
    Ok(ClosedFormResult {
        spec: *spec,
        per_vertex,
        graph_value,
        discrepancy,
    })
}

/// Path formula: 4(n−1) / ((2k−n+1)² + n²−1) for vertex v_k.
pub fn path_vertex_closeness(n: u64, k: u64) -> Rational {
    let off = 2 * k as i128 - n as i128 + 1;
    let den = (off * off + (n as i128) * (n as i128) - 1) as u64;
    ratio_u(4 * (n - 1), den)
}

/// Ladder formula: (4n−2) / ((2k−n+1)² + n²+2n−1) for vertices u_k and v_k.
pub fn ladder_vertex_closeness(n: u64, k: u64) -> Rational {
    let off = 2 * k as i128 - n as i128 + 1;
    let den = (off * off + (n as i128) * (n as i128) + 2 * n as i128 - 1) as u64;
    ratio_u(4 * n - 2, den)
}
