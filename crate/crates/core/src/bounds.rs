//! Evaluators for the analytic closeness-centrality bounds.
//!
//! Each evaluation produces a [`BoundRecord`] carrying a stable identifier,
//! the bound's value, and the satisfaction margin against the exact graph
//! closeness. ASSERTED records are expected to hold on every connected graph;
//! AUDIT records are evaluated and reported but never asserted, because desk
//! checking shows the printed forms can fail on small graphs (LB2, the tree
//! bound) or rest on an eigenvalue-ordering reinterpretation (LB5, LB6).

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{One, Signed};

use crate::graph::{Graph, StructuralSummary};
use crate::metrics::ClosenessProfile;
use crate::rational::{self, Rational};
use crate::spectral::SpectralData;
use crate::{Error, Result};

/// Float-valued records treat margins down to −10⁻⁹ as zero.
pub const FLOAT_HOLD_SLACK: f64 = 1e-9;

/// Stable identifiers, part of the public report/CLI contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    Duality,
    CorLb1,
    CorLb2,
    CorLb4,
    CorLb5,
    CorLb6,
    CorLb7,
    CorLb8,
    CorLb9,
    CorLb10,
    TrivialUpper,
    RadiusUpper,
    RadiusDegreeUpper,
    SelfComplementary,
    TwoConnected,
    Tree,
}

impl BoundId {
    pub const ALL: [BoundId; 16] = [
        BoundId::Duality,
        BoundId::CorLb1,
        BoundId::CorLb2,
        BoundId::CorLb4,
        BoundId::CorLb5,
        BoundId::CorLb6,
        BoundId::CorLb7,
        BoundId::CorLb8,
        BoundId::CorLb9,
        BoundId::CorLb10,
        BoundId::TrivialUpper,
        BoundId::RadiusUpper,
        BoundId::RadiusDegreeUpper,
        BoundId::SelfComplementary,
        BoundId::TwoConnected,
        BoundId::Tree,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundId::Duality => "THM2.DUALITY",
            BoundId::CorLb1 => "COR2.LB1",
            BoundId::CorLb2 => "COR2.LB2",
            BoundId::CorLb4 => "COR2.LB4",
            BoundId::CorLb5 => "COR2.LB5",
            BoundId::CorLb6 => "COR2.LB6",
            BoundId::CorLb7 => "COR2.LB7",
            BoundId::CorLb8 => "COR2.LB8",
            BoundId::CorLb9 => "COR2.LB9",
            BoundId::CorLb10 => "COR2.LB10",
            BoundId::TrivialUpper => "LEM3.TRIVIAL_UB",
            BoundId::RadiusUpper => "THM3.RADIUS_UB",
            BoundId::RadiusDegreeUpper => "THM3.RADIUS_DEGREE_UB",
            BoundId::SelfComplementary => "THM4.SELFCOMP",
            BoundId::TwoConnected => "THM4.TWOCONN",
            BoundId::Tree => "THM4.TREE",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<BoundId> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::input(format!("unknown bound id `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
}

impl BoundKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundKind::Lower => "LOWER",
            BoundKind::Upper => "UPPER",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    /// Expected to hold on every connected graph; a violation fails the run.
    Asserted,
    /// Evaluated and recorded; violations are reported, never fatal.
    Audit,
}

impl BoundStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundStatus::Asserted => "ASSERTED",
            BoundStatus::Audit => "AUDIT",
        }
    }
}

/// Exact rational value, or a float when the bound consumes eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundValue {
    Exact(Rational),
    Float(f64),
}

impl BoundValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            BoundValue::Exact(r) => rational::to_f64(r),
            BoundValue::Float(f) => *f,
        }
    }

    pub fn fraction(&self) -> Option<String> {
        match self {
            BoundValue::Exact(r) => Some(rational::fraction_string(r)),
            BoundValue::Float(_) => None,
        }
    }
}

/// One evaluated bound on one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundRecord {
    pub id: BoundId,
    pub kind: BoundKind,
    pub status: BoundStatus,
    pub applicable: bool,
    /// Why the bound was not applicable, when it was not.
    pub reason: Option<String>,
    pub value: Option<BoundValue>,
    pub holds: Option<bool>,
    /// C̄_C − value for lower bounds, value − C̄_C for upper bounds.
    pub margin: Option<BoundValue>,
}

impl BoundRecord {
    fn exact(
        id: BoundId,
        kind: BoundKind,
        status: BoundStatus,
        value: Rational,
        closeness: &Rational,
    ) -> BoundRecord {
        let margin = match kind {
            BoundKind::Lower => closeness - &value,
            BoundKind::Upper => &value - closeness,
        };
        BoundRecord {
            id,
            kind,
            status,
            applicable: true,
            reason: None,
            value: Some(BoundValue::Exact(value)),
            holds: Some(!margin.is_negative()),
            margin: Some(BoundValue::Exact(margin)),
        }
    }

    fn float_lower(id: BoundId, status: BoundStatus, value: f64, closeness: f64) -> BoundRecord {
        let mut margin = closeness - value;
        let holds = margin >= -FLOAT_HOLD_SLACK;
        if holds && margin < 0.0 {
            margin = 0.0;
        }
        BoundRecord {
            id,
            kind: BoundKind::Lower,
            status,
            applicable: true,
            reason: None,
            value: Some(BoundValue::Float(value)),
            holds: Some(holds),
            margin: Some(BoundValue::Float(margin)),
        }
    }

    fn inapplicable(
        id: BoundId,
        kind: BoundKind,
        status: BoundStatus,
        reason: impl Into<String>,
    ) -> BoundRecord {
        BoundRecord {
            id,
            kind,
            status,
            applicable: false,
            reason: Some(reason.into()),
            value: None,
            holds: None,
            margin: None,
        }
    }

    /// An asserted record that is applicable but does not hold.
    pub fn is_asserted_failure(&self) -> bool {
        self.status == BoundStatus::Asserted && self.applicable && self.holds == Some(false)
    }

    /// An audit record that is applicable but does not hold.
    pub fn is_audit_violation(&self) -> bool {
        self.status == BoundStatus::Audit && self.applicable && self.holds == Some(false)
    }
}

fn big(v: i128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// The duality lower bound: C̄_C ≥ 1/l̄, with margin zero exactly on
/// transmission-regular graphs.
pub fn duality_record(profile: &ClosenessProfile) -> BoundRecord {
    let value = profile.mean_distance.recip();
    BoundRecord::exact(
        BoundId::Duality,
        BoundKind::Lower,
        BoundStatus::Asserted,
        value,
        &profile.graph_closeness,
    )
}

/// The nine implementable corollary lower bounds (LB3 requires a polynomial
/// family defined only in an external source and is out of scope).
pub fn corollary_lower_bounds(
    g: &Graph,
    summary: &StructuralSummary,
    profile: &ClosenessProfile,
    spectral: Option<&SpectralData>,
    alpha: Option<usize>,
) -> Vec<BoundRecord> {
    let n = g.vertex_count() as i128;
    let m = g.edge_count() as i128;
    let delta_min = summary.degree_min as i128;
    let delta_max = summary.degree_max as i128;
    let diameter = summary.diameter as i128;
    let closeness = &profile.graph_closeness;
    let closeness_f = rational::to_f64(closeness);
    let mut records = Vec::with_capacity(9);

    // LB1: inverse of (n−1)(n−Δ)(Δ−1)/(nΔ) − 2(m−n+1)/(n(n−1)) + 1
    {
        let t1 = big((n - 1) * (n - delta_max) * (delta_max - 1)) / big(n * delta_max);
        let t2 = big(2 * (m - n + 1)) / big(n * (n - 1));
        let denom = t1 - t2 + Rational::one();
        records.push(BoundRecord::exact(
            BoundId::CorLb1,
            BoundKind::Lower,
            BoundStatus::Asserted,
            denom.recip(),
            closeness,
        ));
    }

    // LB2: 6n(n−1) / (3n(n−4)D + 6n(n+2) − 12(m+1) − D²(D−6) + h(D)),
    // h(D) = 6−D when n−D is odd, 2D when even
    {
        let h = if (n - diameter) % 2 != 0 {
            6 - diameter
        } else {
            2 * diameter
        };
        let denom = 3 * n * (n - 4) * diameter + 6 * n * (n + 2)
            - 12 * (m + 1)
            - diameter * diameter * (diameter - 6)
            + h;
        if denom > 0 {
            records.push(BoundRecord::exact(
                BoundId::CorLb2,
                BoundKind::Lower,
                BoundStatus::Audit,
                big(6 * n * (n - 1)) / big(denom),
                closeness,
            ));
        } else {
            records.push(BoundRecord::inapplicable(
                BoundId::CorLb2,
                BoundKind::Lower,
                BoundStatus::Audit,
                format!("nonpositive denominator {denom}"),
            ));
        }
    }

    // LB4: n(n−1) / (bn(n−1) − 2(b−1)m), b = distinct Laplacian eigenvalues
    match spectral {
        Some(sp) => {
            let b = sp.distinct_count as i128;
            let denom = b * n * (n - 1) - 2 * (b - 1) * m;
            records.push(BoundRecord::exact(
                BoundId::CorLb4,
                BoundKind::Lower,
                BoundStatus::Asserted,
                big(n * (n - 1)) / big(denom),
                closeness,
            ));
        }
        None => records.push(BoundRecord::inapplicable(
            BoundId::CorLb4,
            BoundKind::Lower,
            BoundStatus::Asserted,
            "spectral data unavailable (n over spectral limit)",
        )),
    }

    // LB5: (n−1)/n · (⌈(Δ+θ₂)/(4θ₂)·ln(n−1)⌉ + 1/2)⁻¹, θ₂ = algebraic connectivity
    match spectral {
        Some(sp) if sp.algebraic_connectivity > 0.0 => {
            let theta2 = sp.algebraic_connectivity;
            let x = (delta_max as f64 + theta2) / (4.0 * theta2) * ((n - 1) as f64).ln();
            let value = (n - 1) as f64 / n as f64 / (ceil_nudged(x) + 0.5);
            records.push(BoundRecord::float_lower(
                BoundId::CorLb5,
                BoundStatus::Audit,
                value,
                closeness_f,
            ));
        }
        Some(_) => records.push(BoundRecord::inapplicable(
            BoundId::CorLb5,
            BoundKind::Lower,
            BoundStatus::Audit,
            "nonpositive algebraic connectivity",
        )),
        None => records.push(BoundRecord::inapplicable(
            BoundId::CorLb5,
            BoundKind::Lower,
            BoundStatus::Audit,
            "spectral data unavailable (n over spectral limit)",
        )),
    }

    // LB6: (n−1)·2(m−n−2) / Σ 1/θ over nonzero eigenvalues; may be negative,
    // in which case it holds vacuously
    match spectral {
        Some(sp) if sp.reciprocal_sum > 0.0 => {
            let value = (n - 1) as f64 * 2.0 * (m - n - 2) as f64 / sp.reciprocal_sum;
            records.push(BoundRecord::float_lower(
                BoundId::CorLb6,
                BoundStatus::Audit,
                value,
                closeness_f,
            ));
        }
        Some(_) => records.push(BoundRecord::inapplicable(
            BoundId::CorLb6,
            BoundKind::Lower,
            BoundStatus::Audit,
            "no nonzero eigenvalues",
        )),
        None => records.push(BoundRecord::inapplicable(
            BoundId::CorLb6,
            BoundKind::Lower,
            BoundStatus::Audit,
            "spectral data unavailable (n over spectral limit)",
        )),
    }

    // LB7: 3/(n+1)
    records.push(BoundRecord::exact(
        BoundId::CorLb7,
        BoundKind::Lower,
        BoundStatus::Asserted,
        big(3) / big(n + 1),
        closeness,
    ));

    // LB8: n(n−1) / ⌊((n+1)n(n−1) − 2m)/(δ+1)⌋
    {
        let inner = big((n + 1) * n * (n - 1) - 2 * m) / big(delta_min + 1);
        let floored = Rational::from_integer(rational::floor_int(&inner));
        records.push(BoundRecord::exact(
            BoundId::CorLb8,
            BoundKind::Lower,
            BoundStatus::Asserted,
            big(n * (n - 1)) / floored,
            closeness,
        ));
    }

    // LB9: 1/α
    match alpha {
        Some(a) => records.push(BoundRecord::exact(
            BoundId::CorLb9,
            BoundKind::Lower,
            BoundStatus::Asserted,
            big(a as i128).recip(),
            closeness,
        )),
        None => records.push(BoundRecord::inapplicable(
            BoundId::CorLb9,
            BoundKind::Lower,
            BoundStatus::Asserted,
            "independence number unavailable (n over alpha limit)",
        )),
    }

    // LB10: 1/D
    records.push(BoundRecord::exact(
        BoundId::CorLb10,
        BoundKind::Lower,
        BoundStatus::Asserted,
        big(diameter).recip(),
        closeness,
    ));

    records
}

/// Float ceiling with a pre-nudge: values within 10⁻⁹ of an integer snap to
/// that integer first, so eigenvalue noise cannot bump the ceiling.
fn ceil_nudged(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= 1e-9 {
        r
    } else {
        x.ceil()
    }
}

/// The three upper bounds: the trivial C̄_C ≤ 1, the radius bound, and the
/// radius+degree bound (applicable only when r ≥ 3).
pub fn upper_bounds(
    g: &Graph,
    summary: &StructuralSummary,
    profile: &ClosenessProfile,
) -> Vec<BoundRecord> {
    let n = g.vertex_count() as i128;
    let r = summary.radius as i128;
    let delta_max = summary.degree_max as i128;
    let closeness = &profile.graph_closeness;
    let mut records = Vec::with_capacity(3);

    records.push(BoundRecord::exact(
        BoundId::TrivialUpper,
        BoundKind::Upper,
        BoundStatus::Asserted,
        Rational::one(),
        closeness,
    ));

    // (n−1) / (n−1 + C(r,2))
    records.push(BoundRecord::exact(
        BoundId::RadiusUpper,
        BoundKind::Upper,
        BoundStatus::Asserted,
        big(n - 1) / big(n - 1 + r * (r - 1) / 2),
        closeness,
    ));

    if r >= 3 {
        // (n−1) / (2n−1−Δ + r(r−3)/2)
        records.push(BoundRecord::exact(
            BoundId::RadiusDegreeUpper,
            BoundKind::Upper,
            BoundStatus::Asserted,
            big(n - 1) / big(2 * n - 1 - delta_max + r * (r - 3) / 2),
            closeness,
        ));
    } else {
        records.push(BoundRecord::inapplicable(
            BoundId::RadiusDegreeUpper,
            BoundKind::Upper,
            BoundStatus::Asserted,
            format!("requires radius >= 3 (r = {r})"),
        ));
    }

    records
}

/// Structural class membership driving the class-specific bounds.
///
/// Trees and 2-edge-connectivity are decidable from the graph; the
/// self-complementary tag comes from generator provenance only.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassTags {
    pub self_complementary: bool,
    pub two_connected: bool,
    pub tree: bool,
}

/// Derives the checkable tags: tree via m = n−1 (connected), 2-edge-connected
/// via bridge detection.
pub fn detect_class_tags(g: &Graph) -> ClassTags {
    let n = g.vertex_count();
    let connected = g.is_connected();
    ClassTags {
        self_complementary: false,
        two_connected: connected && n >= 3 && bridges(g).is_empty(),
        tree: connected && n >= 1 && g.edge_count() == n - 1,
    }
}

/// All bridge edges, as (u, v) pairs with u < v, lexicographically sorted.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(frame) = stack.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(up) = stack.last_mut() {
                    let u = up.0;
                    low[u] = low[u].min(low[v]);
                    if low[v] > disc[u] {
                        out.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Lower bounds for self-complementary graphs, 2-connected graphs, and trees,
/// gated by the supplied class tags.
pub fn family_class_bounds(
    g: &Graph,
    summary: &StructuralSummary,
    profile: &ClosenessProfile,
    tags: &ClassTags,
) -> Result<Vec<BoundRecord>> {
    let n = g.vertex_count() as i128;
    let m = g.edge_count() as i128;
    let closeness = &profile.graph_closeness;
    let mut records = Vec::new();

    if tags.self_complementary {
        if !(n % 4 == 0 || n % 4 == 1) {
            return Err(Error::input(format!(
                "self-complementary tag with n = {n}, but n ≡ 0 or 1 (mod 4) is required"
            )));
        }
        if m != n * (n - 1) / 4 {
            return Err(Error::input(format!(
                "self-complementary tag with m = {m}, expected n(n-1)/4 = {}",
                n * (n - 1) / 4
            )));
        }
        let value = if n % 4 == 0 {
            big(8 * n - 8) / big(13 * n - 12)
        } else {
            big(8 * n) / big(13 * n - 1)
        };
        records.push(BoundRecord::exact(
            BoundId::SelfComplementary,
            BoundKind::Lower,
            BoundStatus::Asserted,
            value,
            closeness,
        ));
    }

    if tags.two_connected {
        records.push(BoundRecord::exact(
            BoundId::TwoConnected,
            BoundKind::Lower,
            BoundStatus::Asserted,
            big(n - 1) / big(n * n / 4),
            closeness,
        ));
    }

    if tags.tree {
        if m != n - 1 {
            return Err(Error::input(format!(
                "tree tag with m = {m}, expected n-1 = {}",
                n - 1
            )));
        }
        let d = summary.degree_max as i128;
        records.push(BoundRecord::exact(
            BoundId::Tree,
            BoundKind::Lower,
            BoundStatus::Audit,
            big(n * d) / big(2 * (n - d) * (d - 1) * (n - 1) + 2),
            closeness,
        ));
    }

    Ok(records)
}
