//! Asymptotic lower/upper sandwiches for the closeness centrality of paths
//! and ladders. Both n·C̄_C(P_n) and n·C̄_C(L_n) converge to π.
//!
//! The exact value is the O(n) sum of the per-vertex closed forms. Each term
//! is a bounded-size fraction; the sum is accumulated in compensated floating
//! point, and additionally materialized as an exact rational for
//! n ≤ [`EXACT_SUM_LIMIT`] (a literal rational accumulation is infeasible at
//! n = 10⁶ because the running denominator grows super-exponentially).

use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::closed_forms::{ladder_vertex_closeness, path_vertex_closeness};
use crate::rational::{self, Rational};
use crate::{Error, Result};

/// Largest n for which the exact rational sum is materialized in a row.
pub const EXACT_SUM_LIMIT: u64 = 1000;

/// Slack for float comparisons against the rational converted to float.
pub const FLOAT_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SandwichFamily {
    Path,
    Ladder,
}

impl fmt::Display for SandwichFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SandwichFamily::Path => "path",
            SandwichFamily::Ladder => "ladder",
        })
    }
}

impl FromStr for SandwichFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<SandwichFamily> {
        match s {
            "path" => Ok(SandwichFamily::Path),
            "ladder" => Ok(SandwichFamily::Ladder),
            other => Err(Error::input(format!(
                "unknown sandwich family `{other}` (expected `path` or `ladder`)"
            ))),
        }
    }
}

/// One sandwich evaluation: lower ≤ exact ≤ upper, plus |n·exact − π|.
#[derive(Debug, Clone)]
pub struct SandwichRow {
    pub family: SandwichFamily,
    pub n: u64,
    pub lower: f64,
    /// Closed-form sum accumulated in compensated floating point.
    pub exact: f64,
    pub upper: f64,
    /// Exact rational sum, materialized for n ≤ `EXACT_SUM_LIMIT`.
    pub exact_fraction: Option<Rational>,
    pub pi_gap: f64,
}

impl SandwichRow {
    /// Best available float for the exact value: the rational when present.
    pub fn exact_as_f64(&self) -> f64 {
        self.exact_fraction
            .as_ref()
            .map(rational::to_f64)
            .unwrap_or(self.exact)
    }

    /// Containment lower ≤ exact ≤ upper with the documented float slack.
    pub fn contained(&self) -> bool {
        let e = self.exact_as_f64();
        self.lower - FLOAT_SLACK <= e && e <= self.upper + FLOAT_SLACK
    }
}

pub fn sandwich_row(family: SandwichFamily, n: u64) -> Result<SandwichRow> {
    if n < 2 {
        return Err(Error::input(format!(
            "sandwich rows require n >= 2, got {n}"
        )));
    }
    let (lower, upper, exact) = match family {
        SandwichFamily::Path => (path_lower(n), path_upper(n), path_closeness_float(n)),
        SandwichFamily::Ladder => (ladder_lower(n), ladder_upper(n), ladder_closeness_float(n)),
    };
    let exact_fraction = (n <= EXACT_SUM_LIMIT).then(|| match family {
        SandwichFamily::Path => path_closeness_rational(n),
        SandwichFamily::Ladder => ladder_closeness_rational(n),
    });
    let exact_best = exact_fraction
        .as_ref()
        .map(rational::to_f64)
        .unwrap_or(exact);
    let pi_gap = (n as f64 * exact_best - std::f64::consts::PI).abs();
    Ok(SandwichRow {
        family,
        n,
        lower,
        exact,
        upper,
        exact_fraction,
        pi_gap,
    })
}

/// Lower closed form for P_n: (4/n)·√((n−1)/(n+1))·arctan(√((n−1)/(n+1))).
pub fn path_lower(n: u64) -> f64 {
    let nf = n as f64;
    let root = ((nf - 1.0) / (nf + 1.0)).sqrt();
    4.0 / nf * root * root.atan()
}

/// Upper closed form for P_n: (π/n)·√((n−1)/(n+1)) + (n−1)/(n·⌊n/2⌋·⌈n/2⌉).
pub fn path_upper(n: u64) -> f64 {
    let nf = n as f64;
    let root = ((nf - 1.0) / (nf + 1.0)).sqrt();
    std::f64::consts::PI / nf * root + (nf - 1.0) / (nf * (n / 2) as f64 * n.div_ceil(2) as f64)
}

/// Lower closed form for L_n:
/// ((4n−2)/(n√(n²+2n−1)))·arctan((n−1)/√(n²+2n−1)) + (2/n³)·(2n−1)²/(n²+2n−1).
pub fn ladder_lower(n: u64) -> f64 {
    let nf = n as f64;
    let q = (nf * nf + 2.0 * nf - 1.0).sqrt();
    (4.0 * nf - 2.0) / (nf * q) * ((nf - 1.0) / q).atan()
        + 2.0 / (nf * nf * nf) * (2.0 * nf - 1.0).powi(2) / (nf * nf + 2.0 * nf - 1.0)
}

/// Upper closed form for L_n: (π/n)·√((2n−1)/(2n+5)) + 2/(n(2n+5)).
pub fn ladder_upper(n: u64) -> f64 {
    let nf = n as f64;
    std::f64::consts::PI / nf * ((2.0 * nf - 1.0) / (2.0 * nf + 5.0)).sqrt()
        + 2.0 / (nf * (2.0 * nf + 5.0))
}

/// Exact C̄_C(P_n) by direct rational summation of the per-vertex forms.
pub fn path_closeness_rational(n: u64) -> Rational {
    let sum: Rational = (0..n)
        .map(|k| path_vertex_closeness(n, k))
        .fold(Rational::zero(), |acc, t| acc + t);
    sum / rational::uint(n)
}

/// Exact C̄_C(L_n); both rails share the per-index value.
pub fn ladder_closeness_rational(n: u64) -> Rational {
    let sum: Rational = (0..n)
        .map(|k| ladder_vertex_closeness(n, k))
        .fold(Rational::zero(), |acc, t| acc + t);
    sum / rational::uint(n)
}

/// C̄_C(P_n) with per-term f64 evaluation and Kahan accumulation.
pub fn path_closeness_float(n: u64) -> f64 {
    kahan_sum(n, |k, n| {
        let off = 2.0 * k as f64 - n as f64 + 1.0;
        4.0 * (n as f64 - 1.0) / (off * off + (n as f64) * (n as f64) - 1.0)
    }) / n as f64
}

/// C̄_C(L_n) with per-term f64 evaluation and Kahan accumulation.
pub fn ladder_closeness_float(n: u64) -> f64 {
    kahan_sum(n, |k, n| {
        let off = 2.0 * k as f64 - n as f64 + 1.0;
        (4.0 * n as f64 - 2.0) / (off * off + (n as f64) * (n as f64) + 2.0 * n as f64 - 1.0)
    }) / n as f64
}

fn kahan_sum(n: u64, term: impl Fn(u64, u64) -> f64) -> f64 {
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for k in 0..n {
        let y = term(k, n) - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn path_row_n4() {
        let row = sandwich_row(SandwichFamily::Path, 4).unwrap();
        assert_eq!(row.exact_fraction, Some(ratio(5, 8)));
        // closed forms recomputed independently
        assert!((row.lower - 0.5105041594).abs() < 1e-9, "lower {}", row.lower);
        assert!((row.upper - 0.7958668014).abs() < 1e-9, "upper {}", row.upper);
        assert!(row.contained());
        assert!((row.exact - 0.625).abs() < 1e-12);
    }

    #[test]
    fn ladder_row_n2_is_c4() {
        let row = sandwich_row(SandwichFamily::Ladder, 2).unwrap();
        assert_eq!(row.exact_fraction, Some(ratio(3, 4)));
        assert!((row.lower - 0.7311803751).abs() < 1e-9, "lower {}", row.lower);
        assert!((row.upper - 1.0180107932).abs() < 1e-9, "upper {}", row.upper);
        assert!(row.contained());
    }

    #[test]
    fn ladder_row_n3() {
        let row = sandwich_row(SandwichFamily::Ladder, 3).unwrap();
        assert!(row.contained());
        // terms 5/9 + 5/7 + 5/9 over n = 3
        assert_eq!(row.exact_fraction, Some(ratio(115, 189)));
    }

    #[test]
    fn float_accumulation_agrees_with_rational() {
        for n in [2u64, 3, 5, 17, 100, 341, 1000] {
            let p = path_closeness_rational(n);
            assert!(
                (path_closeness_float(n) - rational::to_f64(&p)).abs() <= FLOAT_SLACK,
                "path n = {n}"
            );
            let l = ladder_closeness_rational(n);
            assert!(
                (ladder_closeness_float(n) - rational::to_f64(&l)).abs() <= FLOAT_SLACK,
                "ladder n = {n}"
            );
        }
    }

    #[test]
    fn large_row_converges_to_pi() {
        let row = sandwich_row(SandwichFamily::Path, 1_000_000).unwrap();
        assert!(row.exact_fraction.is_none());
        assert!(row.contained());
        assert!(row.pi_gap <= 1e-5, "pi gap {}", row.pi_gap);
    }

    #[test]
    fn rejects_n_below_two() {
        assert!(sandwich_row(SandwichFamily::Path, 1).is_err());
    }
}
