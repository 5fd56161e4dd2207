//! Exact rational arithmetic, the carrier for every distance-derived metric.
//!
//! Backed by [`num::BigRational`]: fractions are always in lowest terms with a
//! positive denominator, and comparison/arithmetic are exact.

use num::bigint::BigInt;
use num::ToPrimitive;

pub use num::BigRational as Rational;

/// Exact rational from an integer.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact rational from an unsigned integer.
pub fn uint(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact fraction `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact fraction from unsigned parts. Panics if `den == 0`.
pub fn ratio_u(num: u64, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Nearest f64; NaN if the conversion is not representable.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Canonical fraction string: `"7/9"`, or just `"3"` for integers.
pub fn fraction_string(r: &Rational) -> String {
    r.to_string()
}

/// Exact integer floor.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Exact integer ceiling.
pub fn ceil_int(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}
