//! Exact rational scalars.
//!
//! All scalar values in the crate — bilinear form values, coroot pairings,
//! operator coefficients, structure constants — are arbitrary-precision
//! rationals, always reduced with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The scalar type used everywhere.
pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Reduced fraction `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Exact integer value, if `r` is integral.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        let n = r.to_integer();
        i64::try_from(&n).ok()
    } else {
        None
    }
}

/// `p/q` form, `p` for integers. Round-trips through [`parse`].
pub fn format(r: &Rat) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the output of [`format`] (optionally signed `p` or `p/q`).
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Sign of `r` as −1, 0 or +1.
pub fn signum(r: &Rat) -> i64 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_parse_round_trip() {
        for (n, d) in [(1i64, 3i64), (-7, 2), (4, 1), (0, 5), (6, -4)] {
            let r = rat(n, d);
            assert_eq!(parse(&format(&r)).unwrap(), r);
        }
        assert_eq!(format(&rat(6, -4)), "-3/2");
        assert_eq!(format(&rat_int(5)), "5");
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(to_i64(&rat(10, 2)), Some(5));
        assert_eq!(to_i64(&rat(1, 2)), None);
    }
}
