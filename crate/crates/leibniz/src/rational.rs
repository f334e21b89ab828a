//! The coefficient field: exact rationals with strict string parsing.
//!
//! All computations in this crate happen over `ℚ`; no floating point is used
//! anywhere. Scalars are [`num_rational::BigRational`] values, which keep the
//! numerator and denominator coprime with a positive denominator, so equality
//! and zero tests are exact.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// Exact scalar `p/q` with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `num/den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses a rational from the interchange syntax: `"p"` or `"p/q"` with an
/// optional leading minus on `p` and a strictly positive `q`.
///
/// This is deliberately stricter than [`std::str::FromStr`] for
/// [`Rational`]: whitespace, signs on the denominator and empty components
/// are rejected so that documents have a single canonical spelling.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let bad = || ParseError::BadRational(s.to_string());
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_integer(num_str).ok_or_else(bad)?;
    let denom = match den_str {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return Err(bad());
            }
            let d: BigUint = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            BigInt::from(d)
        }
    };
    Ok(Rational::new(numer, denom))
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let (negative, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let value: BigUint = digits.parse().ok()?;
    let value = BigInt::from(value);
    Some(if negative { -value } else { value })
}

/// Renders a rational in the interchange syntax (`"p"` or `"p/q"`).
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Exact `r`-th root of a rational, if one exists in `ℚ`.
///
/// For even `r` the input must be non-negative; the non-negative root is
/// returned. For odd `r` the sign is preserved.
pub fn rational_root(value: &Rational, r: u32) -> Option<Rational> {
    assert!(r >= 1, "root index must be positive");
    if r == 1 {
        return Some(value.clone());
    }
    if value.is_zero() {
        return Some(Rational::zero());
    }
    if value.is_negative() && r.is_multiple_of(2) {
        return None;
    }
    let numer = exact_root(&value.numer().magnitude().clone(), r)?;
    let denom = exact_root(&value.denom().magnitude().clone(), r)?;
    let mut root = Rational::new(BigInt::from(numer), BigInt::from(denom));
    if value.is_negative() {
        root = -root;
    }
    Some(root)
}

fn exact_root(value: &BigUint, r: u32) -> Option<BigUint> {
    let root = value.nth_root(r);
    if root.pow(r) == *value {
        Some(root)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational("1/2").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(parse_rational("0").unwrap(), Rational::zero());
    }

    #[test]
    fn rejects_malformed_input() {
        for s in [
            "", " 1", "1 ", "1/.2", "1/-2", "1/0", "--3", "+2", "a/b", "1/", "/2",
        ] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&rat(5)), "5");
        assert_eq!(format_rational(&frac(-3, 4)), "-3/4");
        assert_eq!(format_rational(&frac(4, 2)), "2");
    }

    #[test]
    fn roots_in_q() {
        assert_eq!(rational_root(&frac(4, 9), 2), Some(frac(2, 3)));
        assert_eq!(rational_root(&rat(-8), 3), Some(rat(-2)));
        assert_eq!(rational_root(&rat(4), 3), None);
        assert_eq!(rational_root(&rat(-4), 2), None);
        assert_eq!(rational_root(&frac(1, 27), 3), Some(frac(1, 3)));
    }
}
