//! Exact rationals and their `p/q` text form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `n^2 / 4`, the bipartite edge ceiling on `n` vertices.
pub fn quarter_square(n: usize) -> Rational {
    ratio((n * n) as i64, 4)
}

/// Formats as `p/q` in lowest terms, always with an explicit denominator.
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_ratio(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

/// `serialize_with` adapter writing a rational as its `p/q` string.
pub fn serde_ratio<S: serde::Serializer>(r: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&format_ratio(r))
}

/// True when the denominator is 1 or 2.
pub fn is_integer_or_half(r: &Rational) -> bool {
    r.denom().is_one() || *r.denom() == BigInt::from(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_with_denominator() {
        assert_eq!(format_ratio(&int(0)), "0/1");
        assert_eq!(format_ratio(&ratio(9, 4)), "9/4");
        assert_eq!(format_ratio(&ratio(6, 4)), "3/2");
        assert_eq!(format_ratio(&ratio(-2, 4)), "-1/2");
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_ratio("3/2"), Some(ratio(3, 2)));
        assert_eq!(parse_ratio("12"), Some(int(12)));
        assert_eq!(parse_ratio("1/0"), None);
        assert_eq!(parse_ratio("x"), None);
    }
}
