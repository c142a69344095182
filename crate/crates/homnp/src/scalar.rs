//! Exact rational scalars and their canonical text form.
//!
//! Every scalar is an arbitrary-precision rational kept in canonical form
//! (fully reduced, denominator positive), so equality of values is structural
//! equality. The text grammar is strict: an optional sign, a decimal
//! numerator, and optionally a slash followed by a positive decimal
//! denominator, as in `"3"`, `"-1/2"`, `"+7/3"`.

use num::bigint::BigInt;
use num::{One, Zero};

pub type Rational = num::BigRational;

/// n/d as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer n as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses the strict `"p"` / `"p/q"` grammar. The error is a human-readable
/// reason without positional context (callers add the field path).
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let (num_part, den_part) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num_part
        .strip_prefix('+')
        .or_else(|| num_part.strip_prefix('-'))
        .unwrap_or(num_part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected an integer numerator, found {text:?}"));
    }
    let numer: BigInt = num_part.parse().expect("validated digit string");
    let denom = match den_part {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!(
                    "expected a positive integer denominator, found {text:?}"
                ));
            }
            d.parse().expect("validated digit string")
        }
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("+7/3").unwrap(), rat(7, 3));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in ["", "/2", "1/", "1/0", "1/-2", "1/+2", "a", "1.5", " 1", "1 ", "1//2"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert_eq!(format_rational(&int(0)), "0");
        assert_eq!(format_rational(&rat(2, -4)), "-1/2");
    }

    #[test]
    fn round_trips_canonical_form() {
        for (n, d) in [(0, 1), (5, 3), (-5, 3), (22, 7), (-1, 1000000)] {
            let r = rat(n, d);
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
