//! Exact arithmetic: big rationals, integer polynomials and real-root
//! isolation on `[0, 1]`.

mod poly;
mod roots;

pub use poly::IntPolynomial;
pub use roots::{is_exact_root, IsolatingInterval, PointMembership, RootEntry, RootOutcome, RootSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `num/den`, a plain integer, or the literals `0` and `1`.
/// Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    if text.contains('.') || text.contains('e') || text.contains('E') {
        return Err(Error::InvalidParameter(format!(
            "{text:?} is not an exact rational; write it as num/den (e.g. 9312/10000)"
        )));
    }
    let bad = || Error::InvalidParameter(format!("{text:?} is not a rational of the form num/den"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::InvalidParameter(format!("{text:?} has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// Parses a probability and checks `0 <= p <= 1`.
pub fn parse_probability(text: &str) -> Result<Rational> {
    let p = parse_rational(text)?;
    check_probability(&p)?;
    Ok(p)
}

pub fn check_probability(p: &Rational) -> Result<()> {
    if p.is_negative() || *p > Rational::one() {
        Err(Error::ProbabilityOutOfRange(format_rational(p)))
    } else {
        Ok(())
    }
}

/// Always `num/den`, including integers (`1/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering rounded half away from zero to `digits` places.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r * Rational::from_integer(scale.clone());
    let (q, rem) = scaled.numer().abs().div_rem(scaled.denom());
    let rounded = if rem * 2u32 >= *scaled.denom() { q + 1u32 } else { q };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !rounded_is_zero(&int_part, &frac_part) { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
    }
}

fn rounded_is_zero(a: &BigInt, b: &BigInt) -> bool {
    a.is_zero() && b.is_zero()
}

pub(crate) fn int(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("1/2").unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), Rational::new(3.into(), 2.into()));
        assert_eq!(parse_rational("1").unwrap(), int(1));
        assert_eq!(parse_rational("0").unwrap(), int(0));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn probability_range() {
        assert!(parse_probability("9312/10000").is_ok());
        assert!(matches!(parse_probability("3/2"), Err(Error::ProbabilityOutOfRange(_))));
        assert!(matches!(parse_probability("-1/2"), Err(Error::ProbabilityOutOfRange(_))));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&int(1)), "1/1");
        assert_eq!(format_rational(&Rational::new(3842.into(), 896.into())), "1921/448");
        assert_eq!(to_decimal(&Rational::new(2.into(), 3.into()), 4), "0.6667");
        assert_eq!(to_decimal(&Rational::new(93115.into(), 100000.into()), 5), "0.93115");
        assert_eq!(to_decimal(&Rational::new((-1).into(), 8.into()), 2), "-0.13");
        assert_eq!(to_decimal(&Rational::new((-1).into(), 1000.into()), 2), "0.00");
        assert_eq!(to_decimal(&int(3), 0), "3");
    }
}
