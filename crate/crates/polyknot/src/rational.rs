//! Exact rational scalars and conversions.
//!
//! All coefficient arithmetic in this crate runs over `Rat` (arbitrary
//! precision rationals, always in lowest terms with positive denominator,
//! which `num_rational::BigRational` maintains for us).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Rational from a machine integer.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `p/q`.
pub fn rat_pq(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(Int::from(p), Int::from(q))
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRatError(pub String);

/// Parses an exact rational from an integer, `p/q`, or decimal literal.
///
/// Decimal literals are converted exactly: `2.279283653` becomes
/// `2279283653/10^9`. Scientific notation is not accepted.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    let err = || ParseRatError(s.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = Int::from_str(num.trim()).map_err(|_| err())?;
        let d = Int::from_str(den.trim()).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let neg = int_part.trim_start().starts_with('-');
        let ip = if int_part == "-" || int_part.is_empty() {
            Int::zero()
        } else {
            Int::from_str(int_part).map_err(|_| err())?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let fp = Int::from_str(frac_part).map_err(|_| err())?;
        let scale = Int::from(10u32).pow(frac_part.len() as u32);
        let mag = ip.abs() * &scale + fp;
        let signed = if neg { -mag } else { mag };
        return Ok(Rat::new(signed, scale));
    }
    Int::from_str(s).map(Rat::from_integer).map_err(|_| err())
}

/// Exact rational value of a finite `f64`.
pub fn rat_from_f64(x: f64) -> Rat {
    assert!(x.is_finite(), "cannot convert non-finite float");
    Rat::from_float(x).expect("finite float converts exactly")
}

/// Nearest `f64` to a rational, robust to huge numerators/denominators.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if let Some(f) = r.to_f64() {
        if f.is_finite() || r.numer().magnitude().bits() > 1000 {
            return f;
        }
    }
    // Fallback: scale numerator and denominator to comparable bit lengths.
    let nb = r.numer().magnitude().bits() as i64;
    let db = r.denom().magnitude().bits() as i64;
    let shift = (nb.max(db) - 80).max(0) as u64;
    let n = r.numer() >> shift;
    let d = r.denom() >> shift;
    if d.is_zero() {
        return if r.numer().is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
    }
    n.to_f64().unwrap_or(0.0) / d.to_f64().unwrap_or(1.0)
}

/// Formats a rational as `p` or `p/q`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_decimals() {
        assert_eq!(parse_rat("42").unwrap(), rat_i(42));
        assert_eq!(parse_rat("-7").unwrap(), rat_i(-7));
        assert_eq!(parse_rat("783769/4").unwrap(), rat_pq(783769, 4));
        assert_eq!(
            parse_rat("2.279283653").unwrap(),
            rat_pq(2_279_283_653, 1_000_000_000)
        );
        assert_eq!(parse_rat("-8.63068748").unwrap(), rat_pq(-863068748, 100_000_000));
        assert_eq!(parse_rat("-0.5").unwrap(), rat_pq(-1, 2));
        assert_eq!(parse_rat("12.2").unwrap(), rat_pq(61, 5));
        assert!(parse_rat("1e5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn f64_round_trips() {
        for x in [0.0, 1.5, -0.125, 44100000.0, 1e-9] {
            assert_eq!(rat_to_f64(&rat_from_f64(x)), x);
        }
        // Huge rationals still land on a finite float.
        let big = Rat::new(Int::from(10).pow(400) + 1, Int::from(10).pow(398));
        let f = rat_to_f64(&big);
        assert!((f - 100.0).abs() < 1e-9, "{f}");
    }
}
