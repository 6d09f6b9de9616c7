//! Exact rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator. This module adds the handful of helpers
//! the rest of the crate needs: the `"a/b"` text form used in every file
//! format, and simplest-fraction selection inside an open interval.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `"a/b"` form, always with an explicit denominator.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"a/b"` or `"a"`. Whitespace around the parts is tolerated.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("`{s}` is not a rational of the form a/b"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("`{s}` has zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// The simplest rational (smallest denominator, then smallest numerator in
/// absolute value) lying strictly inside `(lo, hi)`.
///
/// Panics if `lo >= hi`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi, "empty interval");
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !hi.is_positive() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    let next = &fl + Rational::one();
    if next < *hi {
        return next;
    }
    let a = lo - &fl;
    let b = hi - &fl;
    if a.is_zero() {
        let y = (b.recip()).floor() + Rational::one();
        return fl + y.recip();
    }
    let y = simplest_between(&b.recip(), &a.recip());
    fl + y.recip()
}

pub fn floor_to_bigint(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn ceil_to_bigint(r: &Rational) -> BigInt {
    r.numer().div_ceil(r.denom())
}

/// Serde adapter writing rationals as `"a/b"` strings.
pub mod fraction_str {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::{parse_rational, to_fraction_string, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_fraction_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}
