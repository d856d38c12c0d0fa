//! The scalar abstraction every family is generic over.
//!
//! Exact work uses [`Rational`]; `f64`/`f32` implement the same trait so the
//! formulas can be evaluated approximately when that is useful, but nothing in
//! the verification path ever touches a float.

use std::collections::HashMap;
use std::fmt::Debug;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::stirling::{CoeffTable, TableKey};

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// An ordered field the families can be computed over.
pub trait Scalar:
    Clone + Debug + PartialEq + PartialOrd + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    /// Looks up a connection table, running `build` on a miss.
    ///
    /// Types without a cache just build.
    fn cached_table(
        key: &TableKey<Self>,
        build: impl FnOnce() -> CoeffTable<Self>,
    ) -> CoeffTable<Self> {
        let _ = key;
        build()
    }
}

impl Scalar for f64 {}
impl Scalar for f32 {}

static RATIONAL_TABLES: Lazy<RwLock<HashMap<TableKey<Rational>, CoeffTable<Rational>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

impl Scalar for Rational {
    fn cached_table(
        key: &TableKey<Self>,
        build: impl FnOnce() -> CoeffTable<Self>,
    ) -> CoeffTable<Self> {
        if let Some(hit) = RATIONAL_TABLES
            .read()
            .expect("table cache poisoned")
            .get(key)
        {
            return hit.clone();
        }
        let table = build();
        RATIONAL_TABLES
            .write()
            .expect("table cache poisoned")
            .entry(key.clone())
            .or_insert_with(|| table.clone());
        table
    }
}

pub fn from_usize<T: Scalar>(n: usize) -> T {
    T::from_usize(n).expect("usize fits the scalar type")
}

pub fn from_i64<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("i64 fits the scalar type")
}

/// `(-1)^n`
pub fn sign<T: Scalar>(n: usize) -> T {
    if n.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

pub fn pow<T: Scalar>(base: &T, exp: usize) -> T {
    num_traits::pow(base.clone(), exp)
}

pub fn factorial<T: Scalar>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * from_usize::<T>(i))
}

pub fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * from_usize::<T>(n - i) / from_usize::<T>(i + 1);
    }
    acc
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div<T: Scalar>(num: T, den: &T) -> Result<T> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(num / den.clone())
}

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or a bare integer into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num = BigInt::parse_bytes(num.as_bytes(), 10).ok_or_else(bad)?;
    let den = BigInt::parse_bytes(den.as_bytes(), 10).ok_or_else(bad)?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses a comma-separated list of rationals. The empty string is the empty list.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_rational).collect()
}

/// Largest of `|numerator|` and `denominator`.
pub fn height(value: &Rational) -> BigInt {
    let num = value.numer().abs();
    let den = value.denom().clone();
    if num > den {
        num
    } else {
        den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-2/4").unwrap(), rational(-1, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), rational(-1, 2));
        assert_eq!(format_rational(&rational(3, -6)), "-1/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(format_rational(&rational(4, 2)), "2");
        assert!(matches!(parse_rational("1/0"), Err(Error::Parse(_))));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
        assert_eq!(parse_rational_list("").unwrap(), vec![]);
        assert_eq!(
            parse_rational_list("0, 1/2").unwrap(),
            vec![int(0), rational(1, 2)]
        );
    }

    #[test]
    fn combinatorial_helpers() {
        assert_eq!(factorial::<Rational>(5), int(120));
        assert_eq!(binomial::<Rational>(6, 2), int(15));
        assert_eq!(binomial::<Rational>(2, 3), int(0));
        assert_eq!(sign::<Rational>(3), int(-1));
        assert_eq!(pow(&rational(2, 3), 3), rational(8, 27));
        assert_eq!(pow(&rational(2, 3), 0), int(1));
        assert!(matches!(
            checked_div(int(1), &int(0)),
            Err(Error::DivisionByZero)
        ));
        assert_eq!(height(&rational(-7, 3)), BigInt::from(7));
    }
}
