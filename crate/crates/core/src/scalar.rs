//! Scalar abstraction shared by the dense kernels.
//!
//! Everything that only needs field (or integral-domain) operations is written
//! against [`Scalar`], so the same code runs over `f64`, machine-integer
//! ratios and arbitrary-precision rationals. The exact layers of the crate use
//! the [`Rational`](crate::Rational) alias.

use std::fmt::Debug;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Minimal algebraic interface for matrix entries.
///
/// Elimination routines assume exact zero tests, so floating point types are
/// accepted but only meaningful for well-conditioned inputs.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static {
    fn from_int(v: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        let mut n = v.unsigned_abs();
        // double-and-add keeps this valid for any ring
        let mut pow = one;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc + pow.clone();
            }
            pow = pow.clone() + pow;
            n >>= 1;
        }
        if v < 0 {
            -acc
        } else {
            acc
        }
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + Send + Sync + 'static {}

/// Build a rational from a pair of machine integers.
pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn qi(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Canonical `"p/q"` rendering (denominator always present and positive).
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `"p/q"` or `"p"`; surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => BigInt::from_str(s).map(BigRational::from_integer).map_err(|_| bad()),
    }
}

pub fn parse_rational_list(s: &str) -> Result<Vec<BigRational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // huge numerators/denominators: fall back to a scaled quotient
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a>(it: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// `true` when `2r` is an integer.
pub fn is_half_integer(r: &BigRational) -> bool {
    (r * qi(2)).is_integer()
}

pub fn abs(r: &BigRational) -> BigRational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = parse_rational("4/-6").unwrap();
        assert_eq!(format_rational(&r), "-2/3");
        assert_eq!(format_rational(&qi(0)), "0/1");
        assert_eq!(parse_rational(" 7 ").unwrap(), qi(7));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn from_i64_matches_native() {
        for v in [-9i64, -1, 0, 1, 2, 13, 1024] {
            assert_eq!(<f64 as Scalar>::from_int(v), v as f64);
            assert_eq!(<BigRational as Scalar>::from_int(v), qi(v));
        }
    }

    #[test]
    fn half_integers() {
        assert!(is_half_integer(&q(3, 2)));
        assert!(is_half_integer(&qi(-4)));
        assert!(!is_half_integer(&q(1, 3)));
    }
}
