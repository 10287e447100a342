//! Exact Pfaffians of antisymmetric matrices.
//!
//! The kernel is a fraction-free skew elimination: after the `s`-th pivot
//! pair, every remaining entry `(p, q)` holds the Pfaffian of the principal
//! submatrix on the pivot indices plus `{p, q}`. The update is the
//! four-index Pfaffian identity, whose division by the previous pivot is exact
//! in any integral domain.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::scalar::{common_denominator, Scalar};
use crate::{Error, Rational, Result};

fn check_shape<T: Scalar>(m: &Matrix<T>) -> Result<()> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", m.rows(), m.cols())));
    }
    if m.rows() % 2 == 1 {
        return Err(Error::OddDimension(m.rows()));
    }
    if !m.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    Ok(())
}

fn swap_index<T: Scalar>(m: &mut Matrix<T>, a: usize, b: usize) {
    let n = m.rows();
    for c in 0..n {
        let t = m[(a, c)].clone();
        m[(a, c)] = m[(b, c)].clone();
        m[(b, c)] = t;
    }
    for r in 0..n {
        let t = m[(r, a)].clone();
        m[(r, a)] = m[(r, b)].clone();
        m[(r, b)] = t;
    }
}

/// Pfaffian over an integral domain (`i64`, `BigInt`, rationals, ...).
///
/// Every division performed is exact when `T` is an integral domain.
pub fn pfaffian_fraction_free<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    check_shape(m)?;
    let n = m.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut w = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for s in 0..n / 2 {
        let (a, b) = (2 * s, 2 * s + 1);
        let Some(j) = (b..n).find(|&j| !w[(a, j)].is_zero()) else {
            return Ok(T::zero());
        };
        if j != b {
            swap_index(&mut w, j, b);
            negate = !negate;
        }
        if s + 1 == n / 2 {
            break;
        }
        let piv = w[(a, b)].clone();
        for p in b + 1..n {
            for q in p + 1..n {
                let v = (piv.clone() * w[(p, q)].clone() - w[(a, p)].clone() * w[(b, q)].clone()
                    + w[(a, q)].clone() * w[(b, p)].clone())
                    / prev.clone();
                w[(q, p)] = -v.clone();
                w[(p, q)] = v;
            }
        }
        prev = piv;
    }
    let top = w[(n - 2, n - 1)].clone();
    Ok(if negate { -top } else { top })
}

/// Exact Pfaffian of a rational antisymmetric matrix.
///
/// Denominators are cleared first so the elimination runs over `BigInt`;
/// the 0×0 matrix has Pfaffian 1.
pub fn pfaffian(m: &Matrix<Rational>) -> Result<Rational> {
    check_shape(m)?;
    let l = common_denominator(m.entries());
    let scaled: Matrix<BigInt> = m.map(|x| (x * Rational::from_integer(l.clone())).to_integer());
    let pf = pfaffian_fraction_free(&scaled)?;
    let half = (m.rows() / 2) as u32;
    let denom = num_traits::pow::pow(l, half as usize);
    Ok(Rational::new(pf, if denom.is_zero() { BigInt::one() } else { denom }))
}
