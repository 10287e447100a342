//! Exact characteristic polynomials and integer eigenvalues.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::{QMatrix, Rational};

/// Reduce to upper Hessenberg form by elementary similarities.
fn hessenberg(a: &QMatrix) -> QMatrix {
    let n = a.rows();
    let mut h = a.clone();
    for c in 0..n.saturating_sub(2) {
        let Some(i) = (c + 1..n).find(|&i| !h[(i, c)].is_zero()) else {
            continue;
        };
        if i != c + 1 {
            h.swap_rows(i, c + 1);
            for r in 0..n {
                let t = h[(r, i)].clone();
                h[(r, i)] = h[(r, c + 1)].clone();
                h[(r, c + 1)] = t;
            }
        }
        let piv = h[(c + 1, c)].clone();
        for r in c + 2..n {
            if h[(r, c)].is_zero() {
                continue;
            }
            let t = &h[(r, c)] / &piv;
            for col in 0..n {
                let v = &h[(c + 1, col)] * &t;
                h[(r, col)] -= v;
            }
            for row in 0..n {
                let v = &h[(row, r)] * &t;
                h[(row, c + 1)] += v;
            }
        }
    }
    h
}

fn poly_mul_linear(p: &[Rational], root: &Rational) -> Vec<Rational> {
    // (x - root) p(x), coefficients low to high
    let mut out = vec![Rational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * root;
    }
    out
}

/// Monic characteristic polynomial `det(xI - A)`, coefficients low to high.
pub fn charpoly(a: &QMatrix) -> Vec<Rational> {
    let n = a.rows();
    let h = hessenberg(a);
    let mut polys: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for m in 0..n {
        let mut next = poly_mul_linear(&polys[m], &h[(m, m)]);
        let mut prod = Rational::one();
        for i in (0..m).rev() {
            prod *= &h[(i + 1, i)];
            if prod.is_zero() {
                break;
            }
            let coef = &h[(i, m)] * &prod;
            if coef.is_zero() {
                continue;
            }
            for (d, c) in polys[i].iter().enumerate() {
                next[d] -= &coef * c;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Distinct integer roots of a monic integer polynomial, ascending.
pub fn integer_roots(p: &[BigInt]) -> Vec<BigInt> {
    let deg = p.len() - 1;
    let shift = p.iter().position(|c| !c.is_zero()).unwrap_or(deg);
    let mut roots = Vec::new();
    if shift > 0 {
        roots.push(BigInt::zero());
    }
    let q = &p[shift..];
    let qdeg = q.len() - 1;
    if qdeg == 0 {
        return roots;
    }
    // Fujiwara-type bound: every root has |r| <= 2 max |q_{deg-i}|^{1/i}
    let mut bits = 0u64;
    for i in 1..=qdeg {
        let b = q[qdeg - i].abs().bits();
        bits = bits.max(b.div_ceil(i as u64));
    }
    let bound = BigInt::one() << (bits + 1);
    let a0 = &q[0];
    let mut r = BigInt::one();
    let mut found = Vec::new();
    while r <= bound {
        for cand in [-r.clone(), r.clone()] {
            if a0.is_multiple_of(&cand) && eval(q, &cand).is_zero() {
                found.push(cand);
            }
        }
        r += 1;
    }
    roots.extend(found);
    roots.sort();
    roots
}

/// Scale a rational matrix to an integer one, returning the scale factor.
pub fn integer_scaled(a: &QMatrix) -> (Matrix<Rational>, BigInt) {
    let d = crate::scalar::common_denominator(a.entries());
    let s = Rational::from_integer(d.clone());
    (a.scale(&s), d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    fn int_poly(p: &[Rational]) -> Vec<BigInt> {
        p.iter().map(|c| c.to_integer()).collect()
    }

    #[test]
    fn charpoly_of_companion_like_matrix() {
        // eigenvalues 1, 2, 3 after a non-trivial similarity
        let a = Matrix::from_rows(vec![
            vec![qi(2), qi(1), qi(0)],
            vec![qi(0), qi(1), qi(0)],
            vec![qi(4), qi(-2), qi(3)],
        ])
        .unwrap();
        let p = charpoly(&a);
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        assert_eq!(p, vec![qi(-6), qi(11), qi(-6), qi(1)]);
        let roots = integer_roots(&int_poly(&p));
        assert_eq!(roots, vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)]);
    }

    #[test]
    fn charpoly_matches_determinant_definition() {
        let a = Matrix::from_rows(vec![
            vec![qi(0), qi(2), qi(-1), qi(5)],
            vec![qi(3), qi(0), qi(0), qi(1)],
            vec![qi(0), qi(0), qi(0), qi(0)],
            vec![qi(1), qi(-4), qi(2), qi(7)],
        ])
        .unwrap();
        let p = charpoly(&a);
        for x in -3..=3 {
            let xi = Matrix::identity(4).scale(&qi(x));
            let det = (&xi - &a).determinant().unwrap();
            let val = p.iter().rev().fold(qi(0), |acc, c| acc * qi(x) + c);
            assert_eq!(det, val, "x = {x}");
        }
    }

    #[test]
    fn zero_and_repeated_roots() {
        // x^2 (x+2)^2 (x-5) = x^5 - x^4 - 16x^3 - 20x^2
        let p: Vec<BigInt> = [0, 0, -20, -16, -1, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(integer_roots(&p), vec![BigInt::from(-2), BigInt::from(0), BigInt::from(5)]);
    }

    #[test]
    fn no_integer_roots() {
        // x^2 - 2
        let p: Vec<BigInt> = [-2, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert!(integer_roots(&p).is_empty());
    }
}
