//! Matrix exponential by scaling and squaring with a diagonal Padé approximant.

use num_traits::Float;

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Degree of the numerator and denominator of the Padé approximant.
const PADE_ORDER: usize = 8;

fn inf_norm<T: Float + Scalar>(a: &Matrix<T>) -> T {
    (0..a.rows()).map(|r| a.row(r).iter().fold(T::zero(), |s, x| s + x.abs())).fold(T::zero(), T::max)
}

/// Frobenius norm.
pub fn frobenius<T: Float + Scalar>(a: &Matrix<T>) -> T {
    a.entries().iter().fold(T::zero(), |s, x| s + *x * *x).sqrt()
}

/// Solve `D X = N` by Gaussian elimination with partial pivoting.
fn solve<T: Float + Scalar>(d: &Matrix<T>, n: &Matrix<T>) -> Matrix<T> {
    let size = d.rows();
    let mut a = d.clone();
    let mut b = n.clone();
    for col in 0..size {
        let piv = (col..size)
            .max_by(|&x, &y| a[(x, col)].abs().partial_cmp(&a[(y, col)].abs()).unwrap_or(std::cmp::Ordering::Equal))
            .expect("non-empty range");
        a.swap_rows(col, piv);
        b.swap_rows(col, piv);
        let p = a[(col, col)];
        for r in col + 1..size {
            let f = a[(r, col)] / p;
            if f == T::zero() {
                continue;
            }
            for c in col..size {
                let v = a[(col, c)];
                a[(r, c)] = a[(r, c)] - f * v;
            }
            for c in 0..b.cols() {
                let v = b[(col, c)];
                b[(r, c)] = b[(r, c)] - f * v;
            }
        }
    }
    for col in (0..size).rev() {
        let p = a[(col, col)];
        for c in 0..b.cols() {
            let mut v = b[(col, c)];
            for k in col + 1..size {
                v = v - a[(col, k)] * b[(k, c)];
            }
            b[(col, c)] = v / p;
        }
    }
    b
}

/// `exp(A)` for a square floating-point matrix.
pub fn expm<T: Float + Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let n = a.rows();
    let norm = inf_norm(a);
    let half = T::from(0.5).expect("float constant");
    let mut squarings = 0i32;
    if norm > half {
        squarings = (norm / half).log2().ceil().to_i32().expect("finite norm").max(0);
    }
    let scale = T::from(2.0).expect("float constant").powi(-squarings);
    let x = a.scale(&scale);

    let mut c = T::one();
    let mut num = Matrix::identity(n);
    let mut den = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    let q = PADE_ORDER as f64;
    for k in 1..=PADE_ORDER {
        let kf = k as f64;
        c = c * T::from((q - kf + 1.0) / (kf * (2.0 * q - kf + 1.0))).expect("float constant");
        power = &power * &x;
        let term = power.scale(&c);
        num = &num + &term;
        den = if k % 2 == 0 { &den + &term } else { &den - &term };
    }
    let mut e = solve(&den, &num);
    for _ in 0..squarings {
        e = &e * &e;
    }
    e
}
