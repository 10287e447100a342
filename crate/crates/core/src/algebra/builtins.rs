//! Matrix presentations of `so(k, k+n)` and `sl(n)`.
//!
//! `so(k, k+n)` preserves `diag(1_k, -1_{k+n})` and is laid out in blocks
//! `(k | k | n)`. Basis order (frozen, every serialized index refers to it):
//! `H_11..H_kk`, `F_ij` (i<j), `G_ij` (i<j), `H_ij` (i≠j), `X_st`, `Z_st`
//! (s = 1..n outer, t = 1..k inner), `D_ij` (i<j).
//!
//! With `E_ij = C_ij - C_ji`:
//! * `F_ij` puts `E_ij` in the first diagonal block, `G_ij` in the second;
//! * `H_ij` puts `C_ij` in block (1,2) and `C_ji` in block (2,1);
//! * `X_st` puts `C_st` in block (3,1) and its transpose in block (1,3);
//! * `Z_st` puts `C_st` in block (3,2) and minus its transpose in block (2,3);
//! * `D_ij` is `E_ij` in the last diagonal block.
//!
//! With this sign for `Z`, the Cartan part of `[X_ij, Z_st]` is `δ_is H_jj`-type
//! exactly as the block product formula predicts.

use crate::algebra::{names2, LieAlgebra};
use crate::matrix::Matrix;
use crate::scalar::qi;
use crate::{Error, QAlgebra, QMatrix, Result};

fn unit(size: usize, entries: &[(usize, usize, i64)]) -> QMatrix {
    let mut m = Matrix::zeros(size, size);
    for &(r, c, v) in entries {
        m[(r, c)] = qi(v);
    }
    m
}

/// `so(k, k+n)` with its canonical basis and matrix realization.
pub fn build_so_kkn(k: usize, n: usize) -> Result<QAlgebra> {
    if k == 0 {
        return Err(Error::InvalidInput("so(k,k+n) needs k >= 1".into()));
    }
    if 2 * k + n < 2 {
        return Err(Error::InvalidInput("so(k,k+n) needs 2k+n >= 2".into()));
    }
    let size = 2 * k + n;
    let wide = k >= 10 || n >= 10;
    let (b1, b2, b3) = (0, k, 2 * k);
    let mut names = Vec::new();
    let mut mats = Vec::new();
    let mut push = |name: String, m: QMatrix| {
        names.push(name);
        mats.push(m);
    };
    for i in 0..k {
        push(names2("H", i + 1, i + 1, wide), unit(size, &[(b1 + i, b2 + i, 1), (b2 + i, b1 + i, 1)]));
    }
    for i in 0..k {
        for j in i + 1..k {
            push(names2("F", i + 1, j + 1, wide), unit(size, &[(b1 + i, b1 + j, 1), (b1 + j, b1 + i, -1)]));
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            push(names2("G", i + 1, j + 1, wide), unit(size, &[(b2 + i, b2 + j, 1), (b2 + j, b2 + i, -1)]));
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i != j {
                push(names2("H", i + 1, j + 1, wide), unit(size, &[(b1 + i, b2 + j, 1), (b2 + j, b1 + i, 1)]));
            }
        }
    }
    for s in 0..n {
        for t in 0..k {
            push(names2("X", s + 1, t + 1, wide), unit(size, &[(b3 + s, b1 + t, 1), (b1 + t, b3 + s, 1)]));
        }
    }
    for s in 0..n {
        for t in 0..k {
            push(names2("Z", s + 1, t + 1, wide), unit(size, &[(b3 + s, b2 + t, 1), (b2 + t, b3 + s, -1)]));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            push(names2("D", i + 1, j + 1, wide), unit(size, &[(b3 + i, b3 + j, 1), (b3 + j, b3 + i, -1)]));
        }
    }
    LieAlgebra::from_matrices(names, mats)?.with_cartan_hint((0..k).collect())
}

/// `sl(n)` with Cartan basis `H_i = E_ii - E_{i+1,i+1}` followed by the
/// off-diagonal units `E_ij`, `i ≠ j`, in lexicographic order.
pub fn build_sl_n(n: usize) -> Result<QAlgebra> {
    if n < 2 {
        return Err(Error::InvalidInput("sl(n) needs n >= 2".into()));
    }
    let wide = n >= 10;
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n - 1 {
        names.push(format!("H_{}", i + 1));
        mats.push(unit(n, &[(i, i, 1), (i + 1, i + 1, -1)]));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                names.push(names2("E", i + 1, j + 1, wide));
                mats.push(unit(n, &[(i, j, 1)]));
            }
        }
    }
    LieAlgebra::from_matrices(names, mats)?.with_cartan_hint((0..n - 1).collect())
}
