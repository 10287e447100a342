//! Finite-dimensional Lie algebras given by sparse structure constants.

mod builtins;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::matrix::{rank_of, Matrix};
use crate::scalar::Scalar;
use crate::{Error, QVector, Rational, Result};

pub use builtins::{build_sl_n, build_so_kkn};

/// Sparse linear combination `Σ c_k e_k`.
pub type Sparse<T> = Vec<(usize, T)>;

/// A Lie algebra on a named basis.
///
/// Only pairs `i < j` are stored; `[e_j, e_i] = -[e_i, e_j]` and
/// `[e_i, e_i] = 0` are implied. Construction validates antisymmetry, the
/// Jacobi identity and, when present, the matrix realization, so a value of
/// this type always satisfies the Lie axioms.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<T> {
    basis: Vec<String>,
    brackets: BTreeMap<(usize, usize), Sparse<T>>,
    realization: Option<Vec<Matrix<T>>>,
    cartan_hint: Option<Vec<usize>>,
}

/// Outcome of a Jacobi sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub holds: bool,
    pub failing_triple: Option<(usize, usize, usize)>,
}

fn normalize<T: Scalar>(mut v: Sparse<T>) -> Sparse<T> {
    v.sort_by_key(|(k, _)| *k);
    let mut out: Sparse<T> = Vec::with_capacity(v.len());
    for (k, c) in v {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => *lc = lc.clone() + c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl<T: Scalar> LieAlgebra<T> {
    /// Build from a bracket table. Pairs may be given in either order; if a
    /// pair appears both ways the two entries must be negatives of each other.
    pub fn from_table(
        basis: Vec<String>,
        table: Vec<((usize, usize), Sparse<T>)>,
        realization: Option<Vec<Matrix<T>>>,
    ) -> Result<Self> {
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::InvalidInput("algebra must have positive dimension".into()));
        }
        let mut brackets: BTreeMap<(usize, usize), Sparse<T>> = BTreeMap::new();
        let mut seen_reversed: BTreeMap<(usize, usize), Sparse<T>> = BTreeMap::new();
        for ((i, j), out) in table {
            if i >= dim || j >= dim || out.iter().any(|(k, _)| *k >= dim) {
                return Err(Error::InvalidInput(format!("bracket index out of range in pair ({i},{j})")));
            }
            let out = normalize(out);
            if i == j {
                if !out.is_empty() {
                    return Err(Error::NotAntisymmetricTable(i, j));
                }
                continue;
            }
            let (key, val, target) = if i < j {
                ((i, j), out, &mut brackets)
            } else {
                ((j, i), out.into_iter().map(|(k, c)| (k, -c)).collect(), &mut seen_reversed)
            };
            if let Some(prev) = target.insert(key, val.clone()) {
                if prev != val {
                    return Err(Error::NotAntisymmetricTable(key.0, key.1));
                }
            }
        }
        for (key, val) in seen_reversed {
            match brackets.get(&key) {
                Some(prev) if *prev != val => return Err(Error::NotAntisymmetricTable(key.0, key.1)),
                Some(_) => {}
                None => {
                    brackets.insert(key, val);
                }
            }
        }
        brackets.retain(|_, v| !v.is_empty());
        let alg = LieAlgebra { basis, brackets, realization: None, cartan_hint: None };
        if let Some((i, j, k)) = alg.verify_jacobi().failing_triple {
            return Err(Error::JacobiFailure(i, j, k));
        }
        match realization {
            Some(mats) => alg.with_realization(mats),
            None => Ok(alg),
        }
    }

    /// Attach a faithful matrix realization, checking commutators exactly.
    pub fn with_realization(mut self, mats: Vec<Matrix<T>>) -> Result<Self> {
        if mats.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} realization matrices for dimension {}",
                mats.len(),
                self.dim()
            )));
        }
        let n = mats[0].rows();
        if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch("realization matrices differ in size".into()));
        }
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let lhs = mats[i].commutator(&mats[j]);
                let mut rhs = Matrix::zeros(n, n);
                for (k, c) in self.bracket_basis_sparse(i, j) {
                    rhs = &rhs + &mats[k].scale(&c);
                }
                if lhs != rhs {
                    return Err(Error::RealizationMismatch(i, j));
                }
            }
        }
        self.realization = Some(mats);
        Ok(self)
    }

    /// Algebra spanned by linearly independent matrices closed under commutator.
    pub fn from_matrices(basis: Vec<String>, mats: Vec<Matrix<T>>) -> Result<Self> {
        let d = mats.len();
        if d == 0 || basis.len() != d {
            return Err(Error::DimensionMismatch("names and matrices differ in count".into()));
        }
        let n = mats[0].rows();
        let flat: Vec<Vec<T>> = mats.iter().map(|m| m.entries().to_vec()).collect();
        let a = Matrix::from_columns(&flat, n * n)?;
        // rows of `a` that carry a full-rank d x d block
        let (_, pivot_rows) = a.transpose().rref();
        if pivot_rows.len() < d {
            return Err(Error::RankDeficient { rank: pivot_rows.len(), len: d });
        }
        let block = Matrix::from_fn(d, d, |r, c| a[(pivot_rows[r], c)].clone());
        let inv = block.inverse().ok_or(Error::RankDeficient { rank: 0, len: d })?;
        let mut table = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let comm = mats[i].commutator(&mats[j]);
                let y: Vec<T> = pivot_rows.iter().map(|&r| comm.entries()[r].clone()).collect();
                let x = inv.mul_vec(&y);
                if a.mul_vec(&x) != comm.entries() {
                    return Err(Error::InvalidInput(format!(
                        "commutator of {} and {} leaves the span",
                        basis[i], basis[j]
                    )));
                }
                let sparse: Sparse<T> =
                    x.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if !sparse.is_empty() {
                    table.push(((i, j), sparse));
                }
            }
        }
        LieAlgebra::from_table(basis, table, Some(mats))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn realization(&self) -> Option<&[Matrix<T>]> {
        self.realization.as_deref()
    }

    /// Basis indices suggested as the Cartan subspace, if recorded.
    pub fn cartan_hint(&self) -> Option<&[usize]> {
        self.cartan_hint.as_deref()
    }

    pub fn with_cartan_hint(mut self, idx: Vec<usize>) -> Result<Self> {
        if idx.iter().any(|&i| i >= self.dim()) {
            return Err(Error::InvalidInput("cartan index out of range".into()));
        }
        self.cartan_hint = Some(idx);
        Ok(self)
    }

    /// Stored pairs `i < j` with nonzero bracket.
    pub fn table(&self) -> impl Iterator<Item = (&(usize, usize), &Sparse<T>)> {
        self.brackets.iter()
    }

    pub fn bracket_basis_sparse(&self, i: usize, j: usize) -> Sparse<T> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default(),
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vec<T> {
        let mut v = vec![T::zero(); self.dim()];
        v[i] = T::one();
        v
    }

    /// `[e_i, e_j]` as a dense vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<T> {
        let mut v = vec![T::zero(); self.dim()];
        for (k, c) in self.bracket_basis_sparse(i, j) {
            v[k] = c;
        }
        v
    }

    /// Bilinear bracket of two coordinate vectors.
    pub fn bracket(&self, a: &[T], b: &[T]) -> Result<Vec<T>> {
        let d = self.dim();
        if a.len() != d || b.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in dimension {d}",
                a.len(),
                b.len()
            )));
        }
        let mut out = vec![T::zero(); d];
        for (&(i, j), val) in &self.brackets {
            // a_i b_j - a_j b_i
            let coef = a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
            if coef.is_zero() {
                continue;
            }
            for (k, c) in val {
                out[*k] = out[*k].clone() + coef.clone() * c.clone();
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(x)`: column `j` holds `[x, e_j]`.
    pub fn ad(&self, x: &[T]) -> Result<Matrix<T>> {
        let d = self.dim();
        if x.len() != d {
            return Err(Error::DimensionMismatch(format!("ad of vector of length {} in dimension {d}", x.len())));
        }
        let mut m: Matrix<T> = Matrix::zeros(d, d);
        for (&(i, j), val) in &self.brackets {
            for (k, c) in val {
                // [x, e_j] gets x_i c, [x, e_i] gets -x_j c
                if !x[i].is_zero() {
                    m[(*k, j)] = m[(*k, j)].clone() + x[i].clone() * c.clone();
                }
                if !x[j].is_zero() {
                    m[(*k, i)] = m[(*k, i)].clone() - x[j].clone() * c.clone();
                }
            }
        }
        Ok(m)
    }

    fn bracket_sparse_with_basis(&self, v: &Sparse<T>, k: usize) -> Sparse<T> {
        let mut acc: Sparse<T> = Vec::new();
        for (i, c) in v {
            for (m, d) in self.bracket_basis_sparse(*i, k) {
                acc.push((m, c.clone() * d));
            }
        }
        normalize(acc)
    }

    /// Check the Jacobi identity on all basis triples `i < j < k`.
    pub fn verify_jacobi(&self) -> JacobiReport {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                let ij = self.bracket_basis_sparse(i, j);
                for k in j + 1..d {
                    let jk = self.bracket_basis_sparse(j, k);
                    let ki = self.bracket_basis_sparse(k, i);
                    let mut total = self.bracket_sparse_with_basis(&ij, k);
                    total.extend(self.bracket_sparse_with_basis(&jk, i));
                    total.extend(self.bracket_sparse_with_basis(&ki, j));
                    if !normalize(total).is_empty() {
                        return JacobiReport { holds: false, failing_triple: Some((i, j, k)) };
                    }
                }
            }
        }
        JacobiReport { holds: true, failing_triple: None }
    }

    /// Killing form `B(e_i, e_j) = tr(ad e_i ∘ ad e_j)` and the flag `det B ≠ 0`.
    pub fn killing_form(&self) -> (Matrix<T>, bool) {
        let d = self.dim();
        let ads: Vec<Matrix<T>> =
            (0..d).map(|i| self.ad(&self.basis_vector(i)).expect("basis vector has length dim")).collect();
        let b = Matrix::from_fn(d, d, |i, j| {
            let mut acc = T::zero();
            for p in 0..d {
                for q in 0..d {
                    let x = &ads[i][(p, q)];
                    if x.is_zero() {
                        continue;
                    }
                    let y = &ads[j][(q, p)];
                    if !y.is_zero() {
                        acc = acc + x.clone() * y.clone();
                    }
                }
            }
            acc
        });
        let nondegenerate = !b.determinant().expect("square").is_zero();
        (b, nondegenerate)
    }

    /// Image of a coordinate vector under the realization.
    pub fn realize(&self, v: &[T]) -> Option<Matrix<T>> {
        let mats = self.realization.as_ref()?;
        let n = mats[0].rows();
        let mut out = Matrix::zeros(n, n);
        for (m, c) in mats.iter().zip(v) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        Some(out)
    }

    /// Direct sum with an `l`-dimensional central ideal spanned by `names`.
    ///
    /// The realization, if any, is extended block-diagonally with one
    /// nilpotent 2x2 block per central generator.
    pub fn central_sum(&self, names: Vec<String>) -> Result<Self> {
        let d = self.dim();
        let l = names.len();
        let mut basis = self.basis.clone();
        basis.extend(names);
        let mut alg = LieAlgebra {
            basis,
            brackets: self.brackets.clone(),
            realization: None,
            cartan_hint: self.cartan_hint.clone(),
        };
        if let Some(mats) = &self.realization {
            let n = mats[0].rows();
            let size = n + 2 * l;
            let mut out: Vec<Matrix<T>> = mats
                .iter()
                .map(|m| Matrix::from_fn(size, size, |r, c| if r < n && c < n { m[(r, c)].clone() } else { T::zero() }))
                .collect();
            for i in 0..l {
                let mut m = Matrix::zeros(size, size);
                m[(n + 2 * i, n + 2 * i + 1)] = T::one();
                out.push(m);
            }
            alg = alg.with_realization(out)?;
        }
        debug_assert_eq!(alg.dim(), d + l);
        Ok(alg)
    }
}

/// A linearly independent family of vectors in an ambient coordinate space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<QVector>,
}

impl Subspace {
    pub fn new(ambient: usize, basis: Vec<QVector>) -> Result<Self> {
        if basis.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch("subspace vector length".into()));
        }
        let rank = rank_of(&basis, ambient);
        if rank < basis.len() {
            return Err(Error::RankDeficient { rank, len: basis.len() });
        }
        Ok(Subspace { ambient, basis })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(ambient: usize, idx: &[usize]) -> Self {
        let basis = idx
            .iter()
            .map(|&i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::from_integer(1.into());
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<QVector> {
        self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut all = self.basis.clone();
        all.push(v.to_vec());
        rank_of(&all, self.ambient) == self.dim()
    }

    pub fn same_span(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && crate::matrix::same_span(&self.basis, &other.basis, self.ambient)
    }

    /// Concatenate bases; fails if the sum is not direct.
    pub fn direct_sum(parts: &[&Subspace]) -> Result<Subspace> {
        let ambient = parts.first().map_or(0, |p| p.ambient);
        let basis: Vec<QVector> = parts.iter().flat_map(|p| p.basis.iter().cloned()).collect();
        Subspace::new(ambient, basis)
    }
}

pub(crate) fn names2(prefix: &str, i: usize, j: usize, wide: bool) -> String {
    if wide {
        format!("{prefix}_{i},{j}")
    } else {
        format!("{prefix}_{i}{j}")
    }
}
