//! Left-invariant 1-forms, their differentials `dα(A, B) = -α([A, B])`, and
//! a direct evaluator for wedge products.
//!
//! Wedge convention: `(ω₁ ∧ … ∧ ω_m)(v₁, …, v_N)` is the signed sum over
//! shuffles, i.e. over assignments of increasing blocks of vectors to the
//! factors in order, with no factorial normalization. For 1-forms this is
//! the determinant `det[ω_i(v_j)]`; for a 2-form `ω` and `2m` vectors,
//! `ω^m(v) = m! · Pf(ω(v_p, v_q))`.

use num_traits::Zero;

use crate::algebra::Subspace;
use crate::matrix::Matrix;
use crate::pfaffian::pfaffian;
use crate::roots::RootDecomposition;
use crate::{Error, QAlgebra, QMatrix, QVector, Rational, Result};

/// Covector on an algebra, in the dual of the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    coeffs: QVector,
}

impl OneForm {
    pub fn new(coeffs: QVector) -> Self {
        OneForm { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        OneForm { coeffs: vec![Rational::zero(); dim] }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, v: &[Rational]) -> Rational {
        self.coeffs.iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum()
    }

    /// `dα(u, v) = -α([u, v])`.
    pub fn d_eval(&self, algebra: &QAlgebra, u: &[Rational], v: &[Rational]) -> Result<Rational> {
        Ok(-self.eval(&algebra.bracket(u, v)?))
    }

    /// `Σ c_i ω_i`.
    pub fn combination(forms: &[OneForm], coeffs: &[Rational]) -> OneForm {
        let dim = forms.first().map_or(0, OneForm::dim);
        let mut out = vec![Rational::zero(); dim];
        for (f, c) in forms.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&f.coeffs) {
                *o += c * x;
            }
        }
        OneForm { coeffs: out }
    }

    /// Same form on a larger algebra whose first `dim()` basis elements are
    /// this algebra's basis; the new coordinates get zero.
    pub fn pad(&self, dim: usize) -> OneForm {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(dim, Rational::zero());
        OneForm { coeffs }
    }
}

/// Extend `λ ∈ 𝔞*` by zero on `𝔨` and on every root space.
pub fn extend_form(lambda: &[Rational], decomp: &RootDecomposition) -> Result<OneForm> {
    if lambda.len() != decomp.rank() {
        return Err(Error::DimensionMismatch(format!(
            "covector has {} entries, rank is {}",
            lambda.len(),
            decomp.rank()
        )));
    }
    let rows = decomp.a_coordinate_rows();
    let forms: Vec<OneForm> = rows.into_iter().map(OneForm::new).collect();
    Ok(OneForm::combination(&forms, lambda))
}

/// Gram matrix `G[p][q] = dα(f_p, f_q)` of a 2-form restricted to a subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFormGram {
    pub subspace: Subspace,
    pub matrix: QMatrix,
}

impl TwoFormGram {
    pub fn pfaffian(&self) -> Rational {
        pfaffian(&self.matrix).expect("Gram matrices are antisymmetric")
    }

    /// `Pf ≠ 0`; an odd-dimensional subspace is always degenerate.
    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.rows().is_multiple_of(2) && !self.pfaffian().is_zero()
    }

    /// Gram matrix in the basis `f'_q = Σ_p P[p][q] f_p`.
    pub fn change_basis(&self, p: &QMatrix) -> QMatrix {
        &(&p.transpose() * &self.matrix) * p
    }
}

/// Gram matrix of `dα` on `F`.
pub fn dform_gram(algebra: &QAlgebra, alpha: &OneForm, f: &Subspace) -> Result<TwoFormGram> {
    if alpha.dim() != algebra.dim() || f.ambient() != algebra.dim() {
        return Err(Error::DimensionMismatch("form, subspace and algebra dimensions differ".into()));
    }
    let b = f.basis();
    let n = b.len();
    let mut m = Matrix::zeros(n, n);
    for p in 0..n {
        for q in p + 1..n {
            let v = alpha.d_eval(algebra, &b[p], &b[q])?;
            m[(q, p)] = -v.clone();
            m[(p, q)] = v;
        }
    }
    Ok(TwoFormGram { subspace: f.clone(), matrix: m })
}

enum Factor<'a> {
    One,
    Two(&'a QMatrix),
}

fn shuffle_sum(factors: &[Factor<'_>], one_vals: &[Vec<Rational>], rem: &mut Vec<usize>, fi: usize, one_i: usize) -> Rational {
    if fi == factors.len() {
        return Rational::from_integer(1.into());
    }
    let mut acc = Rational::zero();
    match &factors[fi] {
        Factor::One => {
            for pa in 0..rem.len() {
                let a = rem[pa];
                let w = &one_vals[one_i][a];
                if w.is_zero() {
                    continue;
                }
                rem.remove(pa);
                let sub = shuffle_sum(factors, one_vals, rem, fi + 1, one_i + 1);
                rem.insert(pa, a);
                if sub.is_zero() {
                    continue;
                }
                let term = w * sub;
                if pa % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        Factor::Two(g) => {
            // moving rem[pa], rem[pb] to the front costs pa + (pb - 1) swaps
            for pa in 0..rem.len() {
                for pb in pa + 1..rem.len() {
                    let (a, b) = (rem[pa], rem[pb]);
                    let w = &g[(a, b)];
                    if w.is_zero() {
                        continue;
                    }
                    rem.remove(pb);
                    rem.remove(pa);
                    let sub = shuffle_sum(factors, one_vals, rem, fi + 1, one_i);
                    rem.insert(pa, a);
                    rem.insert(pb, b);
                    if sub.is_zero() {
                        continue;
                    }
                    let term = w * sub;
                    if (pa + pb - 1) % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
        }
    }
    acc
}

/// Evaluate `ω₁ ∧ … ∧ ω_r ∧ (dβ₁)^{p₁} ∧ …` on `vectors` by the signed
/// shuffle sum.
pub fn wedge_eval_oracle(
    algebra: &QAlgebra,
    one_forms: &[OneForm],
    two_form_powers: &[(OneForm, usize)],
    vectors: &[QVector],
) -> Result<Rational> {
    let degree = one_forms.len() + 2 * two_form_powers.iter().map(|(_, p)| p).sum::<usize>();
    if degree != vectors.len() {
        return Err(Error::DegreeMismatch { degree, vectors: vectors.len() });
    }
    let n = vectors.len();
    let one_vals: Vec<Vec<Rational>> = one_forms.iter().map(|f| vectors.iter().map(|v| f.eval(v)).collect()).collect();
    let mut grams = Vec::with_capacity(two_form_powers.len());
    for (beta, _) in two_form_powers {
        let mut g = Matrix::zeros(n, n);
        for a in 0..n {
            for b in a + 1..n {
                let v = beta.d_eval(algebra, &vectors[a], &vectors[b])?;
                g[(b, a)] = -v.clone();
                g[(a, b)] = v;
            }
        }
        grams.push(g);
    }
    let mut factors: Vec<Factor<'_>> = one_forms.iter().map(|_| Factor::One).collect();
    for ((_, p), g) in two_form_powers.iter().zip(&grams) {
        factors.extend(std::iter::repeat_with(|| Factor::Two(g)).take(*p));
    }
    let mut rem: Vec<usize> = (0..n).collect();
    Ok(shuffle_sum(&factors, &one_vals, &mut rem, 0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_so_kkn;
    use crate::scalar::qi;
    use std::sync::Arc;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&c| qi(c)).collect()
    }

    #[test]
    fn determinant_of_one_forms() {
        let alg = QAlgebra::from_table(vec!["u".into(), "v".into()], vec![], None).unwrap();
        let a = OneForm::new(v(&[1, 0]));
        let b = OneForm::new(v(&[0, 1]));
        let val = wedge_eval_oracle(&alg, &[a.clone(), b.clone()], &[], &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(val, qi(1));
        let swapped = wedge_eval_oracle(&alg, &[b, a], &[], &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(swapped, qi(-1));
    }

    #[test]
    fn degree_mismatch() {
        let alg = QAlgebra::from_table(vec!["u".into()], vec![], None).unwrap();
        let err = wedge_eval_oracle(&alg, &[OneForm::zero(1)], &[], &[]).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { degree: 1, vectors: 0 }));
    }

    #[test]
    fn extension_vanishes_off_cartan() {
        let alg = Arc::new(build_so_kkn(2, 1).unwrap());
        let dc = RootDecomposition::of(alg.clone()).unwrap();
        let a = extend_form(&v(&[1, 2]), &dc).unwrap();
        let mut expect = vec![qi(0); 10];
        expect[0] = qi(1);
        expect[1] = qi(2);
        assert_eq!(a.coeffs(), expect.as_slice());
        for r in dc.roots() {
            for u in r.space.basis() {
                assert_eq!(a.eval(u), qi(0));
            }
        }
        assert!(extend_form(&v(&[0, 0]), &dc).unwrap().is_zero());
    }

    #[test]
    fn gram_entry_f12_h12() {
        let alg = build_so_kkn(2, 1).unwrap();
        let a = OneForm::new(v(&[1, 2, 0, 0, 0, 0, 0, 0, 0, 0]));
        let f = Subspace::coordinate(10, &[2, 4]);
        let g = dform_gram(&alg, &a, &f).unwrap();
        assert_eq!(g.matrix[(0, 1)], qi(2));
    }
}
