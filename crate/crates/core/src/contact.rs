//! Generalized k-contact structures at the Lie algebra level.
//!
//! A structure is a splitting `g = 𝔨 ⊕ I ⊕ F` together with `k = dim I`
//! covectors. It is certified when every form vanishes on `F ⊕ 𝔨`, the
//! matrix `[α_i(I_j)]` is invertible, and each `dα_j` has kernel exactly `I`
//! on `I ⊕ F` (and kills `I` against everything) while being non-degenerate
//! on `F`.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::Subspace;
use crate::exterior::{dform_gram, extend_form, wedge_eval_oracle, OneForm};
use crate::matrix::{rank_of, Matrix};
use crate::roots::{check_condition_a, RootDecomposition};
use crate::scalar::{q, qi};
use crate::{Error, QAlgebra, QMatrix, QVector, Rational, Result};

/// Largest `dim I + dim F` for which the volume form is also evaluated by the
/// shuffle-sum oracle.
pub const ORACLE_MAX_DIM: usize = 12;

#[derive(Clone, Debug)]
pub struct ContactStructure {
    algebra: Arc<QAlgebra>,
    i: Subspace,
    f: Subspace,
    compact: Subspace,
    forms: Vec<OneForm>,
}

impl ContactStructure {
    pub fn new(
        algebra: Arc<QAlgebra>,
        i: Subspace,
        f: Subspace,
        compact: Subspace,
        forms: Vec<OneForm>,
    ) -> Result<Self> {
        let d = algebra.dim();
        if [i.ambient(), f.ambient(), compact.ambient()].iter().any(|&a| a != d) {
            return Err(Error::DimensionMismatch("subspaces live in a different algebra".into()));
        }
        if forms.len() != i.dim() {
            return Err(Error::DimensionMismatch(format!("{} forms for dim I = {}", forms.len(), i.dim())));
        }
        if let Some(bad) = forms.iter().find(|f| f.dim() != d) {
            return Err(Error::DimensionMismatch(format!("form of length {} in dimension {d}", bad.dim())));
        }
        if f.dim() % 2 == 1 {
            return Err(Error::DimensionMismatch(format!("dim F = {} is odd", f.dim())));
        }
        if i.dim() + f.dim() + compact.dim() != d {
            return Err(Error::DimensionMismatch(format!(
                "dim I + dim F + dim 𝔨 = {} + {} + {} differs from {d}",
                i.dim(),
                f.dim(),
                compact.dim()
            )));
        }
        Subspace::direct_sum(&[&compact, &i, &f])?;
        Ok(ContactStructure { algebra, i, f, compact, forms })
    }

    /// `I = 𝔞`, `F = ⊕ g_μ`, forms extended from the given rows on `𝔞`.
    pub fn from_rows(decomp: &RootDecomposition, rows: &[Vec<Rational>]) -> Result<Self> {
        let forms = rows.iter().map(|r| extend_form(r, decomp)).collect::<Result<Vec<_>>>()?;
        ContactStructure::new(
            decomp.algebra().clone(),
            decomp.cartan().basis().clone(),
            decomp.root_sum(),
            decomp.compact_part().clone(),
            forms,
        )
    }

    pub fn algebra(&self) -> &Arc<QAlgebra> {
        &self.algebra
    }

    pub fn i_space(&self) -> &Subspace {
        &self.i
    }

    pub fn f_space(&self) -> &Subspace {
        &self.f
    }

    pub fn compact(&self) -> &Subspace {
        &self.compact
    }

    pub fn forms(&self) -> &[OneForm] {
        &self.forms
    }

    pub fn k(&self) -> usize {
        self.forms.len()
    }

    /// Half the dimension of `F`.
    pub fn n(&self) -> usize {
        self.f.dim() / 2
    }

    pub fn with_forms(&self, forms: Vec<OneForm>) -> Result<Self> {
        ContactStructure::new(self.algebra.clone(), self.i.clone(), self.f.clone(), self.compact.clone(), forms)
    }

    /// `[α_i(I_j)]`.
    pub fn i_block(&self) -> QMatrix {
        let ib = self.i.basis();
        Matrix::from_fn(self.k(), self.k(), |r, c| self.forms[r].eval(&ib[c]))
    }

    fn gram_pfaffian(&self, form: &OneForm) -> Result<Rational> {
        Ok(dform_gram(&self.algebra, form, &self.f)?.pfaffian())
    }
}

/// Per-form evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormRecord {
    /// First basis vector of `F` then `𝔨` (index into `F ++ 𝔨`) on which the
    /// form is nonzero.
    pub vanish_witness: Option<usize>,
    /// `Pf` of the Gram matrix of `dα_j` on `F`.
    pub pfaffian: Rational,
    /// `(u, e, dα_j(u, e))` with `u` indexing `I ++ 𝔨` and `e` the algebra
    /// basis, for the first nonzero value.
    pub kernel_witness: Option<(usize, usize, Rational)>,
    /// Rank of `dα_j` on `I ⊕ F`; the kernel is exactly `I` iff it equals `dim F`.
    pub kernel_rank: usize,
    /// `α_1 ∧ … ∧ α_k ∧ dα_j^n` on `I ++ F`, as `det · n! · Pf`.
    pub volume: Rational,
    /// The same value from the shuffle-sum oracle, when small enough.
    pub volume_oracle: Option<Rational>,
}

impl FormRecord {
    pub fn vanishes(&self) -> bool {
        self.vanish_witness.is_none()
    }

    pub fn nondegenerate(&self) -> bool {
        !self.pfaffian.is_zero()
    }

    pub fn kernel_ok(&self, dim_f: usize) -> bool {
        self.kernel_witness.is_none() && self.kernel_rank == dim_f
    }

    pub fn volume_ok(&self) -> bool {
        !self.volume.is_zero() && self.volume_oracle.as_ref().is_none_or(|o| *o == self.volume)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactCertificate {
    pub k: usize,
    pub dim_f: usize,
    pub i_block: QMatrix,
    pub i_block_det: Rational,
    pub forms: Vec<FormRecord>,
    pub verdict: bool,
}

impl ContactCertificate {
    pub fn f_is_common_kernel(&self) -> bool {
        !self.i_block_det.is_zero() && self.forms.iter().all(FormRecord::vanishes)
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, i| acc * qi(i as i64))
}

fn check_form(s: &ContactStructure, j: usize, det: &Rational) -> Result<FormRecord> {
    let alg = &s.algebra;
    let form = &s.forms[j];
    let d = alg.dim();
    let vanish_witness = s.f.basis().iter().chain(s.compact.basis()).position(|v| !form.eval(v).is_zero());

    let pfaffian = s.gram_pfaffian(form)?;

    let mut kernel_witness = None;
    'outer: for (ui, u) in s.i.basis().iter().chain(s.compact.basis()).enumerate() {
        let ad = alg.ad(u)?;
        for e in 0..d {
            let val = -form.eval(&ad.column(e));
            if !val.is_zero() {
                kernel_witness = Some((ui, e, val));
                break 'outer;
            }
        }
    }

    let mut i_f: Vec<QVector> = s.i.basis().to_vec();
    i_f.extend(s.f.basis().iter().cloned());
    let joint = Subspace::new(d, i_f.clone())?;
    let kernel_rank = dform_gram(alg, form, &joint)?.matrix.rank();

    let volume = det * factorial(s.n()) * &pfaffian;
    let volume_oracle = if i_f.len() <= ORACLE_MAX_DIM {
        Some(wedge_eval_oracle(alg, &s.forms, &[(form.clone(), s.n())], &i_f)?)
    } else {
        None
    };
    Ok(FormRecord { vanish_witness, pfaffian, kernel_witness, kernel_rank, volume, volume_oracle })
}

/// Check every condition with exact witnesses.
pub fn verify_contact(s: &ContactStructure) -> Result<ContactCertificate> {
    let i_block = s.i_block();
    let i_block_det = i_block.determinant()?;
    let forms: Vec<FormRecord> =
        (0..s.k()).into_par_iter().map(|j| check_form(s, j, &i_block_det)).collect::<Result<_>>()?;
    let dim_f = s.f.dim();
    let verdict = !i_block_det.is_zero()
        && forms.iter().all(|r| r.vanishes() && r.nondegenerate() && r.kernel_ok(dim_f) && r.volume_ok());
    Ok(ContactCertificate { k: s.k(), dim_f, i_block, i_block_det, forms, verdict })
}

/// Dual frame of `I`: `α_i(R_j) = δ_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReebFrame {
    /// Coordinates of each `R_j` in the basis of `I`.
    pub coords: Vec<QVector>,
    /// `R_j` as algebra vectors.
    pub vectors: Vec<QVector>,
    pub duality: bool,
    pub commuting: bool,
}

pub fn reeb_frame(s: &ContactStructure) -> Result<ReebFrame> {
    let inv = s.i_block().inverse().ok_or(Error::SingularFrame)?;
    let d = s.algebra.dim();
    let ib = s.i.basis();
    let coords: Vec<QVector> = (0..s.k()).map(|j| inv.column(j)).collect();
    let vectors: Vec<QVector> = coords
        .iter()
        .map(|c| {
            let mut v = vec![Rational::zero(); d];
            for (cj, b) in c.iter().zip(ib) {
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi += cj * bi;
                }
            }
            v
        })
        .collect();
    let duality = (0..s.k()).all(|i| {
        (0..s.k()).all(|j| s.forms[i].eval(&vectors[j]) == if i == j { Rational::one() } else { Rational::zero() })
    });
    let mut commuting = true;
    for a in 0..vectors.len() {
        for b in a + 1..vectors.len() {
            if s.algebra.bracket(&vectors[a], &vectors[b])?.iter().any(|c| !c.is_zero()) {
                commuting = false;
            }
        }
    }
    Ok(ReebFrame { coords, vectors, duality, commuting })
}

/// Result of `η = B α`.
#[derive(Clone, Debug)]
pub struct Reparameterized {
    pub structure: ContactStructure,
    /// `Pf(dη_j|_F)`.
    pub pfaffians: Vec<Rational>,
    /// `P_j(B) = Pf(dη_j|_F) / Pf(dα_j|_F)`; `None` when `dα_j` is degenerate.
    pub p: Vec<Option<Rational>>,
    pub det_b: Rational,
}

impl Reparameterized {
    pub fn valid(&self) -> bool {
        !self.det_b.is_zero() && self.pfaffians.iter().all(|p| !p.is_zero())
    }
}

/// `η_i = Σ_j B[i][j] α_j`, with the Pfaffian ratios `P_j`.
///
/// Each ratio is taken against the same form's own Pfaffian, so `P_j(Id) = 1`.
pub fn reparameterize(s: &ContactStructure, b: &QMatrix) -> Result<Reparameterized> {
    let k = s.k();
    if b.rows() != k || b.cols() != k {
        return Err(Error::DimensionMismatch(format!("B is {}x{}, expected {k}x{k}", b.rows(), b.cols())));
    }
    let det_b = b.determinant()?;
    if det_b.is_zero() {
        return Err(Error::SingularB);
    }
    let forms: Vec<OneForm> = (0..k).map(|i| OneForm::combination(&s.forms, b.row(i))).collect();
    let structure = s.with_forms(forms)?;
    let pairs = (0..k)
        .into_par_iter()
        .map(|j| Ok((s.gram_pfaffian(&s.forms[j])?, structure.gram_pfaffian(&structure.forms[j])?)))
        .collect::<Result<Vec<_>>>()?;
    let p = pairs.iter().map(|(old, new)| (!old.is_zero()).then(|| new / old)).collect();
    let pfaffians = pairs.into_iter().map(|(_, new)| new).collect();
    Ok(Reparameterized { structure, pfaffians, p, det_b })
}

/// Coefficients tried by [`complete_precontact`], in order:
/// `0, ±1, ±2, ±3, ±1/2, ±3/2, ±5/2, ±1/3, …`, all of absolute value at most 3.
pub fn completion_coefficients() -> impl Iterator<Item = Rational> {
    let mut out = vec![Rational::zero()];
    for den in 1..=6i64 {
        for num in 1..=3 * den {
            if num_integer::gcd(num, den) != 1 {
                continue;
            }
            out.push(q(num, den));
            out.push(q(-num, den));
        }
    }
    out.into_iter()
}

/// Find `B = Id + Σ_j c_j e_j e_anchorᵀ` making every `dη_j` non-degenerate
/// on `F`, given that `dα_anchor` already is. `anchor` defaults to the last form.
pub fn complete_precontact(s: &ContactStructure, anchor: Option<usize>) -> Result<QMatrix> {
    let k = s.k();
    if k == 0 {
        return Ok(Matrix::identity(0));
    }
    let anchor = anchor.unwrap_or(k - 1);
    if anchor >= k {
        return Err(Error::InvalidInput(format!("anchor form {} out of range", anchor + 1)));
    }
    if s.gram_pfaffian(&s.forms[anchor])?.is_zero() {
        return Err(Error::InvalidInput(format!("anchor form {} is degenerate on F", anchor + 1)));
    }
    let tried = completion_coefficients().count();
    let coeffs = (0..k)
        .into_par_iter()
        .map(|j| {
            if j == anchor {
                return Ok(Rational::zero());
            }
            for c in completion_coefficients() {
                let eta = OneForm::combination(&[s.forms[j].clone(), s.forms[anchor].clone()], &[Rational::one(), c.clone()]);
                if !s.gram_pfaffian(&eta)?.is_zero() {
                    return Ok(c);
                }
            }
            Err(Error::SearchExhausted { tried, bound: "|c| <= 3, denominators <= 6".into() })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut b = Matrix::identity(k);
    for (j, c) in coeffs.into_iter().enumerate() {
        b[(j, anchor)] += c;
    }
    let out = reparameterize(s, &b)?;
    if !verify_contact(&out.structure)?.verdict {
        return Err(Error::SearchExhausted { tried, bound: "completed structure fails verification".into() });
    }
    Ok(b)
}

/// Non-degeneracy criterion for `so(k, k+n)`: values pairwise distinct in
/// absolute value, and nonzero when `n ≥ 1`.
pub fn sokkn_admissible(alpha: &[Rational], k: usize, n: usize) -> bool {
    if alpha.len() != k {
        return false;
    }
    if n >= 1 && alpha.iter().any(Zero::is_zero) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            if alpha[i].abs() == alpha[j].abs() {
                return false;
            }
        }
    }
    true
}

/// First `k` independent rows from the grid `{1, …, 4k²}^k` (lexicographic)
/// whose extended forms pass condition (A) and are non-degenerate on `F`.
pub fn find_form_basis(decomp: &RootDecomposition) -> Result<Vec<Vec<Rational>>> {
    let k = decomp.rank();
    let top = (4 * k * k) as i64;
    let f = decomp.root_sum();
    let alg = decomp.algebra();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(k);
    let mut tried = 0usize;
    let mut cand = vec![1i64; k];
    if k == 0 {
        return Ok(rows);
    }
    loop {
        tried += 1;
        let row: Vec<Rational> = cand.iter().map(|&c| qi(c)).collect();
        let mut trial = rows.clone();
        trial.push(row.clone());
        if rank_of(&trial, k) == trial.len() && check_condition_a(decomp, &row) {
            let form = extend_form(&row, decomp)?;
            if !dform_gram(alg, &form, &f)?.pfaffian().is_zero() {
                rows.push(row);
                if rows.len() == k {
                    return Ok(rows);
                }
            }
        }
        // next grid point in lexicographic order
        let mut pos = k;
        loop {
            if pos == 0 {
                return Err(Error::SearchExhausted { tried, bound: format!("grid {{1..{top}}}^{k}") });
            }
            pos -= 1;
            if cand[pos] < top {
                cand[pos] += 1;
                for c in cand.iter_mut().skip(pos + 1) {
                    *c = 1;
                }
                break;
            }
        }
    }
}
