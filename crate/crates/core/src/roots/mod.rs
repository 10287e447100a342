//! Cartan subspaces, centralizers and restricted root decompositions.

mod chambers;
pub(crate) mod eigen;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::Subspace;
use crate::matrix::{rank_of, Matrix};
use crate::scalar::{format_rational, qi};
use crate::{Error, QAlgebra, QMatrix, QVector, Rational, Result};

pub use chambers::{fourier_motzkin_feasible, ChamberId};

/// Largest base tried for the generic element `Σ M^{i-1} h_i`.
const MAX_GENERIC_BASE: i64 = 50;

/// An abelian subspace of an algebra, with a fixed basis `h_1..h_k`.
#[derive(Clone, Debug)]
pub struct CartanSubspace {
    algebra: Arc<QAlgebra>,
    basis: Subspace,
}

impl CartanSubspace {
    pub fn new(algebra: Arc<QAlgebra>, basis: Subspace) -> Result<Self> {
        if basis.ambient() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "cartan vectors have length {}, algebra dimension is {}",
                basis.ambient(),
                algebra.dim()
            )));
        }
        let b = basis.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if algebra.bracket(&b[i], &b[j])?.iter().any(|c| !c.is_zero()) {
                    return Err(Error::NotAbelian(i, j));
                }
            }
        }
        Ok(CartanSubspace { algebra, basis })
    }

    /// The algebra's recorded Cartan indices, or else the longest prefix of
    /// pairwise commuting basis elements.
    pub fn canonical(algebra: Arc<QAlgebra>) -> Result<Self> {
        let idx: Vec<usize> = match algebra.cartan_hint() {
            Some(h) => h.to_vec(),
            None => {
                let mut chosen: Vec<usize> = Vec::new();
                for i in 0..algebra.dim() {
                    if chosen.iter().all(|&j| algebra.bracket_basis_sparse(j, i).is_empty()) {
                        chosen.push(i);
                    } else {
                        break;
                    }
                }
                chosen
            }
        };
        let sub = Subspace::coordinate(algebra.dim(), &idx);
        CartanSubspace::new(algebra, sub)
    }

    pub fn algebra(&self) -> &Arc<QAlgebra> {
        &self.algebra
    }

    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.dim()
    }

    /// Algebra vector `Σ x_i h_i`.
    pub fn element(&self, x: &[Rational]) -> QVector {
        let mut v = vec![Rational::zero(); self.algebra.dim()];
        for (c, h) in x.iter().zip(self.basis.basis()) {
            for (vi, hi) in v.iter_mut().zip(h) {
                *vi += c * hi;
            }
        }
        v
    }
}

/// One restricted root with its root space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    /// Values `μ(h_1), …, μ(h_k)` on the Cartan basis.
    pub functional: Vec<Rational>,
    pub space: Subspace,
    pub multiplicity: usize,
}

impl RootDatum {
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.functional.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn label(&self) -> String {
        functional_label(&self.functional)
    }
}

fn functional_label(f: &[Rational]) -> String {
    let parts: Vec<String> = f.iter().map(format_rational).collect();
    format!("({})", parts.join(","))
}

/// Complete decomposition `g = 𝔞 ⊕ 𝔨 ⊕ ⊕_μ g_μ`.
///
/// Roots are stored as `Φ⁺` in a fixed order followed by their negatives in
/// the same order, so `roots()[i + p]` is `-roots()[i]` for `p = |Φ⁺|`.
#[derive(Clone, Debug)]
pub struct RootDecomposition {
    cartan: CartanSubspace,
    g0: Subspace,
    compact: Subspace,
    roots: Vec<RootDatum>,
    positive: usize,
    generic: Vec<Rational>,
    /// Inverse of the adapted basis `[𝔞 | 𝔨 | g_μ ...]`.
    adapted_inv: QMatrix,
}

/// Exact kernel of the stacked ad-operators of `s`.
pub fn centralizer(algebra: &QAlgebra, s: &Subspace) -> Result<Subspace> {
    let d = algebra.dim();
    if s.ambient() != d {
        return Err(Error::DimensionMismatch("subspace ambient dimension".into()));
    }
    if s.dim() == 0 {
        return Ok(Subspace::coordinate(d, &(0..d).collect::<Vec<_>>()));
    }
    let mut rows = Vec::with_capacity(d * s.dim());
    for b in s.basis() {
        rows.extend(algebra.ad(b)?.to_rows());
    }
    let stacked = Matrix::from_rows(rows)?;
    Subspace::new(d, stacked.kernel())
}

fn scalar_action(ad: &QMatrix, space: &[QVector]) -> Option<Rational> {
    let mut value: Option<Rational> = None;
    for v in space {
        let img = ad.mul_vec(v);
        let p = v.iter().position(|c| !c.is_zero())?;
        let c = &img[p] / &v[p];
        if img.iter().zip(v).any(|(a, b)| *a != &c * b) {
            return None;
        }
        match &value {
            Some(prev) if *prev != c => return None,
            Some(_) => {}
            None => value = Some(c),
        }
    }
    value
}

struct Eigenspace {
    functional: Vec<Rational>,
    basis: Vec<QVector>,
}

enum Split {
    Done(Vec<Eigenspace>, Vec<Rational>),
    Collision,
}

fn split_with_base(cartan: &CartanSubspace, ads: &[QMatrix], base: i64) -> Result<Split> {
    let d = cartan.algebra.dim();
    let mut coeff = Rational::one();
    let mut generic = Vec::with_capacity(ads.len());
    let mut h = Matrix::zeros(d, d);
    for ad in ads {
        h = &h + &ad.scale(&coeff);
        generic.push(coeff.clone());
        coeff *= qi(base);
    }
    let (scaled, _) = eigen::integer_scaled(&h);
    let poly: Vec<BigInt> = eigen::charpoly(&scaled).iter().map(|c| c.to_integer()).collect();
    let mut spaces = Vec::new();
    let mut total = 0;
    for r in eigen::integer_roots(&poly) {
        let shifted = &scaled - &Matrix::identity(d).scale(&Rational::from_integer(r.clone()));
        let basis = shifted.kernel();
        total += basis.len();
        let mut functional = Vec::with_capacity(ads.len());
        for ad in ads {
            match scalar_action(ad, &basis) {
                Some(c) => functional.push(c),
                None => return Ok(Split::Collision),
            }
        }
        spaces.push(Eigenspace { functional, basis });
    }
    if total != d {
        return Err(Error::NonDiagonalizable(format!(
            "generic Cartan element has only {total} of {d} eigenvectors with rational eigenvalues"
        )));
    }
    if spaces.iter().any(|s| s.functional.iter().all(Zero::is_zero)) {
        Ok(Split::Done(spaces, generic))
    } else {
        Err(Error::NonDiagonalizable("cartan element has no kernel".into()))
    }
}

/// Simultaneous exact eigen-decomposition of `ad(𝔞)`.
pub fn restricted_roots(cartan: &CartanSubspace) -> Result<RootDecomposition> {
    let alg = &cartan.algebra;
    let d = alg.dim();
    let k = cartan.rank();
    let ads: Vec<QMatrix> = cartan.basis.basis().iter().map(|h| alg.ad(h)).collect::<Result<_>>()?;

    let mut outcome = None;
    for base in 2..=MAX_GENERIC_BASE {
        if k <= 1 && base > 2 {
            break;
        }
        match split_with_base(cartan, &ads, base)? {
            Split::Done(spaces, generic) => {
                outcome = Some((spaces, generic));
                break;
            }
            Split::Collision => continue,
        }
    }
    let (spaces, generic) = outcome.ok_or_else(|| {
        Error::NonDiagonalizable(format!(
            "ad(h_i) not simultaneously diagonal for generic bases up to {MAX_GENERIC_BASE}"
        ))
    })?;

    let eval_generic = |f: &[Rational]| -> Rational { f.iter().zip(&generic).map(|(a, b)| a * b).sum() };
    let mut g0_basis = Vec::new();
    let mut positive: Vec<RootDatum> = Vec::new();
    let mut negative: Vec<RootDatum> = Vec::new();
    for sp in spaces {
        if sp.functional.iter().all(Zero::is_zero) {
            g0_basis = sp.basis;
            continue;
        }
        let multiplicity = sp.basis.len();
        let datum = RootDatum { functional: sp.functional, space: Subspace::new(d, sp.basis)?, multiplicity };
        if eval_generic(&datum.functional).is_positive() {
            positive.push(datum);
        } else {
            negative.push(datum);
        }
    }
    positive.sort_by(|a, b| b.functional.cmp(&a.functional));
    let mut ordered_neg = Vec::with_capacity(negative.len());
    for p in &positive {
        let target: Vec<Rational> = p.functional.iter().map(|c| -c).collect();
        let pos = negative.iter().position(|n| n.functional == target).ok_or_else(|| {
            Error::InvalidInput(format!("root {} has no opposite root", p.label()))
        })?;
        let n = negative.swap_remove(pos);
        if n.multiplicity != p.multiplicity {
            return Err(Error::InvalidInput(format!("roots ±{} have different multiplicities", p.label())));
        }
        ordered_neg.push(n);
    }
    if let Some(n) = negative.first() {
        return Err(Error::InvalidInput(format!("root {} has no opposite root", n.label())));
    }

    let g0 = Subspace::new(d, g0_basis)?;
    let mut adapted: Vec<QVector> = cartan.basis.basis().to_vec();
    let mut compact = Vec::new();
    for v in g0.basis() {
        let mut trial = adapted.clone();
        trial.push(v.clone());
        if rank_of(&trial, d) == trial.len() {
            adapted.push(v.clone());
            compact.push(v.clone());
        }
    }
    if adapted.len() != g0.dim() {
        return Err(Error::InvalidInput("cartan subspace is not contained in its centralizer".into()));
    }
    let p = positive.len();
    let mut roots = positive;
    roots.extend(ordered_neg);
    for r in &roots {
        adapted.extend(r.space.basis().iter().cloned());
    }
    let adapted_inv = Matrix::from_columns(&adapted, d)?
        .inverse()
        .ok_or_else(|| Error::NonDiagonalizable("eigenspaces do not span the algebra".into()))?;

    let decomp = RootDecomposition {
        g0,
        compact: Subspace::new(d, compact)?,
        roots,
        positive: p,
        generic,
        adapted_inv,
        cartan: cartan.clone(),
    };
    decomp.verify_grading(&ads)?;
    Ok(decomp)
}

impl RootDecomposition {
    /// Decompose with the algebra's canonical Cartan subspace.
    pub fn of(algebra: Arc<QAlgebra>) -> Result<Self> {
        restricted_roots(&CartanSubspace::canonical(algebra)?)
    }

    pub fn algebra(&self) -> &Arc<QAlgebra> {
        &self.cartan.algebra
    }

    pub fn cartan(&self) -> &CartanSubspace {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn g0(&self) -> &Subspace {
        &self.g0
    }

    pub fn compact_part(&self) -> &Subspace {
        &self.compact
    }

    pub fn roots(&self) -> &[RootDatum] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RootDatum] {
        &self.roots[..self.positive]
    }

    /// Coefficients of the generic element that fixed `Φ⁺`.
    pub fn generic_element(&self) -> &[Rational] {
        &self.generic
    }

    /// Index of `-μ` for the root at `i`.
    pub fn opposite(&self, i: usize) -> usize {
        if i < self.positive {
            i + self.positive
        } else {
            i - self.positive
        }
    }

    /// `ℰ`: the sum of all root spaces, basis in root order.
    pub fn root_sum(&self) -> Subspace {
        let basis = self.roots.iter().flat_map(|r| r.space.basis().iter().cloned()).collect();
        Subspace::new(self.algebra().dim(), basis).expect("root spaces are independent")
    }

    /// Coordinates of the `𝔞`-component of `v` on the Cartan basis.
    pub fn a_coords(&self, v: &[Rational]) -> Vec<Rational> {
        let full = self.adapted_inv.mul_vec(v);
        full[..self.rank()].to_vec()
    }

    /// Rows of the projection onto Cartan coordinates: `a_coords(v)_i = rows[i] · v`.
    pub fn a_coordinate_rows(&self) -> Vec<QVector> {
        (0..self.rank()).map(|i| self.adapted_inv.row(i).to_vec()).collect()
    }

    /// `𝔞`-component of `v` as an algebra vector.
    pub fn project_a(&self, v: &[Rational]) -> QVector {
        self.cartan.element(&self.a_coords(v))
    }

    /// Whether `v` lies in `g_μ` (or in `g0` for `None`) according to the
    /// adapted coordinates.
    fn block_of(&self, root: Option<usize>) -> std::ops::Range<usize> {
        match root {
            None => 0..self.g0.dim(),
            Some(i) => {
                let start = self.g0.dim() + self.roots[..i].iter().map(|r| r.space.dim()).sum::<usize>();
                start..start + self.roots[i].space.dim()
            }
        }
    }

    fn root_index(&self, functional: &[Rational]) -> Option<usize> {
        self.roots.iter().position(|r| r.functional == functional)
    }

    /// `[g_μ, g_ν] ⊆ g_{μ+ν}` on all basis pairs, including `μ = 0`.
    fn verify_grading(&self, ads: &[QMatrix]) -> Result<()> {
        let alg = self.algebra();
        let k = self.rank();
        let mut labelled: Vec<(Vec<Rational>, &[QVector])> = vec![(vec![Rational::zero(); k], self.g0.basis())];
        labelled.extend(self.roots.iter().map(|r| (r.functional.clone(), r.space.basis())));
        for (fa, ba) in &labelled {
            for (fb, bb) in &labelled {
                let sum: Vec<Rational> = fa.iter().zip(fb).map(|(a, b)| a + b).collect();
                for u in ba.iter() {
                    for v in bb.iter() {
                        let w = alg.bracket(u, v)?;
                        if w.iter().all(Zero::is_zero) {
                            continue;
                        }
                        for (ad, s) in ads.iter().zip(&sum) {
                            let img = ad.mul_vec(&w);
                            if img.iter().zip(&w).any(|(a, b)| *a != s * b) {
                                return Err(Error::NonDiagonalizable(format!(
                                    "bracket of root vectors leaves the root space {}",
                                    functional_label(&sum)
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Adapted coordinates of `v` restricted to the block of root `i`
    /// (`None` for `g0`).
    pub fn component(&self, v: &[Rational], root: Option<usize>) -> Vec<Rational> {
        let full = self.adapted_inv.mul_vec(v);
        full[self.block_of(root)].to_vec()
    }

    /// Root index whose functional equals `f`, if any.
    pub fn find_root(&self, f: &[Rational]) -> Option<usize> {
        self.root_index(f)
    }

    pub fn weyl_chambers(&self) -> Vec<ChamberId> {
        chambers::enumerate(self.positive_roots())
    }

    /// Chamber of an element of `𝔞` given in Cartan coordinates.
    pub fn chamber_of(&self, x: &[Rational]) -> Result<ChamberId> {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!("element has {} coordinates, rank is {}", x.len(), self.rank())));
        }
        let mut signs = Vec::with_capacity(self.positive);
        for (index, r) in self.positive_roots().iter().enumerate() {
            let v = r.eval(x);
            if v.is_zero() {
                return Err(Error::OnWall { index, functional: r.label() });
            }
            signs.push(v.is_positive());
        }
        Ok(ChamberId::new(signs))
    }
}

/// Condition (A): `λ(proj_𝔞[u, v]) ≠ 0` whenever the projection is nonzero,
/// for all basis pairs `u ∈ g_μ`, `v ∈ g_{-μ}`, `μ ∈ Φ⁺`.
pub fn check_condition_a(decomp: &RootDecomposition, lambda: &[Rational]) -> bool {
    let alg = decomp.algebra();
    for (i, r) in decomp.positive_roots().iter().enumerate() {
        let neg = &decomp.roots()[decomp.opposite(i)];
        for u in r.space.basis() {
            for v in neg.space.basis() {
                let Ok(w) = alg.bracket(u, v) else { return false };
                let h = decomp.a_coords(&w);
                if h.iter().all(Zero::is_zero) {
                    continue;
                }
                let val: Rational = h.iter().zip(lambda).map(|(a, b)| a * b).sum();
                if val.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_sl_n, build_so_kkn};
    use crate::scalar::qi;

    fn decomp(alg: QAlgebra) -> RootDecomposition {
        RootDecomposition::of(Arc::new(alg)).unwrap()
    }

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&c| qi(c)).collect()
    }

    #[test]
    fn so_2_3_roots() {
        let dc = decomp(build_so_kkn(2, 1).unwrap());
        assert_eq!(dc.roots().len(), 8);
        let mut fs: Vec<Vec<Rational>> = dc.roots().iter().map(|r| r.functional.clone()).collect();
        fs.sort();
        let mut expect: Vec<Vec<Rational>> = [[1, 1], [-1, -1], [1, -1], [-1, 1], [1, 0], [-1, 0], [0, 1], [0, -1]]
            .iter()
            .map(|p| v(p))
            .collect();
        expect.sort();
        assert_eq!(fs, expect);
        assert!(dc.roots().iter().all(|r| r.multiplicity == 1));
        assert_eq!(dc.g0().dim(), 2);
        assert_eq!(dc.compact_part().dim(), 0);
    }

    #[test]
    fn so_2_4_compact_part() {
        let alg = Arc::new(build_so_kkn(2, 2).unwrap());
        let dc = RootDecomposition::of(alg.clone()).unwrap();
        assert_eq!(dc.g0().dim(), 3);
        assert_eq!(dc.compact_part().dim(), 1);
        let c = centralizer(&alg, dc.cartan().basis()).unwrap();
        assert!(c.same_span(dc.g0()));
        // short roots ±e_t carry the two-dimensional X/Z spans
        assert!(dc.roots().iter().any(|r| r.multiplicity == 2));
    }

    #[test]
    fn sl3_roots() {
        let dc = decomp(build_sl_n(3).unwrap());
        assert_eq!(dc.roots().len(), 6);
        assert_eq!(dc.g0().dim(), 2);
        assert!(dc.roots().iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn abelian_has_no_roots() {
        let alg = QAlgebra::from_table(vec!["a".into(), "b".into()], vec![], None).unwrap();
        let dc = decomp(alg);
        assert!(dc.roots().is_empty());
        assert_eq!(dc.g0().dim(), 2);
        assert_eq!(dc.weyl_chambers(), vec![ChamberId::new(vec![])]);
    }

    #[test]
    fn chamber_counts() {
        assert_eq!(decomp(build_so_kkn(2, 1).unwrap()).weyl_chambers().len(), 8);
        assert_eq!(decomp(build_sl_n(3).unwrap()).weyl_chambers().len(), 6);
        assert_eq!(decomp(build_sl_n(2).unwrap()).weyl_chambers().len(), 2);
    }

    #[test]
    fn on_wall() {
        let dc = decomp(build_so_kkn(2, 1).unwrap());
        assert!(matches!(dc.chamber_of(&v(&[1, 1])), Err(Error::OnWall { .. })));
        assert!(dc.chamber_of(&v(&[1, 2])).is_ok());
    }

    #[test]
    fn condition_a() {
        let dc = decomp(build_so_kkn(2, 1).unwrap());
        assert!(check_condition_a(&dc, &v(&[1, 2])));
        assert!(!check_condition_a(&dc, &v(&[0, 0])));
        let sl = decomp(build_sl_n(3).unwrap());
        // coroot of e1-e2 is H_1
        assert!(!check_condition_a(&sl, &v(&[0, 1])));
        assert!(check_condition_a(&sl, &v(&[1, 2])));
    }

    #[test]
    fn non_diagonalizable_rejected() {
        // Heisenberg with cartan = {x}: ad(x) is nilpotent but nonzero
        let alg = QAlgebra::from_table(
            vec!["x".into(), "y".into(), "z".into()],
            vec![((0, 1), vec![(2, qi(1))])],
            None,
        )
        .unwrap();
        let cartan = CartanSubspace::new(Arc::new(alg), Subspace::coordinate(3, &[0])).unwrap();
        assert!(matches!(restricted_roots(&cartan), Err(Error::NonDiagonalizable(_))));
    }

    #[test]
    fn not_abelian_rejected() {
        let alg = Arc::new(build_sl_n(2).unwrap());
        let err = CartanSubspace::new(alg, Subspace::coordinate(3, &[0, 1])).unwrap_err();
        assert!(matches!(err, Error::NotAbelian(0, 1)));
    }
}
