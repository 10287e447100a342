//! Enlarging the acting abelian algebra: central extensions `g ⊕ ℝˡ` and
//! modified Weyl chamber data `𝔞 ⊕ 𝔞*` with `𝔞* ⊂ 𝔨`.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::Subspace;
use crate::contact::{complete_precontact, reparameterize, verify_contact, ContactCertificate, ContactStructure};
use crate::exterior::OneForm;
use crate::matrix::{rank_of, Matrix};
use crate::{Error, QVector, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionKind {
    Central,
    Modified,
}

/// What to add to a certified base structure.
///
/// Form indices (`assignment`, `companion`) are 1-based, matching `α_1..α_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub kind: ExtensionKind,
    pub l: usize,
    /// Central: `η_{k+i} = ξ_i + α_{assignment[i]}`; defaults to all ones.
    pub assignment: Vec<usize>,
    /// Modified: basis of `𝔞*` in algebra coordinates.
    pub a_star: Vec<QVector>,
    /// Modified: companion form index, default 1.
    pub companion: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ExtensionResult {
    pub structure: ContactStructure,
    /// Completion matrix applied to the naive forms (identity when none needed).
    pub completion: Matrix<Rational>,
    pub certificate: ContactCertificate,
}

fn finish(structure: ContactStructure) -> Result<ExtensionResult> {
    let certificate = verify_contact(&structure)?;
    let k = structure.k();
    Ok(ExtensionResult { structure, completion: Matrix::identity(k), certificate })
}

fn pad_space(s: &Subspace, dim: usize) -> Subspace {
    let basis = s
        .basis()
        .iter()
        .map(|v| {
            let mut w = v.clone();
            w.resize(dim, Rational::zero());
            w
        })
        .collect();
    Subspace::new(dim, basis).expect("padding keeps independence")
}

fn unit(dim: usize, i: usize) -> QVector {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

/// `g ⊕ ℝˡ` with `η_j = α_j` and `η_{k+i} = ξ_i + α_{j_i}`.
pub fn central_extension(base: &ContactStructure, l: usize, assignment: &[usize]) -> Result<ExtensionResult> {
    let k = base.k();
    let assignment: Vec<usize> = if assignment.is_empty() { vec![1; l] } else { assignment.to_vec() };
    if assignment.len() != l {
        return Err(Error::InvalidInput(format!("{} assignment entries for l = {l}", assignment.len())));
    }
    if let Some(bad) = assignment.iter().find(|&&j| j == 0 || j > k) {
        return Err(Error::InvalidInput(format!("assignment index {bad} outside 1..={k}")));
    }
    if l == 0 {
        return finish(base.clone());
    }
    let alg = base.algebra();
    let d = alg.dim();
    let names = (1..=l)
        .map(|i| {
            let mut name = format!("C_{i}");
            while alg.index_of(&name).is_some() {
                name.push('\'');
            }
            name
        })
        .collect();
    let ext = Arc::new(alg.central_sum(names)?);
    let dim = d + l;
    let mut i_basis: Vec<QVector> = pad_space(base.i_space(), dim).into_basis();
    i_basis.extend((0..l).map(|i| unit(dim, d + i)));
    let mut forms: Vec<OneForm> = base.forms().iter().map(|f| f.pad(dim)).collect();
    for (i, &j) in assignment.iter().enumerate() {
        let xi = OneForm::new(unit(dim, d + i));
        forms.push(OneForm::combination(&[xi, forms[j - 1].clone()], &[Rational::one(), Rational::one()]));
    }
    let structure = ContactStructure::new(
        ext,
        Subspace::new(dim, i_basis)?,
        pad_space(base.f_space(), dim),
        pad_space(base.compact(), dim),
        forms,
    )?;
    finish(structure)
}

/// Replace `I = 𝔞` by `𝔞 ⊕ 𝔞*` for an abelian `𝔞*` centralizing `𝔞` and
/// normalizing `F`, then complete the forms if needed.
pub fn modified_weyl(base: &ContactStructure, a_star: &[QVector], companion: Option<usize>) -> Result<ExtensionResult> {
    let k = base.k();
    let l = a_star.len();
    let companion = companion.unwrap_or(1);
    if companion == 0 || companion > k {
        return Err(Error::InvalidInput(format!("companion index {companion} outside 1..={k}")));
    }
    if l == 0 {
        return finish(base.clone());
    }
    let alg = base.algebra();
    let d = alg.dim();
    let star = Subspace::new(d, a_star.to_vec())?;
    for (i, y) in a_star.iter().enumerate() {
        for (j, z) in a_star.iter().enumerate().skip(i + 1) {
            if alg.bracket(y, z)?.iter().any(|c| !c.is_zero()) {
                return Err(Error::NotAbelian(i, j));
            }
        }
        for (p, h) in base.i_space().basis().iter().enumerate() {
            if alg.bracket(y, h)?.iter().any(|c| !c.is_zero()) {
                return Err(Error::NotCentralizing(format!("a_star vector {} does not commute with I vector {}", i + 1, p + 1)));
            }
        }
        for (p, f) in base.f_space().basis().iter().enumerate() {
            if !base.f_space().contains(&alg.bracket(y, f)?) {
                return Err(Error::NotCentralizing(format!("bracket of a_star vector {} with F vector {} leaves F", i + 1, p + 1)));
            }
        }
    }
    let mut i_basis = base.i_space().basis().to_vec();
    i_basis.extend(star.basis().iter().cloned());
    if rank_of(&i_basis, d) != k + l {
        return Err(Error::InvalidInput("a_star meets I".into()));
    }
    let mut spanned = i_basis.clone();
    spanned.extend(base.f_space().basis().iter().cloned());
    let mut compact = Vec::new();
    for v in base.compact().basis() {
        let mut trial = spanned.clone();
        trial.push(v.clone());
        if rank_of(&trial, d) == trial.len() {
            spanned.push(v.clone());
            compact.push(v.clone());
        }
    }
    if spanned.len() != d {
        return Err(Error::InvalidInput("a_star does not lie in I ⊕ F ⊕ 𝔨".into()));
    }
    // dual basis of [I | a_star | F | 𝔨']
    let dual = Matrix::from_columns(&spanned, d)?.inverse().ok_or(Error::RankDeficient { rank: 0, len: d })?;
    let dual_row = |p: usize| OneForm::new(dual.row(p).to_vec());
    let i_duals: Vec<OneForm> = (0..k).map(dual_row).collect();
    let mut forms: Vec<OneForm> = base
        .forms()
        .iter()
        .map(|f| {
            let vals: Vec<Rational> = base.i_space().basis().iter().map(|h| f.eval(h)).collect();
            OneForm::combination(&i_duals, &vals)
        })
        .collect();
    for i in 0..l {
        let xi = dual_row(k + i);
        forms.push(OneForm::combination(&[xi, forms[companion - 1].clone()], &[Rational::one(), Rational::one()]));
    }
    let naive = ContactStructure::new(
        alg.clone(),
        Subspace::new(d, i_basis)?,
        base.f_space().clone(),
        Subspace::new(d, compact)?,
        forms,
    )?;
    let first = verify_contact(&naive)?;
    if first.verdict {
        return Ok(ExtensionResult { structure: naive, completion: Matrix::identity(k + l), certificate: first });
    }
    let b = complete_precontact(&naive, Some(companion - 1))?;
    let structure = reparameterize(&naive, &b)?.structure;
    let certificate = verify_contact(&structure)?;
    Ok(ExtensionResult { structure, completion: b, certificate })
}

/// Dispatch on [`ExtensionSpec::kind`].
pub fn apply_extension(base: &ContactStructure, spec: &ExtensionSpec) -> Result<ExtensionResult> {
    match spec.kind {
        ExtensionKind::Central => central_extension(base, spec.l, &spec.assignment),
        ExtensionKind::Modified => {
            if spec.a_star.len() != spec.l {
                return Err(Error::InvalidInput(format!("{} a_star vectors for l = {}", spec.a_star.len(), spec.l)));
            }
            modified_weyl(base, &spec.a_star, spec.companion)
        }
    }
}
