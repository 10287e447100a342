//! Anosov elements of `𝔞`, their splittings, adapted frames, and a
//! floating-point check of the exponential growth rates.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::algebra::Subspace;
use crate::contact::{reeb_frame, reparameterize, ContactStructure};
use crate::expm::{expm, frobenius};
use crate::matrix::Matrix;
use crate::roots::{ChamberId, RootDecomposition};
use crate::scalar::{q, qi, to_f64};
use crate::{Error, FMatrix, QMatrix, QVector, Rational, Result};

/// Largest sup-norm shell searched by [`adapt_parameterization`].
pub const ADAPT_MAX_RADIUS: i64 = 8;
/// Number of halvings of the offset `ε` per candidate centre.
pub const ADAPT_HALVINGS: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnosovCertificate {
    /// Element of `𝔞` in Cartan coordinates.
    pub element: QVector,
    /// `μ(x)` for every root, in decomposition order.
    pub values: Vec<Rational>,
    pub stable: Subspace,
    pub unstable: Subspace,
    pub chamber: ChamberId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnosovOutcome {
    Anosov(AnosovCertificate),
    /// `μ(x) = 0` for the root at this index.
    NotAnosov { root: usize, functional: String },
}

impl AnosovOutcome {
    pub fn certificate(&self) -> Option<&AnosovCertificate> {
        match self {
            AnosovOutcome::Anosov(c) => Some(c),
            AnosovOutcome::NotAnosov { .. } => None,
        }
    }
}

/// Split the root spaces by the sign of `μ(x)`.
pub fn is_anosov(decomp: &RootDecomposition, x: &[Rational]) -> Result<AnosovOutcome> {
    if x.len() != decomp.rank() {
        return Err(Error::DimensionMismatch(format!("element has {} coordinates, rank is {}", x.len(), decomp.rank())));
    }
    let d = decomp.algebra().dim();
    let mut values = Vec::with_capacity(decomp.roots().len());
    let (mut s, mut u) = (Vec::new(), Vec::new());
    for (i, r) in decomp.roots().iter().enumerate() {
        let v = r.eval(x);
        if v.is_zero() {
            return Ok(AnosovOutcome::NotAnosov { root: i, functional: r.label() });
        }
        let target = if v.is_negative() { &mut s } else { &mut u };
        target.extend(r.space.basis().iter().cloned());
        values.push(v);
    }
    let chamber = decomp.chamber_of(x)?;
    Ok(AnosovOutcome::Anosov(AnosovCertificate {
        element: x.to_vec(),
        values,
        stable: Subspace::new(d, s)?,
        unstable: Subspace::new(d, u)?,
        chamber,
    }))
}

/// Change of forms placing every Reeb element in one chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedParameterization {
    pub b: QMatrix,
    pub chamber: ChamberId,
    /// New Reeb elements in Cartan coordinates.
    pub reeb: Vec<QVector>,
}

/// Integer points of `Z^k \ {0}` by increasing sup norm, lexicographic
/// within each shell.
fn shell(k: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut p = vec![-r; k];
    loop {
        if p.iter().any(|c| c.abs() == r) {
            out.push(p.clone());
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if p[pos] < r {
                p[pos] += 1;
                for c in p.iter_mut().skip(pos + 1) {
                    *c = -r;
                }
                break;
            }
        }
    }
}

fn common_chamber(decomp: &RootDecomposition, pts: &[QVector]) -> Option<ChamberId> {
    let first = decomp.chamber_of(&pts[0]).ok()?;
    pts[1..].iter().all(|p| decomp.chamber_of(p).ok().as_ref() == Some(&first)).then_some(first)
}

/// Find `B` whose Reeb frame lies in a single Weyl chamber with all forms
/// still non-degenerate. Returns the identity when the current frame
/// already qualifies; otherwise the new Reeb elements are `p + ε/(j+1)·e_j`
/// around interior integer points `p`, taken by shell then lexicographically.
pub fn adapt_parameterization(s: &ContactStructure, decomp: &RootDecomposition) -> Result<AdaptedParameterization> {
    let k = s.k();
    if s.i_space().basis() != decomp.cartan().basis().basis() {
        return Err(Error::InvalidInput("structure's I is not the Cartan basis of the decomposition".into()));
    }
    let frame = reeb_frame(s)?;
    if let Some(chamber) = common_chamber(decomp, &frame.coords) {
        return Ok(AdaptedParameterization { b: Matrix::identity(k), chamber, reeb: frame.coords });
    }
    let a = s.i_block();
    let mut tried = 0usize;
    for r in 1..=ADAPT_MAX_RADIUS {
        for p in shell(k, r) {
            let centre: QVector = p.iter().map(|&c| qi(c)).collect();
            let Ok(chamber) = decomp.chamber_of(&centre) else { continue };
            let mut eps = qi(1);
            for _ in 0..=ADAPT_HALVINGS {
                tried += 1;
                // distinct offsets: equal ones force η_i(H_mm) = η_i(H_m'm')
                let pts: Vec<QVector> = (0..k)
                    .map(|j| {
                        let mut v = centre.clone();
                        v[j] += &eps / qi(j as i64 + 1);
                        v
                    })
                    .collect();
                if common_chamber(decomp, &pts).as_ref() == Some(&chamber) {
                    let rm = Matrix::from_columns(&pts, k)?;
                    if let Some(b) = (&a * &rm).inverse() {
                        if reparameterize(s, &b)?.valid() {
                            return Ok(AdaptedParameterization { b, chamber, reeb: pts });
                        }
                    }
                }
                eps *= q(1, 2);
            }
        }
    }
    Err(Error::SearchExhausted {
        tried,
        bound: format!("sup norm <= {ADAPT_MAX_RADIUS}, {ADAPT_HALVINGS} halvings"),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthEntry {
    pub root: usize,
    pub t: f64,
    /// Max over the root-space basis of
    /// `‖e^{tX} U e^{-tX} - e^{tμ(x)} U‖ / (‖U‖ e^{tμ(x)})`.
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    pub entries: Vec<GrowthEntry>,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl GrowthReport {
    pub fn pass(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

fn to_float(m: &QMatrix) -> FMatrix {
    m.map(to_f64)
}

fn relative_deviation(conj: &FMatrix, u: &FMatrix, rate: f64) -> f64 {
    let expected = u.scale(&rate);
    frobenius(&(conj - &expected)) / (frobenius(u) * rate)
}

/// Floating-point comparison of `Ad(exp tx)` on each root space with the
/// exact rate `e^{tμ(x)}`.
pub fn growth_spotcheck(decomp: &RootDecomposition, cert: &AnosovCertificate, ts: &[f64], tolerance: f64) -> Result<GrowthReport> {
    let alg = decomp.algebra();
    let x = alg.realize(&decomp.cartan().element(&cert.element)).ok_or(Error::NoRealization)?;
    let x = to_float(&x);
    let flows: Vec<(f64, FMatrix, FMatrix)> =
        ts.iter().map(|&t| (t, expm(&x.scale(&t)), expm(&x.scale(&-t)))).collect();
    let entries: Vec<GrowthEntry> = decomp
        .roots()
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, r)| {
            let mu = to_f64(&r.eval(&cert.element));
            let us: Vec<FMatrix> =
                r.space.basis().iter().map(|u| to_float(&alg.realize(u).expect("realization checked"))).collect();
            flows
                .iter()
                .map(|(t, e, einv)| {
                    let rate = (t * mu).exp();
                    let deviation = us
                        .iter()
                        .map(|u| relative_deviation(&(&(e * u) * einv), u, rate))
                        .fold(0.0, f64::max);
                    GrowthEntry { root: i, t: *t, deviation }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let max_deviation = entries.iter().map(|e| e.deviation).fold(0.0, f64::max);
    Ok(GrowthReport { entries, max_deviation, tolerance })
}
