//! JSON encodings. Rationals are always `"p/q"` strings; floats appear only
//! in growth reports, as scientific-notation numbers with 17 significant
//! digits.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::anosov::{AdaptedParameterization, AnosovOutcome, GrowthReport};
use crate::contact::{ContactCertificate, ReebFrame, Reparameterized};
use crate::extension::{ExtensionKind, ExtensionSpec};
use crate::kammeyer::{KammeyerReport, KammeyerTable, Role, RootKind, TableElement, TableRoot};
use crate::matrix::Matrix;
use crate::roots::RootDecomposition;
use crate::scalar::{format_rational, parse_rational};
use crate::{Error, QAlgebra, QMatrix, QVector, Rational, Result};

fn rs(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn rss(vs: &[QVector]) -> Vec<Vec<String>> {
    vs.iter().map(|v| rs(v)).collect()
}

fn parse_vec(v: &[String]) -> Result<QVector> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn parse_rows(rows: &[Vec<String>]) -> Result<Vec<QVector>> {
    rows.iter().map(|r| parse_vec(r)).collect()
}

fn matrix_strings(m: &QMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| rs(r)).collect()
}

fn pretty<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

/// Scientific notation with 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn raw_float(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { format_float(x) } else { "null".to_string() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

// ---------------------------------------------------------------- algebra

#[derive(Serialize, Deserialize)]
struct TermJson {
    k: usize,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct BracketJson {
    i: usize,
    j: usize,
    out: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraJson {
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<BracketJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    realization: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cartan: Option<Vec<usize>>,
}

fn algebra_json(alg: &QAlgebra) -> AlgebraJson {
    AlgebraJson {
        dim: alg.dim(),
        basis: alg.basis_names().to_vec(),
        brackets: alg
            .table()
            .map(|(&(i, j), out)| BracketJson {
                i,
                j,
                out: out
                    .iter()
                    .map(|(k, c)| TermJson { k: *k, num: c.numer().to_string(), den: c.denom().to_string() })
                    .collect(),
            })
            .collect(),
        realization: alg.realization().map(|ms| ms.iter().map(matrix_strings).collect()),
        cartan: alg.cartan_hint().map(<[usize]>::to_vec),
    }
}

fn algebra_from(j: AlgebraJson) -> Result<QAlgebra> {
    if j.basis.len() != j.dim {
        return Err(Error::DimensionMismatch(format!("{} basis names for dim {}", j.basis.len(), j.dim)));
    }
    let parse_int = |s: &str| s.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("not an integer: {s:?}")));
    let mut table = Vec::with_capacity(j.brackets.len());
    for b in j.brackets {
        let mut out = Vec::with_capacity(b.out.len());
        for t in b.out {
            let den = parse_int(&t.den)?;
            if den == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in bracket ({}, {})", b.i, b.j)));
            }
            out.push((t.k, Rational::new(parse_int(&t.num)?, den)));
        }
        table.push(((b.i, b.j), out));
    }
    let realization = match j.realization {
        Some(ms) => Some(ms.iter().map(|m| Matrix::from_rows(parse_rows(m)?)).collect::<Result<Vec<_>>>()?),
        None => None,
    };
    let alg = QAlgebra::from_table(j.basis, table, realization)?;
    match j.cartan {
        Some(idx) => alg.with_cartan_hint(idx),
        None => Ok(alg),
    }
}

pub fn algebra_to_json(alg: &QAlgebra) -> Result<String> {
    pretty(&algebra_json(alg))
}

/// Parse and validate (antisymmetry, Jacobi, realization).
pub fn algebra_from_json(text: &str) -> Result<QAlgebra> {
    algebra_from(serde_json::from_str(text)?)
}

// ------------------------------------------------------------------ forms

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormsJson {
    rows: Vec<Vec<String>>,
}

pub fn forms_to_json(rows: &[QVector]) -> Result<String> {
    pretty(&FormsJson { rows: rss(rows) })
}

pub fn forms_from_json(text: &str) -> Result<Vec<QVector>> {
    let f: FormsJson = serde_json::from_str(text)?;
    parse_rows(&f.rows)
}

// -------------------------------------------------------------- extension

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    kind: String,
    l: usize,
    #[serde(default)]
    assignment: Vec<usize>,
    #[serde(default)]
    a_star: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    companion: Option<usize>,
}

pub fn extension_spec_from_json(text: &str) -> Result<ExtensionSpec> {
    let s: SpecJson = serde_json::from_str(text)?;
    let kind = match s.kind.as_str() {
        "central" => ExtensionKind::Central,
        "modified" => ExtensionKind::Modified,
        other => return Err(Error::Parse(format!("unknown extension kind {other:?}"))),
    };
    Ok(ExtensionSpec { kind, l: s.l, assignment: s.assignment, a_star: parse_rows(&s.a_star)?, companion: s.companion })
}

pub fn extension_spec_to_json(spec: &ExtensionSpec) -> Result<String> {
    let kind = match spec.kind {
        ExtensionKind::Central => "central",
        ExtensionKind::Modified => "modified",
    };
    pretty(&SpecJson {
        kind: kind.into(),
        l: spec.l,
        assignment: spec.assignment.clone(),
        a_star: rss(&spec.a_star),
        companion: spec.companion,
    })
}

// ---------------------------------------------------------- decomposition

#[derive(Serialize)]
pub struct RootJson {
    pub functional: Vec<String>,
    pub space: Vec<Vec<String>>,
    pub multiplicity: usize,
    pub positive: bool,
}

#[derive(Serialize)]
pub struct DecompositionJson {
    pub rank: usize,
    pub cartan: Vec<Vec<String>>,
    pub g0: Vec<Vec<String>>,
    pub compact: Vec<Vec<String>>,
    pub roots: Vec<RootJson>,
    pub chambers: Vec<String>,
}

pub fn decomposition_json(d: &RootDecomposition) -> DecompositionJson {
    let positive = d.positive_roots().len();
    DecompositionJson {
        rank: d.rank(),
        cartan: rss(d.cartan().basis().basis()),
        g0: rss(d.g0().basis()),
        compact: rss(d.compact_part().basis()),
        roots: d
            .roots()
            .iter()
            .enumerate()
            .map(|(i, r)| RootJson {
                functional: rs(&r.functional),
                space: rss(r.space.basis()),
                multiplicity: r.multiplicity,
                positive: i < positive,
            })
            .collect(),
        chambers: d.weyl_chambers().iter().map(|c| c.as_str().to_string()).collect(),
    }
}

// ------------------------------------------------------------ certificate

#[derive(Serialize)]
pub struct KernelWitnessJson {
    pub u: usize,
    pub e: usize,
    pub value: String,
}

#[derive(Serialize)]
pub struct FormRecordJson {
    pub vanishes_on_f: bool,
    pub vanish_witness: Option<usize>,
    pub pfaffian: String,
    pub nondegenerate: bool,
    pub kernel_rank: usize,
    pub kernel_witness: Option<KernelWitnessJson>,
    pub kernel_is_i: bool,
    pub volume: String,
    pub volume_oracle: Option<String>,
    pub volume_ok: bool,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub k: usize,
    pub dim_f: usize,
    pub i_block: Vec<Vec<String>>,
    pub i_block_det: String,
    pub forms: Vec<FormRecordJson>,
    pub verdict: bool,
}

pub fn certificate_json(c: &ContactCertificate) -> CertificateJson {
    CertificateJson {
        k: c.k,
        dim_f: c.dim_f,
        i_block: matrix_strings(&c.i_block),
        i_block_det: format_rational(&c.i_block_det),
        forms: c
            .forms
            .iter()
            .map(|f| FormRecordJson {
                vanishes_on_f: f.vanishes(),
                vanish_witness: f.vanish_witness,
                pfaffian: format_rational(&f.pfaffian),
                nondegenerate: f.nondegenerate(),
                kernel_rank: f.kernel_rank,
                kernel_witness: f
                    .kernel_witness
                    .as_ref()
                    .map(|(u, e, v)| KernelWitnessJson { u: *u, e: *e, value: format_rational(v) }),
                kernel_is_i: f.kernel_ok(c.dim_f),
                volume: format_rational(&f.volume),
                volume_oracle: f.volume_oracle.as_ref().map(format_rational),
                volume_ok: f.volume_ok(),
            })
            .collect(),
        verdict: c.verdict,
    }
}

#[derive(Serialize)]
pub struct ReebJson {
    pub coords: Vec<Vec<String>>,
    pub vectors: Vec<Vec<String>>,
    pub duality: bool,
    pub commuting: bool,
}

pub fn reeb_json(r: &ReebFrame) -> ReebJson {
    ReebJson { coords: rss(&r.coords), vectors: rss(&r.vectors), duality: r.duality, commuting: r.commuting }
}

#[derive(Serialize)]
pub struct ReparameterizedJson {
    pub det_b: String,
    pub pfaffians: Vec<String>,
    pub p: Vec<Option<String>>,
    pub valid: bool,
}

pub fn reparameterized_json(r: &Reparameterized) -> ReparameterizedJson {
    ReparameterizedJson {
        det_b: format_rational(&r.det_b),
        pfaffians: rs(&r.pfaffians),
        p: r.p.iter().map(|p| p.as_ref().map(format_rational)).collect(),
        valid: r.valid(),
    }
}

// ----------------------------------------------------------------- anosov

#[derive(Serialize)]
pub struct AnosovJson {
    pub anosov: bool,
    pub element: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chamber: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unstable: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_root: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_functional: Option<String>,
}

pub fn anosov_json(x: &[Rational], out: &AnosovOutcome) -> AnosovJson {
    match out {
        AnosovOutcome::Anosov(c) => AnosovJson {
            anosov: true,
            element: rs(x),
            chamber: Some(c.chamber.as_str().to_string()),
            signs: Some(c.values.iter().map(|v| if v.is_positive() { "+" } else { "-" }.to_string()).collect()),
            stable: Some(rss(c.stable.basis())),
            unstable: Some(rss(c.unstable.basis())),
            wall_root: None,
            wall_functional: None,
        },
        AnosovOutcome::NotAnosov { root, functional } => AnosovJson {
            anosov: false,
            element: rs(x),
            chamber: None,
            signs: None,
            stable: None,
            unstable: None,
            wall_root: Some(*root),
            wall_functional: Some(functional.clone()),
        },
    }
}

#[derive(Serialize)]
pub struct GrowthEntryJson {
    pub root: usize,
    pub t: Box<RawValue>,
    pub deviation: Box<RawValue>,
}

#[derive(Serialize)]
pub struct GrowthJson {
    pub entries: Vec<GrowthEntryJson>,
    pub max_deviation: Box<RawValue>,
    pub tolerance: Box<RawValue>,
    pub pass: bool,
}

pub fn growth_json(g: &GrowthReport) -> GrowthJson {
    GrowthJson {
        entries: g
            .entries
            .iter()
            .map(|e| GrowthEntryJson { root: e.root, t: raw_float(e.t), deviation: raw_float(e.deviation) })
            .collect(),
        max_deviation: raw_float(g.max_deviation),
        tolerance: raw_float(g.tolerance),
        pass: g.pass(),
    }
}

#[derive(Serialize)]
pub struct AdaptedJson {
    pub b: Vec<Vec<String>>,
    pub chamber: String,
    pub reeb: Vec<Vec<String>>,
}

pub fn adapted_json(a: &AdaptedParameterization) -> AdaptedJson {
    AdaptedJson { b: matrix_strings(&a.b), chamber: a.chamber.as_str().to_string(), reeb: rss(&a.reeb) }
}

// --------------------------------------------------------------- kammeyer

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootEntry {
    label: String,
    vector: Vec<i64>,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sigma: Option<String>,
    #[serde(default = "yes")]
    starred: bool,
}

fn yes() -> bool {
    true
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementEntry {
    role: String,
    root: String,
    vector: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AuxEntry {
    root: String,
    index: u8,
    vector: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CEntry {
    alpha: String,
    beta: String,
    i: u8,
    j: u8,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DEntry {
    alpha: String,
    beta: String,
    i: u8,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GammaEntry {
    alpha: String,
    beta: String,
    value: String,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct Constants {
    #[serde(default)]
    c: Vec<CEntry>,
    #[serde(default)]
    d: Vec<DEntry>,
    #[serde(default)]
    gamma: Vec<GammaEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    algebra: AlgebraJson,
    roots: Vec<RootEntry>,
    delta1: Vec<String>,
    #[serde(default)]
    delta0: Vec<String>,
    basis: Vec<ElementEntry>,
    #[serde(default)]
    hat_h1: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    h1: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    h0: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    tilde_h0: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    aux_x: Vec<AuxEntry>,
    #[serde(default)]
    constants: Constants,
}

fn kind_name(k: RootKind) -> &'static str {
    match k {
        RootKind::Real => "real",
        RootKind::Imaginary => "imaginary",
        RootKind::Complex => "complex",
    }
}

fn map_out(m: &BTreeMap<String, QVector>) -> BTreeMap<String, Vec<String>> {
    m.iter().map(|(k, v)| (k.clone(), rs(v))).collect()
}

fn map_in(m: &BTreeMap<String, Vec<String>>) -> Result<BTreeMap<String, QVector>> {
    m.iter().map(|(k, v)| Ok((k.clone(), parse_vec(v)?))).collect()
}

pub fn kammeyer_table_to_json(t: &KammeyerTable) -> Result<String> {
    let j = TableJson {
        algebra: algebra_json(&t.algebra),
        roots: t
            .roots
            .iter()
            .map(|r| RootEntry {
                label: r.label.clone(),
                vector: r.vector.clone(),
                kind: kind_name(r.kind).into(),
                sigma: (r.sigma != r.label).then(|| r.sigma.clone()),
                starred: r.starred,
            })
            .collect(),
        delta1: t.delta1.clone(),
        delta0: t.delta0.clone(),
        basis: t
            .elements
            .iter()
            .map(|e| ElementEntry { role: e.role.name().into(), root: e.root.clone(), vector: rs(&e.vector) })
            .collect(),
        hat_h1: map_out(&t.hat_h1),
        h1: map_out(&t.h1),
        h0: map_out(&t.h0),
        tilde_h0: map_out(&t.tilde_h0),
        aux_x: t
            .aux_x
            .iter()
            .map(|((root, index), v)| AuxEntry { root: root.clone(), index: *index, vector: rs(v) })
            .collect(),
        constants: Constants {
            c: t
                .c
                .iter()
                .map(|((a, b, i, j), v)| CEntry { alpha: a.clone(), beta: b.clone(), i: *i, j: *j, value: format_rational(v) })
                .collect(),
            d: t
                .d
                .iter()
                .map(|((a, b, i), v)| DEntry { alpha: a.clone(), beta: b.clone(), i: *i, value: format_rational(v) })
                .collect(),
            gamma: t
                .gamma
                .iter()
                .map(|((a, b), v)| GammaEntry { alpha: a.clone(), beta: b.clone(), value: format_rational(v) })
                .collect(),
        },
    };
    pretty(&j)
}

/// Parse a table; the embedded algebra passes the Lie-axiom gate.
pub fn kammeyer_table_from_json(text: &str) -> Result<KammeyerTable> {
    let j: TableJson = serde_json::from_str(text)?;
    let algebra = Arc::new(algebra_from(j.algebra)?);
    let roots = j
        .roots
        .into_iter()
        .map(|r| {
            let kind = match r.kind.as_str() {
                "real" => RootKind::Real,
                "imaginary" => RootKind::Imaginary,
                "complex" => RootKind::Complex,
                other => return Err(Error::Parse(format!("unknown root kind {other:?}"))),
            };
            let sigma = r.sigma.unwrap_or_else(|| r.label.clone());
            Ok(TableRoot { label: r.label, vector: r.vector, kind, sigma, starred: r.starred })
        })
        .collect::<Result<Vec<_>>>()?;
    let elements = j
        .basis
        .into_iter()
        .map(|e| {
            let role = Role::parse(&e.role).ok_or_else(|| Error::Parse(format!("unknown role {:?}", e.role)))?;
            Ok(TableElement { role, root: e.root, vector: parse_vec(&e.vector)? })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut aux_x = BTreeMap::new();
    for a in j.aux_x {
        aux_x.insert((a.root, a.index), parse_vec(&a.vector)?);
    }
    let mut c = BTreeMap::new();
    for e in j.constants.c {
        c.insert((e.alpha, e.beta, e.i, e.j), parse_rational(&e.value)?);
    }
    let mut d = BTreeMap::new();
    for e in j.constants.d {
        d.insert((e.alpha, e.beta, e.i), parse_rational(&e.value)?);
    }
    let mut gamma = BTreeMap::new();
    for e in j.constants.gamma {
        gamma.insert((e.alpha, e.beta), parse_rational(&e.value)?);
    }
    Ok(KammeyerTable {
        algebra,
        roots,
        delta1: j.delta1,
        delta0: j.delta0,
        elements,
        hat_h1: map_in(&j.hat_h1)?,
        h1: map_in(&j.h1)?,
        h0: map_in(&j.h0)?,
        tilde_h0: map_in(&j.tilde_h0)?,
        aux_x,
        c,
        d,
        gamma,
    })
}

#[derive(Serialize)]
pub struct RelationJson {
    pub name: &'static str,
    pub statement: &'static str,
    pub checked: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct KammeyerReportJson {
    pub all_pass: bool,
    pub relations: Vec<RelationJson>,
}

pub fn kammeyer_report_json(r: &KammeyerReport) -> KammeyerReportJson {
    KammeyerReportJson {
        all_pass: r.all_pass(),
        relations: r
            .results
            .iter()
            .map(|x| RelationJson {
                name: x.name,
                statement: x.statement,
                checked: x.checked,
                pass: x.passed(),
                witness: x.witness.clone(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_sl_n, build_so_kkn};
    use crate::kammeyer::{sl_table, verify_kammeyer_relations};
    use crate::scalar::{q, qi};

    #[test]
    fn algebra_round_trip_is_byte_identical() {
        for alg in [build_so_kkn(2, 1).unwrap(), build_sl_n(3).unwrap()] {
            let a = algebra_to_json(&alg).unwrap();
            let back = algebra_from_json(&a).unwrap();
            assert_eq!(back, alg);
            assert_eq!(algebra_to_json(&back).unwrap(), a);
        }
    }

    #[test]
    fn rejects_bad_tables() {
        let bad = r#"{"dim":3,"basis":["a","b","c"],"brackets":[
            {"i":0,"j":1,"out":[{"k":2,"num":"1","den":"1"}]},
            {"i":1,"j":2,"out":[{"k":0,"num":"1","den":"1"}]},
            {"i":0,"j":2,"out":[{"k":0,"num":"1","den":"1"}]}]}"#;
        assert!(matches!(algebra_from_json(bad), Err(Error::JacobiFailure(0, 1, 2))));
        assert!(algebra_from_json("{\"dim\":1}").is_err());
        assert!(algebra_from_json(r#"{"dim":1,"basis":["a"],"brackets":[],"extra":1}"#).is_err());
    }

    #[test]
    fn forms_and_specs() {
        let rows = vec![vec![qi(1), q(-1, 2)]];
        let text = forms_to_json(&rows).unwrap();
        assert!(text.contains("\"-1/2\""));
        assert_eq!(forms_from_json(&text).unwrap(), rows);
        let spec = extension_spec_from_json(r#"{"kind":"central","l":1,"assignment":[1]}"#).unwrap();
        assert_eq!(spec.kind, ExtensionKind::Central);
        assert_eq!(extension_spec_from_json(&extension_spec_to_json(&spec).unwrap()).unwrap(), spec);
        assert!(extension_spec_from_json(r#"{"kind":"other","l":1}"#).is_err());
    }

    #[test]
    fn kammeyer_round_trip() {
        let t = sl_table(3).unwrap();
        let text = kammeyer_table_to_json(&t).unwrap();
        let back = kammeyer_table_from_json(&text).unwrap();
        assert_eq!(kammeyer_table_to_json(&back).unwrap(), text);
        assert!(verify_kammeyer_relations(&back).all_pass());
    }

    #[test]
    fn floats_have_17_digits() {
        assert_eq!(format_float(1.0), "1.0000000000000000e0");
        assert_eq!(format_float(-0.375), "-3.7500000000000000e-1");
        let v: f64 = format_float(0.1).parse().unwrap();
        assert_eq!(v, 0.1);
    }
}
