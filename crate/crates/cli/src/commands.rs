use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use weylcontact::anosov::AnosovOutcome;
use weylcontact::contact::ContactStructure;
use weylcontact::io::{
    adapted_json, algebra_from_json, algebra_to_json, anosov_json, certificate_json, decomposition_json,
    extension_spec_from_json, forms_from_json, forms_to_json, growth_json, kammeyer_report_json,
    kammeyer_table_from_json, kammeyer_table_to_json, reeb_json, reparameterized_json, AdaptedJson, AnosovJson,
    CertificateJson, DecompositionJson, GrowthJson, KammeyerReportJson, ReebJson, ReparameterizedJson,
};
use weylcontact::scalar::{format_rational, parse_rational_list, q};
use weylcontact::{
    adapt_parameterization, apply_extension, build_sl_n, build_so_kkn, dform_gram, extend_form, find_form_basis,
    growth_spotcheck, is_anosov, reeb_frame, reparameterize, sl_table, sokkn_admissible, verify_contact,
    verify_kammeyer_relations, ContactCertificate, Error, ExtensionKind, ExtensionResult, QAlgebra, QVector,
    RootDecomposition,
};

use crate::report::{write_atomic, Check, Report, RunConfig};
use crate::{AlgebraCmd, AlgebraType, AnosovCmd, Cli, Command, ContactCmd, ExtendArgs, ExtendKind, KammeyerCmd};

const GROWTH_TIMES: [f64; 3] = [0.5, 1.0, 2.0];
const GROWTH_TOLERANCE: f64 = 1e-6;

#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

type Outcome = Result<bool, Failure>;

struct Ctx<'a> {
    cli: &'a Cli,
    threads: Option<usize>,
}

impl Ctx<'_> {
    fn config(&self, command: &str, args: &[(&str, String)]) -> RunConfig {
        RunConfig {
            command: command.to_string(),
            args: args.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            seed: self.cli.seed,
            format: self.cli.format,
            threads: self.threads,
        }
    }

    fn write(&self, text: &str) -> Result<(), Failure> {
        match &self.cli.out {
            Some(p) => write_atomic(p, text).map_err(|source| Failure::Io { path: p.display().to_string(), source }),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit<T: Serialize>(&self, report: Report<T>) -> Outcome {
        let text = report.render().map_err(Error::from)?;
        self.write(&text)?;
        Ok(report.verdict)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|source| Failure::Io { path: path.display().to_string(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    write_atomic(path, text).map_err(|source| Failure::Io { path: path.display().to_string(), source })
}

fn show(p: &Path) -> String {
    p.display().to_string()
}

fn load_algebra(path: &Path) -> Result<QAlgebra, Failure> {
    Ok(algebra_from_json(&read(path)?)?)
}

fn decompose(path: &Path) -> Result<RootDecomposition, Failure> {
    Ok(RootDecomposition::of(Arc::new(load_algebra(path)?))?)
}

fn load_rows(path: &Path) -> Result<Vec<QVector>, Failure> {
    Ok(forms_from_json(&read(path)?)?)
}

pub fn run(cli: &Cli, threads: Option<usize>) -> Outcome {
    let ctx = Ctx { cli, threads };
    match &cli.command {
        Command::Algebra(AlgebraCmd::Build { kind, k, n }) => algebra_build(&ctx, *kind, *k, *n),
        Command::Algebra(AlgebraCmd::Load { input }) => algebra_load(&ctx, input),
        Command::Roots { input } => roots(&ctx, input),
        Command::Contact(ContactCmd::Verify { input, forms }) => contact_verify(&ctx, input, forms),
        Command::Contact(ContactCmd::Search { input, count, forms_out }) => {
            contact_search(&ctx, input, *count, forms_out.as_deref())
        }
        Command::Anosov(AnosovCmd::Check { input, element }) => anosov_check(&ctx, input, element),
        Command::Anosov(AnosovCmd::Adapt { input, forms }) => anosov_adapt(&ctx, input, forms),
        Command::Extend(args) => extend(&ctx, args),
        Command::Kammeyer(KammeyerCmd::Verify { input }) => kammeyer_verify(&ctx, input),
        Command::Kammeyer(KammeyerCmd::Template { n }) => {
            let table = sl_table(*n)?;
            ctx.write(&kammeyer_table_to_json(&table)?)?;
            Ok(true)
        }
        Command::Report => battery(&ctx),
    }
}

// ---------------------------------------------------------------- algebra

fn algebra_build(ctx: &Ctx, kind: AlgebraType, k: usize, n: usize) -> Outcome {
    let alg = match kind {
        AlgebraType::So => build_so_kkn(k, n)?,
        AlgebraType::Sl => build_sl_n(n)?,
    };
    ctx.write(&algebra_to_json(&alg)?)?;
    Ok(true)
}

#[derive(Serialize)]
struct AlgebraSummary {
    dim: Option<usize>,
    basis: Vec<String>,
    semisimple: Option<bool>,
    realization: Option<bool>,
}

fn algebra_load(ctx: &Ctx, input: &Path) -> Outcome {
    let config = ctx.config("algebra load", &[("input", show(input))]);
    let text = read(input)?;
    let (check, summary) = match algebra_from_json(&text) {
        Ok(alg) => {
            let (_, semisimple) = alg.killing_form();
            let summary = AlgebraSummary {
                dim: Some(alg.dim()),
                basis: alg.basis_names().to_vec(),
                semisimple: Some(semisimple),
                realization: Some(alg.realization().is_some()),
            };
            (Check::new("Lie axioms", true, "antisymmetry and Jacobi hold on every basis triple"), summary)
        }
        Err(e @ (Error::JacobiFailure(..) | Error::NotAntisymmetricTable(..) | Error::RealizationMismatch(..))) => {
            let summary = AlgebraSummary { dim: None, basis: Vec::new(), semisimple: None, realization: None };
            (Check::new("Lie axioms", false, e.to_string()), summary)
        }
        Err(e) => return Err(e.into()),
    };
    ctx.emit(Report::new("Algebra validation", config, vec![check], summary))
}

// ------------------------------------------------------------------ roots

fn roots(ctx: &Ctx, input: &Path) -> Outcome {
    let config = ctx.config("roots", &[("input", show(input))]);
    let d = decompose(input)?;
    let total = d.g0().dim() + d.roots().iter().map(|r| r.space.dim()).sum::<usize>();
    let dim = d.algebra().dim();
    let symmetric = (0..d.roots().len()).all(|i| d.opposite(d.opposite(i)) == i);
    let checks = vec![
        Check::new("g0 plus root spaces span the algebra", total == dim, format!("{total} of {dim}")),
        Check::new("roots closed under negation", symmetric, format!("{} roots", d.roots().len())),
    ];
    ctx.emit(Report::new("Restricted roots", config, checks, decomposition_json(&d)))
}

// ---------------------------------------------------------------- contact

fn certificate_checks(cert: &ContactCertificate) -> Vec<Check> {
    let mut checks = vec![Check::new(
        "F is the common kernel of the forms",
        cert.f_is_common_kernel(),
        match cert.forms.iter().position(|f| !f.vanishes()) {
            _ if cert.i_block_det.is_zero() => "det[alpha_i(I_j)] = 0".to_string(),
            Some(j) => format!(
                "alpha_{} is nonzero on F/k vector #{}",
                j + 1,
                cert.forms[j].vanish_witness.unwrap_or_default() + 1
            ),
            None => format!("det[alpha_i(I_j)] = {}", cert.i_block_det),
        },
    )];
    for (j, f) in cert.forms.iter().enumerate() {
        let j = j + 1;
        checks.push(Check::new(format!("d alpha_{j} nondegenerate on F"), f.nondegenerate(), format!("Pf = {}", f.pfaffian)));
        let kernel = match &f.kernel_witness {
            Some((u, e, v)) => format!("d alpha_{j}(I/k #{}, e_{}) = {v}", u + 1, e + 1),
            None => format!("rank on I + F is {} (dim F = {})", f.kernel_rank, cert.dim_f),
        };
        checks.push(Check::new(format!("ker d alpha_{j} = I"), f.kernel_ok(cert.dim_f), kernel));
        let oracle = match &f.volume_oracle {
            Some(o) => format!(", oracle {o}"),
            None => String::new(),
        };
        checks.push(Check::new(format!("volume form for alpha_{j} nonzero"), f.volume_ok(), format!("{}{oracle}", f.volume)));
    }
    checks
}

fn reeb_checks(frame: &weylcontact::ReebFrame) -> Vec<Check> {
    vec![
        Check::new("Reeb duality alpha_i(R_j) = delta_ij", frame.duality, ""),
        Check::new("Reeb fields commute", frame.commuting, ""),
    ]
}

#[derive(Serialize)]
struct ContactData {
    #[serde(skip_serializing_if = "Option::is_none")]
    rows: Option<Vec<Vec<String>>>,
    certificate: CertificateJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    reeb: Option<ReebJson>,
}

fn certify(s: &ContactStructure, rows: Option<&[QVector]>) -> Result<(Vec<Check>, ContactData), Failure> {
    let cert = verify_contact(s)?;
    let mut checks = certificate_checks(&cert);
    let reeb = if cert.verdict {
        let frame = reeb_frame(s)?;
        checks.extend(reeb_checks(&frame));
        Some(reeb_json(&frame))
    } else {
        None
    };
    let rows = rows.map(|r| r.iter().map(|v| v.iter().map(format_rational).collect()).collect());
    Ok((checks, ContactData { rows, certificate: certificate_json(&cert), reeb }))
}

fn contact_verify(ctx: &Ctx, input: &Path, forms: &Path) -> Outcome {
    let config = ctx.config("contact verify", &[("input", show(input)), ("forms", show(forms))]);
    let d = decompose(input)?;
    let s = ContactStructure::from_rows(&d, &load_rows(forms)?)?;
    let (checks, data) = certify(&s, None)?;
    ctx.emit(Report::new("k-contact certificate", config, checks, data))
}

fn contact_search(ctx: &Ctx, input: &Path, count: Option<usize>, forms_out: Option<&Path>) -> Outcome {
    let mut args = vec![("input", show(input))];
    if let Some(c) = count {
        args.push(("count", c.to_string()));
    }
    if let Some(p) = forms_out {
        args.push(("forms-out", show(p)));
    }
    let config = ctx.config("contact search", &args);
    let d = decompose(input)?;
    if let Some(c) = count {
        if c != d.rank() {
            return Err(Failure::Usage(format!("--count {c} but I = a has dimension {}", d.rank())));
        }
    }
    let rows = match find_form_basis(&d) {
        Ok(rows) => rows,
        Err(e @ Error::SearchExhausted { .. }) => {
            let check = Check::new("certified form basis found", false, e.to_string());
            return ctx.emit(Report::new("Form search", config, vec![check], ()));
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(p) = forms_out {
        write_file(p, &forms_to_json(&rows)?)?;
    }
    let s = ContactStructure::from_rows(&d, &rows)?;
    let (checks, data) = certify(&s, Some(&rows))?;
    ctx.emit(Report::new("Form search", config, checks, data))
}

// ----------------------------------------------------------------- anosov

#[derive(Serialize)]
struct AnosovData {
    splitting: AnosovJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    growth: Option<GrowthJson>,
}

fn anosov_checks(d: &RootDecomposition, x: &[weylcontact::Rational]) -> Result<(Vec<Check>, AnosovData), Failure> {
    let outcome = is_anosov(d, x)?;
    let mut checks = Vec::new();
    let mut growth = None;
    match &outcome {
        AnosovOutcome::NotAnosov { root, functional } => {
            checks.push(Check::new("mu(x) != 0 for every root", false, format!("root #{} ({functional}) vanishes", root + 1)));
        }
        AnosovOutcome::Anosov(c) => {
            let dim_f = d.root_sum().dim();
            checks.push(Check::new("mu(x) != 0 for every root", true, format!("chamber {}", c.chamber.as_str())));
            checks.push(Check::new(
                "E^s + E^u = F",
                c.stable.dim() + c.unstable.dim() == dim_f,
                format!("dim E^s = {}, dim E^u = {}", c.stable.dim(), c.unstable.dim()),
            ));
            if d.algebra().realization().is_some() {
                let g = growth_spotcheck(d, c, &GROWTH_TIMES, GROWTH_TOLERANCE)?;
                checks.push(Check::new(
                    "growth rates match exp(t mu(x))",
                    g.pass(),
                    format!("max relative deviation {:.3e} (tolerance {GROWTH_TOLERANCE:e})", g.max_deviation),
                ));
                growth = Some(growth_json(&g));
            }
        }
    }
    Ok((checks, AnosovData { splitting: anosov_json(x, &outcome), growth }))
}

fn anosov_check(ctx: &Ctx, input: &Path, element: &str) -> Outcome {
    let config = ctx.config("anosov check", &[("input", show(input)), ("element", format!("\"{element}\""))]);
    let d = decompose(input)?;
    let x = parse_rational_list(element)?;
    let (checks, data) = anosov_checks(&d, &x)?;
    ctx.emit(Report::new("Anosov splitting", config, checks, data))
}

#[derive(Serialize)]
struct AdaptData {
    #[serde(skip_serializing_if = "Option::is_none")]
    adapted: Option<AdaptedJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reparameterized: Option<ReparameterizedJson>,
}

fn adapt_checks(s: &ContactStructure, d: &RootDecomposition) -> Result<(Vec<Check>, AdaptData), Failure> {
    let adapted = match adapt_parameterization(s, d) {
        Ok(a) => a,
        Err(e @ (Error::SearchExhausted { .. } | Error::SingularFrame)) => {
            let check = Check::new("Reeb elements share a chamber", false, e.to_string());
            return Ok((vec![check], AdaptData { adapted: None, reparameterized: None }));
        }
        Err(e) => return Err(e.into()),
    };
    let rep = reparameterize(s, &adapted.b)?;
    let certified = verify_contact(&rep.structure)?.verdict;
    let checks = vec![
        Check::new("Reeb elements share a chamber", true, format!("chamber {}", adapted.chamber.as_str())),
        Check::new("P_j(B) != 0 for every form", rep.valid(), format!("det B = {}", rep.det_b)),
        Check::new("reparameterized forms are k-contact", certified, ""),
    ];
    Ok((checks, AdaptData { adapted: Some(adapted_json(&adapted)), reparameterized: Some(reparameterized_json(&rep)) }))
}

fn anosov_adapt(ctx: &Ctx, input: &Path, forms: &Path) -> Outcome {
    let config = ctx.config("anosov adapt", &[("input", show(input)), ("forms", show(forms))]);
    let d = decompose(input)?;
    let s = ContactStructure::from_rows(&d, &load_rows(forms)?)?;
    let (checks, data) = adapt_checks(&s, &d)?;
    ctx.emit(Report::new("Adapted parameterization", config, checks, data))
}

// -------------------------------------------------------------- extension

#[derive(Serialize)]
struct ExtensionData {
    kind: &'static str,
    dim: usize,
    k: usize,
    dim_f: usize,
    completion: Vec<Vec<String>>,
    certificate: CertificateJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    reeb: Option<ReebJson>,
}

fn extension_checks(base: &ContactStructure, ext: &ExtensionResult, kind: ExtensionKind) -> Result<(Vec<Check>, ExtensionData), Failure> {
    let mut checks = certificate_checks(&ext.certificate);
    let mut reeb = None;
    if ext.certificate.verdict {
        let frame = reeb_frame(&ext.structure)?;
        checks.extend(reeb_checks(&frame));
        if kind == ExtensionKind::Central {
            let base_frame = reeb_frame(base)?;
            let k = base.k();
            let restricts = (0..k).all(|j| frame.coords[j][..k] == base_frame.coords[j][..]);
            checks.push(Check::new("extended Reeb frame restricts to the base frame", restricts, ""));
        }
        reeb = Some(reeb_json(&frame));
    }
    let s = &ext.structure;
    let data = ExtensionData {
        kind: match kind {
            ExtensionKind::Central => "central",
            ExtensionKind::Modified => "modified",
        },
        dim: s.algebra().dim(),
        k: s.k(),
        dim_f: s.f_space().dim(),
        completion: ext.completion.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
        certificate: certificate_json(&ext.certificate),
        reeb,
    };
    Ok((checks, data))
}

fn extend(ctx: &Ctx, args: &ExtendArgs) -> Outcome {
    let kind = match args.kind {
        ExtendKind::Central => ExtensionKind::Central,
        ExtendKind::Modified => ExtensionKind::Modified,
    };
    let mut echo = vec![
        ("kind", format!("{:?}", args.kind).to_lowercase()),
        ("input", show(&args.input)),
        ("spec", show(&args.spec)),
    ];
    if let Some(f) = &args.forms {
        echo.push(("forms", show(f)));
    }
    let config = ctx.config("extend", &echo);
    let d = decompose(&args.input)?;
    let spec = extension_spec_from_json(&read(&args.spec)?)?;
    if spec.kind != kind {
        return Err(Failure::Usage(format!("spec kind {:?} does not match subcommand {:?}", spec.kind, kind)));
    }
    let rows = match &args.forms {
        Some(p) => load_rows(p)?,
        None => find_form_basis(&d)?,
    };
    let base = ContactStructure::from_rows(&d, &rows)?;
    let base_ok = verify_contact(&base)?.verdict;
    let mut checks = vec![Check::new("base structure is k-contact", base_ok, format!("k = {}", base.k()))];
    if !base_ok {
        return ctx.emit(Report::new("Extension", config, checks, ()));
    }
    match apply_extension(&base, &spec) {
        Ok(ext) => {
            let (more, data) = extension_checks(&base, &ext, kind)?;
            checks.extend(more);
            ctx.emit(Report::new("Extension", config, checks, data))
        }
        Err(e @ (Error::NotCentralizing(_) | Error::NotAbelian(..) | Error::SearchExhausted { .. })) => {
            checks.push(Check::new("extension data admissible", false, e.to_string()));
            ctx.emit(Report::new("Extension", config, checks, ()))
        }
        Err(e) => Err(e.into()),
    }
}

// --------------------------------------------------------------- kammeyer

fn kammeyer_verify(ctx: &Ctx, input: &Path) -> Outcome {
    let config = ctx.config("kammeyer verify", &[("input", show(input))]);
    let table = kammeyer_table_from_json(&read(input)?)?;
    let report = verify_kammeyer_relations(&table);
    let checks = relation_checks(&report);
    ctx.emit(Report::new("Relation table", config, checks, kammeyer_report_json(&report)))
}

fn relation_checks(report: &weylcontact::KammeyerReport) -> Vec<Check> {
    report
        .results
        .iter()
        .map(|r| {
            let detail = match (&r.witness, r.applicable()) {
                (Some(w), _) => w.clone(),
                (None, true) => format!("{} instances", r.checked),
                (None, false) => "not applicable".to_string(),
            };
            Check::new(format!("{}: {}", r.name, r.statement), r.passed(), detail)
        })
        .collect()
}

// ----------------------------------------------------------------- report

#[derive(Serialize)]
struct BuiltinSummary {
    name: String,
    dim: usize,
    rank: usize,
    roots: usize,
    chambers: usize,
    rows: Vec<Vec<String>>,
    certificate: CertificateJson,
    generic_element: AnosovJson,
    adapted: Option<AdaptedJson>,
}

#[derive(Serialize)]
struct BatteryData {
    builtins: Vec<BuiltinSummary>,
    admissibility_samples: BTreeMap<String, usize>,
    growth: Option<GrowthJson>,
    central: Option<ExtensionData>,
    modified: Option<ExtensionData>,
    relations: KammeyerReportJson,
    decompositions: BTreeMap<String, DecompositionJson>,
}

const ADMISSIBILITY_SAMPLES: usize = 50;

#[derive(Clone, Copy)]
enum Builtin {
    So(usize, usize),
    Sl(usize),
}

impl Builtin {
    fn name(self) -> String {
        match self {
            Builtin::So(k, n) => format!("so({k},{})", k + n),
            Builtin::Sl(n) => format!("sl({n})"),
        }
    }
}

fn random_covector(rng: &mut ChaCha8Rng, k: usize) -> QVector {
    (0..k)
        .map(|_| {
            let num = rng.gen_range(-5i64..=5);
            let mut den = 0;
            while den == 0 {
                den = rng.gen_range(-5i64..=5);
            }
            q(num, den)
        })
        .collect()
}

fn battery(ctx: &Ctx) -> Outcome {
    let started = Instant::now();
    let config = ctx.config("report", &[]);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.cli.seed);
    let mut checks = Vec::new();
    let mut builtins = Vec::new();
    let mut samples = BTreeMap::new();
    let mut decompositions = BTreeMap::new();

    for family in [Builtin::So(2, 1), Builtin::So(2, 2), Builtin::So(3, 1), Builtin::Sl(3)] {
        let name = family.name();
        let alg = match family {
            Builtin::So(k, n) => build_so_kkn(k, n)?,
            Builtin::Sl(n) => build_sl_n(n)?,
        };
        let d = RootDecomposition::of(Arc::new(alg))?;
        let rows = find_form_basis(&d)?;
        let s = ContactStructure::from_rows(&d, &rows)?;
        let cert = verify_contact(&s)?;
        checks.push(Check::new(format!("{name}: k-contact certificate"), cert.verdict, format!("k = {}, dim F = {}", cert.k, cert.dim_f)));
        if cert.verdict {
            let frame = reeb_frame(&s)?;
            checks.push(Check::new(format!("{name}: Reeb frame dual and commuting"), frame.duality && frame.commuting, ""));
        }
        // same ray, scaled so the float growth check stays well conditioned
        let g = d.generic_element();
        let top = d.roots().iter().map(|r| r.eval(g).abs()).max().unwrap_or_else(|| q(1, 1));
        let x: QVector = g.iter().map(|c| c / &top).collect();
        let (anosov, anosov_data) = anosov_checks(&d, &x)?;
        let split_ok = anosov.iter().all(|c| c.pass);
        checks.push(Check::new(format!("{name}: generic element is Anosov"), split_ok, anosov_data.splitting.chamber.clone().unwrap_or_default()));
        let (adapt, adapt_data) = adapt_checks(&s, &d)?;
        checks.push(Check::new(
            format!("{name}: adapted parameterization"),
            adapt.iter().all(|c| c.pass),
            adapt.first().map(|c| c.detail.clone()).unwrap_or_default(),
        ));
        if let Builtin::So(k, n) = family {
            let ef = d.root_sum();
            let mut agree = 0;
            for _ in 0..ADMISSIBILITY_SAMPLES {
                let lambda = random_covector(&mut rng, k);
                let gram = dform_gram(d.algebra(), &extend_form(&lambda, &d)?, &ef)?;
                if gram.is_nondegenerate() == sokkn_admissible(&lambda, k, n) {
                    agree += 1;
                }
            }
            checks.push(Check::new(
                format!("{name}: admissibility criterion matches Gram nondegeneracy"),
                agree == ADMISSIBILITY_SAMPLES,
                format!("{agree}/{ADMISSIBILITY_SAMPLES} seeded covectors"),
            ));
            samples.insert(name.to_string(), agree);
        }
        builtins.push(BuiltinSummary {
            name: name.to_string(),
            dim: d.algebra().dim(),
            rank: d.rank(),
            roots: d.roots().len(),
            chambers: d.weyl_chambers().len(),
            rows: rows.iter().map(|r| r.iter().map(format_rational).collect()).collect(),
            certificate: certificate_json(&cert),
            generic_element: anosov_data.splitting,
            adapted: adapt_data.adapted,
        });
        decompositions.insert(name.to_string(), decomposition_json(&d));
    }

    let so23 = RootDecomposition::of(Arc::new(build_so_kkn(2, 1)?))?;
    let x = parse_rational_list("1,2")?;
    let (growth_checks, growth_data) = anosov_checks(&so23, &x)?;
    checks.extend(growth_checks.into_iter().map(|c| Check { label: format!("so(2,3), x = (1,2): {}", c.label), ..c }));

    let base = ContactStructure::from_rows(&so23, &parse_rows(&["1,2", "2,1"])?)?;
    let central = weylcontact::central_extension(&base, 1, &[])?;
    let (c_checks, central_data) = extension_checks(&base, &central, ExtensionKind::Central)?;
    checks.extend(c_checks.into_iter().map(|c| Check { label: format!("central extension of so(2,3): {}", c.label), ..c }));

    let so24 = RootDecomposition::of(Arc::new(build_so_kkn(2, 2)?))?;
    let base24 = ContactStructure::from_rows(&so24, &parse_rows(&["1,2", "2,1"])?)?;
    let mut y = vec![q(0, 1); so24.algebra().dim()];
    let idx = so24.algebra().index_of("D_12").ok_or_else(|| Failure::Usage("so(2,4) lacks D_12".into()))?;
    y[idx] = q(1, 1);
    let modified = weylcontact::modified_weyl(&base24, &[y], None)?;
    let (m_checks, modified_data) = extension_checks(&base24, &modified, ExtensionKind::Modified)?;
    checks.extend(m_checks.into_iter().map(|c| Check { label: format!("modified extension of so(2,4): {}", c.label), ..c }));

    let table = sl_table(2)?;
    let rel = verify_kammeyer_relations(&table);
    checks.push(Check::new("sl(2) relation table", rel.all_pass(), rel.failures().join(", ")));

    let elapsed = started.elapsed().as_secs_f64();
    eprintln!("report: {} checks in {elapsed:.1} s", checks.len());
    let data = BatteryData {
        builtins,
        admissibility_samples: samples,
        growth: growth_data.growth,
        central: Some(central_data),
        modified: Some(modified_data),
        relations: kammeyer_report_json(&rel),
        decompositions,
    };
    ctx.emit(Report::new("weylcontact verification battery", config, checks, data))
}

fn parse_rows(rows: &[&str]) -> Result<Vec<QVector>, Failure> {
    Ok(rows.iter().map(|r| parse_rational_list(r)).collect::<weylcontact::Result<_>>()?)
}
