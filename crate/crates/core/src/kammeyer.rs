//! Verification of role-tagged multiplication tables for real semisimple
//! Lie algebras.
//!
//! A table tags a basis of `g` by roles `H⁰_α`, `H¹_α` (Cartan part, indexed
//! by simple roots), `X⁰_α`, `X¹_α` (imaginary and complex roots) and `Z_α`
//! (real roots), and lists the structure constants `c`, `d`, `γ` together
//! with the distinguished Cartan elements `Ĥ¹_α`, `H¹_α`, `H⁰_α`, `H̃⁰_α`.
//! [`verify_kammeyer_relations`] checks each bracket relation and each
//! constraint on the constants separately and names every failure.
//!
//! Root vectors are integer coordinates in the simple roots of the
//! complexified algebra; a root is positive when its first nonzero
//! coordinate is.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::algebra::build_sl_n;
use crate::matrix::{rank_of, Matrix};
use crate::scalar::{format_rational, is_half_integer, qi};
use crate::{Error, QAlgebra, QMatrix, QVector, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    Real,
    Imaginary,
    Complex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRoot {
    pub label: String,
    pub vector: Vec<i64>,
    pub kind: RootKind,
    /// Label of `α^σ`.
    pub sigma: String,
    /// Membership in the chosen representative set `Φ*`.
    pub starred: bool,
}

impl TableRoot {
    pub fn positive(&self) -> bool {
        self.vector.iter().find(|c| **c != 0).is_some_and(|c| *c > 0)
    }

    fn sign(&self) -> Rational {
        if self.positive() {
            Rational::one()
        } else {
            -Rational::one()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    H0,
    H1,
    X0,
    X1,
    Z,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::H0 => "H0",
            Role::H1 => "H1",
            Role::X0 => "X0",
            Role::X1 => "X1",
            Role::Z => "Z",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        Some(match s {
            "H0" => Role::H0,
            "H1" => Role::H1,
            "X0" => Role::X0,
            "X1" => Role::X1,
            "Z" => Role::Z,
            _ => return None,
        })
    }

    fn x(i: u8) -> Role {
        if i.is_multiple_of(2) {
            Role::X0
        } else {
            Role::X1
        }
    }

    fn index(self) -> u8 {
        match self {
            Role::H0 | Role::X0 => 0,
            Role::H1 | Role::X1 => 1,
            Role::Z => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableElement {
    pub role: Role,
    pub root: String,
    pub vector: QVector,
}

/// A role-tagged basis with its constants.
#[derive(Clone, Debug)]
pub struct KammeyerTable {
    pub algebra: Arc<QAlgebra>,
    pub roots: Vec<TableRoot>,
    pub delta1: Vec<String>,
    pub delta0: Vec<String>,
    pub elements: Vec<TableElement>,
    /// `Ĥ¹_α` for real `α`.
    pub hat_h1: BTreeMap<String, QVector>,
    /// `H¹_α` for complex `α`.
    pub h1: BTreeMap<String, QVector>,
    /// `H⁰_α` for complex `α`.
    pub h0: BTreeMap<String, QVector>,
    /// `H̃⁰_α` for positive imaginary `α`.
    pub tilde_h0: BTreeMap<String, QVector>,
    /// Optional `X^i_α` for real `α`, used by the `[Z, X]` relation.
    pub aux_x: BTreeMap<(String, u8), QVector>,
    /// `c^{ij}_{α,β}` keyed by `(α, β, i, j)`.
    pub c: BTreeMap<(String, String, u8, u8), Rational>,
    /// `d^i_{α,β}` keyed by `(α, β, i)`.
    pub d: BTreeMap<(String, String, u8), Rational>,
    /// `γ_{α,β}`.
    pub gamma: BTreeMap<(String, String), Rational>,
}

/// Outcome of one named relation or constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationResult {
    pub name: &'static str,
    pub statement: &'static str,
    /// Number of instances checked; zero means not applicable.
    pub checked: usize,
    pub witness: Option<String>,
}

impl RelationResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn applicable(&self) -> bool {
        self.checked > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KammeyerReport {
    pub results: Vec<RelationResult>,
}

impl KammeyerReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(RelationResult::passed)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.results.iter().filter(|r| !r.passed()).map(|r| r.name).collect()
    }

    pub fn get(&self, name: &str) -> Option<&RelationResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

struct Check {
    name: &'static str,
    statement: &'static str,
    checked: usize,
    witness: Option<String>,
}

impl Check {
    fn new(name: &'static str, statement: &'static str) -> Self {
        Check { name, statement, checked: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn done(self) -> RelationResult {
        RelationResult { name: self.name, statement: self.statement, checked: self.checked, witness: self.witness }
    }
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(","))
}

fn scaled(v: &[Rational], c: &Rational) -> QVector {
    v.iter().map(|x| x * c).collect()
}

fn add(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

struct Ctx<'a> {
    t: &'a KammeyerTable,
    dim: usize,
    /// Coordinates in the role basis: column `e` of `inv` is `e_e`.
    inv: Option<QMatrix>,
}

impl<'a> Ctx<'a> {
    fn root(&self, label: &str) -> Option<&'a TableRoot> {
        self.t.roots.iter().find(|r| r.label == label)
    }

    fn root_by_vector(&self, v: &[i64]) -> Option<&'a TableRoot> {
        self.t.roots.iter().find(|r| r.vector == v)
    }

    fn negative(&self, label: &str) -> Option<&'a TableRoot> {
        let r = self.root(label)?;
        let v: Vec<i64> = r.vector.iter().map(|c| -c).collect();
        self.root_by_vector(&v)
    }

    fn sum(&self, a: &str, b: &str) -> Option<&'a TableRoot> {
        let (ra, rb) = (self.root(a)?, self.root(b)?);
        let v: Vec<i64> = ra.vector.iter().zip(&rb.vector).map(|(x, y)| x + y).collect();
        self.root_by_vector(&v)
    }

    fn element(&self, role: Role, root: &str) -> Option<&'a QVector> {
        self.t.elements.iter().find(|e| e.role == role && e.root == root).map(|e| &e.vector)
    }

    fn of_role(&self, pred: impl Fn(Role) -> bool) -> impl Iterator<Item = &'a TableElement> {
        self.t.elements.iter().filter(move |e| pred(e.role))
    }

    fn bracket(&self, a: &[Rational], b: &[Rational]) -> QVector {
        self.t.algebra.bracket(a, b).unwrap_or_else(|_| vec![Rational::zero(); self.dim])
    }

    fn zero(&self) -> QVector {
        vec![Rational::zero(); self.dim]
    }

    /// Coordinates of `v` in the role basis.
    fn coords(&self, v: &[Rational]) -> Option<QVector> {
        self.inv.as_ref().map(|m| m.mul_vec(v))
    }

    /// Whether `v` is a nonzero integer combination of the given role
    /// elements (after multiplying by `scale`).
    fn integer_combination(&self, v: &[Rational], allowed: &[usize], scale: i64) -> bool {
        let Some(c) = self.coords(v) else { return false };
        if c.iter().all(Zero::is_zero) {
            return false;
        }
        c.iter().enumerate().all(|(i, x)| {
            if allowed.contains(&i) {
                (x * qi(scale)).is_integer()
            } else {
                x.is_zero()
            }
        })
    }

    fn indices(&self, pred: impl Fn(&TableElement) -> bool) -> Vec<usize> {
        self.t.elements.iter().enumerate().filter(|(_, e)| pred(e)).map(|(i, _)| i).collect()
    }

    fn c(&self, a: &str, b: &str, i: u8, j: u8) -> Rational {
        self.t.c.get(&(a.to_string(), b.to_string(), i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    fn d(&self, a: &str, b: &str, i: u8) -> Rational {
        self.t.d.get(&(a.to_string(), b.to_string(), i)).cloned().unwrap_or_else(Rational::zero)
    }

    fn gamma(&self, a: &str, b: &str) -> Rational {
        self.t.gamma.get(&(a.to_string(), b.to_string())).cloned().unwrap_or_else(Rational::zero)
    }
}

fn check_basis(ctx: &Ctx<'_>) -> Check {
    let t = ctx.t;
    let mut ch = Check::new("basis", "role elements form a basis with consistent root labels");
    let vecs: Vec<QVector> = t.elements.iter().map(|e| e.vector.clone()).collect();
    ch.record(vecs.len() == ctx.dim && vecs.iter().all(|v| v.len() == ctx.dim), || {
        format!("{} elements for dimension {}", vecs.len(), ctx.dim)
    });
    ch.record(rank_of(&vecs, ctx.dim) == ctx.dim, || "role elements are linearly dependent".into());
    for e in &t.elements {
        let ok = match (e.role, ctx.root(&e.root)) {
            (_, None) => false,
            (Role::H1, Some(_)) => t.delta1.contains(&e.root),
            (Role::H0, Some(_)) => t.delta0.contains(&e.root),
            (Role::Z, Some(r)) => r.kind == RootKind::Real,
            (Role::X0 | Role::X1, Some(r)) => match r.kind {
                RootKind::Imaginary => r.positive(),
                RootKind::Complex => r.starred,
                RootKind::Real => false,
            },
        };
        ch.record(ok, || format!("{} element for root {} does not fit its role", e.role.name(), e.root));
    }
    for r in &t.roots {
        ch.record(ctx.root(&r.sigma).is_some(), || format!("sigma of {} is not a root", r.label));
    }
    ch
}

fn relation_1(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("R1", "[H^i_a, H^j_b] = 0");
    let hs: Vec<&TableElement> = ctx.of_role(|r| matches!(r, Role::H0 | Role::H1)).collect();
    for (p, a) in hs.iter().enumerate() {
        for b in &hs[p + 1..] {
            let w = ctx.bracket(&a.vector, &b.vector);
            ch.record(w.iter().all(Zero::is_zero), || {
                format!("[{}_{}, {}_{}] = {}", a.role.name(), a.root, b.role.name(), b.root, fmt_vec(&w))
            });
        }
    }
    ch
}

fn relation_2(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("R2", "[H^i_a, X^j_b] = c^{ij}_{a,b} X^{i+j+1}_b");
    for h in ctx.of_role(|r| matches!(r, Role::H0 | Role::H1)) {
        for x in ctx.of_role(|r| matches!(r, Role::X0 | Role::X1)) {
            let (i, j) = (h.role.index(), x.role.index());
            let target = ctx.element(Role::x(i + j + 1), &x.root);
            let c = ctx.c(&h.root, &x.root, i, j);
            let expect = match target {
                Some(v) => scaled(v, &c),
                None if c.is_zero() => ctx.zero(),
                None => {
                    ch.record(false, || format!("X{}_{} missing", (i + j + 1) % 2, x.root));
                    continue;
                }
            };
            let w = ctx.bracket(&h.vector, &x.vector);
            ch.record(w == expect, || {
                format!(
                    "[{}_{}, {}_{}] = {} but c = {}",
                    h.role.name(),
                    h.root,
                    x.role.name(),
                    x.root,
                    fmt_vec(&w),
                    format_rational(&c)
                )
            });
        }
    }
    ch
}

fn relation_3(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("R3", "[H^i_a, Z_b] = d^i_{a,b} Z_b");
    for h in ctx.of_role(|r| matches!(r, Role::H0 | Role::H1)) {
        for z in ctx.of_role(|r| r == Role::Z) {
            let d = ctx.d(&h.root, &z.root, h.role.index());
            let w = ctx.bracket(&h.vector, &z.vector);
            ch.record(w == scaled(&z.vector, &d), || {
                format!("[{}_{}, Z_{}] = {} but d = {}", h.role.name(), h.root, z.root, fmt_vec(&w), format_rational(&d))
            });
        }
    }
    ch
}

fn relation_4(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("R4", "[Z_a, Z_-a] = -sgn(a) Ĥ¹_a, 2Ĥ¹_a a nonzero integer combination of H¹");
    let h1_idx = ctx.indices(|e| e.role == Role::H1);
    for z in ctx.of_role(|r| r == Role::Z) {
        let Some(neg) = ctx.negative(&z.root) else { continue };
        let Some(zn) = ctx.element(Role::Z, &neg.label) else { continue };
        let root = ctx.root(&z.root).expect("checked in basis");
        let Some(hat) = ctx.t.hat_h1.get(&z.root) else {
            ch.record(false, || format!("Ĥ¹ missing for {}", z.root));
            continue;
        };
        let w = ctx.bracket(&z.vector, zn);
        ch.record(w == scaled(hat, &-root.sign()), || format!("[Z_{}, Z_{}] = {}", z.root, neg.label, fmt_vec(&w)));
        ch.record(ctx.integer_combination(hat, &h1_idx, 2), || format!("2Ĥ¹_{} is not a nonzero integer combination of H¹", z.root));
    }
    ch
}

fn relation_5(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("R5", "[X^i_a, X^j_-a] = (-1)^{ij} H^{1+i+j}_a for complex a");
    let h1_idx = ctx.indices(|e| e.role == Role::H1);
    let h0_idx = ctx.indices(|e| e.role == Role::H0);
    for x in ctx.of_role(|r| matches!(r, Role::X0 | Role::X1)) {
        let root = ctx.root(&x.root).expect("checked in basis");
        if root.kind != RootKind::Complex {
            continue;
        }
        let Some(neg) = ctx.negative(&x.root) else { continue };
        for j in 0..2u8 {
            let Some(y) = ctx.element(Role::x(j), &neg.label) else { continue };
            let i = x.role.index();
            let (map, idx, scale) =
                if (1 + i + j) % 2 == 1 { (&ctx.t.h1, &h1_idx, 1) } else { (&ctx.t.h0, &h0_idx, 2) };
            let Some(h) = map.get(&x.root) else {
                ch.record(false, || format!("H{}_{} missing", (1 + i + j) % 2, x.root));
                continue;
            };
            let sign = if i * j == 1 { -Rational::one() } else { Rational::one() };
            let w = ctx.bracket(&x.vector, y);
            ch.record(w == scaled(h, &sign), || format!("[X{i}_{}, X{j}_{}] = {}", x.root, neg.label, fmt_vec(&w)));
            ch.record(ctx.integer_combination(h, idx, scale), || {
                format!("H{}_{} is not a nonzero integer combination", (1 + i + j) % 2, x.root)
            });
        }
    }
    ch
}

fn relation_6(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("R6", "[X⁰_a, X¹_a] = H̃⁰_a for positive imaginary a");
    let allowed = ctx.indices(|e| {
        e.role == Role::H0 && ctx.root(&e.root).is_some_and(|r| r.kind == RootKind::Imaginary)
    });
    for x in ctx.of_role(|r| r == Role::X0) {
        let root = ctx.root(&x.root).expect("checked in basis");
        if root.kind != RootKind::Imaginary {
            continue;
        }
        let Some(y) = ctx.element(Role::X1, &x.root) else { continue };
        let Some(h) = ctx.t.tilde_h0.get(&x.root) else {
            ch.record(false, || format!("H̃⁰ missing for {}", x.root));
            continue;
        };
        let w = ctx.bracket(&x.vector, y);
        ch.record(w == *h, || format!("[X0_{r}, X1_{r}] = {}", fmt_vec(&w), r = x.root));
        ch.record(ctx.integer_combination(h, &allowed, 1), || format!("H̃⁰_{} is not a nonzero integer combination", x.root));
    }
    ch
}

fn relation_7(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new(
        "R7",
        "[X^i_a, X^j_b] = (-1)^{ij} γ_{a,b} X^{i+j}_{a+b} + sgn(a) γ_{a^σ,b} X^{i+j}_{a^σ+b}",
    );
    let xs: Vec<&TableElement> = ctx.of_role(|r| matches!(r, Role::X0 | Role::X1)).collect();
    for x in &xs {
        let a = ctx.root(&x.root).expect("checked in basis");
        let neg_a = ctx.negative(&a.label).map(|r| r.label.clone());
        let neg_as = ctx.negative(&a.sigma).map(|r| r.label.clone());
        for y in &xs {
            if Some(&y.root) == neg_a.as_ref() || Some(&y.root) == neg_as.as_ref() {
                continue;
            }
            let (i, j) = (x.role.index(), y.role.index());
            let mut expect = ctx.zero();
            let mut missing = None;
            let terms = [(a.label.as_str(), if i * j == 1 { -Rational::one() } else { Rational::one() }), (a.sigma.as_str(), a.sign())];
            for (src, sign) in terms {
                let g = ctx.gamma(src, &y.root);
                if g.is_zero() {
                    continue;
                }
                match ctx.sum(src, &y.root).and_then(|s| ctx.element(Role::x(i + j), &s.label)) {
                    Some(v) => expect = add(&expect, &scaled(v, &(sign * g))),
                    None => missing = Some(format!("γ_{{{src},{}}} ≠ 0 but X{}_{{{src}+{}}} is absent", y.root, (i + j) % 2, y.root)),
                }
            }
            if let Some(m) = missing {
                ch.record(false, || m);
                continue;
            }
            let w = ctx.bracket(&x.vector, &y.vector);
            ch.record(w == expect, || format!("[X{i}_{}, X{j}_{}] = {}", x.root, y.root, fmt_vec(&w)));
        }
    }
    ch
}

fn relation_8(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("R8", "[Z_a, X^i_b] = [X^{(sgn(a)-1)/2}_a, X^i_b]");
    for z in ctx.of_role(|r| r == Role::Z) {
        let a = ctx.root(&z.root).expect("checked in basis");
        let idx = if a.positive() { 0 } else { 1 };
        let Some(aux) = ctx.t.aux_x.get(&(z.root.clone(), idx)) else { continue };
        for x in ctx.of_role(|r| matches!(r, Role::X0 | Role::X1)) {
            let lhs = ctx.bracket(&z.vector, &x.vector);
            let rhs = ctx.bracket(aux, &x.vector);
            ch.record(lhs == rhs, || format!("[Z_{}, {}_{}] differs from the X-form bracket", z.root, x.role.name(), x.root));
        }
    }
    ch
}

fn relation_9(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("R9", "[Z_a, Z_b] is a half-integer combination of Z_{a+b}, Z_{a^σ+b}, Z_{a+b^σ}");
    let zs: Vec<&TableElement> = ctx.of_role(|r| r == Role::Z).collect();
    for (p, z) in zs.iter().enumerate() {
        let a = ctx.root(&z.root).expect("checked in basis");
        for y in &zs[p + 1..] {
            let b = ctx.root(&y.root).expect("checked in basis");
            if ctx.negative(&a.label).is_some_and(|n| n.label == b.label) {
                continue;
            }
            let targets: Vec<usize> = [ctx.sum(&a.label, &b.label), ctx.sum(&a.sigma, &b.label), ctx.sum(&a.label, &b.sigma)]
                .into_iter()
                .flatten()
                .filter_map(|r| ctx.t.elements.iter().position(|e| e.role == Role::Z && e.root == r.label))
                .collect();
            let w = ctx.bracket(&z.vector, &y.vector);
            let ok = match ctx.coords(&w) {
                Some(c) => c.iter().enumerate().all(|(i, x)| {
                    if targets.contains(&i) {
                        is_half_integer(x)
                    } else {
                        x.is_zero()
                    }
                }),
                None => false,
            };
            ch.record(ok, || format!("[Z_{}, Z_{}] = {}", z.root, y.root, fmt_vec(&w)));
        }
    }
    ch
}

fn constraint_i(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("C-i", "d⁰_{a,b} = 0 and d¹_{a,b} = -d¹_{a,-b} ≠ 0");
    for ((a, b, i), v) in &ctx.t.d {
        if *i == 0 {
            ch.record(v.is_zero(), || format!("d⁰_{{{a},{b}}} = {}", format_rational(v)));
        }
    }
    for a in &ctx.t.delta1 {
        for z in ctx.of_role(|r| r == Role::Z) {
            let b = &z.root;
            let v = ctx.d(a, b, 1);
            let Some(nb) = ctx.negative(b) else {
                ch.record(false, || format!("-{b} is not a root"));
                continue;
            };
            let w = ctx.d(a, &nb.label, 1);
            ch.record(v == -w.clone(), || {
                format!("d¹_{{{a},{b}}} = {} but d¹_{{{a},{}}} = {}", format_rational(&v), nb.label, format_rational(&w))
            });
        }
        // nonvanishing across the simple roots: the restricted root of Z_b is nonzero
    }
    for z in ctx.of_role(|r| r == Role::Z) {
        let any = ctx.t.delta1.iter().any(|a| !ctx.d(a, &z.root, 1).is_zero());
        ch.record(any, || format!("d¹_{{·,{}}} vanishes on every H¹", z.root));
    }
    ch
}

fn constraint_ii_iii(ctx: &Ctx<'_>) -> (Check, Check) {
    let mut ii = Check::new("C-ii", "c¹ʲ_{·,b} not identically zero for non-imaginary b");
    let mut iii = Check::new("C-iii", "c¹ʲ_{a,b} = 0 for imaginary b");
    for x in ctx.of_role(|r| matches!(r, Role::X0 | Role::X1)) {
        let b = ctx.root(&x.root).expect("checked in basis");
        let j = x.role.index();
        if b.kind == RootKind::Imaginary {
            for a in &ctx.t.delta1 {
                let c = ctx.c(a, &b.label, 1, j);
                iii.record(c.is_zero(), || format!("c¹{j}_{{{a},{}}} = {}", b.label, format_rational(&c)));
            }
        } else {
            let any = ctx.t.delta1.iter().any(|a| !ctx.c(a, &b.label, 1, j).is_zero());
            ii.record(any, || format!("c¹{j}_{{·,{}}} vanishes on every H¹", b.label));
        }
    }
    (ii, iii)
}

fn constraint_iv(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("C-iv", "c⁰ʲ_{a,b} = -c^{0,j+1}_{a,b}, not identically zero for imaginary b");
    for a in &ctx.t.delta0 {
        for x in ctx.of_role(|r| r == Role::X0) {
            let (c0, c1) = (ctx.c(a, &x.root, 0, 0), ctx.c(a, &x.root, 0, 1));
            ch.record(c0 == -c1.clone(), || {
                format!("c⁰⁰_{{{a},{b}}} = {} but c⁰¹_{{{a},{b}}} = {}", format_rational(&c0), format_rational(&c1), b = x.root)
            });
        }
    }
    for x in ctx.of_role(|r| r == Role::X0) {
        let b = ctx.root(&x.root).expect("checked in basis");
        if b.kind == RootKind::Imaginary {
            let any = ctx.t.delta0.iter().any(|a| !ctx.c(a, &b.label, 0, 0).is_zero());
            ch.record(any, || format!("c⁰⁰_{{·,{}}} vanishes on every H⁰", b.label));
        }
    }
    ch
}

fn constraint_v_vi(ctx: &Ctx<'_>) -> (Check, Check) {
    let mut v = Check::new("C-v", "γ_{a,b} = γ_{-a,-b}");
    let mut vi = Check::new("C-vi", "γ_{a,b} = ±(r+1), r maximal with b - r a a root");
    for ((a, b), g) in &ctx.t.gamma {
        let (Some(na), Some(nb)) = (ctx.negative(a), ctx.negative(b)) else {
            v.record(false, || format!("γ_{{{a},{b}}} refers to a root without negative"));
            continue;
        };
        let other = ctx.gamma(&na.label, &nb.label);
        v.record(*g == other, || {
            format!("γ_{{{a},{b}}} = {} but γ_{{{},{}}} = {}", format_rational(g), na.label, nb.label, format_rational(&other))
        });
        let (ra, rb) = (ctx.root(a).expect("negative found"), ctx.root(b).expect("negative found"));
        let mut r = 0i64;
        loop {
            let next: Vec<i64> = rb.vector.iter().zip(&ra.vector).map(|(y, x)| y - (r + 1) * x).collect();
            if ctx.root_by_vector(&next).is_none() {
                break;
            }
            r += 1;
        }
        vi.record(g.abs() == qi(r + 1), || format!("γ_{{{a},{b}}} = {} but r + 1 = {}", format_rational(g), r + 1));
    }
    (v, vi)
}

fn half_integers(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("half-integers", "c, d, γ are half integers");
    let all = ctx
        .t
        .c
        .iter()
        .map(|((a, b, i, j), v)| (format!("c{i}{j}_{{{a},{b}}}"), v))
        .chain(ctx.t.d.iter().map(|((a, b, i), v)| (format!("d{i}_{{{a},{b}}}"), v)))
        .chain(ctx.t.gamma.iter().map(|((a, b), v)| (format!("γ_{{{a},{b}}}"), v)));
    for (name, v) in all {
        ch.record(is_half_integer(v), || format!("{name} = {}", format_rational(v)));
    }
    ch
}

fn iwasawa(ctx: &Ctx<'_>) -> Check {
    let mut ch = Check::new("iwasawa", "g = K̃ ⊕ 𝔞 ⊕ N⁺ as a direct sum");
    let mut vecs: Vec<QVector> = Vec::new();
    for e in &ctx.t.elements {
        let r = ctx.root(&e.root);
        let pos = r.is_some_and(TableRoot::positive);
        match e.role {
            Role::H0 | Role::H1 => vecs.push(e.vector.clone()),
            Role::X0 | Role::X1 => {
                let kind = r.map(|r| r.kind);
                if kind == Some(RootKind::Imaginary) {
                    vecs.push(e.vector.clone());
                } else if pos {
                    vecs.push(e.vector.clone());
                    let i = e.role.index();
                    if let Some(n) = ctx.negative(&e.root).and_then(|n| ctx.element(e.role, &n.label)) {
                        let sign = if i == 1 { -Rational::one() } else { Rational::one() };
                        vecs.push(add(&e.vector, &scaled(n, &sign)));
                    }
                }
            }
            Role::Z => {
                if pos {
                    vecs.push(e.vector.clone());
                    if let Some(n) = ctx.negative(&e.root).and_then(|n| ctx.element(Role::Z, &n.label)) {
                        vecs.push(add(&e.vector, n));
                    }
                }
            }
        }
    }
    let rank = rank_of(&vecs, ctx.dim);
    ch.record(vecs.len() == ctx.dim && rank == ctx.dim, || {
        format!("{} spanning vectors of rank {rank} in dimension {}", vecs.len(), ctx.dim)
    });
    ch
}

/// Check every relation and constraint; failures carry a witness.
pub fn verify_kammeyer_relations(table: &KammeyerTable) -> KammeyerReport {
    let dim = table.algebra.dim();
    let inv = if table.elements.len() == dim && table.elements.iter().all(|e| e.vector.len() == dim) {
        let cols: Vec<QVector> = table.elements.iter().map(|e| e.vector.clone()).collect();
        Matrix::from_columns(&cols, dim).ok().and_then(|m| m.inverse())
    } else {
        None
    };
    let ctx = Ctx { t: table, dim, inv };
    let basis = check_basis(&ctx);
    if basis.witness.is_some() {
        return KammeyerReport { results: vec![basis.done()] };
    }
    let (ii, iii) = constraint_ii_iii(&ctx);
    let (v, vi) = constraint_v_vi(&ctx);
    let checks = vec![
        basis,
        relation_1(&ctx),
        relation_2(&ctx),
        relation_3(&ctx),
        relation_4(&ctx),
        relation_5(&ctx),
        relation_6(&ctx),
        relation_7(&ctx),
        relation_8(&ctx),
        relation_9(&ctx),
        constraint_i(&ctx),
        ii,
        iii,
        constraint_iv(&ctx),
        v,
        vi,
        half_integers(&ctx),
        iwasawa(&ctx),
    ];
    KammeyerReport { results: checks.into_iter().map(Check::done).collect() }
}

/// Split table for `sl(n, ℝ)`: every root is real, `H¹` are the simple
/// coroots `H_i`, `Z_{e_i-e_j} = E_ij` and `Z_{e_j-e_i} = -E_ji` for `i < j`.
pub fn sl_table(n: usize) -> Result<KammeyerTable> {
    if n < 2 {
        return Err(Error::InvalidInput("sl(n) table needs n >= 2".into()));
    }
    let alg = Arc::new(build_sl_n(n)?);
    let dim = alg.dim();
    let unit = |name: &str, sign: i64| -> Result<QVector> {
        let idx = alg.index_of(name).ok_or_else(|| Error::InvalidInput(format!("missing basis element {name}")))?;
        let mut v = vec![Rational::zero(); dim];
        v[idx] = qi(sign);
        Ok(v)
    };
    let e_name = |i: usize, j: usize| if n >= 10 { format!("E_{i},{j}") } else { format!("E_{i}{j}") };
    let label = |i: usize, j: usize| format!("e{i}-e{j}");
    let mut roots = Vec::new();
    let mut elements = Vec::new();
    let mut hat_h1 = BTreeMap::new();
    let mut d = BTreeMap::new();
    let simple: Vec<String> = (1..n).map(|i| label(i, i + 1)).collect();
    for i in 1..n {
        elements.push(TableElement { role: Role::H1, root: label(i, i + 1), vector: unit(&format!("H_{i}"), 1)? });
    }
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let (lo, hi) = (i.min(j), i.max(j));
            let sign = if i < j { 1 } else { -1 };
            let mut vector = vec![0i64; n - 1];
            for c in vector.iter_mut().take(hi - 1).skip(lo - 1) {
                *c = sign;
            }
            let l = label(i, j);
            roots.push(TableRoot { label: l.clone(), vector, kind: RootKind::Real, sigma: l.clone(), starred: true });
            elements.push(TableElement { role: Role::Z, root: l.clone(), vector: unit(&e_name(i, j), sign)? });
            // E_lo,lo - E_hi,hi = H_lo + ... + H_{hi-1}
            let mut hat = vec![Rational::zero(); dim];
            for m in lo..hi {
                hat[m - 1] = qi(1);
            }
            hat_h1.insert(l.clone(), hat);
            for m in 1..n {
                // (e_i - e_j)(H_m) = δ_im - δ_{i,m+1} - δ_jm + δ_{j,m+1}
                let val = (i == m) as i64 - (i == m + 1) as i64 - (j == m) as i64 + (j == m + 1) as i64;
                if val != 0 {
                    d.insert((label(m, m + 1), l.clone(), 1u8), qi(val));
                }
            }
        }
    }
    Ok(KammeyerTable {
        algebra: alg,
        roots,
        delta1: simple,
        delta0: Vec::new(),
        elements,
        hat_h1,
        h1: BTreeMap::new(),
        h0: BTreeMap::new(),
        tilde_h0: BTreeMap::new(),
        aux_x: BTreeMap::new(),
        c: BTreeMap::new(),
        d,
        gamma: BTreeMap::new(),
    })
}
