//! The witness catalog: concrete monomial instantiations of every shipped
//! rule, replayed through the inference engine and the operator model, with
//! a deterministic machine-readable report.
//!
//! Verdict semantics: an entry whose hypotheses fail in-model is VACUOUS and
//! must name the failing hypothesis; otherwise every check (model facts,
//! expected derivations, comparison verdicts, state classifications) must
//! hold for PASS.  A FAIL on an entry exercising only sound/axiom rules is a
//! hard failure of the whole run.  Entries exercising conjectural rules are
//! reported in their own section and never gate the exit code.

use crate::engine::{
    eval_fact, saturate, Fact, GroundFact, Instantiation, Property, Relation, Rule, DEFAULT_DEPTH,
};
use crate::operator::MonomialOperator;
use crate::rulebook::rulebook;
use crate::sample::Sampler;
use crate::scalar::{rat_int, RadicalComplex};
use crate::state::{state_classify, StateClass};
use crate::symbol::{GrowthSymbol, Space};
use crate::term::Term;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone)]
pub enum CheckKind {
    /// Evaluate the fact in-model and compare with the expectation.
    ModelFact { fact: GroundFact, expect: bool },
    /// The fact must be derivable from the entry's hypotheses, and must also
    /// hold in-model when it is evaluable.
    Derives { fact: GroundFact },
    /// Extension comparison with an expected verdict.
    CompareIs {
        left: Term,
        right: Term,
        expect: &'static str,
    },
    /// State classification with an expected state.
    StateIs { term: Term, expect: StateClass },
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub kind: CheckKind,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    /// Rule ids this entry exercises.
    pub rules: Vec<&'static str>,
    pub note: &'static str,
    pub witnesses: Instantiation,
    /// In-model hypotheses; all must hold, else the entry is VACUOUS.
    pub hypotheses: Vec<GroundFact>,
    pub checks: Vec<Check>,
    /// True when the entry exercises a conjectural rule.
    pub conjectural: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "VACUOUS")]
    Vacuous,
    #[serde(rename = "CONJECTURAL-PASS")]
    ConjecturalPass,
    #[serde(rename = "CONJECTURAL-FAIL")]
    ConjecturalFail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::Vacuous => write!(f, "VACUOUS"),
            Verdict::ConjecturalPass => write!(f, "CONJECTURAL-PASS"),
            Verdict::ConjecturalFail => write!(f, "CONJECTURAL-FAIL"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub rules: Vec<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_hypothesis: Option<String>,
    pub checks: Vec<CheckReport>,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub conjectural_pass: usize,
    pub conjectural_fail: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
}

impl Report {
    /// Hard failures: FAIL verdicts on non-conjectural entries.
    pub fn sound_failures(&self) -> usize {
        self.summary.fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("{:<22} {}", e.id, e.verdict));
            if let Some(h) = &e.failing_hypothesis {
                out.push_str(&format!("  (failing hypothesis: {h})"));
            }
            out.push('\n');
            for c in &e.checks {
                if !c.pass {
                    out.push_str(&format!(
                        "    check {}: expected {}, got {}\n",
                        c.name, c.expected, c.got
                    ));
                }
            }
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} vacuous, {} conjectural-pass, {} conjectural-fail\n",
            self.summary.pass,
            self.summary.fail,
            self.summary.vacuous,
            self.summary.conjectural_pass,
            self.summary.conjectural_fail
        ));
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    /// Also enable conjectural rules inside entry saturations.
    pub include_conjectural: bool,
    pub depth: usize,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            include_conjectural: false,
            depth: DEFAULT_DEPTH,
            seed: 0xC0FFEE,
        }
    }
}

/// Runs the catalog: hypotheses in-model, then saturation-backed and direct
/// checks, deterministically ordered by entry id.
pub fn run_catalog(entries: &[CatalogEntry], options: RunOptions) -> Report {
    let rules = rulebook();
    let mut sorted: Vec<&CatalogEntry> = entries.iter().collect();
    sorted.sort_by_key(|e| e.id);
    let mut reports = Vec::new();
    let mut summary = Summary {
        pass: 0,
        fail: 0,
        vacuous: 0,
        conjectural_pass: 0,
        conjectural_fail: 0,
    };
    for entry in sorted {
        let report = run_entry(entry, &rules, options);
        match report.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::Vacuous => summary.vacuous += 1,
            Verdict::ConjecturalPass => summary.conjectural_pass += 1,
            Verdict::ConjecturalFail => summary.conjectural_fail += 1,
        }
        reports.push(report);
    }
    Report {
        entries: reports,
        summary,
    }
}

fn run_entry(entry: &CatalogEntry, rules: &[Rule], options: RunOptions) -> EntryReport {
    let mut checks = Vec::new();
    // Hypotheses first; any failure makes the entry vacuous, naming it.
    for h in &entry.hypotheses {
        match eval_fact(h, &entry.witnesses) {
            Ok(Some(true)) | Ok(None) => {}
            Ok(Some(false)) => {
                return EntryReport {
                    id: entry.id.into(),
                    rules: entry.rules.iter().map(|s| s.to_string()).collect(),
                    verdict: Verdict::Vacuous,
                    failing_hypothesis: Some(h.to_string()),
                    checks,
                    note: entry.note.into(),
                };
            }
            Err(e) => {
                return EntryReport {
                    id: entry.id.into(),
                    rules: entry.rules.iter().map(|s| s.to_string()).collect(),
                    verdict: Verdict::Vacuous,
                    failing_hypothesis: Some(format!("{h} ({e})")),
                    checks,
                    note: entry.note.into(),
                };
            }
        }
    }
    let assumptions: BTreeSet<GroundFact> = entry.hypotheses.iter().map(|f| f.normalized()).collect();
    let needs_conjectural = entry.conjectural || options.include_conjectural;
    let sat = saturate(&assumptions, rules, options.depth, needs_conjectural);
    let mut all_pass = true;
    for check in &entry.checks {
        let (expected, got, pass) = match &check.kind {
            CheckKind::ModelFact { fact, expect } => {
                let got = eval_fact(fact, &entry.witnesses);
                let gs = match &got {
                    Ok(Some(b)) => b.to_string(),
                    Ok(None) => "opaque".into(),
                    Err(e) => format!("error: {e}"),
                };
                let pass = matches!(got, Ok(Some(b)) if b == *expect);
                (format!("{fact} = {expect}"), gs, pass)
            }
            CheckKind::Derives { fact } => {
                let derived = sat.contains(fact);
                let model_ok = if derived {
                    match eval_fact(fact, &entry.witnesses) {
                        Ok(Some(b)) => b,
                        Ok(None) => true, // opaque: derivability is the check
                        Err(_) => false,
                    }
                } else {
                    false
                };
                (
                    format!("derives {fact}"),
                    if derived {
                        if model_ok {
                            "derived, holds in-model".into()
                        } else {
                            "derived, fails in-model".into()
                        }
                    } else {
                        "not derived".into()
                    },
                    derived && model_ok,
                )
            }
            CheckKind::CompareIs {
                left,
                right,
                expect,
            } => {
                let lo = crate::engine::eval_term(left, &entry.witnesses);
                let ro = crate::engine::eval_term(right, &entry.witnesses);
                match (lo, ro) {
                    (Ok(l), Ok(r)) => match l.compare(&r) {
                        Ok(v) => {
                            let gs = v.to_string();
                            let pass = gs == *expect;
                            (format!("cmp {left} {right} = {expect}"), gs, pass)
                        }
                        Err(e) => (
                            format!("cmp {left} {right} = {expect}"),
                            format!("error: {e}"),
                            false,
                        ),
                    },
                    _ => (
                        format!("cmp {left} {right} = {expect}"),
                        "evaluation error".into(),
                        false,
                    ),
                }
            }
            CheckKind::StateIs { term, expect } => {
                match crate::engine::eval_term(term, &entry.witnesses) {
                    Ok(op) => {
                        let c = state_classify(&op);
                        let gs = c.state.to_string();
                        let pass = c.state == *expect;
                        (format!("state {term} = {expect}"), gs, pass)
                    }
                    Err(e) => (
                        format!("state {term} = {expect}"),
                        format!("error: {e}"),
                        false,
                    ),
                }
            }
        };
        all_pass &= pass;
        checks.push(CheckReport {
            name: check.name.into(),
            expected,
            got,
            pass,
        });
    }
    let verdict = match (entry.conjectural, all_pass) {
        (false, true) => Verdict::Pass,
        (false, false) => Verdict::Fail,
        (true, true) => Verdict::ConjecturalPass,
        (true, false) => Verdict::ConjecturalFail,
    };
    EntryReport {
        id: entry.id.into(),
        rules: entry.rules.iter().map(|s| s.to_string()).collect(),
        verdict,
        failing_hypothesis: None,
        checks,
        note: entry.note.into(),
    }
}

// ---------------------------------------------------------------------------
// Witness constructions.
// ---------------------------------------------------------------------------

fn atom(s: &str) -> Term {
    Term::atom(s)
}

fn comp(a: Term, b: Term) -> Term {
    Term::compose(a, b)
}

fn adj(t: Term) -> Term {
    Term::adjoint(t)
}

fn cl(t: Term) -> Term {
    Term::closure(t)
}

fn unary(p: Property<Term>, t: Term) -> GroundFact {
    Fact::Unary(p, t)
}

fn binary(r: Relation<Term>, a: Term, b: Term) -> GroundFact {
    Fact::Binary(r, a, b)
}

fn dd(t: Term) -> GroundFact {
    unary(Property::DenselyDefined, t)
}

fn closeable(t: Term) -> GroundFact {
    unary(Property::Closeable, t)
}

fn closed(t: Term) -> GroundFact {
    unary(Property::Closed, t)
}

fn sa(t: Term) -> GroundFact {
    unary(Property::Selfadjoint, t)
}

fn normal(t: Term) -> GroundFact {
    unary(Property::Normal, t)
}

fn bounded(t: Term) -> GroundFact {
    unary(Property::Bounded, t)
}

fn unitary(t: Term) -> GroundFact {
    unary(Property::Unitary, t)
}

fn invb(t: Term) -> GroundFact {
    unary(Property::InvertibleBounded, t)
}

fn drange(t: Term) -> GroundFact {
    unary(Property::DenseRange, t)
}

fn injective(t: Term) -> GroundFact {
    unary(Property::Injective, t)
}

fn fkern(t: Term) -> GroundFact {
    unary(Property::FiniteKernel, t)
}

fn quasinormal(t: Term) -> GroundFact {
    unary(Property::Quasinormal, t)
}

fn subset(a: Term, b: Term) -> GroundFact {
    binary(Relation::Subset, a, b)
}

fn equal(a: Term, b: Term) -> GroundFact {
    binary(Relation::Equal, a, b)
}

fn commutes(a: Term, b: Term) -> GroundFact {
    binary(Relation::CommutesExt, a, b)
}

fn relb(a: Term, b: Term) -> GroundFact {
    binary(Relation::RelBounded, a, b)
}

fn permutes(a: Term, b: Term) -> GroundFact {
    unary(Property::PermutesWith(b), a)
}

fn intertwines(k: Term, a: Term, b: Term) -> GroundFact {
    binary(Relation::Intertwines(k), a, b)
}

/// The canonical strictly-positive unbounded diagonal with bounded inverse.
pub fn ex1_a() -> MonomialOperator {
    MonomialOperator::diag(GrowthSymbol::poly1(1, 2)).expect("valid")
}

pub fn ex1_b() -> MonomialOperator {
    MonomialOperator::diag(GrowthSymbol::poly1(1, -2)).expect("valid")
}

fn diag_lin() -> MonomialOperator {
    MonomialOperator::diag(GrowthSymbol::poly1(1, 1)).expect("valid")
}

fn diag_cube() -> MonomialOperator {
    MonomialOperator::diag(GrowthSymbol::poly1(1, 3)).expect("valid")
}

/// Bounded invertible self-adjoint diagonal per(2; 1, 2).
fn per12() -> MonomialOperator {
    MonomialOperator::diag(GrowthSymbol::periodic(Space::Unilateral, &[1, 2])).expect("valid")
}

/// Unbounded complex normal diagonal i·(n+1)².
fn diag_i_sq() -> MonomialOperator {
    let sym = GrowthSymbol::poly1(1, 2)
        .mul(&GrowthSymbol::constant(Space::Unilateral, RadicalComplex::i()))
        .expect("same space");
    MonomialOperator::diag(sym).expect("valid")
}

fn bishift() -> MonomialOperator {
    MonomialOperator::shift_op(Space::Bilateral, 1)
}

fn inst(pairs: &[(&str, MonomialOperator)]) -> Instantiation {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// The shipped catalog.  The seed feeds the randomized witnesses (the
/// von-Neumann entry), keeping reruns byte-identical for equal seeds.
pub fn catalog(seed: u64) -> Vec<CatalogEntry> {
    let a = || atom("A");
    let b = || atom("B");
    let ab = || comp(atom("A"), atom("B"));
    let ba = || comp(atom("B"), atom("A"));
    let mut entries = Vec::new();

    // EX1: A unbounded positive diagonal, B its bounded inverse.
    entries.push(CatalogEntry {
        id: "EX1",
        rules: vec!["R-ADJ-PROD", "R-LEM1"],
        note: "product of an unbounded positive diagonal with its bounded inverse: AB = I on all of l2 while BA is its proper restriction, so (AB)* differs from BA and the fundamental adjoint relation needs the closedness side condition",
        witnesses: inst(&[("A", ex1_a()), ("B", ex1_b()), ("I", MonomialOperator::identity(Space::Unilateral))]),
        hypotheses: vec![
            dd(a()), dd(b()), closed(a()), closed(b()), sa(a()), sa(b()),
            dd(ab()), dd(ba()), dd(comp(adj(b()), adj(a()))),
            closeable(a()), closeable(b()),
        ],
        checks: vec![
            Check { name: "ab-equals-identity", kind: CheckKind::CompareIs { left: ab(), right: atom("I"), expect: "equal" } },
            Check { name: "ba-proper-restriction", kind: CheckKind::CompareIs { left: ba(), right: ab(), expect: "proper-subset" } },
            Check { name: "closure-of-ba-is-identity", kind: CheckKind::CompareIs { left: cl(ba()), right: atom("I"), expect: "equal" } },
            Check { name: "closure-of-ba-normal", kind: CheckKind::ModelFact { fact: normal(cl(ba())), expect: true } },
            Check { name: "adjoint-of-ab-is-not-ba", kind: CheckKind::CompareIs { left: adj(ab()), right: ba(), expect: "proper-superset" } },
            Check { name: "adj-prod-inclusion", kind: CheckKind::Derives { fact: subset(comp(adj(b()), adj(a())), adj(ab())) } },
            Check { name: "lem1-sandwich-low", kind: CheckKind::Derives { fact: subset(ab(), cl(ab())) } },
            Check { name: "lem1-sandwich-high", kind: CheckKind::Derives { fact: subset(cl(ab()), adj(comp(adj(b()), adj(a())))) } },
            Check { name: "lem1-product-of-closures", kind: CheckKind::Derives { fact: subset(comp(cl(a()), cl(b())), adj(comp(adj(b()), adj(a())))) } },
        ],
        conjectural: false,
    });

    // CHAIN-W: the invert-adjoint-close chain on the EX1 pair, in the order
    // that makes the closable-inverse hypotheses hold (product BA).
    entries.push(CatalogEntry {
        id: "CHAIN-W",
        rules: vec!["R-LEM1", "R-LEM3-1"],
        note: "inversion-adjunction-closure chain: cl(B)cl(A) through its closure into cl(BA) into (A*B*)*, on the restriction side of EX1",
        witnesses: inst(&[("A", ex1_a()), ("B", ex1_b())]),
        hypotheses: vec![
            dd(a()), dd(b()), closeable(a()), closeable(b()),
            dd(ba()), dd(comp(adj(a()), adj(b()))),
        ],
        checks: vec![
            Check { name: "closure-chain-1", kind: CheckKind::ModelFact { fact: subset(comp(cl(b()), cl(a())), cl(comp(cl(b()), cl(a())))), expect: true } },
            Check { name: "closure-chain-2", kind: CheckKind::ModelFact { fact: subset(cl(comp(cl(b()), cl(a()))), cl(ba())), expect: true } },
            Check { name: "closure-chain-3", kind: CheckKind::ModelFact { fact: subset(cl(ba()), adj(comp(adj(a()), adj(b())))), expect: true } },
            Check { name: "derived-chain", kind: CheckKind::Derives { fact: subset(cl(ba()), cl(comp(cl(b()), cl(a())))) } },
        ],
        conjectural: false,
    });

    // THM1-W: the equality (B*A*)* = cl(A)cl(B) on maximal diagonals.
    entries.push(CatalogEntry {
        id: "THM1-W",
        rules: vec!["R-THM1"],
        note: "for maximal positive diagonals the fundamental adjoint equality holds on the nose, so the product of closures is closed with adjoint the closure of the reversed adjoint product",
        witnesses: inst(&[("A", diag_lin()), ("B", ex1_a())]),
        hypotheses: vec![
            dd(a()), dd(b()), closeable(a()), closeable(b()),
            dd(ab()), dd(comp(adj(b()), adj(a()))),
            equal(adj(comp(adj(b()), adj(a()))), comp(cl(a()), cl(b()))),
        ],
        checks: vec![
            Check { name: "product-of-closures-closed", kind: CheckKind::Derives { fact: closed(comp(cl(a()), cl(b()))) } },
            Check { name: "adjoint-identity", kind: CheckKind::Derives { fact: equal(adj(comp(cl(a()), cl(b()))), cl(comp(adj(b()), adj(a())))) } },
        ],
        conjectural: false,
    });

    // THM2-W / COR2-W / LEM2-W: adjoint-product equalities.
    entries.push(CatalogEntry {
        id: "THM2-W",
        rules: vec!["R-THM2"],
        note: "zero-codimension instance: the inner factor's adjoint has a bounded everywhere-defined inverse",
        witnesses: inst(&[("A", diag_lin()), ("B", per12())]),
        hypotheses: vec![dd(a()), dd(b()), dd(ab()), closed(b()), invb(adj(b()))],
        checks: vec![Check {
            name: "fundamental-adjoint-relation",
            kind: CheckKind::Derives { fact: equal(adj(ab()), comp(adj(b()), adj(a()))) },
        }],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "COR2-W",
        rules: vec!["R-COR2"],
        note: "closed factors, closed reversed adjoint product, outer factor surjective with trivial kernel",
        witnesses: inst(&[("A", ex1_a()), ("B", diag_lin())]),
        hypotheses: vec![
            closed(a()), closed(b()), dd(a()), dd(b()), dd(ab()),
            dd(comp(adj(b()), adj(a()))), closed(comp(adj(b()), adj(a()))),
            invb(a()), fkern(a()),
        ],
        checks: vec![Check {
            name: "fundamental-adjoint-relation",
            kind: CheckKind::Derives { fact: equal(adj(ab()), comp(adj(b()), adj(a()))) },
        }],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "LEM2-W",
        rules: vec!["R-LEM2"],
        note: "inner factor closed with bounded everywhere-defined inverse",
        witnesses: inst(&[("A", diag_lin()), ("B", per12())]),
        hypotheses: vec![dd(a()), dd(b()), closed(b()), invb(b())],
        checks: vec![
            Check { name: "fundamental-adjoint-relation", kind: CheckKind::Derives { fact: equal(adj(ab()), comp(adj(b()), adj(a()))) } },
            Check { name: "product-densely-defined", kind: CheckKind::Derives { fact: dd(ab()) } },
        ],
        conjectural: false,
    });

    // VN-W: A*A and AA* self-adjoint for a seeded random closed monomial.
    let vn_op = Sampler::new(seed).closed_monomial(Space::Bilateral);
    entries.push(CatalogEntry {
        id: "VN-W",
        rules: vec!["R-COR1"],
        note: "self-adjointness of A*A and AA* for a seeded random closed monomial",
        witnesses: inst(&[("A", vn_op)]),
        hypotheses: vec![dd(a()), closed(a())],
        checks: vec![
            Check { name: "a-star-a-selfadjoint", kind: CheckKind::Derives { fact: sa(comp(adj(a()), a())) } },
            Check { name: "a-a-star-selfadjoint", kind: CheckKind::Derives { fact: sa(comp(a(), adj(a()))) } },
        ],
        conjectural: false,
    });

    // THM3-W / THM4-W: commuting self-adjoint factors.
    entries.push(CatalogEntry {
        id: "THM3-W",
        rules: vec!["R-THM3"],
        note: "commuting self-adjoint diagonals give a symmetric product with the closure chain",
        witnesses: inst(&[("A", ex1_a()), ("B", ex1_a())]),
        hypotheses: vec![sa(a()), sa(b()), dd(ab()), commutes(a(), b())],
        checks: vec![
            Check { name: "product-symmetric", kind: CheckKind::Derives { fact: unary(Property::Symmetric, ab()) } },
            Check { name: "chain-into-reversed-closure", kind: CheckKind::Derives { fact: subset(cl(ab()), cl(ba())) } },
            Check { name: "chain-into-adjoint", kind: CheckKind::Derives { fact: subset(cl(ba()), adj(ab())) } },
        ],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "THM4-W",
        rules: vec!["R-THM4"],
        note: "self-adjoint product of self-adjoint squares forces the reverse commutation, and here both orders agree exactly",
        witnesses: inst(&[("A", ex1_a()), ("B", ex1_a())]),
        hypotheses: vec![sa(a()), sa(b()), dd(ab()), sa(ab())],
        checks: vec![
            Check { name: "reverse-commutation-derived", kind: CheckKind::Derives { fact: commutes(b(), a()) } },
            Check { name: "orders-equal-in-model", kind: CheckKind::CompareIs { left: ba(), right: ab(), expect: "equal" } },
        ],
        conjectural: false,
    });

    // THM5 family: unitary factors.
    let const3 = MonomialOperator::diag(GrowthSymbol::constant(
        Space::Bilateral,
        RadicalComplex::from_int(3),
    ))
    .expect("valid");
    entries.push(CatalogEntry {
        id: "THM5A-W",
        rules: vec!["R-THM5A"],
        note: "unitary bilateral shift extension-commuting with a constant diagonal; commuting with a pure shift forces shift-invariant symbols, so the honest in-class witness is bounded",
        witnesses: inst(&[("A", bishift()), ("B", const3.clone())]),
        hypotheses: vec![unitary(a()), normal(b()), commutes(a(), b())],
        checks: vec![Check {
            name: "product-normal",
            kind: CheckKind::Derives { fact: normal(ab()) },
        }],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "THM5A-VAC",
        rules: vec!["R-THM5A"],
        note: "documented vacuity: an unbounded diagonal cannot extension-commute with the pure bilateral shift in this model class, so the hypothesis fails by design",
        witnesses: inst(&[(
            "A",
            bishift(),
        ), (
            "B",
            MonomialOperator::diag(GrowthSymbol::exponential(Space::Bilateral, rat_int(3)))
                .expect("valid"),
        )]),
        hypotheses: vec![unitary(a()), normal(b()), commutes(a(), b())],
        checks: vec![],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "THM5B-W",
        rules: vec!["R-THM5B"],
        note: "normal constant diagonal with a unitary right factor commuting back",
        witnesses: inst(&[("A", const3.clone()), ("B", bishift())]),
        hypotheses: vec![normal(a()), unitary(b()), commutes(b(), a())],
        checks: vec![Check {
            name: "product-normal",
            kind: CheckKind::Derives { fact: normal(ab()) },
        }],
        conjectural: false,
    });

    // THM5-2: with a unitary left factor, normality of AB and BA are
    // equivalent; first the both-false witness, then the both-true one.
    let weight2 = MonomialOperator::diag(GrowthSymbol::exponential(Space::Bilateral, rat_int(2)))
        .expect("valid");
    entries.push(CatalogEntry {
        id: "THM5-2-W",
        rules: vec!["R-THM5-2A", "R-THM5-2B"],
        note: "equivalence witnessed on the false side: the geometric weight breaks shift-invariance of the modulus, so neither order is normal",
        witnesses: inst(&[("A", bishift()), ("B", weight2)]),
        hypotheses: vec![unitary(a()), dd(b()), normal(b())],
        checks: vec![
            Check { name: "ab-not-normal", kind: CheckKind::ModelFact { fact: normal(ab()), expect: false } },
            Check { name: "ba-not-normal", kind: CheckKind::ModelFact { fact: normal(ba()), expect: false } },
        ],
        conjectural: false,
    });
    let const_mod = MonomialOperator::diag(
        GrowthSymbol::periodic(Space::Bilateral, &[2, -2]),
    )
    .expect("valid");
    entries.push(CatalogEntry {
        id: "THM5-2-W2",
        rules: vec!["R-THM5-2A", "R-THM5-2B"],
        note: "equivalence witnessed on the true side: a constant-modulus alternating diagonal keeps both orders normal",
        witnesses: inst(&[("A", bishift()), ("B", const_mod)]),
        hypotheses: vec![unitary(a()), dd(b()), normal(ab())],
        checks: vec![
            Check { name: "ba-normal-derived", kind: CheckKind::Derives { fact: normal(ba()) } },
            Check { name: "ab-normal-model", kind: CheckKind::ModelFact { fact: normal(ab()), expect: true } },
        ],
        conjectural: false,
    });

    // NCLOSE-W: bounded normal times unbounded normal, commuting.
    entries.push(CatalogEntry {
        id: "NCLOSE-W",
        rules: vec!["R-NCLOSE"],
        note: "bounded normal periodic diagonal extension-commuting with an unbounded complex diagonal: the closure of BA is normal",
        witnesses: inst(&[("A", diag_i_sq()), ("B", per12())]),
        hypotheses: vec![normal(a()), normal(b()), bounded(b()), commutes(b(), a())],
        checks: vec![Check {
            name: "closure-of-ba-normal",
            kind: CheckKind::Derives { fact: normal(cl(ba())) },
        }],
        conjectural: false,
    });

    // DNVN-W: self-adjoint sandwich forces equality.
    entries.push(CatalogEntry {
        id: "DNVN-W",
        rules: vec!["R-DNVN"],
        note: "a self-adjoint operator squeezed under a product of self-adjoint diagonals equals the product",
        witnesses: inst(&[("A", diag_lin()), ("B", ex1_a()), ("T", diag_cube())]),
        hypotheses: vec![
            sa(a()), sa(b()), sa(atom("T")),
            subset(atom("T"), ab()),
        ],
        checks: vec![Check {
            name: "sandwich-equality",
            kind: CheckKind::Derives { fact: equal(atom("T"), ab()) },
        }],
        conjectural: false,
    });

    // BINV-NORM-W and PRO-AINV-W: bounded invertible normal factor.
    entries.push(CatalogEntry {
        id: "BINV-NORM-W",
        rules: vec!["R-BINV-NORM"],
        note: "bounded invertible normal B commuting with unbounded normal A: BA itself (not just its closure) is normal",
        witnesses: inst(&[("A", diag_i_sq()), ("B", per12())]),
        hypotheses: vec![
            normal(a()), normal(b()), bounded(b()), invb(b()), commutes(b(), a()),
        ],
        checks: vec![Check {
            name: "ba-normal",
            kind: CheckKind::Derives { fact: normal(ba()) },
        }],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "PRO-AINV-W",
        rules: vec!["R-PRO-AINV"],
        note: "bounded invertible normal A commuting with unbounded normal B: BA is normal",
        witnesses: inst(&[("A", per12()), ("B", diag_i_sq())]),
        hypotheses: vec![
            normal(a()), bounded(a()), invb(a()), normal(b()), commutes(a(), b()),
        ],
        checks: vec![Check {
            name: "ba-normal",
            kind: CheckKind::Derives { fact: normal(ba()) },
        }],
        conjectural: false,
    });

    // EXMAD-W: equality commutation with a bounded normal factor.
    entries.push(CatalogEntry {
        id: "EXMAD-W",
        rules: vec!["R-EXMAD"],
        note: "bounded normal B with BA = AB exactly: both products normal",
        witnesses: inst(&[("A", diag_i_sq()), ("B", per12())]),
        hypotheses: vec![
            normal(a()), normal(b()), bounded(b()), equal(ba(), ab()),
        ],
        checks: vec![
            Check { name: "ba-normal", kind: CheckKind::Derives { fact: normal(ba()) } },
            Check { name: "ab-normal", kind: CheckKind::Derives { fact: normal(ab()) } },
        ],
        conjectural: false,
    });

    // THM7-W / COR3-W: polar-factor necessary conditions.
    let abs_a = diag_i_sq().polar().modulus;
    let phase_a = diag_i_sq().polar().isometry;
    let abs_b = per12().polar().modulus;
    let phase_b = per12().polar().isometry;
    entries.push(CatalogEntry {
        id: "THM7-W",
        rules: vec!["R-THM7"],
        note: "normal product of dense-range normal diagonals: the Hermitian polar factors multiply to a self-adjoint operator and extension-commute in reverse order",
        witnesses: inst(&[
            ("A", diag_i_sq()),
            ("B", per12()),
            ("HA", abs_a.clone()),
            ("HB", abs_b.clone()),
        ]),
        hypotheses: vec![
            normal(a()), normal(b()), drange(a()), drange(b()), dd(ab()), normal(ab()),
            sa(atom("HA")), sa(atom("HB")),
            equal(comp(atom("HA"), atom("HA")), comp(adj(a()), a())),
            equal(comp(atom("HB"), atom("HB")), comp(adj(b()), b())),
        ],
        checks: vec![
            Check { name: "hermitian-product-selfadjoint", kind: CheckKind::Derives { fact: sa(comp(atom("HA"), atom("HB"))) } },
            Check { name: "reverse-polar-commutation", kind: CheckKind::Derives { fact: commutes(atom("HB"), atom("HA")) } },
        ],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "COR3-W",
        rules: vec!["R-COR3"],
        note: "the combined unitary polar-factor adjoints intertwine the Hermitian factor products",
        witnesses: inst(&[
            ("A", diag_i_sq()),
            ("B", per12()),
            ("HA", abs_a),
            ("HB", abs_b),
            ("UA", phase_a),
            ("UB", phase_b),
        ]),
        hypotheses: vec![
            normal(a()), normal(b()), drange(a()), drange(b()), dd(ab()), normal(ab()),
            unitary(atom("UA")), unitary(atom("UB")), sa(atom("HA")), sa(atom("HB")),
            equal(a(), comp(atom("UA"), atom("HA"))),
            equal(b(), comp(atom("UB"), atom("HB"))),
        ],
        checks: vec![Check {
            name: "unitary-intertwines-hermitian-products",
            kind: CheckKind::Derives {
                fact: intertwines(
                    comp(adj(atom("UA")), adj(atom("UB"))),
                    comp(adj(comp(atom("HA"), atom("HB"))), comp(atom("HA"), atom("HB"))),
                    comp(comp(atom("HA"), atom("HB")), adj(comp(atom("HA"), atom("HB")))),
                ),
            },
        }],
        conjectural: false,
    });

    // FP-W: a bounded shift intertwining two normal diagonals.
    let n_sym = GrowthSymbol::periodic(Space::Bilateral, &[1, 2])
        .mul(&GrowthSymbol::constant(Space::Bilateral, RadicalComplex::i()))
        .expect("same space");
    let n_op = MonomialOperator::diag(n_sym.clone()).expect("valid");
    let m_op = MonomialOperator::diag(n_sym.shift(1).expect("valid")).expect("valid");
    entries.push(CatalogEntry {
        id: "FP-W",
        rules: vec!["R-FP"],
        note: "the bilateral shift intertwines a periodic normal diagonal with its shifted copy; the imported intertwining theorem then yields the adjoint intertwining, verified in-model",
        witnesses: inst(&[("K", bishift()), ("N", n_op), ("M", m_op)]),
        hypotheses: vec![
            bounded(atom("K")), normal(atom("N")), normal(atom("M")),
            intertwines(atom("K"), atom("N"), atom("M")),
        ],
        checks: vec![Check {
            name: "adjoint-intertwining",
            kind: CheckKind::Derives {
                fact: intertwines(atom("K"), adj(atom("N")), adj(atom("M"))),
            },
        }],
        conjectural: false,
    });

    // THM10-W: relative boundedness from a closed product.
    entries.push(CatalogEntry {
        id: "THM10-W",
        rules: vec!["R-THM10"],
        note: "imported relative-boundedness criterion on the structural inclusion D(AB) inside D(B)",
        witnesses: inst(&[("A", per12()), ("B", diag_lin())]),
        hypotheses: vec![dd(b()), closeable(b()), closed(ab())],
        checks: vec![Check {
            name: "inner-factor-product-bounded",
            kind: CheckKind::Derives { fact: relb(b(), ab()) },
        }],
        conjectural: false,
    });

    // PROP2 pair and LEM3/LEM4 closure-inclusion entries.
    entries.push(CatalogEntry {
        id: "PROP2-1-W",
        rules: vec!["R-PROP2-1", "R-LEM3-2"],
        note: "bounded closure of B with closed A: cl(AB) sits inside A·cl(B), which is closed",
        witnesses: inst(&[("A", diag_lin()), ("B", per12())]),
        hypotheses: vec![
            dd(a()), dd(b()), closed(a()), closeable(b()), bounded(cl(b())), dd(ab()),
        ],
        checks: vec![
            Check { name: "closure-inclusion", kind: CheckKind::Derives { fact: subset(cl(ab()), comp(a(), cl(b()))) } },
            Check { name: "a-clb-closed", kind: CheckKind::Derives { fact: closed(comp(a(), cl(b()))) } },
        ],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "PROP2-2-W",
        rules: vec!["R-PROP2-2"],
        note: "bounded closure of the inverse: A·cl(B) sits inside cl(AB)",
        witnesses: inst(&[("A", diag_lin()), ("B", per12())]),
        hypotheses: vec![
            dd(a()), dd(b()), closed(a()), closeable(b()), injective(b()),
            closeable(Term::inverse(b())), bounded(cl(Term::inverse(b()))),
            closeable(ab()), invb(b()),
        ],
        checks: vec![Check {
            name: "reverse-closure-inclusion",
            kind: CheckKind::Derives { fact: subset(comp(a(), cl(b())), cl(ab())) },
        }],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "LEM3-1-W",
        rules: vec!["R-LEM3-1"],
        note: "with D(B*A*) dense the closure of AB embeds into the closure of cl(A)cl(B)",
        witnesses: inst(&[("A", ex1_a()), ("B", ex1_b())]),
        hypotheses: vec![
            dd(a()), dd(b()), closeable(a()), closeable(b()), dd(ab()),
            dd(comp(adj(b()), adj(a()))),
        ],
        checks: vec![Check {
            name: "nested-closure-inclusion",
            kind: CheckKind::Derives { fact: subset(cl(ab()), cl(comp(cl(a()), cl(b())))) },
        }],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "LEM3-3-W",
        rules: vec!["R-LEM3-3"],
        note: "cl(AB) inside cl(A)cl(B) forces relative boundedness of B against AB (here AB = I, B bounded)",
        witnesses: inst(&[("A", ex1_a()), ("B", ex1_b())]),
        hypotheses: vec![
            dd(a()), dd(b()), closeable(a()), closeable(b()), dd(ab()), closeable(ab()),
            subset(cl(ab()), comp(cl(a()), cl(b()))),
        ],
        checks: vec![
            Check { name: "closure-rel-bounded", kind: CheckKind::Derives { fact: relb(cl(b()), cl(ab())) } },
            Check { name: "factor-rel-bounded", kind: CheckKind::Derives { fact: relb(b(), ab()) } },
        ],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "LEM3-4-W",
        rules: vec!["R-LEM3-4"],
        note: "cl(A)cl(B) inside cl(AB) makes cl(A)cl(B) closeable with the same closure",
        witnesses: inst(&[("A", ex1_a()), ("B", ex1_b())]),
        hypotheses: vec![
            dd(a()), dd(b()), closeable(a()), closeable(b()), dd(ab()), closeable(ab()),
            subset(comp(cl(a()), cl(b())), cl(ab())),
        ],
        checks: vec![Check {
            name: "closures-coincide",
            kind: CheckKind::Derives { fact: equal(cl(comp(cl(a()), cl(b()))), cl(ab())) },
        }],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "LEM4-W",
        rules: vec!["R-LEM4"],
        note: "relative boundedness of cl(B) against cl(A)cl(B) closes the product of closures and bounds cl(AB) by it",
        witnesses: inst(&[("A", diag_lin()), ("B", ex1_a())]),
        hypotheses: vec![
            dd(a()), dd(b()), closeable(a()), closeable(b()), dd(ab()), closeable(ab()),
            relb(cl(b()), comp(cl(a()), cl(b()))),
        ],
        checks: vec![
            Check { name: "product-of-closures-closed", kind: CheckKind::Derives { fact: closed(comp(cl(a()), cl(b()))) } },
            Check { name: "closure-inclusion", kind: CheckKind::Derives { fact: subset(cl(ab()), comp(cl(a()), cl(b()))) } },
        ],
        conjectural: false,
    });

    // PROP3 conjectural entries: checked on witnesses, never promoted.
    entries.push(CatalogEntry {
        id: "PROP3-1-W",
        rules: vec!["R-PROP3-1"],
        note: "conjectural closure inclusion, checked on a witness where the relative-boundedness hypothesis genuinely holds",
        witnesses: inst(&[("A", per12()), ("B", diag_lin())]),
        hypotheses: vec![
            dd(a()), dd(b()), closeable(a()), closeable(b()), dd(ab()), closeable(ab()),
            relb(b(), ab()),
        ],
        checks: vec![Check {
            name: "conjectured-inclusion",
            kind: CheckKind::Derives { fact: subset(cl(ab()), comp(cl(a()), cl(b()))) },
        }],
        conjectural: true,
    });
    entries.push(CatalogEntry {
        id: "PROP3-2-W",
        rules: vec!["R-PROP3-2"],
        note: "conjectural reverse inclusion with a closeable relatively bounded inverse",
        witnesses: inst(&[("A", diag_lin()), ("B", per12())]),
        hypotheses: vec![
            dd(a()), dd(b()), closeable(a()), closeable(b()), injective(b()),
            closeable(Term::inverse(b())), relb(Term::inverse(b()), a()),
            closeable(ab()), invb(b()),
        ],
        checks: vec![Check {
            name: "conjectured-reverse-inclusion",
            kind: CheckKind::Derives { fact: subset(comp(cl(a()), cl(b())), cl(ab())) },
        }],
        conjectural: true,
    });

    // PROP4: quasinormal + dense range ⇒ normal, plus the honest vacuity of
    // the unilateral shift.
    entries.push(CatalogEntry {
        id: "PROP4-W",
        rules: vec!["R-PROP4"],
        note: "a closed quasinormal diagonal with dense range is normal",
        witnesses: inst(&[("T", diag_i_sq())]),
        hypotheses: vec![closed(atom("T")), quasinormal(atom("T")), drange(atom("T"))],
        checks: vec![Check {
            name: "normality",
            kind: CheckKind::Derives { fact: normal(atom("T")) },
        }],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "PROP4-VAC",
        rules: vec!["R-PROP4"],
        note: "the unilateral shift is quasinormal but its range misses the first basis vector, so the dense-range hypothesis fails and nothing is claimed",
        witnesses: inst(&[("T", MonomialOperator::shift_op(Space::Unilateral, 1))]),
        hypotheses: vec![closed(atom("T")), quasinormal(atom("T")), drange(atom("T"))],
        checks: vec![],
        conjectural: false,
    });

    // SHIFT-STATE: the unilateral shift's state.
    entries.push(CatalogEntry {
        id: "SHIFT-STATE",
        rules: vec![],
        note: "state classification of the unilateral shift: range closed but not dense with bounded inverse on it; the adjoint is surjective with a one-dimensional kernel",
        witnesses: inst(&[("S", MonomialOperator::shift_op(Space::Unilateral, 1))]),
        hypotheses: vec![],
        checks: vec![Check {
            name: "shift-state",
            kind: CheckKind::StateIs {
                term: atom("S"),
                expect: StateClass {
                    t_range: crate::state::RangeClass::III,
                    t_inverse: crate::state::InverseClass::One,
                    tstar_range: crate::state::RangeClass::I,
                    tstar_inverse: crate::state::InverseClass::Three,
                },
            },
        }],
        conjectural: false,
    });

    // THM12/PROP5/THM13/THM14/THM15/COR-PERM: invertible normal factors.
    entries.push(CatalogEntry {
        id: "THM12-W",
        rules: vec!["R-THM12"],
        note: "property-P witness: normal invertible diagonals with equal products derive opaque permutability (never evaluated in-model)",
        witnesses: inst(&[("A", ex1_a()), ("B", per12())]),
        hypotheses: vec![
            normal(a()), normal(b()), normal(ab()), equal(ab(), ba()),
        ],
        checks: vec![Check {
            name: "permutability-derived",
            kind: CheckKind::Derives { fact: permutes(a(), b()) },
        }],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "PROP5-W",
        rules: vec!["R-PROP5"],
        note: "both factors invertible normal with BA = AB: both products normal",
        witnesses: inst(&[("A", ex1_a()), ("B", per12())]),
        hypotheses: vec![
            normal(a()), normal(b()), invb(a()), invb(b()), equal(ba(), ab()),
        ],
        checks: vec![
            Check { name: "ba-normal", kind: CheckKind::Derives { fact: normal(ba()) } },
            Check { name: "ab-normal", kind: CheckKind::Derives { fact: normal(ab()) } },
        ],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "THM13-W",
        rules: vec!["R-THM13"],
        note: "commutation transfer to adjoints for two invertible normal diagonals",
        witnesses: inst(&[("A", diag_i_sq().closure()), ("B", per12())]),
        hypotheses: vec![
            normal(a()), normal(b()), invb(a()), invb(b()), equal(ab(), ba()),
        ],
        checks: vec![
            Check { name: "ab-star", kind: CheckKind::Derives { fact: equal(comp(a(), adj(b())), comp(adj(b()), a())) } },
            Check { name: "ba-star", kind: CheckKind::Derives { fact: equal(comp(b(), adj(a())), comp(adj(a()), b())) } },
        ],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "THM14-W",
        rules: vec!["R-THM14"],
        note: "one-invertible commutation transfer: A*B extends into BA* and AB* into B*A",
        witnesses: inst(&[("A", diag_i_sq()), ("B", per12())]),
        hypotheses: vec![normal(a()), normal(b()), invb(b()), equal(ab(), ba())],
        checks: vec![
            Check { name: "astar-b", kind: CheckKind::Derives { fact: subset(comp(adj(a()), b()), comp(b(), adj(a()))) } },
            Check { name: "a-bstar", kind: CheckKind::Derives { fact: subset(comp(a(), adj(b())), comp(adj(b()), a())) } },
        ],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "THM15-W",
        rules: vec!["R-THM15"],
        note: "only B invertible, AB = BA: the product is normal",
        witnesses: inst(&[("A", ex1_a()), ("B", per12())]),
        hypotheses: vec![normal(a()), normal(b()), invb(b()), equal(ab(), ba())],
        checks: vec![
            Check { name: "ab-normal", kind: CheckKind::Derives { fact: normal(ab()) } },
            Check { name: "ab-normal-model", kind: CheckKind::ModelFact { fact: normal(ab()), expect: true } },
        ],
        conjectural: false,
    });
    entries.push(CatalogEntry {
        id: "COR-PERM-W",
        rules: vec!["R-COR-PERM"],
        note: "derived permutability for the one-invertible commuting pair",
        witnesses: inst(&[("A", ex1_a()), ("B", per12())]),
        hypotheses: vec![normal(a()), normal(b()), invb(b()), equal(ab(), ba())],
        checks: vec![Check {
            name: "permutability-derived",
            kind: CheckKind::Derives { fact: permutes(a(), b()) },
        }],
        conjectural: false,
    });

    entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_passes_with_zero_sound_failures() {
        let entries = catalog(RunOptions::default().seed);
        let report = run_catalog(&entries, RunOptions::default());
        for e in &report.entries {
            assert_ne!(
                e.verdict,
                Verdict::Fail,
                "entry {} failed: {:?}\n{}",
                e.id,
                e.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>(),
                report.human()
            );
            assert_ne!(e.verdict, Verdict::ConjecturalFail, "entry {}", e.id);
        }
        assert_eq!(report.sound_failures(), 0);
    }

    #[test]
    fn vacuous_entries_name_their_hypothesis() {
        let entries = catalog(RunOptions::default().seed);
        let report = run_catalog(&entries, RunOptions::default());
        let vac: Vec<&EntryReport> = report
            .entries
            .iter()
            .filter(|e| e.verdict == Verdict::Vacuous)
            .collect();
        assert!(!vac.is_empty(), "the documented vacuous entries must appear");
        for e in vac {
            assert!(e.failing_hypothesis.is_some(), "entry {}", e.id);
        }
        let prop4 = report.entries.iter().find(|e| e.id == "PROP4-VAC").unwrap();
        assert_eq!(prop4.verdict, Verdict::Vacuous);
        assert!(prop4
            .failing_hypothesis
            .as_deref()
            .unwrap()
            .contains("dense_range"));
    }

    #[test]
    fn ex1_entry_passes_with_witness() {
        let entries = catalog(RunOptions::default().seed);
        let report = run_catalog(&entries, RunOptions::default());
        let ex1 = report.entries.iter().find(|e| e.id == "EX1").unwrap();
        assert_eq!(ex1.verdict, Verdict::Pass, "{:#?}", ex1.checks);
    }

    #[test]
    fn deterministic_reports() {
        let opts = RunOptions::default();
        let a = run_catalog(&catalog(opts.seed), opts).to_json();
        let b = run_catalog(&catalog(opts.seed), opts).to_json();
        assert_eq!(a, b, "byte-identical reports for equal seeds");
    }

    #[test]
    fn every_sound_rule_has_a_witness_entry() {
        let entries = catalog(RunOptions::default().seed);
        let covered: BTreeSet<&str> = entries.iter().flat_map(|e| e.rules.iter().copied()).collect();
        for rule in rulebook() {
            if rule.status == crate::engine::RuleStatus::Sound {
                assert!(
                    covered.contains(rule.id),
                    "sound rule {} lacks a catalog entry",
                    rule.id
                );
            }
        }
    }

    #[test]
    fn empty_catalog_is_an_empty_report() {
        let report = run_catalog(&[], RunOptions::default());
        assert!(report.entries.is_empty());
        assert_eq!(report.sound_failures(), 0);
    }

    #[test]
    fn witnesses_are_valid_operators() {
        for entry in catalog(RunOptions::default().seed) {
            for (name, op) in &entry.witnesses {
                // Construction already validated; exercise the properties
                // path to make sure every witness is well-formed end to end.
                let _ = op.properties();
                assert!(!name.is_empty());
            }
        }
    }
}
