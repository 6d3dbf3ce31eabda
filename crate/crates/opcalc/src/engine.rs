//! Forward-chaining saturation over operator facts, with provenance, plus
//! the bridge that evaluates abstract facts on concrete model operators.
//!
//! Rules fire purely off the current fact set (no term-universe
//! enumeration); conclusions whose terms exceed the depth bound are dropped
//! and counted.  The derived fact SET is a least fixpoint, hence independent
//! of rule application order; derivation trees record the first derivation
//! found under the engine's fixed deterministic order.

use crate::operator::{MonomialOperator, OpError};
use crate::term::{Pattern, Term};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

pub const DEFAULT_DEPTH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property<T> {
    DenselyDefined,
    Closeable,
    Closed,
    Symmetric,
    Selfadjoint,
    Normal,
    Quasinormal,
    Bounded,
    Unitary,
    InvertibleBounded,
    DenseRange,
    Injective,
    FiniteKernel,
    PermutesWith(T),
}

impl<T> Property<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Property::DenselyDefined => "densely_defined",
            Property::Closeable => "closeable",
            Property::Closed => "closed",
            Property::Symmetric => "symmetric",
            Property::Selfadjoint => "selfadjoint",
            Property::Normal => "normal",
            Property::Quasinormal => "quasinormal",
            Property::Bounded => "bounded",
            Property::Unitary => "unitary",
            Property::InvertibleBounded => "invertible_bounded",
            Property::DenseRange => "dense_range",
            Property::Injective => "injective",
            Property::FiniteKernel => "finite_kernel",
            Property::PermutesWith(_) => "permutes_with",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation<T> {
    Subset,
    Equal,
    CommutesExt,
    Intertwines(T),
    RelBounded,
}

impl<T> Relation<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Relation::Subset => "subset",
            Relation::Equal => "equal",
            Relation::CommutesExt => "commutes",
            Relation::Intertwines(_) => "intertwines",
            Relation::RelBounded => "rel_bounded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fact<T> {
    Unary(Property<T>, T),
    Binary(Relation<T>, T, T),
}

pub type GroundFact = Fact<Term>;
pub type FactPattern = Fact<Pattern>;

impl GroundFact {
    /// Facts are stored with all terms normalized.
    pub fn normalized(&self) -> GroundFact {
        match self {
            Fact::Unary(Property::PermutesWith(u), t) => Fact::Unary(
                Property::PermutesWith(u.normalize()),
                t.normalize(),
            ),
            Fact::Unary(p, t) => Fact::Unary(p.clone(), t.normalize()),
            Fact::Binary(Relation::Intertwines(k), a, b) => Fact::Binary(
                Relation::Intertwines(k.normalize()),
                a.normalize(),
                b.normalize(),
            ),
            Fact::Binary(r, a, b) => Fact::Binary(r.clone(), a.normalize(), b.normalize()),
        }
    }

    pub fn terms(&self) -> Vec<&Term> {
        match self {
            Fact::Unary(Property::PermutesWith(u), t) => vec![t, u],
            Fact::Unary(_, t) => vec![t],
            Fact::Binary(Relation::Intertwines(k), a, b) => vec![k, a, b],
            Fact::Binary(_, a, b) => vec![a, b],
        }
    }

    pub fn max_depth(&self) -> usize {
        self.terms().iter().map(|t| t.depth()).max().unwrap_or(0)
    }
}

impl fmt::Display for GroundFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Unary(Property::PermutesWith(u), t) => write!(f, "permutes_with({t}, {u})"),
            Fact::Unary(p, t) => write!(f, "{}({t})", p.name()),
            Fact::Binary(Relation::Intertwines(k), a, b) => {
                write!(f, "intertwines({k}, {a}, {b})")
            }
            Fact::Binary(r, a, b) => write!(f, "{}({a}, {b})", r.name()),
        }
    }
}

impl FactPattern {
    fn matches(&self, fact: &GroundFact, bind: &mut Vec<Option<Term>>) -> bool {
        match (self, fact) {
            (Fact::Unary(Property::PermutesWith(pu), pt), Fact::Unary(Property::PermutesWith(u), t)) => {
                pt.matches(t, bind) && pu.matches(u, bind)
            }
            (Fact::Unary(pp, pt), Fact::Unary(p, t)) => {
                property_heads_equal(pp, p) && pt.matches(t, bind)
            }
            (Fact::Binary(Relation::Intertwines(pk), pa, pb), Fact::Binary(Relation::Intertwines(k), a, b)) => {
                pk.matches(k, bind) && pa.matches(a, bind) && pb.matches(b, bind)
            }
            (Fact::Binary(pr, pa, pb), Fact::Binary(r, a, b)) => {
                relation_heads_equal(pr, r) && pa.matches(a, bind) && pb.matches(b, bind)
            }
            _ => false,
        }
    }

    fn instantiate(&self, bind: &[Option<Term>]) -> GroundFact {
        match self {
            Fact::Unary(Property::PermutesWith(pu), pt) => Fact::Unary(
                Property::PermutesWith(pu.instantiate(bind)),
                pt.instantiate(bind),
            ),
            Fact::Unary(p, pt) => Fact::Unary(clone_property_head(p), pt.instantiate(bind)),
            Fact::Binary(Relation::Intertwines(pk), pa, pb) => Fact::Binary(
                Relation::Intertwines(pk.instantiate(bind)),
                pa.instantiate(bind),
                pb.instantiate(bind),
            ),
            Fact::Binary(r, pa, pb) => Fact::Binary(
                clone_relation_head(r),
                pa.instantiate(bind),
                pb.instantiate(bind),
            ),
        }
    }

    pub fn vars(&self) -> Vec<u8> {
        let mut out = Vec::new();
        match self {
            Fact::Unary(Property::PermutesWith(u), t) => {
                out.extend(t.vars());
                out.extend(u.vars());
            }
            Fact::Unary(_, t) => out.extend(t.vars()),
            Fact::Binary(Relation::Intertwines(k), a, b) => {
                out.extend(k.vars());
                out.extend(a.vars());
                out.extend(b.vars());
            }
            Fact::Binary(_, a, b) => {
                out.extend(a.vars());
                out.extend(b.vars());
            }
        }
        out
    }
}

fn property_tag<T>(p: &Property<T>) -> u8 {
    match p {
        Property::DenselyDefined => 0,
        Property::Closeable => 1,
        Property::Closed => 2,
        Property::Symmetric => 3,
        Property::Selfadjoint => 4,
        Property::Normal => 5,
        Property::Quasinormal => 6,
        Property::Bounded => 7,
        Property::Unitary => 8,
        Property::InvertibleBounded => 9,
        Property::DenseRange => 10,
        Property::Injective => 11,
        Property::FiniteKernel => 12,
        Property::PermutesWith(_) => 13,
    }
}

fn property_heads_equal(p: &Property<Pattern>, q: &Property<Term>) -> bool {
    property_tag(p) == property_tag(q)
}

fn relation_tag<T>(r: &Relation<T>) -> u8 {
    match r {
        Relation::Subset => 0,
        Relation::Equal => 1,
        Relation::CommutesExt => 2,
        Relation::Intertwines(_) => 3,
        Relation::RelBounded => 4,
    }
}

fn relation_heads_equal(p: &Relation<Pattern>, q: &Relation<Term>) -> bool {
    relation_tag(p) == relation_tag(q)
}

/// Transfers a non-parameterized head between term types; the parameterized
/// heads are handled explicitly by the callers.
fn clone_property_head<T, U>(p: &Property<T>) -> Property<U> {
    match p {
        Property::DenselyDefined => Property::DenselyDefined,
        Property::Closeable => Property::Closeable,
        Property::Closed => Property::Closed,
        Property::Symmetric => Property::Symmetric,
        Property::Selfadjoint => Property::Selfadjoint,
        Property::Normal => Property::Normal,
        Property::Quasinormal => Property::Quasinormal,
        Property::Bounded => Property::Bounded,
        Property::Unitary => Property::Unitary,
        Property::InvertibleBounded => Property::InvertibleBounded,
        Property::DenseRange => Property::DenseRange,
        Property::Injective => Property::Injective,
        Property::FiniteKernel => Property::FiniteKernel,
        Property::PermutesWith(_) => unreachable!("parameterized head handled by caller"),
    }
}

fn clone_relation_head<T, U>(r: &Relation<T>) -> Relation<U> {
    match r {
        Relation::Subset => Relation::Subset,
        Relation::Equal => Relation::Equal,
        Relation::CommutesExt => Relation::CommutesExt,
        Relation::Intertwines(_) => unreachable!("parameterized head handled by caller"),
        Relation::RelBounded => Relation::RelBounded,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum RuleStatus {
    Sound,
    Conjectural,
    Axiom,
}

impl fmt::Display for RuleStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleStatus::Sound => write!(f, "SOUND"),
            RuleStatus::Conjectural => write!(f, "CONJECTURAL"),
            RuleStatus::Axiom => write!(f, "AXIOM"),
        }
    }
}

/// One inference rule: named, statused, with a human-readable statement of
/// the result it encodes.
#[derive(Debug, Clone)]
pub struct Rule {
    pub id: &'static str,
    pub status: RuleStatus,
    pub statement: &'static str,
    pub premises: Vec<FactPattern>,
    pub conclusions: Vec<FactPattern>,
}

impl Rule {
    pub fn var_count(&self) -> usize {
        let mut m = 0u8;
        for p in self.premises.iter().chain(self.conclusions.iter()) {
            for v in p.vars() {
                m = m.max(v + 1);
            }
        }
        m as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    Assumed,
    Derived {
        rule: &'static str,
        premises: Vec<GroundFact>,
    },
    /// Structural facts attached to every mentioned term of a given shape
    /// (adjoints and closures are always closed).
    Structural { rule: &'static str },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("fact not derived: {0}")]
    NotDerived(String),
    #[error("inverse term {0} asserted without an invertible_bounded or injective fact for it")]
    UnjustifiedInverse(String),
}

/// Saturated fact set with provenance.
#[derive(Debug, Clone)]
pub struct Saturation {
    pub facts: BTreeMap<GroundFact, Derivation>,
    /// Conclusions dropped because a term exceeded the depth bound.
    pub truncated: usize,
}

impl Saturation {
    pub fn contains(&self, fact: &GroundFact) -> bool {
        self.facts.contains_key(&fact.normalized())
    }

    pub fn derived_only(&self) -> impl Iterator<Item = (&GroundFact, &Derivation)> {
        self.facts
            .iter()
            .filter(|(_, d)| !matches!(d, Derivation::Assumed))
    }

    /// Renders the derivation tree of a fact, deterministic and indented.
    pub fn explain(&self, fact: &GroundFact, rules: &[Rule]) -> Result<String, EngineError> {
        let fact = fact.normalized();
        if !self.facts.contains_key(&fact) {
            return Err(EngineError::NotDerived(fact.to_string()));
        }
        let mut out = String::new();
        self.render(&fact, rules, 0, &mut out);
        Ok(out)
    }

    fn render(&self, fact: &GroundFact, rules: &[Rule], depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self.facts.get(fact) {
            None | Some(Derivation::Assumed) => {
                out.push_str(&format!("{pad}{fact}  [assumed]\n"));
            }
            Some(Derivation::Structural { rule }) => {
                out.push_str(&format!("{pad}{fact}  [{rule}]\n"));
            }
            Some(Derivation::Derived { rule, premises }) => {
                let note = rules
                    .iter()
                    .find(|r| r.id == *rule)
                    .map(|r| format!("{} ({})", r.id, r.status))
                    .unwrap_or_else(|| rule.to_string());
                out.push_str(&format!("{pad}{fact}  [{note}]\n"));
                for p in premises {
                    self.render(p, rules, depth + 1, out);
                }
            }
        }
    }

    /// True when the fact's derivation tree uses a conjectural rule.
    pub fn conjectural_tainted(&self, fact: &GroundFact, rules: &[Rule]) -> bool {
        match self.facts.get(&fact.normalized()) {
            Some(Derivation::Derived { rule, premises }) => {
                let status = rules.iter().find(|r| r.id == *rule).map(|r| r.status);
                if status == Some(RuleStatus::Conjectural) {
                    return true;
                }
                premises.iter().any(|p| self.conjectural_tainted(p, rules))
            }
            _ => false,
        }
    }
}

/// Validates the admission rule for `inv(t)` terms: each must be accompanied
/// by an invertibility or injectivity fact for `t`.
pub fn validate_assumptions(facts: &BTreeSet<GroundFact>) -> Result<(), EngineError> {
    let have: BTreeSet<&Term> = facts
        .iter()
        .filter_map(|f| match f {
            Fact::Unary(Property::InvertibleBounded, t) | Fact::Unary(Property::Injective, t) => {
                Some(t)
            }
            _ => None,
        })
        .collect();
    for f in facts {
        for t in f.terms() {
            for sub in t.subterms() {
                if let Term::Inverse(inner) = sub {
                    if !have.contains(inner.as_ref()) {
                        return Err(EngineError::UnjustifiedInverse(sub.to_string()));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Head shape of a fact or pattern, used to index candidates.
fn fact_head(f: &GroundFact) -> (u8, u8) {
    match f {
        Fact::Unary(p, _) => (0, property_tag(p)),
        Fact::Binary(r, _, _) => (1, relation_tag(r)),
    }
}

fn pattern_head(p: &FactPattern) -> (u8, u8) {
    match p {
        Fact::Unary(prop, _) => (0, property_tag(prop)),
        Fact::Binary(rel, _, _) => (1, relation_tag(rel)),
    }
}

/// Least fixpoint of rule application over the asserted facts, depth-capped.
pub fn saturate(
    assumptions: &BTreeSet<GroundFact>,
    rules: &[Rule],
    d_max: usize,
    include_conjectural: bool,
) -> Saturation {
    let mut facts: BTreeMap<GroundFact, Derivation> = BTreeMap::new();
    for f in assumptions {
        facts.insert(f.normalized(), Derivation::Assumed);
    }
    let mut truncated = 0usize;
    loop {
        let mut fresh: Vec<(GroundFact, Derivation)> = Vec::new();

        // Term-driven structural facts: adjoints and closures are closed.
        let mentioned: BTreeSet<Term> = facts
            .keys()
            .flat_map(|f| f.terms().into_iter().flat_map(|t| t.subterms()))
            .cloned()
            .collect();
        for t in &mentioned {
            match t {
                Term::Adjoint(_) => {
                    let f = Fact::Unary(Property::Closed, t.clone());
                    if !facts.contains_key(&f) {
                        fresh.push((f, Derivation::Structural { rule: "S-ADJ-CLOSED" }));
                    }
                }
                Term::Closure(_) => {
                    let f = Fact::Unary(Property::Closed, t.clone());
                    if !facts.contains_key(&f) {
                        fresh.push((f, Derivation::Structural { rule: "S-CL-CLOSED" }));
                    }
                }
                _ => {}
            }
        }

        // Candidate index by head shape, rebuilt once per round.
        let mut by_head: BTreeMap<(u8, u8), Vec<&GroundFact>> = BTreeMap::new();
        for f in facts.keys() {
            by_head.entry(fact_head(f)).or_default().push(f);
        }
        let empty: Vec<&GroundFact> = Vec::new();

        for rule in rules {
            if rule.status == RuleStatus::Conjectural && !include_conjectural {
                continue;
            }
            let nvars = rule.var_count();
            let mut bind: Vec<Option<Term>> = vec![None; nvars];
            let mut used: Vec<GroundFact> = Vec::with_capacity(rule.premises.len());
            let candidates: Vec<&Vec<&GroundFact>> = rule
                .premises
                .iter()
                .map(|p| by_head.get(&pattern_head(p)).unwrap_or(&empty))
                .collect();
            match_premises(
                rule,
                0,
                &candidates,
                &mut bind,
                &mut used,
                d_max,
                &mut fresh,
                &facts,
                &mut truncated,
            );
        }

        if fresh.is_empty() {
            break;
        }
        let mut grew = false;
        for (f, d) in fresh {
            if let std::collections::btree_map::Entry::Vacant(e) = facts.entry(f) {
                e.insert(d);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    Saturation { facts, truncated }
}

#[allow(clippy::too_many_arguments)]
fn match_premises(
    rule: &Rule,
    idx: usize,
    candidates: &[&Vec<&GroundFact>],
    bind: &mut Vec<Option<Term>>,
    used: &mut Vec<GroundFact>,
    d_max: usize,
    fresh: &mut Vec<(GroundFact, Derivation)>,
    existing: &BTreeMap<GroundFact, Derivation>,
    truncated: &mut usize,
) {
    if idx == rule.premises.len() {
        for conclusion in &rule.conclusions {
            let fact = conclusion.instantiate(bind).normalized();
            if fact.max_depth() > d_max {
                *truncated += 1;
                continue;
            }
            if !existing.contains_key(&fact) {
                fresh.push((
                    fact,
                    Derivation::Derived {
                        rule: rule.id,
                        premises: used.clone(),
                    },
                ));
            }
        }
        return;
    }
    let pattern = &rule.premises[idx];
    // Fully-bound premises become a single membership lookup.
    if pattern.vars().iter().all(|&v| bind[v as usize].is_some()) {
        let fact = pattern.instantiate(bind).normalized();
        if existing.contains_key(&fact) {
            used.push(fact);
            match_premises(rule, idx + 1, candidates, bind, used, d_max, fresh, existing, truncated);
            used.pop();
        }
        return;
    }
    for fact in candidates[idx] {
        let saved = bind.clone();
        if pattern.matches(fact, bind) {
            used.push((*fact).clone());
            match_premises(rule, idx + 1, candidates, bind, used, d_max, fresh, existing, truncated);
            used.pop();
        }
        *bind = saved;
    }
}

// ---------------------------------------------------------------------------
// Model bridge: evaluating terms and facts on concrete monomial operators.
// ---------------------------------------------------------------------------

/// Atom instantiation for model checks.
pub type Instantiation = BTreeMap<String, MonomialOperator>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("atom {0} has no model instantiation")]
    UnboundAtom(String),
    #[error(transparent)]
    Op(#[from] OpError),
}

pub fn eval_term(term: &Term, inst: &Instantiation) -> Result<MonomialOperator, ModelError> {
    match term {
        Term::Atom(n) => inst
            .get(n)
            .cloned()
            .ok_or_else(|| ModelError::UnboundAtom(n.clone())),
        Term::Adjoint(t) => Ok(eval_term(t, inst)?.adjoint()),
        Term::Closure(t) => Ok(eval_term(t, inst)?.closure()),
        Term::Inverse(t) => Ok(eval_term(t, inst)?.inverse()?),
        Term::Compose(f, g) => {
            let fo = eval_term(f, inst)?;
            let go = eval_term(g, inst)?;
            Ok(fo.compose(&go)?)
        }
    }
}

/// Evaluates a fact in-model.  `Ok(None)` marks opaque predicates
/// (permutability), which are derivable but never evaluated.
pub fn eval_fact(fact: &GroundFact, inst: &Instantiation) -> Result<Option<bool>, ModelError> {
    match fact {
        Fact::Unary(p, t) => {
            if matches!(p, Property::PermutesWith(_)) {
                return Ok(None);
            }
            let op = eval_term(t, inst)?;
            let props = op.properties();
            Ok(Some(match p {
                Property::DenselyDefined => props.densely_defined,
                Property::Closeable => props.closeable,
                Property::Closed => props.closed,
                Property::Symmetric => props.symmetric,
                Property::Selfadjoint => props.selfadjoint,
                Property::Normal => props.normal,
                Property::Quasinormal => props.quasinormal,
                Property::Bounded => props.bounded,
                Property::Unitary => props.unitary,
                Property::InvertibleBounded => props.invertible_with_bounded_inverse,
                Property::DenseRange => props.dense_range,
                Property::Injective => props.injective,
                Property::FiniteKernel => {
                    matches!(props.kernel_dimension, crate::symbol::Count::Finite(_))
                }
                Property::PermutesWith(_) => unreachable!(),
            }))
        }
        Fact::Binary(r, a, b) => {
            let ao = eval_term(a, inst)?;
            let bo = eval_term(b, inst)?;
            Ok(Some(match r {
                Relation::Subset => ao.compare(&bo)?.is_subset(),
                Relation::Equal => ao.compare(&bo)?.is_equal(),
                Relation::CommutesExt => {
                    // a commutes with b: ab ⊂ ba.
                    let ab = ao.compose(&bo)?;
                    let ba = bo.compose(&ao)?;
                    ab.compare(&ba)?.is_subset()
                }
                Relation::Intertwines(k) => {
                    let ko = eval_term(k, inst)?;
                    let kn = ko.compose(&ao)?;
                    let mk = bo.compose(&ko)?;
                    kn.compare(&mk)?.is_subset()
                }
                Relation::RelBounded => ao.rel_bounded_wrt(&bo)?.holds(),
            }))
        }
    }
}

/// Outcome of replaying a saturation on a model instantiation.
#[derive(Debug, Clone)]
pub enum ModelCheckOutcome {
    /// Every asserted fact held and every evaluable derived fact held.
    Pass,
    /// An asserted fact failed (or could not be evaluated); derivations are
    /// vacuous for this instantiation.
    Vacuous { failing_assumption: String },
    /// A derived fact failed and its derivation uses only SOUND/AXIOM rules.
    SoundViolation { fact: String, rule: String },
    /// A derived fact failed but its derivation is conjecturally tainted.
    ConjecturalViolation { fact: String, rule: String },
}

impl ModelCheckOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, ModelCheckOutcome::Pass)
    }
}

/// Asserts the facts, saturates, and replays everything in-model.
pub fn model_check(
    assumptions: &BTreeSet<GroundFact>,
    rules: &[Rule],
    inst: &Instantiation,
    d_max: usize,
    include_conjectural: bool,
) -> ModelCheckOutcome {
    for f in assumptions {
        match eval_fact(f, inst) {
            Ok(Some(true)) | Ok(None) => {}
            Ok(Some(false)) => {
                return ModelCheckOutcome::Vacuous {
                    failing_assumption: f.to_string(),
                }
            }
            Err(e) => {
                return ModelCheckOutcome::Vacuous {
                    failing_assumption: format!("{f} ({e})"),
                }
            }
        }
    }
    let sat = saturate(assumptions, rules, d_max, include_conjectural);
    for (fact, deriv) in sat.derived_only() {
        match eval_fact(fact, inst) {
            Ok(Some(false)) => {
                let rule = match deriv {
                    Derivation::Derived { rule, .. } => rule.to_string(),
                    Derivation::Structural { rule } => rule.to_string(),
                    Derivation::Assumed => "assumed".to_string(),
                };
                if sat.conjectural_tainted(fact, rules) {
                    return ModelCheckOutcome::ConjecturalViolation {
                        fact: fact.to_string(),
                        rule,
                    };
                }
                return ModelCheckOutcome::SoundViolation {
                    fact: fact.to_string(),
                    rule,
                };
            }
            // Opaque facts and evaluation failures (e.g. an inverse that
            // exists abstractly but not in the monomial class) are recorded
            // as unevaluable, not as violations.
            _ => {}
        }
    }
    ModelCheckOutcome::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rulebook::rulebook;
    use crate::symbol::GrowthSymbol;

    fn atom(s: &str) -> Term {
        Term::atom(s)
    }

    fn dd(t: Term) -> GroundFact {
        Fact::Unary(Property::DenselyDefined, t)
    }

    fn sa(t: Term) -> GroundFact {
        Fact::Unary(Property::Selfadjoint, t)
    }

    #[test]
    fn theorem_style_derivation_of_reverse_commutation() {
        // selfadjoint(A), selfadjoint(B), dd(A*B), selfadjoint(A*B)
        // ⊢ subset(B*A, A*B).
        let ab = Term::compose(atom("A"), atom("B"));
        let ba = Term::compose(atom("B"), atom("A"));
        let mut facts = BTreeSet::new();
        facts.insert(sa(atom("A")));
        facts.insert(sa(atom("B")));
        facts.insert(dd(ab.clone()));
        facts.insert(sa(ab.clone()));
        let rules = rulebook();
        let sat = saturate(&facts, &rules, DEFAULT_DEPTH, false);
        let want = Fact::Binary(Relation::Subset, ba, ab);
        assert!(sat.contains(&want), "R-THM4 should fire");
        let tree = sat.explain(&want, &rules).unwrap();
        assert!(tree.contains("R-THM4"), "tree names the rule: {tree}");
    }

    #[test]
    fn self_adjointness_of_a_star_a_derives() {
        let mut facts = BTreeSet::new();
        facts.insert(dd(atom("A")));
        facts.insert(Fact::Unary(Property::Closed, atom("A")));
        let rules = rulebook();
        let sat = saturate(&facts, &rules, DEFAULT_DEPTH, false);
        let want = sa(Term::compose(Term::adjoint(atom("A")), atom("A")));
        assert!(sat.contains(&want));
        let want2 = sa(Term::compose(atom("A"), Term::adjoint(atom("A"))));
        assert!(sat.contains(&want2));
    }

    #[test]
    fn closed_operator_equals_its_closure() {
        let mut facts = BTreeSet::new();
        facts.insert(Fact::Unary(Property::Closed, atom("A")));
        let rules = rulebook();
        let sat = saturate(&facts, &rules, DEFAULT_DEPTH, false);
        let want = Fact::Binary(Relation::Equal, Term::closure(atom("A")), atom("A"));
        assert!(sat.contains(&want));
    }

    #[test]
    fn explain_assumed_and_underived() {
        let mut facts = BTreeSet::new();
        facts.insert(dd(atom("A")));
        let rules = rulebook();
        let sat = saturate(&facts, &rules, DEFAULT_DEPTH, false);
        let tree = sat.explain(&dd(atom("A")), &rules).unwrap();
        assert!(tree.contains("[assumed]"));
        let missing = sa(atom("A"));
        assert!(matches!(
            sat.explain(&missing, &rules),
            Err(EngineError::NotDerived(_))
        ));
    }

    #[test]
    fn monotone_in_assumptions() {
        let rules = rulebook();
        let mut small = BTreeSet::new();
        small.insert(dd(atom("A")));
        small.insert(Fact::Unary(Property::Closed, atom("A")));
        let mut large = small.clone();
        large.insert(sa(atom("B")));
        let sat_small = saturate(&small, &rules, DEFAULT_DEPTH, false);
        let sat_large = saturate(&large, &rules, DEFAULT_DEPTH, false);
        for f in sat_small.facts.keys() {
            assert!(sat_large.facts.contains_key(f), "lost fact {f}");
        }
    }

    #[test]
    fn fixpoint_is_order_independent() {
        let base = rulebook();
        let mut facts = BTreeSet::new();
        facts.insert(sa(atom("A")));
        facts.insert(sa(atom("B")));
        facts.insert(dd(Term::compose(atom("A"), atom("B"))));
        facts.insert(sa(Term::compose(atom("A"), atom("B"))));
        facts.insert(dd(Term::compose(atom("B"), atom("A"))));
        facts.insert(sa(Term::compose(atom("B"), atom("A"))));
        let reference: BTreeSet<GroundFact> = saturate(&facts, &base, DEFAULT_DEPTH, false)
            .facts
            .into_keys()
            .collect();
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let mut shuffled = base.clone();
            shuffled.shuffle(&mut rng);
            let got: BTreeSet<GroundFact> = saturate(&facts, &shuffled, DEFAULT_DEPTH, false)
                .facts
                .into_keys()
                .collect();
            assert_eq!(got, reference);
        }
    }

    #[test]
    fn unjustified_inverse_is_rejected() {
        let mut facts = BTreeSet::new();
        facts.insert(dd(Term::inverse(atom("B"))));
        assert!(matches!(
            validate_assumptions(&facts),
            Err(EngineError::UnjustifiedInverse(_))
        ));
        facts.insert(Fact::Unary(Property::InvertibleBounded, atom("B")));
        assert!(validate_assumptions(&facts).is_ok());
    }

    #[test]
    fn model_check_vacuous_names_the_hypothesis() {
        let mut facts = BTreeSet::new();
        facts.insert(Fact::Unary(Property::Bounded, atom("A")));
        let mut inst = Instantiation::new();
        inst.insert(
            "A".into(),
            MonomialOperator::diag(GrowthSymbol::poly1(1, 2)).unwrap(),
        );
        let rules = rulebook();
        match model_check(&facts, &rules, &inst, DEFAULT_DEPTH, false) {
            ModelCheckOutcome::Vacuous { failing_assumption } => {
                assert!(failing_assumption.contains("bounded(A)"));
            }
            other => panic!("expected vacuous, got {other:?}"),
        }
    }

    #[test]
    fn model_check_passes_on_honest_instantiation() {
        let mut facts = BTreeSet::new();
        facts.insert(dd(atom("A")));
        facts.insert(Fact::Unary(Property::Closed, atom("A")));
        let mut inst = Instantiation::new();
        inst.insert(
            "A".into(),
            MonomialOperator::diag(GrowthSymbol::poly1(1, 2)).unwrap(),
        );
        let rules = rulebook();
        assert!(model_check(&facts, &rules, &inst, DEFAULT_DEPTH, false).is_pass());
    }

    #[test]
    fn depth_bound_truncates_and_reports() {
        let mut facts = BTreeSet::new();
        facts.insert(dd(atom("A")));
        facts.insert(Fact::Unary(Property::Closed, atom("A")));
        let rules = rulebook();
        let sat_tight = saturate(&facts, &rules, 1, false);
        assert!(sat_tight.truncated > 0, "depth-1 universe must truncate");
    }
}
