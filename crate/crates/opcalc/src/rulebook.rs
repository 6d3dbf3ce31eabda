//! The shipped rulebook: structural closure laws plus the adjoint/closure/
//! normality results for unbounded operator products, as premise→conclusion
//! data with statements and soundness status.
//!
//! Status semantics: `Sound` rules were proved by the sources this artifact
//! mechanizes and are hard-verified in-model; `Axiom` rules import classical
//! results from outside those proofs (spot-checked in-model, never claimed
//! as verified theorems); `Conjectural` rules encode the two statements left
//! unproven (the relative-boundedness closure-inclusion propositions) and
//! are excluded from derivations unless explicitly enabled.

use crate::engine::{Fact, FactPattern, Property, Relation, Rule, RuleStatus};
use crate::term::Pattern;

fn v(i: u8) -> Pattern {
    Pattern::Var(i)
}

fn adj(p: Pattern) -> Pattern {
    Pattern::Adjoint(Box::new(p))
}

fn cl(p: Pattern) -> Pattern {
    Pattern::Closure(Box::new(p))
}

fn comp(a: Pattern, b: Pattern) -> Pattern {
    Pattern::Compose(Box::new(a), Box::new(b))
}

fn inv(p: Pattern) -> Pattern {
    Pattern::Inverse(Box::new(p))
}

fn dd(t: Pattern) -> FactPattern {
    Fact::Unary(Property::DenselyDefined, t)
}

fn closeable(t: Pattern) -> FactPattern {
    Fact::Unary(Property::Closeable, t)
}

fn closed(t: Pattern) -> FactPattern {
    Fact::Unary(Property::Closed, t)
}

fn symmetric(t: Pattern) -> FactPattern {
    Fact::Unary(Property::Symmetric, t)
}

fn sa(t: Pattern) -> FactPattern {
    Fact::Unary(Property::Selfadjoint, t)
}

fn normal(t: Pattern) -> FactPattern {
    Fact::Unary(Property::Normal, t)
}

fn quasinormal(t: Pattern) -> FactPattern {
    Fact::Unary(Property::Quasinormal, t)
}

fn bounded(t: Pattern) -> FactPattern {
    Fact::Unary(Property::Bounded, t)
}

fn unitary(t: Pattern) -> FactPattern {
    Fact::Unary(Property::Unitary, t)
}

fn invb(t: Pattern) -> FactPattern {
    Fact::Unary(Property::InvertibleBounded, t)
}

fn drange(t: Pattern) -> FactPattern {
    Fact::Unary(Property::DenseRange, t)
}

fn injective(t: Pattern) -> FactPattern {
    Fact::Unary(Property::Injective, t)
}

fn fkern(t: Pattern) -> FactPattern {
    Fact::Unary(Property::FiniteKernel, t)
}

fn permutes(a: Pattern, b: Pattern) -> FactPattern {
    Fact::Unary(Property::PermutesWith(b), a)
}

fn subset(a: Pattern, b: Pattern) -> FactPattern {
    Fact::Binary(Relation::Subset, a, b)
}

fn equal(a: Pattern, b: Pattern) -> FactPattern {
    Fact::Binary(Relation::Equal, a, b)
}

fn commutes(a: Pattern, b: Pattern) -> FactPattern {
    Fact::Binary(Relation::CommutesExt, a, b)
}

fn relb(a: Pattern, b: Pattern) -> FactPattern {
    Fact::Binary(Relation::RelBounded, a, b)
}

fn intertwines(k: Pattern, a: Pattern, b: Pattern) -> FactPattern {
    Fact::Binary(Relation::Intertwines(k), a, b)
}

fn rule(
    id: &'static str,
    status: RuleStatus,
    statement: &'static str,
    premises: Vec<FactPattern>,
    conclusions: Vec<FactPattern>,
) -> Rule {
    Rule {
        id,
        status,
        statement,
        premises,
        conclusions,
    }
}

/// The fixed, versioned rule set.  Ids are stable keys used by the catalog
/// and the reports.
pub fn rulebook() -> Vec<Rule> {
    use RuleStatus::{Axiom, Conjectural, Sound};
    let x = || v(0);
    let y = || v(1);
    let z = || v(2);

    let mut rules = vec![
        // -- structural laws ------------------------------------------------
        rule(
            "S-EQ-SYM",
            Axiom,
            "operator equality is symmetric",
            vec![equal(x(), y())],
            vec![equal(y(), x())],
        ),
        rule(
            "S-EQ-SUB",
            Axiom,
            "equal operators extend each other",
            vec![equal(x(), y())],
            vec![subset(x(), y()), subset(y(), x())],
        ),
        rule(
            "S-SUB-ANTISYM",
            Axiom,
            "mutual extension is equality",
            vec![subset(x(), y()), subset(y(), x())],
            vec![equal(x(), y())],
        ),
        rule(
            "S-SUB-TRANS",
            Axiom,
            "extension is transitive",
            vec![subset(x(), y()), subset(y(), z())],
            vec![subset(x(), z())],
        ),
        rule(
            "S-ADJ-ANTITONE",
            Axiom,
            "adjoints reverse extension: S ⊂ T gives T* ⊂ S*",
            vec![subset(x(), y())],
            vec![subset(adj(y()), adj(x()))],
        ),
        rule(
            "S-CL-MINIMAL",
            Axiom,
            "the closure is the minimal closed extension: S ⊂ T closed gives cl(S) ⊂ T",
            vec![closed(y()), subset(x(), y())],
            vec![subset(cl(x()), y())],
        ),
        rule(
            "S-CLOSED-EQ-CL",
            Axiom,
            "a closed operator equals its closure",
            vec![closed(x())],
            vec![equal(cl(x()), x()), closeable(x())],
        ),
        rule(
            "S-CL-EXTENDS",
            Axiom,
            "a closeable operator extends into its closure",
            vec![closeable(x())],
            vec![subset(x(), cl(x()))],
        ),
        rule(
            "S-SYM-DEF",
            Axiom,
            "symmetric means extended by the adjoint",
            vec![symmetric(x())],
            vec![subset(x(), adj(x()))],
        ),
        rule(
            "S-SYM-DEF-REV",
            Axiom,
            "extended by the adjoint means symmetric",
            vec![subset(x(), adj(x()))],
            vec![symmetric(x())],
        ),
        rule(
            "S-DOUBLE-ADJ-CLOSED",
            Axiom,
            "a closed densely defined operator is its own double adjoint",
            vec![closed(x()), dd(x())],
            vec![equal(adj(adj(x())), x())],
        ),
        rule(
            "S-DOUBLE-ADJ-CL",
            Axiom,
            "the double adjoint of a closeable densely defined operator is its closure",
            vec![closeable(x()), dd(x())],
            vec![equal(adj(adj(x())), cl(x()))],
        ),
        rule(
            "S-COMMUTE-DEF",
            Axiom,
            "extension commutation unfolds to the product inclusion",
            vec![commutes(x(), y())],
            vec![subset(comp(x(), y()), comp(y(), x()))],
        ),
        rule(
            "S-COMMUTE-DEF-REV",
            Axiom,
            "the product inclusion folds into extension commutation",
            vec![subset(comp(x(), y()), comp(y(), x()))],
            vec![commutes(x(), y())],
        ),
        rule(
            "S-SELFADJ",
            Axiom,
            "self-adjoint operators are symmetric, closed, normal and densely defined",
            vec![sa(x())],
            vec![symmetric(x()), closed(x()), normal(x()), dd(x())],
        ),
        rule(
            "S-NORMAL",
            Axiom,
            "normal operators are closed, quasinormal and densely defined",
            vec![normal(x())],
            vec![closed(x()), quasinormal(x()), dd(x())],
        ),
        rule(
            "S-UNITARY",
            Axiom,
            "unitary operators are bounded invertible normal bijections",
            vec![unitary(x())],
            vec![
                invb(x()),
                bounded(x()),
                normal(x()),
                dd(x()),
                drange(x()),
                injective(x()),
            ],
        ),
        rule(
            "S-INVB",
            Axiom,
            "a bounded everywhere-defined inverse forces injectivity, dense range, trivial kernel and closedness",
            vec![invb(x())],
            vec![injective(x()), drange(x()), fkern(x()), closed(x())],
        ),
        rule(
            "S-BOUNDED-CLOSEABLE",
            Axiom,
            "bounded densely defined operators are closeable",
            vec![bounded(x()), dd(x())],
            vec![closeable(x())],
        ),
        // -- the product-adjoint calculus -----------------------------------
        rule(
            "R-ADJ-PROD",
            Axiom,
            "(AB)* extends B*A* whenever A, B and AB are densely defined",
            vec![dd(x()), dd(y()), dd(comp(x(), y()))],
            vec![subset(comp(adj(y()), adj(x())), adj(comp(x(), y())))],
        ),
        rule(
            "R-LEM1",
            Sound,
            "with D(AB) and D(B*A*) dense, cl(AB) and cl(A)cl(B) are both sandwiched between AB and (B*A*)*",
            vec![
                dd(x()),
                dd(y()),
                closeable(x()),
                closeable(y()),
                dd(comp(x(), y())),
                dd(comp(adj(y()), adj(x()))),
            ],
            vec![
                closeable(comp(x(), y())),
                subset(comp(x(), y()), cl(comp(x(), y()))),
                subset(cl(comp(x(), y())), adj(comp(adj(y()), adj(x())))),
                subset(comp(x(), y()), comp(cl(x()), cl(y()))),
                subset(comp(cl(x()), cl(y())), adj(comp(adj(y()), adj(x())))),
            ],
        ),
        rule(
            "R-THM1",
            Sound,
            "(B*A*)* = cl(A)cl(B) forces cl(A)cl(B) closed with adjoint cl(B*A*)",
            vec![
                dd(x()),
                dd(y()),
                closeable(x()),
                closeable(y()),
                dd(comp(x(), y())),
                dd(comp(adj(y()), adj(x()))),
                equal(adj(comp(adj(y()), adj(x()))), comp(cl(x()), cl(y()))),
            ],
            vec![
                closed(comp(cl(x()), cl(y()))),
                equal(adj(comp(cl(x()), cl(y()))), cl(comp(adj(y()), adj(x())))),
            ],
        ),
        rule(
            "R-THM2",
            Axiom,
            "(TS)* = S*T* for closed S whose range has finite codimension; encoded for codimension zero via a bounded everywhere-defined inverse of S*",
            vec![dd(x()), dd(y()), dd(comp(x(), y())), closed(y()), invb(adj(y()))],
            vec![equal(adj(comp(x(), y())), comp(adj(y()), adj(x())))],
        ),
        rule(
            "R-COR2",
            Sound,
            "(AB)* = B*A* for closed factors with B*A* closed when A is surjective with trivial kernel (zero codimension of the adjoint range)",
            vec![
                closed(x()),
                closed(y()),
                dd(x()),
                dd(y()),
                dd(comp(x(), y())),
                dd(comp(adj(y()), adj(x()))),
                closed(comp(adj(y()), adj(x()))),
                invb(x()),
                fkern(x()),
            ],
            vec![equal(adj(comp(x(), y())), comp(adj(y()), adj(x())))],
        ),
        rule(
            "R-LEM2",
            Sound,
            "(AB)* = B*A* when the inner factor B is closed with a bounded everywhere-defined inverse",
            vec![dd(x()), dd(y()), closed(y()), invb(y())],
            vec![
                dd(comp(x(), y())),
                equal(adj(comp(x(), y())), comp(adj(y()), adj(x()))),
            ],
        ),
        rule(
            "R-COR1",
            Sound,
            "A*A and AA* of a closed densely defined operator are self-adjoint",
            vec![dd(x()), closed(x())],
            vec![
                sa(comp(adj(x()), x())),
                sa(comp(x(), adj(x()))),
                dd(comp(adj(x()), x())),
                dd(comp(x(), adj(x()))),
            ],
        ),
        // -- self-adjoint and normal products --------------------------------
        rule(
            "R-THM3",
            Sound,
            "self-adjoint A extension-commuting with self-adjoint B makes AB symmetric with AB ⊂ cl(AB) ⊂ cl(BA) ⊂ (AB)*",
            vec![sa(x()), sa(y()), dd(comp(x(), y())), commutes(x(), y())],
            vec![
                symmetric(comp(x(), y())),
                closeable(comp(x(), y())),
                dd(comp(y(), x())),
                closeable(comp(y(), x())),
                subset(comp(x(), y()), cl(comp(x(), y()))),
                subset(cl(comp(x(), y())), cl(comp(y(), x()))),
                subset(cl(comp(y(), x())), adj(comp(x(), y()))),
            ],
        ),
        rule(
            "R-THM4",
            Sound,
            "if A, B and their product AB are self-adjoint then B commutes with A (BA ⊂ AB)",
            vec![sa(x()), sa(y()), dd(comp(x(), y())), sa(comp(x(), y()))],
            vec![commutes(y(), x())],
        ),
        rule(
            "R-THM5A",
            Sound,
            "a unitary A extension-commuting with a normal B has normal product AB",
            vec![unitary(x()), normal(y()), commutes(x(), y())],
            vec![normal(comp(x(), y()))],
        ),
        rule(
            "R-THM5B",
            Sound,
            "a normal A with unitary B extension-commuting back has normal product AB",
            vec![normal(x()), unitary(y()), commutes(y(), x())],
            vec![normal(comp(x(), y()))],
        ),
        rule(
            "R-THM5-2A",
            Sound,
            "with a unitary left factor, normality of AB transfers to BA by unitary conjugation",
            vec![unitary(x()), dd(y()), normal(comp(x(), y()))],
            vec![normal(comp(y(), x()))],
        ),
        rule(
            "R-THM5-2B",
            Sound,
            "with a unitary left factor, normality of BA transfers to AB by unitary conjugation",
            vec![unitary(x()), dd(y()), normal(comp(y(), x()))],
            vec![normal(comp(x(), y()))],
        ),
        rule(
            "R-NCLOSE",
            Sound,
            "a bounded normal B extension-commuting with a normal A gives cl(BA) normal",
            vec![normal(x()), normal(y()), bounded(y()), commutes(y(), x())],
            vec![
                dd(comp(y(), x())),
                closeable(comp(y(), x())),
                normal(cl(comp(y(), x()))),
            ],
        ),
        rule(
            "R-DNVN",
            Axiom,
            "a self-adjoint restriction of a product of two self-adjoint operators equals the product",
            vec![sa(x()), sa(y()), sa(z()), subset(z(), comp(x(), y()))],
            vec![equal(z(), comp(x(), y()))],
        ),
        rule(
            "R-BINV-NORM",
            Sound,
            "a bounded invertible normal B extension-commuting with a normal A gives BA normal",
            vec![
                normal(x()),
                normal(y()),
                bounded(y()),
                invb(y()),
                commutes(y(), x()),
            ],
            vec![normal(comp(y(), x()))],
        ),
        rule(
            "R-PRO-AINV",
            Sound,
            "a bounded invertible normal A extension-commuting with a normal B gives BA normal",
            vec![
                normal(x()),
                bounded(x()),
                invb(x()),
                normal(y()),
                commutes(x(), y()),
            ],
            vec![normal(comp(y(), x()))],
        ),
        rule(
            "R-EXMAD",
            Axiom,
            "for normal A and bounded normal B with BA = AB, both products are normal",
            vec![normal(x()), normal(y()), bounded(y()), equal(comp(y(), x()), comp(x(), y()))],
            vec![normal(comp(y(), x())), normal(comp(x(), y()))],
        ),
        // -- polar-factor necessary conditions --------------------------------
        rule(
            "R-THM7",
            Sound,
            "necessary direction: a normal product of dense-range normal factors forces the product of Hermitian polar factors self-adjoint and the reverse factor to extension-commute",
            vec![
                normal(v(0)),
                normal(v(1)),
                drange(v(0)),
                drange(v(1)),
                dd(comp(v(0), v(1))),
                normal(comp(v(0), v(1))),
                sa(v(2)),
                sa(v(3)),
                equal(comp(v(2), v(2)), comp(adj(v(0)), v(0))),
                equal(comp(v(3), v(3)), comp(adj(v(1)), v(1))),
            ],
            vec![sa(comp(v(2), v(3))), commutes(v(3), v(2))],
        ),
        rule(
            "R-COR3",
            Sound,
            "necessary direction: the combined unitary polar factor adjoints intertwine the Hermitian factor products of a normal product",
            vec![
                normal(v(0)),
                normal(v(1)),
                drange(v(0)),
                drange(v(1)),
                dd(comp(v(0), v(1))),
                normal(comp(v(0), v(1))),
                unitary(v(4)),
                unitary(v(5)),
                sa(v(2)),
                sa(v(3)),
                equal(v(0), comp(v(4), v(2))),
                equal(v(1), comp(v(5), v(3))),
            ],
            vec![intertwines(
                comp(adj(v(4)), adj(v(5))),
                comp(adj(comp(v(2), v(3))), comp(v(2), v(3))),
                comp(comp(v(2), v(3)), adj(comp(v(2), v(3)))),
            )],
        ),
        rule(
            "R-FP",
            Axiom,
            "a bounded operator intertwining two normal operators also intertwines their adjoints",
            vec![bounded(z()), normal(x()), normal(y()), intertwines(z(), x(), y())],
            vec![intertwines(z(), adj(x()), adj(y()))],
        ),
        // -- closure inclusions via relative boundedness ----------------------
        rule(
            "R-PROP2-1",
            Sound,
            "bounded cl(B) with closed A gives cl(AB) ⊂ A·cl(B), which is closed",
            vec![
                dd(x()),
                dd(y()),
                closed(x()),
                closeable(y()),
                bounded(cl(y())),
                dd(comp(x(), y())),
            ],
            vec![
                closeable(comp(x(), y())),
                subset(cl(comp(x(), y())), comp(x(), cl(y()))),
                closed(comp(x(), cl(y()))),
            ],
        ),
        rule(
            "R-PROP2-2",
            Sound,
            "bounded cl(B^{-1}) with closed A and closeable AB gives A·cl(B) ⊂ cl(AB)",
            vec![
                dd(x()),
                dd(y()),
                closed(x()),
                closeable(y()),
                injective(y()),
                closeable(inv(y())),
                bounded(cl(inv(y()))),
                closeable(comp(x(), y())),
            ],
            vec![subset(comp(x(), cl(y())), cl(comp(x(), y())))],
        ),
        rule(
            "R-PROP3-1",
            Conjectural,
            "claimed: B relatively bounded with respect to AB gives cl(AB) ⊂ cl(A)cl(B); stated without proof in the source, left unproven",
            vec![
                dd(x()),
                dd(y()),
                closeable(x()),
                closeable(y()),
                dd(comp(x(), y())),
                closeable(comp(x(), y())),
                relb(y(), comp(x(), y())),
            ],
            vec![subset(cl(comp(x(), y())), comp(cl(x()), cl(y())))],
        ),
        rule(
            "R-PROP3-2",
            Conjectural,
            "claimed: closeable B^{-1} relatively bounded with respect to A gives cl(A)cl(B) ⊂ cl(AB); no proof was given in the source",
            vec![
                dd(x()),
                dd(y()),
                closeable(x()),
                closeable(y()),
                injective(y()),
                closeable(inv(y())),
                relb(inv(y()), x()),
                closeable(comp(x(), y())),
            ],
            vec![subset(comp(cl(x()), cl(y())), cl(comp(x(), y())))],
        ),
        rule(
            "R-THM10",
            Axiom,
            "relative-boundedness import: D(T) ⊂ D(B) with T closed and B closeable makes B T-bounded; encoded for the structural inclusion D(AB) ⊂ D(B)",
            vec![dd(y()), closeable(y()), closed(comp(x(), y()))],
            vec![relb(y(), comp(x(), y()))],
        ),
        rule(
            "R-LEM3-1",
            Sound,
            "with D(B*A*) dense, cl(AB) ⊂ cl(cl(A)cl(B))",
            vec![
                dd(x()),
                dd(y()),
                closeable(x()),
                closeable(y()),
                dd(comp(x(), y())),
                dd(comp(adj(y()), adj(x()))),
            ],
            vec![
                closeable(comp(cl(x()), cl(y()))),
                subset(cl(comp(x(), y())), cl(comp(cl(x()), cl(y())))),
            ],
        ),
        rule(
            "R-LEM3-2",
            Sound,
            "bounded cl(B) with closed A gives cl(AB) ⊂ A·cl(B) (special case of the adjoint calculus)",
            vec![
                dd(x()),
                dd(y()),
                closed(x()),
                closeable(y()),
                bounded(cl(y())),
                dd(comp(x(), y())),
            ],
            vec![
                closeable(comp(x(), y())),
                subset(cl(comp(x(), y())), comp(x(), cl(y()))),
            ],
        ),
        rule(
            "R-LEM3-3",
            Sound,
            "cl(AB) ⊂ cl(A)cl(B) forces cl(B) relatively cl(AB)-bounded, hence B relatively AB-bounded",
            vec![
                dd(x()),
                dd(y()),
                closeable(x()),
                closeable(y()),
                dd(comp(x(), y())),
                closeable(comp(x(), y())),
                subset(cl(comp(x(), y())), comp(cl(x()), cl(y()))),
            ],
            vec![
                relb(cl(y()), cl(comp(x(), y()))),
                relb(y(), comp(x(), y())),
            ],
        ),
        rule(
            "R-LEM3-4",
            Sound,
            "cl(A)cl(B) ⊂ cl(AB) forces cl(A)cl(B) closeable with closure cl(AB)",
            vec![
                dd(x()),
                dd(y()),
                closeable(x()),
                closeable(y()),
                dd(comp(x(), y())),
                closeable(comp(x(), y())),
                subset(comp(cl(x()), cl(y())), cl(comp(x(), y()))),
            ],
            vec![
                closeable(comp(cl(x()), cl(y()))),
                equal(cl(comp(cl(x()), cl(y()))), cl(comp(x(), y()))),
            ],
        ),
        rule(
            "R-LEM4",
            Sound,
            "if cl(B) is cl(A)cl(B)-bounded then cl(A)cl(B) is closed and extends cl(AB)",
            vec![
                dd(x()),
                dd(y()),
                closeable(x()),
                closeable(y()),
                dd(comp(x(), y())),
                closeable(comp(x(), y())),
                relb(cl(y()), comp(cl(x()), cl(y()))),
            ],
            vec![
                closed(comp(cl(x()), cl(y()))),
                subset(cl(comp(x(), y())), comp(cl(x()), cl(y()))),
            ],
        ),
        // -- quasinormality and permutability ----------------------------------
        rule(
            "R-PROP4",
            Sound,
            "a closed quasinormal operator with dense range is normal",
            vec![closed(x()), quasinormal(x()), drange(x())],
            vec![normal(x())],
        ),
        rule(
            "R-THM12",
            Axiom,
            "if A, B and AB are normal with AB = BA then the spectral resolutions of A and B all commute (permutability; opaque in-model)",
            vec![
                normal(x()),
                normal(y()),
                normal(comp(x(), y())),
                equal(comp(x(), y()), comp(y(), x())),
            ],
            vec![permutes(x(), y()), permutes(y(), x())],
        ),
        rule(
            "R-PROP5",
            Sound,
            "two invertible normal operators with BA = AB have both products normal",
            vec![
                normal(x()),
                normal(y()),
                invb(x()),
                invb(y()),
                equal(comp(y(), x()), comp(x(), y())),
            ],
            vec![normal(comp(y(), x())), normal(comp(x(), y()))],
        ),
        rule(
            "R-THM13",
            Axiom,
            "commuting-products variant for two invertible normal operators: AB = BA forces AB* = B*A and BA* = A*B",
            vec![
                normal(x()),
                normal(y()),
                invb(x()),
                invb(y()),
                equal(comp(x(), y()), comp(y(), x())),
            ],
            vec![
                equal(comp(x(), adj(y())), comp(adj(y()), x())),
                equal(comp(y(), adj(x())), comp(adj(x()), y())),
            ],
        ),
        rule(
            "R-THM14",
            Sound,
            "one-invertible variant: for normal A, B with B invertible and AB = BA, A*B ⊂ BA* and AB* ⊂ B*A",
            vec![
                normal(x()),
                normal(y()),
                invb(y()),
                equal(comp(x(), y()), comp(y(), x())),
            ],
            vec![
                subset(comp(adj(x()), y()), comp(y(), adj(x()))),
                subset(comp(x(), adj(y())), comp(adj(y()), x())),
            ],
        ),
        rule(
            "R-THM15",
            Sound,
            "for normal A, B with only B invertible and AB = BA, the product AB is normal",
            vec![
                normal(x()),
                normal(y()),
                invb(y()),
                equal(comp(x(), y()), comp(y(), x())),
            ],
            vec![normal(comp(x(), y()))],
        ),
        rule(
            "R-COR-PERM",
            Sound,
            "derived: for normal A, B with B invertible and AB = BA, A and B permute",
            vec![
                normal(x()),
                normal(y()),
                invb(y()),
                equal(comp(x(), y()), comp(y(), x())),
            ],
            vec![permutes(x(), y()), permutes(y(), x())],
        ),
    ];
    rules.sort_by_key(|r| r.id);
    rules
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_ids_are_unique() {
        let rules = rulebook();
        let mut ids: Vec<&str> = rules.iter().map(|r| r.id).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn conjectural_rules_are_exactly_the_two_unproven_propositions() {
        let rules = rulebook();
        let conj: Vec<&str> = rules
            .iter()
            .filter(|r| r.status == RuleStatus::Conjectural)
            .map(|r| r.id)
            .collect();
        assert_eq!(conj, vec!["R-PROP3-1", "R-PROP3-2"]);
    }

    #[test]
    fn rulebook_contains_the_reverse_commutation_rule() {
        let rules = rulebook();
        let r = rules.iter().find(|r| r.id == "R-THM4").unwrap();
        assert_eq!(r.status, RuleStatus::Sound);
        assert!(!r.statement.is_empty());
    }

    #[test]
    fn conclusion_variables_are_bound_by_premises() {
        for r in rulebook() {
            let mut bound: Vec<u8> = r.premises.iter().flat_map(|p| p.vars()).collect();
            bound.sort_unstable();
            bound.dedup();
            for c in &r.conclusions {
                for v in c.vars() {
                    assert!(
                        bound.contains(&v),
                        "rule {} concludes with unbound variable {v}",
                        r.id
                    );
                }
            }
        }
    }

    #[test]
    fn every_rule_has_statement_and_nonempty_content() {
        for r in rulebook() {
            assert!(!r.statement.is_empty(), "{} lacks a statement", r.id);
            assert!(!r.conclusions.is_empty(), "{} concludes nothing", r.id);
        }
    }
}
