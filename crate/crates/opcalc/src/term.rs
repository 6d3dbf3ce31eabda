//! The abstract operator-term algebra over `{atom, adjoint, closure,
//! compose, inverse}` and its confluent normalization.
//!
//! Normalization applies exactly two unconditional rewrites, bottom-up:
//! `adjoint(closure(t)) → adjoint(t)` (adjoints see only the closure) and
//! `closure(closure(t)) → closure(t)`.  Everything conditional (for example
//! `adjoint(adjoint(t)) → t` under a closedness fact) happens in the
//! inference engine as an equality fact, never as a term rewrite.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Atom(String),
    Adjoint(Box<Term>),
    Closure(Box<Term>),
    Compose(Box<Term>, Box<Term>),
    Inverse(Box<Term>),
}

impl Term {
    pub fn atom(name: impl Into<String>) -> Term {
        Term::Atom(name.into())
    }

    pub fn adjoint(t: Term) -> Term {
        Term::Adjoint(Box::new(t))
    }

    pub fn closure(t: Term) -> Term {
        Term::Closure(Box::new(t))
    }

    pub fn compose(f: Term, g: Term) -> Term {
        Term::Compose(Box::new(f), Box::new(g))
    }

    pub fn inverse(t: Term) -> Term {
        Term::Inverse(Box::new(t))
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Atom(_) => 0,
            Term::Adjoint(t) | Term::Closure(t) | Term::Inverse(t) => 1 + t.depth(),
            Term::Compose(f, g) => 1 + f.depth().max(g.depth()),
        }
    }

    /// Confluent normal form under the two unconditional rewrites.
    pub fn normalize(&self) -> Term {
        match self {
            Term::Atom(_) => self.clone(),
            Term::Adjoint(t) => {
                let t = t.normalize();
                match t {
                    Term::Closure(inner) => Term::Adjoint(inner),
                    other => Term::Adjoint(Box::new(other)),
                }
            }
            Term::Closure(t) => {
                let t = t.normalize();
                match t {
                    Term::Closure(inner) => Term::Closure(inner),
                    other => Term::Closure(Box::new(other)),
                }
            }
            Term::Compose(f, g) => Term::compose(f.normalize(), g.normalize()),
            Term::Inverse(t) => Term::Inverse(Box::new(t.normalize())),
        }
    }

    pub fn subterms(&self) -> Vec<&Term> {
        let mut out = vec![self];
        match self {
            Term::Atom(_) => {}
            Term::Adjoint(t) | Term::Closure(t) | Term::Inverse(t) => out.extend(t.subterms()),
            Term::Compose(f, g) => {
                out.extend(f.subterms());
                out.extend(g.subterms());
            }
        }
        out
    }

    pub fn atoms(&self) -> Vec<&str> {
        self.subterms()
            .into_iter()
            .filter_map(|t| match t {
                Term::Atom(n) => Some(n.as_str()),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Atom(n) => write!(f, "{n}"),
            Term::Adjoint(t) => write!(f, "adj({t})"),
            Term::Closure(t) => write!(f, "cl({t})"),
            Term::Inverse(t) => write!(f, "inv({t})"),
            Term::Compose(l, r) => {
                // Compose is left-associative in the surface syntax.
                match l.as_ref() {
                    Term::Compose(_, _) => write!(f, "{l}")?,
                    _ => write!(f, "{l}")?,
                }
                write!(f, " * ")?;
                match r.as_ref() {
                    Term::Compose(_, _) => write!(f, "({r})"),
                    _ => write!(f, "{r}"),
                }
            }
        }
    }
}

/// Term patterns for rule premises/conclusions: variables plus the same
/// constructors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pattern {
    Var(u8),
    Adjoint(Box<Pattern>),
    Closure(Box<Pattern>),
    Compose(Box<Pattern>, Box<Pattern>),
    Inverse(Box<Pattern>),
}

impl Pattern {
    pub fn vars(&self) -> Vec<u8> {
        match self {
            Pattern::Var(v) => vec![*v],
            Pattern::Adjoint(p) | Pattern::Closure(p) | Pattern::Inverse(p) => p.vars(),
            Pattern::Compose(a, b) => {
                let mut v = a.vars();
                v.extend(b.vars());
                v
            }
        }
    }

    /// One-way matching: extends `bind` so that `self[bind] = term`.
    pub fn matches(&self, term: &Term, bind: &mut Vec<Option<Term>>) -> bool {
        match (self, term) {
            (Pattern::Var(v), _) => {
                let slot = &mut bind[*v as usize];
                match slot {
                    Some(t) => t == term,
                    None => {
                        *slot = Some(term.clone());
                        true
                    }
                }
            }
            (Pattern::Adjoint(p), Term::Adjoint(t)) => p.matches(t, bind),
            (Pattern::Closure(p), Term::Closure(t)) => p.matches(t, bind),
            (Pattern::Inverse(p), Term::Inverse(t)) => p.matches(t, bind),
            (Pattern::Compose(pa, pb), Term::Compose(ta, tb)) => {
                pa.matches(ta, bind) && pb.matches(tb, bind)
            }
            _ => false,
        }
    }

    /// Instantiates with a complete binding, normalizing the result.
    pub fn instantiate(&self, bind: &[Option<Term>]) -> Term {
        let raw = match self {
            Pattern::Var(v) => bind[*v as usize]
                .clone()
                .expect("conclusion variable bound by premises"),
            Pattern::Adjoint(p) => Term::adjoint(p.instantiate(bind)),
            Pattern::Closure(p) => Term::closure(p.instantiate(bind)),
            Pattern::Inverse(p) => Term::inverse(p.instantiate(bind)),
            Pattern::Compose(a, b) => Term::compose(a.instantiate(bind), b.instantiate(bind)),
        };
        raw.normalize()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Term {
        Term::atom("A")
    }

    #[test]
    fn adjoint_absorbs_closure() {
        let t = Term::adjoint(Term::closure(a()));
        assert_eq!(t.normalize(), Term::adjoint(a()));
    }

    #[test]
    fn closure_is_idempotent() {
        let t = Term::closure(Term::closure(a()));
        assert_eq!(t.normalize(), Term::closure(a()));
    }

    #[test]
    fn double_adjoint_is_not_rewritten() {
        let t = Term::adjoint(Term::adjoint(a()));
        assert_eq!(t.normalize(), t);
    }

    #[test]
    fn normalization_reaches_inside() {
        let t = Term::compose(Term::closure(Term::closure(a())), Term::adjoint(Term::closure(a())));
        assert_eq!(
            t.normalize(),
            Term::compose(Term::closure(a()), Term::adjoint(a()))
        );
    }

    #[test]
    fn depth_counts_constructors() {
        let t = Term::adjoint(Term::compose(Term::adjoint(a()), Term::adjoint(Term::atom("B"))));
        assert_eq!(t.depth(), 3);
    }

    #[test]
    fn pattern_matching_binds_consistently() {
        let p = Pattern::Compose(
            Box::new(Pattern::Var(0)),
            Box::new(Pattern::Adjoint(Box::new(Pattern::Var(0)))),
        );
        let good = Term::compose(a(), Term::adjoint(a()));
        let bad = Term::compose(a(), Term::adjoint(Term::atom("B")));
        let mut bind = vec![None; 1];
        assert!(p.matches(&good, &mut bind));
        let mut bind2 = vec![None; 1];
        assert!(!p.matches(&bad, &mut bind2));
    }

    #[test]
    fn display_roundtrips_associativity() {
        let t = Term::compose(Term::compose(a(), Term::atom("B")), Term::atom("C"));
        assert_eq!(t.to_string(), "A * B * C");
        let u = Term::compose(a(), Term::compose(Term::atom("B"), Term::atom("C")));
        assert_eq!(u.to_string(), "A * (B * C)");
    }
}
