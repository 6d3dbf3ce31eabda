//! Range/inverse state classification of closed operators and the allowed
//! state tables.
//!
//! For an operator `T` and its adjoint one records the range class
//! (I: whole space, II: properly dense, III: closure not dense) and the
//! inverse class (1: bounded inverse on the range, 2: injective only,
//! 3: not injective).  Of the 81 conceivable joint states, only 13 occur for
//! densely defined operators in Hilbert space.  That table is derived here
//! rather than copied:
//!
//! For closed densely defined `T` in Hilbert space,
//!   (a) `N(T*) = R(T)^⊥`, so `i* = 3 ⟺ r = III` (and symmetrically);
//!   (b) `R(T) = H ⟺ T*` is injective with bounded inverse (`r = I ⟺
//!       i* = 1`), and symmetrically;
//!   (c) properly dense (`= II`) forces the partner's inverse class 2;
//!   (d) the closed range theorem rules out `(I, II)` and `(II, I)` range
//!       pairs.
//! Hence exactly 7 closed states, determined by the range pair:
//!   I₁I₁, I₃III₁, II₂II₂, II₃III₂, III₁I₃, III₂II₃, III₃III₃.
//! A densely defined closable `T` shares its range closure and its
//! bounded-below-ness with `T̄`, while injectivity may be gained and
//! surjectivity lost under restriction.  Working out the compatible
//! restrictions of the 7 closed states adds
//!   II₁I₁, I₂III₁, II₂III₁, II₃III₁, II₂III₂, III₂III₃,
//! for 13 in total.  Sub-tables quoted by the sources come out as corollaries:
//! closures of injective operators with closable inverses occupy exactly
//! {I₁I₁, II₂II₂, III₁I₃, III₂II₃}, and self-adjoint operators exactly
//! {I₁I₁, II₂II₂, III₃III₃}.

use crate::operator::MonomialOperator;
use crate::symbol::Count;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RangeClass {
    I,
    II,
    III,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum InverseClass {
    One,
    Two,
    Three,
}

impl fmt::Display for RangeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RangeClass::I => write!(f, "I"),
            RangeClass::II => write!(f, "II"),
            RangeClass::III => write!(f, "III"),
        }
    }
}

impl fmt::Display for InverseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            InverseClass::One => 1,
            InverseClass::Two => 2,
            InverseClass::Three => 3,
        };
        write!(f, "{n}")
    }
}

/// Joint state of `(T, T*)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StateClass {
    pub t_range: RangeClass,
    pub t_inverse: InverseClass,
    pub tstar_range: RangeClass,
    pub tstar_inverse: InverseClass,
}

impl fmt::Display for StateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{} {}_{}",
            self.t_range, self.t_inverse, self.tstar_range, self.tstar_inverse
        )
    }
}

const fn st(
    t_range: RangeClass,
    t_inverse: InverseClass,
    tstar_range: RangeClass,
    tstar_inverse: InverseClass,
) -> StateClass {
    StateClass {
        t_range,
        t_inverse,
        tstar_range,
        tstar_inverse,
    }
}

use InverseClass::{One, Three, Two};
use RangeClass::{I, II, III};

/// The 7 states of closed densely defined operators in Hilbert space.
pub const ALLOWED_CLOSED: [StateClass; 7] = [
    st(I, One, I, One),
    st(I, Three, III, One),
    st(II, Two, II, Two),
    st(II, Three, III, Two),
    st(III, One, I, Three),
    st(III, Two, II, Three),
    st(III, Three, III, Three),
];

/// The 13 states of densely defined (closable) operators in Hilbert space:
/// the closed 7 plus their compatible restrictions.
pub const ALLOWED_DENSELY_DEFINED: [StateClass; 13] = [
    st(I, One, I, One),
    st(I, Two, III, One),
    st(I, Three, III, One),
    st(II, One, I, One),
    st(II, Two, II, Two),
    st(II, Two, III, One),
    st(II, Two, III, Two),
    st(II, Three, III, One),
    st(II, Three, III, Two),
    st(III, One, I, Three),
    st(III, Two, II, Three),
    st(III, Two, III, Three),
    st(III, Three, III, Three),
];

/// Self-adjoint operators occur only in these diagonal states.
pub const ALLOWED_SELFADJOINT: [StateClass; 3] = [
    st(I, One, I, One),
    st(II, Two, II, Two),
    st(III, Three, III, Three),
];

/// Closures of injective closable operators with closable inverses occur
/// only in these 4 states.
pub const ALLOWED_CLOSABLE_INVERSE: [StateClass; 4] = [
    st(I, One, I, One),
    st(II, Two, II, Two),
    st(III, One, I, Three),
    st(III, Two, II, Three),
];

/// Range class of a closed monomial: III when some row is never produced
/// (a zero in the row symbol, which on ℕ includes the structural rows below
/// a forward shift); otherwise I when the symbol is bounded below over its
/// support and II when it decays.
pub fn range_class(t: &MonomialOperator) -> RangeClass {
    let row = t.symbol();
    if !row.zero_set().is_empty() {
        return RangeClass::III;
    }
    let class = crate::growth::classify(&t.action_symbol());
    if class.inf_positive {
        RangeClass::I
    } else {
        RangeClass::II
    }
}

/// Inverse class of a closed monomial.
pub fn inverse_class(t: &MonomialOperator) -> InverseClass {
    let action = t.action_symbol();
    if action.zero_set().count() != Count::Finite(0) {
        return InverseClass::Three;
    }
    let class = crate::growth::classify(&action);
    if class.inf_positive {
        InverseClass::One
    } else {
        InverseClass::Two
    }
}

/// Classification outcome; classification is always performed on the
/// closure, and a non-closed input is flagged.
#[derive(Debug, Clone)]
pub struct Classified {
    pub state: StateClass,
    pub input_was_closed: bool,
}

/// Classifies `T` (via its closure) and `T*`, then asserts membership in the
/// allowed tables.  A violation means the model arithmetic itself is broken,
/// so it panics rather than returning an error.
pub fn state_classify(t: &MonomialOperator) -> Classified {
    let input_was_closed = t.is_closed();
    let tc = t.closure();
    let adj = tc.adjoint();
    let state = StateClass {
        t_range: range_class(&tc),
        t_inverse: inverse_class(&tc),
        tstar_range: range_class(&adj),
        tstar_inverse: inverse_class(&adj),
    };
    assert!(
        ALLOWED_DENSELY_DEFINED.contains(&state),
        "state {state} of {tc:?} violates the 13-state table: model bug"
    );
    assert!(
        ALLOWED_CLOSED.contains(&state),
        "state {state} of closed {tc:?} violates the closed 7-state table: model bug"
    );
    let props = tc.properties();
    if props.selfadjoint {
        assert!(
            ALLOWED_SELFADJOINT.contains(&state),
            "self-adjoint {tc:?} in non-diagonal state {state}: model bug"
        );
    }
    if props.injective {
        // Closed and injective: the closable-inverse sub-table applies.
        assert!(
            ALLOWED_CLOSABLE_INVERSE.contains(&state),
            "injective closed {tc:?} in state {state} outside the 4-state table: model bug"
        );
    }
    Classified {
        state,
        input_was_closed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{GrowthSymbol, Space};

    #[test]
    fn identity_is_i1i1() {
        let id = MonomialOperator::identity(Space::Unilateral);
        let c = state_classify(&id);
        assert_eq!(c.state, st(I, One, I, One));
        assert!(c.input_was_closed);
    }

    #[test]
    fn decaying_diagonal_is_ii2ii2() {
        let b = MonomialOperator::diag(GrowthSymbol::poly1(1, -2)).unwrap();
        let c = state_classify(&b);
        assert_eq!(c.state, st(II, Two, II, Two));
        // 0 lies in the continuous spectrum exactly in this injective,
        // properly-dense-range situation.
        assert_eq!(range_class(&b), RangeClass::II);
        assert_eq!(inverse_class(&b), InverseClass::Two);
    }

    #[test]
    fn unilateral_shift_is_iii1i3() {
        let s = MonomialOperator::shift_op(Space::Unilateral, 1);
        let c = state_classify(&s);
        assert_eq!(c.state, st(III, One, I, Three));
    }

    #[test]
    fn growing_diagonal_is_i1i1() {
        let a = MonomialOperator::diag(GrowthSymbol::poly1(1, 2)).unwrap();
        assert_eq!(state_classify(&a).state, st(I, One, I, One));
    }

    #[test]
    fn kernel_puts_selfadjoint_in_iii3iii3() {
        let d = MonomialOperator::diag(
            GrowthSymbol::one(Space::Unilateral)
                .with_override(0, crate::scalar::RadicalComplex::zero())
                .unwrap(),
        )
        .unwrap();
        let c = state_classify(&d);
        assert_eq!(c.state, st(III, Three, III, Three));
        assert_eq!(inverse_class(&d), InverseClass::Three);
    }

    #[test]
    fn tables_are_consistent() {
        for s in ALLOWED_CLOSED {
            assert!(ALLOWED_DENSELY_DEFINED.contains(&s));
        }
        for s in ALLOWED_SELFADJOINT {
            assert!(ALLOWED_CLOSED.contains(&s));
        }
        for s in ALLOWED_CLOSABLE_INVERSE {
            assert!(ALLOWED_CLOSED.contains(&s));
        }
        // The closable-inverse 4 are exactly the closed states with an
        // injective operator part.
        let injective_closed: Vec<StateClass> = ALLOWED_CLOSED
            .iter()
            .copied()
            .filter(|s| s.t_inverse != Three)
            .collect();
        assert_eq!(injective_closed, ALLOWED_CLOSABLE_INVERSE.to_vec());
    }

    #[test]
    fn nonclosed_input_is_flagged() {
        let a = MonomialOperator::diag(GrowthSymbol::poly1(1, 1))
            .unwrap()
            .restricted(crate::domain::DomainSpec::new(vec![GrowthSymbol::poly1(1, 3)]))
            .unwrap();
        let c = state_classify(&a);
        assert!(!c.input_was_closed);
        assert_eq!(c.state, st(I, One, I, One));
    }
}
