//! Monomial operators `(Tx)_n = a_n·x_{n−k}` on ℓ²(ℕ) or ℓ²(ℤ): a diagonal
//! symbol composed with a shift power, restricted by a [`DomainSpec`].
//!
//! Everything the adjoint/closure calculus needs is decidable here:
//!
//! * the maximal domain of `T` is the diagonal domain of the pulled-back
//!   symbol `ã = σ^{−k}(a)`, since `∥Tx∥² = Σ|ã_m x_m|²`;
//! * the closure of any restriction is the maximal operator with the same
//!   symbol and shift.  Justification: truncations x⁽ᴺ⁾ of any x in the
//!   maximal domain are finitely supported, hence in every DomainSpec
//!   domain; x⁽ᴺ⁾ → x and Tx⁽ᴺ⁾ → Tx because both tails are tails of
//!   convergent series.  So the graph of the maximal operator is contained
//!   in the closure of every restriction, and the maximal operator itself is
//!   closed (a diagonal-domain graph-limit argument).  The matrix oracle
//!   exercises this with explicit truncation batteries.
//!
//! Consequently `T* = maximal(conj(σ^{−k}a), −k)`, `T** = T̄`, and
//! closedness of `T` is the redundancy of its constraints over the maximal
//! symbol — all decided by growth comparison.
//!
//! Canonical form: on ℕ with `k > 0` the rows `n < k` are never produced by
//! the action, so their symbol values are forced to 0; a symbol that
//! vanishes identically forces `k = 0`.  This makes pointwise symbol
//! equality coincide with operator-action equality.

use crate::domain::{family_leq, DomainSpec, DomainWitness};
use crate::growth::{classify, dominated, GrowthWitness};
use crate::scalar::RadicalComplex;
use crate::symbol::{Count, GrowthSymbol, Space, SymbolError};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OpError {
    #[error("space mismatch: {0} vs {1}")]
    SpaceMismatch(Space, Space),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("operator is not invertible in-model: {0}")]
    NotInvertible(String),
}

#[derive(Clone, PartialEq)]
pub struct MonomialOperator {
    space: Space,
    symbol: GrowthSymbol,
    shift: i64,
    domain: DomainSpec,
}

/// Outcome of comparing two monomial operators as extensions of one another.
#[derive(Debug, Clone)]
pub enum ComparisonVerdict {
    Equal,
    /// Left ⊊ right; the witness vector lies in the right domain only.
    ProperSubset(Box<DomainWitness>),
    /// Left ⊋ right.
    ProperSuperset(Box<DomainWitness>),
    Incomparable(IncomparableWitness),
}

#[derive(Debug, Clone)]
pub enum IncomparableWitness {
    ShiftMismatch {
        left: i64,
        right: i64,
    },
    SymbolDifference {
        index: i64,
    },
    /// Domains overlap without inclusion either way.
    DomainOverlap {
        in_left_only: Box<DomainWitness>,
        in_right_only: Box<DomainWitness>,
    },
}

impl ComparisonVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, ComparisonVerdict::Equal)
    }

    /// Left ⊆ right.
    pub fn is_subset(&self) -> bool {
        matches!(self, ComparisonVerdict::Equal | ComparisonVerdict::ProperSubset(_))
    }

    pub fn is_superset(&self) -> bool {
        matches!(self, ComparisonVerdict::Equal | ComparisonVerdict::ProperSuperset(_))
    }
}

impl fmt::Display for ComparisonVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComparisonVerdict::Equal => write!(f, "equal"),
            ComparisonVerdict::ProperSubset(_) => write!(f, "proper-subset"),
            ComparisonVerdict::ProperSuperset(_) => write!(f, "proper-superset"),
            ComparisonVerdict::Incomparable(_) => write!(f, "incomparable"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct OperatorProperties {
    pub densely_defined: bool,
    pub closeable: bool,
    pub closed: bool,
    pub bounded: bool,
    pub symmetric: bool,
    pub selfadjoint: bool,
    pub normal: bool,
    pub quasinormal: bool,
    pub unitary: bool,
    pub invertible_with_bounded_inverse: bool,
    pub injective: bool,
    pub injective_with_unbounded_inverse: bool,
    pub dense_range: bool,
    pub kernel_dimension: Count,
}

/// `T = W·|T|` with `W` a shift-type partial isometry and `|T|` diagonal.
#[derive(Debug, Clone)]
pub struct PolarDecomposition {
    pub isometry: MonomialOperator,
    pub modulus: MonomialOperator,
    /// False when the input was not closed and the polar of the closure was
    /// returned instead.
    pub input_was_closed: bool,
}

/// Outcome of a relative-boundedness test `∥Bx∥ ≤ a∥x∥ + b∥Tx∥` on D(T).
#[derive(Debug, Clone)]
pub enum RelBounded {
    Holds,
    /// The action symbol of B escapes {1, action of T} along a subsequence
    /// of basis vectors.
    ActionEscapes(GrowthWitness),
    /// D(T) ⊄ D(B).
    DomainEscapes(Box<DomainWitness>),
}

impl RelBounded {
    pub fn holds(&self) -> bool {
        matches!(self, RelBounded::Holds)
    }
}

impl MonomialOperator {
    pub fn new(
        symbol: GrowthSymbol,
        shift: i64,
        domain: DomainSpec,
    ) -> Result<MonomialOperator, OpError> {
        let space = symbol.space();
        let mut symbol = symbol;
        let mut shift = shift;
        if space == Space::Unilateral && shift > 0 {
            symbol = zero_below(&symbol, shift)?;
        }
        if symbol.zero_set().count() == Count::Infinite && symbol.coeff().is_zero() {
            // The zero operator acts identically for every shift.
            if symbol.overrides().values().all(|v| v.is_zero()) {
                shift = 0;
            }
        }
        let action = symbol.shift(-shift)?;
        let domain = domain.normalized(&[&action]);
        Ok(MonomialOperator {
            space,
            symbol,
            shift,
            domain,
        })
    }

    pub fn maximal(symbol: GrowthSymbol, shift: i64) -> Result<MonomialOperator, OpError> {
        MonomialOperator::new(symbol, shift, DomainSpec::maximal())
    }

    pub fn diag(symbol: GrowthSymbol) -> Result<MonomialOperator, OpError> {
        MonomialOperator::maximal(symbol, 0)
    }

    /// The pure shift `S^k` (forward for k > 0).
    pub fn shift_op(space: Space, k: i64) -> MonomialOperator {
        MonomialOperator::maximal(GrowthSymbol::one(space), k).expect("shift is valid")
    }

    pub fn identity(space: Space) -> MonomialOperator {
        MonomialOperator::shift_op(space, 0)
    }

    pub fn restricted(&self, extra: DomainSpec) -> Result<MonomialOperator, OpError> {
        MonomialOperator::new(self.symbol.clone(), self.shift, self.domain.union(&extra))
    }

    pub fn space(&self) -> Space {
        self.space
    }

    /// Row symbol `a` of the action `(Tx)_n = a_n x_{n−k}`.
    pub fn symbol(&self) -> &GrowthSymbol {
        &self.symbol
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn domain_spec(&self) -> &DomainSpec {
        &self.domain
    }

    /// Pulled-back symbol `ã = σ^{−k}(a)`; the maximal domain is `D(ã)`.
    pub fn action_symbol(&self) -> GrowthSymbol {
        self.symbol.shift(-self.shift).expect("pullback is valid")
    }

    /// Full constraint family of the effective domain (action symbol plus
    /// the DomainSpec constraints).
    pub fn effective_family(&self) -> Vec<GrowthSymbol> {
        let mut fam = vec![self.action_symbol()];
        fam.extend(self.domain.constraints().iter().cloned());
        fam
    }

    /// Matrix element `⟨T e_i, e_j⟩` (basis vectors lie in every domain, so
    /// this is exact for unbounded operators too).
    pub fn matrix_entry(&self, row: i64, col: i64) -> RadicalComplex {
        if !self.space.contains(row) || !self.space.contains(col) || row - col != self.shift {
            return RadicalComplex::zero();
        }
        self.symbol.eval(row).unwrap_or_else(|_| RadicalComplex::zero())
    }

    pub fn check_space(&self, other: &MonomialOperator) -> Result<(), OpError> {
        if self.space != other.space {
            return Err(OpError::SpaceMismatch(self.space, other.space));
        }
        Ok(())
    }

    /// `T* = maximal(conj(σ^{−k}a), −k)`.  The adjoint of a restriction
    /// equals the adjoint of its closure, so any DomainSpec is discarded.
    pub fn adjoint(&self) -> MonomialOperator {
        MonomialOperator::maximal(self.action_symbol().conj(), -self.shift)
            .expect("adjoint symbol is valid")
    }

    /// `self ∘ inner` (apply `inner` first).  Symbol `a·σ^{k}(b)`, shift
    /// `k + k'`; the effective domain is `{x ∈ D_eff(inner) : inner·x ∈
    /// D_eff(self)}`, realized by keeping inner's constraints and action
    /// symbol and pulling self's constraints through inner.
    pub fn compose(&self, inner: &MonomialOperator) -> Result<MonomialOperator, OpError> {
        self.check_space(inner)?;
        let symbol = self.symbol.mul(&inner.symbol.shift(self.shift)?)?;
        let shift = self.shift + inner.shift;
        let mut constraints: Vec<GrowthSymbol> = inner.domain.constraints().to_vec();
        constraints.push(inner.action_symbol());
        for c in self.domain.constraints() {
            constraints.push(c.mul(&inner.symbol)?.shift(-inner.shift)?);
        }
        MonomialOperator::new(symbol, shift, DomainSpec::new(constraints))
    }

    /// Minimal closed extension: the maximal operator with the same symbol
    /// and shift (see the module docs for the justification).
    pub fn closure(&self) -> MonomialOperator {
        MonomialOperator::maximal(self.symbol.clone(), self.shift).expect("closure is valid")
    }

    /// Closed ⟺ the effective domain already is the maximal one.
    pub fn is_closed(&self) -> bool {
        let action = self.action_symbol();
        let fam = self.effective_family();
        let right: Vec<&GrowthSymbol> = fam.iter().collect();
        family_leq(&[&action], &right, self.space).is_ok()
    }

    /// Extension comparison.  Operators are comparable only when their
    /// canonical symbols and shifts agree; then the verdict is domain
    /// inclusion both ways.
    pub fn compare(&self, other: &MonomialOperator) -> Result<ComparisonVerdict, OpError> {
        self.check_space(other)?;
        if self.shift != other.shift {
            return Ok(ComparisonVerdict::Incomparable(IncomparableWitness::ShiftMismatch {
                left: self.shift,
                right: other.shift,
            }));
        }
        if self.symbol != other.symbol {
            let index = self
                .symbol
                .find_difference(&other.symbol)
                .expect("canonically different symbols differ at some index");
            return Ok(ComparisonVerdict::Incomparable(
                IncomparableWitness::SymbolDifference { index },
            ));
        }
        let lf = self.effective_family();
        let rf = other.effective_family();
        let left: Vec<&GrowthSymbol> = lf.iter().collect();
        let right: Vec<&GrowthSymbol> = rf.iter().collect();
        let fwd = family_leq(&left, &right, self.space); // self ⊆ other
        let bwd = family_leq(&right, &left, self.space); // other ⊆ self
        Ok(match (fwd, bwd) {
            (Ok(()), Ok(())) => ComparisonVerdict::Equal,
            (Ok(()), Err(w)) => ComparisonVerdict::ProperSubset(w),
            (Err(w), Ok(())) => ComparisonVerdict::ProperSuperset(w),
            (Err(wl), Err(wr)) => ComparisonVerdict::Incomparable(IncomparableWitness::DomainOverlap {
                in_left_only: wr,
                in_right_only: wl,
            }),
        })
    }

    pub fn properties(&self) -> OperatorProperties {
        let action = self.action_symbol();
        let action_class = classify(&action);
        let closed = self.is_closed();
        let adj = self.adjoint();
        let sym_vs_adj = self.compare(&adj).expect("same space");
        let symmetric = sym_vs_adj.is_subset();
        let selfadjoint = sym_vs_adj.is_equal();
        let t_star_t = adj.compose(self).expect("same space");
        let t_t_star = self.compose(&adj).expect("same space");
        let normal = closed
            && t_star_t
                .compare(&t_t_star)
                .expect("same space")
                .is_equal();
        let quasinormal = {
            let lhs = self.compose(&t_star_t).expect("same space");
            let rhs = t_star_t.compose(self).expect("same space");
            lhs.compare(&rhs).expect("same space").is_equal()
        };
        let kernel_dimension = action.zero_set().count();
        let injective = kernel_dimension == Count::Finite(0);
        let surjective_shift = self.space == Space::Bilateral || self.shift == 0;
        let unitary = action.abs() == GrowthSymbol::one(self.space) && surjective_shift;
        let invertible = injective && action_class.inf_positive && surjective_shift && closed;
        OperatorProperties {
            densely_defined: true,
            closeable: true,
            closed,
            bounded: action_class.bounded,
            symmetric,
            selfadjoint,
            normal,
            quasinormal,
            unitary,
            invertible_with_bounded_inverse: invertible,
            injective,
            injective_with_unbounded_inverse: injective && !action_class.inf_positive,
            dense_range: self.symbol.zero_set().is_empty(),
            kernel_dimension,
        }
    }

    /// Polar decomposition `T = W·|T|` with `|T| = diag(|ã|)` and `W` the
    /// unimodular-or-zero part of the symbol with the same shift.  For a
    /// non-closed input the polar of the closure is returned, flagged.
    pub fn polar(&self) -> PolarDecomposition {
        let input_was_closed = self.is_closed();
        let closed = self.closure();
        let modulus = MonomialOperator::diag(closed.action_symbol().abs())
            .expect("modulus symbol is valid");
        let isometry = MonomialOperator::maximal(unimodular_symbol(&closed.symbol), closed.shift)
            .expect("isometry symbol is valid");
        PolarDecomposition {
            isometry,
            modulus,
            input_was_closed,
        }
    }

    /// Relative boundedness of `self` (as B) with respect to `t`:
    /// `∥Bx∥ ≤ a∥x∥ + b∥Tx∥` on `D_eff(T)`.  Decided by growth domination of
    /// the action symbols (necessary via basis vectors, sufficient by the
    /// triangle inequality) together with the domain inclusion
    /// `D_eff(T) ⊆ D_eff(B)`.
    pub fn rel_bounded_wrt(&self, t: &MonomialOperator) -> Result<RelBounded, OpError> {
        self.check_space(t)?;
        let b_action = self.action_symbol();
        let t_action = t.action_symbol();
        if let Err(w) = dominated(&b_action, &[&t_action]) {
            return Ok(RelBounded::ActionEscapes(w));
        }
        let tf = t.effective_family();
        let bf = self.effective_family();
        let left: Vec<&GrowthSymbol> = tf.iter().collect();
        let right: Vec<&GrowthSymbol> = bf.iter().collect();
        match family_leq(&left, &right, self.space) {
            Ok(()) => Ok(RelBounded::Holds),
            Err(w) => Ok(RelBounded::DomainEscapes(w)),
        }
    }

    /// In-model inverse; admitted only for injective operators whose shift
    /// structure is invertible (diagonal on ℕ, any shift on ℤ).  The result
    /// carries `R(T)` as its effective domain.
    pub fn inverse(&self) -> Result<MonomialOperator, OpError> {
        let action = self.action_symbol();
        if !action.zero_set().is_empty() {
            return Err(OpError::NotInvertible("kernel is nontrivial".into()));
        }
        if self.space == Space::Unilateral && self.shift != 0 {
            return Err(OpError::NotInvertible(
                "unilateral shift structure has no in-model inverse".into(),
            ));
        }
        let recip = action.reciprocal()?;
        let mut constraints = Vec::new();
        for c in self.domain.constraints() {
            constraints.push(c.mul(&recip)?.shift(self.shift)?);
        }
        MonomialOperator::new(recip.shift(-self.shift)?, -self.shift, DomainSpec::new(constraints))
    }
}

/// Zero-fills the rows below `k` (missing-coordinate convention on ℕ).
fn zero_below(sym: &GrowthSymbol, k: i64) -> Result<GrowthSymbol, SymbolError> {
    let mut s = sym.clone();
    for n in 0..k {
        if !s.is_zero_at(n) {
            s = s.with_override(n, RadicalComplex::zero())?;
        }
    }
    Ok(s)
}

/// `n ↦ a_n/|a_n|` (zero at zeros).  Polynomial and exponential factors are
/// positive, so the unimodular part is purely periodic.
fn unimodular_symbol(sym: &GrowthSymbol) -> GrowthSymbol {
    GrowthSymbol::build(
        sym.space(),
        sym.coeff().unimodular(),
        sym.residues().iter().map(|r| r.unimodular()).collect(),
        vec![],
        crate::scalar::rat_int(1),
        sym.overrides()
            .iter()
            .map(|(&n, v)| (n, v.unimodular()))
            .collect(),
    )
    .expect("unimodular symbol is valid")
}

impl fmt::Display for MonomialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = GrowthSymbol::one(self.space);
        if self.symbol == one && self.shift != 0 {
            write!(f, "shift({})", self.shift)?;
        } else if self.shift == 0 {
            write!(f, "diag({})", self.symbol)?;
        } else {
            write!(f, "diag({}).shift({})", self.symbol, self.shift)?;
        }
        for c in self.domain.constraints() {
            write!(f, " on dom({c})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.space, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    /// The canonical strictly-positive unbounded diagonal with bounded
    /// inverse, and that inverse.
    pub fn ex1_pair() -> (MonomialOperator, MonomialOperator) {
        let a = MonomialOperator::diag(GrowthSymbol::poly1(1, 2)).unwrap();
        let b = MonomialOperator::diag(GrowthSymbol::poly1(1, -2)).unwrap();
        (a, b)
    }

    #[test]
    fn adjoint_of_real_diagonal_is_itself() {
        let (a, _) = ex1_pair();
        assert!(a.compare(&a.adjoint()).unwrap().is_equal());
    }

    #[test]
    fn adjoint_of_unilateral_shift() {
        let s = MonomialOperator::shift_op(Space::Unilateral, 1);
        let adj = s.adjoint();
        assert_eq!(adj.shift(), -1);
        assert_eq!(adj.symbol(), &GrowthSymbol::one(Space::Unilateral));
        // S*S = I, SS* = diag(0,1,1,...)
        let sts = adj.compose(&s).unwrap();
        assert!(sts.compare(&MonomialOperator::identity(Space::Unilateral)).unwrap().is_equal());
        let sst = s.compose(&adj).unwrap();
        assert_eq!(sst.shift(), 0);
        assert!(sst.symbol().is_zero_at(0));
        assert!(!sst.symbol().is_zero_at(1));
    }

    #[test]
    fn example_one_product_facts() {
        let (a, b) = ex1_pair();
        let id = MonomialOperator::identity(Space::Unilateral);
        let ab = a.compose(&b).unwrap();
        let ba = b.compose(&a).unwrap();
        assert!(ab.compare(&id).unwrap().is_equal(), "AB = I on all of l2");
        match ba.compare(&ab).unwrap() {
            ComparisonVerdict::ProperSubset(w) => {
                // The witness vector certifies the strictness.
                assert!(!w.vector(5).is_empty());
            }
            v => panic!("expected BA ⊊ AB, got {v}"),
        }
        assert!(ba.closure().compare(&id).unwrap().is_equal());
        assert!(ba.closure().properties().normal);
        assert!(!ba.properties().closed);
        assert!(ba.properties().symmetric);
        // (AB)* = I ≠ BA.
        assert!(!ab.adjoint().compare(&ba).unwrap().is_equal());
    }

    #[test]
    fn compose_shift_with_diagonal() {
        // S·diag(b) = diag(σ¹b)·S
        let b = GrowthSymbol::poly1(1, 1);
        let s = MonomialOperator::shift_op(Space::Unilateral, 1);
        let db = MonomialOperator::diag(b.clone()).unwrap();
        let sb = s.compose(&db).unwrap();
        assert_eq!(sb.shift(), 1);
        assert_eq!(sb.symbol(), &b.shift(1).unwrap());
        // Matrix elements agree with direct action on a window.
        for i in 0..8 {
            for j in 0..8 {
                let direct = if j == i + 1 {
                    b.eval(i).unwrap()
                } else {
                    RadicalComplex::zero()
                };
                assert_eq!(sb.matrix_entry(j, i), direct, "entry ({j},{i})");
            }
        }
    }

    #[test]
    fn closure_of_restricted_diagonal() {
        let lin = GrowthSymbol::poly1(1, 1);
        let sq = GrowthSymbol::poly1(1, 2);
        let restricted = MonomialOperator::diag(lin.clone())
            .unwrap()
            .restricted(DomainSpec::new(vec![sq]))
            .unwrap();
        assert!(!restricted.is_closed());
        let cl = restricted.closure();
        assert!(cl.is_closed());
        assert!(cl.compare(&MonomialOperator::diag(lin).unwrap()).unwrap().is_equal());
        // Closed operators are their own closure.
        let max = MonomialOperator::diag(GrowthSymbol::poly1(1, 3)).unwrap();
        assert!(max.closure().compare(&max).unwrap().is_equal());
    }

    #[test]
    fn incomparable_on_symbol_mismatch() {
        let a = MonomialOperator::diag(GrowthSymbol::poly1(1, 1)).unwrap();
        let b = MonomialOperator::diag(GrowthSymbol::poly1(1, 2)).unwrap();
        match a.compare(&b).unwrap() {
            ComparisonVerdict::Incomparable(IncomparableWitness::SymbolDifference { index }) => {
                assert!(index >= 0);
            }
            v => panic!("expected incomparable, got {v}"),
        }
    }

    #[test]
    fn properties_of_witnesses() {
        let (a, _) = ex1_pair();
        let pa = a.properties();
        assert!(pa.selfadjoint && pa.normal && !pa.bounded);
        assert!(pa.invertible_with_bounded_inverse);
        assert_eq!(pa.kernel_dimension, Count::Finite(0));

        // Bilateral weighted shift with non-constant modulus is not normal.
        let w = MonomialOperator::maximal(
            GrowthSymbol::periodic(Space::Bilateral, &[1, 2]),
            1,
        )
        .unwrap();
        let pw = w.properties();
        assert!(pw.closed && !pw.normal && !pw.quasinormal);

        // The unilateral shift is quasinormal without dense range.
        let s = MonomialOperator::shift_op(Space::Unilateral, 1);
        let ps = s.properties();
        assert!(ps.quasinormal && !ps.dense_range && !ps.normal);
        assert!(ps.unitary == false);

        // The bilateral shift is unitary.
        let sb = MonomialOperator::shift_op(Space::Bilateral, 1);
        assert!(sb.properties().unitary);
        assert!(sb.properties().normal);
    }

    #[test]
    fn polar_of_weighted_bilateral_shift() {
        // T = diag(2ⁿ)·S: |T| = diag(2ⁿ⁺¹), W = S, and T = W·|T| exactly.
        let t = MonomialOperator::maximal(
            GrowthSymbol::exponential(Space::Bilateral, rat_int(2)),
            1,
        )
        .unwrap();
        let p = t.polar();
        assert!(p.input_was_closed);
        assert!(p
            .isometry
            .compare(&MonomialOperator::shift_op(Space::Bilateral, 1))
            .unwrap()
            .is_equal());
        let expected_modulus = MonomialOperator::diag(
            GrowthSymbol::exponential(Space::Bilateral, rat_int(2))
                .mul(&GrowthSymbol::constant(
                    Space::Bilateral,
                    RadicalComplex::from_int(2),
                ))
                .unwrap(),
        )
        .unwrap();
        assert!(p.modulus.compare(&expected_modulus).unwrap().is_equal());
        let recomposed = p.isometry.compose(&p.modulus).unwrap();
        assert!(recomposed.compare(&t).unwrap().is_equal());
        // |T| = W*·T as well.
        let wstar_t = p.isometry.adjoint().compose(&t).unwrap();
        assert!(wstar_t.compare(&p.modulus).unwrap().is_equal());
    }

    #[test]
    fn polar_of_diagonal_and_shift() {
        let d = MonomialOperator::diag(
            GrowthSymbol::constant(Space::Unilateral, RadicalComplex::new(rat_int(3), rat_int(4), rat_int(1))),
        )
        .unwrap();
        let p = d.polar();
        let w = p.isometry;
        assert_eq!(
            w.symbol().eval(0).unwrap(),
            RadicalComplex::new(rat(3, 5), rat(4, 5), rat_int(1))
        );
        assert!(p.modulus.symbol().eval(0).unwrap() == RadicalComplex::from_int(5));

        let s = MonomialOperator::shift_op(Space::Unilateral, 1);
        let ps = s.polar();
        assert!(ps.isometry.compare(&s).unwrap().is_equal());
        assert!(ps
            .modulus
            .compare(&MonomialOperator::identity(Space::Unilateral))
            .unwrap()
            .is_equal());
    }

    #[test]
    fn relative_boundedness_examples() {
        let lin = MonomialOperator::diag(GrowthSymbol::poly1(1, 1)).unwrap();
        let sq = MonomialOperator::diag(GrowthSymbol::poly1(1, 2)).unwrap();
        assert!(lin.rel_bounded_wrt(&sq).unwrap().holds());
        let exp = MonomialOperator::diag(GrowthSymbol::exponential(Space::Unilateral, rat_int(2))).unwrap();
        assert!(!exp.rel_bounded_wrt(&sq).unwrap().holds());
        // Example 1: B is bounded, AB = I, so B is AB-bounded.
        let (a, b) = ex1_pair();
        let ab = a.compose(&b).unwrap();
        assert!(b.rel_bounded_wrt(&ab).unwrap().holds());
        // And A is NOT BA-bounded even though D(BA) = D(A): the action of A
        // is unbounded against ∥BAx∥ = ∥x∥ on basis vectors.
        let ba = b.compose(&a).unwrap();
        assert!(matches!(
            a.rel_bounded_wrt(&ba).unwrap(),
            RelBounded::ActionEscapes(_)
        ));
    }

    #[test]
    fn inverse_roundtrip() {
        let (a, b) = ex1_pair();
        let ainv = a.inverse().unwrap();
        assert!(ainv.compare(&b).unwrap().is_equal());
        // Inverse of a restricted injective diagonal carries the image.
        let restricted = MonomialOperator::diag(GrowthSymbol::poly1(1, 1))
            .unwrap()
            .restricted(DomainSpec::new(vec![GrowthSymbol::poly1(1, 3)]))
            .unwrap();
        let inv = restricted.inverse().unwrap();
        assert!(!inv.domain_spec().is_maximal());
        let s = MonomialOperator::shift_op(Space::Unilateral, 1);
        assert!(s.inverse().is_err());
        let sb = MonomialOperator::shift_op(Space::Bilateral, 1);
        let sbinv = sb.inverse().unwrap();
        assert!(sbinv.compare(&sb.adjoint()).unwrap().is_equal());
    }

    #[test]
    fn involution_is_closure() {
        let t = MonomialOperator::new(
            GrowthSymbol::poly1(1, 1),
            2,
            DomainSpec::new(vec![GrowthSymbol::poly1(1, 4)]),
        )
        .unwrap();
        let tss = t.adjoint().adjoint();
        assert!(tss.compare(&t.closure()).unwrap().is_equal());
    }
}
