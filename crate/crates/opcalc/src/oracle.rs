//! Truncation oracles that validate the symbolic operator calculus
//! independently: matrix elements against basis vectors, float residuals for
//! operator identities, and an SVD-based polar convergence check.
//!
//! Matrix elements are the primary oracle because basis vectors lie in every
//! domain, so `⟨T e_i, e_j⟩` is exact even for unbounded operators — the
//! truncation/domain pitfalls live elsewhere.  Composite expressions are
//! computed two ways: by multiplying/conjugating window matrices of the
//! factors, and from the symbolic result; interior entries (outside the
//! shift-contaminated margin) must agree, bit-exactly in exact mode.

use crate::operator::{MonomialOperator, OpError};
use crate::scalar::RadicalComplex;
use crate::symbol::Space;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Operator expression tree with concrete leaves; the oracle's input.
#[derive(Debug, Clone)]
pub enum OpExpr {
    Leaf(MonomialOperator),
    Adjoint(Box<OpExpr>),
    Closure(Box<OpExpr>),
    Compose(Box<OpExpr>, Box<OpExpr>),
    Inverse(Box<OpExpr>),
}

impl OpExpr {
    pub fn leaf(op: MonomialOperator) -> OpExpr {
        OpExpr::Leaf(op)
    }

    pub fn adjoint(e: OpExpr) -> OpExpr {
        OpExpr::Adjoint(Box::new(e))
    }

    pub fn closure(e: OpExpr) -> OpExpr {
        OpExpr::Closure(Box::new(e))
    }

    pub fn compose(f: OpExpr, g: OpExpr) -> OpExpr {
        OpExpr::Compose(Box::new(f), Box::new(g))
    }

    pub fn inverse(e: OpExpr) -> OpExpr {
        OpExpr::Inverse(Box::new(e))
    }

    pub fn space(&self) -> Space {
        match self {
            OpExpr::Leaf(op) => op.space(),
            OpExpr::Adjoint(e) | OpExpr::Closure(e) | OpExpr::Inverse(e) => e.space(),
            OpExpr::Compose(f, _) => f.space(),
        }
    }

    /// Folds the tree through the symbolic calculus.
    pub fn symbolic(&self) -> Result<MonomialOperator, OpError> {
        match self {
            OpExpr::Leaf(op) => Ok(op.clone()),
            OpExpr::Adjoint(e) => Ok(e.symbolic()?.adjoint()),
            OpExpr::Closure(e) => Ok(e.symbolic()?.closure()),
            OpExpr::Inverse(e) => e.symbolic()?.inverse(),
            OpExpr::Compose(f, g) => f.symbolic()?.compose(&g.symbolic()?),
        }
    }

    /// Shift contamination margin: window entries within `margin` of the
    /// artificial edge may disagree with the true operator.
    pub fn margin(&self) -> Result<i64, OpError> {
        Ok(match self {
            OpExpr::Leaf(op) => op.shift().abs(),
            OpExpr::Adjoint(e) | OpExpr::Closure(e) => e.margin()?,
            OpExpr::Inverse(e) => e.symbolic()?.inverse()?.shift().abs(),
            OpExpr::Compose(f, g) => f.margin()? + g.margin()?,
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("window of size {n} too small for total shift {margin}")]
    WindowTooSmall { n: i64, margin: i64 },
    #[error(transparent)]
    Op(#[from] OpError),
    #[error("exact oracle encountered an irrepresentable radical sum at entry ({0}, {1})")]
    RadicalSum(i64, i64),
}

/// Index window: `0..n` on ℕ, `−n..=n` on ℤ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub space: Space,
    pub n: i64,
}

impl Window {
    pub fn indices(&self) -> Vec<i64> {
        match self.space {
            Space::Unilateral => (0..self.n).collect(),
            Space::Bilateral => (-self.n..=self.n).collect(),
        }
    }

    pub fn contains(&self, i: i64) -> bool {
        match self.space {
            Space::Unilateral => 0 <= i && i < self.n,
            Space::Bilateral => -self.n <= i && i <= self.n,
        }
    }

    /// Interior: indices unreachable from the artificial edges within
    /// `margin` steps.  On ℕ the lower edge 0 is a true boundary, not an
    /// artifact, so only the top is trimmed.
    pub fn interior(&self, margin: i64) -> Vec<i64> {
        match self.space {
            Space::Unilateral => (0..self.n - margin).collect(),
            Space::Bilateral => (-self.n + margin..=self.n - margin).collect(),
        }
    }
}

/// Scalar abstraction so one window engine serves exact and float modes.
pub trait OracleScalar: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rc(v: &RadicalComplex) -> Self;
    fn add(&self, other: &Self) -> Result<Self, ()>;
    fn mul(&self, other: &Self) -> Self;
    fn conj(&self) -> Self;
}

impl OracleScalar for RadicalComplex {
    fn zero() -> Self {
        RadicalComplex::zero()
    }

    fn is_zero(&self) -> bool {
        RadicalComplex::is_zero(self)
    }

    fn from_rc(v: &RadicalComplex) -> Self {
        v.clone()
    }

    fn add(&self, other: &Self) -> Result<Self, ()> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.s() == other.s() {
            return Ok(RadicalComplex::new(
                self.x() + other.x(),
                self.y() + other.y(),
                self.s().clone(),
            ));
        }
        // Monomial window algebra never sums incompatible radicals; hitting
        // this is a usage error surfaced as OracleError::RadicalSum.
        Err(())
    }

    fn mul(&self, other: &Self) -> Self {
        RadicalComplex::mul(self, other)
    }

    fn conj(&self) -> Self {
        RadicalComplex::conj(self)
    }
}

/// Complex float scalar.
pub type C64 = (f64, f64);

impl OracleScalar for C64 {
    fn zero() -> Self {
        (0.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0.0 && self.1 == 0.0
    }

    fn from_rc(v: &RadicalComplex) -> Self {
        v.to_f64()
    }

    fn add(&self, other: &Self) -> Result<Self, ()> {
        Ok((self.0 + other.0, self.1 + other.1))
    }

    fn mul(&self, other: &Self) -> Self {
        (
            self.0 * other.0 - self.1 * other.1,
            self.0 * other.1 + self.1 * other.0,
        )
    }

    fn conj(&self) -> Self {
        (self.0, -self.1)
    }
}

/// Sparse window matrix; monomial expressions keep it stripe-thin.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedMatrix<S: OracleScalar> {
    pub window: Window,
    entries: BTreeMap<(i64, i64), S>,
}

impl<S: OracleScalar> TruncatedMatrix<S> {
    pub fn zero(window: Window) -> Self {
        TruncatedMatrix {
            window,
            entries: BTreeMap::new(),
        }
    }

    pub fn entry(&self, row: i64, col: i64) -> S {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(S::zero)
    }

    fn set(&mut self, row: i64, col: i64, v: S) {
        if !v.is_zero() {
            self.entries.insert((row, col), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(i64, i64), &S)> {
        self.entries.iter()
    }

    /// Column set actually stored (sparse support).
    pub fn support(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.entries.keys().copied()
    }

    pub fn conjugate_transpose(&self) -> Self {
        let mut out = TruncatedMatrix::zero(self.window);
        for (&(r, c), v) in &self.entries {
            out.set(c, r, v.conj());
        }
        out
    }

    pub fn product(&self, other: &Self) -> Result<Self, OracleError> {
        let mut out = TruncatedMatrix::zero(self.window);
        // (self · other)(r, c) = Σ_l self(r, l) · other(l, c): iterate the
        // sparse supports.
        let mut by_col: BTreeMap<i64, Vec<(i64, &S)>> = BTreeMap::new();
        for (&(r, l), v) in &self.entries {
            by_col.entry(l).or_default().push((r, v));
        }
        let mut acc: BTreeMap<(i64, i64), S> = BTreeMap::new();
        for (&(l, c), bv) in &other.entries {
            if let Some(rows) = by_col.get(&l) {
                for (r, av) in rows {
                    let term = av.mul(bv);
                    match acc.remove(&(*r, c)) {
                        None => {
                            acc.insert((*r, c), term);
                        }
                        Some(prev) => {
                            let sum = prev.add(&term).map_err(|_| OracleError::RadicalSum(*r, c))?;
                            acc.insert((*r, c), sum);
                        }
                    }
                }
            }
        }
        for ((r, c), v) in acc {
            out.set(r, c, v);
        }
        Ok(out)
    }

    pub fn sub_max_abs(&self, other: &Self, to_f64: impl Fn(&S) -> (f64, f64)) -> f64 {
        let mut keys: std::collections::BTreeSet<(i64, i64)> = self.entries.keys().copied().collect();
        keys.extend(other.entries.keys().copied());
        let mut m: f64 = 0.0;
        for k in keys {
            let (ar, ai) = to_f64(&self.entry(k.0, k.1));
            let (br, bi) = to_f64(&other.entry(k.0, k.1));
            m = m.max(((ar - br).powi(2) + (ai - bi).powi(2)).sqrt());
        }
        m
    }

    pub fn max_abs(&self, to_f64: impl Fn(&S) -> (f64, f64)) -> f64 {
        let mut m: f64 = 0.0;
        for v in self.entries.values() {
            let (re, im) = to_f64(v);
            m = m.max((re * re + im * im).sqrt());
        }
        m
    }
}

/// Window matrix of one concrete operator by direct action on basis
/// vectors: column `i` is `T e_i` restricted to the window.
pub fn leaf_matrix<S: OracleScalar>(op: &MonomialOperator, window: Window) -> TruncatedMatrix<S> {
    let mut m = TruncatedMatrix::zero(window);
    for i in window.indices() {
        let row = i + op.shift();
        if window.contains(row) {
            let v = op.matrix_entry(row, i);
            m.set(row, i, S::from_rc(&v));
        }
    }
    m
}

/// Window matrix of an expression by composing/conjugating factor windows —
/// the independent evaluation path.
pub fn window_matrix<S: OracleScalar>(
    expr: &OpExpr,
    window: Window,
) -> Result<TruncatedMatrix<S>, OracleError> {
    match expr {
        OpExpr::Leaf(op) => Ok(leaf_matrix(op, window)),
        OpExpr::Closure(e) => window_matrix(e, window),
        OpExpr::Adjoint(e) => Ok(window_matrix::<S>(e, window)?.conjugate_transpose()),
        OpExpr::Inverse(e) => {
            let inv = e.symbolic()?.inverse()?;
            Ok(leaf_matrix(&inv, window))
        }
        OpExpr::Compose(f, g) => {
            let mf = window_matrix::<S>(f, window)?;
            let mg = window_matrix::<S>(g, window)?;
            mf.product(&mg)
        }
    }
}

fn check_window(expr: &OpExpr, n: i64) -> Result<(Window, i64), OracleError> {
    let margin = expr.margin()?;
    if margin >= n {
        return Err(OracleError::WindowTooSmall { n, margin });
    }
    Ok((
        Window {
            space: expr.space(),
            n,
        },
        margin,
    ))
}

/// First interior disagreement between the window評 and the symbolic result.
#[derive(Debug, Clone)]
pub struct Mismatch {
    pub row: i64,
    pub col: i64,
    pub window_value: String,
    pub symbolic_value: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({}, {}): window {} vs symbolic {}",
            self.row, self.col, self.window_value, self.symbolic_value
        )
    }
}

/// Exact-mode crosscheck: every interior entry of the independently-composed
/// window must equal the symbolic result's matrix element, bit-exactly.
pub fn exact_crosscheck(expr: &OpExpr, n: i64) -> Result<Result<(), Mismatch>, OracleError> {
    let (window, margin) = check_window(expr, n)?;
    let sym = expr.symbolic()?;
    let m: TruncatedMatrix<RadicalComplex> = window_matrix(expr, window)?;
    let interior = window.interior(margin);
    for &j in &interior {
        for &i in &interior {
            let got = m.entry(j, i);
            let want = sym.matrix_entry(j, i);
            if got != want {
                return Ok(Err(Mismatch {
                    row: j,
                    col: i,
                    window_value: got.to_string(),
                    symbolic_value: want.to_string(),
                }));
            }
        }
    }
    Ok(Ok(()))
}

/// Crosscheck against an explicitly claimed result (supports the
/// deliberate-mutation tests): compares the window evaluation of `expr`
/// against `claimed`'s matrix elements on the interior.
pub fn crosscheck_against(
    expr: &OpExpr,
    claimed: &MonomialOperator,
    n: i64,
) -> Result<Result<(), Mismatch>, OracleError> {
    let (window, margin) = check_window(expr, n)?;
    let m: TruncatedMatrix<RadicalComplex> = window_matrix(expr, window)?;
    let interior = window.interior(margin);
    for &j in &interior {
        for &i in &interior {
            let got = m.entry(j, i);
            let want = claimed.matrix_entry(j, i);
            if got != want {
                return Ok(Err(Mismatch {
                    row: j,
                    col: i,
                    window_value: got.to_string(),
                    symbolic_value: want.to_string(),
                }));
            }
        }
    }
    Ok(Ok(()))
}

fn restrict_interior(m: &TruncatedMatrix<C64>, interior: &[i64]) -> TruncatedMatrix<C64> {
    let lo = *interior.first().unwrap_or(&0);
    let hi = *interior.last().unwrap_or(&-1);
    let mut out = TruncatedMatrix::zero(m.window);
    for (&(r, c), v) in m.entries.clone().iter() {
        if lo <= r && r <= hi && lo <= c && c <= hi {
            out.set(r, c, *v);
        }
    }
    out
}

/// Float residuals of the basic operator identities at truncation `n`,
/// max-abs over interior entries, normalized by the squared magnitude scale
/// (products of two copies of `T` enter each identity).
#[derive(Debug, Clone, serde::Serialize)]
pub struct Residuals {
    pub normality: f64,
    pub self_adjointness: f64,
    pub polar: f64,
    /// Scale used for the relative readings: 1 + max interior |entry|.
    pub scale: f64,
}

pub fn residuals(expr: &OpExpr, n: i64) -> Result<Residuals, OracleError> {
    let (window, margin) = check_window(expr, n)?;
    let id = |v: &C64| *v;
    let t: TruncatedMatrix<C64> = window_matrix(expr, window)?;
    // Trim to the interior before multiplying so edge effects cannot enter
    // the products; the product margin doubles.
    let interior = window.interior(margin);
    let t_in = restrict_interior(&t, &interior);
    let ts = t_in.conjugate_transpose();
    let tst = ts.product(&t_in).expect("float sums are total");
    let tts = t_in.product(&ts).expect("float sums are total");
    let inner = window.interior(2 * margin + 1);
    let tst_in = restrict_interior(&tst, &inner);
    let tts_in = restrict_interior(&tts, &inner);
    let normality = tst_in.sub_max_abs(&tts_in, id);
    let self_adjointness = t_in.sub_max_abs(&ts, id);

    let sym = expr.symbolic()?;
    let p = sym.polar();
    let w: TruncatedMatrix<C64> = leaf_matrix(&p.isometry, window);
    let a: TruncatedMatrix<C64> = leaf_matrix(&p.modulus, window);
    let wa = w.product(&a).expect("float sums are total");
    let polar = restrict_interior(&wa, &interior).sub_max_abs(&t_in, id);

    let scale = 1.0 + t_in.max_abs(id);
    Ok(Residuals {
        normality,
        self_adjointness,
        polar,
        scale,
    })
}

/// SVD-based polar of a real-symbol bounded monomial truncation, compared
/// entrywise (interior) against the symbolic polar factors.  Returns the max
/// interior deviation; used as a secondary convergence check only.
pub fn svd_polar_deviation(op: &MonomialOperator, n: i64) -> Result<f64, OracleError> {
    let expr = OpExpr::leaf(op.clone());
    let (window, margin) = check_window(&expr, n)?;
    let idx = window.indices();
    let dim = idx.len();
    let pos: BTreeMap<i64, usize> = idx.iter().copied().enumerate().map(|(p, i)| (i, p)).collect();
    let mut dense = nalgebra::DMatrix::<f64>::zeros(dim, dim);
    for i in &idx {
        for j in &idx {
            let v = op.matrix_entry(*j, *i);
            let (re, im) = v.to_f64();
            assert!(im == 0.0, "svd polar check expects real symbols");
            dense[(pos[j], pos[i])] = re;
        }
    }
    let svd = dense.clone().svd(true, true);
    let u = svd.u.as_ref().expect("u requested");
    let vt = svd.v_t.as_ref().expect("v_t requested");
    let w_num = u * vt;
    let p_num = vt.transpose() * nalgebra::DMatrix::from_diagonal(&svd.singular_values) * vt;

    let p_sym = op.polar();
    let mut dev: f64 = 0.0;
    for j in window.interior(margin.max(1)) {
        for i in window.interior(margin.max(1)) {
            let (wr, _) = p_sym.isometry.matrix_entry(j, i).to_f64();
            let (pr, _) = p_sym.modulus.matrix_entry(j, i).to_f64();
            dev = dev.max((w_num[(pos[&j], pos[&i])] - wr).abs());
            dev = dev.max((p_num[(pos[&j], pos[&i])] - pr).abs());
        }
    }
    Ok(dev)
}

/// CSV of the window entries, row-major, exact values in `(x,y,s)` form.
pub fn matrix_csv(op: &MonomialOperator, n: i64, exact: bool) -> Result<String, OracleError> {
    let expr = OpExpr::leaf(op.clone());
    let (window, _) = check_window(&expr, n)?;
    let mut out = String::new();
    for j in window.indices() {
        let mut row = Vec::new();
        for i in window.indices() {
            let v = op.matrix_entry(j, i);
            if exact {
                row.push(v.to_string());
            } else {
                let (re, im) = v.to_f64();
                row.push(format!("{re}+{im}i"));
            }
        }
        out.push_str(&row.join(","));
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;
    use crate::symbol::GrowthSymbol;

    #[test]
    fn diagonal_matrix_values() {
        let a = MonomialOperator::diag(GrowthSymbol::poly1(1, 2)).unwrap();
        let w = Window {
            space: Space::Unilateral,
            n: 3,
        };
        let m: TruncatedMatrix<RadicalComplex> = leaf_matrix(&a, w);
        assert_eq!(m.entry(0, 0), RadicalComplex::from_int(1));
        assert_eq!(m.entry(1, 1), RadicalComplex::from_int(4));
        assert_eq!(m.entry(2, 2), RadicalComplex::from_int(9));
        assert_eq!(m.entry(0, 1), RadicalComplex::zero());
    }

    #[test]
    fn shift_matrix_is_subdiagonal() {
        let s = MonomialOperator::shift_op(Space::Unilateral, 1);
        let w = Window {
            space: Space::Unilateral,
            n: 3,
        };
        let m: TruncatedMatrix<RadicalComplex> = leaf_matrix(&s, w);
        assert_eq!(m.entry(1, 0), RadicalComplex::from_int(1));
        assert_eq!(m.entry(2, 1), RadicalComplex::from_int(1));
        assert_eq!(m.entry(0, 0), RadicalComplex::zero());
    }

    #[test]
    fn adjoint_window_is_conjugate_transpose() {
        let t = MonomialOperator::maximal(
            GrowthSymbol::exponential(Space::Bilateral, rat_int(2)),
            1,
        )
        .unwrap();
        let w = Window {
            space: Space::Bilateral,
            n: 5,
        };
        let direct: TruncatedMatrix<RadicalComplex> =
            window_matrix(&OpExpr::adjoint(OpExpr::leaf(t.clone())), w).unwrap();
        let transposed = leaf_matrix::<RadicalComplex>(&t, w).conjugate_transpose();
        assert_eq!(direct, transposed);
    }

    #[test]
    fn compose_crosscheck_passes_for_example_pair() {
        let a = MonomialOperator::diag(GrowthSymbol::poly1(1, 2)).unwrap();
        let b = MonomialOperator::diag(GrowthSymbol::poly1(1, -2)).unwrap();
        let ab = OpExpr::compose(OpExpr::leaf(a), OpExpr::leaf(b));
        assert!(exact_crosscheck(&ab, 16).unwrap().is_ok());
        // And the symbolic result agrees with the identity.
        let id = MonomialOperator::identity(Space::Unilateral);
        assert!(crosscheck_against(&ab, &id, 16).unwrap().is_ok());
    }

    #[test]
    fn deliberate_mutation_is_caught() {
        // compose(S, diag(b)) against the wrong, unshifted symbol.
        let b = GrowthSymbol::poly1(1, 1);
        let s = MonomialOperator::shift_op(Space::Unilateral, 1);
        let db = MonomialOperator::diag(b.clone()).unwrap();
        let expr = OpExpr::compose(OpExpr::leaf(s), OpExpr::leaf(db));
        let wrong = MonomialOperator::maximal(b, 1).unwrap();
        match crosscheck_against(&expr, &wrong, 8).unwrap() {
            Err(m) => {
                assert_eq!((m.row, m.col), (1, 0), "first differing entry");
            }
            Ok(()) => panic!("mutation must be detected"),
        }
    }

    #[test]
    fn adjoint_crosscheck_of_complex_diagonal() {
        // adjoint(diag(i(1+n))) = diag(−i(1+n)).
        let sym = GrowthSymbol::poly1(1, 1)
            .mul(&GrowthSymbol::constant(Space::Unilateral, RadicalComplex::i()))
            .unwrap();
        let t = MonomialOperator::diag(sym).unwrap();
        let expr = OpExpr::adjoint(OpExpr::leaf(t.clone()));
        assert!(exact_crosscheck(&expr, 8).unwrap().is_ok());
        let minus_i = GrowthSymbol::poly1(1, 1)
            .mul(&GrowthSymbol::constant(
                Space::Unilateral,
                RadicalComplex::i().neg(),
            ))
            .unwrap();
        let claimed = MonomialOperator::diag(minus_i).unwrap();
        assert!(crosscheck_against(&expr, &claimed, 8).unwrap().is_ok());
    }

    #[test]
    fn residuals_detect_nonnormality() {
        // Bilateral per(2;1,2)-weighted shift: commutator diag |ã|²−|a|²
        // has entries ±3.
        let t = MonomialOperator::maximal(
            GrowthSymbol::periodic(Space::Bilateral, &[1, 2]),
            1,
        )
        .unwrap();
        let r = residuals(&OpExpr::leaf(t), 32).unwrap();
        assert!(r.normality >= 0.5, "residual {}", r.normality);
        assert!((r.normality - 3.0).abs() < 1e-12, "exact commutator gap is 3");
        assert!(r.polar < 1e-9 * r.scale * r.scale);
    }

    #[test]
    fn residuals_vanish_for_selfadjoint_diagonal() {
        let a = MonomialOperator::diag(GrowthSymbol::poly1(1, 2)).unwrap();
        let r = residuals(&OpExpr::leaf(a), 32).unwrap();
        assert_eq!(r.self_adjointness, 0.0);
        assert_eq!(r.normality, 0.0);
        assert_eq!(r.polar, 0.0);
    }

    #[test]
    fn polar_residual_of_weighted_shift() {
        let t = MonomialOperator::maximal(
            GrowthSymbol::exponential(Space::Bilateral, rat_int(2)),
            1,
        )
        .unwrap();
        let r = residuals(&OpExpr::leaf(t.clone()), 16).unwrap();
        assert!(r.polar <= 1e-9 * r.scale);
        // Exact-mode check of W·|T| = T.
        let p = t.polar();
        let expr = OpExpr::compose(OpExpr::leaf(p.isometry), OpExpr::leaf(p.modulus));
        assert!(crosscheck_against(&expr, &t, 16).unwrap().is_ok());
    }

    #[test]
    fn window_too_small_for_shift() {
        let s = MonomialOperator::shift_op(Space::Unilateral, 4);
        assert!(matches!(
            exact_crosscheck(&OpExpr::leaf(s), 4),
            Err(OracleError::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn float_and_exact_agree() {
        let t = MonomialOperator::maximal(
            GrowthSymbol::periodic(Space::Bilateral, &[1, 2])
                .mul(&GrowthSymbol::exponential(Space::Bilateral, rat_int(2)))
                .unwrap(),
            1,
        )
        .unwrap();
        let w = Window {
            space: Space::Bilateral,
            n: 10,
        };
        let exact: TruncatedMatrix<RadicalComplex> = leaf_matrix(&t, w);
        let float: TruncatedMatrix<C64> = leaf_matrix(&t, w);
        for (&(r, c), v) in exact.entries() {
            let (er, ei) = v.to_f64();
            let (fr, fi) = float.entry(r, c);
            if (er * er + ei * ei).sqrt() <= 1e6 {
                assert!((er - fr).abs() <= 1e-12 && (ei - fi).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn svd_polar_converges_on_bounded_monomials() {
        let t = MonomialOperator::diag(GrowthSymbol::periodic(Space::Unilateral, &[1, 2, 3]))
            .unwrap();
        let d16 = svd_polar_deviation(&t, 16).unwrap();
        let d128 = svd_polar_deviation(&t, 128).unwrap();
        assert!(d128 <= d16, "deviation must not grow: {d16} -> {d128}");
        assert!(d128 < 1e-9, "diagonal svd polar is exact up to fp: {d128}");
    }
}
