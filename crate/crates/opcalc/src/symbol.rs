//! Symbolic sequences `n ↦ coeff · per[n mod q] · Π(n+r)^p · bⁿ` with finitely
//! many overrides, over ℕ (unilateral) or ℤ (bilateral).
//!
//! Every diagonal symbol, domain constraint and polar factor in the operator
//! model lives here.  All values are exact [`RadicalComplex`] scalars; all
//! comparisons (pointwise equality, growth domination, boundedness, zero
//! sets) are decided structurally on a canonical form.

use crate::scalar::{rat_int, rat_pow, RadicalComplex, Rational};
use num::integer::Integer;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Hard cap on override-table size; keeps zero sets and comparisons finite.
pub const MAX_OVERRIDES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Space {
    Unilateral,
    Bilateral,
}

impl Space {
    pub fn directions(self) -> &'static [Direction] {
        match self {
            Space::Unilateral => &[Direction::Plus],
            Space::Bilateral => &[Direction::Plus, Direction::Minus],
        }
    }

    pub fn contains(self, n: i64) -> bool {
        match self {
            Space::Unilateral => n >= 0,
            Space::Bilateral => true,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Unilateral => write!(f, "unilateral"),
            Space::Bilateral => write!(f, "bilateral"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Plus,
    Minus,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("space mismatch: {0} vs {1}")]
    SpaceMismatch(Space, Space),
    #[error("index {0} outside the symbol's space")]
    IndexOutsideSpace(i64),
    #[error("symbol leaves index {0} undefined (factor root hits a nonpositive argument)")]
    UndefinedIndex(i64),
    #[error("override table would exceed {MAX_OVERRIDES} entries ({0})")]
    OverrideOverflow(usize),
    #[error("reciprocal of a symbol with zeros")]
    ReciprocalOfZero,
    #[error("factor exponent {0} has denominator > 2")]
    BadExponent(String),
    #[error("bilateral symbols admit no polynomial factors")]
    BilateralPoly,
    #[error("period must be >= 1 and match the residue list")]
    BadPeriod,
    #[error("exponential base must be positive")]
    BadExpBase,
}

/// One factor `(n + root)^exp`.  Roots may become nonpositive after shifts;
/// validation then requires the affected indices to be overridden.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyFactor {
    pub root: Rational,
    pub exp: Rational,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrowthSymbol {
    space: Space,
    coeff: RadicalComplex,
    residues: Vec<RadicalComplex>,
    poly: Vec<PolyFactor>,
    expbase: Rational,
    overrides: BTreeMap<i64, RadicalComplex>,
}

impl GrowthSymbol {
    /// Full constructor; canonicalizes and validates.
    pub fn build(
        space: Space,
        coeff: RadicalComplex,
        residues: Vec<RadicalComplex>,
        poly: Vec<PolyFactor>,
        expbase: Rational,
        overrides: BTreeMap<i64, RadicalComplex>,
    ) -> Result<GrowthSymbol, SymbolError> {
        if residues.is_empty() {
            return Err(SymbolError::BadPeriod);
        }
        if !expbase.is_positive() {
            return Err(SymbolError::BadExpBase);
        }
        if space == Space::Bilateral && !poly.is_empty() {
            return Err(SymbolError::BilateralPoly);
        }
        for f in &poly {
            if *f.exp.denom() > num::BigInt::from(2) {
                return Err(SymbolError::BadExponent(format!("{}", f.exp)));
            }
        }
        let mut sym = GrowthSymbol {
            space,
            coeff,
            residues,
            poly,
            expbase,
            overrides,
        };
        sym.canonicalize();
        sym.validate()?;
        Ok(sym)
    }

    pub fn constant(space: Space, value: RadicalComplex) -> GrowthSymbol {
        GrowthSymbol::build(
            space,
            value,
            vec![RadicalComplex::one()],
            vec![],
            Rational::one(),
            BTreeMap::new(),
        )
        .expect("constant symbol is always valid")
    }

    pub fn one(space: Space) -> GrowthSymbol {
        GrowthSymbol::constant(space, RadicalComplex::one())
    }

    pub fn zero(space: Space) -> GrowthSymbol {
        GrowthSymbol::constant(space, RadicalComplex::zero())
    }

    /// `Π(n+r)^p` symbols, e.g. `poly1(1, 2)` is `(n+1)²` on ℕ.
    pub fn poly1(root: i64, exp: i64) -> GrowthSymbol {
        GrowthSymbol::build(
            Space::Unilateral,
            RadicalComplex::one(),
            vec![RadicalComplex::one()],
            vec![PolyFactor {
                root: rat_int(root),
                exp: rat_int(exp),
            }],
            Rational::one(),
            BTreeMap::new(),
        )
        .expect("valid poly factor")
    }

    /// Periodic symbol from integer residue multipliers.
    pub fn periodic(space: Space, residues: &[i64]) -> GrowthSymbol {
        GrowthSymbol::build(
            space,
            RadicalComplex::one(),
            residues.iter().map(|&v| RadicalComplex::from_int(v)).collect(),
            vec![],
            Rational::one(),
            BTreeMap::new(),
        )
        .expect("valid periodic symbol")
    }

    /// `bⁿ` symbols.
    pub fn exponential(space: Space, base: Rational) -> GrowthSymbol {
        GrowthSymbol::build(
            space,
            RadicalComplex::one(),
            vec![RadicalComplex::one()],
            vec![],
            base,
            BTreeMap::new(),
        )
        .expect("valid exponential symbol")
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn coeff(&self) -> &RadicalComplex {
        &self.coeff
    }

    pub fn period(&self) -> i64 {
        self.residues.len() as i64
    }

    pub fn residues(&self) -> &[RadicalComplex] {
        &self.residues
    }

    pub fn poly(&self) -> &[PolyFactor] {
        &self.poly
    }

    pub fn expbase(&self) -> &Rational {
        &self.expbase
    }

    pub fn overrides(&self) -> &BTreeMap<i64, RadicalComplex> {
        &self.overrides
    }

    pub fn with_override(&self, index: i64, value: RadicalComplex) -> Result<GrowthSymbol, SymbolError> {
        let mut ov = self.overrides.clone();
        ov.insert(index, value);
        GrowthSymbol::build(
            self.space,
            self.coeff.clone(),
            self.residues.clone(),
            self.poly.clone(),
            self.expbase.clone(),
            ov,
        )
    }

    fn canonicalize(&mut self) {
        // Degenerate base: coefficient zero, or every residue zero.
        if self.coeff.is_zero() || self.residues.iter().all(|r| r.is_zero()) {
            self.coeff = RadicalComplex::zero();
            self.residues = vec![RadicalComplex::one()];
            self.poly.clear();
            self.expbase = Rational::one();
        }
        // Minimal period.
        let q = self.residues.len();
        for d in 1..=q {
            if q % d == 0 && (0..q).all(|i| self.residues[i] == self.residues[i % d]) {
                self.residues.truncate(d);
                break;
            }
        }
        // Scale the first nonzero residue to one.
        if let Some(t) = self.residues.iter().find(|r| !r.is_zero()).cloned() {
            if !t.is_one() {
                let tinv = t.inv().expect("nonzero residue");
                self.coeff = self.coeff.mul(&t);
                for r in &mut self.residues {
                    *r = r.mul(&tinv);
                }
            }
        }
        // Merge poly factors with equal roots, drop zero exponents, sort.
        let mut merged: BTreeMap<Rational, Rational> = BTreeMap::new();
        for f in self.poly.drain(..) {
            *merged.entry(f.root).or_insert_with(Rational::zero) += f.exp;
        }
        self.poly = merged
            .into_iter()
            .filter(|(_, e)| !e.is_zero())
            .map(|(root, exp)| PolyFactor { root, exp })
            .collect();
        // Drop overrides agreeing with the base formula.
        let base = self.clone();
        self.overrides
            .retain(|&n, v| match base.base_value(n) {
                Some(b) => b != *v,
                None => true,
            });
    }

    fn validate(&self) -> Result<(), SymbolError> {
        if self.overrides.len() > MAX_OVERRIDES {
            return Err(SymbolError::OverrideOverflow(self.overrides.len()));
        }
        for &n in self.overrides.keys() {
            if !self.space.contains(n) {
                return Err(SymbolError::IndexOutsideSpace(n));
            }
        }
        // All non-overridden indices must have every factor argument positive.
        for f in &self.poly {
            // n + root <= 0  ⟺  n <= -root.
            let bound = (-f.root.clone()).floor().to_integer();
            if bound >= num::BigInt::zero() {
                let bound: i64 = bound.try_into().map_err(|_| SymbolError::UndefinedIndex(0))?;
                for n in 0..=bound {
                    if !self.overrides.contains_key(&n) {
                        return Err(SymbolError::UndefinedIndex(n));
                    }
                }
            }
        }
        Ok(())
    }

    /// Base-formula value, `None` when a factor argument is nonpositive.
    fn base_value(&self, n: i64) -> Option<RadicalComplex> {
        let q = self.period();
        let res = &self.residues[(n.rem_euclid(q)) as usize];
        let mut v = self.coeff.mul(res);
        for f in &self.poly {
            let arg = rat_int(n) + &f.root;
            if !arg.is_positive() {
                return None;
            }
            v = v.mul(&pow_radical(&arg, &f.exp));
        }
        if !self.expbase.is_one() {
            v = v.mul(&RadicalComplex::from_rational(rat_pow(&self.expbase, n)));
        }
        Some(v)
    }

    /// Exact value at `n`; overrides take precedence.
    pub fn eval(&self, n: i64) -> Result<RadicalComplex, SymbolError> {
        if !self.space.contains(n) {
            return Err(SymbolError::IndexOutsideSpace(n));
        }
        if let Some(v) = self.overrides.get(&n) {
            return Ok(v.clone());
        }
        self.base_value(n).ok_or(SymbolError::UndefinedIndex(n))
    }

    pub fn is_zero_at(&self, n: i64) -> bool {
        self.eval(n).map(|v| v.is_zero()).unwrap_or(false)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &GrowthSymbol) -> Result<GrowthSymbol, SymbolError> {
        self.check_space(other)?;
        let q = lcm64(self.period(), other.period());
        let residues = (0..q)
            .map(|i| {
                self.residues[(i % self.period()) as usize]
                    .mul(&other.residues[(i % other.period()) as usize])
            })
            .collect();
        let mut poly = self.poly.clone();
        poly.extend(other.poly.iter().cloned());
        let mut overrides = BTreeMap::new();
        for &n in self.overrides.keys().chain(other.overrides.keys()) {
            overrides.insert(n, self.eval(n)?.mul(&other.eval(n)?));
        }
        GrowthSymbol::build(
            self.space,
            self.coeff.mul(&other.coeff),
            residues,
            poly,
            &self.expbase * &other.expbase,
            overrides,
        )
    }

    pub fn conj(&self) -> GrowthSymbol {
        GrowthSymbol::build(
            self.space,
            self.coeff.conj(),
            self.residues.iter().map(|r| r.conj()).collect(),
            self.poly.clone(),
            self.expbase.clone(),
            self.overrides.iter().map(|(&n, v)| (n, v.conj())).collect(),
        )
        .expect("conjugate preserves validity")
    }

    /// Pointwise modulus `n ↦ |a_n|`.
    pub fn abs(&self) -> GrowthSymbol {
        GrowthSymbol::build(
            self.space,
            self.coeff.modulus(),
            self.residues.iter().map(|r| r.modulus()).collect(),
            self.poly.clone(),
            self.expbase.clone(),
            self.overrides
                .iter()
                .map(|(&n, v)| (n, v.modulus()))
                .collect(),
        )
        .expect("modulus preserves validity")
    }

    /// Pointwise reciprocal; requires an empty zero set.
    pub fn reciprocal(&self) -> Result<GrowthSymbol, SymbolError> {
        if !self.zero_set().is_empty() {
            return Err(SymbolError::ReciprocalOfZero);
        }
        GrowthSymbol::build(
            self.space,
            self.coeff.inv().ok_or(SymbolError::ReciprocalOfZero)?,
            self.residues
                .iter()
                .map(|r| r.inv().ok_or(SymbolError::ReciprocalOfZero))
                .collect::<Result<_, _>>()?,
            self.poly
                .iter()
                .map(|f| PolyFactor {
                    root: f.root.clone(),
                    exp: -f.exp.clone(),
                })
                .collect(),
            self.expbase.recip(),
            self.overrides
                .iter()
                .map(|(&n, v)| Ok((n, v.inv().ok_or(SymbolError::ReciprocalOfZero)?)))
                .collect::<Result<_, SymbolError>>()?,
        )
    }

    /// `σʲ(a)_n = a_{n−j}`.  On ℕ a positive shift leaves indices `n < j`
    /// without a source coordinate; those become zero overrides (the missing
    /// coordinate convention of the operator model).
    pub fn shift(&self, j: i64) -> Result<GrowthSymbol, SymbolError> {
        if j == 0 {
            return Ok(self.clone());
        }
        let q = self.period();
        let rot = |i: i64| -> RadicalComplex { self.residues[((i - j).rem_euclid(q)) as usize].clone() };
        let residues: Vec<RadicalComplex> = (0..q).map(rot).collect();
        let coeff = self
            .coeff
            .mul(&RadicalComplex::from_rational(rat_pow(&self.expbase, -j)));
        let poly = self
            .poly
            .iter()
            .map(|f| PolyFactor {
                root: &f.root - rat_int(j),
                exp: f.exp.clone(),
            })
            .collect();
        let mut overrides: BTreeMap<i64, RadicalComplex> = BTreeMap::new();
        for (&n, v) in &self.overrides {
            let m = n + j;
            if self.space.contains(m) {
                overrides.insert(m, v.clone());
            }
        }
        if self.space == Space::Unilateral && j > 0 {
            for m in 0..j {
                overrides.insert(m, RadicalComplex::zero());
            }
        }
        GrowthSymbol::build(
            self.space,
            coeff,
            residues,
            poly,
            self.expbase.clone(),
            overrides,
        )
    }

    fn check_space(&self, other: &GrowthSymbol) -> Result<(), SymbolError> {
        if self.space != other.space {
            return Err(SymbolError::SpaceMismatch(self.space, other.space));
        }
        Ok(())
    }

    /// Exact description of `{n : a_n = 0}`.
    pub fn zero_set(&self) -> ZeroSet {
        let q = self.period();
        let mut zero_classes = std::collections::BTreeSet::new();
        for (i, r) in self.residues.iter().enumerate() {
            if self.coeff.is_zero() || r.is_zero() {
                zero_classes.insert(i as i64);
            }
        }
        let mut extra_zeros = std::collections::BTreeSet::new();
        let mut nonzero_exceptions = std::collections::BTreeSet::new();
        for (&n, v) in &self.overrides {
            let in_class = zero_classes.contains(&n.rem_euclid(q));
            match (v.is_zero(), in_class) {
                (true, false) => {
                    extra_zeros.insert(n);
                }
                (false, true) => {
                    nonzero_exceptions.insert(n);
                }
                _ => {}
            }
        }
        ZeroSet {
            space: self.space,
            period: q,
            zero_classes,
            extra_zeros,
            nonzero_exceptions,
        }
    }

    /// Difference index for symbols that are not pointwise equal.  Canonical
    /// forms make equality decidable; this produces a concrete witness.
    pub fn find_difference(&self, other: &GrowthSymbol) -> Option<i64> {
        if self == other {
            return None;
        }
        let q = lcm64(self.period(), other.period());
        let ovr = self
            .overrides
            .keys()
            .chain(other.overrides.keys())
            .cloned()
            .fold(0i64, |m, n| m.max(n.abs()));
        let span = 4 * q + ovr + 80;
        let range: Vec<i64> = match self.space {
            Space::Unilateral => (0..span).collect(),
            Space::Bilateral => (-span..span).collect(),
        };
        range
            .into_iter()
            .find(|&n| match (self.eval(n), other.eval(n)) {
                (Ok(a), Ok(b)) => a != b,
                _ => true,
            })
    }

    /// Largest absolute override index (0 when none); used to start growth
    /// witnesses beyond all exceptional values.
    pub fn override_span(&self) -> i64 {
        self.overrides.keys().fold(0, |m, &n| m.max(n.abs()))
    }

    /// Smallest index from which the base formula is valid and poly factors
    /// are positive in the `+` direction.
    pub fn poly_valid_from(&self) -> i64 {
        self.poly.iter().fold(0i64, |m, f| {
            let b = (-f.root.clone()).floor().to_integer();
            let b: i64 = b.try_into().unwrap_or(0);
            m.max(b + 1)
        })
    }
}

fn lcm64(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

/// `(arg)^(u/v)` for `arg > 0` rational and `v ∈ {1, 2}`.
fn pow_radical(arg: &Rational, exp: &Rational) -> RadicalComplex {
    let u: i64 = exp.numer().try_into().expect("exponent numerator fits i64");
    let v: i64 = exp.denom().try_into().expect("exponent denominator fits i64");
    match v {
        1 => RadicalComplex::from_rational(rat_pow(arg, u)),
        2 => {
            let w = u.div_euclid(2);
            let t = u.rem_euclid(2);
            let whole = RadicalComplex::from_rational(rat_pow(arg, w));
            if t == 0 {
                whole
            } else {
                whole.mul(&RadicalComplex::sqrt_of(arg.clone()))
            }
        }
        _ => unreachable!("validated exponent denominator"),
    }
}

/// Zero set = (union of residue classes) symmetric-difference finitely many
/// overrides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSet {
    space: Space,
    period: i64,
    zero_classes: std::collections::BTreeSet<i64>,
    extra_zeros: std::collections::BTreeSet<i64>,
    nonzero_exceptions: std::collections::BTreeSet<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => write!(f, "infinite"),
        }
    }
}

impl ZeroSet {
    pub fn is_empty(&self) -> bool {
        self.zero_classes.is_empty() && self.extra_zeros.is_empty()
    }

    pub fn contains(&self, n: i64) -> bool {
        if !self.space.contains(n) {
            return false;
        }
        if self.extra_zeros.contains(&n) {
            return true;
        }
        self.zero_classes.contains(&n.rem_euclid(self.period)) && !self.nonzero_exceptions.contains(&n)
    }

    pub fn count(&self) -> Count {
        if self.zero_classes.is_empty() {
            Count::Finite(self.extra_zeros.len() as u64)
        } else {
            Count::Infinite
        }
    }

    /// A few concrete members, smallest-magnitude first.
    pub fn sample(&self, k: usize) -> Vec<i64> {
        let mut out = Vec::new();
        let range: Box<dyn Iterator<Item = i64>> = match self.space {
            Space::Unilateral => Box::new(0..),
            Space::Bilateral => Box::new((0..).flat_map(|n| if n == 0 { vec![0] } else { vec![n, -n] })),
        };
        for n in range.take(10_000) {
            if self.contains(n) {
                out.push(n);
                if out.len() >= k {
                    break;
                }
            }
        }
        out
    }
}

impl fmt::Display for ZeroSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let mut parts = Vec::new();
        for c in &self.zero_classes {
            parts.push(format!("{c} mod {}", self.period));
        }
        for z in &self.extra_zeros {
            parts.push(format!("{z}"));
        }
        write!(f, "{{{}}}", parts.join(", "))?;
        if !self.nonzero_exceptions.is_empty() {
            let ex: Vec<String> = self.nonzero_exceptions.iter().map(|n| n.to_string()).collect();
            write!(f, " \\ {{{}}}", ex.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for GrowthSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coeff{}", self.coeff)?;
        if self.residues.len() > 1 || !self.residues[0].is_one() {
            write!(f, " * per({};", self.residues.len())?;
            for (i, r) in self.residues.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, " coeff{r}")?;
            }
            write!(f, ")")?;
        }
        for p in &self.poly {
            write!(f, " * pow({},{})", fmt_rat(&p.root), fmt_rat(&p.exp))?;
        }
        if !self.expbase.is_one() {
            write!(f, " * exp({})", fmt_rat(&self.expbase))?;
        }
        if !self.overrides.is_empty() {
            write!(f, " @ {{")?;
            for (i, (n, v)) in self.overrides.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{n}: coeff{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GrowthSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.space, self)
    }
}

fn fmt_rat(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn ex1_a() -> GrowthSymbol {
        GrowthSymbol::poly1(1, 2)
    }

    fn ex1_b() -> GrowthSymbol {
        GrowthSymbol::poly1(1, -2)
    }

    #[test]
    fn eval_poly() {
        // (n+1)² at n = 2 → 9
        assert_eq!(ex1_a().eval(2).unwrap(), RadicalComplex::from_int(9));
        assert_eq!(ex1_a().eval(0).unwrap(), RadicalComplex::from_int(1));
    }

    #[test]
    fn eval_constant_and_override() {
        let one = GrowthSymbol::one(Space::Unilateral);
        assert_eq!(one.eval(17).unwrap(), RadicalComplex::one());
        let with = one.with_override(3, RadicalComplex::zero()).unwrap();
        assert_eq!(with.eval(3).unwrap(), RadicalComplex::zero());
        assert_eq!(with.eval(4).unwrap(), RadicalComplex::one());
    }

    #[test]
    fn eval_outside_space() {
        assert!(matches!(
            ex1_a().eval(-1),
            Err(SymbolError::IndexOutsideSpace(-1))
        ));
    }

    #[test]
    fn mul_inverse_gives_one() {
        let prod = ex1_a().mul(&ex1_b()).unwrap();
        assert_eq!(prod, GrowthSymbol::one(Space::Unilateral));
    }

    #[test]
    fn shift_of_bilateral_exponential() {
        // σ¹(2ⁿ) = 2ⁿ⁻¹ = (1/2)·2ⁿ
        let two_n = GrowthSymbol::exponential(Space::Bilateral, rat_int(2));
        let shifted = two_n.shift(1).unwrap();
        assert_eq!(shifted.eval(0).unwrap(), RadicalComplex::from_rational(rat(1, 2)));
        assert_eq!(shifted.eval(3).unwrap(), RadicalComplex::from_int(4));
        let direct = GrowthSymbol::build(
            Space::Bilateral,
            RadicalComplex::from_rational(rat(1, 2)),
            vec![RadicalComplex::one()],
            vec![],
            rat_int(2),
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(shifted, direct);
    }

    #[test]
    fn abs_of_complex_coeff() {
        // |(3+4i)·2ⁿ| = 5·2ⁿ
        let a = GrowthSymbol::build(
            Space::Bilateral,
            RadicalComplex::new(rat_int(3), rat_int(4), rat_int(1)),
            vec![RadicalComplex::one()],
            vec![],
            rat_int(2),
            BTreeMap::new(),
        )
        .unwrap();
        let expect = GrowthSymbol::build(
            Space::Bilateral,
            RadicalComplex::from_int(5),
            vec![RadicalComplex::one()],
            vec![],
            rat_int(2),
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(a.abs(), expect);
    }

    #[test]
    fn reciprocal_rejects_zeros() {
        let z = GrowthSymbol::periodic(Space::Unilateral, &[1, 0]);
        assert!(matches!(z.reciprocal(), Err(SymbolError::ReciprocalOfZero)));
    }

    #[test]
    fn unilateral_shift_zero_fills() {
        // σ¹ of (n+1)² : index 0 becomes a zero override, index n ≥ 1 is n².
        let shifted = ex1_a().shift(1).unwrap();
        assert_eq!(shifted.eval(0).unwrap(), RadicalComplex::zero());
        assert_eq!(shifted.eval(3).unwrap(), RadicalComplex::from_int(9));
    }

    #[test]
    fn zero_set_of_periodic() {
        let p = GrowthSymbol::periodic(Space::Unilateral, &[1, 0]);
        let zs = p.zero_set();
        assert!(!zs.is_empty());
        assert_eq!(zs.count(), Count::Infinite);
        assert!(zs.contains(1));
        assert!(zs.contains(3));
        assert!(!zs.contains(0));
        assert_eq!(zs.sample(3), vec![1, 3, 5]);
    }

    #[test]
    fn canonical_equality_across_encodings() {
        // per(2; 2, 2) with coeff 3 equals constant 6.
        let a = GrowthSymbol::build(
            Space::Unilateral,
            RadicalComplex::from_int(3),
            vec![RadicalComplex::from_int(2), RadicalComplex::from_int(2)],
            vec![],
            Rational::one(),
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(a, GrowthSymbol::constant(Space::Unilateral, RadicalComplex::from_int(6)));
        // A redundant override canonicalizes away.
        let b = GrowthSymbol::one(Space::Unilateral)
            .with_override(5, RadicalComplex::one())
            .unwrap();
        assert_eq!(b, GrowthSymbol::one(Space::Unilateral));
    }

    #[test]
    fn override_capacity_is_enforced() {
        let mut ov = BTreeMap::new();
        for n in 0..(MAX_OVERRIDES as i64 + 1) {
            ov.insert(n, RadicalComplex::from_int(7));
        }
        let r = GrowthSymbol::build(
            Space::Unilateral,
            RadicalComplex::one(),
            vec![RadicalComplex::one()],
            vec![],
            Rational::one(),
            ov,
        );
        assert!(matches!(r, Err(SymbolError::OverrideOverflow(_))));
    }

    #[test]
    fn half_integer_exponents_evaluate_exactly() {
        // (n+1)^(3/2) at n = 3 → 4^(3/2) = 8
        let s = GrowthSymbol::build(
            Space::Unilateral,
            RadicalComplex::one(),
            vec![RadicalComplex::one()],
            vec![PolyFactor {
                root: rat_int(1),
                exp: rat(3, 2),
            }],
            Rational::one(),
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(s.eval(3).unwrap(), RadicalComplex::from_int(8));
        // at n = 1: 2^(3/2) = 2√2
        assert_eq!(
            s.eval(1).unwrap(),
            RadicalComplex::new(rat_int(2), rat_int(0), rat_int(2))
        );
    }

    #[test]
    fn bad_exponent_denominator_rejected() {
        let r = GrowthSymbol::build(
            Space::Unilateral,
            RadicalComplex::one(),
            vec![RadicalComplex::one()],
            vec![PolyFactor {
                root: rat_int(1),
                exp: rat(1, 3),
            }],
            Rational::one(),
            BTreeMap::new(),
        );
        assert!(matches!(r, Err(SymbolError::BadExponent(_))));
    }
}
