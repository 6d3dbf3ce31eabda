//! Decidable asymptotic comparison of growth symbols.
//!
//! `dominated(a, S)` decides `∃C: |a_n| ≤ C·(1 + max_{s∈S}|s_n|)` for all n
//! by comparing (exponential base, polynomial degree) keys per residue class
//! and per direction.  A failed comparison always comes with a concrete
//! witness subsequence along which the ratio grows without bound; that
//! subsequence is what the domain-inclusion counterexample machinery
//! consumes.

use crate::scalar::Rational;
use crate::symbol::{Direction, GrowthSymbol, SymbolError};
use num::integer::Integer;
use num::{One, Zero};
use std::fmt;

/// Growth rate of one residue class in one direction, ordered
/// lexicographically: exponential base first, then polynomial degree.
/// Toward −∞ the base is inverted so that larger keys still mean faster
/// growth.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct GrowthKey {
    base: Rational,
    degree: Rational,
}

fn key_of(sym: &GrowthSymbol, dir: Direction) -> GrowthKey {
    let degree: Rational = sym.poly().iter().map(|f| f.exp.clone()).sum();
    match dir {
        Direction::Plus => GrowthKey {
            base: sym.expbase().clone(),
            degree,
        },
        Direction::Minus => GrowthKey {
            base: sym.expbase().recip(),
            degree: -degree,
        },
    }
}

fn constant_key() -> GrowthKey {
    GrowthKey {
        base: Rational::one(),
        degree: Rational::zero(),
    }
}

fn class_active(sym: &GrowthSymbol, class: i64, modulus: i64) -> bool {
    if sym.coeff().is_zero() {
        return false;
    }
    let q = sym.period();
    debug_assert_eq!(modulus % q, 0);
    !sym.residues()[(class.rem_euclid(q)) as usize].is_zero()
}

/// Arithmetic progression along which `|a_n| / (1 + max|s_n|)` is unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthWitness {
    pub start: i64,
    pub step: i64,
}

impl GrowthWitness {
    pub fn indices(&self) -> impl Iterator<Item = i64> + '_ {
        let (start, step) = (self.start, self.step);
        (0..).map(move |k| start + k * step)
    }
}

impl fmt::Display for GrowthWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "indices {} + k·{}", self.start, self.step)
    }
}

/// Decides `∃C ∀n: |a_n| ≤ C·(1 + max_{s ∈ bounds}|s_n|)`.
///
/// Finitely many indices never matter (the constant absorbs them), so only
/// the per-class tail keys are compared; a class of `a` that vanishes
/// identically is always fine, and a class where every bound vanishes
/// requires `a` to stay bounded there.
pub fn dominated(a: &GrowthSymbol, bounds: &[&GrowthSymbol]) -> Result<(), GrowthWitness> {
    let mut modulus = a.period();
    for b in bounds {
        modulus = modulus.lcm(&b.period());
    }
    for dir in a.space().directions() {
        let a_key = key_of(a, *dir);
        for class in 0..modulus {
            if !class_active(a, class, modulus) {
                continue;
            }
            let mut bound_key = constant_key();
            for b in bounds {
                if class_active(b, class, modulus) {
                    bound_key = bound_key.max(key_of(b, *dir));
                }
            }
            if a_key > bound_key {
                return Err(witness_progression(a, bounds, class, modulus, *dir));
            }
        }
    }
    Ok(())
}

/// `∃C: |a_n| ≤ C(1+|b_n|)` — a preorder on symbols of one space.
pub fn growth_leq(a: &GrowthSymbol, b: &GrowthSymbol) -> Result<(), GrowthWitness> {
    dominated(a, &[b])
}

fn witness_progression(
    a: &GrowthSymbol,
    bounds: &[&GrowthSymbol],
    class: i64,
    modulus: i64,
    dir: Direction,
) -> GrowthWitness {
    let mut span = a.override_span().max(a.poly_valid_from());
    for b in bounds {
        span = span.max(b.override_span()).max(b.poly_valid_from());
    }
    let floor = span + modulus + 1;
    match dir {
        Direction::Plus => {
            let mut start = class.rem_euclid(modulus);
            while start < floor {
                start += modulus;
            }
            GrowthWitness {
                start,
                step: modulus,
            }
        }
        Direction::Minus => {
            let mut start = class.rem_euclid(modulus) - modulus;
            while start > -floor {
                start -= modulus;
            }
            GrowthWitness {
                start,
                step: -modulus,
            }
        }
    }
}

/// `|a_n| / (1 + max_s |s_n|)` as an exact pair (numerator², denominator²)
/// comparison helper: returns true when the ratio at `n` is at least `t`.
pub fn ratio_at_least(
    a: &GrowthSymbol,
    bounds: &[&GrowthSymbol],
    n: i64,
    t: &Rational,
) -> Result<bool, SymbolError> {
    let av = a.eval(n)?.abs_sq();
    // 1 + max|s_n| ≤ 1 + ceil(max|s_n|), an exact integer bound.
    let mut ceil = num::BigInt::zero();
    for b in bounds {
        ceil = ceil.max(b.eval(n)?.modulus_ceil());
    }
    let denom = Rational::from(ceil + num::BigInt::one());
    // |a_n| ≥ t·(1+ceil) ⟺ |a_n|² ≥ t²(1+ceil)²
    Ok(av >= t * t * (&denom * &denom))
}

/// Classification flags for a symbol: boundedness, positive infimum over the
/// cofinite support, exact zero set and a growth summary.
#[derive(Debug, Clone)]
pub struct SymbolClass {
    pub bounded: bool,
    pub inf_positive: bool,
    pub zero_set: crate::symbol::ZeroSet,
    pub growth_summary: String,
}

pub fn classify(sym: &GrowthSymbol) -> SymbolClass {
    let one = GrowthSymbol::one(sym.space());
    let bounded = dominated(sym, &[&one]).is_ok();
    // inf over support > 0 ⟺ no active class decays in any direction.
    let mut inf_positive = true;
    let modulus = sym.period();
    for dir in sym.space().directions() {
        let key = key_of(sym, *dir);
        for class in 0..modulus {
            if class_active(sym, class, modulus) && key < constant_key() {
                inf_positive = false;
            }
        }
    }
    let degree: Rational = sym.poly().iter().map(|f| f.exp.clone()).sum();
    let growth_summary = format!(
        "base {}{}{}",
        sym.expbase(),
        if degree.is_zero() {
            String::new()
        } else {
            format!(", degree {degree}")
        },
        if sym.coeff().is_zero() { ", zero base" } else { "" }
    );
    SymbolClass {
        bounded,
        inf_positive,
        zero_set: sym.zero_set(),
        growth_summary,
    }
}

/// Convenience wrapper used by tests: float ratio along a witness.
pub fn ratio_f64(a: &GrowthSymbol, bounds: &[&GrowthSymbol], n: i64) -> f64 {
    let (ar, ai) = a.eval(n).map(|v| v.to_f64()).unwrap_or((f64::NAN, 0.0));
    let av = (ar * ar + ai * ai).sqrt();
    let mut m: f64 = 0.0;
    for b in bounds {
        let (br, bi) = b.eval(n).map(|v| v.to_f64()).unwrap_or((f64::NAN, 0.0));
        m = m.max((br * br + bi * bi).sqrt());
    }
    av / (1.0 + m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;
    use crate::symbol::{GrowthSymbol, Space};

    #[test]
    fn polynomial_order() {
        let a = GrowthSymbol::poly1(1, 1);
        let b = GrowthSymbol::poly1(1, 2);
        assert!(growth_leq(&a, &b).is_ok());
        assert!(growth_leq(&b, &a).is_err());
    }

    #[test]
    fn exponential_beats_polynomial() {
        let a = GrowthSymbol::exponential(Space::Unilateral, rat_int(2));
        let b = GrowthSymbol::poly1(1, 100);
        assert!(growth_leq(&a, &b).is_err());
        assert!(growth_leq(&b, &a).is_ok());
    }

    #[test]
    fn zero_residue_class_defeats_domination() {
        // a = 2ⁿ, b = per(2; 1, 0)·2ⁿ: on odd indices b vanishes and the
        // ratio |a|/(1+|b|) = 2ⁿ blows up.
        let a = GrowthSymbol::exponential(Space::Unilateral, rat_int(2));
        let b = GrowthSymbol::periodic(Space::Unilateral, &[1, 0])
            .mul(&a)
            .unwrap();
        let w = growth_leq(&a, &b).unwrap_err();
        assert_eq!(w.step.rem_euclid(2), 0);
        assert_eq!(w.start.rem_euclid(2), 1, "witness lands on the odd class");
        // ratio grows without bound along the witness (checked at n = 1..41
        // in spirit: every index of the class has ratio 2ⁿ).
        let mut last = 0.0;
        for n in w.indices().take(10) {
            let r = ratio_f64(&a, &[&b], n);
            assert!(r > last);
            last = r;
        }
        assert!(last > 1e6);
    }

    #[test]
    fn bilateral_directions_both_checked() {
        // 2ⁿ vs (1/2)ⁿ: each defeats the other in one direction.
        let up = GrowthSymbol::exponential(Space::Bilateral, rat_int(2));
        let down = GrowthSymbol::exponential(Space::Bilateral, crate::scalar::rat(1, 2));
        assert!(growth_leq(&up, &down).is_err());
        assert!(growth_leq(&down, &up).is_err());
        let w = growth_leq(&down, &up).unwrap_err();
        assert!(w.step < 0, "failure must be witnessed toward -infinity");
    }

    #[test]
    fn classify_examples() {
        let b = GrowthSymbol::poly1(1, -2);
        let cb = classify(&b);
        assert!(cb.bounded);
        assert!(!cb.inf_positive);
        assert!(cb.zero_set.is_empty());

        let a = GrowthSymbol::poly1(1, 2);
        let ca = classify(&a);
        assert!(!ca.bounded);
        assert!(ca.inf_positive);
        assert!(ca.zero_set.is_empty());

        let p = GrowthSymbol::periodic(Space::Unilateral, &[1, 0]);
        let cp = classify(&p);
        assert!(cp.bounded);
        assert!(!cp.zero_set.is_empty());
        assert_eq!(cp.zero_set.sample(2), vec![1, 3]);
    }

    #[test]
    fn domination_against_a_family() {
        // n+1 is dominated by max(1, (n+1)²) but (n+1)³ is not.
        let lin = GrowthSymbol::poly1(1, 1);
        let sq = GrowthSymbol::poly1(1, 2);
        let cube = GrowthSymbol::poly1(1, 3);
        let one = GrowthSymbol::one(Space::Unilateral);
        assert!(dominated(&lin, &[&one, &sq]).is_ok());
        assert!(dominated(&cube, &[&one, &sq]).is_err());
    }
}
