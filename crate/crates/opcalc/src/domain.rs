//! Diagonal domains on ℓ²: a [`DomainSpec`] is a finite family of constraint
//! symbols `c`, cutting out `{x ∈ ℓ² : Σ_n |c_n x_n|² < ∞ for each c}`.
//!
//! Inclusion between such domains is decided by growth domination of the
//! constraint symbols; a failed inclusion yields a concrete ℓ² vector lying
//! in the left domain but not the right one (the classical subsequence
//! construction, done in exact arithmetic).

use crate::growth::{dominated, ratio_at_least, GrowthWitness};
use crate::scalar::Rational;
use crate::symbol::{GrowthSymbol, Space, SymbolError};
use num::{BigInt, One, Zero};

/// Finite constraint family; the empty family is the maximal (no extra
/// constraint) spec.  Constraints are kept sorted and deduplicated on their
/// canonical print so specs compare and display deterministically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainSpec {
    constraints: Vec<GrowthSymbol>,
}

impl DomainSpec {
    pub fn maximal() -> DomainSpec {
        DomainSpec {
            constraints: Vec::new(),
        }
    }

    pub fn new(mut constraints: Vec<GrowthSymbol>) -> DomainSpec {
        constraints.sort_by_key(|c| c.to_string());
        constraints.dedup();
        DomainSpec { constraints }
    }

    pub fn is_maximal(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn constraints(&self) -> &[GrowthSymbol] {
        &self.constraints
    }

    pub fn union(&self, other: &DomainSpec) -> DomainSpec {
        let mut all = self.constraints.clone();
        all.extend(other.constraints.iter().cloned());
        DomainSpec::new(all)
    }

    /// Drops each constraint dominated by the pointwise max of the remaining
    /// ones, the ambient `context` symbols (typically the operator's maximal
    /// action symbol) and the constant 1.
    pub fn normalized(&self, context: &[&GrowthSymbol]) -> DomainSpec {
        let mut kept: Vec<GrowthSymbol> = self.constraints.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..kept.len() {
                let candidate = kept[i].clone();
                let mut rest: Vec<&GrowthSymbol> =
                    kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, c)| c).collect();
                rest.extend_from_slice(context);
                if dominated(&candidate, &rest).is_ok() {
                    kept.remove(i);
                    changed = true;
                    break;
                }
            }
        }
        DomainSpec::new(kept)
    }
}

/// Failure evidence for a domain inclusion `D₁ ⊆ D₂`: the violated
/// constraint of `D₂`, the subsequence along which it escapes `D₁`'s bounds,
/// and an explicit ℓ² vector in `D₁ \ D₂`.
#[derive(Debug, Clone)]
pub struct DomainWitness {
    pub violating_constraint: GrowthSymbol,
    pub progression: GrowthWitness,
    bounding: Vec<GrowthSymbol>,
}

/// One supported coordinate of the explicit counterexample vector.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessComponent {
    pub index: i64,
    pub value: Rational,
}

impl DomainWitness {
    /// Materializes the first `k` supported coordinates of a vector
    /// `x ∈ D₁ \ D₂`: at the `j`-th chosen index `x = 1/(j·(1+⌈max|c⁽ⁱ⁾|⌉))`,
    /// indices chosen along the progression where the violating constraint
    /// exceeds `2j` times that bound.  Then Σ|x|², Σ|c⁽ⁱ⁾x|² ≤ Σ 1/j² < ∞
    /// while each |violating·x| ≥ 2·(1+|max|)/(2+|max|) ≥ 1 term-wise.
    pub fn vector(&self, k: usize) -> Vec<WitnessComponent> {
        let bounds: Vec<&GrowthSymbol> = self.bounding.iter().collect();
        let mut out = Vec::with_capacity(k);
        let mut indices = self.progression.indices();
        let mut j: u64 = 1;
        while out.len() < k {
            let target = Rational::from(BigInt::from(2 * j));
            // Walk the progression until the exact ratio clears 2j.
            let mut found = None;
            for _ in 0..100_000 {
                let n = match indices.next() {
                    Some(n) => n,
                    None => break,
                };
                match ratio_at_least(&self.violating_constraint, &bounds, n, &target) {
                    Ok(true) => {
                        found = Some(n);
                        break;
                    }
                    Ok(false) => continue,
                    Err(_) => continue,
                }
            }
            let n = found.expect("growth witness ratio is unbounded along the progression");
            let mut ceil = BigInt::zero();
            for b in &bounds {
                if let Ok(v) = b.eval(n) {
                    ceil = ceil.max(v.modulus_ceil());
                }
            }
            let denom = BigInt::from(j) * (BigInt::one() + ceil);
            out.push(WitnessComponent {
                index: n,
                value: Rational::new(BigInt::one(), denom),
            });
            j += 1;
        }
        out
    }
}

/// Decides inclusion of effective domains given each side's full constraint
/// family (the caller includes the pulled-back action symbol).  `D₁ ⊆ D₂`
/// iff every constraint of `D₂` is growth-dominated by `D₁`'s family.
pub fn family_leq(
    left: &[&GrowthSymbol],
    right: &[&GrowthSymbol],
    space: Space,
) -> Result<(), Box<DomainWitness>> {
    for c in right {
        if let Err(progression) = dominated(c, left) {
            return Err(Box::new(DomainWitness {
                violating_constraint: (*c).clone(),
                progression,
                bounding: if left.is_empty() {
                    vec![GrowthSymbol::one(space)]
                } else {
                    left.iter().map(|s| (*s).clone()).collect()
                },
            }));
        }
    }
    Ok(())
}

/// Partial sums used by tests to certify a witness vector numerically:
/// returns (Σ|x|², Σ|max-bound·x|², Σ|violating·x|²) over the given
/// components.
pub fn witness_partial_sums(
    witness: &DomainWitness,
    components: &[WitnessComponent],
) -> Result<(f64, f64, f64), SymbolError> {
    let mut sx = 0.0;
    let mut sb = 0.0;
    let mut sc = 0.0;
    for comp in components {
        let xf = rational_f64(&comp.value);
        sx += xf * xf;
        let mut m: f64 = 0.0;
        for b in &witness.bounding {
            let (re, im) = b.eval(comp.index)?.to_f64();
            m = m.max((re * re + im * im).sqrt());
        }
        sb += (m * xf) * (m * xf);
        let (re, im) = witness.violating_constraint.eval(comp.index)?.to_f64();
        let cv = (re * re + im * im).sqrt();
        sc += (cv * xf) * (cv * xf);
    }
    Ok((sx, sb, sc))
}

fn rational_f64(r: &Rational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::Space;

    #[test]
    fn every_domain_sits_inside_l2() {
        // D((n+1)²) ⊆ ℓ²: the right side has no constraints at all.
        let a = GrowthSymbol::poly1(1, 2);
        assert!(family_leq(&[&a], &[], Space::Unilateral).is_ok());
    }

    #[test]
    fn l2_is_not_inside_an_unbounded_domain() {
        let a = GrowthSymbol::poly1(1, 2);
        let err = family_leq(&[], &[&a], Space::Unilateral).unwrap_err();
        assert_eq!(err.violating_constraint, a);
        // The explicit vector is in ℓ² but not in D((n+1)²): certify by
        // partial sums.
        let comps = err.vector(40);
        let (sx, sb, sc) = witness_partial_sums(&err, &comps).unwrap();
        assert!(sx < 2.0, "Σ|x|² stays summable, got {sx}");
        assert!(sb < 2.0, "Σ|bound·x|² stays summable, got {sb}");
        assert!(sc > 40.0, "Σ|c·x|² diverges, got {sc}");
    }

    #[test]
    fn polynomial_domination() {
        // D((n+1)³) ⊆ D(n+1)
        let cube = GrowthSymbol::poly1(1, 3);
        let lin = GrowthSymbol::poly1(1, 1);
        assert!(family_leq(&[&cube], &[&lin], Space::Unilateral).is_ok());
        assert!(family_leq(&[&lin], &[&cube], Space::Unilateral).is_err());
    }

    #[test]
    fn normalization_drops_redundant_constraints() {
        let lin = GrowthSymbol::poly1(1, 1);
        let sq = GrowthSymbol::poly1(1, 2);
        let spec = DomainSpec::new(vec![lin.clone(), sq.clone()]);
        let norm = spec.normalized(&[]);
        assert_eq!(norm.constraints(), &[sq.clone()]);
        // With the square available as ambient context even that is dropped.
        let norm2 = spec.normalized(&[&sq]);
        assert!(norm2.is_maximal());
        // A bounded constraint is dominated by the constant 1 alone.
        let bounded = DomainSpec::new(vec![GrowthSymbol::poly1(1, -2)]);
        assert!(bounded.normalized(&[]).is_maximal());
    }
}
