//! Seeded random generation of symbols and monomial operators for the
//! property suites and the rule-soundness batteries.
//!
//! Generators are deliberately biased toward the structure the theorems
//! care about: real diagonals (self-adjoint pool), unimodular-coefficient
//! symbols (unitary pool), bounded-below bounded symbols (invertible pool),
//! shift-invariant moduli (normal pool).  Plain `monomial` mixes everything,
//! including restricted domains and shifts.

use crate::domain::DomainSpec;
use crate::operator::MonomialOperator;
use crate::scalar::{rat, rat_int, RadicalComplex, Rational};
use crate::symbol::{GrowthSymbol, PolyFactor, Space};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub struct Sampler {
    rng: StdRng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: StdRng::seed_from_u64(seed),
        }
    }

    pub fn space(&mut self) -> Space {
        if self.rng.gen_bool(0.5) {
            Space::Unilateral
        } else {
            Space::Bilateral
        }
    }

    fn small_rat(&mut self, nonzero: bool) -> Rational {
        loop {
            let n = self.rng.gen_range(-4i64..=4);
            let d = *[1i64, 1, 1, 2, 3].get(self.rng.gen_range(0..5)).unwrap();
            let r = rat(n, d);
            if !nonzero || n != 0 {
                return r;
            }
        }
    }

    fn scalar(&mut self, nonzero: bool) -> RadicalComplex {
        loop {
            let x = self.small_rat(false);
            let y = if self.rng.gen_bool(0.4) {
                self.small_rat(false)
            } else {
                rat_int(0)
            };
            let s = *[1i64, 1, 1, 2, 3, 5].get(self.rng.gen_range(0..6)).unwrap();
            let v = RadicalComplex::new(x, y, rat_int(s));
            if !nonzero || !v.is_zero() {
                return v;
            }
        }
    }

    fn real_positive_scalar(&mut self) -> RadicalComplex {
        let n = self.rng.gen_range(1i64..=4);
        let d = self.rng.gen_range(1i64..=3);
        RadicalComplex::from_rational(rat(n, d))
    }

    /// General symbol: periodic × poly (unilateral) × exponential, with a
    /// few overrides.
    pub fn symbol(&mut self, space: Space) -> GrowthSymbol {
        let q = *[1usize, 1, 1, 2, 2, 3].get(self.rng.gen_range(0..6)).unwrap();
        let residues: Vec<RadicalComplex> = (0..q)
            .map(|_| {
                if self.rng.gen_bool(0.12) {
                    RadicalComplex::zero()
                } else {
                    self.scalar(true)
                }
            })
            .collect();
        let coeff = self.scalar(true);
        let poly = if space == Space::Unilateral && self.rng.gen_bool(0.6) {
            let k = self.rng.gen_range(1..=2);
            (0..k)
                .map(|_| PolyFactor {
                    root: rat_int(self.rng.gen_range(1i64..=3)),
                    exp: rat(self.rng.gen_range(-4i64..=4), *[1i64, 1, 2].get(self.rng.gen_range(0..3)).unwrap()),
                })
                .collect()
        } else {
            vec![]
        };
        let expbase = if self.rng.gen_bool(0.4) {
            rat(
                *[1i64, 1, 2, 3].get(self.rng.gen_range(0..4)).unwrap(),
                *[1i64, 2].get(self.rng.gen_range(0..2)).unwrap(),
            )
        } else {
            rat_int(1)
        };
        let mut overrides = std::collections::BTreeMap::new();
        for _ in 0..self.rng.gen_range(0..3) {
            let idx = match space {
                Space::Unilateral => self.rng.gen_range(0i64..6),
                Space::Bilateral => self.rng.gen_range(-5i64..6),
            };
            let v = if self.rng.gen_bool(0.3) {
                RadicalComplex::zero()
            } else {
                self.scalar(true)
            };
            overrides.insert(idx, v);
        }
        GrowthSymbol::build(space, coeff, residues, poly, expbase, overrides)
            .expect("sampled symbol parameters are valid")
    }

    /// Symbol with no zeros anywhere (dense-range / reciprocal-safe pool).
    pub fn nonvanishing_symbol(&mut self, space: Space) -> GrowthSymbol {
        loop {
            let s = self.symbol(space);
            if s.zero_set().is_empty() {
                return s;
            }
        }
    }

    /// Real-valued symbol (self-adjoint diagonal pool).
    pub fn real_symbol(&mut self, space: Space) -> GrowthSymbol {
        let s = self.symbol(space);
        // Realification: |s| with occasional sign flips through residues.
        let mut r = s.abs();
        if self.rng.gen_bool(0.3) {
            let flip = GrowthSymbol::periodic(space, &[1, -1]);
            r = r.mul(&flip).expect("same space");
        }
        r
    }

    pub fn shift_amount(&mut self) -> i64 {
        *[-2i64, -1, -1, 0, 0, 0, 1, 1, 2].get(self.rng.gen_range(0..9)).unwrap()
    }

    /// Generic monomial operator, possibly restricted.
    pub fn monomial(&mut self, space: Space) -> MonomialOperator {
        let symbol = self.symbol(space);
        let shift = self.shift_amount();
        let spec = if self.rng.gen_bool(0.35) {
            DomainSpec::new(vec![self.symbol(space)])
        } else {
            DomainSpec::maximal()
        };
        MonomialOperator::new(symbol, shift, spec).expect("sampled operator is valid")
    }

    pub fn closed_monomial(&mut self, space: Space) -> MonomialOperator {
        self.monomial(space).closure()
    }

    /// Self-adjoint pool: closed real diagonals.
    pub fn selfadjoint(&mut self, space: Space) -> MonomialOperator {
        MonomialOperator::diag(self.real_symbol(space)).expect("diagonal is valid")
    }

    /// Normal pool: closed diagonals with arbitrary complex symbols, plus
    /// bilateral weighted shifts with shift-invariant modulus.
    pub fn normal(&mut self, space: Space) -> MonomialOperator {
        if space == Space::Bilateral && self.rng.gen_bool(0.3) {
            let modulus = self.real_positive_scalar();
            let phase = self.scalar(true).unimodular();
            let sym = GrowthSymbol::constant(space, modulus.mul(&phase));
            return MonomialOperator::maximal(sym, self.rng.gen_range(-1i64..=1))
                .expect("constant weighted shift is valid");
        }
        MonomialOperator::diag(self.symbol(space)).expect("diagonal is valid")
    }

    /// Invertible pool: diagonals bounded above and below by positive
    /// constants (periodic nonzero residues, no poly, no exponential).
    pub fn invertible_bounded(&mut self, space: Space) -> MonomialOperator {
        let q = *[1usize, 1, 2, 2, 3].get(self.rng.gen_range(0..5)).unwrap();
        let residues: Vec<RadicalComplex> = (0..q).map(|_| self.scalar(true)).collect();
        let sym = GrowthSymbol::build(
            space,
            self.scalar(true),
            residues,
            vec![],
            rat_int(1),
            Default::default(),
        )
        .expect("periodic symbol is valid");
        MonomialOperator::diag(sym).expect("diagonal is valid")
    }

    /// Unitary pool: unimodular diagonals, plus bilateral shifts with
    /// unimodular weights.
    pub fn unitary(&mut self, space: Space) -> MonomialOperator {
        let q = *[1usize, 1, 2].get(self.rng.gen_range(0..3)).unwrap();
        let residues: Vec<RadicalComplex> = (0..q).map(|_| self.scalar(true).unimodular()).collect();
        let sym = GrowthSymbol::build(
            space,
            self.scalar(true).unimodular(),
            residues,
            vec![],
            rat_int(1),
            Default::default(),
        )
        .expect("unimodular symbol is valid");
        let shift = if space == Space::Bilateral {
            self.rng.gen_range(-1i64..=1)
        } else {
            0
        };
        MonomialOperator::maximal(sym, shift).expect("unitary monomial is valid")
    }

    /// Bounded pool with bounded-below symbols (inner factors for the
    /// adjoint-product equality suites).
    pub fn bounded_below_bounded(&mut self, space: Space) -> MonomialOperator {
        self.invertible_bounded(space)
    }

    pub fn gen_range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn gen_bool(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pools_deliver_what_they_promise() {
        let mut s = Sampler::new(42);
        for _ in 0..50 {
            let space = s.space();
            let sa = s.selfadjoint(space);
            assert!(sa.properties().selfadjoint, "{sa:?}");
            let u = s.unitary(space);
            assert!(u.properties().unitary, "{u:?}");
            let inv = s.invertible_bounded(space);
            let p = inv.properties();
            assert!(p.invertible_with_bounded_inverse && p.bounded, "{inv:?}");
            let n = s.normal(space);
            assert!(n.properties().normal, "{n:?}");
            let c = s.closed_monomial(space);
            assert!(c.properties().closed);
        }
    }

    #[test]
    fn seeding_is_reproducible() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..20 {
            let sp = a.space();
            assert_eq!(sp, b.space());
            assert_eq!(a.monomial(sp), b.monomial(sp));
        }
    }
}
