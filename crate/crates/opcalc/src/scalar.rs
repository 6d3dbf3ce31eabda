//! Exact complex scalars of the form `(x + iy)·√s` with rational `x`, `y`
//! and a positive rational radicand `s`.
//!
//! The class is closed under product, conjugation, modulus and reciprocal,
//! which is exactly what diagonal symbols and their polar parts need.  Sums
//! are deliberately not provided.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// Largest prime bound used when extracting square factors from a radicand.
/// Radicands reachable from library-generated values stay far below this.
const TRIAL_DIVISION_BOUND: u64 = 1 << 20;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// Integer power of a rational, with negative exponents allowed for nonzero
/// bases.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let e: i32 = exp
        .unsigned_abs()
        .try_into()
        .expect("exponent magnitude fits i32");
    let p = base.pow(e);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// `(x + iy)·√s` in canonical form: `s` is a square-free positive integer
/// (as a rational), and zero is stored as `(0, 0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalComplex {
    x: Rational,
    y: Rational,
    s: Rational,
}

/// Splits `n ≥ 1` into `m²·d` with `d` square-free, returning `(m, d)`.
fn extract_square(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    let mut square_root = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &(&p * &p) <= &rest && p < BigInt::from(TRIAL_DIVISION_BOUND) {
        if (&rest % &p).is_zero() {
            let mut count = 0u32;
            while (&rest % &p).is_zero() {
                rest /= &p;
                count += 1;
            }
            for _ in 0..count / 2 {
                square_root *= &p;
            }
            if count % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigInt::from(2u32) { 1 } else { 2 };
    }
    if !rest.is_one() {
        // Leftover beyond the trial bound: either a perfect square or taken
        // as square-free.
        let r = rest.sqrt();
        if &r * &r == rest {
            square_root *= r;
        } else {
            free *= &rest;
        }
    }
    (square_root, free)
}

impl RadicalComplex {
    /// Canonicalizes an arbitrary `(x + iy)·√s` with rational `s > 0`.
    pub fn new(x: Rational, y: Rational, s: Rational) -> RadicalComplex {
        assert!(s.is_positive(), "radicand must be positive");
        if x.is_zero() && y.is_zero() {
            return RadicalComplex {
                x,
                y,
                s: Rational::one(),
            };
        }
        // (x+iy)√(p/q) = ((x+iy)/q)·√(pq) with pq a positive integer.
        let p = s.numer().clone();
        let q = s.denom().clone();
        let radicand = &p * &q;
        let (m, d) = extract_square(&radicand);
        let scale = BigRational::new(m, q);
        RadicalComplex {
            x: x * &scale,
            y: y * &scale,
            s: BigRational::from(d),
        }
    }

    pub fn zero() -> RadicalComplex {
        RadicalComplex::new(Rational::zero(), Rational::zero(), Rational::one())
    }

    pub fn one() -> RadicalComplex {
        RadicalComplex::new(Rational::one(), Rational::zero(), Rational::one())
    }

    pub fn from_rational(r: Rational) -> RadicalComplex {
        RadicalComplex::new(r, Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> RadicalComplex {
        RadicalComplex::from_rational(rat_int(n))
    }

    /// The imaginary unit.
    pub fn i() -> RadicalComplex {
        RadicalComplex::new(Rational::zero(), Rational::one(), Rational::one())
    }

    /// `√r` for a positive rational `r`.
    pub fn sqrt_of(r: Rational) -> RadicalComplex {
        RadicalComplex::new(Rational::one(), Rational::zero(), r)
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero() && self.s.is_one()
    }

    /// True when the value is a real number.
    pub fn is_real(&self) -> bool {
        self.y.is_zero()
    }

    pub fn is_real_nonneg(&self) -> bool {
        self.y.is_zero() && !self.x.is_negative()
    }

    pub fn mul(&self, other: &RadicalComplex) -> RadicalComplex {
        if self.is_zero() || other.is_zero() {
            return RadicalComplex::zero();
        }
        let x = &self.x * &other.x - &self.y * &other.y;
        let y = &self.x * &other.y + &self.y * &other.x;
        RadicalComplex::new(x, y, &self.s * &other.s)
    }

    pub fn conj(&self) -> RadicalComplex {
        RadicalComplex {
            x: self.x.clone(),
            y: -self.y.clone(),
            s: self.s.clone(),
        }
    }

    pub fn neg(&self) -> RadicalComplex {
        RadicalComplex {
            x: -self.x.clone(),
            y: -self.y.clone(),
            s: self.s.clone(),
        }
    }

    /// `|a|² = (x² + y²)·s`, an exact nonnegative rational.
    pub fn abs_sq(&self) -> Rational {
        (&self.x * &self.x + &self.y * &self.y) * &self.s
    }

    /// `|a| = √((x² + y²)·s)`, again a RadicalComplex (real, nonnegative).
    pub fn modulus(&self) -> RadicalComplex {
        if self.is_zero() {
            return RadicalComplex::zero();
        }
        RadicalComplex::new(Rational::one(), Rational::zero(), self.abs_sq())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<RadicalComplex> {
        if self.is_zero() {
            return None;
        }
        // 1/((x+iy)√s) = (x-iy)/((x²+y²)s) · √s
        let n = self.abs_sq();
        Some(RadicalComplex::new(
            &self.x / &n,
            -(&self.y / &n),
            self.s.clone(),
        ))
    }

    /// `a/|a|` for nonzero `a`; zero maps to zero (partial-isometry symbol
    /// convention).
    pub fn unimodular(&self) -> RadicalComplex {
        if self.is_zero() {
            return RadicalComplex::zero();
        }
        let norm_sq = &self.x * &self.x + &self.y * &self.y;
        RadicalComplex::new(self.x.clone(), self.y.clone(), norm_sq.recip())
    }

    pub fn scale(&self, r: &Rational) -> RadicalComplex {
        if r.is_zero() {
            return RadicalComplex::zero();
        }
        RadicalComplex {
            x: &self.x * r,
            y: &self.y * r,
            s: self.s.clone(),
        }
    }

    /// Smallest integer `t ≥ |a|`.
    pub fn modulus_ceil(&self) -> BigInt {
        let q = self.abs_sq();
        if q.is_zero() {
            return BigInt::zero();
        }
        // smallest t with t² ≥ q
        let qi = q.ceil().to_integer();
        let mut t = qi.sqrt();
        while BigRational::from(&t * &t) < q {
            t += 1;
        }
        t
    }

    /// Compares `|self|` with `|other|` exactly.
    pub fn cmp_modulus(&self, other: &RadicalComplex) -> std::cmp::Ordering {
        self.abs_sq().cmp(&other.abs_sq())
    }

    /// Floating approximation `(re, im)`.
    pub fn to_f64(&self) -> (f64, f64) {
        fn r2f(r: &Rational) -> f64 {
            let n = r.numer();
            let d = r.denom();
            let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
            let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
            nf / df
        }
        let root = r2f(&self.s).sqrt();
        (r2f(&self.x) * root, r2f(&self.y) * root)
    }
}

fn fmt_rat(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for RadicalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_rat(&self.x, f)?;
        write!(f, ",")?;
        fmt_rat(&self.y, f)?;
        write!(f, ",")?;
        fmt_rat(&self.s, f)?;
        write!(f, ")")
    }
}

impl fmt::Debug for RadicalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rc(x: i64, y: i64, s: i64) -> RadicalComplex {
        RadicalComplex::new(rat_int(x), rat_int(y), rat_int(s))
    }

    #[test]
    fn product_of_conjugates() {
        // (1+i)(1-i) = 2
        let a = rc(1, 1, 1);
        let b = rc(1, -1, 1);
        assert_eq!(a.mul(&b), rc(2, 0, 1));
    }

    #[test]
    fn modulus_folds_radicand() {
        // |(1+i)√2| = √(2·2) = 2
        let a = rc(1, 1, 2);
        assert_eq!(a.modulus(), rc(2, 0, 1));
    }

    #[test]
    fn zero_annihilates() {
        let z = RadicalComplex::zero();
        let a = rc(3, -7, 5);
        assert_eq!(z.mul(&a), z);
        assert_eq!(a.mul(&z), z);
    }

    #[test]
    fn canonical_square_extraction() {
        // √12 = 2√3
        let a = RadicalComplex::new(rat_int(1), rat_int(0), rat_int(12));
        assert_eq!(a, rc(2, 0, 3));
        // √(4/9) = 2/3
        let b = RadicalComplex::new(rat_int(1), rat_int(0), rat(4, 9));
        assert_eq!(b, RadicalComplex::from_rational(rat(2, 3)));
    }

    #[test]
    fn modulus_is_multiplicative() {
        let a = rc(3, 4, 2);
        let b = rc(-1, 2, 3);
        assert_eq!(a.mul(&b).modulus(), a.modulus().mul(&b.modulus()));
    }

    #[test]
    fn inverse_and_unimodular() {
        let a = rc(3, 4, 1);
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).is_one());
        // |3+4i| = 5, so a/|a| = (3+4i)/5
        let u = a.unimodular();
        assert_eq!(u.mul(&a.modulus()), a);
        assert!(u.abs_sq().is_one());
    }

    #[test]
    fn modulus_ceiling() {
        let a = rc(1, 1, 1); // |a| = √2
        assert_eq!(a.modulus_ceil(), BigInt::from(2));
        let b = rc(2, 0, 1);
        assert_eq!(b.modulus_ceil(), BigInt::from(2));
        assert_eq!(RadicalComplex::zero().modulus_ceil(), BigInt::from(0));
    }
}
