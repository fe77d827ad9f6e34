//! Exact integer and rational arithmetic shared by the rest of the crate.
//!
//! Integers are [`BigInt`]; fractions are always stored in lowest terms with a
//! positive denominator, so derived equality is mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Int = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("gcd of (0, 0) is undefined")]
    BothZero,
    #[error("empty list")]
    EmptyList,
    #[error("expected a positive integer, got {0}")]
    NonPositive(Int),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a fraction")]
    Parse(String),
}

/// Extended Euclid: returns `(g, s, t)` with `g = gcd(a, b) > 0` and `s*a + t*b = g`.
pub fn ext_gcd(a: &Int, b: &Int) -> Result<(Int, Int, Int), ArithmeticError> {
    if a.is_zero() && b.is_zero() {
        return Err(ArithmeticError::BothZero);
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Int::one(), Int::zero());
    let (mut old_t, mut t) = (Int::zero(), Int::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        Ok((-old_r, -old_s, -old_t))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

fn check_positive(ns: &[Int]) -> Result<(), ArithmeticError> {
    if ns.is_empty() {
        return Err(ArithmeticError::EmptyList);
    }
    match ns.iter().find(|n| !n.is_positive()) {
        Some(n) => Err(ArithmeticError::NonPositive(n.clone())),
        None => Ok(()),
    }
}

/// Least common multiple of a nonempty list of positive integers.
pub fn lcm_list(ns: &[Int]) -> Result<Int, ArithmeticError> {
    check_positive(ns)?;
    Ok(ns.iter().fold(Int::one(), |acc, n| acc.lcm(n)))
}

/// Greatest common divisor of a nonempty list of positive integers.
pub fn gcd_list(ns: &[Int]) -> Result<Int, ArithmeticError> {
    check_positive(ns)?;
    Ok(ns.iter().fold(Int::zero(), |acc, n| acc.gcd(n)))
}

/// Inverse of `a` modulo `m` in `[0, m)`, if it exists. `m = 1` gives 0.
pub fn mod_inverse(a: &Int, m: &Int) -> Option<Int> {
    if !m.is_positive() {
        return None;
    }
    let (g, s, _) = ext_gcd(a, m).ok()?;
    g.is_one().then(|| s.mod_floor(m))
}

/// Reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction(BigRational);

impl Fraction {
    pub fn new(numer: impl Into<Int>, denom: impl Into<Int>) -> Result<Self, ArithmeticError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(ArithmeticError::ZeroDenominator);
        }
        Ok(Fraction(BigRational::new(numer.into(), denom)))
    }

    pub fn from_int(n: impl Into<Int>) -> Self {
        Fraction(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Fraction(BigRational::zero())
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn floor(&self) -> Int {
        self.numer().div_floor(self.denom())
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Fraction {
        Fraction::new(self.numer().mod_floor(self.denom()), self.denom().clone())
            .expect("denominator is positive")
    }
}

impl From<Int> for Fraction {
    fn from(n: Int) -> Self {
        Fraction::from_int(n)
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Fraction> for &Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &Fraction) -> Fraction {
                Fraction((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                Fraction(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-self.0)
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-&self.0)
    }
}

impl std::iter::Sum for Fraction {
    fn sum<I: Iterator<Item = Fraction>>(iter: I) -> Self {
        iter.fold(Fraction::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Fraction {
    type Err = ArithmeticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ArithmeticError::Parse(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: Int = n.parse().map_err(|_| err())?;
        let d: Int = d.parse().map_err(|_| err())?;
        Fraction::new(n, d)
    }
}

/// An element of ℚ/ℤ, i.e. the rational point `exp(2πi·t)` of the unit circle,
/// written additively. Always stored as its representative in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalAngle(Fraction);

impl RationalAngle {
    pub fn new(value: Fraction) -> Self {
        RationalAngle(value.fract())
    }

    /// Shorthand for `n/d mod 1`; panics on `d = 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        RationalAngle::new(Fraction::new(n, d).expect("nonzero denominator"))
    }

    pub fn zero() -> Self {
        RationalAngle(Fraction::zero())
    }

    pub fn value(&self) -> &Fraction {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &RationalAngle) -> RationalAngle {
        RationalAngle::new(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &RationalAngle) -> RationalAngle {
        RationalAngle::new(&self.0 - &other.0)
    }

    pub fn neg(&self) -> RationalAngle {
        RationalAngle::new(-&self.0)
    }

    pub fn scale(&self, k: &Int) -> RationalAngle {
        RationalAngle::new(&self.0 * &Fraction::from_int(k.clone()))
    }

    /// Order in ℚ/ℤ, which is the reduced denominator.
    pub fn order(&self) -> Int {
        self.0.denom().clone()
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for RationalAngle {
    type Err = ArithmeticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(RationalAngle::new)
    }
}
