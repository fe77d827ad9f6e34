//! Seifert presentations `(g, o1 | (q1,p1), ..., (qn,pn))` of closed orientable
//! Seifert fibered 3-manifolds over orientable bases.
//!
//! Two presentations describe fiber- and orientation-preservingly diffeomorphic
//! manifolds exactly when they are related by the moves
//!
//! * permuting the pairs,
//! * adding or deleting a pair `(1,0)`,
//! * replacing `(q_i,p_i), (q_j,p_j)` by `(q_i,p_i + m q_i), (q_j,p_j - m q_j)`.
//!
//! Every presentation has a unique normal form in which each exceptional pair
//! satisfies `0 < p < q` and all integer carries are collected into a single
//! obstruction class `b`, so equivalence is decided by comparing normal forms.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::parse::{self, ParseError};
use crate::rational::{mod_inverse, Fraction, Int};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeifertPair {
    pub q: Int,
    pub p: Int,
}

impl SeifertPair {
    pub fn new(q: impl Into<Int>, p: impl Into<Int>) -> Self {
        SeifertPair {
            q: q.into(),
            p: p.into(),
        }
    }

    pub fn trivial() -> Self {
        SeifertPair::new(1, 0)
    }

    pub fn is_trivial(&self) -> bool {
        self.q.is_one() && self.p.is_zero()
    }

    pub fn is_valid(&self) -> bool {
        self.q.is_positive() && self.q.gcd(&self.p).is_one()
    }

    fn violation(&self, index: usize) -> Option<PairViolation> {
        if !self.q.is_positive() {
            return Some(PairViolation::NonPositiveQ {
                index,
                q: self.q.clone(),
            });
        }
        let gcd = self.q.gcd(&self.p);
        (!gcd.is_one()).then_some(PairViolation::NotCoprime { index, gcd })
    }

    /// `p/q` as an exact fraction.
    pub fn ratio(&self) -> Fraction {
        Fraction::new(self.p.clone(), self.q.clone()).expect("q is positive")
    }
}

impl fmt::Display for SeifertPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.q, self.p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairViolation {
    #[error("pair {index}: q = {q} is not positive")]
    NonPositiveQ { index: usize, q: Int },
    #[error("pair {index}: gcd(q, p) = {gcd}, expected 1")]
    NotCoprime { index: usize, gcd: Int },
}

/// Every violation found in a presentation, in index order (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid presentation: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct ValidationReport(pub Vec<PairViolation>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("permutation {0:?} is not a permutation of the pair indices")]
    BadPermutation(Vec<usize>),
    #[error("pair index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("pair {0} is not (1,0)")]
    NotTrivial(usize),
    #[error("shift needs two distinct indices, got {0} twice")]
    SameIndex(usize),
}

#[derive(Debug, Error)]
pub enum SeifertError {
    #[error(transparent)]
    Invalid(#[from] ValidationReport),
    #[error(transparent)]
    Move(#[from] MoveError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertPresentation {
    pub genus: u64,
    pub pairs: Vec<SeifertPair>,
}

/// The elementary moves on a presentation. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// New pair `k` is old pair `sigma[k]`.
    Permute(Vec<usize>),
    AddTrivial,
    DeleteTrivial(usize),
    /// `(q_i, p_i + m q_i), (q_j, p_j - m q_j)`.
    Shift {
        i: usize,
        j: usize,
        m: Int,
    },
}

impl SeifertPresentation {
    pub fn new(genus: u64, pairs: Vec<SeifertPair>) -> Self {
        SeifertPresentation { genus, pairs }
    }

    /// Convenience constructor from small integer pairs `(q, p)`.
    pub fn from_pairs(genus: u64, pairs: &[(i64, i64)]) -> Self {
        SeifertPresentation::new(
            genus,
            pairs.iter().map(|&(q, p)| SeifertPair::new(q, p)).collect(),
        )
    }

    pub fn validate(&self) -> Result<(), ValidationReport> {
        let violations: Vec<_> = self
            .pairs
            .iter()
            .enumerate()
            .filter_map(|(index, pair)| pair.violation(index))
            .collect();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(ValidationReport(violations))
        }
    }

    pub fn normalize(&self) -> Result<NormalizedPresentation, SeifertError> {
        self.validate()?;
        let mut b = Int::zero();
        let mut pairs = Vec::new();
        for pair in &self.pairs {
            if pair.q.is_one() {
                b += &pair.p;
            } else {
                let (carry, rem) = pair.p.div_mod_floor(&pair.q);
                b += carry;
                pairs.push(SeifertPair::new(pair.q.clone(), rem));
            }
        }
        pairs.sort();
        Ok(NormalizedPresentation {
            genus: self.genus,
            pairs,
            b,
        })
    }

    /// Fiber- and orientation-preserving equivalence. Presentations of
    /// different genus are never equivalent.
    pub fn equivalent(&self, other: &SeifertPresentation) -> Result<bool, SeifertError> {
        Ok(self.normalize()? == other.normalize()?)
    }

    /// `e = -(b + Σ p_i/q_i)` of the normal form.
    pub fn euler_number(&self) -> Result<Fraction, SeifertError> {
        Ok(self.normalize()?.euler_number())
    }

    pub fn apply_move(&self, mv: &Move) -> Result<SeifertPresentation, MoveError> {
        let n = self.pairs.len();
        let check = |i: usize| {
            if i < n {
                Ok(())
            } else {
                Err(MoveError::IndexOutOfRange(i))
            }
        };
        let mut pairs = self.pairs.clone();
        match mv {
            Move::Permute(sigma) => {
                let mut seen = vec![false; n];
                if sigma.len() != n
                    || !sigma
                        .iter()
                        .all(|&k| k < n && !std::mem::replace(&mut seen[k], true))
                {
                    return Err(MoveError::BadPermutation(sigma.clone()));
                }
                pairs = sigma.iter().map(|&k| self.pairs[k].clone()).collect();
            }
            Move::AddTrivial => pairs.push(SeifertPair::trivial()),
            Move::DeleteTrivial(i) => {
                check(*i)?;
                if !pairs[*i].is_trivial() {
                    return Err(MoveError::NotTrivial(*i));
                }
                pairs.remove(*i);
            }
            Move::Shift { i, j, m } => {
                check(*i)?;
                check(*j)?;
                if i == j {
                    return Err(MoveError::SameIndex(*i));
                }
                let di = m * &pairs[*i].q;
                pairs[*i].p += di;
                let dj = m * &pairs[*j].q;
                pairs[*j].p -= dj;
            }
        }
        Ok(SeifertPresentation::new(self.genus, pairs))
    }
}

impl fmt::Display for SeifertPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_presentation(f, self.genus, self.pairs.iter())
    }
}

fn write_presentation<'a>(
    f: &mut fmt::Formatter<'_>,
    genus: u64,
    pairs: impl Iterator<Item = &'a SeifertPair>,
) -> fmt::Result {
    let body: Vec<String> = pairs.map(|p| p.to_string()).collect();
    if body.is_empty() {
        write!(f, "({genus}, o1 |)")
    } else {
        write!(f, "({genus}, o1 | {})", body.join(", "))
    }
}

impl FromStr for SeifertPresentation {
    type Err = ParseError;

    /// Grammar: `(g, o1 | (q1,p1), (q2,p2), ...)`, whitespace-insensitive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = parse::strip_ws(s);
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| ParseError::new("presentation must be wrapped in parentheses", s))?;
        let (head, tail) = inner
            .split_once('|')
            .ok_or_else(|| ParseError::new("missing '|' separator", s))?;
        let (genus, tag) = head
            .split_once(',')
            .ok_or_else(|| ParseError::new("expected 'g, o1' before '|'", s))?;
        if tag != "o1" && tag != "o₁" {
            return Err(ParseError::new(
                format!("only orientable bases (o1) are supported, found {tag:?}"),
                s,
            ));
        }
        let genus = parse::unsigned(genus, s)?;
        let pairs = parse::int_pairs(tail, s)?
            .into_iter()
            .map(|(q, p)| SeifertPair::new(q, p))
            .collect();
        Ok(SeifertPresentation::new(genus, pairs))
    }
}

/// Normal form `(g, o1 | (q1,p1), ..., (qn,pn), (1,b))` with `0 < p_i < q_i`,
/// pairs sorted by `(q, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizedPresentation {
    genus: u64,
    pairs: Vec<SeifertPair>,
    b: Int,
}

impl NormalizedPresentation {
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// The exceptional pairs, excluding `(1,b)`.
    pub fn pairs(&self) -> &[SeifertPair] {
        &self.pairs
    }

    /// Obstruction class.
    pub fn b(&self) -> &Int {
        &self.b
    }

    pub fn euler_number(&self) -> Fraction {
        let total: Fraction = self.pairs.iter().map(SeifertPair::ratio).sum();
        -(Fraction::from_int(self.b.clone()) + total)
    }

    /// The same manifold as a raw presentation with `(1,b)` appended.
    pub fn to_presentation(&self) -> SeifertPresentation {
        let mut pairs = self.pairs.clone();
        pairs.push(SeifertPair::new(1, self.b.clone()));
        SeifertPresentation::new(self.genus, pairs)
    }
}

impl fmt::Display for NormalizedPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = SeifertPair::new(1, self.b.clone());
        write_presentation(
            f,
            self.genus,
            self.pairs.iter().chain(std::iter::once(&last)),
        )
    }
}

/// Exponents of the Dehn filling attachment `(u,v) ↦ (u^x v^p, u^y v^q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GluingPair {
    pub x: Int,
    pub y: Int,
    pub pair: SeifertPair,
}

impl GluingPair {
    /// Canonical solution of `x q - y p = -1` with `0 <= y < q`.
    pub fn for_pair(pair: &SeifertPair) -> Result<GluingPair, ValidationReport> {
        if let Some(v) = pair.violation(0) {
            return Err(ValidationReport(vec![v]));
        }
        let y = mod_inverse(&pair.p, &pair.q).expect("coprime pair has an inverse");
        let x = (&y * &pair.p - Int::one()) / &pair.q;
        Ok(GluingPair {
            x,
            y,
            pair: pair.clone(),
        })
    }

    /// The fibration `(-q, y)` induced on the filling solid torus.
    pub fn induced_fibration(&self) -> (Int, Int) {
        (-self.pair.q.clone(), self.y.clone())
    }
}
