//! The obstruction condition: whether the obstruction class `b` can be written
//! as `Σ b_i · #Orb(α_i)` over fiber orbits, both as a divisibility test on the
//! quotient orbifold and as an explicit integer witness.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::orbifold::{OrbifoldData, OrbifoldError};
use crate::rational::{ext_gcd, lcm_list, Int};
use crate::seifert::{NormalizedPresentation, SeifertPair, SeifertPresentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
    #[error(
        "h has {found} values, expected {expected} ({critical} critical + {regular} regular slots)"
    )]
    SlotCount {
        expected: usize,
        found: usize,
        critical: usize,
        regular: usize,
    },
    #[error("h sums to {sum}, but the obstruction class is {b}")]
    IllegalRewrite { sum: Int, b: Int },
    #[error("not a partition of the {slots} slots: {reason}")]
    BadPartition { slots: usize, reason: String },
}

/// `N / lcm(n_1, …, n_k, 2m_1, …, 2m_l)`; the obstruction condition holds iff
/// this divides `b`.
pub fn obstruction_divisor(
    group_order: u64,
    quotient: &OrbifoldData,
) -> Result<Int, OrbifoldError> {
    let divisors: Vec<Int> = quotient
        .orbit_divisors(group_order)?
        .into_iter()
        .map(Int::from)
        .collect();
    let lcm = if divisors.is_empty() {
        Int::one()
    } else {
        lcm_list(&divisors).expect("divisors are positive")
    };
    Ok(Int::from(group_order) / lcm)
}

/// Divisibility form of the obstruction condition for an effective base
/// action of order `group_order` with the given quotient orbifold.
pub fn satisfies_obstruction_divisibility(
    b: &Int,
    group_order: u64,
    quotient: &OrbifoldData,
) -> Result<bool, OrbifoldError> {
    let d = obstruction_divisor(group_order, quotient)?;
    Ok(b.is_multiple_of(&d))
}

/// `b = Σ coefficients[i] · orbit_numbers[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionWitness {
    orbit_numbers: Vec<u64>,
    coefficients: Vec<Int>,
}

impl ObstructionWitness {
    pub fn orbit_numbers(&self) -> &[u64] {
        &self.orbit_numbers
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.coefficients
    }

    pub fn total(&self) -> Int {
        self.coefficients
            .iter()
            .zip(&self.orbit_numbers)
            .map(|(c, &o)| c * Int::from(o))
            .sum()
    }
}

impl fmt::Display for ObstructionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .zip(&self.orbit_numbers)
            .map(|(c, o)| format!("{c}*{o}"))
            .collect();
        if terms.is_empty() {
            write!(f, "{} = 0", self.total())
        } else {
            write!(f, "{} = {}", self.total(), terms.join(" + "))
        }
    }
}

/// `r ≡ c (mod m)` with `-m/2 < r <= m/2`.
fn balanced_residue(c: &Int, m: &Int) -> Int {
    let r = c.mod_floor(m);
    if Int::from(2) * &r > *m {
        r - m
    } else {
        r
    }
}

/// Writes `b` as an integer combination of `orbits`, or `None` when their gcd
/// does not divide `b`.
///
/// The witness is canonical: Bezout coefficients are accumulated left to
/// right, then each coefficient except the last is reduced to its balanced
/// residue modulo `o_{j+1} / gcd(o_j, o_{j+1})`, carrying into the next one.
///
/// Panics if an orbit number is zero.
pub fn decompose(b: &Int, orbits: &[u64]) -> Option<ObstructionWitness> {
    assert!(
        orbits.iter().all(|&o| o > 0),
        "orbit numbers must be positive"
    );
    let Some((&first, rest)) = orbits.split_first() else {
        return b.is_zero().then(|| ObstructionWitness {
            orbit_numbers: Vec::new(),
            coefficients: Vec::new(),
        });
    };
    let mut g = Int::from(first);
    let mut coeffs = vec![Int::one()];
    for &o in rest {
        let (next, s, t) = ext_gcd(&g, &Int::from(o)).expect("positive inputs");
        for c in coeffs.iter_mut() {
            *c *= &s;
        }
        coeffs.push(t);
        g = next;
    }
    let (k, r) = b.div_mod_floor(&g);
    if !r.is_zero() {
        return None;
    }
    for c in coeffs.iter_mut() {
        *c *= &k;
    }
    for j in 0..orbits.len() - 1 {
        let (oj, on) = (Int::from(orbits[j]), Int::from(orbits[j + 1]));
        let pair_gcd = oj.gcd(&on);
        let modulus = &on / &pair_gcd;
        let reduced = balanced_residue(&coeffs[j], &modulus);
        let shift = (&coeffs[j] - &reduced) / &modulus;
        coeffs[j] = reduced;
        coeffs[j + 1] += shift * (&oj / &pair_gcd);
    }
    let witness = ObstructionWitness {
        orbit_numbers: orbits.to_vec(),
        coefficients: coeffs,
    };
    assert_eq!(&witness.total(), b, "witness must re-sum to b");
    Some(witness)
}

/// Values `h(1), …, h(n + A)` over the critical-fiber slots followed by the
/// regular-fiber slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HFunction(pub Vec<Int>);

impl HFunction {
    pub fn from_ints(values: &[i64]) -> Self {
        HFunction(values.iter().map(|&v| Int::from(v)).collect())
    }

    pub fn sum(&self) -> Int {
        self.0.iter().sum()
    }
}

/// `(g | (q_1, p_1 + h(1) q_1), …, (q_n, p_n + h(n) q_n), (1, h(n+1)), …, (1, h(n+A)))`.
///
/// Legal only when `Σ h = b`; the result is then equivalent to `pres`.
pub fn rewrite_presentation(
    pres: &NormalizedPresentation,
    h: &HFunction,
    regular_slots: usize,
) -> Result<SeifertPresentation, ObstructionError> {
    let critical = pres.pairs().len();
    if h.0.len() != critical + regular_slots {
        return Err(ObstructionError::SlotCount {
            expected: critical + regular_slots,
            found: h.0.len(),
            critical,
            regular: regular_slots,
        });
    }
    let sum = h.sum();
    if &sum != pres.b() {
        return Err(ObstructionError::IllegalRewrite {
            sum,
            b: pres.b().clone(),
        });
    }
    let (head, tail) = h.0.split_at(critical);
    let pairs = pres
        .pairs()
        .iter()
        .zip(head)
        .map(|(pair, hv)| SeifertPair::new(pair.q.clone(), &pair.p + hv * &pair.q))
        .chain(tail.iter().map(|hv| SeifertPair::new(1, hv.clone())))
        .collect();
    Ok(SeifertPresentation::new(pres.genus(), pairs))
}

/// Whether `h` is constant on every class of `partition` (0-based slots).
pub fn orbit_constancy_check(
    h: &HFunction,
    partition: &[Vec<usize>],
) -> Result<bool, ObstructionError> {
    let slots = h.0.len();
    let bad = |reason: String| ObstructionError::BadPartition { slots, reason };
    let mut seen = vec![false; slots];
    for class in partition {
        for &i in class {
            if i >= slots {
                return Err(bad(format!("slot {i} out of range")));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(bad(format!("slot {i} appears twice")));
            }
        }
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(bad(format!("slot {i} is not covered")));
    }
    Ok(partition
        .iter()
        .all(|class| class.windows(2).all(|w| h.0[w[0]] == h.0[w[1]])))
}
