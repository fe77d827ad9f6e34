//! Self-maps of a boundary torus up to the homology-with-phases model:
//! `(u, v) ↦ (c1 · u^a v^b, c2 · u^c v^d)`, written additively on angles as
//! `z ↦ M z + c` with `M ∈ GL(2, ℤ)` and `c ∈ (ℚ/ℤ)²`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::parse::{self, ParseError};
use crate::rational::{Int, RationalAngle};
use crate::seifert::GluingPair;

/// Finite elements of GL(2, ℤ) have order dividing 4 or 6.
pub const MATRIX_ORDER_CUTOFF: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("matrix has determinant {0}, expected ±1")]
    NotInvertible(Int),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusAutomorphism {
    matrix: [[Int; 2]; 2],
    phases: [RationalAngle; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Order {
    Finite(Int),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

fn det(m: &[[Int; 2]; 2]) -> Int {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

fn mat_mul(a: &[[Int; 2]; 2], b: &[[Int; 2]; 2]) -> [[Int; 2]; 2] {
    let entry = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

fn identity_matrix() -> [[Int; 2]; 2] {
    [[Int::one(), Int::zero()], [Int::zero(), Int::one()]]
}

impl TorusAutomorphism {
    pub fn new(matrix: [[Int; 2]; 2], phases: [RationalAngle; 2]) -> Result<Self, TorusError> {
        let d = det(&matrix);
        if d.abs().is_one() {
            Ok(TorusAutomorphism { matrix, phases })
        } else {
            Err(TorusError::NotInvertible(d))
        }
    }

    /// Small-integer shorthand; panics if the matrix is not invertible.
    pub fn from_entries(m: [[i64; 2]; 2], phases: [RationalAngle; 2]) -> Self {
        let matrix = m.map(|row| row.map(Int::from));
        TorusAutomorphism::new(matrix, phases).expect("determinant ±1")
    }

    pub fn identity() -> Self {
        TorusAutomorphism {
            matrix: identity_matrix(),
            phases: [RationalAngle::zero(), RationalAngle::zero()],
        }
    }

    /// `sign · I` followed by rotation by `phases`.
    pub fn scalar(sign: i8, phases: [RationalAngle; 2]) -> Self {
        let s = Int::from(sign.signum());
        TorusAutomorphism {
            matrix: [[s.clone(), Int::zero()], [Int::zero(), s]],
            phases,
        }
    }

    /// Attaching map `(u,v) ↦ (u^x v^p, u^y v^q)` of a filling solid torus.
    pub fn gluing(gp: &GluingPair) -> Self {
        TorusAutomorphism {
            matrix: [
                [gp.x.clone(), gp.pair.p.clone()],
                [gp.y.clone(), gp.pair.q.clone()],
            ],
            phases: [RationalAngle::zero(), RationalAngle::zero()],
        }
    }

    pub fn matrix(&self) -> &[[Int; 2]; 2] {
        &self.matrix
    }

    pub fn phases(&self) -> &[RationalAngle; 2] {
        &self.phases
    }

    pub fn det(&self) -> Int {
        det(&self.matrix)
    }

    pub fn is_identity(&self) -> bool {
        *self == TorusAutomorphism::identity()
    }

    /// `Some(±1)` when the matrix is `±I`.
    pub fn scalar_sign(&self) -> Option<i8> {
        let m = &self.matrix;
        if !m[0][1].is_zero() || !m[1][0].is_zero() || m[0][0] != m[1][1] {
            return None;
        }
        if m[0][0].is_one() {
            Some(1)
        } else if (-&m[0][0]).is_one() {
            Some(-1)
        } else {
            None
        }
    }

    fn act_linear(&self, z: &[RationalAngle; 2]) -> [RationalAngle; 2] {
        let row = |i: usize| {
            z[0].scale(&self.matrix[i][0])
                .add(&z[1].scale(&self.matrix[i][1]))
        };
        [row(0), row(1)]
    }

    /// Image of the angle pair `(u, v)`.
    pub fn apply(&self, z: &[RationalAngle; 2]) -> [RationalAngle; 2] {
        let [a, b] = self.act_linear(z);
        [a.add(&self.phases[0]), b.add(&self.phases[1])]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &TorusAutomorphism) -> TorusAutomorphism {
        TorusAutomorphism {
            matrix: mat_mul(&self.matrix, &other.matrix),
            phases: self.apply(&other.phases),
        }
    }

    pub fn inverse(&self) -> TorusAutomorphism {
        let m = &self.matrix;
        let d = self.det();
        let inv = [
            [&d * &m[1][1], -(&d * &m[0][1])],
            [-(&d * &m[1][0]), &d * &m[0][0]],
        ];
        let linear = TorusAutomorphism {
            matrix: inv,
            phases: [RationalAngle::zero(), RationalAngle::zero()],
        };
        let [a, b] = linear.act_linear(&self.phases);
        TorusAutomorphism {
            phases: [a.neg(), b.neg()],
            ..linear
        }
    }

    pub fn pow(&self, k: u32) -> TorusAutomorphism {
        (0..k).fold(TorusAutomorphism::identity(), |acc, _| acc.compose(self))
    }

    /// Whether the matrix part has finite order, by the characteristic
    /// polynomial: `det = 1` needs `|tr| < 2` (or `±I`), `det = -1` needs `tr = 0`.
    pub fn matrix_has_finite_order(&self) -> bool {
        let tr = &self.matrix[0][0] + &self.matrix[1][1];
        if self.det().is_one() {
            tr.abs() < Int::from(2) || self.scalar_sign().is_some()
        } else {
            tr.is_zero()
        }
    }

    /// Least `k >= 1` with `self^k = id`, or infinite.
    pub fn order(&self) -> Order {
        if !self.matrix_has_finite_order() {
            return Order::Infinite;
        }
        let id = identity_matrix();
        let mut power = self.clone();
        let mut k = 1u32;
        while power.matrix != id {
            assert!(
                k < MATRIX_ORDER_CUTOFF,
                "finite-order matrix {:?} exceeded order cutoff",
                self.matrix
            );
            power = power.compose(self);
            k += 1;
        }
        // power is now a pure translation; its order is the lcm of the phase denominators
        let translation = power.phases[0].order().lcm(&power.phases[1].order());
        Order::Finite(Int::from(k) * translation)
    }

    /// `d⁻¹ ∘ self ∘ d`.
    pub fn conjugate_by(&self, d: &TorusAutomorphism) -> TorusAutomorphism {
        d.inverse().compose(self).compose(d)
    }
}

impl fmt::Display for TorusAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.matrix;
        write!(
            f,
            "[[{},{}],[{},{}]] + ({}, {})",
            m[0][0], m[0][1], m[1][0], m[1][1], self.phases[0], self.phases[1]
        )
    }
}

impl FromStr for TorusAutomorphism {
    type Err = ParseError;

    /// `[[a,b],[c,d]] + (t1, t2)`; the phase part may be omitted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = parse::strip_ws(s);
        let (mat, phases) = match t.split_once('+') {
            Some((m, p)) => (m, Some(p)),
            None => (t.as_str(), None),
        };
        let body = mat
            .strip_prefix("[[")
            .and_then(|r| r.strip_suffix("]]"))
            .ok_or_else(|| ParseError::new("matrix must look like [[a,b],[c,d]]", s))?;
        let (r0, r1) = body
            .split_once("],[")
            .ok_or_else(|| ParseError::new("matrix must have two rows", s))?;
        let row = |r: &str| -> Result<[Int; 2], ParseError> {
            let entries = parse::list(r, s, parse::int)?;
            <[Int; 2]>::try_from(entries).map_err(|_| ParseError::new("rows need two entries", s))
        };
        let matrix = [row(r0)?, row(r1)?];
        let phases = match phases {
            None => [RationalAngle::zero(), RationalAngle::zero()],
            Some(p) => {
                let inner = p
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| ParseError::new("phases must look like (t1, t2)", s))?;
                let fr = parse::list(inner, s, parse::fraction)?;
                let [a, b] = <[_; 2]>::try_from(fr)
                    .map_err(|_| ParseError::new("expected two phases", s))?;
                [RationalAngle::new(a), RationalAngle::new(b)]
            }
        };
        TorusAutomorphism::new(matrix, phases).map_err(|e| ParseError::new(e.to_string(), s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::SeifertPair;

    fn ang(n: i64, d: i64) -> RationalAngle {
        RationalAngle::frac(n, d)
    }

    fn zero2() -> [RationalAngle; 2] {
        [RationalAngle::zero(), RationalAngle::zero()]
    }

    fn gluing(q: i64, p: i64) -> TorusAutomorphism {
        TorusAutomorphism::gluing(&GluingPair::for_pair(&SeifertPair::new(q, p)).unwrap())
    }

    #[test]
    fn compose_examples() {
        let g = TorusAutomorphism::from_entries([[2, 1], [1, 1]], [ang(1, 3), ang(1, 7)]);
        assert_eq!(TorusAutomorphism::identity().compose(&g), g);
        assert!(g.compose(&g.inverse()).is_identity());
        let half = TorusAutomorphism::from_entries([[1, 0], [0, 1]], [ang(1, 2), ang(0, 1)]);
        assert!(half.compose(&half).is_identity());
    }

    #[test]
    fn compose_substitution_rule() {
        // f∘g phases = M_f · phase(g) + phase(f)
        let f = TorusAutomorphism::from_entries([[0, -1], [1, 0]], [ang(1, 5), ang(0, 1)]);
        let g = TorusAutomorphism::from_entries([[1, 0], [0, 1]], [ang(1, 3), ang(1, 4)]);
        let fg = f.compose(&g);
        assert_eq!(fg.phases(), &[ang(1, 5).sub(&ang(1, 4)), ang(1, 3)]);
    }

    #[test]
    fn inverse_examples() {
        assert!(TorusAutomorphism::identity().inverse().is_identity());
        let u = TorusAutomorphism::from_entries([[1, 2], [0, 1]], zero2());
        assert_eq!(
            u.inverse(),
            TorusAutomorphism::from_entries([[1, -2], [0, 1]], zero2())
        );
        let d = gluing(3, 2);
        assert_eq!(d.det(), Int::from(-1));
        assert_eq!(
            d.inverse(),
            TorusAutomorphism::from_entries([[-3, 2], [2, -1]], zero2())
        );
        assert!(d.compose(&d.inverse()).is_identity());
        assert!(d.inverse().compose(&d).is_identity());
    }

    #[test]
    fn order_examples() {
        let rot = TorusAutomorphism::from_entries([[0, -1], [1, 0]], zero2());
        assert_eq!(rot.order(), Order::Finite(Int::from(4)));
        let shear = TorusAutomorphism::from_entries([[1, 1], [0, 1]], zero2());
        assert_eq!(shear.order(), Order::Infinite);
        let tr = TorusAutomorphism::from_entries([[1, 0], [0, 1]], [ang(1, 2), ang(1, 3)]);
        assert_eq!(tr.order(), Order::Finite(Int::from(6)));
        assert_eq!(
            TorusAutomorphism::identity().order(),
            Order::Finite(Int::one())
        );
        // -I with any phases is an involution
        let flip = TorusAutomorphism::scalar(-1, [ang(2, 7), ang(1, 3)]);
        assert_eq!(flip.order(), Order::Finite(Int::from(2)));
        let six = TorusAutomorphism::from_entries([[1, -1], [1, 0]], zero2());
        assert_eq!(six.order(), Order::Finite(Int::from(6)));
        let three = TorusAutomorphism::from_entries([[0, -1], [1, -1]], [ang(1, 2), ang(0, 1)]);
        // cube is a translation by (M²+M+I)·c, which vanishes here
        assert_eq!(three.order(), Order::Finite(Int::from(3)));
    }

    fn check_order(f: &TorusAutomorphism) {
        match f.order() {
            Order::Finite(k) => {
                let k: u32 = k.try_into().unwrap();
                assert!(f.pow(k).is_identity());
                for j in 1..k {
                    assert!(!f.pow(j).is_identity(), "{f} has power {j} = id");
                }
            }
            Order::Infinite => {
                for j in 1..=24 {
                    assert!(!f.pow(j).is_identity());
                }
            }
        }
    }

    #[test]
    fn order_is_minimal_on_small_matrices() {
        let phases = [
            zero2(),
            [ang(1, 2), ang(0, 1)],
            [ang(1, 3), ang(3, 4)],
            [ang(0, 1), ang(2, 5)],
        ];
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                for c in -2i64..=2 {
                    for d in -2i64..=2 {
                        if (a * d - b * c).abs() != 1 {
                            continue;
                        }
                        for ph in &phases {
                            check_order(&TorusAutomorphism::from_entries(
                                [[a, b], [c, d]],
                                ph.clone(),
                            ));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unipotent_finite_only_when_trivial() {
        for c in -20i64..=20 {
            for sign in [1i64, -1] {
                let f = TorusAutomorphism::from_entries([[sign, sign * c], [0, sign]], zero2());
                let finite = matches!(f.order(), Order::Finite(_));
                assert_eq!(finite, c == 0, "c={c} sign={sign}");
            }
        }
    }

    #[test]
    fn conjugation_examples() {
        let d = gluing(3, 2);
        assert!(TorusAutomorphism::identity().conjugate_by(&d).is_identity());
        let f = TorusAutomorphism::scalar(1, [ang(1, 3), ang(0, 1)]);
        let c = f.conjugate_by(&d);
        assert_eq!(c.phases(), &[ang(0, 1), ang(2, 3)]);
        assert_eq!(c.scalar_sign(), Some(1));
        let g = TorusAutomorphism::scalar(-1, [ang(1, 4), ang(1, 5)]);
        assert_eq!(g.conjugate_by(&gluing(7, 3)).scalar_sign(), Some(-1));
    }

    #[test]
    fn rejects_singular_matrix() {
        let m = [[Int::from(2), Int::zero()], [Int::zero(), Int::one()]];
        assert_eq!(
            TorusAutomorphism::new(m, zero2()),
            Err(TorusError::NotInvertible(Int::from(2)))
        );
    }

    #[test]
    fn text_round_trip() {
        let f = TorusAutomorphism::from_entries([[-3, 2], [2, -1]], [ang(1, 2), ang(5, 6)]);
        assert_eq!(f.to_string(), "[[-3,2],[2,-1]] + (1/2, 5/6)");
        assert_eq!(f.to_string().parse::<TorusAutomorphism>().unwrap(), f);
        assert_eq!(
            "[[1,0],[0,1]]".parse::<TorusAutomorphism>().unwrap(),
            TorusAutomorphism::identity()
        );
        assert!("[[2,0],[0,1]]".parse::<TorusAutomorphism>().is_err());
    }
}
