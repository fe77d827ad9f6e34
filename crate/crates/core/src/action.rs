//! Extended product actions.
//!
//! A finite group `G` acts on the trivially fibered piece `S¹ × F` by
//! `u ↦ θ₁(g) u^{α(g)}` on the fiber and, on the boundary circles of `F`,
//! by `(v, i) ↦ (θ₂(i, g) v^{α(g)}, β(g)(i))`. Boundary torus `i` is sent to
//! torus `β(g)(i)`, and the action is pushed through each Dehn filling's
//! gluing map and coned over the filling solid torus.
//!
//! Composition follows the left-action convention `φ(g₁) ∘ φ(g₂) = φ(g₁g₂)`,
//! so the data must satisfy
//!
//! * `α(g₁g₂) = α(g₁) α(g₂)`,
//! * `θ₁(g₁g₂) = θ₁(g₁) + α(g₁) θ₁(g₂)`,
//! * `β(g₁g₂) = β(g₁) ∘ β(g₂)`,
//! * `θ₂(i, g₁g₂) = θ₂(β(g₂)(i), g₁) + α(g₁) θ₂(i, g₂)`,
//!
//! and `β(g)` may only exchange boundary components with equal filling pairs.

use num_traits::One;
use thiserror::Error;

use crate::group::{FiniteGroup, Permutation};
use crate::obstruction::{decompose, ObstructionWitness};
use crate::rational::{Fraction, RationalAngle};
use crate::seifert::{GluingPair, NormalizedPresentation, SeifertPair};
use crate::torus::TorusAutomorphism;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("an action needs at least one boundary component")]
    NoBoundary,
    #[error("boundary pair {index} = {pair} is not a valid Seifert pair")]
    InvalidPair { index: usize, pair: SeifertPair },
    #[error("{field} has {found} entries, expected {expected}")]
    Shape {
        field: &'static str,
        found: usize,
        expected: usize,
    },
    #[error("alpha({g}) = {value}, expected +1 or -1")]
    BadSign { g: usize, value: i8 },
    #[error("filling action must have matrix ±I to extend over the solid torus")]
    UnsupportedExtension,
    #[error("radius {0} is outside [0, 1]")]
    RadiusOutOfRange(Fraction),
    #[error(
        "critical pairs of the action {action:?} do not match the presentation {presentation:?}"
    )]
    PairMismatch {
        action: Vec<SeifertPair>,
        presentation: Vec<SeifertPair>,
    },
}

/// A violated compatibility condition. Elements are table indices and
/// boundary components are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionViolation {
    #[error("alpha({g1}*{g2}) != alpha({g1}) alpha({g2})")]
    AlphaNotHomomorphism { g1: usize, g2: usize },
    #[error("theta1({g1}*{g2}) != theta1({g1}) + alpha({g1}) theta1({g2})")]
    Theta1Cocycle { g1: usize, g2: usize },
    #[error("beta({g1}*{g2}) != beta({g1}) o beta({g2})")]
    BetaNotHomomorphism { g1: usize, g2: usize },
    #[error("beta({g}) sends component {from} to {to}, but their filling pairs differ")]
    FillingIncompatible { g: usize, from: usize, to: usize },
    #[error(
        "theta2({i}, {g1}*{g2}) != theta2(beta({g2})({i}), {g1}) + alpha({g1}) theta2({i}, {g2})"
    )]
    Theta2Cocycle { i: usize, g1: usize, g2: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedActionData {
    group: FiniteGroup,
    pairs: Vec<SeifertPair>,
    alpha: Vec<i8>,
    theta1: Vec<RationalAngle>,
    beta: Vec<Permutation>,
    /// `theta2[g][i]`
    theta2: Vec<Vec<RationalAngle>>,
}

fn expect_len(field: &'static str, found: usize, expected: usize) -> Result<(), ActionError> {
    if found == expected {
        Ok(())
    } else {
        Err(ActionError::Shape {
            field,
            found,
            expected,
        })
    }
}

impl ExtendedActionData {
    /// Checks shapes only; the algebraic conditions are checked by [`verify`](Self::verify).
    pub fn new(
        group: FiniteGroup,
        pairs: Vec<SeifertPair>,
        alpha: Vec<i8>,
        theta1: Vec<RationalAngle>,
        beta: Vec<Permutation>,
        theta2: Vec<Vec<RationalAngle>>,
    ) -> Result<Self, ActionError> {
        let order = group.order();
        let n = pairs.len();
        if n == 0 {
            return Err(ActionError::NoBoundary);
        }
        if let Some((index, pair)) = pairs.iter().enumerate().find(|(_, p)| !p.is_valid()) {
            return Err(ActionError::InvalidPair {
                index,
                pair: pair.clone(),
            });
        }
        expect_len("alpha", alpha.len(), order)?;
        expect_len("theta1", theta1.len(), order)?;
        expect_len("beta", beta.len(), order)?;
        expect_len("theta2", theta2.len(), order)?;
        if let Some((g, &value)) = alpha.iter().enumerate().find(|(_, a)| a.abs() != 1) {
            return Err(ActionError::BadSign { g, value });
        }
        for p in &beta {
            expect_len("beta permutation", p.len(), n)?;
        }
        for row in &theta2 {
            expect_len("theta2 row", row.len(), n)?;
        }
        Ok(ExtendedActionData {
            group,
            pairs,
            alpha,
            theta1,
            beta,
            theta2,
        })
    }

    /// Data with `β ≡ id`, `θ₂ ≡ 0` on the given boundary pairs.
    pub fn with_trivial_boundary(
        group: FiniteGroup,
        pairs: Vec<SeifertPair>,
        alpha: Vec<i8>,
        theta1: Vec<RationalAngle>,
    ) -> Result<Self, ActionError> {
        let order = group.order();
        let n = pairs.len();
        ExtendedActionData::new(
            group,
            pairs,
            alpha,
            theta1,
            vec![Permutation::identity(n); order],
            vec![vec![RationalAngle::zero(); n]; order],
        )
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn pairs(&self) -> &[SeifertPair] {
        &self.pairs
    }

    pub fn n_boundary(&self) -> usize {
        self.pairs.len()
    }

    pub fn alpha(&self, g: usize) -> i8 {
        self.alpha[g]
    }

    pub fn theta1(&self, g: usize) -> &RationalAngle {
        &self.theta1[g]
    }

    pub fn beta(&self, g: usize) -> &Permutation {
        &self.beta[g]
    }

    pub fn theta2(&self, i: usize, g: usize) -> &RationalAngle {
        &self.theta2[g][i]
    }

    pub fn with_theta1(&self, g: usize, value: RationalAngle) -> Self {
        let mut out = self.clone();
        out.theta1[g] = value;
        out
    }

    pub fn with_theta2(&self, i: usize, g: usize, value: RationalAngle) -> Self {
        let mut out = self.clone();
        out.theta2[g][i] = value;
        out
    }

    /// Panics if `perm` has the wrong size.
    pub fn with_beta(&self, g: usize, perm: Permutation) -> Self {
        assert_eq!(perm.len(), self.n_boundary());
        let mut out = self.clone();
        out.beta[g] = perm;
        out
    }

    fn signed(&self, g: usize, angle: &RationalAngle) -> RationalAngle {
        if self.alpha[g] == 1 {
            angle.clone()
        } else {
            angle.neg()
        }
    }

    /// Every violated condition over all element pairs and components.
    pub fn verify(&self) -> Result<(), Vec<ActionViolation>> {
        let g = &self.group;
        let n = self.n_boundary();
        let mut violations = Vec::new();
        for g1 in g.elements() {
            for from in 0..n {
                let to = self.beta[g1].apply(from);
                if self.pairs[from] != self.pairs[to] {
                    violations.push(ActionViolation::FillingIncompatible { g: g1, from, to });
                }
            }
        }
        for g1 in g.elements() {
            for g2 in g.elements() {
                let prod = g.mul(g1, g2);
                if self.alpha[prod] != self.alpha[g1] * self.alpha[g2] {
                    violations.push(ActionViolation::AlphaNotHomomorphism { g1, g2 });
                }
                if self.theta1[prod] != self.theta1[g1].add(&self.signed(g1, &self.theta1[g2])) {
                    violations.push(ActionViolation::Theta1Cocycle { g1, g2 });
                }
                if self.beta[prod] != self.beta[g1].compose(&self.beta[g2]) {
                    violations.push(ActionViolation::BetaNotHomomorphism { g1, g2 });
                }
                for i in 0..n {
                    let moved = self.beta[g2].apply(i);
                    let rhs = self.theta2[g1][moved].add(&self.signed(g1, &self.theta2[g2][i]));
                    if self.theta2[prod][i] != rhs {
                        violations.push(ActionViolation::Theta2Cocycle { i, g1, g2 });
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    /// Action of `g` on boundary torus `i` of the trivially fibered piece, in
    /// its product framing: target component and `(θ₁(g), θ₂(i,g))` rotation
    /// after `α(g)·I`.
    pub fn boundary_action(&self, g: usize, i: usize) -> (usize, TorusAutomorphism) {
        let map = TorusAutomorphism::scalar(
            self.alpha[g],
            [self.theta1[g].clone(), self.theta2[g][i].clone()],
        );
        (self.beta[g].apply(i), map)
    }

    pub fn gluing_pair(&self, i: usize) -> GluingPair {
        GluingPair::for_pair(&self.pairs[i]).expect("pairs validated on construction")
    }

    pub fn gluing_map(&self, i: usize) -> TorusAutomorphism {
        TorusAutomorphism::gluing(&self.gluing_pair(i))
    }

    /// Induced action on the boundary of filling solid torus `i`, from the
    /// closed form
    /// `(−q θ₁ + p θ₂, y θ₁ − x θ₂)` after `α(g)·I`.
    pub fn induced_filling_action(&self, g: usize, i: usize) -> (usize, TorusAutomorphism) {
        let gp = self.gluing_pair(i);
        let t1 = &self.theta1[g];
        let t2 = &self.theta2[g][i];
        let longitude = t1.scale(&-gp.pair.q.clone()).add(&t2.scale(&gp.pair.p));
        let meridian = t1.scale(&gp.y).add(&t2.scale(&-gp.x.clone()));
        (
            self.beta[g].apply(i),
            TorusAutomorphism::scalar(self.alpha[g], [longitude, meridian]),
        )
    }

    /// Orbit size of each boundary component under `β`.
    pub fn boundary_orbit_numbers(&self) -> Vec<usize> {
        (0..self.n_boundary())
            .map(|i| {
                let mut orbit: Vec<usize> = self
                    .group
                    .elements()
                    .map(|g| self.beta[g].apply(i))
                    .collect();
                orbit.sort_unstable();
                orbit.dedup();
                orbit.len()
            })
            .collect()
    }

    /// Elements acting trivially on every boundary torus.
    pub fn kernel_on_boundary(&self) -> Vec<usize> {
        self.group
            .elements()
            .filter(|&g| {
                self.alpha[g] == 1
                    && self.beta[g].is_identity()
                    && self.theta1[g].is_zero()
                    && self.theta2[g].iter().all(RationalAngle::is_zero)
            })
            .collect()
    }

    /// The exceptional pairs `(q, p mod q)`, `q >= 2`, sorted.
    fn critical_pairs(&self) -> Vec<SeifertPair> {
        let mut out: Vec<SeifertPair> = self
            .pairs
            .iter()
            .filter(|p| !p.q.is_one())
            .map(|p| SeifertPair::new(p.q.clone(), num_integer::Integer::mod_floor(&p.p, &p.q)))
            .collect();
        out.sort();
        out
    }

    /// Tries to write the obstruction class of `pres` over the orbit numbers
    /// of the boundary components plus `regular_orbits` (orbit sizes of
    /// regular fibers known to the caller).
    pub fn obstruction_check(
        &self,
        pres: &NormalizedPresentation,
        regular_orbits: &[u64],
    ) -> Result<Option<ObstructionWitness>, ActionError> {
        let mine = self.critical_pairs();
        if mine != pres.pairs() {
            return Err(ActionError::PairMismatch {
                action: mine,
                presentation: pres.pairs().to_vec(),
            });
        }
        let mut orbits: Vec<u64> = self
            .boundary_orbit_numbers()
            .into_iter()
            .map(|o| o as u64)
            .chain(regular_orbits.iter().copied().filter(|&o| o > 0))
            .collect();
        orbits.sort_unstable();
        orbits.dedup();
        Ok(decompose(pres.b(), &orbits))
    }
}

/// A point `(u, r, v)` of a solid torus `S¹ × D`: longitude angle `u`, radius
/// `r ∈ [0, 1]` and meridian angle `v`. On the core (`r = 0`) `v` is stored as 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolidTorusPoint {
    u: RationalAngle,
    r: Fraction,
    v: RationalAngle,
}

impl SolidTorusPoint {
    pub fn new(u: RationalAngle, r: Fraction, v: RationalAngle) -> Result<Self, ActionError> {
        if r.is_negative() || r > Fraction::from_int(1) {
            return Err(ActionError::RadiusOutOfRange(r));
        }
        let v = if r.is_zero() {
            RationalAngle::zero()
        } else {
            v
        };
        Ok(SolidTorusPoint { u, r, v })
    }

    pub fn u(&self) -> &RationalAngle {
        &self.u
    }

    pub fn r(&self) -> &Fraction {
        &self.r
    }

    pub fn v(&self) -> &RationalAngle {
        &self.v
    }
}

/// Cone a boundary action `±I + (c₁, c₂)` radially over the solid torus.
pub fn solid_torus_eval(
    filling_action: &TorusAutomorphism,
    point: &SolidTorusPoint,
) -> Result<SolidTorusPoint, ActionError> {
    filling_action
        .scalar_sign()
        .ok_or(ActionError::UnsupportedExtension)?;
    let [u, v] = filling_action.apply(&[point.u.clone(), point.v.clone()]);
    SolidTorusPoint::new(u, point.r.clone(), v)
}
