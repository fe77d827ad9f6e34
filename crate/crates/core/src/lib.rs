//! Seifert fibered 3-manifold presentations and finite fiber- and
//! orientation-preserving group actions on them, computed exactly.

pub mod action;
pub mod cli;
pub mod files;
pub mod group;
pub mod obstruction;
pub mod orbifold;
pub mod parse;
pub mod rational;
pub mod seifert;
pub mod structure;
pub mod torus;

pub use action::{solid_torus_eval, ExtendedActionData, SolidTorusPoint};
pub use group::{FiniteGroup, Permutation};
pub use obstruction::{decompose, HFunction, ObstructionWitness};
pub use orbifold::{Geometry, OrbifoldData};
pub use parse::ParseError;
pub use rational::{Fraction, Int, RationalAngle};
pub use seifert::{GluingPair, Move, NormalizedPresentation, SeifertPair, SeifertPresentation};
pub use structure::{structure_report, Classification, StructureReport};
pub use torus::{Order, TorusAutomorphism};
