//! Structure of the acting group: the fiber-orientation-preserving subgroup,
//! the cyclic rotation part on the fiber, and whether the extension by the
//! orientation character splits.

use std::fmt;

use num_integer::Integer;
use num_traits::One;

use crate::action::ExtendedActionData;
use crate::rational::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Every element preserves fiber orientation: a subgroup of `ℤ_n × H`.
    DirectLike,
    /// Index 2 with an orientation-reversing involution: the extension splits.
    Semidirect,
    NoSplittingFound,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::DirectLike => "direct-like",
            Classification::Semidirect => "semidirect",
            Classification::NoSplittingFound => "no-splitting-found",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub fop_subgroup: Vec<usize>,
    pub fop_index: usize,
    pub rotation_order: Int,
    pub splitting_element: Option<usize>,
    pub classification: Classification,
}

/// `{g : α(g) = +1}`.
pub fn fop_subgroup(data: &ExtendedActionData) -> Vec<usize> {
    data.group()
        .elements()
        .filter(|&g| data.alpha(g) == 1)
        .collect()
}

/// Order of the subgroup of ℚ/ℤ generated by `θ₁` on the fiber-orientation-preserving elements.
pub fn rotation_order(data: &ExtendedActionData) -> Int {
    fop_subgroup(data)
        .into_iter()
        .fold(Int::one(), |acc, g| acc.lcm(&data.theta1(g).order()))
}

/// Lowest-index involution reversing fiber orientation.
pub fn find_splitting(data: &ExtendedActionData) -> Option<usize> {
    let group = data.group();
    group
        .elements()
        .find(|&g| data.alpha(g) == -1 && group.mul(g, g) == group.identity())
}

pub fn structure_report(data: &ExtendedActionData) -> StructureReport {
    let fop = fop_subgroup(data);
    let fop_index = data.group().order() / fop.len();
    let splitting_element = find_splitting(data);
    let classification = match (fop_index, splitting_element) {
        (1, _) => Classification::DirectLike,
        (_, Some(_)) => Classification::Semidirect,
        (_, None) => Classification::NoSplittingFound,
    };
    StructureReport {
        rotation_order: rotation_order(data),
        fop_subgroup: fop,
        fop_index,
        splitting_element,
        classification,
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.fop_subgroup.iter().map(usize::to_string).collect();
        writeln!(f, "fop_subgroup: {{{}}}", elems.join(","))?;
        writeln!(f, "fop_index: {}", self.fop_index)?;
        writeln!(f, "rotation_order: {}", self.rotation_order)?;
        match self.splitting_element {
            Some(g) => writeln!(f, "splitting_element: {g}")?,
            None => writeln!(f, "splitting_element: none")?,
        }
        writeln!(f, "classification: {}", self.classification)
    }
}
