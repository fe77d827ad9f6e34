//! 2-orbifolds given by Thurston data: genus of the underlying surface,
//! cone-point orders and corner-reflector orders.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::parse::{self, ParseError};
use crate::rational::Fraction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbifoldError {
    #[error("orbifold orders must be at least 2, found {0}")]
    OrderTooSmall(u64),
    #[error("corner reflectors need a mirror boundary")]
    CornersWithoutBoundary,
    #[error("Euler characteristic is only implemented for closed underlying surfaces")]
    Unsupported,
    #[error("group order must be positive")]
    ZeroGroupOrder,
    #[error("{divisor} does not divide the group order {group_order}")]
    Inconsistent { divisor: u64, group_order: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbifoldData {
    genus: u64,
    cone_orders: Vec<u64>,
    corner_orders: Vec<u64>,
    with_boundary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Geometry::Spherical => "spherical",
            Geometry::Euclidean => "euclidean",
            Geometry::Hyperbolic => "hyperbolic",
        })
    }
}

impl OrbifoldData {
    pub fn new(
        genus: u64,
        cone_orders: Vec<u64>,
        corner_orders: Vec<u64>,
        with_boundary: bool,
    ) -> Result<Self, OrbifoldError> {
        if let Some(&n) = cone_orders.iter().chain(&corner_orders).find(|&&n| n < 2) {
            return Err(OrbifoldError::OrderTooSmall(n));
        }
        if !corner_orders.is_empty() && !with_boundary {
            return Err(OrbifoldError::CornersWithoutBoundary);
        }
        Ok(OrbifoldData {
            genus,
            cone_orders,
            corner_orders,
            with_boundary,
        })
    }

    /// Closed surface of the given genus with cone points.
    pub fn closed(genus: u64, cone_orders: Vec<u64>) -> Result<Self, OrbifoldError> {
        OrbifoldData::new(genus, cone_orders, Vec::new(), false)
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn cone_orders(&self) -> &[u64] {
        &self.cone_orders
    }

    pub fn corner_orders(&self) -> &[u64] {
        &self.corner_orders
    }

    pub fn with_boundary(&self) -> bool {
        self.with_boundary
    }

    pub fn with_cone_point(&self, n: u64) -> Result<Self, OrbifoldError> {
        let mut cones = self.cone_orders.clone();
        cones.push(n);
        OrbifoldData::new(
            self.genus,
            cones,
            self.corner_orders.clone(),
            self.with_boundary,
        )
    }

    /// `χ = (2 - 2g) - Σ (1 - 1/n_i)`.
    pub fn euler_characteristic(&self) -> Result<Fraction, OrbifoldError> {
        if self.with_boundary {
            return Err(OrbifoldError::Unsupported);
        }
        let surface =
            Fraction::from_int(2 - 2 * i64::try_from(self.genus).expect("genus fits i64"));
        let one = Fraction::from_int(1);
        let cones: Fraction = self
            .cone_orders
            .iter()
            .map(|&n| &one - &Fraction::new(1, n).expect("n >= 2"))
            .sum();
        Ok(surface - cones)
    }

    pub fn geometry_sign(&self) -> Result<Geometry, OrbifoldError> {
        let chi = self.euler_characteristic()?;
        Ok(if chi.is_positive() {
            Geometry::Spherical
        } else if chi.is_zero() {
            Geometry::Euclidean
        } else {
            Geometry::Hyperbolic
        })
    }

    /// Every divisor whose quotient of `group_order` can be an orbit size:
    /// `n_i` for cone points and `2 m_j` for corner reflectors.
    pub(crate) fn orbit_divisors(&self, group_order: u64) -> Result<Vec<u64>, OrbifoldError> {
        if group_order == 0 {
            return Err(OrbifoldError::ZeroGroupOrder);
        }
        let divisors: Vec<u64> = self
            .cone_orders
            .iter()
            .copied()
            .chain(self.corner_orders.iter().map(|m| 2 * m))
            .collect();
        match divisors.iter().find(|&&d| !group_order.is_multiple_of(d)) {
            Some(&divisor) => Err(OrbifoldError::Inconsistent {
                divisor,
                group_order,
            }),
            None => Ok(divisors),
        }
    }

    /// Possible orbit sizes of points of the surface under an effective action
    /// of a group of order `group_order` with this quotient: `N/n_i`, `N/2m_j`
    /// and `N` for free orbits.
    pub fn possible_orbit_numbers(&self, group_order: u64) -> Result<BTreeSet<u64>, OrbifoldError> {
        let divisors = self.orbit_divisors(group_order)?;
        Ok(divisors
            .iter()
            .map(|d| group_order / d)
            .chain(std::iter::once(group_order))
            .collect())
    }
}

impl fmt::Display for OrbifoldData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "genus:{} cone:({}) corner:({})",
            self.genus,
            join(&self.cone_orders),
            join(&self.corner_orders)
        )?;
        if self.with_boundary && self.corner_orders.is_empty() {
            f.write_str(" boundary:true")?;
        }
        Ok(())
    }
}

impl FromStr for OrbifoldData {
    type Err = ParseError;

    /// `genus:g cone:(n1,...,nk) corner:(m1,...,ml) [boundary:true|false]`.
    /// Missing fields default to genus 0 and empty lists; the boundary flag
    /// defaults to whether any corners are present.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = parse::strip_ws(s);
        let mut rest = t.as_str();
        let mut genus = None;
        let mut cones = None;
        let mut corners = None;
        let mut boundary = None;
        while !rest.is_empty() {
            let (key, after) = rest
                .split_once(':')
                .ok_or_else(|| ParseError::new("expected key:value", s))?;
            let (value, next) = if let Some(r) = after.strip_prefix('(') {
                let close = r
                    .find(')')
                    .ok_or_else(|| ParseError::new("unterminated list", s))?;
                (&r[..close], &r[close + 1..])
            } else {
                let end = after
                    .find(|c: char| !c.is_ascii_alphanumeric())
                    .unwrap_or(after.len());
                let end = ["cone", "corner", "boundary", "genus"]
                    .iter()
                    .filter_map(|k| after[..end].find(k))
                    .min()
                    .unwrap_or(end);
                (&after[..end], &after[end..])
            };
            let dup = || ParseError::new(format!("duplicate key {key:?}"), s);
            match key {
                "genus" => {
                    if genus.replace(parse::unsigned::<u64>(value, s)?).is_some() {
                        return Err(dup());
                    }
                }
                "cone" => {
                    if cones
                        .replace(parse::list(value, s, parse::unsigned::<u64>)?)
                        .is_some()
                    {
                        return Err(dup());
                    }
                }
                "corner" => {
                    if corners
                        .replace(parse::list(value, s, parse::unsigned::<u64>)?)
                        .is_some()
                    {
                        return Err(dup());
                    }
                }
                "boundary" => {
                    let b = match value {
                        "true" | "yes" => true,
                        "false" | "no" => false,
                        _ => return Err(ParseError::new("boundary must be true or false", s)),
                    };
                    if boundary.replace(b).is_some() {
                        return Err(dup());
                    }
                }
                _ => return Err(ParseError::new(format!("unknown key {key:?}"), s)),
            }
            rest = next;
        }
        let corners: Vec<u64> = corners.unwrap_or_default();
        let with_boundary = boundary.unwrap_or(!corners.is_empty());
        OrbifoldData::new(
            genus.unwrap_or(0),
            cones.unwrap_or_default(),
            corners,
            with_boundary,
        )
        .map_err(|e| ParseError::new(e.to_string(), s))
    }
}
