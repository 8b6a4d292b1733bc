//! The flats, circuits and independents presentations of a matricube.
//!
//! Each presentation is a [`PointSet`]: extraction from a rank table,
//! validation against its axiom system, and reconstruction of the unique
//! matricube it determines.

mod circuits;
mod flats;
mod independents;

use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{Point, Width};

pub use circuits::{
    ccir_of, check_circuits_simple, circuits_of, join_closure, join_irreducibles,
    matricube_from_circuits, validate_circuit_axioms,
};
pub use flats::{
    check_flats_simple, closure, flats_of, matricube_from_flats, validate_flat_axioms, FlatLattice,
};
pub use independents::{
    check_independents_simple, independents_of, is_orderable, matricube_from_independents, removal,
    size, sizes, validate_independent_axioms,
};

/// A set of points of one hypercuboid, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    width: Width,
    points: BTreeSet<Point>,
}

pub type FlatSet = PointSet;
pub type CircuitSet = PointSet;
pub type IndependentSet = PointSet;

impl PointSet {
    /// Every point must have the width's dimension and lie in range.
    pub fn new(width: Width, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let points: BTreeSet<Point> = points.into_iter().collect();
        for p in &points {
            if p.dim() != width.dim() {
                return Err(Error::WidthMismatch {
                    expected: width.dim(),
                    found: p.dim(),
                });
            }
            if p.coords().iter().zip(width.entries()).any(|(x, r)| x > r) {
                return Err(Error::OutOfRange {
                    point: p.to_string(),
                    width: width.to_string(),
                });
            }
        }
        Ok(PointSet { width, points })
    }

    pub(crate) fn trusted(width: Width, points: BTreeSet<Point>) -> Self {
        PointSet { width, points }
    }

    pub fn width(&self) -> &Width {
        &self.width
    }

    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    /// A copy with `p` removed.
    pub fn without(&self, p: &Point) -> Self {
        let mut points = self.points.clone();
        points.remove(p);
        PointSet {
            width: self.width.clone(),
            points,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointSetJson {
    width: Vec<usize>,
    points: Vec<Vec<usize>>,
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointSetJson {
            width: self.width.0.clone(),
            points: self.points.iter().map(|p| p.0.clone()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PointSetJson::deserialize(d)?;
        PointSet::new(Width(raw.width), raw.points.into_iter().map(Point))
            .map_err(serde::de::Error::custom)
    }
}
