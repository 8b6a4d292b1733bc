//! Integer tables on hypercuboids and the matricube rank axioms.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{Hypercuboid, Point, Width};
use crate::report::{Axiom, Report, Scan, Violation, Witness};
use crate::submodular;

/// Size guards for the exhaustive oracles. These are configuration, never
/// global state; every guarded operation has a variant taking `&Limits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest hypercuboid accepted by the diamond check.
    pub diamond_points: usize,
    /// Largest hypercuboid accepted by pairwise checks.
    pub pair_points: usize,
    /// Largest matroid ground set stored as a full rank table.
    pub matroid_elements: usize,
    /// Largest ground set of a natural matroid.
    pub natural_elements: usize,
    /// Largest hypercuboid handed to the pruned enumerator.
    pub enumerate_points: usize,
    /// Largest hypercuboid handed to the brute-force enumerator.
    pub bruteforce_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            diamond_points: 1_000_000,
            pair_points: 10_000,
            matroid_elements: 16,
            natural_elements: 20,
            enumerate_points: 24,
            bruteforce_points: 12,
        }
    }
}

impl Limits {
    pub(crate) fn guard(limit: &'static str, size: usize, guard: usize) -> Result<()> {
        if size > guard {
            Err(Error::SizeGuard { limit, size, guard })
        } else {
            Ok(())
        }
    }
}

/// An arbitrary integer function on a hypercuboid, stored in canonical
/// layout. No axioms are assumed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RankTable {
    cube: Hypercuboid,
    values: Vec<i64>,
}

impl RankTable {
    pub fn new(width: Width, values: Vec<i64>) -> Result<Self> {
        let cube = Hypercuboid::new(width)?;
        if values.len() != cube.len() {
            return Err(Error::TableSize {
                width: cube.width().to_string(),
                expected: cube.len(),
                found: values.len(),
            });
        }
        Ok(RankTable { cube, values })
    }

    /// Builds a table from a function of the point.
    pub fn from_fn(width: Width, f: impl Fn(&Point) -> i64) -> Result<Self> {
        let cube = Hypercuboid::new(width)?;
        let values = cube.points().map(|p| f(&p)).collect();
        Ok(RankTable { cube, values })
    }

    /// Builds a table on width `(r_0, r_1)` from rows written the way they
    /// are displayed: top row first (`x_1 = r_1`), first axis horizontal.
    pub fn from_rows(rows_top_down: &[&[i64]]) -> Result<Self> {
        let h = rows_top_down.len();
        let w = rows_top_down.first().map_or(0, |r| r.len());
        if h == 0 || w == 0 || rows_top_down.iter().any(|r| r.len() != w) {
            return Err(Error::Malformed("ragged or empty grid".into()));
        }
        let width = Width::new([w - 1, h - 1]);
        RankTable::from_fn(width, |p| rows_top_down[h - 1 - p.get(1)][p.get(0)])
    }

    pub fn cube(&self) -> &Hypercuboid {
        &self.cube
    }

    pub fn width(&self) -> &Width {
        self.cube.width()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn at(&self, p: &Point) -> Result<i64> {
        Ok(self.values[self.cube.index(p)?])
    }

    pub fn at_index(&self, idx: usize) -> i64 {
        self.values[idx]
    }

    /// Value at the top point `r̄`.
    pub fn top_value(&self) -> i64 {
        self.values[self.values.len() - 1]
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }
}

impl fmt::Debug for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RankTable{}{:?}", self.width(), self.values)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    width: Vec<usize>,
    rank: Vec<i64>,
}

impl Serialize for RankTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson {
            width: self.width().0.clone(),
            rank: self.values.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RankTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TableJson::deserialize(d)?;
        RankTable::new(Width(raw.width), raw.rank).map_err(serde::de::Error::custom)
    }
}

/// Checks R1, R2, the unit-step consequence and R3 (through the diamond
/// property), in that order. Witnesses are the lexicographically smallest
/// in each category.
pub fn validate_rank_axioms(f: &RankTable, scan: Scan) -> Report {
    let cube = f.cube();
    let d = cube.dim();
    let v = f.values();
    let mut report = Report::ok();

    if v[0] != 0 {
        report.push(Violation::new(Axiom::R1, Witness::Point(cube.point(0))));
        if report.done(scan) {
            return report;
        }
    }
    for i in 0..d {
        for t in 1..=cube.width().get(i) {
            let lo = (t - 1) * cube.stride(i);
            let hi = t * cube.stride(i);
            if v[hi] - v[lo] > 1 {
                report.push(Violation::new(
                    Axiom::R1,
                    Witness::Step(Point::axis(d, i, t - 1), i),
                ));
                if report.done(scan) {
                    return report;
                }
            }
        }
    }

    for idx in 0..cube.len() {
        for i in 0..d {
            if let Some(up) = cube.up(idx, i) {
                if v[idx] > v[up] {
                    report.push(Violation::new(
                        Axiom::R2,
                        Witness::Pair(cube.point(idx), cube.point(up)),
                    ));
                    if report.done(scan) {
                        return report;
                    }
                }
            }
        }
    }

    for idx in 0..cube.len() {
        for i in 0..d {
            if let Some(up) = cube.up(idx, i) {
                if v[up] - v[idx] > 1 {
                    report.push(Violation::new(
                        Axiom::Step,
                        Witness::Step(cube.point(idx), i),
                    ));
                    if report.done(scan) {
                        return report;
                    }
                }
            }
        }
    }

    // the diamond inequality is symmetric in (i, j); report each square once
    for (x, i, j) in submodular::diamond_failures(f, scan == Scan::First)
        .into_iter()
        .filter(|w| w.1 < w.2)
    {
        let a = x.step_up(cube.width(), i).expect("in range");
        let b = x.step_up(cube.width(), j).expect("in range");
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        report.push(Violation::new(Axiom::R3, Witness::Pair(lo, hi)));
        if report.done(scan) {
            return report;
        }
    }
    report
}

/// A rank function satisfying R1–R3.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matricube {
    table: RankTable,
}

impl Matricube {
    /// Validates the table; the first violation is returned as an error.
    pub fn new(table: RankTable) -> Result<Self> {
        validate_rank_axioms(&table, Scan::First).into_result()?;
        Ok(Matricube { table })
    }

    pub fn from_values(width: Width, values: Vec<i64>) -> Result<Self> {
        Matricube::new(RankTable::new(width, values)?)
    }

    /// Wraps a table already known to satisfy the axioms.
    pub(crate) fn trusted(table: RankTable) -> Self {
        debug_assert!(
            validate_rank_axioms(&table, Scan::First).is_ok(),
            "{:?}",
            table
        );
        Matricube { table }
    }

    pub fn table(&self) -> &RankTable {
        &self.table
    }

    pub fn into_table(self) -> RankTable {
        self.table
    }

    pub fn cube(&self) -> &Hypercuboid {
        self.table.cube()
    }

    pub fn width(&self) -> &Width {
        self.table.width()
    }

    pub fn values(&self) -> &[i64] {
        self.table.values()
    }

    /// `rk(x̄)`.
    pub fn rank(&self, x: &Point) -> Result<i64> {
        self.table.at(x)
    }

    pub fn rank_at(&self, idx: usize) -> i64 {
        self.table.at_index(idx)
    }

    /// `r(M) = rk(r̄)`.
    pub fn rank_of(&self) -> i64 {
        self.table.top_value()
    }

    /// The single-point matricube on the empty width.
    pub fn empty() -> Self {
        Matricube::trusted(RankTable::new(Width::new([]), vec![0]).expect("one point"))
    }
}

impl fmt::Debug for Matricube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matricube{}{:?}", self.width(), self.values())
    }
}

impl Serialize for Matricube {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.table.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matricube {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let t = RankTable::deserialize(d)?;
        Matricube::new(t).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<RankTable> for Matricube {
    type Error = Error;

    fn try_from(t: RankTable) -> Result<Self> {
        Matricube::new(t)
    }
}

/// `rank(m, x̄)`.
pub fn rank(m: &Matricube, x: &Point) -> Result<i64> {
    m.rank(x)
}

/// `rank_of(m) = rank(r̄)`.
pub fn rank_of(m: &Matricube) -> i64 {
    m.rank_of()
}

/// The uniform matricube `U_{r̄, r}` with `rk(ā) = min(r, |ā|)`.
pub fn uniform(width: Width, r: i64) -> Result<Matricube> {
    let max = width.l1() as i64;
    if r < 0 || r > max {
        return Err(Error::RankOutOfRange { rank: r, max });
    }
    let t = RankTable::from_fn(width, |p| (p.l1() as i64).min(r))?;
    Ok(Matricube::trusted(t))
}

/// `r_i > 0` and `rk(t·ē_i) = t` for every direction and every `t`.
pub fn is_simple(m: &Matricube) -> bool {
    let cube = m.cube();
    (0..cube.dim()).all(|i| {
        let r = cube.width().get(i);
        r > 0 && (0..=r).all(|t| m.rank_at(t * cube.stride(i)) == t as i64)
    })
}

/// Every value is at most `min(r, |x̄|)` where `r` is the rank.
pub fn check_dominated_by_uniform(m: &Matricube) -> bool {
    let r = m.rank_of();
    let cube = m.cube();
    (0..cube.len()).all(|k| m.rank_at(k) <= r.min(cube.l1_of(k) as i64))
}
