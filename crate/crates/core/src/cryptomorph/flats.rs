use std::collections::{BTreeSet, VecDeque};

use super::PointSet;
use crate::error::{Error, Result};
use crate::lattice::{Hypercuboid, Point};
use crate::matricube::{Matricube, RankTable};
use crate::report::{Axiom, Report, Scan, Violation, Witness};

/// Points where every available unit step raises the rank by exactly one.
pub fn flats_of(m: &Matricube) -> PointSet {
    let cube = m.cube();
    let points = (0..cube.len())
        .filter(|&k| {
            (0..cube.dim())
                .filter_map(|i| cube.up(k, i))
                .all(|u| m.rank_at(u) == m.rank_at(k) + 1)
        })
        .map(|k| cube.point(k))
        .collect();
    PointSet::trusted(m.width().clone(), points)
}

/// The flats as a poset: strict order, cover relation and grading.
#[derive(Debug, Clone)]
pub struct FlatLattice {
    elems: Vec<Point>,
    /// `covers[a]` lists the elements covering `a`.
    covers: Vec<Vec<usize>>,
    grade: Vec<usize>,
}

impl FlatLattice {
    /// Builds the cover graph and grades every element by its distance from
    /// the minimum. Fails when the set has no minimum or when two maximal
    /// chains to the same element have different lengths.
    pub fn new(set: &PointSet) -> Result<Self> {
        let elems: Vec<Point> = set.iter().cloned().collect();
        let n = elems.len();
        let lt = |a: usize, b: usize| elems[a].lt_unchecked(&elems[b]);
        let covers: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)))
                    .collect()
            })
            .collect();
        let bottom = (0..n)
            .find(|&a| (0..n).all(|b| elems[a].leq_unchecked(&elems[b])))
            .ok_or_else(|| Error::NotGraded("no minimum flat".into()))?;

        // shortest distance by BFS, longest by a pass in canonical order
        // (the canonical order is a linear extension of ⪯)
        let mut shortest = vec![usize::MAX; n];
        shortest[bottom] = 0;
        let mut queue = VecDeque::from([bottom]);
        while let Some(a) = queue.pop_front() {
            for &b in &covers[a] {
                if shortest[b] == usize::MAX {
                    shortest[b] = shortest[a] + 1;
                    queue.push_back(b);
                }
            }
        }
        let mut longest = vec![0usize; n];
        for a in 0..n {
            for &b in &covers[a] {
                longest[b] = longest[b].max(longest[a] + 1);
            }
        }
        if let Some(a) = (0..n).find(|&a| shortest[a] != longest[a]) {
            return Err(Error::NotGraded(elems[a].to_string()));
        }
        Ok(FlatLattice {
            elems,
            covers,
            grade: shortest,
        })
    }

    pub fn elements(&self) -> &[Point] {
        &self.elems
    }

    fn pos(&self, p: &Point) -> Option<usize> {
        self.elems.binary_search(p).ok()
    }

    pub fn grade(&self, p: &Point) -> Option<usize> {
        self.pos(p).map(|k| self.grade[k])
    }

    /// True when `b` covers `a` in the set.
    pub fn covers(&self, b: &Point, a: &Point) -> bool {
        match (self.pos(a), self.pos(b)) {
            (Some(ka), Some(kb)) => self.covers[ka].contains(&kb),
            _ => false,
        }
    }

    /// Elements covering `a`.
    pub fn upper_covers(&self, a: &Point) -> Vec<Point> {
        self.pos(a)
            .map(|k| {
                self.covers[k]
                    .iter()
                    .map(|&b| self.elems[b].clone())
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Join in the lattice: the meet of all common upper bounds.
    pub fn join(&self, a: &Point, b: &Point) -> Option<Point> {
        let bound = a.join_unchecked(b);
        self.elems
            .iter()
            .filter(|c| bound.leq_unchecked(c))
            .cloned()
            .reduce(|x, y| x.meet_unchecked(&y))
    }
}

/// `φ(x̄)`: meet of all points of `set` above `x̄`. It is the minimum such
/// flat whenever the set is meet-closed and contains `r̄`.
pub fn closure(set: &PointSet, x: &Point) -> Option<Point> {
    set.iter()
        .filter(|b| x.leq_unchecked(b))
        .cloned()
        .reduce(|a, b| a.meet_unchecked(&b))
}

fn covering_exists(set: &PointSet, a: &Point, target: &Point) -> bool {
    set.iter().any(|b| {
        target.leq_unchecked(b)
            && a.lt_unchecked(b)
            && !set.iter().any(|c| a.lt_unchecked(c) && c.lt_unchecked(b))
    })
}

/// F1 (`r̄` is a flat), F2 (meet-closed), F3 (every step up from a flat is
/// below a flat covering it).
pub fn validate_flat_axioms(f: &PointSet, scan: Scan) -> Report {
    let width = f.width();
    let mut report = Report::ok();
    let top = width.top();
    if !f.contains(&top) {
        report.push(Violation::new(Axiom::F1, Witness::Point(top)));
        if report.done(scan) {
            return report;
        }
    }
    let elems: Vec<&Point> = f.iter().collect();
    for (ka, a) in elems.iter().enumerate() {
        for b in &elems[ka + 1..] {
            if !f.contains(&a.meet_unchecked(b)) {
                report.push(Violation::new(
                    Axiom::F2,
                    Witness::Pair((*a).clone(), (*b).clone()),
                ));
                if report.done(scan) {
                    return report;
                }
            }
        }
    }
    for a in &elems {
        for i in 0..width.dim() {
            if let Some(up) = a.step_up(width, i) {
                if !covering_exists(f, a, &up) {
                    report.push(Violation::new(Axiom::F3, Witness::Step((*a).clone(), i)));
                    if report.done(scan) {
                        return report;
                    }
                }
            }
        }
    }
    report
}

/// F*: every layer `L^i_t` meets the set (and every `r_i > 0`).
pub fn check_flats_simple(f: &PointSet) -> bool {
    let width = f.width();
    (0..width.dim()).all(|i| {
        let r = width.get(i);
        r > 0 && (0..=r).all(|t| f.iter().any(|p| p.get(i) == t))
    })
}

/// The unique matricube with the given flats: `rk(x̄)` is the grade of
/// `φ(x̄)` in the flats lattice.
pub fn matricube_from_flats(f: &PointSet) -> Result<Matricube> {
    validate_flat_axioms(f, Scan::First).into_result()?;
    let lattice = FlatLattice::new(f)?;
    let cube = Hypercuboid::new(f.width().clone())?;
    let values = cube
        .points()
        .map(|x| {
            let phi = closure(f, &x).expect("r̄ is a flat");
            lattice.grade(&phi).expect("meet-closed") as i64
        })
        .collect();
    let table = RankTable::new(f.width().clone(), values)?;
    Ok(Matricube::trusted(table))
}

/// Flats of `m` as a sorted set, for tests.
#[allow(dead_code)]
pub(crate) fn flat_points(m: &Matricube) -> BTreeSet<Point> {
    flats_of(m).points().clone()
}
