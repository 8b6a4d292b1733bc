use std::collections::BTreeMap;

use super::PointSet;
use crate::error::{Error, Result};
use crate::lattice::{Hypercuboid, Point};
use crate::matricube::{Matricube, RankTable};
use crate::report::{Axiom, Report, Scan, Violation, Witness};

/// Points where every available unit step down lowers the rank by one.
pub fn independents_of(m: &Matricube) -> PointSet {
    let cube = m.cube();
    let points = (0..cube.len())
        .filter(|&k| {
            (0..cube.dim())
                .filter_map(|i| cube.down(k, i))
                .all(|b| m.rank_at(b) == m.rank_at(k) - 1)
        })
        .map(|k| cube.point(k))
        .collect();
    PointSet::trusted(m.width().clone(), points)
}

fn find_removal(j: &PointSet, a: &Point, i: usize) -> Option<Point> {
    let mut b = a.clone();
    while b.0[i] > 0 {
        b.0[i] -= 1;
        if j.contains(&b) {
            return Some(b);
        }
    }
    None
}

/// `ā∖i`: the member below `ā` differing only in coordinate `i`, with the
/// largest `i`-th coordinate.
pub fn removal(j: &PointSet, a: &Point, i: usize) -> Result<Point> {
    if i >= j.width().dim() {
        return Err(Error::BadDirection {
            dir: i,
            dim: j.width().dim(),
        });
    }
    if a.dim() != j.width().dim() {
        return Err(Error::WidthMismatch {
            expected: j.width().dim(),
            found: a.dim(),
        });
    }
    if !j.contains(a) {
        return Err(Error::Malformed(format!("{a} is not in the set")));
    }
    find_removal(j, a, i).ok_or_else(|| Error::RemovalMissing {
        point: a.to_string(),
        dir: i,
    })
}

/// Size of every member: `|0̄| = 0` and every removal lowers the size by
/// exactly one. Fails when a removal is missing or two removal chains from
/// the same point have different lengths.
pub fn sizes(j: &PointSet) -> Result<BTreeMap<Point, usize>> {
    let mut out: BTreeMap<Point, usize> = BTreeMap::new();
    // canonical order visits every removal before the point itself
    for a in j.iter() {
        let mut size = None;
        for i in 0..a.dim() {
            if a.get(i) == 0 {
                continue;
            }
            let b = find_removal(j, a, i).ok_or_else(|| Error::RemovalMissing {
                point: a.to_string(),
                dir: i,
            })?;
            let s = out[&b] + 1;
            match size {
                None => size = Some(s),
                Some(t) if t != s => {
                    return Err(Error::NotOrderable {
                        point: a.to_string(),
                    })
                }
                _ => {}
            }
        }
        out.insert(a.clone(), size.unwrap_or(0));
    }
    Ok(out)
}

/// Size `|ā|` of one member.
pub fn size(j: &PointSet, a: &Point) -> Result<usize> {
    if !j.contains(a) {
        return Err(Error::Malformed(format!("{a} is not in the set")));
    }
    Ok(sizes(j)?[a])
}

/// Removals exist and every removal chain to `0̄` has the same length.
pub fn is_orderable(j: &PointSet) -> bool {
    sizes(j).is_ok()
}

fn interval_len(j: &PointSet, lo: &Point, hi: &Point) -> usize {
    j.iter()
        .filter(|c| lo.leq_unchecked(c) && c.leq_unchecked(hi))
        .count()
}

fn check_i1(j: &PointSet, report: &mut Report, scan: Scan) -> bool {
    if j.is_empty() {
        report.push(Violation::new(Axiom::I1, Witness::Point(j.width().zero())));
        return report.done(scan);
    }
    for a in j.iter() {
        let removals: Vec<(usize, Point)> = (0..a.dim())
            .filter(|&i| a.get(i) > 0)
            .filter_map(|i| match find_removal(j, a, i) {
                Some(b) => Some((i, b)),
                None => {
                    report.push(Violation::new(Axiom::I1, Witness::Step(a.clone(), i)));
                    None
                }
            })
            .collect();
        if report.done(scan) {
            return true;
        }
        for (k, (i, bi)) in removals.iter().enumerate() {
            for (jj, bj) in &removals[k + 1..] {
                let q = bi.meet_unchecked(bj);
                if !j.contains(&q) || interval_len(j, &q, bi) != interval_len(j, &q, bj) {
                    report.push(Violation::new(
                        Axiom::I1,
                        Witness::Diamond(a.clone(), *i, *jj),
                    ));
                    if report.done(scan) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// `D(ā, b̄) = {k : a_k < b_k}`.
fn difference(a: &Point, b: &Point) -> Vec<usize> {
    (0..a.dim()).filter(|&k| a.get(k) < b.get(k)).collect()
}

/// I1 (removals exist; meets of sibling removals are members with equally
/// long intervals below them) and I2 (size is strictly increasing, and the
/// augmentation property through `D(ā, b̄)`).
pub fn validate_independent_axioms(j: &PointSet, scan: Scan) -> Report {
    let mut report = Report::ok();
    if check_i1(j, &mut report, scan) || !report.is_ok() {
        return report;
    }
    let sizes = match sizes(j) {
        Ok(s) => s,
        Err(e) => {
            report.push(Violation::new(Axiom::I1, Witness::Text(e.to_string())));
            return report;
        }
    };
    let elems: Vec<(&Point, usize)> = sizes.iter().map(|(p, &s)| (p, s)).collect();
    for &(a, sa) in &elems {
        for &(b, sb) in &elems {
            if a.lt_unchecked(b) && sa >= sb {
                report.push(Violation::new(
                    Axiom::I2,
                    Witness::Pair(a.clone(), b.clone()),
                ));
                if report.done(scan) {
                    return report;
                }
            }
        }
    }
    for &(a, sa) in &elems {
        for &(b, sb) in &elems {
            if sa >= sb {
                continue;
            }
            let d = difference(a, b);
            if d.len() < 2 {
                continue;
            }
            let top = a.join_unchecked(b);
            let augmented = elems.iter().any(|&(c, sc)| {
                sc > sa && c.leq_unchecked(&top) && d.iter().any(|&i| c.get(i) < b.get(i))
            });
            if !augmented {
                report.push(Violation::new(
                    Axiom::I2,
                    Witness::Pair(a.clone(), b.clone()),
                ));
                if report.done(scan) {
                    return report;
                }
            }
        }
    }
    report
}

/// I*: every `t·ē_i` is a member (and every `r_i > 0`).
pub fn check_independents_simple(j: &PointSet) -> bool {
    let width = j.width();
    let d = width.dim();
    (0..d).all(|i| {
        let r = width.get(i);
        r > 0 && (0..=r).all(|t| j.contains(&Point::axis(d, i, t)))
    })
}

/// `rk(x̄)` is the largest size of a member below `x̄`.
pub fn matricube_from_independents(j: &PointSet) -> Result<Matricube> {
    validate_independent_axioms(j, Scan::First).into_result()?;
    let sizes = sizes(j)?;
    let cube = Hypercuboid::new(j.width().clone())?;
    let mut values = vec![0i64; cube.len()];
    for k in 0..cube.len() {
        let below = (0..cube.dim())
            .filter_map(|i| cube.down(k, i))
            .map(|b| values[b])
            .max()
            .unwrap_or(0);
        let own = sizes.get(&cube.point(k)).map_or(0, |&s| s as i64);
        values[k] = below.max(own);
    }
    Ok(Matricube::trusted(RankTable::new(
        j.width().clone(),
        values,
    )?))
}
