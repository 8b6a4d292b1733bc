use std::collections::BTreeSet;

use super::{flats_of, matricube_from_flats, PointSet};
use crate::error::Result;
use crate::lattice::Point;
use crate::matricube::Matricube;
use crate::report::{Axiom, Report, Scan, Violation, Witness};
use crate::transforms::dual;

/// Complements of the flats of the dual. Always contains `0̄`.
pub fn ccir_of(m: &Matricube) -> PointSet {
    let width = m.width();
    let points = flats_of(&dual(m))
        .iter()
        .map(|a| a.complement(width).expect("same width"))
        .collect();
    PointSet::trusted(width.clone(), points)
}

/// The nonzero join-irreducible members of `ccir_of(m)`.
pub fn circuits_of(m: &Matricube) -> PointSet {
    join_irreducibles(&ccir_of(m))
}

fn is_join_irreducible(set: &BTreeSet<Point>, a: &Point) -> bool {
    let below = set
        .iter()
        .filter(|b| b.lt_unchecked(a))
        .cloned()
        .reduce(|x, y| x.join_unchecked(&y));
    below.as_ref() != Some(a)
}

/// Nonzero members that are not the join of other members.
pub fn join_irreducibles(set: &PointSet) -> PointSet {
    let points = set
        .iter()
        .filter(|a| !a.is_zero() && is_join_irreducible(set.points(), a))
        .cloned()
        .collect();
    PointSet::trusted(set.width().clone(), points)
}

/// Closure of the set under pairwise joins, by fixpoint iteration. The empty
/// join is not added.
pub fn join_closure(set: &PointSet) -> PointSet {
    let mut closed: BTreeSet<Point> = set.points().clone();
    let mut frontier: Vec<Point> = closed.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        let snapshot: Vec<Point> = closed.iter().cloned().collect();
        for a in &frontier {
            for b in &snapshot {
                let j = a.join_unchecked(b);
                if !closed.contains(&j) {
                    next.push(j);
                }
            }
        }
        next.sort();
        next.dedup();
        closed.extend(next.iter().cloned());
        frontier = next;
    }
    PointSet::trusted(set.width().clone(), closed)
}

/// C1 (`0̄` is not a circuit), C2 (each member is join-irreducible in the
/// set) and C3 (every step down from a member of the join-closure lies above
/// an element it covers in the closure together with `0̄`).
pub fn validate_circuit_axioms(c: &PointSet, scan: Scan) -> Report {
    let width = c.width();
    let mut report = Report::ok();
    let zero = width.zero();
    if c.contains(&zero) {
        report.push(Violation::new(Axiom::C1, Witness::Point(zero.clone())));
        if report.done(scan) {
            return report;
        }
    }
    for a in c.iter() {
        if !a.is_zero() && !is_join_irreducible(c.points(), a) {
            report.push(Violation::new(Axiom::C2, Witness::Point(a.clone())));
            if report.done(scan) {
                return report;
            }
        }
    }
    let mut closure = join_closure(c).points().clone();
    closure.insert(zero);
    for a in &closure {
        for i in 0..width.dim() {
            let Some(down) = a.step_down(i) else { continue };
            let found = closure.iter().any(|b| {
                b.leq_unchecked(&down)
                    && !closure
                        .iter()
                        .any(|x| b.lt_unchecked(x) && x.lt_unchecked(a))
            });
            if !found {
                report.push(Violation::new(Axiom::C3, Witness::Step(a.clone(), i)));
                if report.done(scan) {
                    return report;
                }
            }
        }
    }
    report
}

/// C*: no circuit is a multiple of a basis vector (and every `r_i > 0`).
pub fn check_circuits_simple(c: &PointSet) -> bool {
    c.width().entries().iter().all(|&r| r > 0)
        && c.iter()
            .all(|a| a.coords().iter().filter(|&&x| x > 0).count() != 1)
}

/// Rebuilds the matricube from its circuits: the complements of the
/// join-closure, together with `r̄`, are the flats of the dual.
pub fn matricube_from_circuits(c: &PointSet) -> Result<Matricube> {
    validate_circuit_axioms(c, Scan::First).into_result()?;
    let width = c.width();
    let mut flats: BTreeSet<Point> = join_closure(c)
        .iter()
        .map(|a| a.complement(width).expect("same width"))
        .collect();
    flats.insert(width.top());
    let dual_flats = PointSet::trusted(width.clone(), flats);
    Ok(dual(&matricube_from_flats(&dual_flats)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Width;
    use crate::matricube::RankTable;
    use crate::{is_simple, uniform};

    fn m_ex2() -> Matricube {
        Matricube::new(
            RankTable::from_rows(&[
                &[4, 4, 4, 4, 5, 6],
                &[3, 3, 4, 4, 5, 6],
                &[2, 2, 3, 3, 4, 5],
                &[1, 1, 2, 3, 4, 5],
                &[0, 1, 2, 3, 4, 5],
            ])
            .unwrap(),
        )
        .unwrap()
    }

    fn set(width: &[usize], pts: &[&[usize]]) -> PointSet {
        PointSet::new(Width::new(width), pts.iter().map(|p| Point::new(*p))).unwrap()
    }

    #[test]
    fn red_circuits_of_second_example() {
        let m = m_ex2();
        let c = circuits_of(&m);
        assert_eq!(c, set(&[5, 4], &[&[1, 1], &[3, 2], &[2, 4]]));
        let cc = ccir_of(&m);
        assert_eq!(
            cc,
            set(&[5, 4], &[&[0, 0], &[1, 1], &[3, 2], &[2, 4], &[3, 4]])
        );
        assert!(validate_circuit_axioms(&c, Scan::All).is_ok());
        assert!(check_circuits_simple(&c));
        assert_eq!(matricube_from_circuits(&c).unwrap(), m);
        // circuits may be comparable
        assert!(Point::new([1, 1]).leq_unchecked(&Point::new([3, 2])));
    }

    #[test]
    fn free_matricube_has_no_circuits() {
        let u = uniform(Width::new([2, 2]), 4).unwrap();
        assert!(circuits_of(&u).is_empty());
        let empty = set(&[1, 1], &[]);
        assert!(validate_circuit_axioms(&empty, Scan::All).is_ok());
        assert_eq!(
            matricube_from_circuits(&empty).unwrap(),
            uniform(Width::new([1, 1]), 2).unwrap()
        );
    }

    #[test]
    fn axis_circuit_is_a_loop() {
        let c = set(&[2, 1], &[&[2, 0]]);
        assert!(validate_circuit_axioms(&c, Scan::All).is_ok());
        assert!(!check_circuits_simple(&c));
        let m = matricube_from_circuits(&c).unwrap();
        assert!(!is_simple(&m));
        assert_eq!(circuits_of(&m), c);
    }

    #[test]
    fn zero_and_reducible_members_are_rejected() {
        let c = set(&[1, 1], &[&[0, 0]]);
        assert_eq!(
            validate_circuit_axioms(&c, Scan::First)
                .first()
                .unwrap()
                .axiom,
            Axiom::C1
        );
        let c = set(&[1, 1], &[&[1, 0], &[0, 1], &[1, 1]]);
        let rep = validate_circuit_axioms(&c, Scan::All);
        assert_eq!(
            rep.first().unwrap(),
            &Violation::new(Axiom::C2, Witness::Point(Point::new([1, 1])))
        );
        assert!(matricube_from_circuits(&c).is_err());
    }

    #[test]
    fn descending_cover_failure() {
        // below (1,1)−e_0 = (0,1) only 0̄ is available, and (1,0) sits between
        let c = set(&[1, 1], &[&[1, 0], &[1, 1]]);
        let rep = validate_circuit_axioms(&c, Scan::All);
        assert_eq!(
            rep.first().unwrap(),
            &Violation::new(Axiom::C3, Witness::Step(Point::new([1, 1]), 0))
        );
    }

    #[test]
    fn closure_by_pairwise_joins() {
        let c = set(&[2, 2, 1], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(join_closure(&c).len(), 7);
    }
}
