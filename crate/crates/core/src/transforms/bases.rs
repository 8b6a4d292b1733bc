use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::dual;
use crate::cryptomorph::{independents_of, PointSet};
use crate::error::Error;
use crate::lattice::Point;
use crate::matricube::Matricube;

/// The six candidate notions of basis, none of which is known to behave
/// like matroid bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisCandidateKind {
    /// ⪯-maximal independents.
    A,
    /// Independents of rank `r(M)`.
    B,
    /// Independents `ā` with no independent `ā + ē_i`.
    C,
    /// Independents with `rk(ā + ē_i) = rk(ā)` for every in-range `i`.
    D,
    /// Independents that are not a removal `b̄∖i` of any independent.
    E,
    /// Independents with `rk(ā) + rk*(ā^c) = ℓ1(r̄)`.
    F,
}

impl BasisCandidateKind {
    pub const ALL: [BasisCandidateKind; 6] = [Self::A, Self::B, Self::C, Self::D, Self::E, Self::F];
}

impl fmt::Display for BasisCandidateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Self::A => "a",
            Self::B => "b",
            Self::C => "c",
            Self::D => "d",
            Self::E => "e",
            Self::F => "f",
        };
        f.write_str(c)
    }
}

impl FromStr for BasisCandidateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Self::A),
            "b" => Ok(Self::B),
            "c" => Ok(Self::C),
            "d" => Ok(Self::D),
            "e" => Ok(Self::E),
            "f" => Ok(Self::F),
            other => Err(Error::Malformed(format!(
                "basis kind {other:?}: expected a-f"
            ))),
        }
    }
}

fn all_removals(ind: &PointSet) -> BTreeSet<Point> {
    let mut out = BTreeSet::new();
    for b in ind.iter() {
        for i in 0..b.dim() {
            let mut c = b.clone();
            while c.0[i] > 0 {
                c.0[i] -= 1;
                if ind.contains(&c) {
                    out.insert(c);
                    break;
                }
            }
        }
    }
    out
}

/// The independents selected by `kind`.
pub fn basis_candidates(m: &Matricube, kind: BasisCandidateKind) -> PointSet {
    let width = m.width();
    let ind = independents_of(m);
    let rk = |p: &Point| m.rank(p).expect("in range");
    let ups = |a: &Point| -> Vec<Point> {
        (0..width.dim())
            .filter_map(|i| a.step_up(width, i))
            .collect()
    };
    let keep: BTreeSet<Point> = match kind {
        BasisCandidateKind::A => ind
            .iter()
            .filter(|a| !ind.iter().any(|b| a.lt_unchecked(b)))
            .cloned()
            .collect(),
        BasisCandidateKind::B => ind
            .iter()
            .filter(|a| rk(a) == m.rank_of())
            .cloned()
            .collect(),
        BasisCandidateKind::C => ind
            .iter()
            .filter(|a| !ups(a).iter().any(|u| ind.contains(u)))
            .cloned()
            .collect(),
        BasisCandidateKind::D => ind
            .iter()
            .filter(|a| ups(a).iter().all(|u| rk(u) == rk(a)))
            .cloned()
            .collect(),
        BasisCandidateKind::E => {
            let removed = all_removals(&ind);
            ind.iter()
                .filter(|a| !removed.contains(*a))
                .cloned()
                .collect()
        }
        BasisCandidateKind::F => {
            let d = dual(m);
            let total = width.l1() as i64;
            ind.iter()
                .filter(|a| {
                    let c = a.complement(width).expect("same width");
                    rk(a) + d.rank(&c).expect("in range") == total
                })
                .cloned()
                .collect()
        }
    };
    PointSet::new(width.clone(), keep).expect("subset of the hypercuboid")
}
