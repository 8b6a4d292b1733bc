use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{validate_matroid, Matroid};
use crate::error::{Error, Result};
use crate::lattice::{Hypercuboid, Width};
use crate::matricube::{Matricube, RankTable};
use crate::par::{self, Exec};
use crate::report::{Axiom, Report, Scan, Violation, Witness};

/// A chain `M_0, …, M_s` of matroids on one ground set, each meant to have
/// rank `j` and to be a quotient of the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagMatroid {
    ground: Vec<String>,
    constituents: Vec<Matroid>,
}

impl FlagMatroid {
    /// Every constituent must carry exactly `ground`.
    pub fn new(ground: Vec<String>, constituents: Vec<Matroid>) -> Result<Self> {
        if constituents.is_empty() {
            return Err(Error::Malformed("a flag matroid needs at least M_0".into()));
        }
        if let Some(j) = constituents.iter().position(|m| m.ground != ground) {
            return Err(Error::Malformed(format!(
                "constituent {j} has a different ground set"
            )));
        }
        Ok(FlagMatroid {
            ground,
            constituents,
        })
    }

    /// `U_{0,n} ⊂ U_{1,n} ⊂ … ⊂ U_{s,n}`.
    pub fn uniform_chain(s: usize, n: usize) -> Result<Self> {
        let constituents = (0..=s)
            .map(|j| Matroid::uniform(j, n))
            .collect::<Result<Vec<_>>>()?;
        FlagMatroid::new(constituents[0].ground.clone(), constituents)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn constituents(&self) -> &[Matroid] {
        &self.constituents
    }

    /// `s`, the index of the last constituent.
    pub fn length(&self) -> usize {
        self.constituents.len() - 1
    }
}

/// Matroid axioms per constituent, then the quotient inequality, then
/// `rank(M_j) = j`. The quotient inequality for all `A ⊆ B` is equivalent to
/// `r_{j+1} − r_j` being monotone, so it is checked on single-element
/// extensions and reported as `(A, A ∪ {e})`.
pub fn validate_flag_matroid(fm: &FlagMatroid, scan: Scan) -> Report {
    let mut report = Report::ok();
    for (j, m) in fm.constituents.iter().enumerate() {
        if let Some(v) = validate_matroid(m, Scan::First).first() {
            report.push(Violation::new(
                Axiom::Matroid,
                Witness::Text(format!("constituent {j}: {v}")),
            ));
            if report.done(scan) {
                return report;
            }
        }
    }
    let n = fm.ground.len();
    for pair in fm.constituents.windows(2) {
        let (lo, hi) = (&pair[0], &pair[1]);
        for a in 0..1u64 << n {
            for e in (0..n).filter(|&e| a >> e & 1 == 0) {
                let b = a | 1 << e;
                if hi.rank(b) - hi.rank(a) < lo.rank(b) - lo.rank(a) {
                    report.push(Violation::new(Axiom::Quotient, Witness::Subsets(a, b)));
                    if report.done(scan) {
                        return report;
                    }
                }
            }
        }
    }
    for (j, m) in fm.constituents.iter().enumerate() {
        if m.rank_of() != j as i64 {
            report.push(Violation::new(Axiom::ConstituentRank, Witness::Index(j)));
            if report.done(scan) {
                return report;
            }
        }
    }
    report
}

fn same_ground(ms: &[&Matroid]) -> Result<()> {
    match ms.split_first() {
        Some((first, rest)) if rest.iter().any(|m| m.n() != first.n()) => Err(Error::Malformed(
            "matroids have ground sets of different sizes".into(),
        )),
        _ => Ok(()),
    }
}

fn union_rank(ms: &[&Matroid], u: u64) -> i64 {
    if ms.is_empty() {
        return 0;
    }
    let mut best = i64::MAX;
    let mut t = u;
    loop {
        let cost = (u & !t).count_ones() as i64 + ms.iter().map(|m| m.rank(t)).sum::<i64>();
        best = best.min(cost);
        if t == 0 {
            return best;
        }
        t = (t - 1) & u;
    }
}

/// Rank of `U` in the union of the matroids:
/// `min_{T ⊆ U} |U ∖ T| + Σ_i r_i(T)`. The empty union has rank 0.
pub fn matroid_union_rank(ms: &[Matroid], u: u64) -> Result<i64> {
    let refs: Vec<&Matroid> = ms.iter().collect();
    same_ground(&refs)?;
    if let Some(m) = ms.first() {
        if u & !m.full() != 0 {
            return Err(Error::Malformed(format!(
                "subset {u:#b} outside the ground set"
            )));
        }
    }
    Ok(union_rank(&refs, u))
}

/// The largest `|I_1 ∪ … ∪ I_k|` with `I_j ⊆ U` independent in `M_j`, by
/// sweeping reachable unions. Exponential; for cross-checks on small
/// ground sets.
pub fn matroid_union_rank_bruteforce(ms: &[Matroid], u: u64) -> Result<i64> {
    let refs: Vec<&Matroid> = ms.iter().collect();
    same_ground(&refs)?;
    let Some(first) = ms.first() else {
        return Ok(0);
    };
    let size = 1usize << first.n();
    let mut reach = vec![false; size];
    reach[0] = true;
    for m in ms {
        let indep: Vec<u64> = m
            .independents()
            .into_iter()
            .filter(|&i| i & !u == 0)
            .collect();
        let mut next = vec![false; size];
        for s in (0..size).filter(|&s| reach[s]) {
            for &i in &indep {
                next[s | i as usize] = true;
            }
        }
        reach = next;
    }
    Ok((0..size)
        .filter(|&s| reach[s])
        .map(|s| s.count_ones() as i64)
        .max()
        .unwrap_or(0))
}

/// `rk(x) = r(M^1_{x_1} ∪ … ∪ M^d_{x_d})` on the width `(s_1, …, s_d)` of
/// the flags. Every flag matroid must validate and all must share one
/// ground set.
pub fn matricube_from_flag_matroids(fms: &[FlagMatroid]) -> Result<Matricube> {
    if let Some(first) = fms.first() {
        if fms.iter().any(|fm| fm.ground != first.ground) {
            return Err(Error::Malformed(
                "flag matroids have different ground sets".into(),
            ));
        }
    }
    for fm in fms {
        validate_flag_matroid(fm, Scan::First).into_result()?;
    }
    let width = Width::new(fms.iter().map(FlagMatroid::length).collect::<Vec<_>>());
    let cube = Hypercuboid::new(width.clone())?;
    let full = fms.first().map_or(0, |fm| fm.constituents[0].full());
    let values = par::map(Exec::default(), 0..cube.len(), |idx| {
        let ms: Vec<&Matroid> = fms
            .iter()
            .enumerate()
            .map(|(i, fm)| &fm.constituents[cube.coord(idx, i)])
            .collect();
        union_rank(&ms, full)
    });
    Matricube::new(RankTable::new(width, values)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagJson {
    ground: Vec<String>,
    constituents: Vec<Matroid>,
}

impl Serialize for FlagMatroid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FlagJson {
            ground: self.ground.clone(),
            constituents: self.constituents.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FlagMatroid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FlagJson::deserialize(d)?;
        FlagMatroid::new(raw.ground, raw.constituents).map_err(serde::de::Error::custom)
    }
}
