//! Matroids as full subset-rank tables, and the bridges between matricubes
//! and matroids: local matroids and coherent complexes, the natural
//! polymatroid and natural matroid, and matricubes induced by flag matroids.
//!
//! Subsets of a ground set of size `n` are bitmasks; bit `j` is element `j`.

mod flag;
mod local;
mod natural;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matricube::Limits;
use crate::report::{Axiom, Report, Scan, Violation, Witness};

pub use flag::{
    matricube_from_flag_matroids, matroid_union_rank, matroid_union_rank_bruteforce,
    validate_flag_matroid, FlagMatroid,
};
pub use local::{
    coherent_complex_of, local_matroid, matricube_from_coherent, path_rank, validate_coherent,
    CoherentComplex,
};
pub use natural::{
    natural_matroid, natural_matroid_with, natural_polymatroid, validate_polymatroid, Polymatroid,
};

/// A set function on `2^E` stored in full. Construction only checks the
/// table size; [`validate_matroid`] checks the axioms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground: Vec<String>,
    rank: Vec<i64>,
}

fn check_table(ground: &[String], rank: &[i64], guard: usize) -> Result<()> {
    Limits::guard("matroid ground set", ground.len(), guard)?;
    let expected = 1usize << ground.len();
    if rank.len() != expected {
        return Err(Error::Malformed(format!(
            "rank table has {} entries, {} elements need {expected}",
            rank.len(),
            ground.len()
        )));
    }
    Ok(())
}

impl Matroid {
    pub fn new(ground: Vec<String>, rank: Vec<i64>) -> Result<Self> {
        Self::new_with(ground, rank, &Limits::default())
    }

    pub fn new_with(ground: Vec<String>, rank: Vec<i64>, limits: &Limits) -> Result<Self> {
        check_table(&ground, &rank, limits.matroid_elements)?;
        Ok(Matroid { ground, rank })
    }

    /// Elements labelled `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(u64) -> i64) -> Result<Self> {
        Limits::guard("matroid ground set", n, Limits::default().matroid_elements)?;
        let ground = (0..n).map(|j| j.to_string()).collect();
        let rank = (0..1u64 << n).map(f).collect();
        Ok(Matroid { ground, rank })
    }

    /// `U_{k,n}`.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        Self::from_fn(n, |s| (s.count_ones() as i64).min(k as i64))
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n()) - 1
    }

    pub fn rank(&self, s: u64) -> i64 {
        self.rank[s as usize]
    }

    pub fn table(&self) -> &[i64] {
        &self.rank
    }

    /// Rank of the whole ground set.
    pub fn rank_of(&self) -> i64 {
        self.rank[self.full() as usize]
    }

    /// Independent sets, as bitmasks in increasing order.
    pub fn independents(&self) -> Vec<u64> {
        (0..=self.full())
            .filter(|&s| self.rank(s) == s.count_ones() as i64)
            .collect()
    }
}

/// Normalisation, unit increments and the local submodular inequality
/// `r(X+e) + r(X+f) ≥ r(X+e+f) + r(X)`, which is equivalent to
/// submodularity for set functions.
pub fn validate_matroid(m: &Matroid, scan: Scan) -> Report {
    validate_set_function(&m.rank, m.n(), Axiom::Matroid, scan)
}

/// Shared by matroids (`Axiom::Matroid`, unit increments) and polymatroids
/// (any non-negative increment).
fn validate_set_function(rank: &[i64], n: usize, axiom: Axiom, scan: Scan) -> Report {
    let unit = axiom == Axiom::Matroid;
    let mut report = Report::ok();
    let full = (1u64 << n) - 1;
    if rank[0] != 0 {
        report.push(Violation::new(axiom, Witness::Subsets(0, 0)));
        if report.done(scan) {
            return report;
        }
    }
    for s in 0..=full {
        for e in (0..n).filter(|&e| s >> e & 1 == 0) {
            let t = s | 1 << e;
            let step = rank[t as usize] - rank[s as usize];
            if step < 0 || (unit && step > 1) {
                report.push(Violation::new(axiom, Witness::Subsets(s, t)));
                if report.done(scan) {
                    return report;
                }
            }
        }
    }
    for s in 0..=full {
        for e in (0..n).filter(|&e| s >> e & 1 == 0) {
            for f in (e + 1..n).filter(|&f| s >> f & 1 == 0) {
                let (se, sf, sef) = (s | 1 << e, s | 1 << f, s | 1 << e | 1 << f);
                if rank[se as usize] + rank[sf as usize] < rank[sef as usize] + rank[s as usize] {
                    report.push(Violation::new(axiom, Witness::Subsets(se, sf)));
                    if report.done(scan) {
                        return report;
                    }
                }
            }
        }
    }
    report
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SetFunctionJson {
    ground: Vec<String>,
    rank: Vec<i64>,
}

impl Serialize for Matroid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SetFunctionJson {
            ground: self.ground.clone(),
            rank: self.rank.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matroid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SetFunctionJson::deserialize(d)?;
        Matroid::new(raw.ground, raw.rank).map_err(serde::de::Error::custom)
    }
}
