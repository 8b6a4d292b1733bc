use std::collections::HashMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_table, validate_set_function, Matroid, SetFunctionJson};
use crate::error::{Error, Result};
use crate::lattice::Point;
use crate::matricube::{Limits, Matricube};
use crate::report::{Axiom, Report, Scan};

/// A set function meant to be normalised, monotone and submodular; see
/// [`validate_polymatroid`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polymatroid {
    ground: Vec<String>,
    rank: Vec<i64>,
}

impl Polymatroid {
    pub fn new(ground: Vec<String>, rank: Vec<i64>) -> Result<Self> {
        check_table(&ground, &rank, Limits::default().matroid_elements)?;
        Ok(Polymatroid { ground, rank })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self, s: u64) -> i64 {
        self.rank[s as usize]
    }

    pub fn table(&self) -> &[i64] {
        &self.rank
    }
}

pub fn validate_polymatroid(p: &Polymatroid, scan: Scan) -> Report {
    validate_set_function(&p.rank, p.n(), Axiom::Polymatroid, scan)
}

/// Ground set `[0,r_1] ⊔ … ⊔ [0,r_d]`, element `t` of block `i` labelled
/// `t_i` and standing for the axis point `t·e_i`;
/// `ρ(S) = rk(⋁_{t·e_i ∈ S} t·e_i)`. The `t = 0` elements are kept; they are
/// loops.
pub fn natural_polymatroid(m: &Matricube) -> Result<Polymatroid> {
    let width = m.width();
    let blocks: Vec<(usize, usize)> = (0..width.dim())
        .flat_map(|i| (0..=width.get(i)).map(move |t| (i, t)))
        .collect();
    Limits::guard(
        "natural polymatroid ground set",
        blocks.len(),
        Limits::default().matroid_elements,
    )?;
    let ground = blocks.iter().map(|(i, t)| format!("{t}_{i}")).collect();
    let rank = (0..1u64 << blocks.len())
        .map(|s| {
            let mut top = vec![0; width.dim()];
            for (j, &(i, t)) in blocks.iter().enumerate() {
                if s >> j & 1 == 1 {
                    top[i] = top[i].max(t);
                }
            }
            m.rank(&Point(top)).expect("axis joins stay in range")
        })
        .collect();
    Ok(Polymatroid { ground, rank })
}

pub fn natural_matroid(p: &Polymatroid) -> Result<Matroid> {
    natural_matroid_with(p, &Limits::default())
}

/// Each element `e` becomes `ρ({e})` copies labelled `e#0, e#1, …`, and
/// `ρ̂(Y) = min_S ρ(S) + |Y ∖ Ŝ|` with `Ŝ` the copies of `S`. The value only
/// depends on how many copies of each element `Y` holds, so the scan over
/// `S` runs once per distinct count vector.
pub fn natural_matroid_with(p: &Polymatroid, limits: &Limits) -> Result<Matroid> {
    let n = p.n();
    let copies: Vec<usize> = (0..n)
        .map(|e| {
            let c = p.rank(1 << e);
            usize::try_from(c)
                .map_err(|_| Error::Malformed(format!("element {} has rank {c}", p.ground[e])))
        })
        .collect::<Result<_>>()?;
    let total: usize = copies.iter().sum();
    Limits::guard("natural matroid ground set", total, limits.natural_elements)?;

    let mut owner = Vec::with_capacity(total);
    let mut ground = Vec::with_capacity(total);
    for (e, &c) in copies.iter().enumerate() {
        for k in 0..c {
            owner.push(e);
            ground.push(format!("{}#{k}", p.ground[e]));
        }
    }

    let mut memo: HashMap<Vec<u8>, i64> = HashMap::new();
    let rank = (0..1u64 << total)
        .map(|y| {
            let mut counts = vec![0u8; n];
            for (j, &e) in owner.iter().enumerate() {
                if y >> j & 1 == 1 {
                    counts[e] += 1;
                }
            }
            *memo.entry(counts).or_insert_with_key(|counts| {
                (0..1u64 << n)
                    .map(|s| {
                        let outside: i64 = (0..n)
                            .filter(|&e| s >> e & 1 == 0)
                            .map(|e| counts[e] as i64)
                            .sum();
                        p.rank(s) + outside
                    })
                    .min()
                    .expect("nonempty scan")
            })
        })
        .collect();
    Ok(Matroid { ground, rank })
}

impl Serialize for Polymatroid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SetFunctionJson {
            ground: self.ground.clone(),
            rank: self.rank.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polymatroid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SetFunctionJson::deserialize(d)?;
        Polymatroid::new(raw.ground, raw.rank).map_err(serde::de::Error::custom)
    }
}
