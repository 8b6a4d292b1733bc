use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{validate_matroid, Matroid};
use crate::error::{Error, Result};
use crate::lattice::{Hypercuboid, Point, Width};
use crate::matricube::{Matricube, RankTable};
use crate::par::{self, Exec};
use crate::report::{Axiom, Report, Scan, Violation, Witness};

/// Directions still available at `idx`: `I_a = {i : a_i < r_i}`.
fn available(cube: &Hypercuboid, idx: usize) -> Vec<usize> {
    (0..cube.dim())
        .filter(|&i| cube.up(idx, i).is_some())
        .collect()
}

/// Re-indexes a direction mask onto the ground set `dirs`. Directions
/// outside `dirs` must not appear.
fn to_local(dirs: &[usize], dmask: u64) -> u64 {
    dirs.iter()
        .enumerate()
        .filter(|(_, &i)| dmask >> i & 1 == 1)
        .fold(0, |acc, (j, _)| acc | 1 << j)
}

fn local_at(m: &Matricube, idx: usize) -> Matroid {
    let cube = m.cube();
    let dirs = available(cube, idx);
    let base = m.rank_at(idx);
    let rank = (0..1u64 << dirs.len())
        .map(|s| {
            let top = dirs
                .iter()
                .enumerate()
                .filter(|(j, _)| s >> j & 1 == 1)
                .fold(idx, |k, (_, &i)| k + cube.stride(i));
            m.rank_at(top) - base
        })
        .collect();
    let ground = dirs.iter().map(usize::to_string).collect();
    Matroid { ground, rank }
}

/// `ρ_a(X) = rk(a + Σ_{i∈X} e_i) − rk(a)` on the available directions,
/// labelled by their direction numbers.
pub fn local_matroid(m: &Matricube, a: &Point) -> Result<Matroid> {
    let idx = m.cube().index(a)?;
    Ok(local_at(m, idx))
}

/// One matroid per point of a hypercuboid, on the directions available there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherentComplex {
    cube: Hypercuboid,
    matroids: Vec<Matroid>,
}

impl CoherentComplex {
    /// `matroids` in canonical point order. Each ground set must list the
    /// available directions in increasing order.
    pub fn new(width: Width, matroids: Vec<Matroid>) -> Result<Self> {
        let cube = Hypercuboid::new(width)?;
        if matroids.len() != cube.len() {
            return Err(Error::Malformed(format!(
                "{} matroids for {} points",
                matroids.len(),
                cube.len()
            )));
        }
        for (idx, mat) in matroids.iter().enumerate() {
            let want: Vec<String> = available(&cube, idx).iter().map(usize::to_string).collect();
            if mat.ground != want {
                return Err(Error::Malformed(format!(
                    "matroid at {} has ground {:?}, expected {:?}",
                    cube.point(idx),
                    mat.ground,
                    want
                )));
            }
        }
        Ok(CoherentComplex { cube, matroids })
    }

    pub fn width(&self) -> &Width {
        self.cube.width()
    }

    pub fn cube(&self) -> &Hypercuboid {
        &self.cube
    }

    pub fn matroids(&self) -> &[Matroid] {
        &self.matroids
    }

    pub fn get(&self, a: &Point) -> Result<&Matroid> {
        Ok(&self.matroids[self.cube.index(a)?])
    }

    /// `ρ_a({i})`, zero when `i` is not available at `a`.
    fn step(&self, idx: usize, i: usize) -> i64 {
        let dirs = available(&self.cube, idx);
        match dirs.iter().position(|&k| k == i) {
            Some(j) => self.matroids[idx].rank(1 << j),
            None => 0,
        }
    }
}

pub fn coherent_complex_of(m: &Matricube) -> CoherentComplex {
    let matroids = par::map(Exec::default(), 0..m.cube().len(), |idx| local_at(m, idx));
    CoherentComplex {
        cube: m.cube().clone(),
        matroids,
    }
}

/// Matroid axioms at every point, then CC1 on the axes, then CC2: for each
/// `i ∈ I_a`, `M_{a+e_i}` restricted to `I_a∖{i}` equals `M_a / i`.
pub fn validate_coherent(cc: &CoherentComplex, scan: Scan) -> Report {
    let cube = &cc.cube;
    let mut report = Report::ok();
    for (idx, mat) in cc.matroids.iter().enumerate() {
        if !validate_matroid(mat, Scan::First).is_ok() {
            report.push(Violation::new(
                Axiom::Matroid,
                Witness::Point(cube.point(idx)),
            ));
            if report.done(scan) {
                return report;
            }
        }
    }
    for i in 0..cube.dim() {
        for t in 0..cube.width().get(i) {
            let idx = t * cube.stride(i);
            if cc.step(idx, i) > 1 {
                report.push(Violation::new(
                    Axiom::CC1,
                    Witness::Step(cube.point(idx), i),
                ));
                if report.done(scan) {
                    return report;
                }
            }
        }
    }
    for idx in 0..cube.len() {
        let dirs = available(cube, idx);
        let here = &cc.matroids[idx];
        for &i in &dirs {
            let up = cube.up(idx, i).expect("available");
            let up_dirs = available(cube, up);
            let there = &cc.matroids[up];
            let rho_i = here.rank(to_local(&dirs, 1 << i));
            let rest: Vec<usize> = dirs.iter().copied().filter(|&k| k != i).collect();
            let ok = (0..1u64 << rest.len()).all(|x| {
                let dmask = rest
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| x >> j & 1 == 1)
                    .fold(0u64, |acc, (_, &k)| acc | 1 << k);
                let contracted = here.rank(to_local(&dirs, dmask | 1 << i)) - rho_i;
                there.rank(to_local(&up_dirs, dmask)) == contracted
            });
            if !ok {
                report.push(Violation::new(
                    Axiom::CC2,
                    Witness::Step(cube.point(idx), i),
                ));
                if report.done(scan) {
                    return report;
                }
            }
        }
    }
    report
}

/// Sum of `ρ_b({i})` along the increasing path taking the given steps from
/// the origin.
pub fn path_rank(cc: &CoherentComplex, path: &[usize]) -> Result<i64> {
    let cube = &cc.cube;
    let mut idx = 0;
    let mut total = 0;
    for &i in path {
        if i >= cube.dim() {
            return Err(Error::BadDirection {
                dir: i,
                dim: cube.dim(),
            });
        }
        let up = cube.up(idx, i).ok_or_else(|| Error::OutOfRange {
            point: format!("{} + e_{i}", cube.point(idx)),
            width: cube.width().to_string(),
        })?;
        total += cc.step(idx, i);
        idx = up;
    }
    Ok(total)
}

/// Ranks summed along the lexicographic staircase (each point is reached
/// from below in its last nonzero direction). Every other unit step is then
/// checked against the same sums, which makes the result independent of
/// the increasing path; a disagreement is reported as `PathDependent`.
pub fn matricube_from_coherent(cc: &CoherentComplex) -> Result<Matricube> {
    let cube = &cc.cube;
    let mut rk = vec![0i64; cube.len()];
    for idx in 1..cube.len() {
        let i = (0..cube.dim())
            .rev()
            .find(|&i| cube.coord(idx, i) > 0)
            .expect("nonzero");
        let down = cube.down(idx, i).expect("positive coordinate");
        rk[idx] = rk[down] + cc.step(down, i);
    }
    for idx in 0..cube.len() {
        for i in 0..cube.dim() {
            if let Some(up) = cube.up(idx, i) {
                let via = rk[idx] + cc.step(idx, i);
                if via != rk[up] {
                    return Err(Error::PathDependent {
                        point: cube.point(up).to_string(),
                        first: rk[up],
                        second: via,
                    });
                }
            }
        }
    }
    Matricube::new(RankTable::new(cube.width().clone(), rk)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    width: Width,
    matroids: BTreeMap<usize, Matroid>,
}

impl Serialize for CoherentComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson {
            width: self.width().clone(),
            matroids: self.matroids.iter().cloned().enumerate().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoherentComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ComplexJson::deserialize(d)?;
        let n = raw.matroids.len();
        if raw.matroids.keys().copied().ne(0..n) {
            return Err(serde::de::Error::custom("matroid keys must be 0..N-1"));
        }
        CoherentComplex::new(raw.width, raw.matroids.into_values().collect())
            .map_err(serde::de::Error::custom)
    }
}
