//! Submodularity checks for integer functions on hypercuboids: the local
//! diamond inequality, the brute-force pairwise definition, and
//! multidirectional submodularity `(*)^n_k`.

use crate::error::{Error, Result};
use crate::lattice::Point;
use crate::matricube::{Limits, RankTable};
use crate::par::{self, Exec};

/// Failure of `f(x̄+ē_i) − f(x̄) ≥ f(x̄+ē_i+ē_j) − f(x̄+ē_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondWitness {
    pub point: Point,
    pub i: usize,
    pub j: usize,
}

/// A pair `(x̄, ȳ)` with `f(x̄) + f(ȳ) < f(x̄∨ȳ) + f(x̄∧ȳ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub x: Point,
    pub y: Point,
}

/// A failure of `(*)^n_k`: directions, offsets along them, and the pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiWitness {
    pub dirs: Vec<usize>,
    pub offsets: Vec<usize>,
    pub x: Point,
    pub y: Point,
}

fn diamond_at(f: &RankTable, idx: usize, i: usize, j: usize) -> bool {
    let cube = f.cube();
    match (cube.up(idx, i), cube.up(idx, j)) {
        (Some(xi), Some(xj)) => {
            let xij = xi + cube.stride(j);
            let v = f.values();
            v[xi] - v[idx] >= v[xij] - v[xj]
        }
        _ => true,
    }
}

fn first_diamond_at(f: &RankTable, idx: usize) -> Option<(usize, usize)> {
    let d = f.cube().dim();
    (0..d)
        .flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| (i, j)))
        .find(|&(i, j)| !diamond_at(f, idx, i, j))
}

/// Every diamond failure in `(x̄, i, j)` order, or only the first.
pub(crate) fn diamond_failures(f: &RankTable, first_only: bool) -> Vec<(Point, usize, usize)> {
    let cube = f.cube();
    let d = cube.dim();
    let mut out = Vec::new();
    for idx in 0..cube.len() {
        for i in 0..d {
            for j in 0..d {
                if i != j && !diamond_at(f, idx, i, j) {
                    out.push((cube.point(idx), i, j));
                    if first_only {
                        return out;
                    }
                }
            }
        }
    }
    out
}

pub fn diamond_witness_with(
    f: &RankTable,
    limits: &Limits,
    exec: Exec,
) -> Result<Option<DiamondWitness>> {
    Limits::guard("diamond check", f.len(), limits.diamond_points)?;
    Ok(par::find_first(exec, 0..f.len(), |idx| {
        first_diamond_at(f, idx).map(|(i, j)| DiamondWitness {
            point: f.cube().point(idx),
            i,
            j,
        })
    }))
}

/// The smallest diamond failure `(x̄, i, j)`, if any.
pub fn diamond_witness(f: &RankTable) -> Result<Option<DiamondWitness>> {
    diamond_witness_with(f, &Limits::default(), Exec::default())
}

/// True iff the diamond inequality holds for every `x̄` and `i ≠ j`.
pub fn check_diamond(f: &RankTable) -> Result<bool> {
    Ok(diamond_witness(f)?.is_none())
}

pub fn submodular_witness_with(
    f: &RankTable,
    limits: &Limits,
    exec: Exec,
) -> Result<Option<PairWitness>> {
    Limits::guard("pairwise check", f.len(), limits.pair_points)?;
    let cube = f.cube();
    let v = f.values();
    let n = f.len();
    Ok(par::find_first(exec, 0..n, |a| {
        (a + 1..n).find_map(|b| {
            let join = cube.join_index(a, b);
            let meet = cube.meet_index(a, b);
            (v[a] + v[b] < v[join] + v[meet]).then(|| PairWitness {
                x: cube.point(a),
                y: cube.point(b),
            })
        })
    }))
}

/// Submodularity by testing every pair of points.
pub fn check_submodular_bruteforce(f: &RankTable) -> Result<bool> {
    Ok(submodular_witness_with(f, &Limits::default(), Exec::default())?.is_none())
}

/// Direction subsets of size `1..=k`, in lexicographic order.
fn direction_subsets(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(i + 1, d, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, k, &mut Vec::new(), &mut out);
    out
}

/// All offset vectors in `[0, n]^s`.
fn offset_vectors(s: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=n).map(move |t| {
                    let mut w = v.clone();
                    w.push(t);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn multidirectional_witness_with(
    f: &RankTable,
    n: usize,
    k: usize,
    limits: &Limits,
    exec: Exec,
) -> Result<Option<MultiWitness>> {
    if n == 0 || k == 0 {
        return Err(Error::Malformed("n and k must be at least 1".into()));
    }
    Limits::guard("multidirectional check", f.len(), limits.pair_points)?;
    let cube = f.cube();
    let v = f.values();
    let width = cube.width();
    let shapes: Vec<(Vec<usize>, Vec<usize>)> = direction_subsets(cube.dim(), k)
        .into_iter()
        .flat_map(|dirs| {
            offset_vectors(dirs.len(), n)
                .into_iter()
                .map(move |o| (dirs.clone(), o))
        })
        .collect();

    Ok(par::find_first(exec, 0..cube.len(), |x| {
        for (dirs, offs) in &shapes {
            if dirs
                .iter()
                .zip(offs)
                .any(|(&i, &o)| cube.coord(x, i) + o > width.get(i))
            {
                continue;
            }
            let shift: usize = dirs
                .iter()
                .zip(offs)
                .map(|(&i, &o)| o * cube.stride(i))
                .sum();
            let lhs = v[x + shift] - v[x];
            for y in x..cube.len() {
                if !cube.leq_index(x, y)
                    || dirs.iter().any(|&i| cube.coord(x, i) != cube.coord(y, i))
                {
                    continue;
                }
                if lhs < v[y + shift] - v[y] {
                    return Some(MultiWitness {
                        dirs: dirs.clone(),
                        offsets: offs.clone(),
                        x: cube.point(x),
                        y: cube.point(y),
                    });
                }
            }
        }
        None
    }))
}

/// `k`-directional submodularity at distance up to `n`.
pub fn check_multidirectional(f: &RankTable, n: usize, k: usize) -> Result<bool> {
    Ok(multidirectional_witness_with(f, n, k, &Limits::default(), Exec::default())?.is_none())
}
