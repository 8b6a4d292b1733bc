//! Duality, minors, direct sums, loops and coloops, the Tutte polynomial and
//! the basis-candidate families.

mod bases;
mod tutte;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::Width;
use crate::matricube::{Matricube, RankTable};

pub use bases::{basis_candidates, BasisCandidateKind};
pub use tutte::{tutte, TwoVarPolynomial};

/// `rk*(x̄) = ℓ1(x̄) + rk(x̄^c) − r(M)`.
pub fn dual(m: &Matricube) -> Matricube {
    let cube = m.cube();
    let r = m.rank_of();
    let values = (0..cube.len())
        .map(|k| cube.l1_of(k) as i64 + m.rank_at(cube.complement_index(k)) - r)
        .collect();
    Matricube::trusted(RankTable::new(m.width().clone(), values).expect("same width"))
}

fn check_direction(m: &Matricube, i: usize) -> Result<()> {
    let d = m.width().dim();
    if i >= d {
        return Err(Error::BadDirection { dir: i, dim: d });
    }
    if m.width().get(i) == 0 {
        return Err(Error::EmptyDirection { dir: i });
    }
    Ok(())
}

fn shrink(width: &Width, i: usize) -> Width {
    let mut w = width.clone();
    w.0[i] -= 1;
    w
}

/// `M∖i`: restriction to `x_i < r_i`.
pub fn delete(m: &Matricube, i: usize) -> Result<Matricube> {
    check_direction(m, i)?;
    let width = shrink(m.width(), i);
    let cube = m.cube();
    let t = RankTable::from_fn(width, |x| m.rank_at(cube.index_unchecked(x)))?;
    Ok(Matricube::trusted(t))
}

/// `M/i`: `rk'(x̄) = rk(x̄ + ē_i) − rk(ē_i)`.
pub fn contract(m: &Matricube, i: usize) -> Result<Matricube> {
    check_direction(m, i)?;
    let width = shrink(m.width(), i);
    let cube = m.cube();
    let step = cube.stride(i);
    let base = m.rank_at(step);
    let t = RankTable::from_fn(width, |x| m.rank_at(cube.index_unchecked(x) + step) - base)?;
    Ok(Matricube::trusted(t))
}

/// One step of a minor: deletion or contraction in a direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorOp {
    Delete(usize),
    Contract(usize),
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorOp::Delete(i) => write!(f, "d{i}"),
            MinorOp::Contract(i) => write!(f, "c{i}"),
        }
    }
}

impl FromStr for MinorOp {
    type Err = Error;

    /// `d2` deletes and `c0` contracts.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Malformed(format!("minor step {s:?}: expected d<dir> or c<dir>"));
        let (head, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(k, _)| k));
        let dir: usize = rest.parse().map_err(|_| bad())?;
        match head {
            "d" => Ok(MinorOp::Delete(dir)),
            "c" => Ok(MinorOp::Contract(dir)),
            _ => Err(bad()),
        }
    }
}

/// Parses a comma-separated list such as `d0,c1`.
pub fn parse_minor_ops(s: &str) -> Result<Vec<MinorOp>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}

/// Applies the steps in order. Directions always index the width as it
/// stands before that step; neither operation changes the dimension.
pub fn minor(m: &Matricube, ops: &[MinorOp]) -> Result<Matricube> {
    ops.iter().try_fold(m.clone(), |acc, op| match *op {
        MinorOp::Delete(i) => delete(&acc, i),
        MinorOp::Contract(i) => contract(&acc, i),
    })
}

/// Rank is additive on the product hypercuboid.
pub fn direct_sum(m1: &Matricube, m2: &Matricube) -> Matricube {
    let width = Width::new([m1.width().entries(), m2.width().entries()].concat());
    let n2 = m2.values().len();
    let values = m1
        .values()
        .iter()
        .flat_map(|&a| m2.values().iter().map(move |&b| a + b))
        .collect::<Vec<_>>();
    debug_assert_eq!(values.len(), m1.values().len() * n2);
    Matricube::trusted(RankTable::new(width, values).expect("product size"))
}

/// `r_i > 0` and `rk(ē_i) = 0`.
pub fn is_loop(m: &Matricube, i: usize) -> Result<bool> {
    check_direction(m, i)?;
    Ok(m.rank_at(m.cube().stride(i)) == 0)
}

/// A loop of the dual; equivalently, deleting `i` drops the rank.
pub fn is_coloop(m: &Matricube, i: usize) -> Result<bool> {
    let via_dual = is_loop(&dual(m), i)?;
    let via_deletion = delete(m, i)?.rank_of() == m.rank_of() - 1;
    debug_assert_eq!(via_dual, via_deletion, "coloop characterisations disagree");
    Ok(via_dual)
}
