//! Exhaustive generation of every matricube on a small hypercuboid.
//!
//! [`enumerate_matricubes`] assigns values in canonical point order. Each
//! value lies between the largest lower neighbour and the smallest lower
//! neighbour plus one, and every diamond closing at the new point is checked
//! as soon as its four corners are known. Values are tried in increasing
//! order, so the output comes out sorted lexicographically on the flattened
//! table. [`bruteforce_matricubes`] is an independent oracle that filters
//! every table bounded by `ℓ1` through the pairwise axiom checks.

use crate::error::Result;
use crate::lattice::{Hypercuboid, Width};
use crate::matricube::{Limits, Matricube, RankTable};
use crate::par::{self, Exec};
use crate::submodular::check_submodular_bruteforce;

/// Filters applied during enumeration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumOptions {
    pub simple: bool,
    pub rank: Option<i64>,
}

struct Plan {
    downs: Vec<Vec<usize>>,
    /// `(x − e_i, x − e_j, x − e_i − e_j)` for every diamond with top `x`.
    diamonds: Vec<Vec<(usize, usize, usize)>>,
    /// `Some(t)` for the axis point `t·e_i`, `t > 0`.
    axis: Vec<Option<i64>>,
    /// `ℓ1(r̄) − ℓ1(x)`: how far the rank can still climb.
    slack: Vec<i64>,
    opts: EnumOptions,
}

impl Plan {
    fn new(cube: &Hypercuboid, opts: EnumOptions) -> Self {
        let d = cube.dim();
        let total = cube.width().l1() as i64;
        let mut plan = Plan {
            downs: Vec::new(),
            diamonds: Vec::new(),
            axis: Vec::new(),
            slack: Vec::new(),
            opts,
        };
        for idx in 0..cube.len() {
            let downs: Vec<usize> = (0..d).filter_map(|i| cube.down(idx, i)).collect();
            let mut diamonds = Vec::new();
            for i in 0..d {
                for j in i + 1..d {
                    if let (Some(a), Some(b)) = (cube.down(idx, i), cube.down(idx, j)) {
                        diamonds.push((a, b, cube.down(a, j).expect("both positive")));
                    }
                }
            }
            let nonzero = (0..d).filter(|&i| cube.coord(idx, i) > 0).count();
            plan.axis
                .push((nonzero == 1).then(|| cube.l1_of(idx) as i64));
            plan.downs.push(downs);
            plan.diamonds.push(diamonds);
            plan.slack.push(total - cube.l1_of(idx) as i64);
        }
        plan
    }

    /// Admissible values at `idx` given the assigned prefix.
    fn range(&self, vals: &[i64], idx: usize) -> std::ops::RangeInclusive<i64> {
        if idx == 0 {
            return 0..=0;
        }
        let downs = &self.downs[idx];
        let mut lo = downs.iter().map(|&k| vals[k]).max().expect("nonzero point");
        let mut hi = downs.iter().map(|&k| vals[k]).min().expect("nonzero point") + 1;
        if self.opts.simple {
            if let Some(t) = self.axis[idx] {
                lo = lo.max(t);
                hi = hi.min(t);
            }
        }
        if let Some(r) = self.opts.rank {
            hi = hi.min(r);
            lo = lo.max(r - self.slack[idx]);
        }
        lo..=hi
    }

    fn diamonds_hold(&self, vals: &[i64], idx: usize, v: i64) -> bool {
        self.diamonds[idx]
            .iter()
            .all(|&(a, b, ab)| v + vals[ab] <= vals[a] + vals[b])
    }

    fn extend(&self, vals: &mut Vec<i64>, stop: usize, out: &mut Vec<Vec<i64>>) {
        let idx = vals.len();
        if idx == stop {
            out.push(vals.clone());
            return;
        }
        for v in self.range(vals, idx) {
            if self.diamonds_hold(vals, idx, v) {
                vals.push(v);
                self.extend(vals, stop, out);
                vals.pop();
            }
        }
    }
}

/// Every matricube on `width` passing `opts`, sorted lexicographically on
/// the rank table.
pub fn enumerate_matricubes(width: &Width, opts: EnumOptions) -> Result<Vec<Matricube>> {
    enumerate_matricubes_with(width, opts, Exec::default(), &Limits::default())
}

/// Number of points assigned sequentially before the search is split.
const SPLIT_DEPTH: usize = 6;

pub fn enumerate_matricubes_with(
    width: &Width,
    opts: EnumOptions,
    exec: Exec,
    limits: &Limits,
) -> Result<Vec<Matricube>> {
    let cube = Hypercuboid::new(width.clone())?;
    Limits::guard(
        "enumerated hypercuboid",
        cube.len(),
        limits.enumerate_points,
    )?;
    if opts.simple && width.entries().contains(&0) {
        return Ok(Vec::new());
    }
    let plan = Plan::new(&cube, opts);
    let mut prefixes = Vec::new();
    plan.extend(&mut Vec::new(), SPLIT_DEPTH.min(cube.len()), &mut prefixes);
    let tables = par::map_slice(exec, &prefixes, |prefix| {
        let mut out = Vec::new();
        plan.extend(&mut prefix.clone(), cube.len(), &mut out);
        out
    });
    let out: Vec<Matricube> = tables
        .into_iter()
        .flatten()
        .map(|vals| {
            let table = RankTable::new(width.clone(), vals).expect("sized to the width");
            Matricube::trusted(table)
        })
        .collect();
    debug_assert!(out.windows(2).all(|w| w[0].values() < w[1].values()));
    Ok(out)
}

/// Every table with `0 ≤ f(x) ≤ ℓ1(x)` that satisfies R1, R2 on all
/// comparable pairs and submodularity on all pairs. No pruning; tiny widths
/// only.
pub fn bruteforce_matricubes(width: &Width) -> Result<Vec<Matricube>> {
    bruteforce_matricubes_with(width, &Limits::default())
}

pub fn bruteforce_matricubes_with(width: &Width, limits: &Limits) -> Result<Vec<Matricube>> {
    let cube = Hypercuboid::new(width.clone())?;
    let n = cube.len();
    Limits::guard("brute-force hypercuboid", n, limits.bruteforce_points)?;
    let bound: Vec<i64> = (0..n).map(|k| cube.l1_of(k) as i64).collect();
    let axis: Vec<Option<usize>> = (0..n)
        .map(|k| {
            let nz: Vec<usize> = (0..cube.dim()).filter(|&i| cube.coord(k, i) > 0).collect();
            (nz.len() == 1).then(|| cube.down(k, nz[0]).expect("positive"))
        })
        .collect();
    let is_matricube = |vals: &[i64]| {
        let r1 = vals[0] == 0
            && axis
                .iter()
                .enumerate()
                .all(|(k, down)| down.is_none_or(|b| matches!(vals[k] - vals[b], 0 | 1)));
        let r2 = || (0..n).all(|a| (0..n).all(|b| !cube.leq_index(a, b) || vals[a] <= vals[b]));
        r1 && r2() && {
            let t = RankTable::new(width.clone(), vals.to_vec()).expect("sized");
            check_submodular_bruteforce(&t).expect("within guard")
        }
    };
    let mut out = Vec::new();
    let mut vals = vec![0i64; n];
    loop {
        if is_matricube(&vals) {
            let t = RankTable::new(width.clone(), vals.clone()).expect("sized");
            out.push(Matricube::trusted(t));
        }
        // odometer, last point fastest, so tables come out in lexicographic order
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if vals[k] < bound[k] {
                vals[k] += 1;
                break;
            }
            vals[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matricube::{is_simple, uniform, validate_rank_axioms};
    use crate::report::Scan;

    fn tables(ms: &[Matricube]) -> Vec<Vec<i64>> {
        ms.iter().map(|m| m.values().to_vec()).collect()
    }

    #[test]
    fn segment() {
        let ms = enumerate_matricubes(&Width::new([1]), EnumOptions::default()).unwrap();
        assert_eq!(tables(&ms), vec![vec![0, 0], vec![0, 1]]);
        let ms =
            enumerate_matricubes(&Width::new(Vec::<usize>::new()), EnumOptions::default()).unwrap();
        assert_eq!(tables(&ms), vec![vec![0]]);
    }

    #[test]
    fn agrees_with_bruteforce() {
        for w in [vec![1, 1], vec![2, 1], vec![1, 1, 1], vec![3], vec![2, 0]] {
            let w = Width::new(w);
            let fast = enumerate_matricubes(&w, EnumOptions::default()).unwrap();
            let slow = bruteforce_matricubes(&w).unwrap();
            assert_eq!(tables(&fast), tables(&slow), "width {w}");
            assert!(fast
                .iter()
                .all(|m| validate_rank_axioms(m.table(), Scan::First).is_ok()));
        }
    }

    #[test]
    fn strategies_agree() {
        let w = Width::new([2, 2]);
        let seq = enumerate_matricubes_with(
            &w,
            EnumOptions::default(),
            Exec::Sequential,
            &Limits::default(),
        )
        .unwrap();
        let par = enumerate_matricubes_with(
            &w,
            EnumOptions::default(),
            Exec::Parallel,
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn options_filter() {
        let w = Width::new([2, 2]);
        let all = enumerate_matricubes(&w, EnumOptions::default()).unwrap();
        for rank in 0..=4 {
            let simple = EnumOptions {
                simple: true,
                rank: Some(rank),
            };
            let want: Vec<&Matricube> = all
                .iter()
                .filter(|m| is_simple(m) && m.rank_of() == rank)
                .collect();
            let got = enumerate_matricubes(&w, simple).unwrap();
            assert_eq!(got.iter().collect::<Vec<_>>(), want);
        }
        let u = enumerate_matricubes(
            &w,
            EnumOptions {
                simple: false,
                rank: Some(4),
            },
        )
        .unwrap();
        assert_eq!(u, vec![uniform(w, 4).unwrap()]);
        let none = enumerate_matricubes(
            &Width::new([1, 0]),
            EnumOptions {
                simple: true,
                rank: None,
            },
        );
        assert!(none.unwrap().is_empty());
    }

    #[test]
    fn guards() {
        assert!(enumerate_matricubes(&Width::new([4, 4]), EnumOptions::default()).is_err());
        assert!(bruteforce_matricubes(&Width::new([3, 3])).is_err());
    }
}
