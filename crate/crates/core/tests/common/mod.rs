#![allow(dead_code)]

use matricube::represent::{exact_rank, random_flags};
use matricube::{
    enumerate_matricubes, matricube_from_flags, EnumOptions, FieldSpec, Hypercuboid, Matricube,
    Matroid, RankTable, Width,
};
use num_rational::BigRational;
use proptest::prelude::*;

pub fn from_rows(rows: &[&[i64]]) -> Matricube {
    Matricube::new(RankTable::from_rows(rows).unwrap()).unwrap()
}

/// The running example on width (4,3).
pub fn m_ex1() -> Matricube {
    from_rows(&[
        &[3, 3, 3, 4, 5],
        &[2, 2, 2, 3, 4],
        &[1, 2, 2, 3, 4],
        &[0, 1, 2, 3, 4],
    ])
}

/// The circuits example on width (5,4); also the first of the locally
/// maximal basis examples.
pub fn m_ex2() -> Matricube {
    from_rows(&[
        &[4, 4, 4, 4, 5, 6],
        &[3, 3, 4, 4, 5, 6],
        &[2, 2, 3, 3, 4, 5],
        &[1, 1, 2, 3, 4, 5],
        &[0, 1, 2, 3, 4, 5],
    ])
}

/// Second matricube with the same locally maximal independents as [`m_ex2`].
pub fn m_ex2_twin() -> Matricube {
    from_rows(&[
        &[4, 4, 5, 5, 5, 6],
        &[3, 4, 5, 5, 5, 6],
        &[2, 3, 4, 4, 4, 5],
        &[1, 2, 3, 3, 4, 5],
        &[0, 1, 2, 3, 4, 5],
    ])
}

/// Two (2,2) matricubes whose only maximal independent is (2,2).
pub fn same_maximal_pair() -> [Matricube; 2] {
    [
        from_rows(&[&[2, 3, 4], &[1, 2, 3], &[0, 1, 2]]),
        from_rows(&[&[2, 2, 3], &[1, 1, 2], &[0, 1, 2]]),
    ]
}

/// Maximal independents (0,2) and (2,1) of ranks 2 and 3.
pub fn uneven_maximal() -> Matricube {
    from_rows(&[&[2, 2, 3], &[1, 2, 3], &[0, 1, 2]])
}

pub fn all(width: &[usize]) -> Vec<Matricube> {
    enumerate_matricubes(&Width::new(width), EnumOptions::default()).unwrap()
}

/// Widths used for exhaustive sweeps.
pub const SWEEP: [&[usize]; 4] = [&[1, 1], &[2, 1], &[1, 1, 1], &[2, 2]];

/// Every table with `f(0) = 0` whose steps to each upper neighbour are 0 or 1.
pub fn monotone_unit_step_tables(width: &Width) -> Vec<RankTable> {
    let cube = Hypercuboid::new(width.clone()).unwrap();
    let mut out = Vec::new();
    let mut vals = Vec::new();
    fn go(cube: &Hypercuboid, vals: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let idx = vals.len();
        if idx == cube.len() {
            out.push(vals.clone());
            return;
        }
        let downs: Vec<i64> = (0..cube.dim())
            .filter_map(|i| cube.down(idx, i))
            .map(|k| vals[k])
            .collect();
        let (lo, hi) = match (downs.iter().max(), downs.iter().min()) {
            (Some(&lo), Some(&hi)) => (lo, hi + 1),
            _ => (0, 0),
        };
        for v in lo..=hi {
            vals.push(v);
            go(cube, vals, out);
            vals.pop();
        }
    }
    go(&cube, &mut vals, &mut out);
    out.into_iter()
        .map(|v| RankTable::new(width.clone(), v).unwrap())
        .collect()
}

/// Every sequence of unit steps from the origin to `top`.
pub fn monotone_paths(top: &[usize]) -> Vec<Vec<usize>> {
    if top.iter().all(|&t| t == 0) {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in (0..top.len()).filter(|&i| top[i] > 0) {
        let mut below = top.to_vec();
        below[i] -= 1;
        for mut p in monotone_paths(&below) {
            p.push(i);
            out.push(p);
        }
    }
    out
}

/// Column matroid of `n` vectors over a field.
pub fn vector_matroid(cols: &[Vec<BigRational>], field: FieldSpec) -> Matroid {
    Matroid::from_fn(cols.len(), |s| {
        let rows: Vec<Vec<BigRational>> = (0..cols.len())
            .filter(|&j| s >> j & 1 == 1)
            .map(|j| cols[j].clone())
            .collect();
        exact_rank(&field, &rows).unwrap() as i64
    })
    .unwrap()
}

pub fn truncate(m: &Matroid, k: usize) -> Matroid {
    Matroid::from_fn(m.n(), |s| m.rank(s).min(k as i64)).unwrap()
}

/// Uniform matroids and seeded column matroids over GF(2) and GF(3) on at
/// most four elements.
pub fn corpus() -> Vec<Matroid> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for k in 0..=n {
            out.push(Matroid::uniform(k, n).unwrap());
        }
        for (field, seeds) in [
            (FieldSpec::prime(2).unwrap(), 0..6u64),
            (FieldSpec::prime(3).unwrap(), 6..12),
        ] {
            for seed in seeds {
                let c = random_flags(field, &Width::new([n]), 3, seed * 31 + n as u64);
                out.push(vector_matroid(&c.vectors()[0], field));
            }
        }
    }
    out
}

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rational),
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(3).unwrap()),
        Just(FieldSpec::prime(10007).unwrap()),
    ]
}

/// Representable matricubes from sparse random flags: widths up to
/// three directions of length ≤ 3, ambient dimension ≤ 5.
pub fn arb_representable() -> impl Strategy<Value = Matricube> {
    (
        field(),
        prop::collection::vec(0usize..=3, 1..=3),
        0usize..=5,
        any::<u64>(),
    )
        .prop_map(|(f, w, m, seed)| {
            matricube_from_flags(&random_flags(f, &Width::new(w), m, seed)).unwrap()
        })
}

/// Any matricube on a small width, drawn from the exhaustive list, which
/// includes non-representable ones.
pub fn arb_enumerated() -> impl Strategy<Value = Matricube> {
    let pool: Vec<Matricube> = [&[2, 2][..], &[1, 1, 1], &[3, 1], &[2, 1, 1]]
        .iter()
        .flat_map(|w| all(w))
        .collect();
    prop::sample::select(pool)
}

pub fn arb_matricube() -> impl Strategy<Value = Matricube> {
    prop_oneof![arb_representable(), arb_enumerated()]
}
