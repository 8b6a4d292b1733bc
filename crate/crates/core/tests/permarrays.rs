mod common;

use matricube::permarray::redundant_positions;
use matricube::{
    enumerate_matricubes, flats_of, is_permutation_array, matricube_from_permarray,
    permarray_from_matricube, rank_along, uniform, DotArray, EnumOptions, Error, Matricube, Point,
    Width,
};

/// Simple matricubes of rank `r` or `r + 1` on `[r]^d`.
fn eligible(r: usize, d: usize) -> Vec<Matricube> {
    let w = Width::cube(r, d);
    [r, r + 1]
        .into_iter()
        .flat_map(|k| {
            let opts = EnumOptions {
                simple: true,
                rank: Some(k as i64),
            };
            enumerate_matricubes(&w, opts).unwrap()
        })
        .collect()
}

const SHAPES: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 2)];

#[test]
fn round_trip_through_permutation_arrays() {
    for (r, d) in SHAPES {
        let ms = eligible(r, d);
        assert!(!ms.is_empty());
        for m in ms {
            let p = permarray_from_matricube(&m).unwrap();
            assert!(is_permutation_array(&p), "{m:?} -> {p:?}");
            assert_eq!(matricube_from_permarray(&p).unwrap(), m);
            for x in m.cube().points() {
                for j in 0..d {
                    let want = (r as i64 + 1 - m.rank(&x).unwrap()) as usize;
                    assert_eq!(rank_along(&p, &x, j).unwrap(), want);
                }
            }
        }
    }
}

#[test]
fn flats_are_dots_and_redundant_positions() {
    for (r, d) in SHAPES {
        for m in eligible(r, d) {
            let p = permarray_from_matricube(&m).unwrap();
            let mut want = p.dots().clone();
            want.extend(redundant_positions(&p));
            want.insert(m.width().top());
            assert_eq!(flats_of(&m).points(), &want, "{m:?}");
        }
    }
}

#[test]
fn adding_a_redundant_dot_keeps_every_subarray_rank() {
    for (r, d) in SHAPES {
        for m in eligible(r, d) {
            let p = permarray_from_matricube(&m).unwrap();
            for extra in redundant_positions(&p)
                .into_iter()
                .filter(|x| !p.is_dotted(x))
            {
                let q = p.with([extra.clone()]).unwrap();
                for x in m.cube().points() {
                    for j in 0..d {
                        assert_eq!(
                            rank_along(&q, &x, j).unwrap(),
                            rank_along(&p, &x, j).unwrap(),
                            "{p:?} + {extra}"
                        );
                    }
                }
                assert!(!is_permutation_array(&q));
            }
        }
    }
}

#[test]
fn small_arrays() {
    let dots = |v: &[[usize; 2]]| v.iter().map(|p| Point::new(*p)).collect::<Vec<_>>();
    let p = DotArray::new(1, 2, dots(&[[1, 0], [0, 1]])).unwrap();
    assert_eq!(
        matricube_from_permarray(&p).unwrap(),
        uniform(Width::new([1, 1]), 2).unwrap()
    );
    let rank_one = Matricube::from_values(Width::new([1, 1]), vec![0, 1, 1, 1]).unwrap();
    let q = permarray_from_matricube(&rank_one).unwrap();
    assert_eq!(
        q.dots().iter().cloned().collect::<Vec<_>>(),
        dots(&[[0, 0], [1, 1]])
    );
    assert_eq!(matricube_from_permarray(&q).unwrap(), rank_one);
}

#[test]
fn preconditions_are_named() {
    let not_simple = Matricube::from_values(Width::new([1, 1]), vec![0, 0, 1, 1]).unwrap();
    assert!(matches!(
        permarray_from_matricube(&not_simple),
        Err(Error::NotSimple)
    ));
    assert_eq!(
        permarray_from_matricube(&not_simple)
            .unwrap_err()
            .to_string(),
        "not simple"
    );
    let rect = uniform(Width::new([2, 1]), 2).unwrap();
    assert!(matches!(
        permarray_from_matricube(&rect),
        Err(Error::NotHypercube(_))
    ));
    let high = uniform(Width::new([2, 2]), 4).unwrap();
    assert!(matches!(
        permarray_from_matricube(&high),
        Err(Error::WrongRank { rank: 4, r: 2 })
    ));
}
