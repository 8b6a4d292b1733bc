mod common;

use common::SWEEP;
use matricube::enumerate::enumerate_matricubes_with;
use matricube::{
    bruteforce_matricubes, enumerate_matricubes, is_simple, validate_rank_axioms, EnumOptions,
    Exec, Limits, Scan, Width,
};

#[test]
fn pruned_search_equals_the_brute_force_filter() {
    for w in SWEEP {
        let w = Width::new(w);
        let fast = enumerate_matricubes(&w, EnumOptions::default()).unwrap();
        let mut slow = bruteforce_matricubes(&w).unwrap();
        slow.sort_by(|a, b| a.values().cmp(b.values()));
        assert_eq!(fast, slow, "{w}");
        assert!(fast.windows(2).all(|p| p[0].values() < p[1].values()));
        for m in &fast {
            assert!(validate_rank_axioms(m.table(), Scan::All).is_ok());
        }
    }
}

#[test]
fn filters_match_post_filtering() {
    for w in [&[2, 2][..], &[1, 1, 1], &[3, 1], &[2, 1, 1]] {
        let w = Width::new(w);
        let everything = enumerate_matricubes(&w, EnumOptions::default()).unwrap();
        let simple = enumerate_matricubes(
            &w,
            EnumOptions {
                simple: true,
                rank: None,
            },
        )
        .unwrap();
        let want: Vec<_> = everything
            .iter()
            .filter(|m| is_simple(m))
            .cloned()
            .collect();
        assert_eq!(simple, want);
        for r in 0..=w.l1() as i64 + 1 {
            let got = enumerate_matricubes(
                &w,
                EnumOptions {
                    simple: false,
                    rank: Some(r),
                },
            )
            .unwrap();
            let want: Vec<_> = everything
                .iter()
                .filter(|m| m.rank_of() == r)
                .cloned()
                .collect();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    for w in [&[2, 2][..], &[3, 2], &[1, 1, 1, 1]] {
        let w = Width::new(w);
        let lim = Limits::default();
        let seq =
            enumerate_matricubes_with(&w, EnumOptions::default(), Exec::Sequential, &lim).unwrap();
        let par =
            enumerate_matricubes_with(&w, EnumOptions::default(), Exec::Parallel, &lim).unwrap();
        assert_eq!(seq, par);
    }
}

#[test]
fn single_direction() {
    let ms = enumerate_matricubes(&Width::new([1]), EnumOptions::default()).unwrap();
    let tables: Vec<&[i64]> = ms.iter().map(|m| m.values()).collect();
    assert_eq!(tables, [&[0, 0][..], &[0, 1]]);
}

#[test]
fn guards() {
    assert!(enumerate_matricubes(&Width::new([4, 4]), EnumOptions::default()).is_err());
    assert!(bruteforce_matricubes(&Width::new([3, 3])).is_err());
}
