mod common;

use common::{arb_matricube, m_ex1, monotone_unit_step_tables};
use matricube::{
    check_diamond, check_dominated_by_uniform, check_multidirectional, check_submodular_bruteforce,
    is_simple, uniform, validate_rank_axioms, RankTable, Scan, Width,
};
use proptest::prelude::*;

#[test]
fn diamond_agrees_with_submodularity_exhaustively() {
    for w in [vec![1, 1], vec![2, 1], vec![2, 2], vec![1, 1, 1]] {
        let tables = monotone_unit_step_tables(&Width::new(w));
        let mut failures = 0;
        for t in &tables {
            let diamond = check_diamond(t).unwrap();
            assert_eq!(diamond, check_submodular_bruteforce(t).unwrap(), "{t:?}");
            assert_eq!(diamond, check_multidirectional(t, 1, 1).unwrap(), "{t:?}");
            failures += usize::from(!diamond);
        }
        assert!(
            failures > 0,
            "the family must contain non-submodular tables"
        );
    }
}

#[test]
fn uniform_tables() {
    let w = Width::new([4, 3]);
    let u3 = uniform(w.clone(), 3).unwrap();
    let want = RankTable::from_rows(&[
        &[3, 3, 3, 3, 3],
        &[2, 3, 3, 3, 3],
        &[1, 2, 3, 3, 3],
        &[0, 1, 2, 3, 3],
    ])
    .unwrap();
    assert_eq!(u3.table(), &want);
    let u5 = uniform(w.clone(), 5).unwrap();
    assert_eq!(u5.rank(&matricube::Point::new([2, 2])).unwrap(), 4);
    for width in [vec![2, 2], vec![4, 3], vec![1, 0, 2]] {
        let width = Width::new(width);
        let max = width.entries().iter().copied().max().unwrap() as i64;
        for r in 0..=width.l1() as i64 {
            let u = uniform(width.clone(), r).unwrap();
            assert!(validate_rank_axioms(u.table(), Scan::All).is_ok());
            assert_eq!(is_simple(&u), r >= max && !width.entries().contains(&0));
        }
        assert!(uniform(width.clone(), width.l1() as i64 + 1).is_err());
        assert!(uniform(width, -1).is_err());
    }
}

#[test]
fn simple_examples_from_the_definition() {
    assert!(is_simple(&m_ex1()));
    let not_simple = common::from_rows(&[
        &[3, 3, 3, 3, 4],
        &[2, 2, 2, 2, 3],
        &[1, 2, 2, 2, 3],
        &[0, 1, 2, 2, 3],
    ]);
    assert!(validate_rank_axioms(not_simple.table(), Scan::All).is_ok());
    assert!(!is_simple(&not_simple));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn valid_tables_pass_every_submodularity_check(m in arb_matricube()) {
        let t = m.table();
        prop_assert!(check_diamond(t).unwrap());
        prop_assert!(check_submodular_bruteforce(t).unwrap());
        for (n, k) in [(1, 1), (2, 2), (3, 2)] {
            prop_assert!(check_multidirectional(t, n, k).unwrap());
        }
        prop_assert!(check_dominated_by_uniform(&m));
    }

    #[test]
    fn unit_increments(m in arb_matricube()) {
        let cube = m.cube();
        for k in 0..cube.len() {
            for i in 0..cube.dim() {
                if let Some(up) = cube.up(k, i) {
                    let step = m.rank_at(up) - m.rank_at(k);
                    prop_assert!(step == 0 || step == 1);
                }
            }
        }
    }

    #[test]
    fn json_round_trip(m in arb_matricube()) {
        let s = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<matricube::Matricube>(&s).unwrap(), m);
    }
}
