mod common;

use common::{
    all, arb_matricube, m_ex1, m_ex2, m_ex2_twin, same_maximal_pair, uneven_maximal, SWEEP,
};
use matricube::{
    basis_candidates, contract, delete, direct_sum, dual, is_coloop, is_loop, minor, tutte,
    uniform, validate_rank_axioms, BasisCandidateKind, Matricube, Point, RankTable, Scan,
    TwoVarPolynomial, Width,
};
use proptest::prelude::*;

fn valid(m: &Matricube) -> bool {
    validate_rank_axioms(m.table(), Scan::All).is_ok()
}

fn check_duality(m: &Matricube) {
    let d = dual(m);
    assert!(valid(&d), "{m:?}");
    assert_eq!(&dual(&d), m);
    let l1 = m.width().l1() as i64;
    assert_eq!(d.rank_of(), l1 - m.rank_of());
    let cube = m.cube();
    for k in 0..cube.len() {
        let c = cube.complement_index(k);
        assert!(
            m.rank_at(k) + d.rank_at(c) <= l1,
            "{m:?} at {}",
            cube.point(k)
        );
    }
    assert_eq!(tutte(&d), tutte(m).swap());
}

#[test]
fn duality_on_every_enumerated_matricube() {
    for w in SWEEP {
        for m in all(w) {
            check_duality(&m);
        }
    }
}

#[test]
fn minors_stay_valid() {
    for w in SWEEP {
        for m in all(w) {
            for i in 0..m.width().dim() {
                assert!(valid(&delete(&m, i).unwrap()));
                assert!(valid(&contract(&m, i).unwrap()));
                let via_dual = is_loop(&dual(&m), i).unwrap();
                let via_deletion = delete(&m, i).unwrap().rank_of() == m.rank_of() - 1;
                assert_eq!(is_coloop(&m, i).unwrap(), via_dual);
                assert_eq!(via_dual, via_deletion);
            }
        }
    }
}

#[test]
fn minor_sequences_reindex_against_the_current_width() {
    let m = m_ex1();
    let ops = matricube::transforms::parse_minor_ops("d0,c1,d0").unwrap();
    let want = delete(&contract(&delete(&m, 0).unwrap(), 1).unwrap(), 0).unwrap();
    assert_eq!(minor(&m, &ops).unwrap(), want);
    assert_eq!(want.width(), &Width::new([2, 2]));
}

#[test]
fn sums_and_tutte_products() {
    let pool = all(&[1, 1]);
    for a in &pool {
        for b in &pool {
            let s = direct_sum(a, b);
            assert!(valid(&s));
            assert_eq!(tutte(&s), tutte(a).mul(&tutte(b)));
        }
    }
    let w22 = all(&[2, 2]);
    for a in w22.iter().step_by(7) {
        for b in &pool {
            assert!(valid(&direct_sum(a, b)));
        }
    }
}

#[test]
fn tutte_of_the_free_square() {
    let u = uniform(Width::new([1, 1]), 2).unwrap();
    assert_eq!(tutte(&u), TwoVarPolynomial::monomial(2, 0, 1));
    assert_eq!(tutte(&dual(&u)), TwoVarPolynomial::monomial(0, 2, 1));
}

#[test]
fn tutte_counts_points_at_two_two() {
    // T(2,2) = Σ 1 over the hypercuboid
    for w in SWEEP {
        for m in all(w) {
            let two = 2.into();
            assert_eq!(tutte(&m).eval(&two, &two), m.cube().len().into());
        }
    }
}

#[test]
fn basis_candidate_examples() {
    use BasisCandidateKind::*;
    let pts = |v: &[[usize; 2]]| {
        v.iter()
            .map(|p| Point::new(*p))
            .collect::<std::collections::BTreeSet<_>>()
    };
    for m in same_maximal_pair() {
        assert_eq!(basis_candidates(&m, A).points(), &pts(&[[2, 2]]));
    }
    let m = uneven_maximal();
    assert_eq!(basis_candidates(&m, A).points(), &pts(&[[0, 2], [2, 1]]));
    assert_eq!(
        basis_candidates(&m_ex2(), C).points(),
        &pts(&[[5, 0], [2, 3], [5, 3], [0, 4]])
    );
    for m in [m_ex2(), m_ex2_twin()] {
        assert!(basis_candidates(&m, F).is_empty());
    }
}

#[test]
fn kinds_c_and_d_agree() {
    for w in SWEEP {
        for m in all(w) {
            assert_eq!(
                basis_candidates(&m, BasisCandidateKind::C),
                basis_candidates(&m, BasisCandidateKind::D)
            );
        }
    }
}

#[test]
fn first_example_tables() {
    let m = m_ex1();
    let rows = |r: &[&[i64]]| RankTable::from_rows(r).unwrap();
    assert_eq!(
        dual(&m).table(),
        &rows(&[
            &[2, 2, 2, 2, 2],
            &[1, 1, 1, 2, 2],
            &[0, 0, 0, 1, 2],
            &[0, 0, 0, 1, 2]
        ])
    );
    assert_eq!(
        delete(&m, 1).unwrap().table(),
        &rows(&[&[2, 2, 2, 3, 4], &[1, 2, 2, 3, 4], &[0, 1, 2, 3, 4]])
    );
    assert_eq!(
        contract(&m, 1).unwrap().table(),
        &rows(&[&[2, 2, 2, 3, 4], &[1, 1, 1, 2, 3], &[0, 1, 1, 2, 3]])
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn duality_properties(m in arb_matricube()) {
        check_duality(&m);
    }

    #[test]
    fn sum_rank_is_additive(a in arb_matricube(), b in arb_matricube()) {
        prop_assume!(a.cube().len() * b.cube().len() <= 4096);
        let s = direct_sum(&a, &b);
        prop_assert!(valid(&s));
        prop_assert_eq!(s.rank_of(), a.rank_of() + b.rank_of());
        prop_assert_eq!(tutte(&s), tutte(&a).mul(&tutte(&b)));
    }
}
