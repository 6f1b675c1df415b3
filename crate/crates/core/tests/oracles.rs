mod common;

use std::collections::BTreeMap;

use hirzewahl_core::blowup_sections::{
    constraint_matrix, generic_blowup, h0_blowup, monomial_basis, pick_generic_points,
    section_basis, SectionBasis,
};
use hirzewahl_core::gaussian::{
    check_surjectivity_phi_x, gaussian_matrix, gaussian_matrix_from_basis, rank_exact, FormBlock,
    Surjectivity,
};
use hirzewahl_core::linalg::ExactMatrix;
use hirzewahl_core::positivity::{
    abm_decomposition, nakai_moishezon_delta1, reider_very_ample, BlockerKind,
};
use hirzewahl_core::riemann_roch::h0_base;
use hirzewahl_core::wahl_report::{anticanonical_h0, check_thm_a, conjecture_check};
use hirzewahl_core::{BlownSurface, DivisorClass, HirzebruchSurface, NodalCurve};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn integer_dense(m: &ExactMatrix) -> Vec<Vec<BigInt>> {
    m.to_dense()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    assert!(x.is_integer());
                    x.to_integer()
                })
                .collect()
        })
        .collect()
}

#[test]
fn gaussian_matrix_matches_polynomial_arithmetic() {
    for (n, delta, l) in [
        (0, 0, DivisorClass::pullback(2, 3, 0)),
        (1, 1, DivisorClass::uniform(2, 4, 1, 1)),
        (2, 2, DivisorClass::uniform(2, 6, 1, 2)),
        (0, 1, DivisorClass::uniform(3, 3, 2, 1)),
    ] {
        let x = generic_blowup(n, delta, 5);
        let gm = gaussian_matrix(&x, &l).unwrap();
        let oracle = common::gaussian_columns(&gm.basis);
        assert_eq!(oracle.len(), gm.matrix.cols());
        for (c, col) in oracle.iter().enumerate() {
            let ours: BTreeMap<(u8, u32, u32), BigInt> = gm
                .matrix
                .column(c)
                .into_iter()
                .map(|(r, v)| {
                    let (block, i, k) = gm.rows[r];
                    let b = u8::from(block == FormBlock::Ds);
                    ((b, i, k), v.to_integer())
                })
                .collect();
            assert_eq!(&ours, col, "column {c} of {l} on F_{n}");
        }
        let dense = integer_dense(&gm.matrix);
        assert_eq!(rank_exact(&gm.matrix), common::bareiss_rank(&dense));
    }
}

#[test]
fn smooth_and_one_nodal_ranks_agree_with_bareiss() {
    for curve in [NodalCurve::new(0, 5, 5, 0), NodalCurve::new(1, 5, 9, 1)] {
        let x = generic_blowup(curve.n, curve.delta as usize, 42);
        let gm = gaussian_matrix(&x, &curve.classes().adjoint).unwrap();
        let dense = integer_dense(&gm.matrix);
        assert_eq!(rank_exact(&gm.matrix), common::bareiss_rank(&dense));
    }
}

#[test]
fn theorem_region_points_are_surjective() {
    for curve in [
        NodalCurve::new(0, 6, 9, 0),
        NodalCurve::new(0, 6, 9, 1),
        NodalCurve::new(0, 6, 10, 1),
        NodalCurve::new(0, 7, 9, 1),
    ] {
        assert!(check_thm_a(curve.n, curve.a, curve.b, curve.delta).fires());
        let r = check_surjectivity_phi_x(&curve, 42, Some(2000)).unwrap();
        assert_eq!(r.surjective, Surjectivity::Surjective, "{r:?}");
    }
}

fn recombine(basis: &SectionBasis, ops: &[(usize, usize, i64)]) -> SectionBasis {
    let d = basis.len();
    let mut dense: Vec<BTreeMap<usize, BigInt>> = basis
        .sections
        .iter()
        .map(|s| s.iter().cloned().collect())
        .collect();
    for &(i, j, k) in ops {
        let (i, j) = (i % d, j % d);
        if i == j {
            continue;
        }
        let src = dense[j].clone();
        for (c, v) in src {
            *dense[i].entry(c).or_default() += v * BigInt::from(k);
        }
        dense[i].retain(|_, v| v != &BigInt::from(0));
    }
    SectionBasis {
        monomials: basis.monomials.clone(),
        sections: dense.into_iter().map(|m| m.into_iter().collect()).collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gaussian_rank_is_basis_independent(
        ops in proptest::collection::vec((0usize..64, 0usize..64, -3i64..=3), 1..12),
        seed in 0u64..1000,
    ) {
        let x = generic_blowup(1, 1, seed);
        let basis = section_basis(&x, &DivisorClass::uniform(2, 4, 1, 1)).unwrap();
        let before = rank_exact(&gaussian_matrix_from_basis(basis.clone()).matrix);
        let after = rank_exact(&gaussian_matrix_from_basis(recombine(&basis, &ops)).matrix);
        prop_assert_eq!(before, after);
    }

    #[test]
    fn exact_rank_matches_bareiss(
        rows in 1usize..7,
        cols in 1usize..7,
        entries in proptest::collection::vec(-4i64..=4, 49),
        dependent in any::<bool>(),
    ) {
        let mut m: Vec<Vec<BigInt>> = (0..rows)
            .map(|r| (0..cols).map(|c| BigInt::from(entries[r * 7 + c])).collect())
            .collect();
        if dependent && rows > 1 {
            let (head, tail) = m.split_at_mut(1);
            for (x, y) in tail[0].iter_mut().zip(&head[0]) {
                *x = y * BigInt::from(3);
            }
        }
        let rational: Vec<Vec<BigRational>> = m
            .iter()
            .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
            .collect();
        let exact = ExactMatrix::from_dense(&rational);
        prop_assert_eq!(rank_exact(&exact), common::bareiss_rank(&m));
        prop_assert_eq!(rank_exact(&exact), rank_exact(&exact.transpose()));
    }
}

#[test]
fn reider_agrees_with_brute_force() {
    for n in 0..=3u32 {
        for delta in 0..=2usize {
            let x = BlownSurface::general(HirzebruchSurface::new(n), delta);
            for a in 0..=4i64 {
                for b in 0..=7i64 {
                    for mult in 0..=1i64 {
                        let d = DivisorClass::uniform(a, b, mult, delta);
                        let ours = reider_very_ample(&x, &d).unwrap();
                        let bound = 4 * a.max(b).max(1);
                        let (brute, _) = common::reider_brute(&x, &d, bound);
                        if ours.verdict {
                            assert!(brute, "n={n} delta={delta} D={d}");
                        } else if brute {
                            assert!(
                                ours.n_squared >= 10
                                    && ours
                                        .blockers
                                        .iter()
                                        .all(|b| b.kind == BlockerKind::DegenerateRay),
                                "n={n} delta={delta} D={d}: {:?}",
                                ours.blockers
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn reider_implies_nakai_moishezon_for_one_node() {
    for n in 0..=4u32 {
        let x = BlownSurface::general(HirzebruchSurface::new(n), 1);
        for a in 0..=15i64 {
            for b in 0..=40i64 {
                let abm = abm_decomposition(a, b);
                let d = DivisorClass::uniform(abm.a.a, abm.a.b, 1, 1);
                if reider_very_ample(&x, &d).unwrap().verdict {
                    assert!(nakai_moishezon_delta1(&x, &d).unwrap(), "n={n} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn reider_monotone_in_b() {
    for n in 0..=4u32 {
        for delta in 1..=3usize {
            let x = BlownSurface::general(HirzebruchSurface::new(n), delta);
            for a in 3..=12i64 {
                for b in 0..=50i64 {
                    let at = |b: i64| {
                        let abm = abm_decomposition(a, b);
                        let d = DivisorClass::uniform(abm.a.a, abm.a.b, 1, delta);
                        reider_very_ample(&x, &d).unwrap().verdict
                    };
                    if at(b) {
                        assert!(at(b + 3), "n={n} delta={delta} a={a} b={b}");
                    }
                }
            }
        }
    }
}

#[test]
fn abm_identity() {
    for a in 0..=100i64 {
        for b in 0..=100i64 {
            let d = abm_decomposition(a, b);
            assert_eq!(&(2 * &d.a) + &d.b, DivisorClass::on_base(a, b));
            assert_eq!(d.m, DivisorClass::uniform(a, b, 3, 1));
            assert_eq!(d.m_on(3), DivisorClass::uniform(a, b, 3, 3));
        }
    }
}

#[test]
fn simple_points_impose_independent_conditions_on_anticanonical() {
    for n in 0..=8u32 {
        for delta in 0..=10u32 {
            let c = conjecture_check(n, delta, 42).unwrap();
            assert_eq!(
                c.rhs,
                (anticanonical_h0(n) - i128::from(delta)).max(0),
                "{c:?}"
            );
        }
    }
}

#[test]
fn constraint_rank_is_seed_stable() {
    for n in 0..=3u32 {
        for delta in 1..=3usize {
            for (a, b, m) in [(3, 8, 1), (4, 9, 2), (2, 10, 2)] {
                let d = DivisorClass::uniform(a, b, m, delta);
                let basis = monomial_basis(n, &d);
                let ranks: Vec<usize> = [11u64, 97]
                    .iter()
                    .map(|&s| {
                        let pts = pick_generic_points(n, delta, s);
                        rank_exact(&constraint_matrix(&basis, &pts, &d.m).unwrap())
                    })
                    .collect();
                assert_eq!(ranks[0], ranks[1], "n={n} delta={delta} D={d}");
            }
        }
    }
}

#[test]
fn h0_blowup_matches_expected_dimension_for_ample_enough_classes() {
    for n in 0..=2u32 {
        for delta in 1..=3usize {
            let x = generic_blowup(n, delta, 3);
            let d = DivisorClass::uniform(4, 4 * i64::from(n) + 8, 1, delta);
            let h = h0_blowup(&x, &d).unwrap();
            assert_eq!(h, h0_base(n, 4, 4 * i64::from(n) + 8) - delta as i128);
        }
    }
}
