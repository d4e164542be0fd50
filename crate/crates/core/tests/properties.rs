use nilsol_core::derivations::{
    derivation_algebra, diagonal_derivations, is_derivation, nikolayevsky_rank_one,
    pre_einstein_in_torus, verify_pre_einstein,
};
use nilsol_core::exactla::{dot, int, rat, rref, solve_affine, RatMatrix, Rational};
use nilsol_core::families::{family_dim8, family_dim9, family_extended, heisenberg};
use nilsol_core::lie::{LieAlgebra, Subspace, Triple};
use nilsol_core::metric::{ricci_endomorphism, ricci_form, soliton_metric_check, DiagonalMetric};
use nilsol_core::soliton::{gram_matrix, soliton_test};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| rat(a, b))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    (prop_oneof![-5i64..=-1, 1i64..=5], 1i64..=4).prop_map(|(a, b)| rat(a, b))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(a, b)| rat(a, b))
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(small(), n)
}

fn matrix(max: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small(), r * c)
            .prop_map(move |d| RatMatrix::from_vec(r, c, d).unwrap())
    })
}

/// Brackets of `a` generators land in a `b`-dimensional centre.
fn two_step() -> impl Strategy<Value = LieAlgebra> {
    (2usize..=4, 1usize..=3).prop_flat_map(|(a, b)| {
        let n = a + b;
        let slots: Vec<Triple> = (0..a)
            .flat_map(|i| (i + 1..a).flat_map(move |j| (a..n).map(move |k| Triple::new(i, j, k))))
            .collect();
        let len = slots.len();
        proptest::collection::vec(proptest::option::of(nonzero()), len).prop_map(move |vals| {
            let constants = slots
                .iter()
                .zip(vals)
                .filter_map(|(t, v)| v.map(|c| (*t, c)));
            LieAlgebra::new(n, constants).unwrap()
        })
    })
}

fn family() -> impl Strategy<Value = LieAlgebra> {
    (prop_oneof![Just(8u32), Just(9u32)], 0usize..=2, positive())
        .prop_map(|(m, k, q)| family_extended(m, k, &q).unwrap().algebra)
}

fn algebra() -> impl Strategy<Value = LieAlgebra> {
    prop_oneof![
        two_step(),
        family(),
        (1usize..=3).prop_map(|k| heisenberg(k).unwrap().0)
    ]
}

fn with_vector(g: LieAlgebra) -> (Just<LieAlgebra>, impl Strategy<Value = Vec<Rational>>) {
    let n = g.dim();
    (Just(g), vector(n))
}

fn with_metric(g: LieAlgebra) -> (Just<LieAlgebra>, impl Strategy<Value = DiagonalMetric>) {
    let n = g.dim();
    (
        Just(g),
        proptest::collection::vec(positive(), n).prop_map(|q| DiagonalMetric::new(q).unwrap()),
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rref_is_idempotent(m in matrix(6)) {
        let (r, pivots) = rref(&m);
        let (rr, pivots2) = rref(&r);
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(pivots.len(), m.rank());
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn solve_affine_invariants(a in matrix(6), seed in vector(6)) {
        // Half the time b lies in the column space.
        let b: Vec<Rational> = if seed[0].is_positive() {
            let x: Vec<Rational> = (0..a.cols()).map(|i| seed[i % seed.len()].clone()).collect();
            a.mul_vec(&x).unwrap()
        } else {
            (0..a.rows()).map(|i| seed[i % seed.len()].clone()).collect()
        };
        let s = solve_affine(&a, &b).unwrap();
        prop_assert_eq!(s.nullspace_basis.len(), a.cols() - a.rank());
        for w in &s.nullspace_basis {
            prop_assert!(a.mul_vec(w).unwrap().iter().all(Zero::is_zero));
        }
        match &s.particular {
            Some(p) => prop_assert_eq!(a.mul_vec(p).unwrap(), b),
            None => {
                let mut rows = a.to_rows();
                for (row, bi) in rows.iter_mut().zip(&b) {
                    row.push(bi.clone());
                }
                prop_assert!(RatMatrix::from_rows(rows).unwrap().rank() > a.rank());
            }
        }
    }

    #[test]
    fn double_centralizer_contains_subspace(
        (g, vs) in algebra().prop_flat_map(|g| {
            let n = g.dim();
            (Just(g), proptest::collection::vec(vector(n), 0..=3))
        })
    ) {
        let w = Subspace::from_spanning(g.dim(), vs);
        let cc = g.centralizer(&g.centralizer(&w));
        prop_assert!(cc.contains_subspace(&w));
    }

    #[test]
    fn ad_rank_is_scale_invariant((g, x) in algebra().prop_flat_map(with_vector), c in nonzero()) {
        let cx: Vec<Rational> = x.iter().map(|v| v * &c).collect();
        prop_assert_eq!(g.ad_rank(&cx).unwrap(), g.ad_rank(&x).unwrap());
    }

    #[test]
    fn lower_central_series_decreases(g in algebra()) {
        let series = g.lower_central_series();
        prop_assert!(series.windows(2).all(|w| w[1].dim() < w[0].dim() && w[0].contains_subspace(&w[1])));
        let ty = g.nilpotency_type().unwrap();
        prop_assert_eq!(ty.iter().sum::<usize>(), g.dim());
        prop_assert!(ty.iter().all(|&d| d > 0));
    }

    #[test]
    fn torus_pre_einstein_is_unique(g in algebra()) {
        let torus = diagonal_derivations(&g);
        let w = pre_einstein_in_torus(&g).unwrap();
        for t in &torus {
            prop_assert_eq!(dot(&w, t), t.iter().fold(int(0), |acc, x| acc + x));
        }
        // The torus Gram matrix is nonsingular, so the conditions fix w.
        let gram = RatMatrix::from_rows(torus.iter().map(|a| torus.iter().map(|b| dot(a, b)).collect()).collect()).unwrap();
        prop_assert_eq!(gram.rank(), torus.len());
        prop_assert!(is_derivation(&g, &RatMatrix::diagonal(&w)).unwrap());
    }

    #[test]
    fn rank_one_formula_is_scale_invariant(m in prop_oneof![Just(8u32), Just(9u32)], k in 0usize..=2, q in positive(), c in nonzero()) {
        let f = family_extended(m, k, &q).unwrap();
        let n = nikolayevsky_rank_one(&f.algebra, &f.d_candidate).unwrap();
        prop_assert_eq!(nikolayevsky_rank_one(&f.algebra, &f.d_candidate.scale(&c)).unwrap(), n.clone());
        prop_assert_eq!(n, f.d_candidate.scale(&f.lambda));
    }

    #[test]
    fn ricci_form_symmetry_and_trace((g, metric) in algebra().prop_flat_map(with_metric)) {
        let r = ricci_form(&g, &metric).unwrap();
        prop_assert!(r.is_symmetric());
        let q = metric.entries();
        let n = g.dim();
        // Scalar curvature: -1/2 sum_{i<j} |[x_i, x_j]|^2 / (q_i q_j).
        let mut scal = int(0);
        for i in 0..n {
            for j in i + 1..n {
                for (k, c) in g.basis_bracket(i, j) {
                    scal -= rat(1, 2) * &c * &c * &q[k] / (&q[i] * &q[j]);
                }
            }
        }
        prop_assert_eq!(ricci_endomorphism(&g, &metric).unwrap().trace(), scal);
        prop_assert_eq!(metric.matrix().mul(&ricci_endomorphism(&g, &metric).unwrap()).unwrap(), r);
    }

    #[test]
    fn soliton_metric_derivation_is_a_derivation((g, metric) in algebra().prop_flat_map(with_metric)) {
        if let Some(s) = soliton_metric_check(&g, &metric).unwrap() {
            prop_assert!(is_derivation(&g, &s.derivation).unwrap());
            let ric = ricci_endomorphism(&g, &metric).unwrap();
            prop_assert_eq!(s.derivation.add(&RatMatrix::identity(g.dim()).scale(&s.beta)).unwrap(), ric);
        }
    }

    #[test]
    fn verdicts_do_not_depend_on_q(m in prop_oneof![Just(8u32), Just(9u32)], k in 0usize..=2) {
        let labels: Vec<_> = [int(1), int(2), rat(1, 3), rat(7, 5), int(5)]
            .iter()
            .map(|q| {
                let g = family_extended(m, k, q).unwrap().algebra;
                (gram_matrix(&g).unwrap().u, soliton_test(&g).label())
            })
            .collect();
        prop_assert!(labels.windows(2).all(|w| w[0] == w[1]));
        prop_assert_eq!(labels[0].1, "Nonsoliton");
    }

    #[test]
    fn derivation_basis_is_closed(g in prop_oneof![two_step(), (1usize..=2).prop_map(|k| heisenberg(k).unwrap().0)]) {
        let der = derivation_algebra(&g);
        for a in der.basis() {
            prop_assert!(is_derivation(&g, a).unwrap());
            for b in der.basis() {
                prop_assert!(der.contains(&a.commutator(b).unwrap()));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn dim8_solutions_are_never_positive(q in positive(), t in small()) {
        let u = gram_matrix(&family_dim8(&q).unwrap()).unwrap().u;
        let s = solve_affine(&u, &vec![int(1); 8]).unwrap();
        let v = s.point(&[t]).unwrap();
        prop_assert!(v.iter().any(|x| !x.is_positive()));
        prop_assert!(v[6].is_zero());
    }

    #[test]
    fn dim9_solutions_are_never_positive(q in positive(), s1 in small(), s2 in small()) {
        let u = gram_matrix(&family_dim9(&q).unwrap()).unwrap().u;
        let s = solve_affine(&u, &vec![int(1); 10]).unwrap();
        let v = s.point(&[s1, s2]).unwrap();
        prop_assert!(v.iter().any(|x| !x.is_positive()));
    }
}

#[test]
fn torus_pre_einstein_passes_for_families() {
    for (m, k) in [(8, 0), (9, 0), (8, 2), (9, 1)] {
        let f = family_extended(m, k, &int(1)).unwrap();
        let w = pre_einstein_in_torus(&f.algebra).unwrap();
        assert!(
            verify_pre_einstein(&f.algebra, &RatMatrix::diagonal(&w)).unwrap(),
            "m={m} k={k}"
        );
        assert_eq!(RatMatrix::diagonal(&w), f.d_candidate.scale(&f.lambda));
    }
}
