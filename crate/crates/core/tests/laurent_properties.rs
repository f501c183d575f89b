mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tbf_core::laurent::{solve_in_span, LaurentPoly, PolyMatrix, SpanVerdict};

fn poly(p: u32) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i32..=3, -3i32..=3, -3i32..=3), 0i64..p as i64), 0..4)
        .prop_map(move |ts| LaurentPoly::from_terms(p, ts.into_iter().map(|((a, b, c), k)| ([a, b, c], k))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(a in poly(7), b in poly(7)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
    }

    #[test]
    fn monomials_are_units(e in (-5i32..=5, -5i32..=5, -5i32..=5), k in 1i64..5) {
        let m = LaurentPoly::monomial(5, k, [e.0, e.1, e.2]);
        prop_assert!(!m.is_zero());
        prop_assert!((&m * &m.unit_inverse().unwrap()).is_one());
    }

    #[test]
    fn kernel_is_annihilated(seed in any::<u64>(), rows in 2usize..6, cols in 2usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_matrix(&mut rng, 5, rows, cols);
        let m = PolyMatrix::from_rows(5, cols, a).unwrap();
        let kernel = m.solution_space();
        prop_assert_eq!(kernel.len() + m.rank(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn certificates_verify(seed in any::<u64>(), rows in 2usize..6, cols in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_matrix(&mut rng, 7, rows, cols);
        let target = common::random_target(&mut rng, 7, &a);
        let columns: Vec<Vec<_>> = (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect();
        let m = PolyMatrix::from_rows(7, cols, a.clone()).unwrap();
        if let SpanVerdict::InSpan(cert) = solve_in_span(7, &columns, &target).unwrap() {
            let lhs = m.mul_vec(&cert.coefficients).unwrap();
            for (l, t) in lhs.iter().zip(&target) {
                prop_assert_eq!(l, &(t * &cert.denominator));
            }
        }
    }
}

#[test]
fn zero_and_identity_kernels() {
    assert_eq!(PolyMatrix::zeros(3, 2, 4).solution_space().len(), 4);
    assert!(PolyMatrix::identity(3, 4).solution_space().is_empty());
}
