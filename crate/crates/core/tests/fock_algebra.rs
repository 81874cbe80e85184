mod common;

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use rindler_core::fock::{
    apply_annihilation, apply_creation, apply_operator, inner_product, operator_matrix, BasisState,
    Factor, Ladder, OperatorExpr, StateVector,
};

fn ladder(mode: usize, kind: Ladder) -> OperatorExpr {
    OperatorExpr::monomial(Complex64::new(1.0, 0.0), vec![Factor { mode, kind }])
}

fn max_entry(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[test]
fn canonical_anticommutation_relations() {
    let id = DMatrix::<Complex64>::identity(32, 32);
    let mut worst = 0.0_f64;
    for j in 0..5 {
        for k in 0..5 {
            let f = |m, kind| operator_matrix(&ladder(m, kind), 5).unwrap();
            let (aj, ak) = (f(j, Ladder::Annihilate), f(k, Ladder::Annihilate));
            let (cj, ck) = (f(j, Ladder::Create), f(k, Ladder::Create));
            let mixed = &aj * &ck + &ck * &aj;
            let expected = if j == k { id.clone() } else { DMatrix::zeros(32, 32) };
            worst = worst.max(max_entry(&(mixed - expected)));
            worst = worst.max(max_entry(&(&aj * &ak + &ak * &aj)));
            worst = worst.max(max_entry(&(&cj * &ck + &ck * &cj)));
        }
    }
    assert!(worst <= 1e-12, "max residual {worst}");
}

#[test]
fn matrix_of_adjoint_is_conjugate_transpose() {
    let mut rng = common::rng(11);
    for _ in 0..50 {
        let e = common::random_expr(&mut rng, 5);
        let m = operator_matrix(&e, 5).unwrap();
        let madj = operator_matrix(&e.adjoint(), 5).unwrap();
        assert!(max_entry(&(m.adjoint() - madj)) <= 1e-12);
    }
}

#[test]
fn apply_agrees_with_matrix_on_random_pairs() {
    let mut rng = common::rng(7);
    for _ in 0..100 {
        let e = common::random_expr(&mut rng, 5);
        let psi = common::random_state(&mut rng, 5);
        let direct = apply_operator(&e, &psi).unwrap();
        let m = operator_matrix(&e, 5).unwrap();
        let v = nalgebra::DVector::from_column_slice(psi.amplitudes());
        let via = m * v;
        for (a, b) in direct.amplitudes().iter().zip(via.iter()) {
            assert!((a - b).norm() <= 1e-12);
        }
    }
}

#[test]
fn columns_are_operator_images() {
    let e = OperatorExpr::create(1) * OperatorExpr::annihilate(3) + OperatorExpr::create(0);
    let m = operator_matrix(&e, 5).unwrap();
    for j in 0..32 {
        let col = apply_operator(&e, &StateVector::basis(BasisState::from_index(5, j).unwrap()))
            .unwrap();
        for i in 0..32 {
            assert_eq!(m[(i, j)], col.amplitudes()[i]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ladder_moves_preserve_or_kill_norm(idx in 0usize..32, mode in 0usize..5) {
        let k = BasisState::from_index(5, idx).unwrap();
        let v = StateVector::basis(k);
        let up = apply_creation(mode, &v).unwrap();
        let down = apply_annihilation(mode, &v).unwrap();
        if k.is_occupied(mode) {
            prop_assert_eq!(up.norm(), 0.0);
            prop_assert_eq!(down.norm(), 1.0);
        } else {
            prop_assert_eq!(up.norm(), 1.0);
            prop_assert_eq!(down.norm(), 0.0);
        }
    }

    #[test]
    fn creation_is_adjoint_of_annihilation(seed in any::<u64>(), mode in 0usize..5) {
        let mut rng = common::rng(seed);
        let phi = common::random_state(&mut rng, 5);
        let psi = common::random_state(&mut rng, 5);
        let lhs = inner_product(&phi, &apply_creation(mode, &psi).unwrap()).unwrap();
        let rhs = inner_product(&apply_annihilation(mode, &phi).unwrap(), &psi).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
    }

    #[test]
    fn inner_product_is_conjugate_symmetric(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let phi = common::random_state(&mut rng, 5);
        let psi = common::random_state(&mut rng, 5);
        let a = inner_product(&phi, &psi).unwrap();
        let b = inner_product(&psi, &phi).unwrap();
        prop_assert!((a - b.conj()).norm() <= 1e-12 * (1.0 + a.norm()));
        let nn = inner_product(&psi, &psi).unwrap();
        prop_assert!(nn.im.abs() <= 1e-12 && nn.re >= 0.0);
    }
}
