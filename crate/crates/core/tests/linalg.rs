//! Rank/kernel invariants of the exact matrix engine, checked against
//! random integer matrices.

use defect::linalg::prime_at_most;
use defect::scalar;
use defect::ExactMatrix;
use defect::Scalar;
use proptest::prelude::*;

/// A random integer matrix with dimensions up to 7×7 and entries in
/// [-9, 9], biased toward rank deficiency by occasionally duplicating a
/// row.
fn matrix_strategy() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=7, 1usize..=7)
        .prop_flat_map(|(r, c)| {
            (
                prop::collection::vec(prop::collection::vec(-9i64..=9, c), r),
                prop::option::of((0usize..r, 0usize..r)),
            )
        })
        .prop_map(|(rows, dup)| {
            let mut rows: Vec<Vec<Scalar>> = rows
                .into_iter()
                .map(|row| row.into_iter().map(scalar::from_int).collect())
                .collect();
            if let Some((src, dst)) = dup {
                rows[dst] = rows[src].clone();
            }
            ExactMatrix::from_rows(rows)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// rank + dim ker = number of columns, with the kernel dimension taken
    /// from the certified kernel basis.
    #[test]
    fn rank_nullity(m in matrix_strategy()) {
        let rank = m.rank();
        let kernel = m.kernel_basis();
        prop_assert_eq!(rank + kernel.cols(), m.cols());
    }

    /// The three rank strategies (certified modular, fraction-free exact,
    /// single-prime modular) agree on random input.
    #[test]
    fn rank_strategies_agree(m in matrix_strategy()) {
        let certified = m.rank();
        prop_assert_eq!(certified, m.rank_fraction_free());
        let p = prime_at_most(1 << 31).unwrap();
        prop_assert_eq!(certified, m.rank_modular(p));
    }

    /// Every certified kernel column is annihilated exactly: M·K = 0.
    #[test]
    fn kernel_is_annihilated(m in matrix_strategy()) {
        let kernel = m.kernel_basis();
        if kernel.cols() > 0 {
            prop_assert!(m.matmul(&kernel).is_zero());
        }
    }

    /// The kernel basis has full column rank (columns are independent).
    #[test]
    fn kernel_basis_is_independent(m in matrix_strategy()) {
        let kernel = m.kernel_basis();
        if kernel.cols() > 0 {
            prop_assert_eq!(kernel.rank(), kernel.cols());
        }
    }

    /// Transposition preserves rank.
    #[test]
    fn transpose_preserves_rank(m in matrix_strategy()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    /// The preimage of a column span contains the kernel and every found
    /// vector really maps into the span: rank([M·W | V]) = rank(V).
    #[test]
    fn preimage_kernel_maps_into_span(m in matrix_strategy(), v in matrix_strategy()) {
        if m.rows() != v.rows() {
            return Ok(());
        }
        let w = m.preimage_kernel(&v).unwrap();
        prop_assert!(w.cols() >= m.kernel_basis().cols());
        if w.cols() > 0 {
            let image = m.matmul(&w);
            let stacked = image.hstack(&v);
            prop_assert_eq!(stacked.rank(), v.rank());
        }
    }
}

#[test]
fn identity_and_zero_edge_cases() {
    let id = ExactMatrix::identity(4);
    assert_eq!(id.rank(), 4);
    assert_eq!(id.kernel_basis().cols(), 0);
    let zero = ExactMatrix::zeros(3, 5);
    assert_eq!(zero.rank(), 0);
    assert_eq!(zero.kernel_basis().cols(), 5);
    assert!(zero.is_zero());
}

#[test]
fn rational_entries_are_exact() {
    // [[1/2, 1/3], [1/4, 1/6]] has determinant 1/12 − 1/12 = 0: rank 1.
    let m = ExactMatrix::from_rows(vec![
        vec![scalar::ratio(1, 2), scalar::ratio(1, 3)],
        vec![scalar::ratio(1, 4), scalar::ratio(1, 6)],
    ]);
    assert_eq!(m.rank(), 1);
    let k = m.kernel_basis();
    assert_eq!(k.cols(), 1);
    assert!(m.matmul(&k).is_zero());
}

#[test]
fn huge_entries_do_not_overflow() {
    // Entries far beyond any word-sized prime: correctness must not depend
    // on fitting in 64 bits.
    let big = Scalar::from_integer("123456789012345678901234567890".parse().unwrap());
    let m = ExactMatrix::from_rows(vec![
        vec![big.clone(), big.clone() * scalar::from_int(2)],
        vec![big.clone() * scalar::from_int(3), big * scalar::from_int(6)],
    ]);
    assert_eq!(m.rank(), 1);
    assert_eq!(m.kernel_basis().cols(), 1);
}
