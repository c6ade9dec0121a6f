use proptest::prelude::*;

use lonesum::bijection::{
    matrix_to_permutation, matrix_to_tuples, permutation_to_matrix, tuples_to_matrix,
};
use lonesum::count::{count_lonesum, count_lonesum_recursive};
use lonesum::strong::{block_decomposition, strongly_lonesum};
use lonesum::weak::{find_cycle, small_forbidden_scan};
use lonesum::{reconstruct_strong, QMatrix, Reconstruction, Symbol};

fn arb_matrix(
    qs: std::ops::RangeInclusive<Symbol>,
    max_dim: usize,
) -> impl Strategy<Value = QMatrix> {
    (qs, 1..=max_dim, 1..=max_dim).prop_flat_map(|(q, m, n)| {
        proptest::collection::vec(0..q, m * n).prop_map(move |e| QMatrix::new(q, m, n, e).unwrap())
    })
}

/// A binary matrix whose rows are prefixes of one column order: always lonesum.
fn arb_binary_stairs(max_dim: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(m, n)| {
        (
            proptest::collection::vec(0..=n, m),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(move |(lengths, order)| {
                let mut e = vec![0; m * n];
                for (i, &len) in lengths.iter().enumerate() {
                    for &j in &order[..len] {
                        e[i * n + j] = 1;
                    }
                }
                QMatrix::new(2, m, n, e).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn standard_form_exists_iff_strong(a in arb_matrix(2..=5, 6)) {
        prop_assert_eq!(a.standard_form().is_ok(), strongly_lonesum(&a));
    }

    #[test]
    fn strong_matrices_are_rebuilt_from_margins(a in arb_matrix(2..=4, 4)) {
        let r = reconstruct_strong(a.q(), &a.margins(), a.rows(), a.cols()).unwrap();
        if strongly_lonesum(&a) {
            prop_assert_eq!(r, Reconstruction::Unique(a.clone()));
            prop_assert_eq!(block_decomposition(&a).unwrap().reassemble(), a);
        } else {
            prop_assert_eq!(r, Reconstruction::Ambiguous);
        }
    }

    #[test]
    fn stair_matrices_roundtrip(a in arb_binary_stairs(9)) {
        prop_assert!(strongly_lonesum(&a));
        let p = matrix_to_permutation(&a).unwrap();
        prop_assert_eq!(permutation_to_matrix(&p).unwrap(), a.clone());
        let t = matrix_to_tuples(&a).unwrap();
        prop_assert_eq!(tuples_to_matrix(&t, a.rows(), a.cols()).unwrap(), a.clone());
        let r = reconstruct_strong(2, &a.margins(), a.rows(), a.cols()).unwrap();
        prop_assert_eq!(r, Reconstruction::Unique(a));
    }

    #[test]
    fn counts_are_transpose_symmetric(q in 2u32..9, m in 0usize..14, n in 0usize..14) {
        let c = count_lonesum(q, m, n);
        prop_assert_eq!(&c, &count_lonesum(q, n, m));
        prop_assert_eq!(c, count_lonesum_recursive(q, m, n));
    }

    #[test]
    fn long_cycles_have_small_forbidden_submatrices(a in arb_matrix(4..=4, 4)) {
        if let Some(c) = find_cycle(&a) {
            if c.len() >= 6 {
                prop_assert!(small_forbidden_scan(&a).is_some(), "counterexample {:?}", a);
            }
        }
    }
}
