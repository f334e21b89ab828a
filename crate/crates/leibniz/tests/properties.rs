//! Property tests: exact linear algebra invariants, reducer/dense
//! agreement, and document round-trips.

use leibniz::document::AlgebraDocument;
use leibniz::linalg::{Matrix, RowReducer, VectorSpaceBasis};
use leibniz::rational::{frac, Rational};
use leibniz::superalgebra::{StructureTable, SuperAlgebra};
use num_traits::Zero;
use proptest::prelude::*;

fn rational_entry() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(rational_entry(), r * c)
            .prop_map(move |entries| Matrix::new(r, c, entries).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in matrix(6, 6)) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn rank_equals_transpose_rank(m in matrix(6, 6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_vectors_annihilate_and_fill(m in matrix(6, 6)) {
        let k = m.kernel_basis();
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.vectors() {
            let image = m.apply(v).unwrap();
            prop_assert!(image.iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn incremental_reducer_matches_dense_rref(m in matrix(7, 5)) {
        let (dense, pivots) = m.rref();
        let mut reducer = RowReducer::new(m.cols());
        for r in 0..m.rows() {
            reducer.push_dense(m.row(r));
        }
        let basis = reducer.into_row_space_basis();
        prop_assert_eq!(basis.pivots(), &pivots[..]);
        for (i, v) in basis.vectors().iter().enumerate() {
            prop_assert_eq!(v.as_slice(), dense.row(i));
        }
    }

    #[test]
    fn span_membership_detects_combinations(
        m in matrix(4, 5),
        weights in proptest::collection::vec(rational_entry(), 4),
    ) {
        let basis = VectorSpaceBasis::from_vectors(
            m.cols(),
            (0..m.rows()).map(|r| m.row(r).to_vec()),
        ).unwrap();
        let mut combo = vec![Rational::zero(); m.cols()];
        for (r, w) in weights.iter().enumerate().take(m.rows()) {
            for (c, slot) in combo.iter_mut().enumerate() {
                *slot += w * m.at(r, c);
            }
        }
        prop_assert!(basis.in_span(&combo).unwrap());
    }

    #[test]
    fn determinism_of_rref(m in matrix(5, 5)) {
        prop_assert_eq!(m.rref(), m.clone().rref());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn algebra_documents_round_trip(
        even in 1usize..=3,
        odd in 0usize..=3,
        raw in proptest::collection::vec(
            ((0usize..6, 0usize..6), rational_entry(), 0usize..6),
            0..8,
        ),
    ) {
        // Keep the raw entries that fit the dimensions and the grading.
        let dim = even + odd;
        let mut table = StructureTable::new();
        for ((i, j), value, target) in raw {
            let (i, j, target) = (i % dim, j % dim, target % dim);
            let parity_in = ((i >= even) as usize + (j >= even) as usize) % 2;
            if (target >= even) as usize != parity_in {
                continue;
            }
            let slot = table
                .entry((i, j))
                .or_insert_with(|| vec![Rational::zero(); dim]);
            slot[target] = value;
        }
        let algebra = SuperAlgebra::new(even, odd, table).unwrap();
        let doc = AlgebraDocument::from_algebra(&algebra);
        let parsed = AlgebraDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(parsed.to_algebra().unwrap(), algebra);
    }
}
