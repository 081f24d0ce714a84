//! Property tests for the scalar types, the linear algebra kernel, and the
//! serialization codecs.

use bismash::linalg;
use bismash::matrix::Matrix;
use bismash::scalar::{Gf, GfField, QField, Rat, Scalar};
use bismash::schema::ScalarCodec;
use bismash::tensor;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rat::ratio(n, d))
}

fn gf7() -> impl Strategy<Value = Gf> {
    (0i64..7).prop_map(|v| Gf::new(v, &GfField::new(7)))
}

fn rat_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rat>> {
    proptest::collection::vec(rat(), rows * cols)
        .prop_map(move |e| Matrix::from_fn(rows, cols, |i, j| e[i * cols + j].clone()))
}

proptest! {
    #[test]
    fn rational_arithmetic_satisfies_the_field_laws(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        prop_assert_eq!(
            (a.clone() * b.clone()) * c.clone(),
            a.clone() * (b.clone() * c.clone())
        );
        prop_assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        prop_assert_eq!(a.clone() - a.clone(), Rat::zero());
        match a.inv() {
            Some(ai) => prop_assert_eq!(a.clone() * ai, Rat::one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn prime_field_arithmetic_satisfies_the_field_laws(a in gf7(), b in gf7(), c in gf7()) {
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a - a, Gf::zero());
        match a.inv() {
            Some(ai) => prop_assert_eq!(a * ai, Gf::one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn matrix_product_is_associative(
        a in rat_matrix(3, 4),
        b in rat_matrix(4, 2),
        c in rat_matrix(2, 3),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn rank_and_kernel_dimensions_add_up(a in rat_matrix(4, 5)) {
        let r = linalg::rank(&a);
        prop_assert_eq!(r, linalg::rank(&a.transpose()));
        let ker = linalg::kernel_basis(&a);
        prop_assert_eq!(r + ker.cols, a.cols);
        // Every kernel column really is annihilated.
        for j in 0..ker.cols {
            prop_assert!(a.apply(&ker.col(j)).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn square_matrices_invert_exactly_when_full_rank(a in rat_matrix(3, 3)) {
        match linalg::inverse(&a) {
            Some(inv) => prop_assert_eq!(a.mul(&inv), Matrix::identity(3)),
            None => prop_assert!(linalg::rank(&a) < 3),
        }
    }

    #[test]
    fn flat_index_round_trips(i in 0usize..3, j in 0usize..5, k in 0usize..2) {
        let dims = [3, 5, 2];
        let flat = tensor::to_flat(&dims, &[i, j, k]);
        prop_assert!(flat < tensor::flat_dim(&dims));
        prop_assert_eq!(tensor::from_flat(&dims, flat), vec![i, j, k]);
    }

    #[test]
    fn scalar_codecs_round_trip(a in rat(), b in gf7()) {
        prop_assert_eq!(Rat::decode(&a.encode(), &QField).unwrap(), a);
        prop_assert_eq!(Gf::decode(&b.encode(), &GfField::new(7)).unwrap(), b);
    }
}
