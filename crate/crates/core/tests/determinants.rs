mod common;

use bforms::linalg::{bareiss_det, cofactor_det, Matrix};
use bforms::{PolyRing, Rationals, Ring};
use common::*;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational_matrix(max: usize) -> impl Strategy<Value = Matrix<BigRational>> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(rational(), n), n).prop_map(|rows| Matrix::from_rows(rows).unwrap())
    })
}

fn fp_matrix(n: usize) -> impl Strategy<Value = Matrix<u32>> {
    prop::collection::vec(prop::collection::vec(fp_elem(), n), n).prop_map(|rows| Matrix::from_rows(rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bareiss_matches_cofactor_over_q(m in rational_matrix(6)) {
        prop_assert_eq!(bareiss_det(&Rationals, &m).unwrap(), cofactor_det(&Rationals, &m).unwrap());
    }

    #[test]
    fn bareiss_matches_cofactor_on_polynomials(
        n in 1usize..=4,
        entries in prop::collection::vec(poly_in(xyz(), 3), 16),
    ) {
        let ring = PolyRing::new(Rationals, xyz());
        let m = Matrix::from_fn(n, n, |i, j| entries[i * 4 + j].clone());
        prop_assert_eq!(bareiss_det(&ring, &m).unwrap(), cofactor_det(&ring, &m).unwrap());
    }

    #[test]
    fn row_swap_negates(m in fp_matrix(5), a in 0usize..5, b in 0usize..5) {
        prop_assume!(a != b);
        let f = fp();
        let mut s = m.clone();
        s.swap_rows(a, b);
        prop_assert_eq!(bareiss_det(&f, &s).unwrap(), f.neg(&bareiss_det(&f, &m).unwrap()));
    }

    #[test]
    fn determinant_is_multiplicative(a in fp_matrix(4), b in fp_matrix(4)) {
        let f = fp();
        let ab = a.mul(&f, &b).unwrap();
        prop_assert_eq!(
            bareiss_det(&f, &ab).unwrap(),
            f.mul(&bareiss_det(&f, &a).unwrap(), &bareiss_det(&f, &b).unwrap())
        );
    }
}
