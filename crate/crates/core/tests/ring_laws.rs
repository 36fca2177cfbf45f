mod common;

use bforms::{Integers, ProjectiveRing, Rationals, Ring};
use common::*;
use proptest::prelude::*;

macro_rules! ring_axioms {
    ($name:ident, $ring:expr, $elem:expr) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn $name(a in $elem, b in $elem, c in $elem) {
                let r = $ring;
                prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
                prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
                prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
                prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
                prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
                prop_assert_eq!(r.add(&a, &r.zero()), a.clone());
                prop_assert_eq!(r.mul(&a, &r.one()), a.clone());
                prop_assert!(r.is_zero(&r.add(&a, &r.neg(&a))));
                prop_assert_eq!(r.sub(&a, &b), r.add(&a, &r.neg(&b)));
                if !r.is_zero(&b) {
                    prop_assert_eq!(r.div_exact(&r.mul(&a, &b), &b), Some(a.clone()));
                }
                prop_assert_eq!(r.div_exact(&a, &r.zero()), None);
                prop_assert_eq!(r.pow(&a, 3), r.mul(&a, &r.mul(&a, &a)));
            }
        }
    };
}

ring_axioms!(rational_axioms, Rationals, rational());
ring_axioms!(integer_axioms, Integers, small_int());
ring_axioms!(prime_field_axioms, fp(), fp_elem());

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn prime_field_inverses(a in 1..P) {
        let f = fp();
        prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
    }

    #[test]
    fn integer_division_agrees_with_remainder(a in small_int(), b in small_int()) {
        let quotient = Integers.div_exact(&a, &b);
        if b == Integers.zero() {
            prop_assert!(quotient.is_none());
        } else if (&a % &b) == Integers.zero() {
            prop_assert_eq!(Integers.mul(&quotient.unwrap(), &b), a);
        } else {
            prop_assert!(quotient.is_none());
        }
    }

    #[test]
    fn projective_normalization_is_scale_invariant(
        coords in prop::collection::vec(rational(), 1..5),
        lambda in nonzero_rational(),
    ) {
        prop_assume!(coords.iter().any(|c| *c != q(0)));
        let mut a = coords.clone();
        let mut b: Vec<_> = coords.iter().map(|c| Rationals.mul(c, &lambda)).collect();
        Rationals.normalize_projective(&mut a);
        Rationals.normalize_projective(&mut b);
        prop_assert_eq!(&a, &b);
        prop_assert!(a.iter().all(|c| c.is_integer()));
    }

    #[test]
    fn prime_field_normalization_is_scale_invariant(coords in prop::collection::vec(fp_elem(), 1..5), lambda in 1..P) {
        prop_assume!(coords.iter().any(|c| *c != 0));
        let f = fp();
        let mut a = coords.clone();
        let mut b: Vec<u32> = coords.iter().map(|c| f.mul(c, &lambda)).collect();
        f.normalize_projective(&mut a);
        f.normalize_projective(&mut b);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.iter().find(|c| **c != 0), Some(&1));
    }
}
