#![allow(dead_code)]

use std::sync::Arc;

use bforms::{BinaryForm, Monomial, Poly, PrimeField, Rationals, Ring, VarTable};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

pub const P: u32 = 101;

pub fn fp() -> PrimeField {
    PrimeField::new(P).unwrap()
}

pub fn q(n: i64) -> BigRational {
    Rationals.from_i64(n)
}

pub fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=7).prop_map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
}

pub fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    rational().prop_filter("nonzero", |r| *r != q(0))
}

pub fn small_int() -> impl Strategy<Value = BigInt> {
    (-1000i64..=1000).prop_map(BigInt::from)
}

pub fn fp_elem() -> impl Strategy<Value = u32> {
    0..P
}

pub fn xyz() -> Arc<VarTable> {
    VarTable::new(["x", "y", "z"]).unwrap().into_shared()
}

/// Random polynomial in x, y, z with up to `terms` terms of degree at most 3 per variable.
pub fn poly_in(table: Arc<VarTable>, terms: usize) -> impl Strategy<Value = Poly<Rationals>> {
    let nvars = table.len();
    prop::collection::vec((prop::collection::vec(0u32..=3, nvars), rational()), 0..=terms).prop_map(move |ts| {
        Poly::from_terms(&Rationals, &table, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c)))
    })
}

pub fn poly() -> impl Strategy<Value = Poly<Rationals>> {
    poly_in(xyz(), 6)
}

pub fn form_of_degree(n: usize) -> impl Strategy<Value = BinaryForm<BigRational>> {
    prop::collection::vec(rational(), n + 1).prop_map(|c| BinaryForm::new(c).unwrap())
}

/// A form of degree 1..=max together with its degree.
pub fn form(max: usize) -> impl Strategy<Value = BinaryForm<BigRational>> {
    (1..=max).prop_flat_map(form_of_degree)
}

pub fn form_product<R: Ring>(ring: &R, f: &BinaryForm<R::Elem>, g: &BinaryForm<R::Elem>) -> BinaryForm<R::Elem> {
    let mut c = vec![ring.zero(); f.degree() + g.degree() + 1];
    for (i, a) in f.coeffs().iter().enumerate() {
        for (j, b) in g.coeffs().iter().enumerate() {
            c[i + j] = ring.add(&c[i + j], &ring.mul(a, b));
        }
    }
    BinaryForm::new(c).unwrap()
}

/// Integer coordinate pairs, not both zero.
pub fn raw_pairs(len: usize) -> impl Strategy<Value = Vec<[BigRational; 2]>> {
    prop::collection::vec(
        (-6i64..=6, -6i64..=6).prop_filter("nonzero point", |(a, b)| (*a, *b) != (0, 0)).prop_map(|(a, b)| [q(a), q(b)]),
        len,
    )
}
