//! Deterministic inputs shared by the benchmarks.

use std::sync::Arc;

use bforms::linalg::Matrix;
use bforms::{Monomial, Poly, Rationals, Ring, VarTable};
use num_rational::BigRational;

/// A dense `dim x dim` rational matrix with no special structure.
pub fn rational_matrix(dim: usize) -> Matrix<BigRational> {
    Matrix::from_fn(dim, dim, |i, j| {
        let num = ((i * 7 + j * 13 + 3) % 17) as i64 - 8;
        let den = ((i + 2 * j) % 5 + 1) as i64;
        BigRational::new(num.into(), den.into())
    })
}

pub fn entry_table() -> Arc<VarTable> {
    VarTable::new(["a", "b"]).expect("distinct names").into_shared()
}

/// A `dim x dim` matrix of quadratic polynomials in `a`, `b`.
pub fn poly_matrix(dim: usize) -> Matrix<Poly<Rationals>> {
    let table = entry_table();
    Matrix::from_fn(dim, dim, |i, j| {
        let mut p = Poly::zero(&Rationals, &table);
        let c = |k: usize| Rationals.from_i64((k % 7) as i64 - 3);
        p.add_term(Monomial::from_exponents(vec![(i + j) as u32 % 3, 0]), c(i * 3 + j + 1));
        p.add_term(Monomial::from_exponents(vec![0, (i * j) as u32 % 3]), c(i + 5 * j + 2));
        p.add_term(Monomial::from_exponents(vec![1, 1]), c(2 * i + j));
        p
    })
}
