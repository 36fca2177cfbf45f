//! Dense exact linear algebra over any [`Ring`]: fraction-free determinants,
//! a cofactor-expansion oracle, Jacobians, rank and linear solving.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Poly, VarTable};
use crate::ring::Ring;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn identity<R: Ring<Elem = T>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn mul<R: Ring<Elem = T>>(&self, ring: &R, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(ring.zero(), |acc, k| ring.add(&acc, &ring.mul(self.get(i, k), other.get(k, j))))
        }))
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

fn require_square<T>(m: &Matrix<T>) -> Result<usize> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    Ok(m.rows)
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Pivots on the first nonzero entry at or below the diagonal in the current
/// column. Every intermediate division is exact in an integral domain; an
/// inexact one means the ring is not a domain and panics.
pub fn bareiss_det<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<R::Elem> {
    let n = require_square(m)?;
    if n == 0 {
        return Ok(ring.one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !ring.is_zero(a.get(i, k))) else {
            return Ok(ring.zero());
        };
        if p != k {
            a.swap_rows(p, k);
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let lead = a.get(i, k).clone();
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(a.get(i, j), &pivot), &ring.mul(&lead, a.get(k, j)));
                let v = ring.div_exact(&num, &prev).expect("Bareiss step division must be exact");
                a.set(i, j, v);
            }
            a.set(i, k, ring.zero());
        }
        prev = pivot;
    }
    let det = a.get(n - 1, n - 1).clone();
    Ok(if negate { ring.neg(&det) } else { det })
}

/// Largest dimension accepted by [`cofactor_det`].
pub const COFACTOR_MAX_DIM: usize = 8;

/// Determinant by recursive Laplace expansion along the first row.
/// Independent of [`bareiss_det`]; used to cross-check it.
pub fn cofactor_det<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<R::Elem> {
    let n = require_square(m)?;
    if n > COFACTOR_MAX_DIM {
        return Err(Error::GuardExceeded(format!("cofactor expansion of dimension {n} > {COFACTOR_MAX_DIM}")));
    }
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace(ring, m, &rows, &cols))
}

fn laplace<R: Ring>(ring: &R, m: &Matrix<R::Elem>, rows: &[usize], cols: &[usize]) -> R::Elem {
    match cols.len() {
        0 => ring.one(),
        1 => m.get(rows[0], cols[0]).clone(),
        _ => {
            let mut acc = ring.zero();
            for (k, &c) in cols.iter().enumerate() {
                let entry = m.get(rows[0], c);
                if ring.is_zero(entry) {
                    continue;
                }
                let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = laplace(ring, m, &rows[1..], &minor_cols);
                let t = ring.mul(entry, &minor);
                acc = if k % 2 == 0 { ring.add(&acc, &t) } else { ring.sub(&acc, &t) };
            }
            acc
        }
    }
}

/// Jacobian matrix: entry `(i, j)` is the derivative of `ps[i]` in `vars[j]`.
pub fn jacobian<R: Ring>(ps: &[Poly<R>], vars: &[&str]) -> Result<Matrix<Poly<R>>> {
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(Error::DuplicateVariable(v.to_string()));
        }
    }
    let rows = ps
        .iter()
        .map(|p| vars.iter().map(|v| p.derivative(v)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix { rows: 0, cols: vars.len(), data: Vec::new() });
    }
    Matrix::from_rows(rows)
}

/// Evaluates a polynomial matrix at a positional assignment.
pub fn eval_matrix<R: Ring>(m: &Matrix<Poly<R>>, values: &[R::Elem]) -> Result<Matrix<R::Elem>> {
    m.try_map(|p| p.eval_at(values))
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref<R: Ring>(ring: &R, a: &mut Matrix<R::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !ring.is_zero(a.get(i, c))) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = ring.inv(a.get(r, c)).expect("nonzero field element is invertible");
        for j in c..a.cols {
            let v = ring.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || ring.is_zero(a.get(i, c)) {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..a.cols {
                let v = ring.sub(a.get(i, j), &ring.mul(&f, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over a field by exact Gaussian elimination.
pub fn rank_over_field<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<usize> {
    if !ring.is_field() {
        return Err(Error::NotAField);
    }
    let mut a = m.clone();
    Ok(rref(ring, &mut a).len())
}

/// Solution of a linear system: one exact solution (free variables zero) or
/// a proof of inconsistency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution<T> {
    Unique(Vec<T>),
    /// Consistent with free variables; they are set to zero.
    Underdetermined(Vec<T>),
    NoSolution,
}

impl<T> Solution<T> {
    pub fn into_vec(self) -> Option<Vec<T>> {
        match self {
            Solution::Unique(v) | Solution::Underdetermined(v) => Some(v),
            Solution::NoSolution => None,
        }
    }
}

/// Solves `a * x = b` over a field.
pub fn solve_linear<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &[R::Elem]) -> Result<Solution<R::Elem>> {
    if !ring.is_field() {
        return Err(Error::NotAField);
    }
    if b.len() != a.rows {
        return Err(Error::ShapeMismatch(format!("{} right-hand sides for {} rows", b.len(), a.rows)));
    }
    let aug = Matrix::from_fn(a.rows, a.cols + 1, |i, j| if j < a.cols { a.get(i, j).clone() } else { b[i].clone() });
    let mut aug = aug;
    let pivots = rref(ring, &mut aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(Solution::NoSolution);
    }
    let mut x = vec![ring.zero(); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, a.cols).clone();
    }
    Ok(if pivots.len() == a.cols { Solution::Unique(x) } else { Solution::Underdetermined(x) })
}

/// Convenience: a matrix of polynomials parsed over one table.
pub fn poly_matrix<R: Ring>(ring: &R, table: &Arc<VarTable>, rows: &[&[&str]]) -> Result<Matrix<Poly<R>>> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| Ok(crate::parser::parse_poly(ring, table, s)?)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;
    use crate::poly::PolyRing;
    use crate::ring::{Integers, PrimeField, Rationals};

    fn q(n: i64) -> num_rational::BigRational {
        Rationals.from_i64(n)
    }

    fn vtable() -> Arc<VarTable> {
        VarTable::new(["v0", "v1", "v2", "w0", "w1"]).unwrap().into_shared()
    }

    #[test]
    fn identity_and_small_symbolic() {
        let id = Matrix::identity(&Rationals, 3);
        assert_eq!(bareiss_det(&Rationals, &id).unwrap(), q(1));
        assert_eq!(cofactor_det(&Rationals, &id).unwrap(), q(1));

        let t = vtable();
        let ring = PolyRing::new(Rationals, t.clone());
        let m = poly_matrix(&Rationals, &t, &[&["v0", "v1"], &["w0", "w1"]]).unwrap();
        let expect = parse_poly(&Rationals, &t, "v0*w1 - v1*w0").unwrap();
        assert_eq!(bareiss_det(&ring, &m).unwrap(), expect);
        assert_eq!(cofactor_det(&ring, &m).unwrap(), expect);

        let m = poly_matrix(&Rationals, &t, &[&["v0", "v1", "v2"], &["2v0", "v1", "0"], &["0", "2v0", "v1"]]).unwrap();
        let expect = parse_poly(&Rationals, &t, "4v0^2*v2 - v0*v1^2").unwrap();
        assert_eq!(bareiss_det(&ring, &m).unwrap(), expect);
        assert_eq!(cofactor_det(&ring, &m).unwrap(), expect);
    }

    #[test]
    fn pivoting_tracks_sign() {
        let m = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        assert_eq!(bareiss_det(&Rationals, &m).unwrap(), q(-1));
        let z = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(2)]]).unwrap();
        assert_eq!(bareiss_det(&Rationals, &z).unwrap(), q(0));
    }

    #[test]
    fn singular_and_guards() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(1), q(2), q(3)], vec![q(4), q(5), q(7)]]).unwrap();
        assert_eq!(cofactor_det(&Rationals, &m).unwrap(), q(0));
        assert_eq!(bareiss_det(&Rationals, &m).unwrap(), q(0));
        let rect = Matrix::filled(2, 3, q(1));
        assert_eq!(bareiss_det(&Rationals, &rect), Err(Error::NotSquare { rows: 2, cols: 3 }));
        let big = Matrix::identity(&Rationals, 9);
        assert!(matches!(cofactor_det(&Rationals, &big), Err(Error::GuardExceeded(_))));
        assert_eq!(bareiss_det(&Rationals, &big).unwrap(), q(1));
    }

    #[test]
    fn integer_bareiss_matches_cofactor() {
        let rows = vec![
            vec![2, -1, 3, 0],
            vec![4, 5, -2, 1],
            vec![0, 3, 7, -6],
            vec![1, 1, 1, 9],
        ];
        let m = Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|x| Integers.from_i64(x)).collect()).collect()).unwrap();
        assert_eq!(bareiss_det(&Integers, &m).unwrap(), cofactor_det(&Integers, &m).unwrap());
    }

    #[test]
    fn jacobians() {
        let t = VarTable::new(["x", "y"]).unwrap().into_shared();
        let ps = [parse_poly(&Rationals, &t, "x^2").unwrap(), parse_poly(&Rationals, &t, "y").unwrap()];
        let j = jacobian(&ps, &["x", "y"]).unwrap();
        assert_eq!(j, poly_matrix(&Rationals, &t, &[&["2x", "0"], &["0", "1"]]).unwrap());
        let c = [parse_poly(&Rationals, &t, "5").unwrap()];
        assert_eq!(jacobian(&c, &["x"]).unwrap(), poly_matrix(&Rationals, &t, &[&["0"]]).unwrap());
        assert!(matches!(jacobian(&c, &["z"]), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_over_field(&Rationals, &Matrix::identity(&Rationals, 4)).unwrap(), 4);
        assert_eq!(rank_over_field(&Rationals, &Matrix::filled(3, 5, q(0))).unwrap(), 0);
        assert_eq!(rank_over_field(&Integers, &Matrix::identity(&Integers, 2)), Err(Error::NotAField));
        let f7 = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(vec![vec![1, 2], vec![3, 6]]).unwrap();
        assert_eq!(rank_over_field(&f7, &m).unwrap(), 1);
    }

    #[test]
    fn linear_solving() {
        let a = Matrix::identity(&Rationals, 3);
        let b = vec![q(4), q(-1), q(7)];
        assert_eq!(solve_linear(&Rationals, &a, &b).unwrap(), Solution::Unique(b.clone()));

        let a = Matrix::from_rows(vec![vec![q(1)], vec![q(1)]]).unwrap();
        assert_eq!(solve_linear(&Rationals, &a, &[q(0), q(1)]).unwrap(), Solution::NoSolution);

        let a = Matrix::from_rows(vec![vec![q(1), q(1)]]).unwrap();
        assert_eq!(solve_linear(&Rationals, &a, &[q(2)]).unwrap(), Solution::Underdetermined(vec![q(2), q(0)]));

        assert!(matches!(solve_linear(&Rationals, &a, &[q(2), q(3)]), Err(Error::ShapeMismatch(_))));
    }
}
