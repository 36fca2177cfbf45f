//! Binary forms, Sylvester matrices, resultants and discriminants.
//!
//! A [`BinaryForm`] of degree `n` stores `c_0..c_n`, meaning
//! `c_0 X^n + c_1 X^(n-1) Y + ... + c_n Y^n`, or equivalently the
//! dehomogenized `f(Z) = c_0 Z^n + ... + c_n` with `Z = X/Y`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{bareiss_det, Matrix};
use crate::poly::{Homogeneity, Poly, PolyRing, VarTable};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm<T> {
    coeffs: Vec<T>,
}

impl<T: Clone> BinaryForm<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ShapeMismatch("a binary form needs at least one coefficient".into()));
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn leading(&self) -> &T {
        &self.coeffs[0]
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> BinaryForm<U> {
        BinaryForm { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn is_zero<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.coeffs.iter().all(|c| ring.is_zero(c))
    }

    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, lambda: &T) -> Self {
        self.map(|c| ring.mul(c, lambda))
    }

    /// `d/dZ` of the dehomogenization, as a form of degree `n - 1`.
    pub fn derivative<R: Ring<Elem = T>>(&self, ring: &R) -> Result<Self> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::DegreeTooSmall { got: 0, min: 1 });
        }
        Ok(BinaryForm {
            coeffs: self.coeffs[..n]
                .iter()
                .enumerate()
                .map(|(k, c)| ring.mul(c, &ring.from_i64((n - k) as i64)))
                .collect(),
        })
    }

    /// `f(X, Y)` at a point.
    pub fn eval<R: Ring<Elem = T>>(&self, ring: &R, x: &T, y: &T) -> T {
        let n = self.degree();
        self.coeffs.iter().enumerate().fold(ring.zero(), |acc, (k, c)| {
            let t = ring.mul(c, &ring.mul(&ring.pow(x, (n - k) as u32), &ring.pow(y, k as u32)));
            ring.add(&acc, &t)
        })
    }
}

impl<R: Ring> BinaryForm<Poly<R>> {
    /// Reads `p` as a polynomial in `var` whose coefficients are polynomials
    /// in the remaining variables. `degree` fixes the formal degree (which
    /// may exceed the actual degree); by default the actual degree is used.
    pub fn from_univariate(p: &Poly<R>, var: &str, degree: Option<usize>) -> Result<Self> {
        let actual = p.degree_in(var)?.finite().unwrap_or(0) as usize;
        let n = degree.unwrap_or(actual);
        if actual > n {
            return Err(Error::DimensionMismatch(format!("polynomial has degree {actual} in {var}, more than {n}")));
        }
        let coeffs = (0..=n).map(|k| p.coefficient_of_power(var, (n - k) as u32)).collect::<Result<Vec<_>>>()?;
        Ok(BinaryForm { coeffs })
    }

    /// Reads a form homogeneous in `x`, `y`.
    pub fn from_homogeneous(p: &Poly<R>, x: &str, y: &str, degree: Option<usize>) -> Result<Self> {
        let table = p.table();
        let ix = table.index_of(x).ok_or_else(|| Error::UnknownVariable(x.to_string()))?;
        let iy = table.index_of(y).ok_or_else(|| Error::UnknownVariable(y.to_string()))?;
        let n = match (p.degree_over(&[ix, iy]), degree) {
            (Homogeneity::Inhomogeneous, _) => return Err(Error::NotHomogeneous(format!("in {x}, {y}"))),
            (Homogeneity::Homogeneous(d), Some(n)) => {
                if d.finite().is_some_and(|d| d as usize != n) {
                    return Err(Error::DimensionMismatch(format!("form has degree {d}, expected {n}")));
                }
                n
            }
            (Homogeneity::Homogeneous(d), None) => d.finite().unwrap_or(0) as usize,
        };
        let coeffs = (0..=n)
            .map(|k| p.coefficient_of_power(x, (n - k) as u32)?.coefficient_of_power(y, k as u32))
            .collect::<Result<Vec<_>>>()?;
        Ok(BinaryForm { coeffs })
    }

    /// Constant coefficients, if every coefficient is a constant.
    pub fn to_constants(&self) -> Option<BinaryForm<R::Elem>> {
        let coeffs = self.coeffs.iter().map(Poly::as_constant).collect::<Option<Vec<_>>>()?;
        Some(BinaryForm { coeffs })
    }
}

impl<T: fmt::Display> fmt::Display for BinaryForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A split form `leading * prod(Z - roots[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData<T> {
    pub leading: T,
    pub roots: Vec<T>,
}

impl<T: Clone> RootData<T> {
    pub fn new<R: Ring<Elem = T>>(ring: &R, leading: T, roots: Vec<T>) -> Result<Self> {
        if ring.is_zero(&leading) {
            return Err(Error::LeadingCoefficientZero);
        }
        Ok(RootData { leading, roots })
    }

    pub fn reconstruct<R: Ring<Elem = T>>(&self, ring: &R) -> BinaryForm<T> {
        // Descending coefficients of prod(Z - t).
        let mut c = vec![ring.one()];
        for t in &self.roots {
            let mut next = c.clone();
            next.push(ring.zero());
            for (k, ck) in c.iter().enumerate() {
                next[k + 1] = ring.sub(&next[k + 1], &ring.mul(ck, t));
            }
            c = next;
        }
        BinaryForm { coeffs: c.iter().map(|x| ring.mul(x, &self.leading)).collect() }
    }
}

/// The `(n+m) x (n+m)` Sylvester matrix: `m` shifted rows of `f`'s
/// coefficients followed by `n` shifted rows of `g`'s.
pub fn sylvester_matrix<R: Ring>(ring: &R, f: &BinaryForm<R::Elem>, g: &BinaryForm<R::Elem>) -> Result<Matrix<R::Elem>> {
    let (n, m) = (f.degree(), g.degree());
    if n == 0 || m == 0 {
        return Err(Error::DegreeTooSmall { got: 0, min: 1 });
    }
    let size = n + m;
    let mut mat = Matrix::filled(size, size, ring.zero());
    for r in 0..m {
        for (k, c) in f.coeffs.iter().enumerate() {
            mat.set(r, r + k, c.clone());
        }
    }
    for r in 0..n {
        for (k, c) in g.coeffs.iter().enumerate() {
            mat.set(m + r, r + k, c.clone());
        }
    }
    Ok(mat)
}

/// `Res(f, g)`, using the formal degrees of `f` and `g`. A degree-zero
/// argument `c` contributes `c^deg(other)`.
pub fn resultant<R: Ring>(ring: &R, f: &BinaryForm<R::Elem>, g: &BinaryForm<R::Elem>) -> Result<R::Elem> {
    match (f.degree(), g.degree()) {
        (0, 0) => Err(Error::BothDegreesZero),
        (0, m) => Ok(ring.pow(f.leading(), m as u32)),
        (n, 0) => Ok(ring.pow(g.leading(), n as u32)),
        _ => bareiss_det(ring, &sylvester_matrix(ring, f, g)?),
    }
}

/// Largest degree accepted by [`resultant_symbolic`].
pub const SYMBOLIC_RESULTANT_MAX: usize = 6;
/// Largest degree accepted by [`discriminant_symbolic`].
pub const SYMBOLIC_DISCRIMINANT_MAX: usize = 5;

/// Table `v0..vn, w0..wm` with blocks `v` and `w`.
pub fn coefficient_table(n: usize, m: usize) -> Arc<VarTable> {
    let v: Vec<String> = (0..=n).map(|i| format!("v{i}")).collect();
    let w: Vec<String> = (0..=m).map(|i| format!("w{i}")).collect();
    VarTable::new(v.iter().chain(w.iter()))
        .and_then(|t| t.with_block("v", &v))
        .and_then(|t| t.with_block("w", &w))
        .expect("generated names are distinct")
        .into_shared()
}

/// Table `p0..pn` with block `p`.
pub fn form_table(prefix: &str, n: usize) -> Arc<VarTable> {
    let p: Vec<String> = (0..=n).map(|i| format!("{prefix}{i}")).collect();
    VarTable::new(&p).and_then(|t| t.with_block(prefix, &p)).expect("generated names are distinct").into_shared()
}

/// The generic form with coefficients `{prefix}0 .. {prefix}n` over `table`.
pub fn generic_form<R: Ring>(base: &R, table: &Arc<VarTable>, prefix: &str, n: usize) -> Result<BinaryForm<Poly<R>>> {
    BinaryForm::new((0..=n).map(|i| Poly::var(base, table, &format!("{prefix}{i}"))).collect::<Result<Vec<_>>>()?)
}

fn check_guard(what: &str, d: usize, min: usize, max: usize) -> Result<()> {
    if d < min {
        return Err(Error::DegreeTooSmall { got: d, min });
    }
    if d > max {
        return Err(Error::GuardExceeded(format!("{what} degree {d} > {max}")));
    }
    Ok(())
}

/// `Res` of the generic forms of degrees `n`, `m` as a polynomial in
/// `v0..vn, w0..wm`.
pub fn resultant_symbolic<R: Ring>(base: &R, n: usize, m: usize) -> Result<Poly<R>> {
    check_guard("resultant", n, 1, SYMBOLIC_RESULTANT_MAX)?;
    check_guard("resultant", m, 1, SYMBOLIC_RESULTANT_MAX)?;
    let table = coefficient_table(n, m);
    let ring = PolyRing::new(base.clone(), table.clone());
    let f = generic_form(base, &table, "v", n)?;
    let g = generic_form(base, &table, "w", m)?;
    resultant(&ring, &f, &g)
}

/// `prod_{i,j} (x_{1i} y_{0j} - x_{0i} y_{1j})` for raw coordinate pairs
/// `xs[i] = (x_{0i}, x_{1i})`, `ys[j] = (y_{0j}, y_{1j})`.
pub fn res_product_form<R: Ring>(ring: &R, xs: &[[R::Elem; 2]], ys: &[[R::Elem; 2]]) -> R::Elem {
    let mut acc = ring.one();
    for [x0, x1] in xs {
        for [y0, y1] in ys {
            let factor = ring.sub(&ring.mul(x1, y0), &ring.mul(x0, y1));
            acc = ring.mul(&acc, &factor);
        }
    }
    acc
}

/// Table `x01, x11, ..., x0n, x1n` (blocks `x1..xn` per pair and `x` overall).
pub fn point_table(prefix: &str, n: usize) -> VarTable {
    pair_table(&[(prefix, n)])
}

/// Concatenated pair alphabets, e.g. `[("x", n), ("y", m)]`.
pub fn pair_table(alphabets: &[(&str, usize)]) -> VarTable {
    let names: Vec<String> = alphabets
        .iter()
        .flat_map(|&(p, n)| (1..=n).flat_map(move |i| [format!("{p}0{i}"), format!("{p}1{i}")]))
        .collect();
    let mut t = VarTable::new(&names).expect("generated names are distinct");
    for &(p, n) in alphabets {
        let all: Vec<String> = (1..=n).flat_map(|i| [format!("{p}0{i}"), format!("{p}1{i}")]).collect();
        t = t.with_block(p, &all).expect("names exist");
        for i in 1..=n {
            t = t.with_block(&format!("{p}{i}"), [format!("{p}0{i}"), format!("{p}1{i}")]).expect("names exist");
        }
    }
    t
}

/// Symbolic `prod_{i,j} (x_{1i} y_{0j} - x_{0i} y_{1j})` over the x/y alphabet.
pub fn res_product_form_symbolic<R: Ring>(base: &R, n: usize, m: usize) -> Result<Poly<R>> {
    let table = pair_table(&[("x", n), ("y", m)]).into_shared();
    let v = |s: String| Poly::var(base, &table, &s);
    let mut acc = Poly::one(base, &table);
    for i in 1..=n {
        for j in 1..=m {
            let factor = &(&v(format!("x1{i}"))? * &v(format!("y0{j}"))?) - &(&v(format!("x0{i}"))? * &v(format!("y1{j}"))?);
            acc = &acc * &factor;
        }
    }
    Ok(acc)
}

/// `v0^(2n-2) * prod_{i<j} (t_i - t_j)^2`.
pub fn disc_from_roots<R: Ring>(ring: &R, rd: &RootData<R::Elem>) -> Result<R::Elem> {
    let n = rd.roots.len();
    if n < 2 {
        return Err(Error::DegreeTooSmall { got: n, min: 2 });
    }
    let mut acc = ring.pow(&rd.leading, (2 * n - 2) as u32);
    for i in 0..n {
        for j in i + 1..n {
            let d = ring.sub(&rd.roots[i], &rd.roots[j]);
            acc = ring.mul(&acc, &ring.mul(&d, &d));
        }
    }
    Ok(acc)
}

/// `(-1)^(n(n-1)/2) v0^(2n-2) prod_{i != j} (t_i - t_j)`; equal to
/// [`disc_from_roots`].
pub fn disc_from_roots_ordered<R: Ring>(ring: &R, rd: &RootData<R::Elem>) -> Result<R::Elem> {
    let n = rd.roots.len();
    if n < 2 {
        return Err(Error::DegreeTooSmall { got: n, min: 2 });
    }
    let mut acc = ring.mul(&ring.sign_pow(n * (n - 1) / 2), &ring.pow(&rd.leading, (2 * n - 2) as u32));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc = ring.mul(&acc, &ring.sub(&rd.roots[i], &rd.roots[j]));
            }
        }
    }
    Ok(acc)
}

/// `Res(f, f') / c0`.
pub fn discriminant<R: Ring>(ring: &R, f: &BinaryForm<R::Elem>) -> Result<R::Elem> {
    let n = f.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { got: n, min: 2 });
    }
    if ring.is_zero(f.leading()) {
        return Err(Error::LeadingCoefficientZero);
    }
    let r = resultant(ring, f, &f.derivative(ring)?)?;
    ring.div_exact(&r, f.leading()).ok_or(Error::InexactDivision)
}

/// The discriminant of the generic degree-`n` form, in `p0..pn`.
pub fn discriminant_symbolic<R: Ring>(base: &R, n: usize) -> Result<Poly<R>> {
    check_guard("discriminant", n, 2, SYMBOLIC_DISCRIMINANT_MAX)?;
    let table = form_table("p", n);
    let ring = PolyRing::new(base.clone(), table.clone());
    discriminant(&ring, &generic_form(base, &table, "p", n)?)
}

// Univariate helpers on ascending coefficient vectors.

fn trim<R: Ring>(ring: &R, a: &mut Vec<R::Elem>) {
    while a.last().is_some_and(|c| ring.is_zero(c)) {
        a.pop();
    }
}

fn rem<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let mut r = a.to_vec();
    trim(ring, &mut r);
    let db = b.len() - 1;
    let inv = ring.inv(&b[db]).expect("nonzero leading coefficient over a field");
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let q = ring.mul(r.last().unwrap(), &inv);
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = ring.sub(&r[shift + i], &ring.mul(&q, bc));
        }
        trim(ring, &mut r);
    }
    r
}

fn monic<R: Ring>(ring: &R, a: &[R::Elem]) -> Vec<R::Elem> {
    let inv = ring.inv(a.last().unwrap()).expect("nonzero leading coefficient over a field");
    a.iter().map(|c| ring.mul(c, &inv)).collect()
}

fn univariate_gcd<R: Ring>(ring: &R, a: Vec<R::Elem>, b: Vec<R::Elem>) -> Vec<R::Elem> {
    let (mut a, mut b) = (a, b);
    trim(ring, &mut a);
    trim(ring, &mut b);
    while !b.is_empty() {
        let r = rem(ring, &a, &b);
        a = b;
        b = r;
    }
    monic(ring, &a)
}

/// Number of leading zero coefficients, i.e. the power of `Y` dividing `f`.
fn y_power<R: Ring>(ring: &R, f: &BinaryForm<R::Elem>) -> Option<usize> {
    f.coeffs.iter().position(|c| !ring.is_zero(c))
}

/// Ascending coefficients of `f(Z, 1)`.
fn dehomogenize<R: Ring>(ring: &R, f: &BinaryForm<R::Elem>) -> Vec<R::Elem> {
    let mut a: Vec<R::Elem> = f.coeffs.iter().rev().cloned().collect();
    trim(ring, &mut a);
    a
}

/// The monic homogeneous gcd of two forms over a field.
///
/// Common powers of `Y` (roots at `(1:0)`) are factored out first, the
/// dehomogenizations are reduced by Euclid, and the result is rehomogenized.
pub fn gcd_binary_forms<R: Ring>(field: &R, f: &BinaryForm<R::Elem>, g: &BinaryForm<R::Elem>) -> Result<BinaryForm<R::Elem>> {
    if !field.is_field() {
        return Err(Error::NotAField);
    }
    let (yf, yg) = match (y_power(field, f), y_power(field, g)) {
        (None, None) => return Err(Error::BothZero),
        (None, Some(_)) => return Ok(monic_form(field, g)),
        (Some(_), None) => return Ok(monic_form(field, f)),
        (Some(a), Some(b)) => (a, b),
    };
    let h = univariate_gcd(field, dehomogenize(field, f), dehomogenize(field, g));
    let mut coeffs = vec![field.zero(); yf.min(yg)];
    coeffs.extend(h.into_iter().rev());
    Ok(BinaryForm { coeffs })
}

fn monic_form<R: Ring>(field: &R, f: &BinaryForm<R::Elem>) -> BinaryForm<R::Elem> {
    let lead = f.coeffs.iter().find(|c| !field.is_zero(c)).expect("nonzero form");
    let inv = field.inv(lead).expect("nonzero element of a field");
    f.map(|c| field.mul(c, &inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::cofactor_det;
    use crate::parser::parse_poly;
    use crate::poly::Degree;
    use crate::ring::{Integers, PrimeField, Rationals};

    fn form(cs: &[i64]) -> BinaryForm<num_rational::BigRational> {
        BinaryForm::new(cs.iter().map(|&c| Rationals.from_i64(c)).collect()).unwrap()
    }

    fn q(n: i64) -> num_rational::BigRational {
        Rationals.from_i64(n)
    }

    #[test]
    fn sylvester_layouts() {
        let t = coefficient_table(2, 2);
        let f = generic_form(&Rationals, &t, "v", 2).unwrap();
        let g = generic_form(&Rationals, &t, "w", 1).unwrap();
        let m = sylvester_matrix(&PolyRing::new(Rationals, t.clone()), &f, &g).unwrap();
        let shown: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
        assert_eq!(shown, vec![vec!["v0", "v1", "v2"], vec!["w0", "w1", "0"], vec!["0", "w0", "w1"]]);

        let g2 = generic_form(&Rationals, &t, "w", 2).unwrap();
        let m = sylvester_matrix(&PolyRing::new(Rationals, t.clone()), &f, &g2).unwrap();
        let shown: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
        assert_eq!(
            shown,
            vec![
                vec!["v0", "v1", "v2", "0"],
                vec!["0", "v0", "v1", "v2"],
                vec!["w0", "w1", "w2", "0"],
                vec!["0", "w0", "w1", "w2"],
            ]
        );
    }

    #[test]
    fn numeric_resultants() {
        assert_eq!(resultant(&Rationals, &form(&[1, -1]), &form(&[1, -1])).unwrap(), q(0));
        assert_eq!(resultant(&Rationals, &form(&[1, -3, 2]), &form(&[1, -7, 12])).unwrap(), q(12));
        assert_eq!(resultant(&Rationals, &form(&[3]), &form(&[1, 0, 5])).unwrap(), q(9));
        assert_eq!(resultant(&Rationals, &form(&[1, 0, 5]), &form(&[-2])).unwrap(), q(4));
        assert_eq!(resultant(&Rationals, &form(&[3]), &form(&[2])), Err(Error::BothDegreesZero));
    }

    #[test]
    fn symbolic_resultants() {
        let r11 = resultant_symbolic(&Rationals, 1, 1).unwrap();
        assert_eq!(r11, parse_poly(&Rationals, &coefficient_table(1, 1), "v0*w1 - v1*w0").unwrap());

        let r21 = resultant_symbolic(&Rationals, 2, 1).unwrap();
        assert_eq!(r21, parse_poly(&Rationals, &coefficient_table(2, 1), "v0*w1^2 - v1*w0*w1 + v2*w0^2").unwrap());

        let r22 = resultant_symbolic(&Integers, 2, 2).unwrap();
        assert_eq!(r22.num_terms(), 7);
        assert_eq!(r22.multidegree("v").unwrap(), Homogeneity::Homogeneous(Degree::Finite(2)));
        assert_eq!(r22.multidegree("w").unwrap(), Homogeneity::Homogeneous(Degree::Finite(2)));

        assert!(matches!(resultant_symbolic(&Integers, 7, 1), Err(Error::GuardExceeded(_))));
        assert!(matches!(resultant_symbolic(&Integers, 0, 1), Err(Error::DegreeTooSmall { .. })));
    }

    #[test]
    fn symbolic_resultant_matches_cofactor_oracle() {
        for (n, m) in [(2, 1), (2, 2), (3, 2)] {
            let t = coefficient_table(n, m);
            let ring = PolyRing::new(Integers, t.clone());
            let f = generic_form(&Integers, &t, "v", n).unwrap();
            let g = generic_form(&Integers, &t, "w", m).unwrap();
            let oracle = cofactor_det(&ring, &sylvester_matrix(&ring, &f, &g).unwrap()).unwrap();
            assert_eq!(resultant_symbolic(&Integers, n, m).unwrap(), oracle, "({n},{m})");
        }
    }

    #[test]
    fn product_form_examples() {
        let pts = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| [q(a), q(b)]).collect::<Vec<_>>();
        let xs = pts(&[(1, 1), (1, 2)]);
        let ys = pts(&[(1, 3), (1, 4)]);
        assert_eq!(res_product_form(&Rationals, &xs, &ys), q(12));
        assert_eq!(res_product_form(&Rationals, &pts(&[(2, 6), (1, 0)]), &pts(&[(1, 3)])), q(0));

        let s = res_product_form_symbolic(&Rationals, 1, 1).unwrap();
        assert_eq!(s.to_string(), "-x01*y11 + x11*y01");
    }

    #[test]
    fn root_discriminants() {
        let rd = |l: i64, r: &[i64]| RootData::new(&Rationals, q(l), r.iter().map(|&x| q(x)).collect()).unwrap();
        assert_eq!(disc_from_roots(&Rationals, &rd(1, &[1, 1])).unwrap(), q(0));
        assert_eq!(disc_from_roots(&Rationals, &rd(1, &[0, 1])).unwrap(), q(1));
        assert_eq!(disc_from_roots(&Rationals, &rd(2, &[1, 2, 3])).unwrap(), q(64));
        assert_eq!(disc_from_roots_ordered(&Rationals, &rd(2, &[1, 2, 3])).unwrap(), q(64));
        assert!(matches!(disc_from_roots(&Rationals, &rd(1, &[4])), Err(Error::DegreeTooSmall { .. })));
        assert_eq!(RootData::new(&Rationals, q(0), vec![]), Err(Error::LeadingCoefficientZero));
        assert_eq!(rd(2, &[1, 2]).reconstruct(&Rationals), form(&[2, -6, 4]));
    }

    #[test]
    fn discriminants() {
        let d2 = discriminant_symbolic(&Rationals, 2).unwrap();
        assert_eq!(d2.to_string(), "4*p0*p2 - p1^2");
        let d3 = discriminant_symbolic(&Rationals, 3).unwrap();
        let expected = parse_poly(
            &Rationals,
            &form_table("p", 3),
            "27*p0^2*p3^2 + 4*p0*p2^3 + 4*p1^3*p3 - p1^2*p2^2 - 18*p0*p1*p2*p3",
        )
        .unwrap();
        assert_eq!(d3, expected);

        let d4 = discriminant_symbolic(&Integers, 4).unwrap();
        assert_eq!(d4.multidegree("p").unwrap(), Homogeneity::Homogeneous(Degree::Finite(6)));

        assert_eq!(discriminant(&Rationals, &form(&[1, -2, 1])).unwrap(), q(0));
        assert_eq!(discriminant(&Rationals, &form(&[0, 1, 1])), Err(Error::LeadingCoefficientZero));
        assert!(matches!(discriminant(&Rationals, &form(&[1, 1])), Err(Error::DegreeTooSmall { .. })));
        assert!(matches!(discriminant_symbolic(&Rationals, 6), Err(Error::GuardExceeded(_))));
    }

    #[test]
    fn gcds() {
        let f = form(&[1, -3, 2]);
        assert_eq!(gcd_binary_forms(&Rationals, &f, &f).unwrap(), f);
        assert_eq!(gcd_binary_forms(&Rationals, &f, &form(&[1, -5, 6])).unwrap(), form(&[1, -2]));
        // X*Y and X^2 share X.
        assert_eq!(gcd_binary_forms(&Rationals, &form(&[0, 1, 0]), &form(&[1, 0, 0])).unwrap(), form(&[1, 0]));
        // Y*(X - Y) and Y^2 share Y.
        assert_eq!(gcd_binary_forms(&Rationals, &form(&[0, 1, -1]), &form(&[0, 0, 1])).unwrap(), form(&[0, 1]));
        assert_eq!(gcd_binary_forms(&Rationals, &form(&[2, 4]), &form(&[1, 0, 1])).unwrap(), form(&[1]));
        assert_eq!(gcd_binary_forms(&Rationals, &form(&[0, 0]), &form(&[3, 6])).unwrap(), form(&[1, 2]));
        assert_eq!(gcd_binary_forms(&Rationals, &form(&[0]), &form(&[0, 0])), Err(Error::BothZero));
        assert_eq!(gcd_binary_forms(&Integers, &form(&[1]).map(|_| Integers.one()), &form(&[1]).map(|_| Integers.one())), Err(Error::NotAField));

        let f7 = PrimeField::new(7).unwrap();
        let a = BinaryForm::new(vec![1, f7.from_i64(-3), 2]).unwrap();
        let b = BinaryForm::new(vec![1, f7.from_i64(-5), 6]).unwrap();
        assert_eq!(gcd_binary_forms(&f7, &a, &b).unwrap(), BinaryForm::new(vec![1, 5]).unwrap());
    }

    #[test]
    fn reading_forms_from_polynomials() {
        let t = VarTable::new(["p0", "p1", "p2", "Z", "X", "Y"]).unwrap().into_shared();
        let p = parse_poly(&Rationals, &t, "p0*Z^2 + p1*Z + p2").unwrap();
        let f = BinaryForm::from_univariate(&p, "Z", None).unwrap();
        assert_eq!(f.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(), ["p0", "p1", "p2"]);
        let f3 = BinaryForm::from_univariate(&p, "Z", Some(3)).unwrap();
        assert_eq!(f3.degree(), 3);
        assert!(f3.leading().is_zero());
        assert!(BinaryForm::from_univariate(&p, "Z", Some(1)).is_err());

        let h = parse_poly(&Rationals, &t, "X^2 - 3X*Y + 2Y^2").unwrap();
        let hf = BinaryForm::from_homogeneous(&h, "X", "Y", None).unwrap().to_constants().unwrap();
        assert_eq!(hf, form(&[1, -3, 2]));
        let bad = parse_poly(&Rationals, &t, "X^2 + Y").unwrap();
        assert!(matches!(BinaryForm::from_homogeneous(&bad, "X", "Y", None), Err(Error::NotHomogeneous(_))));
    }
}
