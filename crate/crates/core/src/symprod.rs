//! Symmetric products of the projective line at point and polynomial level.
//!
//! Points of `(P^1)^n` are [`PointTuple`]s; the Viete map sends a tuple to the
//! coefficient point `(p_0 : ... : p_n)` of the elementary homogeneous
//! symmetric polynomials, i.e. the sign-stripped coefficients of
//! `prod_i (x_{0i} X - x_{1i} Y)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{eval_matrix, jacobian, rank_over_field, solve_linear, Matrix, Solution};
use crate::poly::{Monomial, Poly, VarTable};
use crate::resultant::{discriminant_symbolic, pair_table, point_table, resultant_symbolic, BinaryForm};
use crate::ring::{Integers, ProjectiveRing, Rationals, Ring};

/// A normalized point of projective space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint<T> {
    coords: Vec<T>,
}

impl<T: Clone> ProjPoint<T> {
    pub fn new<R: ProjectiveRing<Elem = T>>(ring: &R, mut coords: Vec<T>) -> Result<Self> {
        if coords.iter().all(|c| ring.is_zero(c)) {
            return Err(Error::ZeroPoint);
        }
        ring.normalize_projective(&mut coords);
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// The point as a binary form `c_0 X^n + ... + c_n Y^n`.
    pub fn as_form(&self) -> BinaryForm<T> {
        BinaryForm::new(self.coords.clone()).expect("a point has at least one coordinate")
    }
}

impl<T: fmt::Display> fmt::Display for ProjPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().join(":"))
    }
}

/// An ordered tuple of points of `P^1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointTuple<T> {
    points: Vec<ProjPoint<T>>,
}

impl<T: Clone> PointTuple<T> {
    pub fn new(points: Vec<ProjPoint<T>>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.dim() != 1) {
            return Err(Error::DimensionMismatch(format!("tuple entries must lie on P^1, got dimension {}", p.dim())));
        }
        Ok(PointTuple { points })
    }

    pub fn from_pairs<R: ProjectiveRing<Elem = T>>(ring: &R, pairs: &[[T; 2]]) -> Result<Self> {
        pairs.iter().map(|p| ProjPoint::new(ring, p.to_vec())).collect::<Result<Vec<_>>>().and_then(Self::new)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjPoint<T>] {
        &self.points
    }

    /// Coordinate pairs `(x_{0i}, x_{1i})`.
    pub fn pairs(&self) -> Vec<[T; 2]> {
        self.points.iter().map(|p| [p.coords[0].clone(), p.coords[1].clone()]).collect()
    }
}

impl<T: fmt::Display> fmt::Display for PointTuple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.points.iter().join(", "))
    }
}

/// A permutation of `{0, .., n-1}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(images));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        if a >= n || b >= n {
            return Err(Error::InvalidPermutation(images));
        }
        images.swap(a, b);
        Ok(Permutation { images })
    }

    /// The `n - 1` adjacent transpositions generating `S_n`.
    pub fn adjacent_transpositions(n: usize) -> Vec<Self> {
        (1..n).map(|i| Permutation::transposition(n, i - 1, i).expect("in range")).collect()
    }

    /// All `n!` permutations in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(|images| Permutation { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::DimensionMismatch(format!("S_{} and S_{}", self.size(), other.size())));
        }
        Ok(Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() })
    }

    /// Moves entry `i` of the tuple to position `sigma(i)`.
    pub fn act_on_tuple<T: Clone>(&self, tuple: &PointTuple<T>) -> Result<PointTuple<T>> {
        self.check_size(tuple.len())?;
        let mut out = tuple.points.clone();
        for (i, p) in tuple.points.iter().enumerate() {
            out[self.images[i]] = p.clone();
        }
        Ok(PointTuple { points: out })
    }

    /// Renames the variable pairs `(x0i, x1i) -> (x0σ(i), x1σ(i))` of the
    /// `prefix` alphabet. Other variables are fixed.
    pub fn act_on_poly<R: Ring>(&self, p: &Poly<R>, prefix: &str) -> Result<Poly<R>> {
        let table = p.table();
        let n = self.size();
        let mut mapping: Vec<usize> = (0..table.len()).collect();
        for i in 0..n {
            for b in 0..2 {
                let from = pair_var(table, prefix, b, i)?;
                let to = pair_var(table, prefix, b, self.images[i])?;
                mapping[from] = to;
            }
        }
        p.permute_vars(&mapping)
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if self.size() != n {
            return Err(Error::DimensionMismatch(format!("permutation of {} acting on {n} entries", self.size())));
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().map(|i| i + 1).join(" "))
    }
}

fn pair_var(table: &VarTable, prefix: &str, b: usize, i: usize) -> Result<usize> {
    let name = format!("{prefix}{b}{}", i + 1);
    table.index_of(&name).ok_or(Error::UnknownVariable(name))
}

/// Shared `x01, x11, ..., x0n, x1n` table.
pub fn x_table(n: usize) -> Arc<VarTable> {
    point_table("x", n).into_shared()
}

/// The elementary homogeneous symmetric polynomials `p_0..p_n` over
/// [`x_table`], read off the expansion of `prod (x_{0i} X - x_{1i} Y)`.
pub fn ehsp<R: Ring>(base: &R, n: usize) -> Result<Vec<Poly<R>>> {
    ehsp_in(base, &x_table(n), "x", n)
}

/// [`ehsp`] in the pair alphabet `{prefix}01, {prefix}11, ..` of `table`.
pub fn ehsp_in<R: Ring>(base: &R, table: &Arc<VarTable>, prefix: &str, n: usize) -> Result<Vec<Poly<R>>> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { got: 0, min: 1 });
    }
    let mut names = table.names().to_vec();
    names.extend(["X".to_string(), "Y".to_string()]);
    let big = VarTable::new(&names)?.into_shared();
    let var = |s: &str| Poly::var(base, &big, s);
    let mut product = Poly::one(base, &big);
    for i in 1..=n {
        let linear =
            &(&var(&format!("{prefix}0{i}"))? * &var("X")?) - &(&var(&format!("{prefix}1{i}"))? * &var("Y")?);
        product = &product * &linear;
    }
    (0..=n)
        .map(|k| {
            let c = product.coefficient_of_power("X", (n - k) as u32)?.coefficient_of_power("Y", k as u32)?;
            c.scale(&base.sign_pow(k)).embed(table)
        })
        .collect()
}

/// `prod (x_{0i} X - x_{1i} Y)` at a tuple, as a binary form.
pub fn form_of_tuple<R: Ring>(ring: &R, tuple: &PointTuple<R::Elem>) -> BinaryForm<R::Elem> {
    let mut c = vec![ring.one()];
    for [x0, x1] in tuple.pairs() {
        let mut next = vec![ring.zero(); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            next[k] = ring.add(&next[k], &ring.mul(ck, &x0));
            next[k + 1] = ring.sub(&next[k + 1], &ring.mul(ck, &x1));
        }
        c = next;
    }
    BinaryForm::new(c).expect("nonempty")
}

/// The Viete map `(P^1)^n -> P^n`, `tuple -> (p_0 : ... : p_n)`.
pub fn viete<R: ProjectiveRing>(ring: &R, tuple: &PointTuple<R::Elem>) -> ProjPoint<R::Elem> {
    let coords = form_of_tuple(ring, tuple)
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c } else { ring.neg(&c) })
        .collect();
    ProjPoint::new(ring, coords).expect("a product of nonzero linear forms is nonzero")
}

/// True when `p` over the `x` alphabet is fixed by every adjacent transposition.
pub fn is_symmetric<R: Ring>(p: &Poly<R>, n: usize) -> Result<bool> {
    for i in 1..=n {
        for b in 0..2 {
            pair_var(p.table(), "x", b, i - 1)?;
        }
    }
    for t in Permutation::adjacent_transpositions(n) {
        if t.act_on_poly(p, "x")? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Table `P0..Pn` for abstract generators.
pub fn generator_table(n: usize) -> Arc<VarTable> {
    crate::resultant::form_table("P", n)
}

/// Writes a symmetric polynomial as a polynomial in the generators
/// `P0..Pn` (standing for `p_0..p_n`).
///
/// Each multigraded piece of degree `(d, .., d)` is matched against all
/// degree-`d` monomials in `p_0..p_n` by exact linear algebra. The result
/// is verified by re-expansion.
pub fn express_in_ehsp<R: Ring>(p: &Poly<R>, n: usize) -> Result<Poly<R>> {
    let field = p.ring().clone();
    if !field.is_field() {
        return Err(Error::NotAField);
    }
    let xt = x_table(n);
    let p = p.embed(&xt)?;
    let gens = ehsp(&field, n)?;
    let pt = generator_table(n);

    let pair_idx: Vec<[usize; 2]> = (0..n).map(|i| [2 * i, 2 * i + 1]).collect();
    let mut pieces: BTreeMap<u32, Poly<R>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let degs: Vec<u32> = pair_idx.iter().map(|[a, b]| m.exponent(*a) + m.exponent(*b)).collect();
        if degs.iter().any(|d| *d != degs[0]) {
            return Err(Error::NotHomogeneous(format!("multidegree {degs:?} is not of the form (d, .., d)")));
        }
        pieces
            .entry(degs[0])
            .or_insert_with(|| Poly::zero(&field, &xt))
            .add_term(m.clone(), c.clone());
    }

    let mut result = Poly::zero(&field, &pt);
    let mut powers: Vec<Vec<Poly<R>>> = gens.iter().map(|g| vec![Poly::one(&field, &xt), g.clone()]).collect();
    for (d, piece) in &pieces {
        let exps = compositions(*d, n + 1);
        let columns: Vec<Poly<R>> = exps
            .iter()
            .map(|e| {
                e.iter().enumerate().fold(Poly::one(&field, &xt), |acc, (k, &ek)| {
                    while powers[k].len() <= ek as usize {
                        let next = &powers[k][powers[k].len() - 1] * &gens[k];
                        powers[k].push(next);
                    }
                    &acc * &powers[k][ek as usize]
                })
            })
            .collect();
        let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
        for m in columns.iter().flat_map(|c| c.terms().map(|(m, _)| m)).chain(piece.terms().map(|(m, _)| m)) {
            let next = rows.len();
            rows.entry(m.clone()).or_insert(next);
        }
        let a = Matrix::from_fn(rows.len(), columns.len(), |_, _| field.zero());
        let mut a = a;
        for (j, col) in columns.iter().enumerate() {
            for (m, c) in col.terms() {
                a.set(rows[m], j, c.clone());
            }
        }
        let mut b = vec![field.zero(); rows.len()];
        for (m, c) in piece.terms() {
            b[rows[m]] = c.clone();
        }
        let coeffs = match solve_linear(&field, &a, &b)? {
            Solution::Unique(x) => x,
            Solution::Underdetermined(_) => {
                return Err(Error::IdentityFailed("generator monomials are linearly dependent".into()))
            }
            Solution::NoSolution => return Err(Error::NotExpressible),
        };
        for (e, c) in exps.into_iter().zip(coeffs) {
            result.add_term(Monomial::from_exponents(e), c);
        }
    }

    if expand_generators(&result, &gens)? != p {
        return Err(Error::NotExpressible);
    }
    Ok(result)
}

/// Substitutes `P_k -> p_k`.
pub fn expand_generators<R: Ring>(q: &Poly<R>, gens: &[Poly<R>]) -> Result<Poly<R>> {
    let target = gens.first().map(|g| g.table().clone()).ok_or(Error::DegreeTooSmall { got: 0, min: 1 })?;
    let subst: BTreeMap<String, Poly<R>> =
        gens.iter().enumerate().map(|(k, g)| (format!("P{k}"), g.clone())).collect();
    q.substitute(&subst, &target)
}

/// Exponent vectors of length `parts` summing to `total`.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .rev()
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Rank of the Jacobian of `p_0..p_n` in all `2n` variables at a point.
pub fn ehsp_jacobian_rank(n: usize, point: &[num_rational::BigRational]) -> Result<usize> {
    let gens = ehsp(&Rationals, n)?;
    let xt = x_table(n);
    let vars: Vec<&str> = xt.names().iter().map(String::as_str).collect();
    let j = jacobian(&gens, &vars)?;
    rank_over_field(&Rationals, &eval_matrix(&j, point)?)
}

/// Certifies algebraic independence of `p_0..p_n` (characteristic zero) by
/// finding full Jacobian rank `n + 1` at one of `trials` seeded random points.
pub fn check_independence(n: usize, trials: usize) -> Result<bool> {
    check_independence_seeded(n, trials, 0x5eed)
}

pub fn check_independence_seeded(n: usize, trials: usize, seed: u64) -> Result<bool> {
    let gens = ehsp(&Rationals, n)?;
    let xt = x_table(n);
    let vars: Vec<&str> = xt.names().iter().map(String::as_str).collect();
    let j = jacobian(&gens, &vars)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let point: Vec<_> = (0..2 * n).map(|_| Rationals.from_i64(rng.gen_range(-20..=20))).collect();
        if rank_over_field(&Rationals, &eval_matrix(&j, &point)?)? == n + 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A defining polynomial kept as `prod factors^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningPoly<R: Ring> {
    pub factors: Vec<Poly<R>>,
    pub exponent: u32,
}

impl<R: Ring> DefiningPoly<R> {
    pub fn expand(&self) -> Poly<R> {
        let table = self.factors[0].table();
        let base = self.factors[0].ring();
        self.factors.iter().fold(Poly::one(base, table), |acc, f| &acc * &f.pow(self.exponent))
    }
}

/// `prod_{i,j} (x_{0i} y_{1j} - x_{1i} y_{0j})`, defining `X_{n,m}`.
pub fn xnm_defining_poly<R: Ring>(base: &R, n: usize, m: usize) -> Result<DefiningPoly<R>> {
    if n == 0 || m == 0 {
        return Err(Error::DegreeTooSmall { got: 0, min: 1 });
    }
    let t = pair_table(&[("x", n), ("y", m)]).into_shared();
    let v = |s: String| Poly::var(base, &t, &s);
    let mut factors = Vec::with_capacity(n * m);
    for i in 1..=n {
        for j in 1..=m {
            factors.push(&(&v(format!("x0{i}"))? * &v(format!("y1{j}"))?) - &(&v(format!("x1{i}"))? * &v(format!("y0{j}"))?));
        }
    }
    Ok(DefiningPoly { factors, exponent: 1 })
}

/// `prod_{i<j} (x_{1i} x_{0j} - x_{0i} x_{1j})^2`, defining `X_n`.
pub fn xn_defining_poly<R: Ring>(base: &R, n: usize) -> Result<DefiningPoly<R>> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { got: n, min: 2 });
    }
    let t = x_table(n);
    let v = |s: String| Poly::var(base, &t, &s);
    let mut factors = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            factors.push(&(&v(format!("x1{i}"))? * &v(format!("x0{j}"))?) - &(&v(format!("x0{i}"))? * &v(format!("x1{j}"))?));
        }
    }
    Ok(DefiningPoly { factors, exponent: 2 })
}

fn cross<R: Ring>(ring: &R, a: &[R::Elem; 2], b: &[R::Elem; 2]) -> R::Elem {
    ring.sub(&ring.mul(&a[0], &b[1]), &ring.mul(&a[1], &b[0]))
}

/// Membership in `X_{n,m}`: the defining product vanishes at `(xs, ys)`.
pub fn member_xnm<R: Ring>(ring: &R, xs: &PointTuple<R::Elem>, ys: &PointTuple<R::Elem>) -> bool {
    let (xp, yp) = (xs.pairs(), ys.pairs());
    let value = xp.iter().cartesian_product(yp.iter()).fold(ring.one(), |acc, (a, b)| ring.mul(&acc, &cross(ring, a, b)));
    ring.is_zero(&value)
}

/// Membership in `X_n`: the squared defining product vanishes at `xs`.
pub fn member_xn<R: Ring>(ring: &R, xs: &PointTuple<R::Elem>) -> bool {
    let p = xs.pairs();
    let mut value = ring.one();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let f = cross(ring, &p[j], &p[i]);
            value = ring.mul(&value, &ring.mul(&f, &f));
        }
    }
    ring.is_zero(&value)
}

/// `R_{n,m}` as the zero set of the symbolic resultant.
#[derive(Clone, Debug)]
pub struct ResultantLocus {
    n: usize,
    m: usize,
    res: Poly<Integers>,
}

impl ResultantLocus {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        Ok(ResultantLocus { n, m, res: resultant_symbolic(&Integers, n, m)? })
    }

    pub fn polynomial(&self) -> &Poly<Integers> {
        &self.res
    }

    pub fn value<R: Ring>(&self, ring: &R, pv: &ProjPoint<R::Elem>, pw: &ProjPoint<R::Elem>) -> Result<R::Elem> {
        if pv.dim() != self.n || pw.dim() != self.m {
            return Err(Error::DimensionMismatch(format!(
                "expected points of P^{} x P^{}, got P^{} x P^{}",
                self.n,
                self.m,
                pv.dim(),
                pw.dim()
            )));
        }
        let values: Vec<R::Elem> = pv.coords().iter().chain(pw.coords()).cloned().collect();
        Ok(self.res.eval_with(ring, &values, |c: &BigInt| ring.from_int(c)))
    }

    pub fn contains<R: Ring>(&self, ring: &R, pv: &ProjPoint<R::Elem>, pw: &ProjPoint<R::Elem>) -> Result<bool> {
        Ok(ring.is_zero(&self.value(ring, pv, pw)?))
    }
}

/// `D_n` as the zero set of the symbolic discriminant.
#[derive(Clone, Debug)]
pub struct DiscriminantLocus {
    n: usize,
    disc: Poly<Integers>,
}

impl DiscriminantLocus {
    pub fn new(n: usize) -> Result<Self> {
        Ok(DiscriminantLocus { n, disc: discriminant_symbolic(&Integers, n)? })
    }

    pub fn polynomial(&self) -> &Poly<Integers> {
        &self.disc
    }

    pub fn contains<R: Ring>(&self, ring: &R, pp: &ProjPoint<R::Elem>) -> Result<bool> {
        if pp.dim() != self.n {
            return Err(Error::DimensionMismatch(format!("expected a point of P^{}, got P^{}", self.n, pp.dim())));
        }
        Ok(ring.is_zero(&self.disc.eval_with(ring, pp.coords(), |c: &BigInt| ring.from_int(c))))
    }
}

/// Membership in the resultant locus `R_{n,m}`.
pub fn member_rnm<R: Ring>(ring: &R, pv: &ProjPoint<R::Elem>, pw: &ProjPoint<R::Elem>) -> Result<bool> {
    ResultantLocus::new(pv.dim(), pw.dim())?.contains(ring, pv, pw)
}

/// Membership in the discriminant locus `D_n`.
pub fn member_dn<R: Ring>(ring: &R, pp: &ProjPoint<R::Elem>) -> Result<bool> {
    DiscriminantLocus::new(pp.dim())?.contains(ring, pp)
}

/// Distinct images of `tuple` under all of `S_n x S_m` acting on the two
/// halves `[0, n)` and `[n, n + m)`.
pub fn orbit<T: Clone + Ord>(tuple: &PointTuple<T>, n: usize, m: usize) -> Result<BTreeSet<PointTuple<T>>> {
    if tuple.len() != n + m {
        return Err(Error::DimensionMismatch(format!("tuple of {} points, expected {}", tuple.len(), n + m)));
    }
    let (xs, ys) = tuple.points.split_at(n);
    let xs = PointTuple { points: xs.to_vec() };
    let ys = PointTuple { points: ys.to_vec() };
    let mut out = BTreeSet::new();
    for s in Permutation::all(n) {
        let sx = s.act_on_tuple(&xs)?;
        for t in Permutation::all(m) {
            let ty = t.act_on_tuple(&ys)?;
            let mut points = sx.points.clone();
            points.extend(ty.points);
            out.insert(PointTuple { points });
        }
    }
    Ok(out)
}
