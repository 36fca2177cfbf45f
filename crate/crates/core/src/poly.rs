//! Sparse multivariate polynomials over a [`Ring`].
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is graded
//! lexicographic with respect to the [`VarTable`] order. Zero coefficients are
//! never stored, so structural equality is mathematical equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Ordered, duplicate-free list of variable names with optional named blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
    blocks: Vec<(String, Vec<usize>)>,
}

impl VarTable {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarTable { names, blocks: Vec::new() })
    }

    /// Declares a named block. Every member must already be a variable.
    pub fn with_block<S: AsRef<str>>(
        mut self,
        name: &str,
        members: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let idx = members
            .into_iter()
            .map(|m| self.index_of(m.as_ref()).ok_or_else(|| Error::UnknownVariable(m.as_ref().to_string())))
            .collect::<Result<Vec<_>>>()?;
        self.blocks.retain(|(n, _)| n != name);
        self.blocks.push((name.to_string(), idx));
        Ok(self)
    }

    pub fn into_shared(self) -> Arc<VarTable> {
        Arc::new(self)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn block(&self, name: &str) -> Option<&[usize]> {
        self.blocks.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }

    pub fn block_names(&self) -> impl Iterator<Item = &str> {
        self.blocks.iter().map(|(n, _)| n.as_str())
    }
}

pub(crate) fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exponent vector indexed by table position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Result of a block-degree query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(Degree),
    Inhomogeneous,
}

pub struct Poly<R: Ring> {
    ring: R,
    table: Arc<VarTable>,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> Clone for Poly<R> {
    fn clone(&self) -> Self {
        Poly { ring: self.ring.clone(), table: self.table.clone(), terms: self.terms.clone() }
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl<R: Ring> Eq for Poly<R> {}

impl<R: Ring> Hash for Poly<R> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.table.names.hash(state);
        self.terms.hash(state);
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::format_poly(self))
    }
}

impl<R: Ring> Poly<R> {
    pub fn zero(ring: &R, table: &Arc<VarTable>) -> Self {
        Poly { ring: ring.clone(), table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &R, table: &Arc<VarTable>, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, table);
        p.add_term(Monomial::one(table.len()), c);
        p
    }

    pub fn one(ring: &R, table: &Arc<VarTable>) -> Self {
        Self::constant(ring, table, ring.one())
    }

    pub fn var(ring: &R, table: &Arc<VarTable>, name: &str) -> Result<Self> {
        let i = table.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::monomial(ring, table, Monomial::var(table.len(), i, 1), ring.one()))
    }

    pub fn monomial(ring: &R, table: &Arc<VarTable>, m: Monomial, c: R::Elem) -> Self {
        assert_eq!(m.0.len(), table.len(), "monomial length must match the table");
        let mut p = Self::zero(ring, table);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(
        ring: &R,
        table: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (Monomial, R::Elem)>,
    ) -> Self {
        let mut p = Self::zero(ring, table);
        for (m, c) in terms {
            assert_eq!(m.0.len(), table.len(), "monomial length must match the table");
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &R::Elem)> {
        self.terms.last_key_value()
    }

    pub fn coefficient(&self, m: &Monomial) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn constant_term(&self) -> R::Elem {
        self.coefficient(&Monomial::one(self.table.len()))
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<R::Elem> {
        match self.terms.len() {
            0 => Some(self.ring.zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |m| Degree::Finite(m.total_degree()))
    }

    pub fn degree_in(&self, var: &str) -> Result<Degree> {
        let i = self.var_index(var)?;
        Ok(self.terms.keys().map(|m| m.0[i]).max().map_or(Degree::NegInfinity, Degree::Finite))
    }

    fn var_index(&self, var: &str) -> Result<usize> {
        self.table.index_of(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if !same_table(&self.table, &other.table) {
            return Err(Error::TableMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.ring.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc: HashMap<Monomial, R::Elem> = HashMap::with_capacity(large.terms.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let c = self.ring.mul(ca, cb);
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(v) => *v = self.ring.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !self.ring.is_zero(c)).collect();
        Ok(Poly { ring: self.ring.clone(), table: self.table.clone(), terms })
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        if self.ring.is_zero(c) {
            return Self::zero(&self.ring, &self.table);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, a)| {
                let v = self.ring.mul(a, c);
                (!self.ring.is_zero(&v)).then(|| (m.clone(), v))
            })
            .collect();
        Poly { ring: self.ring.clone(), table: self.table.clone(), terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring, &self.table);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or [`Error::InexactDivision`].
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        self.check_compatible(divisor)?;
        let Some((lm_b, lc_b)) = divisor.leading_term() else {
            return Err(Error::DivisionByZero);
        };
        let (lm_b, lc_b) = (lm_b.clone(), lc_b.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ring, &self.table);
        while let Some((lm_r, lc_r)) = rem.leading_term() {
            if !lm_b.divides(lm_r) {
                return Err(Error::InexactDivision);
            }
            let c = self.ring.div_exact(lc_r, &lc_b).ok_or(Error::InexactDivision)?;
            let m = lm_b.quotient_of(lm_r);
            for (mb, cb) in &divisor.terms {
                rem.add_term(m.mul(mb), self.ring.neg(&self.ring.mul(&c, cb)));
            }
            quot.add_term(m, c);
        }
        Ok(quot)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: &str) -> Result<Self> {
        let i = self.var_index(var)?;
        let mut out = Self::zero(&self.ring, &self.table);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), self.ring.mul(c, &self.ring.from_int(&BigInt::from(e))));
        }
        Ok(out)
    }

    /// The common degree of every term in the variables of `block`.
    pub fn multidegree(&self, block: &str) -> Result<Homogeneity> {
        let idx = self.table.block(block).ok_or_else(|| Error::UnknownBlock(block.to_string()))?;
        Ok(self.degree_over(idx))
    }

    pub(crate) fn degree_over(&self, idx: &[usize]) -> Homogeneity {
        let mut degs = self.terms.keys().map(|m| idx.iter().map(|&i| m.0[i]).sum::<u32>());
        let Some(first) = degs.next() else {
            return Homogeneity::Homogeneous(Degree::NegInfinity);
        };
        if degs.all(|d| d == first) {
            Homogeneity::Homogeneous(Degree::Finite(first))
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    /// The polynomial multiplying `var^e`, with `var` eliminated.
    pub fn coefficient_of_power(&self, var: &str, e: u32) -> Result<Self> {
        let i = self.var_index(var)?;
        let mut out = Self::zero(&self.ring, &self.table);
        for (m, c) in &self.terms {
            if m.0[i] == e {
                let mut exps = m.0.clone();
                exps[i] = 0;
                out.add_term(Monomial(exps), c.clone());
            }
        }
        Ok(out)
    }

    /// Evaluates at a full positional assignment (one value per table variable).
    pub fn eval_at(&self, values: &[R::Elem]) -> Result<R::Elem> {
        if values.len() != self.table.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} values for {} variables",
                values.len(),
                self.table.len()
            )));
        }
        Ok(self.eval_with(&self.ring, values, |c| c.clone()))
    }

    /// Evaluates at a named assignment. Only variables occurring in the
    /// polynomial need a value.
    pub fn eval(&self, assignment: &BTreeMap<String, R::Elem>) -> Result<R::Elem> {
        for name in assignment.keys() {
            self.var_index(name)?;
        }
        let mut used = vec![false; self.table.len()];
        for m in self.terms.keys() {
            for (u, e) in used.iter_mut().zip(m.0.iter()) {
                *u |= *e > 0;
            }
        }
        let values = (0..self.table.len())
            .map(|i| match assignment.get(self.table.name(i)) {
                Some(v) => Ok(v.clone()),
                None if !used[i] => Ok(self.ring.zero()),
                None => Err(Error::MissingAssignment(self.table.name(i).to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.eval_with(&self.ring, &values, |c| c.clone()))
    }

    /// Evaluates in another ring through a coefficient homomorphism.
    pub fn eval_with<S: Ring>(
        &self,
        target: &S,
        values: &[S::Elem],
        coeff: impl Fn(&R::Elem) -> S::Elem,
    ) -> S::Elem {
        debug_assert_eq!(values.len(), self.table.len());
        let mut powers: Vec<Vec<S::Elem>> = values.iter().map(|v| vec![target.one(), v.clone()]).collect();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = target.mul(pw.last().unwrap(), &values[i]);
                    pw.push(next);
                }
                t = target.mul(&t, &pw[e as usize]);
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    /// Applies a coefficient map, keeping the table.
    pub fn map_coeffs<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> Poly<S> {
        let mut out = Poly::zero(target, &self.table);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Substitutes polynomials for some variables. Substituted values and the
    /// result live over `target`; unsubstituted variables that occur in `self`
    /// are carried over by name and must exist in `target`.
    pub fn substitute(&self, subst: &BTreeMap<String, Poly<R>>, target: &Arc<VarTable>) -> Result<Self> {
        for (name, v) in subst {
            self.var_index(name)?;
            if v.ring != self.ring {
                return Err(Error::RingMismatch);
            }
            if !same_table(&v.table, target) {
                return Err(Error::TableMismatch);
            }
        }
        enum Slot<'a, R: Ring> {
            Keep(usize),
            Replace(&'a Poly<R>),
            Missing,
        }
        let slots: Vec<Slot<'_, R>> = (0..self.table.len())
            .map(|i| {
                let name = self.table.name(i);
                match subst.get(name) {
                    Some(p) => Slot::Replace(p),
                    None => target.index_of(name).map_or(Slot::Missing, Slot::Keep),
                }
            })
            .collect();

        let mut powers: HashMap<(usize, u32), Poly<R>> = HashMap::new();
        let mut out = Self::zero(&self.ring, target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            let mut factor: Option<Poly<R>> = None;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match slots[i] {
                    Slot::Missing => return Err(Error::UnknownVariable(self.table.name(i).to_string())),
                    Slot::Keep(j) => exps[j] += e,
                    Slot::Replace(p) => {
                        let pw = powers.entry((i, e)).or_insert_with(|| p.pow(e));
                        factor = Some(match factor {
                            None => pw.clone(),
                            Some(f) => &f * pw,
                        });
                    }
                }
            }
            let head = Poly::monomial(&self.ring, target, Monomial(exps.into_boxed_slice()), c.clone());
            let term = match factor {
                None => head,
                Some(f) => &head * &f,
            };
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over another table, matching variables by name.
    pub fn embed(&self, target: &Arc<VarTable>) -> Result<Self> {
        self.substitute(&BTreeMap::new(), target)
    }

    /// Renames variables by table position: variable `i` becomes `mapping[i]`.
    /// `mapping` must be a permutation of `0..table.len()`.
    pub fn permute_vars(&self, mapping: &[usize]) -> Result<Self> {
        let n = self.table.len();
        let mut seen = vec![false; n];
        if mapping.len() != n || mapping.iter().any(|&j| j >= n || std::mem::replace(&mut seen[j], true)) {
            return Err(Error::InvalidPermutation(mapping.to_vec()));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; n];
                for (i, &e) in m.0.iter().enumerate() {
                    exps[mapping[i]] = e;
                }
                (Monomial(exps.into_boxed_slice()), c.clone())
            })
            .collect();
        Ok(Poly { ring: self.ring.clone(), table: self.table.clone(), terms })
    }
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<R: Ring> $tr<&Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            /// Panics on ring or table mismatch; use the `checked_*` form to recover.
            fn $method(self, rhs: &Poly<R>) -> Poly<R> {
                self.$checked(rhs).expect("polynomial operands must share ring and table")
            }
        }
        impl<R: Ring> $tr<Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, checked_add);
impl_binop!(Sub, sub, checked_sub);
impl_binop!(Mul, mul, checked_mul);

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), self.ring.neg(c))).collect();
        Poly { ring: self.ring.clone(), table: self.table.clone(), terms }
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

/// The polynomial ring `base[table]`, itself usable as a coefficient ring
/// (for symbolic determinants and binary forms with polynomial coefficients).
#[derive(Clone, Debug)]
pub struct PolyRing<R: Ring> {
    base: R,
    table: Arc<VarTable>,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, table: Arc<VarTable>) -> Self {
        PolyRing { base, table }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn var(&self, name: &str) -> Result<Poly<R>> {
        Poly::var(&self.base, &self.table, name)
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R> {
        Poly::constant(&self.base, &self.table, c)
    }
}

impl<R: Ring> PartialEq for PolyRing<R> {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && same_table(&self.table, &other.table)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R>;

    fn zero(&self) -> Poly<R> {
        Poly::zero(&self.base, &self.table)
    }
    fn one(&self) -> Poly<R> {
        Poly::one(&self.base, &self.table)
    }
    fn from_int(&self, n: &BigInt) -> Poly<R> {
        Poly::constant(&self.base, &self.table, self.base.from_int(n))
    }
    fn add(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        a + b
    }
    fn sub(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        a - b
    }
    fn mul(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        a * b
    }
    fn neg(&self, a: &Poly<R>) -> Poly<R> {
        -a
    }
    fn is_zero(&self, a: &Poly<R>) -> bool {
        a.is_zero()
    }
    fn div_exact(&self, a: &Poly<R>, b: &Poly<R>) -> Option<Poly<R>> {
        a.exact_divide(b).ok()
    }
    fn is_field(&self) -> bool {
        false
    }
    fn fmt_elem(&self, a: &Poly<R>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }
    fn pow(&self, a: &Poly<R>, e: u32) -> Poly<R> {
        a.pow(e)
    }
}
