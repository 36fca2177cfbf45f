//! Exhaustive point-level checks over small prime fields.
//!
//! Every scan enumerates a finite set of points, partitions it into
//! contiguous index chunks processed in parallel, and merges partial results
//! in index order so reports do not depend on scheduling.
//!
//! Surjectivity is only checked on the split locus: forms that factor into
//! `F_q`-rational linear factors. Points of a locus whose forms do not split
//! are counted in [`ScanReport::non_split`] and otherwise ignored.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::resultant::{gcd_binary_forms, resultant, BinaryForm};
use crate::ring::{PrimeField, Ring};
use crate::symprod::{orbit, viete, DiscriminantLocus, PointTuple, ProjPoint, ResultantLocus};

/// Largest number of points a single scan may enumerate.
pub const SCAN_BUDGET: u64 = 10_000_000;

const CHUNK: usize = 256;

/// Outcome of a scan. Field names are the JSON keys.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub q: u32,
    pub n: usize,
    pub m: Option<usize>,
    pub points_scanned: u64,
    pub violations: u64,
    pub split_covered: u64,
    pub split_missed: u64,
    pub fiber_count: u64,
    /// Orbit size to number of fibers with that size.
    pub orbit_histogram: BTreeMap<usize, u64>,
    pub elapsed_ms: u64,
    /// Locus points whose forms do not split over `F_q`.
    #[serde(skip)]
    pub non_split: u64,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.split_missed == 0
    }

    /// The report with timing cleared, for comparing runs.
    pub fn without_timing(&self) -> Self {
        ScanReport { elapsed_ms: 0, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The `q + 1` points of `P^1(F_q)`: `(1:a)` for `a = 0..q-1`, then `(0:1)`.
pub fn enumerate_p1(q: u32) -> Result<Vec<ProjPoint<u32>>> {
    enumerate_pn(q, 1)
}

/// All normalized points of `P^n(F_q)`, ordered by the position of the
/// leading 1 and then lexicographically.
pub fn enumerate_pn(q: u32, n: usize) -> Result<Vec<ProjPoint<u32>>> {
    let field = PrimeField::new(q)?;
    let size = pn_size(q, n).filter(|s| *s <= SCAN_BUDGET).ok_or_else(|| budget_error(format!("|P^{n}(F_{q})|")))?;
    let mut out = Vec::with_capacity(size as usize);
    for lead in 0..=n {
        let tail = n - lead;
        let count = (q as u64).pow(tail as u32);
        for idx in 0..count {
            let mut coords = vec![0u32; n + 1];
            coords[lead] = 1;
            let mut r = idx;
            for c in coords[lead + 1..].iter_mut().rev() {
                *c = (r % q as u64) as u32;
                r /= q as u64;
            }
            out.push(ProjPoint::new(&field, coords)?);
        }
    }
    Ok(out)
}

fn pn_size(q: u32, n: usize) -> Option<u64> {
    (0..=n as u32).try_fold(0u64, |acc, k| acc.checked_add((q as u64).checked_pow(k)?))
}

fn budget_error(what: String) -> Error {
    Error::GuardExceeded(format!("{what} exceeds the scan budget of {SCAN_BUDGET}"))
}

/// `(q + 1)^len`, the number of tuples in `(P^1(F_q))^len`, if within budget.
fn tuple_budget(q: u32, len: usize) -> Result<u64> {
    (q as u64 + 1)
        .checked_pow(len as u32)
        .filter(|t| *t <= SCAN_BUDGET)
        .ok_or_else(|| budget_error(format!("|P^1(F_{q})|^{len}")))
}

fn check_params(q: u32, degrees: &[usize]) -> Result<PrimeField> {
    let field = PrimeField::new(q)?;
    for &d in degrees {
        if d == 0 {
            return Err(Error::DegreeTooSmall { got: 0, min: 1 });
        }
        if q as usize <= d {
            return Err(Error::GuardExceeded(format!("field size {q} must exceed degree {d}")));
        }
    }
    Ok(field)
}

/// Checks `Res(f, g) = 0` against a nonconstant gcd for every pair
/// `(f, g)` in `P^n(F_q) x P^m(F_q)`.
pub fn scan_resultant_equiv(q: u32, n: usize, m: usize) -> Result<ScanReport> {
    let start = Instant::now();
    let field = check_params(q, &[n, m])?;
    let total = pn_size(q, n)
        .zip(pn_size(q, m))
        .and_then(|(a, b)| a.checked_mul(b))
        .filter(|t| *t <= SCAN_BUDGET)
        .ok_or_else(|| budget_error(format!("|P^{n}(F_{q}) x P^{m}(F_{q})|")))?;
    let fs = enumerate_pn(q, n)?;
    let gs = enumerate_pn(q, m)?;
    let violations = fs
        .par_iter()
        .map(|f| {
            let f = f.as_form();
            let mut bad = 0u64;
            for g in &gs {
                let g = g.as_form();
                let vanishes = resultant(&field, &f, &g)? == 0;
                let common = gcd_binary_forms(&field, &f, &g)?.degree() >= 1;
                bad += u64::from(vanishes != common);
            }
            Ok(bad)
        })
        .collect::<Result<Vec<u64>>>()?
        .into_iter()
        .sum();
    Ok(ScanReport {
        q,
        n,
        m: Some(m),
        points_scanned: total,
        violations,
        elapsed_ms: start.elapsed().as_millis() as u64,
        ..ScanReport::default()
    })
}

/// Checks the Viete product map `(P^1)^n x (P^1)^m -> P^n x P^m` against
/// the resultant locus: pullback agreement in both directions, coverage of
/// the split locus, and fibers that are single `S_n x S_m` orbits.
pub fn scan_quotient(q: u32, n: usize, m: usize) -> Result<ScanReport> {
    let start = Instant::now();
    let field = check_params(q, &[n, m])?;
    tuple_budget(q, n + m)?;
    let locus = ResultantLocus::new(n, m)?;
    let check = |image: &[ProjPoint<u32>]| locus.contains(&field, &image[0], &image[1]);
    let on_tuple = |t: &PointTuple<u32>| {
        let (x, y) = split_pairs(t, n);
        x.iter().any(|a| y.iter().any(|b| field.mul(&a[0], &b[1]) == field.mul(&a[1], &b[0])))
    };
    let locus_points = {
        let mut pts = Vec::new();
        for pv in enumerate_pn(q, n)? {
            for pw in enumerate_pn(q, m)? {
                if locus.contains(&field, &pv, &pw)? {
                    pts.push(vec![pv.clone(), pw]);
                }
            }
        }
        pts
    };
    let mut report = quotient_scan(&field, &[n, m], on_tuple, check, locus_points)?;
    report.m = Some(m);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Checks the Viete map `(P^1)^n -> P^n` against the discriminant locus.
pub fn scan_disc_quotient(q: u32, n: usize) -> Result<ScanReport> {
    let start = Instant::now();
    let field = check_params(q, &[n])?;
    if n < 2 {
        return Err(Error::DegreeTooSmall { got: n, min: 2 });
    }
    tuple_budget(q, n)?;
    let locus = DiscriminantLocus::new(n)?;
    let check = |image: &[ProjPoint<u32>]| locus.contains(&field, &image[0]);
    let on_tuple = |t: &PointTuple<u32>| {
        let pts = t.points();
        (0..pts.len()).any(|i| pts[i + 1..].contains(&pts[i]))
    };
    let mut locus_points = Vec::new();
    for pp in enumerate_pn(q, n)? {
        if locus.contains(&field, &pp)? {
            locus_points.push(vec![pp]);
        }
    }
    let mut report = quotient_scan(&field, &[n], on_tuple, check, locus_points)?;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn split_pairs(t: &PointTuple<u32>, n: usize) -> (Vec<[u32; 2]>, Vec<[u32; 2]>) {
    let mut pairs = t.pairs();
    let ys = pairs.split_off(n);
    (pairs, ys)
}

type Image = Vec<ProjPoint<u32>>;

#[derive(Default)]
struct Partial {
    violations: u64,
    fibers: BTreeMap<Image, Vec<PointTuple<u32>>>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.violations += other.violations;
        for (k, mut v) in other.fibers {
            self.fibers.entry(k).or_default().append(&mut v);
        }
        self
    }
}

/// Shared driver. `blocks` are the tuple block sizes, `on_tuple` decides
/// membership of a tuple in the pullback, `on_image` membership of its
/// image in the locus, and `locus_points` lists the locus.
fn quotient_scan(
    field: &PrimeField,
    blocks: &[usize],
    on_tuple: impl Fn(&PointTuple<u32>) -> bool + Sync,
    on_image: impl Fn(&[ProjPoint<u32>]) -> Result<bool> + Sync,
    locus_points: Vec<Image>,
) -> Result<ScanReport> {
    let q = field.modulus();
    let len: usize = blocks.iter().sum();
    let total = tuple_budget(q, len)?;
    let p1 = enumerate_p1(q)?;

    let chunks: Vec<(u64, u64)> =
        (0..total).step_by(CHUNK).map(|lo| (lo, (lo + CHUNK as u64).min(total))).collect();
    let partials = chunks
        .par_iter()
        .map(|&(lo, hi)| {
            let mut part = Partial::default();
            for idx in lo..hi {
                let tuple = decode(&p1, idx, len);
                let image = image_of(field, &tuple, blocks);
                let upstairs = on_tuple(&tuple);
                if upstairs != on_image(&image)? {
                    part.violations += 1;
                }
                if upstairs {
                    part.fibers.entry(image).or_default().push(tuple);
                }
            }
            Ok(part)
        })
        .collect::<Result<Vec<Partial>>>()?;
    let merged = partials.into_iter().fold(Partial::default(), Partial::merge);

    let mut report = ScanReport { q, n: blocks[0], points_scanned: total, violations: merged.violations, ..ScanReport::default() };
    let (n, m) = (blocks[0], blocks.get(1).copied().unwrap_or(0));
    for fiber in merged.fibers.values() {
        let orb = orbit(&fiber[0], n, m)?;
        let mut sorted = fiber.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != fiber.len() || !sorted.iter().eq(orb.iter()) {
            report.violations += 1;
        }
        report.fiber_count += 1;
        *report.orbit_histogram.entry(orb.len()).or_default() += 1;
    }
    for point in &locus_points {
        if point.iter().zip(blocks).all(|(p, &d)| splits(field, p, d)) {
            if merged.fibers.contains_key(point) {
                report.split_covered += 1;
            } else {
                report.split_missed += 1;
            }
        } else {
            report.non_split += 1;
        }
    }
    Ok(report)
}

fn decode(p1: &[ProjPoint<u32>], mut idx: u64, len: usize) -> PointTuple<u32> {
    let base = p1.len() as u64;
    let mut points = vec![p1[0].clone(); len];
    for slot in points.iter_mut().rev() {
        *slot = p1[(idx % base) as usize].clone();
        idx /= base;
    }
    PointTuple::new(points).expect("points of P^1")
}

fn image_of(field: &PrimeField, tuple: &PointTuple<u32>, blocks: &[usize]) -> Image {
    let mut rest = tuple.points();
    blocks
        .iter()
        .map(|&d| {
            let (head, tail) = rest.split_at(d);
            rest = tail;
            viete(field, &PointTuple::new(head.to_vec()).expect("points of P^1"))
        })
        .collect()
}

/// Whether the form with Viete coordinates `p` has `degree` roots in
/// `P^1(F_q)` counted with multiplicity.
fn splits(field: &PrimeField, p: &ProjPoint<u32>, degree: usize) -> bool {
    let signed: Vec<u32> = p.coords().iter().enumerate().map(|(k, c)| if k % 2 == 0 { *c } else { field.neg(c) }).collect();
    root_count(field, &BinaryForm::new(signed).expect("nonempty")) == degree
}

/// Number of roots in `P^1(F_q)` with multiplicity.
pub fn root_count(field: &PrimeField, f: &BinaryForm<u32>) -> usize {
    let c = f.coeffs();
    let at_infinity = c.iter().take_while(|x| **x == 0).count();
    // f(Z, 1) in descending powers of Z
    let mut g: Vec<u32> = c[at_infinity..].to_vec();
    let mut count = at_infinity;
    for a in field.elements() {
        while g.len() > 1 {
            let (quot, rem) = synthetic_division(field, &g, a);
            if rem != 0 {
                break;
            }
            g = quot;
            count += 1;
        }
    }
    count
}

fn synthetic_division(field: &PrimeField, g: &[u32], a: u32) -> (Vec<u32>, u32) {
    let mut quot = Vec::with_capacity(g.len() - 1);
    let mut acc = 0;
    for c in g {
        acc = field.add(&field.mul(&acc, &a), c);
        quot.push(acc);
    }
    let rem = quot.pop().expect("nonempty");
    (quot, rem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_enumeration() {
        let p = enumerate_p1(5).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p[0].coords(), &[1, 0]);
        assert_eq!(p[5].coords(), &[0, 1]);
        assert_eq!(enumerate_p1(7).unwrap().len(), 8);
        assert_eq!(enumerate_pn(5, 2).unwrap().len(), 31);
        assert_eq!(enumerate_pn(7, 2).unwrap().len(), 57);
        assert!(enumerate_p1(4).is_err());
    }

    #[test]
    fn resultant_equivalence() {
        let r = scan_resultant_equiv(5, 1, 1).unwrap();
        assert_eq!((r.points_scanned, r.violations), (36, 0));
        let r = scan_resultant_equiv(5, 2, 2).unwrap();
        assert_eq!((r.points_scanned, r.violations), (961, 0));
        let r = scan_resultant_equiv(7, 2, 1).unwrap();
        assert_eq!((r.points_scanned, r.violations), (456, 0));
        assert!(scan_resultant_equiv(3, 3, 1).is_err());
    }

    #[test]
    fn quotient_small() {
        let r = scan_quotient(5, 1, 1).unwrap();
        assert_eq!(r.points_scanned, 36);
        assert_eq!(r.violations, 0);
        assert_eq!(r.fiber_count, 6);
        assert_eq!(r.orbit_histogram, BTreeMap::from([(1, 6)]));
        assert_eq!((r.split_covered, r.split_missed), (6, 0));

        let r = scan_quotient(5, 2, 1).unwrap();
        assert_eq!((r.violations, r.split_missed), (0, 0));
    }

    #[test]
    fn quotient_two_two() {
        let r = scan_quotient(5, 2, 2).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.orbit_histogram.keys().all(|k| [1, 2, 4].contains(k)));
        assert_eq!(r.orbit_histogram.values().sum::<u64>(), r.fiber_count);
        assert!(r.non_split > 0);
    }

    #[test]
    fn discriminant_quotient() {
        let r = scan_disc_quotient(5, 2).unwrap();
        assert_eq!(r.points_scanned, 36);
        assert_eq!(r.fiber_count, 6);
        assert_eq!(r.orbit_histogram, BTreeMap::from([(1, 6)]));
        assert_eq!((r.violations, r.split_covered, r.split_missed, r.non_split), (0, 6, 0, 0));

        let r = scan_disc_quotient(7, 3).unwrap();
        assert_eq!(r.points_scanned, 512);
        assert!(r.passed());
        let r = scan_disc_quotient(5, 3).unwrap();
        assert!(r.passed());
        assert!(r.orbit_histogram.keys().all(|k| 6 % k == 0));
    }

    #[test]
    fn roots_with_multiplicity() {
        let f5 = PrimeField::new(5).unwrap();
        let form = |c: &[u32]| BinaryForm::new(c.to_vec()).unwrap();
        assert_eq!(root_count(&f5, &form(&[1, 0, 2])), 0);
        assert_eq!(root_count(&f5, &form(&[1, 2, 1])), 2);
        assert_eq!(root_count(&f5, &form(&[0, 0, 1])), 2);
        assert_eq!(root_count(&f5, &form(&[0, 1, 0])), 2);
        assert_eq!(root_count(&f5, &form(&[1, 0, 0, 0])), 3);
    }

    #[test]
    fn json_keys() {
        let r = scan_quotient(5, 1, 1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = vec![
            "q", "n", "m", "points_scanned", "violations", "split_covered", "split_missed", "fiber_count",
            "orbit_histogram", "elapsed_ms",
        ];
        expected.sort();
        let mut keys = keys;
        keys.sort();
        assert_eq!(keys, expected);
    }

    #[test]
    fn deterministic() {
        let a = scan_quotient(5, 2, 1).unwrap();
        let b = scan_quotient(5, 2, 1).unwrap();
        assert_eq!(a.without_timing(), b.without_timing());
    }
}
