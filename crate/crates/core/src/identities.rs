//! Symbolic checks of the resultant, discriminant and invariant-theory
//! identities. Each check returns a short summary or
//! [`Error::IdentityFailed`].

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, PolyRing, VarTable};
use crate::resultant::{
    discriminant_symbolic, form_table, generic_form, pair_table, res_product_form_symbolic, resultant,
    resultant_symbolic,
};
use crate::ring::{Integers, Rationals, Ring};
use crate::symprod::{
    check_independence, ehsp, ehsp_in, expand_generators, express_in_ehsp, generator_table, is_symmetric,
    xn_defining_poly,
};

/// Largest `n` for which [`verify_resdisc`] also runs the point-coordinate form.
pub const FACTORED_DISC_MAX: usize = 4;

fn fail(msg: String) -> Error {
    Error::IdentityFailed(msg)
}

/// The Sylvester resultant of generic forms becomes
/// `prod_{i,j} (x_{1i} y_{0j} - x_{0i} y_{1j})` under
/// `v_k -> (-1)^k p_k(x)`, `w_l -> (-1)^l p_l(y)`.
pub fn verify_resth(n: usize, m: usize) -> Result<String> {
    let res = resultant_symbolic(&Integers, n, m)?;
    let target = pair_table(&[("x", n), ("y", m)]).into_shared();
    let px = ehsp_in(&Integers, &target, "x", n)?;
    let py = ehsp_in(&Integers, &target, "y", m)?;
    let mut subst = BTreeMap::new();
    for (k, p) in px.iter().enumerate() {
        subst.insert(format!("v{k}"), p.scale(&Integers.sign_pow(k)));
    }
    for (l, p) in py.iter().enumerate() {
        subst.insert(format!("w{l}"), p.scale(&Integers.sign_pow(l)));
    }
    let lhs = res.substitute(&subst, &target)?;
    let rhs = res_product_form_symbolic(&Integers, n, m)?.embed(&target)?;
    if lhs != rhs {
        return Err(fail(format!("resultant product formula for (n, m) = ({n}, {m})")));
    }
    Ok(format!("Res({n},{m}) = product formula ({} terms)", lhs.num_terms()))
}

/// Elementary symmetric polynomials `e_0..e_n` in the given variables, by
/// subset enumeration.
fn elementary<R: Ring>(base: &R, table: &Arc<VarTable>, vars: &[String]) -> Result<Vec<Poly<R>>> {
    let ts = vars.iter().map(|v| Poly::var(base, table, v)).collect::<Result<Vec<_>>>()?;
    Ok((0..=ts.len())
        .map(|k| {
            ts.iter().combinations(k).fold(Poly::zero(base, table), |acc, s| {
                &acc + &s.into_iter().fold(Poly::one(base, table), |a, t| &a * t)
            })
        })
        .collect())
}

/// `Res(f, f') = p0 * disc(f)` for the generic form, and
/// `Res(f, f') = (-1)^(n(n-1)/2) v0 D` where `D = v0^(2n-2) prod_{i<j} (t_i - t_j)^2`
/// after `p_k -> (-1)^k v0 e_k(t)`. For `n <= FACTORED_DISC_MAX` also checks
/// `(-1)^(n(n-1)/2) disc(p(x)) = prod_{i<j} (x_{1i} x_{0j} - x_{0i} x_{1j})^2`.
pub fn verify_resdisc(n: usize) -> Result<String> {
    let disc = discriminant_symbolic(&Integers, n)?;
    let pt = form_table("p", n);
    let ring = PolyRing::new(Integers, pt.clone());
    let f = generic_form(&Integers, &pt, "p", n)?;
    let res = resultant(&ring, &f, &f.derivative(&ring)?)?;
    let p0 = Poly::var(&Integers, &pt, "p0")?;
    if res != &p0 * &disc {
        return Err(fail(format!("Res(f, f') = p0 * disc for n = {n}")));
    }

    let sign = Integers.sign_pow(n * (n - 1) / 2);
    let ts: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    let names: Vec<String> = std::iter::once("v0".to_string()).chain(ts.iter().cloned()).collect();
    let rt = VarTable::new(&names)?.into_shared();
    let v0 = Poly::var(&Integers, &rt, "v0")?;
    let e = elementary(&Integers, &rt, &ts)?;
    let subst: BTreeMap<String, Poly<Integers>> = e
        .iter()
        .enumerate()
        .map(|(k, ek)| (format!("p{k}"), (&v0 * ek).scale(&Integers.sign_pow(k))))
        .collect();
    let lhs = res.substitute(&subst, &rt)?;
    let mut d = v0.pow((2 * n - 2) as u32);
    for i in 0..n {
        for j in i + 1..n {
            let diff = &Poly::var(&Integers, &rt, &ts[i])? - &Poly::var(&Integers, &rt, &ts[j])?;
            d = &d * &diff.pow(2);
        }
    }
    if lhs != (&v0 * &d).scale(&sign) {
        return Err(fail(format!("Res(f, f') against the root formula for n = {n}")));
    }

    let mut summary = format!("Res(f,f') = p0*disc = sign*v0*D for n = {n}");
    if n <= FACTORED_DISC_MAX {
        let xs = ehsp(&Integers, n)?;
        let xt = xs[0].table().clone();
        let subst: BTreeMap<String, Poly<Integers>> =
            xs.into_iter().enumerate().map(|(k, p)| (format!("p{k}"), p)).collect();
        let lhs = disc.substitute(&subst, &xt)?.scale(&sign);
        if lhs != xn_defining_poly(&Integers, n)?.expand() {
            return Err(fail(format!("factored discriminant for n = {n}")));
        }
        summary.push_str("; factored form holds");
    }
    Ok(summary)
}

/// Jacobian certificate of algebraic independence with three random points.
pub fn verify_ind(n: usize) -> Result<String> {
    if check_independence(n, 3)? {
        Ok(format!("p_0..p_{n} algebraically independent (Jacobian rank {})", n + 1))
    } else {
        Err(fail(format!("no full-rank Jacobian found for n = {n}")))
    }
}

/// Every `p_k` is symmetric, and random polynomials in the generators
/// survive expansion followed by [`express_in_ehsp`].
pub fn verify_inv(n: usize) -> Result<String> {
    for (k, p) in ehsp(&Integers, n)?.iter().enumerate() {
        if !is_symmetric(p, n)? {
            return Err(fail(format!("p_{k} is not symmetric for n = {n}")));
        }
    }
    let mut summary = format!("p_0..p_{n} symmetric");
    if n <= 3 {
        let trials = 20;
        inv_roundtrip(n, trials, 3, 0x1a2b + n as u64)?;
        summary.push_str(&format!("; {trials} random round trips"));
    }
    Ok(summary)
}

/// A random polynomial in `P0..Pn` of total degree at most `max_degree`
/// with small integer coefficients.
pub fn random_generator_poly(rng: &mut impl Rng, n: usize, max_degree: u32) -> Poly<Rationals> {
    let pt = generator_table(n);
    let mut p = Poly::zero(&Rationals, &pt);
    for _ in 0..rng.gen_range(1..=5) {
        let mut exps = vec![0u32; n + 1];
        for _ in 0..rng.gen_range(0..=max_degree) {
            exps[rng.gen_range(0..=n)] += 1;
        }
        p.add_term(Monomial::from_exponents(exps), Rationals.from_i64(rng.gen_range(-9..=9)));
    }
    p
}

/// Expands `count` random generator polynomials and re-expresses them.
pub fn inv_roundtrip(n: usize, count: usize, max_degree: u32, seed: u64) -> Result<()> {
    let gens = ehsp(&Rationals, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let q = random_generator_poly(&mut rng, n, max_degree);
        let back = express_in_ehsp(&expand_generators(&q, &gens)?, n)?;
        if back != q {
            return Err(fail(format!("round trip of {q} gave {back}")));
        }
    }
    Ok(())
}
