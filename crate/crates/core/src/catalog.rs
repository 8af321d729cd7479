//! Named ring and order constructions shared by the tests and the CLI.
//!
//! Ring names: `Z<n>`, `Fq:<q>`, `Fqxy:<q>` (alias `F2xy`, `F3xy`),
//! `Fpt2:<p>`, `C1`, and products written `A*B`. Order names: `Z2i`, `Zi`,
//! `Zx2x`.

use std::sync::Arc;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::order::{validate_order, Order, OrderPresentation};
use crate::ring::{make_cyclic, make_product, normalize_presentation, validate_ring, FiniteRing, RingPresentation};

/// `Z/n[t]/(t^m + c_{m-1} t^{m-1} + ... + c_0)` for the monic polynomial with
/// lower coefficients `low`.
pub fn poly_quotient(n: u64, low: &[u64], limits: &Limits) -> Result<Arc<FiniteRing>> {
    let m = low.len();
    if m == 0 {
        return Err(Error::Dimension("polynomial must have positive degree".into()));
    }
    let reduce = |mut coeffs: Vec<u64>| -> Vec<u64> {
        for deg in (m..coeffs.len()).rev() {
            let lead = coeffs[deg] % n;
            coeffs[deg] = 0;
            for (i, &c) in low.iter().enumerate() {
                let sub = lead * (c % n) % n;
                coeffs[deg - m + i] = (coeffs[deg - m + i] + n - sub) % n;
            }
        }
        coeffs.truncate(m);
        coeffs
    };
    let mut unit = vec![0; m];
    unit[0] = 1 % n;
    let mut p = RingPresentation::zero_products(vec![n; m], unit);
    for a in 0..m {
        for b in a..m {
            let mut c = vec![0u64; 2 * m];
            c[a + b] = 1;
            p.set_product(a, b, reduce(c));
        }
    }
    Ok(Arc::new(validate_ring(p, limits)?))
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

/// Remainder of `a` modulo the monic `b`, coefficients ascending, over `F_p`.
fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    while a.len() > db {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let off = a.len() - db;
            for (i, &c) in b[..db].iter().enumerate() {
                a[off + i] = (a[off + i] + p - lead * c % p) % p;
            }
        }
    }
    a
}

fn monic_polys(p: u64, deg: u32) -> impl Iterator<Item = Vec<u64>> {
    (0..p.pow(deg)).map(move |mut code| {
        let mut c: Vec<u64> = (0..deg)
            .map(|_| {
                let d = code % p;
                code /= p;
                d
            })
            .collect();
        c.push(1);
        c
    })
}

/// Smallest monic irreducible of degree `e` over `F_p`, by trial division.
fn irreducible(p: u64, e: u32) -> Vec<u64> {
    monic_polys(p, e)
        .find(|f| (1..=e / 2).all(|d| monic_polys(p, d).all(|g| poly_rem(f.clone(), &g, p).iter().any(|&c| c != 0))))
        .expect("irreducible polynomials exist in every degree")
}

/// The field with `q` elements.
pub fn finite_field(q: u64, limits: &Limits) -> Result<Arc<FiniteRing>> {
    let (p, e) = prime_power(q).ok_or_else(|| Error::UnknownCatalog(format!("Fq:{q} (not a prime power)")))?;
    if e == 1 {
        return make_cyclic(p, limits);
    }
    let f = irreducible(p, e);
    poly_quotient(p, &f[..e as usize], limits)
}

/// `R[x_1, ..., x_m] / (x_1, ..., x_m)^2`: the trivial extension of `R` by `R^m`.
pub fn square_zero_extension(base: &FiniteRing, m: usize, limits: &Limits) -> Result<Arc<FiniteRing>> {
    let s = base.rank();
    let moduli: Vec<u64> = (0..=m).flat_map(|_| base.invariant_factors().iter().copied()).collect();
    let products = |a: usize, b: usize| -> Vec<u64> {
        let (block_a, i) = (a / s, a % s);
        let (block_b, j) = (b / s, b % s);
        let mut out = vec![0u64; (m + 1) * s];
        if block_a != 0 && block_b != 0 {
            return out;
        }
        let block = block_a.max(block_b);
        let prod = base.coords(base.mul(base.basis(i), base.basis(j)));
        for (l, &c) in prod.iter().enumerate() {
            out[block * s + l] = c as u64;
        }
        out
    };
    let mut unit = vec![0u64; (m + 1) * s];
    for (l, &c) in base.coords(base.one()).iter().enumerate() {
        unit[l] = c as u64;
    }
    if moduli.windows(2).all(|w| w[1] % w[0] == 0) {
        let mut p = RingPresentation::zero_products(moduli, unit);
        for a in 0..(m + 1) * s {
            for b in a..(m + 1) * s {
                p.set_product(a, b, products(a, b));
            }
        }
        return Ok(Arc::new(validate_ring(p, limits)?));
    }
    normalize_presentation(&moduli, &products, &unit, limits)
}

/// `F_p[x_1, ..., x_v] / (monomials outside `standard`)`; `standard` must be
/// closed under division and start with the constant monomial.
pub fn monomial_algebra(p: u64, standard: &[Vec<u32>], limits: &Limits) -> Result<Arc<FiniteRing>> {
    let k = standard.len();
    let mut unit = vec![0u64; k];
    unit[0] = 1;
    let mut pres = RingPresentation::zero_products(vec![p; k], unit);
    for a in 0..k {
        for b in a..k {
            let mono: Vec<u32> = standard[a].iter().zip(&standard[b]).map(|(x, y)| x + y).collect();
            let mut c = vec![0u64; k];
            if let Some(pos) = standard.iter().position(|s| *s == mono) {
                c[pos] = 1;
            }
            pres.set_product(a, b, c);
        }
    }
    Ok(Arc::new(validate_ring(pres, limits)?))
}

/// `F_q[x, y] / (x, y)^2`, a local ring whose socle is 2-dimensional.
pub fn socle_ring(q: u64, limits: &Limits) -> Result<Arc<FiniteRing>> {
    square_zero_extension(&*finite_field(q, limits)?, 2, limits)
}

/// `F_2[x, y] / (x, y)^2` with basis `(1, x, y)`.
pub fn f2xy(limits: &Limits) -> Result<Arc<FiniteRing>> {
    socle_ring(2, limits)
}

/// `F_p[t] / (t^2)`.
pub fn dual_numbers(p: u64, limits: &Limits) -> Result<Arc<FiniteRing>> {
    poly_quotient(p, &[0, 0], limits)
}

/// `F_2[x, y] / (x^2, y^2)`: local of order 16 with unique minimal ideal
/// `(xy)`, and the quotient by it is `F_2[x, y] / (x, y)^2`.
pub fn c1(limits: &Limits) -> Result<Arc<FiniteRing>> {
    monomial_algebra(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]], limits)
}

/// Resolves a ring name (without the `catalog:` prefix).
pub fn ring(name: &str, limits: &Limits) -> Result<Arc<FiniteRing>> {
    if name.contains('*') {
        let factors = name
            .split('*')
            .map(|n| ring(n.trim(), limits))
            .collect::<Result<Vec<_>>>()?;
        return Ok(make_product(&factors, limits)?.ring);
    }
    let unknown = || Error::UnknownCatalog(name.to_string());
    let num = |s: &str| s.parse::<u64>().map_err(|_| unknown());
    match name {
        "F2xy" => return socle_ring(2, limits),
        "F3xy" => return socle_ring(3, limits),
        "C1" => return c1(limits),
        _ => {}
    }
    if let Some(q) = name.strip_prefix("Fqxy:") {
        return socle_ring(num(q)?, limits);
    }
    if let Some(q) = name.strip_prefix("Fq:") {
        return finite_field(num(q)?, limits);
    }
    if let Some(p) = name.strip_prefix("Fpt2:") {
        return dual_numbers(num(p)?, limits);
    }
    if let Some(n) = name.strip_prefix('Z') {
        return make_cyclic(num(n)?, limits);
    }
    Err(unknown())
}

/// Quadratic order `Z[t]` with `t^2 = a + b t`.
pub fn quadratic_order(a: i64, b: i64, limits: &Limits) -> Result<Order> {
    let mut p = OrderPresentation::identity_table(2);
    p.set_product(1, 1, vec![a.into(), b.into()]);
    validate_order(p, limits)
}

/// Resolves an order name (without the `catalog:` prefix).
pub fn order(name: &str, limits: &Limits) -> Result<Order> {
    match name {
        // t = 2i, t^2 = -4
        "Z2i" => quadratic_order(-4, 0, limits),
        "Zi" => quadratic_order(-1, 0, limits),
        "Zx2x" => quadratic_order(0, 1, limits),
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

/// The base rings of the acceptance catalog: `Z/n` for `2 <= n <= 64`, the
/// fields `F_q` for `q` in `{2,3,4,5,7,8,9}`, `F_p[t]/(t^2)` and
/// `F_p[x,y]/(x,y)^2` for `p` in `{2,3}`, and `C1`.
pub fn base_rings(limits: &Limits) -> Result<Vec<(String, Arc<FiniteRing>)>> {
    let mut out = Vec::new();
    for n in 2..=64 {
        out.push((format!("Z{n}"), make_cyclic(n, limits)?));
    }
    for q in [2, 3, 4, 5, 7, 8, 9] {
        out.push((format!("Fq:{q}"), finite_field(q, limits)?));
    }
    for p in [2, 3] {
        out.push((format!("Fpt2:{p}"), dual_numbers(p, limits)?));
        out.push((format!("Fqxy:{p}"), socle_ring(p, limits)?));
    }
    out.push(("C1".to_string(), c1(limits)?));
    Ok(out)
}

/// Base rings followed by every unordered pair product (with repetition)
/// whose carrier fits `limits`.
pub fn full_catalog(limits: &Limits) -> Result<Vec<(String, Arc<FiniteRing>)>> {
    let base = base_rings(limits)?;
    let mut out = base.clone();
    for i in 0..base.len() {
        for j in i..base.len() {
            if base[i].1.order() * base[j].1.order() > limits.carrier_bound {
                continue;
            }
            let prod = make_product(&[base[i].1.clone(), base[j].1.clone()], limits)?;
            out.push((format!("{}*{}", base[i].0, base[j].0), prod.ring));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{all_ideals, is_chain};

    #[test]
    fn fields_are_fields() {
        let l = Limits::default();
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = finite_field(q, &l).unwrap();
            assert_eq!(f.order() as u64, q);
            // every nonzero element is a unit
            for x in 1..f.order() {
                assert!(f.elements().any(|y| f.mul(x, y) == f.one()), "q={q} x={x}");
            }
        }
        assert!(finite_field(6, &l).is_err());
    }

    #[test]
    fn small_constructions_pass_exhaustive_axioms() {
        let l = Limits::default();
        for name in ["F2xy", "F3xy", "C1", "Fpt2:3", "Fq:4", "Fqxy:4", "Z4*F2xy"] {
            let r = ring(name, &l).unwrap();
            if r.order() <= 32 {
                r.verify_axioms_exhaustive().unwrap();
            }
        }
    }

    #[test]
    fn f2xy_basis_layout() {
        let r = f2xy(&Limits::default()).unwrap();
        assert_eq!(r.invariant_factors(), &[2, 2, 2]);
        assert_eq!(r.one(), 1);
        assert_eq!(r.basis(1), 2);
        assert_eq!(r.basis(2), 4);
    }

    #[test]
    fn c1_has_unique_minimal_ideal() {
        let r = c1(&Limits::default()).unwrap();
        assert_eq!(r.order(), 16);
        let ideals = all_ideals(&r);
        assert_eq!(crate::ideal::minimal_ideals(&ideals).len(), 1);
        assert!(!is_chain(&r));
    }

    #[test]
    fn square_zero_extension_of_non_field() {
        // Z/4[x]/(x^2) has additive group (Z/4)^2, already a chain.
        let z4 = make_cyclic(4, &Limits::default()).unwrap();
        let r = square_zero_extension(&z4, 1, &Limits::default()).unwrap();
        assert_eq!(r.order(), 16);
        r.verify_axioms_exhaustive().unwrap();
    }

    #[test]
    fn catalog_names() {
        let l = Limits::default();
        assert_eq!(ring("Z12", &l).unwrap().order(), 12);
        assert_eq!(ring("Z4*F2xy", &l).unwrap().order(), 32);
        assert!(ring("Q7", &l).is_err());
        assert_eq!(order("Z2i", &l).unwrap().rank(), 2);
        assert!(order("Zsqrt5", &l).is_err());
    }
}
