//! Idempotents, decomposition into local factors, and the classification
//! predicate "direct product of local rings with linearly ordered ideals".

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::ideal::{all_ideals, ideal_generated, ideals_form_chain, Ideal};
use crate::ring::{make_quotient, Element, FiniteRing, RingHom};

/// All `e` with `e * e = e`, in carrier order.
pub fn idempotents(ring: &FiniteRing) -> Vec<usize> {
    ring.elements().filter(|&e| ring.mul(e, e) == e).collect()
}

/// Nonzero idempotents with no nonzero idempotent strictly below them
/// (`f <= e` iff `f e = f`).
pub fn primitive_idempotents(ring: &FiniteRing) -> Vec<usize> {
    let all = idempotents(ring);
    all.iter()
        .copied()
        .filter(|&e| e != 0)
        .filter(|&e| !all.iter().any(|&f| f != 0 && f != e && ring.mul(f, e) == f))
        .collect()
}

/// `R` realized as the product of its local factors `e_i R`.
#[derive(Debug, Clone)]
pub struct LocalDecomposition {
    pub idempotents: Vec<usize>,
    pub factors: Vec<Arc<FiniteRing>>,
    /// `projections[i]` maps `R` onto factor `i`, i.e. `x -> e_i x`.
    pub projections: Vec<RingHom>,
}

impl LocalDecomposition {
    pub fn idempotent_elements(&self, ring: &FiniteRing) -> Vec<Element> {
        self.idempotents.iter().map(|&e| ring.element(e)).collect()
    }
}

/// Decomposes `ring` along its primitive idempotents. Factor `i` is built as
/// `R / (1 - e_i) R`, which is isomorphic to `e_i R` with unit `e_i`. The
/// combined map `R -> prod factors` is checked to be a bijection.
pub fn local_decomposition(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<LocalDecomposition> {
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    let idem = primitive_idempotents(ring);
    let mut factors = Vec::with_capacity(idem.len());
    let mut projections = Vec::with_capacity(idem.len());
    for &e in &idem {
        let complement = ring.sub(ring.one(), e);
        let kernel = ideal_generated(ring, &[complement]);
        let (factor, pi) = make_quotient(ring, &kernel, limits)?;
        factors.push(factor);
        projections.push(pi);
    }

    let sum = idem.iter().fold(0, |acc, &e| ring.add(acc, e));
    if sum != ring.one() {
        return Err(Error::Internal("primitive idempotents do not sum to 1".into()));
    }
    let total: usize = factors.iter().map(|f| f.order()).product();
    if total != ring.order() {
        return Err(Error::Internal("factor orders do not multiply to |R|".into()));
    }
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::with_capacity(ring.order());
    for x in ring.elements() {
        let image: Vec<usize> = projections.iter().map(|p| p.apply(x)).collect();
        if seen.insert(image, x).is_some() {
            return Err(Error::Internal("decomposition map is not injective".into()));
        }
    }
    Ok(LocalDecomposition {
        idempotents: idem,
        factors,
        projections,
    })
}

pub fn units(ring: &FiniteRing) -> Vec<bool> {
    let mut unit = vec![false; ring.order()];
    for x in ring.elements() {
        if unit[x] {
            continue;
        }
        if let Some(y) = ring.elements().find(|&y| ring.mul(x, y) == ring.one()) {
            unit[x] = true;
            unit[y] = true;
        }
    }
    unit
}

/// `Some(m)` when the non-units form an ideal `m`, which is then the unique
/// maximal ideal.
pub fn is_local(ring: &FiniteRing) -> Result<Option<Ideal>> {
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    let unit = units(ring);
    let non_units: Vec<usize> = ring.elements().filter(|&x| !unit[x]).collect();
    let generated = ideal_generated(ring, &non_units);
    Ok((!generated.contains(ring.one())).then_some(generated))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorVerdict {
    pub index: usize,
    pub order: usize,
    pub is_local: bool,
    pub is_chain: bool,
    pub ideal_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub is_chain_local_product: bool,
    pub per_factor: Vec<FactorVerdict>,
    pub offending_factor: Option<usize>,
}

/// Decomposes `ring` and checks that every local factor has linearly ordered
/// ideals.
pub fn classify(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<ClassificationVerdict> {
    let dec = local_decomposition(ring, limits)?;
    classify_decomposition(&dec)
}

pub fn classify_decomposition(dec: &LocalDecomposition) -> Result<ClassificationVerdict> {
    let per_factor = dec
        .factors
        .par_iter()
        .enumerate()
        .map(|(index, f)| {
            let local = is_local(f)?.is_some();
            let ideals = all_ideals(f);
            Ok(FactorVerdict {
                index,
                order: f.order(),
                is_local: local,
                is_chain: ideals_form_chain(&ideals),
                ideal_count: ideals.len(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = per_factor.iter().find(|v| !v.is_local) {
        return Err(Error::Internal(format!("factor {} is not local", bad.index)));
    }
    let offending_factor = per_factor.iter().find(|v| !v.is_chain).map(|v| v.index);
    Ok(ClassificationVerdict {
        is_chain_local_product: offending_factor.is_none(),
        per_factor,
        offending_factor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ring::make_cyclic;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn idempotents_of_z12() {
        let z12 = make_cyclic(12, &l()).unwrap();
        assert_eq!(idempotents(&z12), vec![0, 1, 4, 9]);
        assert_eq!(idempotents(&catalog::finite_field(8, &l()).unwrap()), vec![0, 1]);
        let f2f2 = catalog::ring("Z2*Z2", &l()).unwrap();
        assert_eq!(idempotents(&f2f2).len(), 4);
    }

    #[test]
    fn decompose_z12() {
        let z12 = make_cyclic(12, &l()).unwrap();
        let dec = local_decomposition(&z12, &l()).unwrap();
        assert_eq!(dec.idempotents, vec![4, 9]);
        let orders: Vec<usize> = dec.factors.iter().map(|f| f.order()).collect();
        // e = 4 cuts out the order-3 factor, e = 9 the order-4 factor.
        assert_eq!(orders, vec![3, 4]);
        for p in &dec.projections {
            p.verify_exhaustive().unwrap();
        }
    }

    #[test]
    fn decompose_local_and_z30() {
        let z8 = make_cyclic(8, &l()).unwrap();
        let dec = local_decomposition(&z8, &l()).unwrap();
        assert_eq!(dec.idempotents, vec![z8.one()]);
        let z30 = make_cyclic(30, &l()).unwrap();
        let mut orders: Vec<usize> = local_decomposition(&z30, &l())
            .unwrap()
            .factors
            .iter()
            .map(|f| f.order())
            .collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3, 5]);
    }

    #[test]
    fn locality() {
        let z9 = make_cyclic(9, &l()).unwrap();
        let m = is_local(&z9).unwrap().unwrap();
        assert_eq!(m.member_list(), vec![0, 3, 6]);
        assert!(is_local(&make_cyclic(6, &l()).unwrap()).unwrap().is_none());
        let r = catalog::f2xy(&l()).unwrap();
        let m = is_local(&r).unwrap().unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m, ideal_generated(&r, &[r.basis(1), r.basis(2)]));
    }

    #[test]
    fn classification_examples() {
        let z12 = make_cyclic(12, &l()).unwrap();
        assert!(classify(&z12, &l()).unwrap().is_chain_local_product);
        let v = classify(&catalog::f2xy(&l()).unwrap(), &l()).unwrap();
        assert!(!v.is_chain_local_product);
        assert_eq!(v.offending_factor, Some(0));
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = catalog::finite_field(q, &l()).unwrap();
            assert!(classify(&f, &l()).unwrap().is_chain_local_product);
        }
        let z1 = make_cyclic(1, &l()).unwrap();
        assert_eq!(classify(&z1, &l()).unwrap_err(), Error::ZeroRing);
    }
}
