//! Ideals of a [`FiniteRing`] as membership masks over the carrier, plus
//! generation, full enumeration and the lattice operations.

use std::cmp::Ordering;
use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ring::{Element, FiniteRing};

/// An ideal of a finite ring. The mask is its identity; generators are the
/// canonical greedy generating set (repeatedly add the smallest member not yet
/// generated).
#[derive(Debug, Clone)]
pub struct Ideal {
    members: FixedBitSet,
    size: usize,
    generators: Vec<usize>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Ideal {}

impl std::hash::Hash for Ideal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Ideal {
    /// Cardinality first, then the ascending member lists lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ideal {
    /// Wraps a mask already known to be an ideal and derives its generators.
    pub fn from_mask(ring: &FiniteRing, members: FixedBitSet) -> Self {
        let generators = canonical_generators(ring, &members);
        let size = members.count_ones(..);
        Self {
            members,
            size,
            generators,
        }
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn member_list(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_elements(&self, ring: &FiniteRing) -> Vec<Element> {
        self.generators.iter().map(|&g| ring.element(g)).collect()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    fn belongs_to(&self, ring: &FiniteRing) -> bool {
        self.members.len() == ring.order()
    }
}

/// Growing additive subgroup used by every closure computation.
struct Span<'a> {
    ring: &'a FiniteRing,
    mask: FixedBitSet,
    list: Vec<usize>,
}

impl<'a> Span<'a> {
    fn zero(ring: &'a FiniteRing) -> Self {
        let mut mask = FixedBitSet::with_capacity(ring.order());
        mask.insert(0);
        Self {
            ring,
            mask,
            list: vec![0],
        }
    }

    fn from_members(ring: &'a FiniteRing, mask: &FixedBitSet) -> Self {
        Self {
            ring,
            mask: mask.clone(),
            list: mask.ones().collect(),
        }
    }

    /// Adjoins `v`: the new subgroup is the union of `S + t v` over the
    /// multiples of `v` until one lands back in `S`.
    fn adjoin(&mut self, v: usize) {
        if self.mask.contains(v) {
            return;
        }
        let base = self.list.clone();
        let mut w = v;
        while !self.mask.contains(w) {
            for &m in &base {
                let x = self.ring.add(m, w);
                self.mask.insert(x);
                self.list.push(x);
            }
            w = self.ring.add(w, v);
        }
    }

    /// Adjoins the ideal generated by `g`, i.e. the additive span of `g * b_i`.
    fn adjoin_ideal_generator(&mut self, g: usize) {
        for i in 0..self.ring.rank() {
            let v = self.ring.mul(g, self.ring.basis(i));
            self.adjoin(v);
        }
    }
}

fn canonical_generators(ring: &FiniteRing, members: &FixedBitSet) -> Vec<usize> {
    let mut span = Span::zero(ring);
    let mut gens = Vec::new();
    for x in members.ones() {
        if !span.mask.contains(x) {
            gens.push(x);
            span.adjoin_ideal_generator(x);
        }
    }
    gens
}

/// Smallest ideal containing `gens`.
pub fn ideal_generated(ring: &FiniteRing, gens: &[usize]) -> Ideal {
    let mut span = Span::zero(ring);
    for &g in gens {
        span.adjoin_ideal_generator(g);
    }
    Ideal::from_mask(ring, span.mask)
}

/// Like [`ideal_generated`] but takes coordinate vectors.
pub fn ideal_from_elements(ring: &FiniteRing, gens: &[Element]) -> Result<Ideal> {
    let idx = gens.iter().map(|g| ring.index(g)).collect::<Result<Vec<_>>>()?;
    Ok(ideal_generated(ring, &idx))
}

pub fn zero_ideal(ring: &FiniteRing) -> Ideal {
    ideal_generated(ring, &[])
}

pub fn unit_ideal(ring: &FiniteRing) -> Ideal {
    ideal_generated(ring, &[ring.one()])
}

fn sum_mask(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> FixedBitSet {
    if b.is_subset(a) {
        return a.members.clone();
    }
    if a.is_subset(b) {
        return b.members.clone();
    }
    let mut span = Span::from_members(ring, &a.members);
    for &g in &b.generators {
        span.adjoin_ideal_generator(g);
    }
    span.mask
}

/// Every ideal of `ring` exactly once, sorted by cardinality and then by
/// member list. Starts from the principal ideals and closes under pairwise
/// sums; every ideal is a finite sum of principal ideals.
pub fn all_ideals(ring: &FiniteRing) -> Vec<Ideal> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut ideals: Vec<Ideal> = Vec::new();
    for x in ring.elements() {
        let mut span = Span::zero(ring);
        span.adjoin_ideal_generator(x);
        if seen.insert(span.mask.clone()) {
            ideals.push(Ideal {
                size: span.list.len(),
                members: span.mask,
                generators: vec![x],
            });
        }
    }
    // Worklist closure under sums.
    let mut next = 0;
    while next < ideals.len() {
        let current = ideals[next].clone();
        let mut found = Vec::new();
        for other in &ideals[..next] {
            let m = sum_mask(ring, &current, other);
            if !seen.contains(&m) {
                seen.insert(m.clone());
                let mut gens = current.generators.clone();
                gens.extend_from_slice(&other.generators);
                found.push(Ideal {
                    size: m.count_ones(..),
                    members: m,
                    generators: gens,
                });
            }
        }
        ideals.extend(found);
        next += 1;
    }
    let mut out: Vec<Ideal> = ideals.into_iter().map(|i| Ideal::from_mask(ring, i.members)).collect();
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Sum,
    Intersect,
    Product,
    Annihilator,
}

/// Applies a lattice operation. `Annihilator` is unary and ignores `other`;
/// the binary operations require it.
pub fn lattice_op(ring: &FiniteRing, op: LatticeOp, a: &Ideal, other: Option<&Ideal>) -> Result<Ideal> {
    if !a.belongs_to(ring) || other.is_some_and(|b| !b.belongs_to(ring)) {
        return Err(Error::ForeignIdeal);
    }
    let need = || other.ok_or_else(|| Error::Dimension(format!("{op:?} needs two ideals")));
    Ok(match op {
        LatticeOp::Sum => Ideal::from_mask(ring, sum_mask(ring, a, need()?)),
        LatticeOp::Intersect => {
            let mut m = a.members.clone();
            m.intersect_with(&need()?.members);
            Ideal::from_mask(ring, m)
        }
        LatticeOp::Product => {
            let b = need()?;
            let gens: Vec<usize> = a
                .generators
                .iter()
                .flat_map(|&g| b.generators.iter().map(move |&h| ring.mul(g, h)))
                .collect();
            ideal_generated(ring, &gens)
        }
        LatticeOp::Annihilator => annihilator(ring, a),
    })
}

pub fn sum(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Ideal {
    Ideal::from_mask(ring, sum_mask(ring, a, b))
}

pub fn intersect(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Ideal {
    let mut m = a.members.clone();
    m.intersect_with(&b.members);
    Ideal::from_mask(ring, m)
}

/// `{x : x * I = 0}`; killing the generators is enough since `x (r g) = r (x g)`.
pub fn annihilator(ring: &FiniteRing, a: &Ideal) -> Ideal {
    let mut m = FixedBitSet::with_capacity(ring.order());
    for x in ring.elements() {
        if a.generators.iter().all(|&g| ring.mul(x, g) == 0) {
            m.insert(x);
        }
    }
    Ideal::from_mask(ring, m)
}

/// True iff the ideals of `ring` are totally ordered by inclusion.
pub fn is_chain(ring: &FiniteRing) -> bool {
    ideals_form_chain(&all_ideals(ring))
}

/// Assumes the input is sorted by cardinality, as [`all_ideals`] returns it.
pub fn ideals_form_chain(ideals: &[Ideal]) -> bool {
    ideals.windows(2).all(|w| w[0].is_subset(&w[1]))
}

/// Nonzero ideals minimal under inclusion, in [`all_ideals`] order.
pub fn minimal_ideals(ideals: &[Ideal]) -> Vec<Ideal> {
    let nonzero: Vec<&Ideal> = ideals.iter().filter(|i| !i.is_zero()).collect();
    nonzero
        .iter()
        .filter(|i| !nonzero.iter().any(|j| j.size < i.size && j.is_subset(i)))
        .map(|i| (*i).clone())
        .collect()
}
