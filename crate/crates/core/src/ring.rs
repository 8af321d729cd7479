//! Finite commutative unital rings presented by an invariant-factor additive
//! group `Z/d_1 x ... x Z/d_k` (with `d_1 | ... | d_k`) and structure constants
//! `b_i * b_j` on the standard basis.
//!
//! Every element is addressed by its index in the mixed-radix enumeration of
//! the carrier, coordinate 1 varying fastest. All tie-breaks in the crate
//! ("smallest", "first") refer to this index order.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::matrix::{snf, IntMatrix};

/// Raw description of a ring; becomes a [`FiniteRing`] through [`validate_ring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    invariant_factors: Vec<u64>,
    /// `structure[i * k + j]` holds the coordinates of `b_i * b_j`.
    structure: Vec<Vec<u64>>,
    unit: Vec<u64>,
}

impl RingPresentation {
    /// `structure` is indexed as `structure[i][j]` = coordinates of `b_i * b_j`.
    pub fn new(invariant_factors: Vec<u64>, structure: Vec<Vec<Vec<u64>>>, unit: Vec<u64>) -> Self {
        Self {
            invariant_factors,
            structure: structure.into_iter().flatten().collect(),
            unit,
        }
    }

    /// Presentation with every product zero; fill it in with [`Self::set_product`].
    pub fn zero_products(invariant_factors: Vec<u64>, unit: Vec<u64>) -> Self {
        let k = invariant_factors.len();
        Self {
            invariant_factors,
            structure: vec![vec![0; k]; k * k],
            unit,
        }
    }

    /// Sets `b_i * b_j` and `b_j * b_i`.
    pub fn set_product(&mut self, i: usize, j: usize, coords: Vec<u64>) {
        let k = self.rank();
        self.structure[j * k + i] = coords.clone();
        self.structure[i * k + j] = coords;
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn product(&self, i: usize, j: usize) -> &[u64] {
        &self.structure[i * self.rank() + j]
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn carrier_size(&self) -> u128 {
        self.invariant_factors.iter().map(|&d| d as u128).product()
    }
}

/// A ring element as its reduced coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub Vec<u64>);

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A validated finite commutative unital ring with an enumerated carrier.
pub struct FiniteRing {
    presentation: RingPresentation,
    order: usize,
    strides: Vec<usize>,
    /// Flattened `order * k` coordinate table.
    coords: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    basis: Vec<usize>,
    one: usize,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("invariant_factors", &self.presentation.invariant_factors)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteRing {
    fn build(presentation: RingPresentation, limits: &Limits) -> Result<Self> {
        let k = presentation.rank();
        let size = presentation.carrier_size();
        if size > limits.carrier_bound as u128 {
            return Err(Error::CarrierTooLarge {
                required: size,
                bound: limits.carrier_bound,
            });
        }
        let order = size as usize;
        let mut strides = Vec::with_capacity(k);
        let mut s = 1usize;
        for &d in &presentation.invariant_factors {
            strides.push(s);
            s *= d as usize;
        }
        let mut coords = vec![0u32; order * k];
        for x in 0..order {
            for (i, &d) in presentation.invariant_factors.iter().enumerate() {
                coords[x * k + i] = ((x / strides[i]) % d as usize) as u32;
            }
        }
        let mut ring = Self {
            order,
            strides,
            coords,
            mul_table: None,
            basis: Vec::new(),
            one: 0,
            presentation,
        };
        ring.basis = (0..k)
            .map(|i| {
                let mut c = vec![0u64; k];
                c[i] = 1;
                ring.index_of_coords(&c)
            })
            .collect();
        ring.one = ring.index_of_coords(&ring.presentation.unit.clone());
        if order <= limits.mul_cache_threshold {
            let mut table = vec![0u32; order * order];
            for a in 0..order {
                for b in a..order {
                    let p = ring.mul_uncached(a, b) as u32;
                    table[a * order + b] = p;
                    table[b * order + a] = p;
                }
            }
            ring.mul_table = Some(table);
        }
        Ok(ring)
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.presentation.invariant_factors
    }

    /// Number of basis vectors `k`.
    pub fn rank(&self) -> usize {
        self.presentation.rank()
    }

    /// Number of carrier elements.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn has_mul_cache(&self) -> bool {
        self.mul_table.is_some()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// Index of basis vector `b_i`.
    pub fn basis(&self, i: usize) -> usize {
        self.basis[i]
    }

    pub fn basis_elements(&self) -> &[usize] {
        &self.basis
    }

    pub fn coords(&self, x: usize) -> &[u32] {
        let k = self.rank();
        &self.coords[x * k..(x + 1) * k]
    }

    /// Index of the element with the given coordinates (reduced on the fly).
    pub fn index_of_coords(&self, c: &[u64]) -> usize {
        c.iter()
            .zip(&self.presentation.invariant_factors)
            .zip(&self.strides)
            .map(|((&ci, &d), &s)| (ci % d) as usize * s)
            .sum()
    }

    pub fn element(&self, x: usize) -> Element {
        Element(self.coords(x).iter().map(|&c| c as u64).collect())
    }

    /// Index of an element; its coordinates must already be reduced.
    pub fn index(&self, e: &Element) -> Result<usize> {
        let ok = e.0.len() == self.rank() && e.0.iter().zip(self.invariant_factors()).all(|(&c, &d)| c < d);
        if !ok {
            return Err(Error::BadElement(e.0.clone()));
        }
        Ok(self.index_of_coords(&e.0))
    }

    /// Index of the element represented by an integer coordinate vector.
    pub fn index_of_ints(&self, v: &[BigInt]) -> usize {
        let c: Vec<u64> = v
            .iter()
            .zip(self.invariant_factors())
            .map(|(x, &d)| x.mod_floor(&BigInt::from(d)).to_u64().unwrap_or(0))
            .collect();
        self.index_of_coords(&c)
    }

    pub fn to_ints(&self, x: usize) -> Vec<BigInt> {
        self.coords(x).iter().map(|&c| BigInt::from(c)).collect()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let k = self.rank();
        let (ca, cb) = (&self.coords[a * k..a * k + k], &self.coords[b * k..b * k + k]);
        let mut idx = 0;
        for i in 0..k {
            let d = self.presentation.invariant_factors[i] as u32;
            let mut s = ca[i] + cb[i];
            if s >= d {
                s -= d;
            }
            idx += s as usize * self.strides[i];
        }
        idx
    }

    pub fn neg(&self, a: usize) -> usize {
        let k = self.rank();
        let mut idx = 0;
        for i in 0..k {
            let d = self.presentation.invariant_factors[i] as u32;
            let c = self.coords[a * k + i];
            let n = if c == 0 { 0 } else { d - c };
            idx += n as usize * self.strides[i];
        }
        idx
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `n * a` in the additive group.
    pub fn scale(&self, n: u64, a: usize) -> usize {
        let c: Vec<u64> = self.coords(a).iter().map(|&c| c as u64 * n).collect();
        self.index_of_coords(&c)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul_table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.mul_uncached(a, b),
        }
    }

    fn mul_uncached(&self, a: usize, b: usize) -> usize {
        let k = self.rank();
        let d = &self.presentation.invariant_factors;
        let (ca, cb) = (self.coords(a), self.coords(b));
        let mut acc = vec![0u64; k];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let w = x as u64 * y as u64;
                for (l, c) in self.presentation.product(i, j).iter().enumerate() {
                    if *c != 0 {
                        acc[l] = (acc[l] + w % d[l] * c) % d[l];
                    }
                }
            }
        }
        self.index_of_coords(&acc)
    }

    /// Checks associativity, commutativity, distributivity and the unit law on
    /// every carrier triple. Cubic in the carrier size, so only for small rings.
    pub fn verify_axioms_exhaustive(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.mul(self.one, x) != x {
                return Err(Error::NoUnit { element: x });
            }
            for y in 0..n {
                if self.mul(x, y) != self.mul(y, x) {
                    return Err(Error::NotCommutative { i: x, j: y });
                }
                for z in 0..n {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return Err(Error::NotAssociative { i: x, j: y, k: z });
                    }
                    if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                        return Err(Error::Internal(format!("distributivity fails at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Integer-coordinate product, used when transporting multiplication.
    fn mul_ints(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        self.to_ints(self.mul(self.index_of_ints(a), self.index_of_ints(b)))
    }

    /// Additive order of `x`.
    pub fn additive_order(&self, x: usize) -> u64 {
        self.coords(x)
            .iter()
            .zip(self.invariant_factors())
            .fold(1u64, |acc, (&c, &d)| acc.lcm(&(d / (c as u64).gcd(&d))))
    }
}

/// Validates a presentation and enumerates its carrier.
///
/// Commutativity and associativity are checked on basis pairs and triples:
/// multiplication is the bilinear extension of the structure constants, so
/// once those are well defined this is equivalent to the carrier-wide check.
/// The unit law is checked on every carrier element.
pub fn validate_ring(p: RingPresentation, limits: &Limits) -> Result<FiniteRing> {
    validate_inner(p, limits, false)
}

fn validate_inner(mut p: RingPresentation, limits: &Limits, allow_zero: bool) -> Result<FiniteRing> {
    let k = p.rank();
    let d = p.invariant_factors.clone();
    if d.contains(&0) || d.windows(2).any(|w| w[1] % w[0] != 0) {
        return Err(Error::BadInvariantFactors(d));
    }
    if p.structure.len() != k * k || p.structure.iter().any(|c| c.len() != k) {
        return Err(Error::IllFormedConstants {
            i: 0,
            j: 0,
            reason: format!("expected {k}x{k} products of length {k}"),
        });
    }
    if p.unit.len() != k {
        return Err(Error::IllFormedConstants {
            i: 0,
            j: 0,
            reason: format!("unit must have {k} coordinates"),
        });
    }
    let size = p.carrier_size();
    if size > limits.carrier_bound as u128 {
        return Err(Error::CarrierTooLarge {
            required: size,
            bound: limits.carrier_bound,
        });
    }
    if size == 1 && !allow_zero {
        return Err(Error::ZeroRing);
    }
    for c in p.structure.iter_mut() {
        for (x, &m) in c.iter_mut().zip(&d) {
            *x %= m;
        }
    }
    for (x, &m) in p.unit.iter_mut().zip(&d) {
        *x %= m;
    }
    for i in 0..k {
        for j in 0..k {
            let c = p.product(i, j);
            for &scale in &[d[i], d[j]] {
                let killed = c
                    .iter()
                    .zip(&d)
                    .all(|(&x, &m)| (x as u128 * scale as u128).is_multiple_of(m as u128));
                if !killed {
                    return Err(Error::IllFormedConstants {
                        i,
                        j,
                        reason: format!("{scale} * (b_{i} b_{j}) is nonzero"),
                    });
                }
            }
            if p.product(i, j) != p.product(j, i) {
                return Err(Error::NotCommutative { i, j });
            }
        }
    }
    let ring = FiniteRing::build(p, limits)?;
    for i in 0..k {
        for j in 0..k {
            let bij = ring.mul(ring.basis[i], ring.basis[j]);
            for l in 0..k {
                let left = ring.mul(bij, ring.basis[l]);
                let right = ring.mul(ring.basis[i], ring.mul(ring.basis[j], ring.basis[l]));
                if left != right {
                    return Err(Error::NotAssociative { i, j, k: l });
                }
            }
        }
    }
    for x in ring.elements() {
        if ring.mul(ring.one, x) != x {
            return Err(Error::NoUnit { element: x });
        }
    }
    Ok(ring)
}

/// The ring `Z/n`; `n = 1` gives the zero ring.
pub fn make_cyclic(n: u64, limits: &Limits) -> Result<Arc<FiniteRing>> {
    if n == 0 {
        return Err(Error::BadInvariantFactors(vec![0]));
    }
    if n as u128 > limits.carrier_bound as u128 {
        return Err(Error::CarrierTooLarge {
            required: n as u128,
            bound: limits.carrier_bound,
        });
    }
    let p = if n == 1 {
        RingPresentation::new(vec![], vec![], vec![])
    } else {
        RingPresentation::new(vec![n], vec![vec![vec![1]]], vec![1])
    };
    Ok(Arc::new(validate_inner(p, limits, true)?))
}

/// A ring homomorphism given by the images of the source basis.
#[derive(Clone)]
pub struct RingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    images: Vec<usize>,
    table: Vec<usize>,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingHom")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("images", &self.images)
            .finish()
    }
}

impl RingHom {
    /// Builds the map and checks it on generators: images are killed by the
    /// source invariant factors, multiplication is preserved on basis pairs
    /// and the unit goes to the unit. Additivity makes this sufficient.
    pub fn new(source: Arc<FiniteRing>, target: Arc<FiniteRing>, images: Vec<usize>) -> Result<Self> {
        let k = source.rank();
        if images.len() != k || images.iter().any(|&y| y >= target.order()) {
            return Err(Error::NotAHomomorphism("wrong number of basis images".into()));
        }
        for (i, &img) in images.iter().enumerate() {
            if target.scale(source.invariant_factors()[i], img) != 0 {
                return Err(Error::NotAHomomorphism(format!(
                    "image of b_{i} has wrong additive order"
                )));
            }
        }
        let mut table = vec![0usize; source.order()];
        for x in source.elements() {
            let mut y = 0;
            for (i, &c) in source.coords(x).iter().enumerate() {
                if c != 0 {
                    y = target.add(y, target.scale(c as u64, images[i]));
                }
            }
            table[x] = y;
        }
        let hom = Self {
            source,
            target,
            images,
            table,
        };
        let (s, t) = (&hom.source, &hom.target);
        for i in 0..k {
            for j in i..k {
                let lhs = hom.apply(s.mul(s.basis(i), s.basis(j)));
                if lhs != t.mul(hom.images[i], hom.images[j]) {
                    return Err(Error::NotAHomomorphism(format!("product b_{i} b_{j} not preserved")));
                }
            }
        }
        if hom.apply(s.one()) != t.one() {
            return Err(Error::NotAHomomorphism("unit not preserved".into()));
        }
        Ok(hom)
    }

    pub fn identity(ring: Arc<FiniteRing>) -> Self {
        let images = ring.basis_elements().to_vec();
        let table = ring.elements().collect();
        Self {
            source: ring.clone(),
            target: ring,
            images,
            table,
        }
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn basis_images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// Smallest source element mapping to `y`.
    pub fn min_preimage(&self, y: usize) -> Option<usize> {
        self.table.iter().position(|&v| v == y)
    }

    /// Full preimage of a target subset, as a membership mask over the source.
    pub fn preimage_mask(&self, target_mask: &fixedbitset::FixedBitSet) -> fixedbitset::FixedBitSet {
        let mut m = fixedbitset::FixedBitSet::with_capacity(self.source.order());
        for (x, &y) in self.table.iter().enumerate() {
            if target_mask.contains(y) {
                m.insert(x);
            }
        }
        m
    }

    /// Checks additivity, multiplicativity and the unit on every source pair.
    pub fn verify_exhaustive(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.apply(s.one()) != t.one() {
            return Err(Error::NotAHomomorphism("unit not preserved".into()));
        }
        for x in s.elements() {
            for y in s.elements() {
                if self.apply(s.add(x, y)) != t.add(self.apply(x), self.apply(y)) {
                    return Err(Error::NotAHomomorphism(format!("sum {x} + {y}")));
                }
                if self.apply(s.mul(x, y)) != t.mul(self.apply(x), self.apply(y)) {
                    return Err(Error::NotAHomomorphism(format!("product {x} * {y}")));
                }
            }
        }
        Ok(())
    }

    pub fn kernel_mask(&self) -> fixedbitset::FixedBitSet {
        let mut zero = fixedbitset::FixedBitSet::with_capacity(self.target.order());
        zero.insert(0);
        self.preimage_mask(&zero)
    }
}

/// Change of coordinates from `Z^m / rowspan(relations)` to its invariant-factor form.
#[derive(Debug, Clone)]
pub struct GroupMap {
    v: IntMatrix,
    kept: Vec<usize>,
    moduli: Vec<u64>,
    section: Vec<Vec<BigInt>>,
}

impl GroupMap {
    /// Reduced invariant-factor coordinates of an integer vector.
    pub fn forward(&self, x: &[BigInt]) -> Vec<u64> {
        let y = self.v.left_apply(x);
        self.kept
            .iter()
            .zip(&self.moduli)
            .map(|(&j, &m)| y[j].mod_floor(&BigInt::from(m)).to_u64().unwrap_or(0))
            .collect()
    }

    /// Integer preimage of the `j`-th new basis vector.
    pub fn section(&self, j: usize) -> &[BigInt] {
        &self.section[j]
    }

    /// Integer preimage of an element given by reduced coordinates.
    pub fn lift(&self, coords: &[u32]) -> Vec<BigInt> {
        let n = self.v.num_rows();
        let mut out = vec![BigInt::zero(); n];
        for (j, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, s) in out.iter_mut().zip(&self.section[j]) {
                *o += s * BigInt::from(c);
            }
        }
        out
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }
}

/// Presents `Z^m / rowspan(relations)` as a ring, transporting `mul` and `unit`
/// through the Smith normal form change of basis. `relations` must have full
/// column rank so the quotient is finite.
pub(crate) fn present_quotient<F>(
    relations: &IntMatrix,
    mul: F,
    unit: &[BigInt],
    limits: &Limits,
) -> Result<(FiniteRing, GroupMap)>
where
    F: Fn(&[BigInt], &[BigInt]) -> Vec<BigInt>,
{
    let m = relations.num_cols();
    let s = snf(relations);
    let diag: Vec<BigInt> = (0..m)
        .map(|i| {
            if i < s.d.num_rows() {
                s.d[(i, i)].clone()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    if diag.iter().any(Zero::is_zero) {
        return Err(Error::RankDeficient);
    }
    let order: BigInt = diag.iter().product();
    if order > BigInt::from(limits.carrier_bound) {
        return Err(Error::CarrierTooLarge {
            required: order.to_u128().unwrap_or(u128::MAX),
            bound: limits.carrier_bound,
        });
    }
    let kept: Vec<usize> = (0..m).filter(|&i| diag[i] != BigInt::from(1)).collect();
    let moduli: Vec<u64> = kept.iter().map(|&i| diag[i].to_u64().unwrap()).collect();
    let section: Vec<Vec<BigInt>> = kept.iter().map(|&j| s.v_inv.row(j).to_vec()).collect();
    let map = GroupMap {
        v: s.v,
        kept,
        moduli: moduli.clone(),
        section,
    };
    let k = moduli.len();
    let mut p = RingPresentation::zero_products(moduli, map.forward(unit));
    for a in 0..k {
        for b in a..k {
            let prod = mul(&map.section[a], &map.section[b]);
            p.set_product(a, b, map.forward(&prod));
        }
    }
    let ring = validate_inner(p, limits, true)?;
    Ok((ring, map))
}

/// Product ring with its canonical projections.
#[derive(Debug, Clone)]
pub struct ProductRing {
    pub ring: Arc<FiniteRing>,
    pub projections: Vec<RingHom>,
}

pub fn make_product(factors: &[Arc<FiniteRing>], limits: &Limits) -> Result<ProductRing> {
    if factors.is_empty() {
        return Err(Error::Dimension("product needs at least one factor".into()));
    }
    if factors.len() == 1 {
        let ring = factors[0].clone();
        return Ok(ProductRing {
            projections: vec![RingHom::identity(ring.clone())],
            ring,
        });
    }
    let size: u128 = factors.iter().map(|f| f.order() as u128).product();
    if size > limits.carrier_bound as u128 {
        return Err(Error::CarrierTooLarge {
            required: size,
            bound: limits.carrier_bound,
        });
    }
    let offsets: Vec<usize> = factors
        .iter()
        .scan(0, |acc, f| {
            let o = *acc;
            *acc += f.rank();
            Some(o)
        })
        .collect();
    let m: usize = factors.iter().map(|f| f.rank()).sum();
    let diag: Vec<BigInt> = factors
        .iter()
        .flat_map(|f| f.invariant_factors().iter().map(|&d| BigInt::from(d)))
        .collect();
    let relations = IntMatrix::diagonal(&diag);
    let split = |v: &[BigInt]| -> Vec<Vec<BigInt>> {
        factors
            .iter()
            .zip(&offsets)
            .map(|(f, &o)| v[o..o + f.rank()].to_vec())
            .collect()
    };
    let mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
        split(a)
            .iter()
            .zip(split(b))
            .zip(factors)
            .flat_map(|((x, y), f)| f.mul_ints(x, &y))
            .collect()
    };
    let unit: Vec<BigInt> = factors.iter().flat_map(|f| f.to_ints(f.one())).collect();
    debug_assert_eq!(unit.len(), m);
    let (ring, map) = present_quotient(&relations, mul, &unit, limits)?;
    let ring = Arc::new(ring);
    let mut projections = Vec::with_capacity(factors.len());
    for (fi, f) in factors.iter().enumerate() {
        let images = (0..ring.rank())
            .map(|j| f.index_of_ints(&split(map.section(j))[fi]))
            .collect();
        projections.push(RingHom::new(ring.clone(), f.clone(), images)?);
    }
    Ok(ProductRing { ring, projections })
}

/// Quotient `R/I` together with the canonical surjection.
pub fn make_quotient(ring: &Arc<FiniteRing>, ideal: &Ideal, limits: &Limits) -> Result<(Arc<FiniteRing>, RingHom)> {
    if ideal.members().len() != ring.order() {
        return Err(Error::ForeignIdeal);
    }
    let k = ring.rank();
    let mut rows: Vec<Vec<BigInt>> = ring
        .invariant_factors()
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let mut r = vec![BigInt::zero(); k];
            r[i] = BigInt::from(d);
            r
        })
        .collect();
    for &g in ideal.generators() {
        for &b in ring.basis_elements() {
            rows.push(ring.to_ints(ring.mul(g, b)));
        }
    }
    let relations = IntMatrix::from_rows(rows, k);
    let (q, map) = present_quotient(
        &relations,
        |a, b| ring.mul_ints(a, b),
        &ring.to_ints(ring.one()),
        limits,
    )?;
    let q = Arc::new(q);
    let images = (0..k)
        .map(|i| {
            let mut e = vec![BigInt::zero(); k];
            e[i] = BigInt::from(1);
            q.index_of_coords(&map.forward(&e))
        })
        .collect();
    let hom = RingHom::new(ring.clone(), q.clone(), images)?;
    if q.order() * ideal.size() != ring.order() {
        return Err(Error::Internal("quotient order does not match |R|/|I|".into()));
    }
    Ok((q, hom))
}

/// Validates a presentation whose additive group may not be in
/// invariant-factor form (e.g. `Z/4 x Z/3`), re-deriving the chain first.
pub fn normalize_presentation(
    moduli: &[u64],
    products: &dyn Fn(usize, usize) -> Vec<u64>,
    unit: &[u64],
    limits: &Limits,
) -> Result<Arc<FiniteRing>> {
    let k = moduli.len();
    let size: u128 = moduli.iter().map(|&d| d as u128).product();
    if size > limits.carrier_bound as u128 {
        return Err(Error::CarrierTooLarge {
            required: size,
            bound: limits.carrier_bound,
        });
    }
    let relations = IntMatrix::diagonal(&moduli.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>());
    let table: Vec<Vec<u64>> = (0..k * k).map(|ij| products(ij / k, ij % k)).collect();
    let mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); k];
        for i in 0..k {
            for j in 0..k {
                let w = &a[i] * &b[j];
                if w.is_zero() {
                    continue;
                }
                for (l, c) in table[i * k + j].iter().enumerate() {
                    acc[l] += &w * BigInt::from(*c);
                }
            }
        }
        for (x, &d) in acc.iter_mut().zip(moduli) {
            *x = x.mod_floor(&BigInt::from(d));
        }
        acc
    };
    let unit: Vec<BigInt> = unit.iter().map(|&u| BigInt::from(u)).collect();
    let (ring, _) = present_quotient(&relations, mul, &unit, limits)?;
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    Ok(Arc::new(ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{ideal_generated, zero_ideal};

    fn limits() -> Limits {
        Limits::default()
    }

    fn f2xy() -> RingPresentation {
        let mut p = RingPresentation::zero_products(vec![2, 2, 2], vec![1, 0, 0]);
        p.set_product(0, 0, vec![1, 0, 0]);
        p.set_product(0, 1, vec![0, 1, 0]);
        p.set_product(0, 2, vec![0, 0, 1]);
        p
    }

    #[test]
    fn z6_is_valid() {
        let p = RingPresentation::new(vec![6], vec![vec![vec![1]]], vec![1]);
        let r = validate_ring(p, &limits()).unwrap();
        assert_eq!(r.order(), 6);
        r.verify_axioms_exhaustive().unwrap();
    }

    #[test]
    fn ill_formed_constants_rejected() {
        // b_1 * b_1 = b_2 where b_2 has order 4 but d_1 = 2: 2 * b_2 != 0.
        let mut p = RingPresentation::zero_products(vec![2, 4], vec![1, 0]);
        p.set_product(0, 0, vec![0, 1]);
        assert!(matches!(
            validate_ring(p, &limits()),
            Err(Error::IllFormedConstants { i: 0, j: 0, .. })
        ));
    }

    #[test]
    fn f2xy_valid_and_matches_exhaustive_check() {
        let r = validate_ring(f2xy(), &limits()).unwrap();
        assert_eq!(r.order(), 8);
        r.verify_axioms_exhaustive().unwrap();
    }

    #[test]
    fn non_commutative_and_no_unit() {
        let mut p = f2xy();
        p.structure[3 + 2] = vec![0, 0, 1];
        assert!(matches!(
            validate_ring(p, &limits()),
            Err(Error::NotCommutative { i: 1, j: 2 })
        ));

        let mut p = f2xy();
        p.unit = vec![0, 1, 0];
        assert!(matches!(validate_ring(p, &limits()), Err(Error::NoUnit { .. })));
    }

    #[test]
    fn non_associative_detected() {
        // x*x = 1 with y*y = x and x*y = 0 breaks (y*y)*x = y*(y*x).
        let mut p = f2xy();
        p.set_product(1, 1, vec![1, 0, 0]);
        p.set_product(2, 2, vec![0, 1, 0]);
        assert!(matches!(validate_ring(p, &limits()), Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn carrier_bound_enforced() {
        assert!(matches!(
            make_cyclic(5000, &limits()),
            Err(Error::CarrierTooLarge { .. })
        ));
        let p = RingPresentation::new(vec![8], vec![vec![vec![1]]], vec![1]);
        assert!(validate_ring(p, &limits().with_carrier_bound(4)).is_err());
    }

    #[test]
    fn cyclic_rings() {
        let z1 = make_cyclic(1, &limits()).unwrap();
        assert!(z1.is_zero_ring());
        assert_eq!(z1.one(), z1.zero());
        assert_eq!(make_cyclic(12, &limits()).unwrap().order(), 12);
        let zero = RingPresentation::new(vec![], vec![], vec![]);
        assert_eq!(validate_ring(zero, &limits()).unwrap_err(), Error::ZeroRing);
    }

    #[test]
    fn mul_cache_is_transparent() {
        let cached = validate_ring(f2xy(), &limits()).unwrap();
        let plain = validate_ring(f2xy(), &limits().without_mul_cache()).unwrap();
        assert!(cached.has_mul_cache() && !plain.has_mul_cache());
        for a in cached.elements() {
            for b in cached.elements() {
                assert_eq!(cached.mul(a, b), plain.mul(a, b));
            }
        }
    }

    #[test]
    fn product_of_z4_z3_is_cyclic() {
        let z4 = make_cyclic(4, &limits()).unwrap();
        let z3 = make_cyclic(3, &limits()).unwrap();
        let prod = make_product(&[z4, z3], &limits()).unwrap();
        assert_eq!(prod.ring.order(), 12);
        assert_eq!(prod.ring.invariant_factors(), &[12]);
        for p in &prod.projections {
            p.verify_exhaustive().unwrap();
        }
    }

    #[test]
    fn single_factor_product_is_identity() {
        let z5 = make_cyclic(5, &limits()).unwrap();
        let prod = make_product(std::slice::from_ref(&z5), &limits()).unwrap();
        assert!(Arc::ptr_eq(&prod.ring, &z5));
        assert!(z5.elements().all(|x| prod.projections[0].apply(x) == x));
    }

    #[test]
    fn quotient_sizes() {
        let z12 = make_cyclic(12, &limits()).unwrap();
        let four = z12.index_of_coords(&[4]);
        let i = ideal_generated(&z12, &[four]);
        let (q, pi) = make_quotient(&z12, &i, &limits()).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(pi.kernel_mask(), *i.members());
        pi.verify_exhaustive().unwrap();

        let (q0, pi0) = make_quotient(&z12, &zero_ideal(&z12), &limits()).unwrap();
        assert_eq!(q0.order(), 12);
        for x in z12.elements() {
            assert_eq!(pi0.min_preimage(pi0.apply(x)), Some(x));
        }
    }
}
