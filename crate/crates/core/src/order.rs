//! Orders given by an integral multiplication table, their ideal lattices in
//! Hermite normal form, and finite quotients `O/L`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::ideal::{ideal_generated, Ideal};
use crate::local::classify;
use crate::matrix::{hnf, IntMatrix};
use crate::ring::{present_quotient, Element, FiniteRing, GroupMap};
use crate::rogers::{counterexample, rogers_check, Mode, RogersReport};

/// Multiplication table of a free `Z`-module with basis `b_1 = 1, b_2, ..., b_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderPresentation {
    n: usize,
    table: Vec<Vec<BigInt>>,
}

fn unit_vector(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

impl OrderPresentation {
    /// Table with `b_1` acting as identity and every other product zero.
    pub fn identity_table(n: usize) -> Self {
        let mut table = vec![vec![BigInt::zero(); n]; n * n];
        for j in 0..n {
            table[j] = unit_vector(n, j);
            table[j * n] = unit_vector(n, j);
        }
        Self { n, table }
    }

    /// Sets `b_i * b_j` and `b_j * b_i` (0-based).
    pub fn set_product(&mut self, i: usize, j: usize, coords: Vec<BigInt>) {
        self.table[j * self.n + i] = coords.clone();
        self.table[i * self.n + j] = coords;
    }

    /// Sets only `b_i * b_j`.
    pub fn set_ordered_product(&mut self, i: usize, j: usize, coords: Vec<BigInt>) {
        self.table[i * self.n + j] = coords;
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn product(&self, i: usize, j: usize) -> &[BigInt] {
        &self.table[i * self.n + j]
    }
}

/// A validated order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order {
    p: OrderPresentation,
}

impl Order {
    pub fn rank(&self) -> usize {
        self.p.n
    }

    pub fn presentation(&self) -> &OrderPresentation {
        &self.p
    }

    pub fn one(&self) -> Vec<BigInt> {
        unit_vector(self.p.n, 0)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<BigInt> {
        unit_vector(self.p.n, i)
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        mul_with(&self.p, a, b)
    }
}

fn mul_with(p: &OrderPresentation, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = p.n;
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let w = x * y;
            for (o, c) in out.iter_mut().zip(p.product(i, j)) {
                *o += &w * c;
            }
        }
    }
    out
}

pub fn validate_order(p: OrderPresentation, limits: &Limits) -> Result<Order> {
    let n = p.n;
    if n == 0 {
        return Err(Error::Dimension("order of rank 0".into()));
    }
    if n > limits.max_order_rank {
        return Err(Error::RankTooLarge {
            rank: n,
            bound: limits.max_order_rank,
        });
    }
    if let Some(bad) = p.table.iter().position(|v| v.len() != n) {
        return Err(Error::IllFormedConstants {
            i: bad / n,
            j: bad % n,
            reason: format!("expected {n} coordinates"),
        });
    }
    for j in 0..n {
        let e = unit_vector(n, j);
        if p.product(0, j) != e.as_slice() || p.product(j, 0) != e.as_slice() {
            return Err(Error::BadUnit { index: j });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if p.product(i, j) != p.product(j, i) {
                return Err(Error::NotCommutative { i, j });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = p.product(i, j).to_vec();
            for k in 0..n {
                let left = mul_with(&p, &ij, &unit_vector(n, k));
                let right = mul_with(&p, &unit_vector(n, i), p.product(j, k));
                if left != right {
                    return Err(Error::NotAssociative { i, j, k });
                }
            }
        }
    }
    Ok(Order { p })
}

/// Full-rank sublattice of `Z^n`, stored as its row Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    basis: IntMatrix,
}

impl IntegerLattice {
    /// Lattice spanned by `rows`; fails unless the span has rank `n`.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, n: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("lattice vectors must have {n} coordinates")));
        }
        if rows.is_empty() {
            return Err(Error::RankDeficient);
        }
        let h = hnf(&IntMatrix::from_rows(rows, n));
        if h.num_rows() != n {
            return Err(Error::RankDeficient);
        }
        Ok(Self { basis: h })
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.num_rows()
    }

    /// `[Z^n : L]`, the product of the pivots.
    pub fn index(&self) -> BigInt {
        (0..self.rank()).map(|i| self.basis[(i, i)].clone()).product()
    }

    /// Canonical representative of `v + L`: coordinate `i` lands in `[0, d_i)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut v = v.to_vec();
        for i in 0..self.rank() {
            let q = v[i].div_floor(&self.basis[(i, i)]);
            if q.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(self.basis.row(i)) {
                *x -= &q * b;
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

/// Ideal of `O` generated by `gens`: the lattice spanned by all `g * b_i`.
pub fn order_ideal(order: &Order, gens: &[Vec<BigInt>]) -> Result<IntegerLattice> {
    let n = order.rank();
    if gens.iter().any(|g| g.len() != n) {
        return Err(Error::Dimension(format!("generators must have {n} coordinates")));
    }
    let rows = gens
        .iter()
        .flat_map(|g| (0..n).map(move |i| order.mul(g, &order.basis_vector(i))))
        .collect();
    IntegerLattice::from_rows(rows, n)
}

/// `L1 n L2`, read off the HNF of `[[L1, L1], [L2, 0]]`.
pub fn lattice_intersect(a: &IntegerLattice, b: &IntegerLattice) -> IntegerLattice {
    let n = a.rank();
    let mut rows = Vec::with_capacity(2 * n);
    for r in a.basis.row_vecs() {
        rows.push(r.iter().chain(r.iter()).cloned().collect());
    }
    for r in b.basis.row_vecs() {
        rows.push(
            r.iter()
                .cloned()
                .chain(std::iter::repeat_n(BigInt::zero(), n))
                .collect(),
        );
    }
    let h = hnf(&IntMatrix::from_rows(rows, 2 * n));
    let bottom = (0..h.num_rows())
        .filter(|&i| h.row(i)[..n].iter().all(Zero::is_zero))
        .map(|i| h.row(i)[n..].to_vec())
        .collect();
    IntegerLattice::from_rows(bottom, n).expect("intersection of full-rank lattices has full rank")
}

pub fn is_ideal_lattice(order: &Order, l: &IntegerLattice) -> bool {
    l.basis
        .row_vecs()
        .iter()
        .all(|r| (0..order.rank()).all(|i| l.contains(&order.mul(r, &order.basis_vector(i)))))
}

/// `O/L` as a finite ring plus the coordinate projection `Z^n -> O/L`.
#[derive(Debug, Clone)]
pub struct OrderQuotient {
    pub ring: Arc<FiniteRing>,
    pub lattice: IntegerLattice,
    map: GroupMap,
}

impl OrderQuotient {
    pub fn project(&self, v: &[BigInt]) -> usize {
        self.ring.index_of_coords(&self.map.forward(v))
    }

    /// Integer vector mapping to `x`.
    pub fn lift(&self, x: usize) -> Vec<BigInt> {
        self.map.lift(self.ring.coords(x))
    }

    /// Image of an ideal lattice containing `self.lattice`.
    pub fn push_ideal(&self, l: &IntegerLattice) -> Ideal {
        let images: Vec<usize> = l.basis.row_vecs().iter().map(|r| self.project(r)).collect();
        ideal_generated(&self.ring, &images)
    }
}

pub fn order_quotient(order: &Order, l: &IntegerLattice, limits: &Limits) -> Result<OrderQuotient> {
    if l.rank() != order.rank() {
        return Err(Error::Dimension("lattice rank differs from order rank".into()));
    }
    if !is_ideal_lattice(order, l) {
        return Err(Error::NotAnIdeal);
    }
    let (ring, map) = present_quotient(&l.basis, |a, b| order.mul(a, b), &order.one(), limits)?;
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    if BigInt::from(ring.order()) != l.index().abs() {
        return Err(Error::Internal("quotient order differs from lattice index".into()));
    }
    Ok(OrderQuotient {
        ring: Arc::new(ring),
        lattice: l.clone(),
        map,
    })
}

/// A Rogers check on order ideals, carried out in `O/H`.
#[derive(Debug, Clone)]
pub struct OrderRogersReport {
    pub lattices: Vec<IntegerLattice>,
    pub intersection: IntegerLattice,
    pub quotient: OrderQuotient,
    pub report: RogersReport,
    /// Witness shifts lifted to `O`, each reduced modulo its own ideal.
    pub lifted_shifts: Vec<Vec<BigInt>>,
}

/// Checks the condition for the ideals generated by each list in `ideal_gens`.
/// With `shifts`, evaluates that single tuple instead of searching.
pub fn rogers_check_order(
    order: &Order,
    ideal_gens: &[Vec<Vec<BigInt>>],
    shifts: Option<&[Vec<BigInt>]>,
    limits: &Limits,
) -> Result<OrderRogersReport> {
    if ideal_gens.is_empty() {
        return Err(Error::NoIdeals);
    }
    let lattices = ideal_gens
        .iter()
        .map(|g| order_ideal(order, g))
        .collect::<Result<Vec<_>>>()?;
    let intersection = lattices[1..]
        .iter()
        .fold(lattices[0].clone(), |acc, l| lattice_intersect(&acc, l));
    let quotient = order_quotient(order, &intersection, limits)?;
    let ideals: Vec<Ideal> = lattices.iter().map(|l| quotient.push_ideal(l)).collect();
    let report = match shifts {
        None => rogers_check(&quotient.ring, &ideals, Mode::Full, limits)?,
        Some(s) => {
            if s.len() != ideals.len() {
                return Err(Error::ShiftCount {
                    expected: ideals.len(),
                    got: s.len(),
                });
            }
            if s.iter().any(|v| v.len() != order.rank()) {
                return Err(Error::Dimension(format!(
                    "shifts must have {} coordinates",
                    order.rank()
                )));
            }
            let projected: Vec<Element> = s.iter().map(|v| quotient.ring.element(quotient.project(v))).collect();
            rogers_check(&quotient.ring, &ideals, Mode::VerifyOnly(&projected), limits)?
        }
    };
    let lifted_shifts = report
        .witness_shifts
        .iter()
        .zip(&lattices)
        .map(|(a, l)| Ok(l.reduce(&quotient.lift(quotient.ring.index(a)?))))
        .collect::<Result<Vec<_>>>()?;
    Ok(OrderRogersReport {
        lattices,
        intersection,
        quotient,
        report,
        lifted_shifts,
    })
}

/// Violating triple of ideals of `O`, found through a quotient `O/(n)`.
#[derive(Debug, Clone)]
pub struct OrderWitness {
    pub conductor: u64,
    pub generators: Vec<Vec<Vec<BigInt>>>,
    pub lattices: Vec<IntegerLattice>,
    pub shifts: Vec<Vec<BigInt>>,
    /// Unions counted in `O/H` for `H` the intersection of the three ideals.
    pub union_shifted: usize,
    pub union_baseline: usize,
}

/// Scans `O/(n)` for `n = 2..=bound` and lifts the first violation found.
pub fn nonmaximality_probe(order: &Order, bound: u64, limits: &Limits) -> Result<Option<OrderWitness>> {
    if bound < 2 {
        return Err(Error::InvalidBound(format!(
            "probe bound must be at least 2, got {bound}"
        )));
    }
    let n = order.rank();
    for c in 2..=bound {
        let cb = BigInt::from(c);
        let scaled = |i: usize| -> Vec<BigInt> { order.basis_vector(i).into_iter().map(|x| x * &cb).collect() };
        let conductor = order_ideal(order, &[scaled(0)])?;
        let q = order_quotient(order, &conductor, limits)?;
        if classify(&q.ring, limits)?.is_chain_local_product {
            continue;
        }
        let w = counterexample(&q.ring, limits)?;
        let generators: Vec<Vec<Vec<BigInt>>> = w
            .ideals
            .iter()
            .map(|id| {
                id.generators()
                    .iter()
                    .map(|&g| q.lift(g))
                    .chain((0..n).map(scaled))
                    .collect()
            })
            .collect();
        let shifts = w
            .shifts
            .iter()
            .map(|a| Ok(q.lift(q.ring.index(a)?)))
            .collect::<Result<Vec<_>>>()?;
        let check = rogers_check_order(order, &generators, Some(&shifts), limits)?;
        if check.report.satisfied {
            return Err(Error::Internal(format!("lifted witness at n = {c} does not re-verify")));
        }
        return Ok(Some(OrderWitness {
            conductor: c,
            generators,
            lattices: check.lattices,
            shifts: check.lifted_shifts,
            union_shifted: check.report.minimum,
            union_baseline: check.report.baseline,
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ideal::all_ideals;
    use crate::ideal::ideals_form_chain;
    use crate::local::is_local;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rows(l: &IntegerLattice) -> Vec<Vec<BigInt>> {
        l.basis().row_vecs()
    }

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn validation() {
        catalog::order("Z2i", &l()).unwrap();
        catalog::order("Zx2x", &l()).unwrap();
        let mut p = OrderPresentation::identity_table(3);
        p.set_ordered_product(1, 2, v(&[1, 0, 0]));
        assert_eq!(
            validate_order(p, &l()).unwrap_err(),
            Error::NotCommutative { i: 1, j: 2 }
        );
        let mut p = OrderPresentation::identity_table(2);
        p.set_ordered_product(1, 0, v(&[0, 2]));
        assert_eq!(validate_order(p, &l()).unwrap_err(), Error::BadUnit { index: 1 });
        // b2^2 = b3, b3^2 = b2, b2 b3 = 0 is not associative.
        let mut p = OrderPresentation::identity_table(3);
        p.set_product(1, 1, v(&[0, 0, 1]));
        p.set_product(2, 2, v(&[0, 1, 0]));
        assert!(matches!(validate_order(p, &l()), Err(Error::NotAssociative { .. })));
        let p = OrderPresentation::identity_table(9);
        assert!(matches!(validate_order(p, &l()), Err(Error::RankTooLarge { .. })));
    }

    #[test]
    fn z2i_ideals() {
        let o = catalog::order("Z2i", &l()).unwrap();
        let i1 = order_ideal(&o, &[v(&[2, 0])]).unwrap();
        assert_eq!(rows(&i1), vec![v(&[2, 0]), v(&[0, 2])]);
        assert_eq!(i1.index(), BigInt::from(4));
        let i2 = order_ideal(&o, &[v(&[0, 1])]).unwrap();
        assert_eq!(rows(&i2), vec![v(&[4, 0]), v(&[0, 1])]);
        let i3 = order_ideal(&o, &[v(&[2, 1]), v(&[4, 0])]).unwrap();
        assert_eq!(rows(&i3), vec![v(&[2, 1]), v(&[0, 2])]);
        assert_eq!(order_ideal(&o, &[v(&[0, 0])]).unwrap_err(), Error::RankDeficient);

        let i12 = lattice_intersect(&i1, &i2);
        assert_eq!(rows(&i12), vec![v(&[4, 0]), v(&[0, 2])]);
        assert_eq!(lattice_intersect(&i1, &i1), i1);
        let h = lattice_intersect(&i12, &i3);
        // (4, 2) = (4, 0) + (0, 2); the reduced form has 0 above the pivot.
        assert_eq!(rows(&h), vec![v(&[4, 0]), v(&[0, 2])]);
        assert!(h.contains(&v(&[4, 2])));
        assert_eq!(h.index(), BigInt::from(8));
        assert!(is_ideal_lattice(&o, &h));
    }

    #[test]
    fn quotients() {
        let o = catalog::order("Z2i", &l()).unwrap();
        let i1 = order_ideal(&o, &[v(&[2, 0])]).unwrap();
        let q = order_quotient(&o, &i1, &l()).unwrap();
        assert_eq!(q.ring.order(), 4);
        assert!(is_local(&q.ring).unwrap().is_some());
        assert!(ideals_form_chain(&all_ideals(&q.ring)));
        let unit = IntegerLattice::from_rows(vec![v(&[1, 0]), v(&[0, 1])], 2).unwrap();
        assert_eq!(order_quotient(&o, &unit, &l()).unwrap_err(), Error::ZeroRing);
        let not_ideal = IntegerLattice::from_rows(vec![v(&[1, 0]), v(&[0, 2])], 2).unwrap();
        assert_eq!(order_quotient(&o, &not_ideal, &l()).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn z2i_triple() {
        let o = catalog::order("Z2i", &l()).unwrap();
        let gens = vec![vec![v(&[2, 0])], vec![v(&[0, 1])], vec![v(&[2, 1]), v(&[4, 0])]];
        let r = rogers_check_order(&o, &gens, None, &l()).unwrap();
        assert_eq!(r.quotient.ring.order(), 8);
        assert_eq!((r.report.baseline, r.report.minimum), (4, 3));
        assert!(!r.report.satisfied);
        assert_eq!(r.lifted_shifts, vec![v(&[0, 0]), v(&[2, 0]), v(&[0, 0])]);
        let single = rogers_check_order(&o, &gens[..1], None, &l()).unwrap();
        assert!(single.report.satisfied);
    }

    #[test]
    fn probes() {
        let o = catalog::order("Z2i", &l()).unwrap();
        let w = nonmaximality_probe(&o, 4, &l()).unwrap().unwrap();
        assert_eq!(w.conductor, 4);
        assert!(w.union_shifted < w.union_baseline);
        assert!(nonmaximality_probe(&o, 3, &l()).unwrap().is_none());
        let zi = catalog::order("Zi", &l()).unwrap();
        assert!(nonmaximality_probe(&zi, 20, &l()).unwrap().is_none());
        assert!(matches!(nonmaximality_probe(&zi, 1, &l()), Err(Error::InvalidBound(_))));
    }
}
