//! Deciding the sieving condition for ideals of a finite ring, and building
//! explicit violations.
//!
//! For ideals `I_1, ..., I_r` of `R` the condition asks that
//! `|U_j (a_j + I_j)| >= |U_j I_j|` for every shift tuple. The union only
//! depends on `a_j mod I_j`, and translating every shift by the same element
//! preserves it, so `a_1 = 0` and `a_j` ranges over the smallest-element
//! transversal of `I_j`.
//!
//! The search runs in `R/H` with `H = n_j I_j`: every coset involved is a
//! union of `H`-cosets. Shifts `a_3, ..., a_r` are enumerated; `a_2` is solved
//! exactly by counting, for each coset of `I_2`, how many `H`-cosets of the
//! partial union it already covers. Tuples are ordered mixed-radix with `a_2`
//! varying fastest, and the first minimizer in that order is reported.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::ideal::{all_ideals, annihilator, ideal_generated, minimal_ideals, sum, Ideal};
use crate::local::{classify_decomposition, is_local, local_decomposition};
use crate::ring::{make_quotient, Element, FiniteRing};

/// Outcome of a Rogers check on a list of ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RogersReport {
    pub ideals: Vec<Ideal>,
    /// `|U_j I_j|`
    pub baseline: usize,
    /// Smallest shifted union found (exact in full mode).
    pub minimum: usize,
    pub witness_shifts: Vec<Element>,
    pub satisfied: bool,
    /// Number of shift tuples covered, `prod_{j >= 2} [R : I_j]` in full mode.
    pub tuples_examined: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode<'a> {
    Full,
    VerifyOnly(&'a [Element]),
}

/// A triple of ideals plus shifts whose shifted union is strictly smaller
/// than the plain union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub ideals: Vec<Ideal>,
    pub shifts: Vec<Element>,
    pub union_shifted: usize,
    pub union_baseline: usize,
}

impl Witness {
    /// Recomputes both unions from scratch by marking carrier elements.
    pub fn verify(&self, ring: &FiniteRing) -> Result<()> {
        let shifts = self.shifts.iter().map(|s| ring.index(s)).collect::<Result<Vec<_>>>()?;
        let shifted = shifted_union_size(ring, &self.ideals, &shifts);
        let baseline = union_size(&self.ideals);
        if shifted != self.union_shifted || baseline != self.union_baseline || shifted >= baseline {
            return Err(Error::Internal(format!(
                "witness does not re-verify: shifted {shifted}, baseline {baseline}"
            )));
        }
        Ok(())
    }
}

pub fn union_size(ideals: &[Ideal]) -> usize {
    let mut m = ideals[0].members().clone();
    for i in &ideals[1..] {
        m.union_with(i.members());
    }
    m.count_ones(..)
}

/// `|U_j (a_j + I_j)|` by direct marking in `R`.
pub fn shifted_union_size(ring: &FiniteRing, ideals: &[Ideal], shifts: &[usize]) -> usize {
    let mut m = FixedBitSet::with_capacity(ring.order());
    for (ideal, &a) in ideals.iter().zip(shifts) {
        for x in ideal.members().ones() {
            m.insert(ring.add(a, x));
        }
    }
    m.count_ones(..)
}

/// Cosets of an ideal, numbered by their smallest element.
#[derive(Debug, Clone)]
struct Cosets {
    id: Vec<u32>,
    reps: Vec<usize>,
}

impl Cosets {
    fn new(ring: &FiniteRing, ideal: &Ideal) -> Self {
        let members = ideal.member_list();
        let mut id = vec![u32::MAX; ring.order()];
        let mut reps = Vec::with_capacity(ring.order() / members.len());
        for x in ring.elements() {
            if id[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &m in &members {
                id[ring.add(x, m)] = c;
            }
        }
        Self { id, reps }
    }

    fn count(&self) -> usize {
        self.reps.len()
    }
}

/// `H`-cosets contained in `ideal`, as ids.
fn cosets_inside(h: &Cosets, ideal: &Ideal) -> Vec<u32> {
    ideal
        .members()
        .ones()
        .filter(|&x| h.reps[h.id[x] as usize] == x)
        .map(|x| h.id[x])
        .collect()
}

/// Reusable per-worker marking buffers.
struct Scratch {
    mark: Vec<u32>,
    count: Vec<u32>,
    count_stamp: Vec<u32>,
    generation: u32,
    union: Vec<u32>,
    touched: Vec<u32>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            mark: vec![0; n],
            count: vec![0; n],
            count_stamp: vec![0; n],
            generation: 0,
            union: Vec::new(),
            touched: Vec::new(),
        }
    }

    fn next_generation(&mut self) -> u32 {
        if self.generation == u32::MAX {
            self.mark.fill(0);
            self.count_stamp.fill(0);
            self.generation = 0;
        }
        self.generation += 1;
        self.union.clear();
        self.touched.clear();
        self.generation
    }
}

/// One search problem: a fixed ideal (shift 0), a solved ideal and the
/// enumerated ones, all viewed in `R/H`.
struct Search<'a> {
    ring: &'a FiniteRing,
    h: &'a Cosets,
    h_size: usize,
    fixed: Vec<u32>,
    solved: Vec<u32>,
    solved_cosets: &'a Cosets,
    /// `H`-coset id to coset id of the solved ideal.
    solved_of_h: Vec<u32>,
    enumerated: Vec<(Vec<u32>, &'a Cosets)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Candidate {
    union: usize,
    /// Mixed-radix rank of the tuple, solved shift fastest.
    rank: u128,
    solved_coset: u32,
    prefix: u128,
}

impl<'a> Search<'a> {
    fn new(
        ring: &'a FiniteRing,
        h: &'a Cosets,
        h_size: usize,
        fixed: &Ideal,
        solved: (&Ideal, &'a Cosets),
        enumerated: Vec<(&Ideal, &'a Cosets)>,
    ) -> Self {
        let solved_of_h = h.reps.iter().map(|&x| solved.1.id[x]).collect();
        Self {
            ring,
            h,
            h_size,
            fixed: cosets_inside(h, fixed),
            solved: cosets_inside(h, solved.0),
            solved_cosets: solved.1,
            solved_of_h,
            enumerated: enumerated.into_iter().map(|(i, c)| (cosets_inside(h, i), c)).collect(),
        }
    }

    fn prefix_count(&self) -> u128 {
        self.enumerated.iter().map(|(_, c)| c.count() as u128).product()
    }

    fn prefix_shifts(&self, mut p: u128) -> Vec<usize> {
        self.enumerated
            .iter()
            .map(|(_, c)| {
                let n = c.count() as u128;
                let d = (p % n) as usize;
                p /= n;
                c.reps[d]
            })
            .collect()
    }

    /// Best completion of prefix `p`: exact minimum over the solved shift.
    fn evaluate(&self, p: u128, s: &mut Scratch) -> Candidate {
        let g = s.next_generation();
        let shifts = self.prefix_shifts(p);
        for &c in &self.fixed {
            if s.mark[c as usize] != g {
                s.mark[c as usize] = g;
                s.union.push(c);
            }
        }
        for ((inside, _), &a) in self.enumerated.iter().zip(&shifts) {
            for &c in inside {
                let x = self.h.id[self.ring.add(a, self.h.reps[c as usize])];
                if s.mark[x as usize] != g {
                    s.mark[x as usize] = g;
                    s.union.push(x);
                }
            }
        }
        for &c in &s.union {
            let t = self.solved_of_h[c as usize] as usize;
            if s.count_stamp[t] != g {
                s.count_stamp[t] = g;
                s.count[t] = 0;
                s.touched.push(t as u32);
            }
            s.count[t] += 1;
        }
        // The zero coset is always touched, so the best is among touched ones.
        let mut best = (0u32, u32::MAX);
        for &t in &s.touched {
            let c = s.count[t as usize];
            if c > best.0 || (c == best.0 && t < best.1) {
                best = (c, t);
            }
        }
        let union_h = s.union.len() + self.solved.len() - best.0 as usize;
        Candidate {
            union: union_h * self.h_size,
            rank: best.1 as u128 + self.solved_cosets.count() as u128 * p,
            solved_coset: best.1,
            prefix: p,
        }
    }

    fn minimize(&self, parallel: bool) -> Candidate {
        let n = self.prefix_count();
        let scratch = || Scratch::new(self.ring.order());
        if !parallel || n < 256 {
            let mut s = scratch();
            return (0..n)
                .map(|p| self.evaluate(p, &mut s))
                .min()
                .expect("nonempty shift space");
        }
        let chunks = (rayon::current_num_threads() as u128 * 8).min(n);
        let step = n.div_ceil(chunks);
        (0..chunks)
            .into_par_iter()
            .map_init(scratch, |s, c| {
                let lo = c * step;
                let hi = ((c + 1) * step).min(n);
                (lo..hi).map(|p| self.evaluate(p, s)).min()
            })
            .flatten()
            .min()
            .expect("nonempty shift space")
    }

    fn first_below(&self, bound: usize, s: &mut Scratch) -> Option<Candidate> {
        (0..self.prefix_count())
            .map(|p| self.evaluate(p, s))
            .find(|c| c.union < bound)
    }
}

fn check_ideals(ring: &FiniteRing, ideals: &[Ideal]) -> Result<()> {
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    if ideals.is_empty() {
        return Err(Error::NoIdeals);
    }
    if ideals.iter().any(|i| i.members().len() != ring.order()) {
        return Err(Error::ForeignIdeal);
    }
    Ok(())
}

fn intersection(ring: &FiniteRing, ideals: &[Ideal]) -> Ideal {
    let mut m = ideals[0].members().clone();
    for i in &ideals[1..] {
        m.intersect_with(i.members());
    }
    Ideal::from_mask(ring, m)
}

/// Decides the condition for `ideals` (full mode) or evaluates one tuple.
pub fn rogers_check(ring: &FiniteRing, ideals: &[Ideal], mode: Mode<'_>, limits: &Limits) -> Result<RogersReport> {
    check_ideals(ring, ideals)?;
    let baseline = union_size(ideals);
    let r = ideals.len();

    if let Mode::VerifyOnly(shifts) = mode {
        if shifts.len() != r {
            return Err(Error::ShiftCount {
                expected: r,
                got: shifts.len(),
            });
        }
        let idx = shifts.iter().map(|s| ring.index(s)).collect::<Result<Vec<_>>>()?;
        let minimum = shifted_union_size(ring, ideals, &idx);
        let base = idx[0];
        let witness_shifts = idx.iter().map(|&a| ring.element(ring.sub(a, base))).collect();
        return Ok(RogersReport {
            ideals: ideals.to_vec(),
            baseline,
            minimum,
            witness_shifts,
            satisfied: minimum >= baseline,
            tuples_examined: 1,
        });
    }

    let index = |i: &Ideal| (ring.order() / i.size()) as u128;
    let tuples_examined: u128 = ideals[1..].iter().map(index).product();
    if r == 1 {
        return Ok(RogersReport {
            ideals: ideals.to_vec(),
            baseline,
            minimum: baseline,
            witness_shifts: vec![ring.element(0)],
            satisfied: true,
            tuples_examined,
        });
    }
    let prefixes: u128 = ideals[2..].iter().map(index).product();
    if prefixes > limits.tuple_cap as u128 {
        return Err(Error::SearchSpaceTooLarge {
            required: prefixes,
            cap: limits.tuple_cap,
        });
    }

    let h_ideal = intersection(ring, ideals);
    let h = Cosets::new(ring, &h_ideal);
    let cosets: Vec<Cosets> = ideals[1..].iter().map(|i| Cosets::new(ring, i)).collect();
    let search = Search::new(
        ring,
        &h,
        h_ideal.size(),
        &ideals[0],
        (&ideals[1], &cosets[0]),
        ideals[2..].iter().zip(&cosets[1..]).collect(),
    );
    let best = search.minimize(true);

    let mut witness_shifts = vec![
        ring.element(0),
        ring.element(cosets[0].reps[best.solved_coset as usize]),
    ];
    witness_shifts.extend(search.prefix_shifts(best.prefix).into_iter().map(|a| ring.element(a)));
    Ok(RogersReport {
        ideals: ideals.to_vec(),
        baseline,
        minimum: best.union,
        witness_shifts,
        satisfied: best.union >= baseline,
        tuples_examined,
    })
}

/// For a local ring with at least two minimal ideals: three distinct lines in
/// a plane inside the socle `Ann(m)`, with the middle one shifted off zero.
pub fn socle_witness(ring: &FiniteRing, limits: &Limits) -> Result<Witness> {
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    let m = is_local(ring)?.ok_or(Error::NotLocal)?;
    let ideals = all_ideals(ring);
    if minimal_ideals(&ideals).len() < 2 {
        return Err(Error::UniqueMinimalIdeal);
    }
    let socle = annihilator(ring, &m);
    let s1 = socle
        .members()
        .ones()
        .find(|&x| x != 0)
        .ok_or(Error::UniqueMinimalIdeal)?;
    let line1 = ideal_generated(ring, &[s1]);
    let s2 = socle
        .members()
        .ones()
        .find(|&x| !line1.contains(x))
        .ok_or(Error::UniqueMinimalIdeal)?;
    let plane = sum(ring, &line1, &ideal_generated(ring, &[s2]));

    let mut lines: Vec<Ideal> = Vec::with_capacity(3);
    for h in plane.members().ones().filter(|&x| x != 0) {
        if lines.iter().any(|l| l.contains(h)) {
            continue;
        }
        lines.push(ideal_generated(ring, &[h]));
        if lines.len() == 3 {
            break;
        }
    }
    if lines.len() < 3 {
        return Err(Error::Internal("socle plane has fewer than three lines".into()));
    }
    let v = plane
        .members()
        .ones()
        .find(|&x| !lines[1].contains(x))
        .expect("plane is larger than a line");
    let shifts = [ring.element(0), ring.element(v), ring.element(0)];
    witness_from(ring, lines, &shifts, limits)
}

fn witness_from(ring: &FiniteRing, ideals: Vec<Ideal>, shifts: &[Element], limits: &Limits) -> Result<Witness> {
    let report = rogers_check(ring, &ideals, Mode::VerifyOnly(shifts), limits)?;
    if report.satisfied {
        return Err(Error::Internal(
            "constructed tuple does not violate the condition".into(),
        ));
    }
    let w = Witness {
        ideals,
        shifts: report.witness_shifts,
        union_shifted: report.minimum,
        union_baseline: report.baseline,
    };
    w.verify(ring)?;
    Ok(w)
}

/// Builds a violating triple for any ring that is not a product of local
/// chain rings: pick the first non-chain local factor, find the witness there
/// (socle plane, or recursion through the quotient by the unique minimal
/// ideal), then pull it back to `R` as `I_j x (other factors)`.
pub fn counterexample(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<Witness> {
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    let dec = local_decomposition(ring, limits)?;
    let verdict = classify_decomposition(&dec)?;
    let i = verdict.offending_factor.ok_or(Error::AlreadyChainLocalProduct)?;
    let factor = &dec.factors[i];
    let local = local_counterexample(factor, limits)?;
    if dec.factors.len() == 1 {
        return Ok(local);
    }
    let pi = &dec.projections[i];
    let e = dec.idempotents[i];
    let ideals = local
        .ideals
        .iter()
        .map(|id| Ideal::from_mask(ring, pi.preimage_mask(id.members())))
        .collect();
    let shifts = local
        .shifts
        .iter()
        .map(|a| {
            let y = pi.min_preimage(factor.index(a)?).expect("projection is onto");
            Ok(ring.element(ring.mul(e, y)))
        })
        .collect::<Result<Vec<_>>>()?;
    witness_from(ring, ideals, &shifts, limits)
}

fn local_counterexample(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<Witness> {
    match socle_witness(ring, limits) {
        Err(Error::UniqueMinimalIdeal) => {}
        other => return other,
    }
    let ideals = all_ideals(ring);
    let minimal = minimal_ideals(&ideals);
    let j0 = minimal.first().ok_or(Error::UniqueMinimalIdeal)?;
    let (quotient, pi) = make_quotient(ring, j0, limits)?;
    let below = counterexample(&quotient, limits).map_err(|e| match e {
        Error::AlreadyChainLocalProduct => Error::Internal("quotient by the minimal ideal became a chain ring".into()),
        e => e,
    })?;
    let lifted = below
        .ideals
        .iter()
        .map(|id| Ideal::from_mask(ring, pi.preimage_mask(id.members())))
        .collect();
    let shifts = below
        .shifts
        .iter()
        .map(|a| Ok(ring.element(pi.min_preimage(quotient.index(a)?).expect("quotient map is onto"))))
        .collect::<Result<Vec<_>>>()?;
    witness_from(ring, lifted, &shifts, limits)
}

/// Result of scanning every unordered triple of ideals.
#[derive(Debug, Clone)]
pub struct TripleScanReport {
    pub verdict: bool,
    pub ideal_count: usize,
    pub triples: usize,
    pub violation: Option<Witness>,
}

/// `true` iff every unordered triple (with repetition) of ideals satisfies the
/// condition, by exhaustive shift search with early exit.
pub fn theorem2_verify(ring: &FiniteRing, limits: &Limits) -> Result<bool> {
    Ok(theorem2_scan(ring, limits)?.verdict)
}

pub fn theorem2_scan(ring: &FiniteRing, limits: &Limits) -> Result<TripleScanReport> {
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    let ideals = all_ideals(ring);
    let n = ideals.len();
    let position: HashMap<&FixedBitSet, usize> = ideals.iter().enumerate().map(|(i, id)| (id.members(), i)).collect();
    let cosets: Vec<Cosets> = ideals.par_iter().map(|i| Cosets::new(ring, i)).collect();

    let mut triples = Vec::with_capacity(n * (n + 1) * (n + 2) / 6);
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                triples.push([a, b, c]);
            }
        }
    }
    // Enumerated prefixes are indexed by the largest ideal of the triple.
    if let Some(largest) = triples.iter().map(|t| ring.order() / ideals[t[2]].size()).max() {
        if largest as u128 > limits.tuple_cap as u128 {
            return Err(Error::SearchSpaceTooLarge {
                required: largest as u128,
                cap: limits.tuple_cap,
            });
        }
    }

    let found = triples
        .par_iter()
        .map_init(
            || Scratch::new(ring.order()),
            |scratch, t| {
                let tri = [&ideals[t[0]], &ideals[t[1]], &ideals[t[2]]];
                let mut h = tri[0].members().clone();
                h.intersect_with(tri[1].members());
                h.intersect_with(tri[2].members());
                let hi = position[&h];
                // all_ideals is sorted by size, so t[0] is smallest.
                let search = Search::new(
                    ring,
                    &cosets[hi],
                    ideals[hi].size(),
                    tri[0],
                    (tri[1], &cosets[t[1]]),
                    vec![(tri[2], &cosets[t[2]])],
                );
                let baseline = union_size(&[tri[0].clone(), tri[1].clone(), tri[2].clone()]);
                search.first_below(baseline, scratch).map(|c| {
                    let solved = cosets[t[1]].reps[c.solved_coset as usize];
                    let enumerated = search.prefix_shifts(c.prefix)[0];
                    (*t, [0, solved, enumerated])
                })
            },
        )
        .find_first(Option::is_some)
        .flatten();

    let violation = match found {
        None => None,
        Some((t, shifts)) => {
            let shifts: Vec<Element> = shifts.iter().map(|&a| ring.element(a)).collect();
            let triple = t.iter().map(|&i| ideals[i].clone()).collect();
            Some(witness_from(ring, triple, &shifts, limits)?)
        }
    };
    Ok(TripleScanReport {
        verdict: violation.is_none(),
        ideal_count: n,
        triples: triples.len(),
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ideal::{all_ideals, ideal_generated};
    use crate::ring::make_cyclic;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn f2xy_lines_full_search() {
        let r = catalog::f2xy(&l()).unwrap();
        let (x, y) = (r.basis(1), r.basis(2));
        let ideals = vec![
            ideal_generated(&r, &[x]),
            ideal_generated(&r, &[y]),
            ideal_generated(&r, &[r.add(x, y)]),
        ];
        let rep = rogers_check(&r, &ideals, Mode::Full, &l()).unwrap();
        assert_eq!(rep.baseline, 4);
        assert_eq!(rep.minimum, 3);
        assert!(!rep.satisfied);
        assert_eq!(rep.witness_shifts, vec![r.element(0), r.element(x), r.element(0)]);
        assert_eq!(rep.tuples_examined, 16);
    }

    #[test]
    fn single_ideal_is_trivial() {
        let z12 = make_cyclic(12, &l()).unwrap();
        let i = ideal_generated(&z12, &[3]);
        let rep = rogers_check(&z12, std::slice::from_ref(&i), Mode::Full, &l()).unwrap();
        assert_eq!((rep.minimum, rep.baseline), (4, 4));
        assert!(rep.satisfied);
    }

    #[test]
    fn pairs_in_z12_are_satisfied() {
        let z12 = make_cyclic(12, &l()).unwrap();
        let ideals = all_ideals(&z12);
        for a in &ideals {
            for b in &ideals {
                let rep = rogers_check(&z12, &[a.clone(), b.clone()], Mode::Full, &l()).unwrap();
                assert!(rep.satisfied);
                assert_eq!(rep.minimum, rep.baseline);
            }
        }
    }

    #[test]
    fn verify_only_and_errors() {
        let r = catalog::f2xy(&l()).unwrap();
        let ideals = all_ideals(&r);
        let shifts = vec![r.element(0)];
        assert_eq!(
            rogers_check(&r, &ideals[..2], Mode::VerifyOnly(&shifts), &l()).unwrap_err(),
            Error::ShiftCount { expected: 2, got: 1 }
        );
        assert_eq!(rogers_check(&r, &[], Mode::Full, &l()).unwrap_err(), Error::NoIdeals);
        let zero = ideal_generated(&r, &[]);
        let tight = l().with_tuple_cap(7);
        assert!(matches!(
            rogers_check(&r, &[zero.clone(), zero.clone(), zero], Mode::Full, &tight),
            Err(Error::SearchSpaceTooLarge { required: 8, cap: 7 })
        ));
    }

    #[test]
    fn socle_witness_examples() {
        let w = socle_witness(&catalog::f2xy(&l()).unwrap(), &l()).unwrap();
        assert_eq!((w.union_shifted, w.union_baseline), (3, 4));
        let w = socle_witness(&catalog::socle_ring(3, &l()).unwrap(), &l()).unwrap();
        assert_eq!((w.union_shifted, w.union_baseline), (6, 7));
        let z8 = make_cyclic(8, &l()).unwrap();
        assert_eq!(socle_witness(&z8, &l()).unwrap_err(), Error::UniqueMinimalIdeal);
        let z6 = make_cyclic(6, &l()).unwrap();
        assert_eq!(socle_witness(&z6, &l()).unwrap_err(), Error::NotLocal);
    }

    #[test]
    fn counterexample_examples() {
        let r = catalog::ring("Z4*F2xy", &l()).unwrap();
        let w = counterexample(&r, &l()).unwrap();
        assert_eq!((w.union_shifted, w.union_baseline), (12, 16));
        w.verify(&r).unwrap();

        let c1 = catalog::c1(&l()).unwrap();
        let w = counterexample(&c1, &l()).unwrap();
        assert_eq!((w.union_shifted, w.union_baseline), (6, 8));

        let z12 = make_cyclic(12, &l()).unwrap();
        assert_eq!(counterexample(&z12, &l()).unwrap_err(), Error::AlreadyChainLocalProduct);
    }

    #[test]
    fn triple_scan_small_cases() {
        let z12 = make_cyclic(12, &l()).unwrap();
        assert!(theorem2_verify(&z12, &l()).unwrap());
        let r = catalog::f2xy(&l()).unwrap();
        let rep = theorem2_scan(&r, &l()).unwrap();
        assert!(!rep.verdict);
        rep.violation.unwrap().verify(&r).unwrap();
        assert!(theorem2_verify(&catalog::finite_field(5, &l()).unwrap(), &l()).unwrap());
    }
}
