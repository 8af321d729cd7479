//! Order quotients, ideal lattices and the Z[2i] triple.

use num_bigint::BigInt;
use proptest::prelude::*;

use rogers_core::catalog;
use rogers_core::matrix::IntMatrix;
use rogers_core::order::{
    is_ideal_lattice, lattice_intersect, nonmaximality_probe, order_ideal, order_quotient, rogers_check_order,
    IntegerLattice, Order,
};
use rogers_core::Limits;

fn l() -> Limits {
    Limits::default()
}

fn v(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn z2i() -> Order {
    catalog::order("Z2i", &l()).unwrap()
}

fn triple() -> Vec<Vec<Vec<BigInt>>> {
    vec![vec![v(&[2, 0])], vec![v(&[0, 1])], vec![v(&[2, 1]), v(&[4, 0])]]
}

#[test]
fn triple_is_independent_of_presentation_order() {
    let o = z2i();
    let base = rogers_check_order(&o, &triple(), None, &l()).unwrap();
    let reordered = vec![
        vec![v(&[6, 0]), v(&[2, 0])],
        vec![v(&[0, -1])],
        vec![v(&[4, 0]), v(&[2, 1])],
    ];
    let other = rogers_check_order(&o, &reordered, None, &l()).unwrap();
    assert_eq!(base.lattices, other.lattices);
    assert_eq!((other.report.baseline, other.report.minimum), (4, 3));
    assert_eq!(base.lifted_shifts, other.lifted_shifts);
}

#[test]
fn lifted_shifts_reverify() {
    let o = z2i();
    let base = rogers_check_order(&o, &triple(), None, &l()).unwrap();
    let again = rogers_check_order(&o, &triple(), Some(&base.lifted_shifts), &l()).unwrap();
    assert_eq!(again.report.minimum, 3);
    assert!(!again.report.satisfied);
}

#[test]
fn gaussian_integer_triples_hold() {
    let o = catalog::order("Zi", &l()).unwrap();
    let gens: Vec<Vec<BigInt>> = [[2, 0], [1, 1], [3, 0], [1, 2], [2, 1], [0, 4], [3, 3]]
        .iter()
        .map(|g| v(g))
        .collect();
    for a in &gens {
        for b in &gens {
            for c in &gens {
                let rep =
                    rogers_check_order(&o, &[vec![a.clone()], vec![b.clone()], vec![c.clone()]], None, &l()).unwrap();
                assert!(rep.report.satisfied, "{a:?} {b:?} {c:?}");
            }
        }
    }
}

#[test]
fn quotient_order_matches_determinant() {
    let o = z2i();
    for gens in triple() {
        let lat = order_ideal(&o, &gens).unwrap();
        assert!(is_ideal_lattice(&o, &lat));
        let q = order_quotient(&o, &lat, &l()).unwrap();
        assert_eq!(BigInt::from(q.ring.order()), lat.basis().determinant());
        q.ring.verify_axioms_exhaustive().unwrap();
    }
}

#[test]
fn probe_witness_is_a_real_violation() {
    let o = z2i();
    let w = nonmaximality_probe(&o, 10, &l()).unwrap().unwrap();
    assert_eq!(w.conductor, 4);
    let rep = rogers_check_order(&o, &w.generators, Some(&w.shifts), &l()).unwrap();
    assert_eq!(rep.report.minimum, w.union_shifted);
    assert!(w.union_shifted < w.union_baseline);
    // Z[x]/(x^2 - x) is Z x Z: every quotient is a product of chain rings.
    let split = catalog::order("Zx2x", &l()).unwrap();
    assert!(nonmaximality_probe(&split, 12, &l()).unwrap().is_none());
}

fn small_vec() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projection_is_multiplicative(x in small_vec(), y in small_vec(), g in small_vec()) {
        prop_assume!(g[0] != 0 || g[1] != 0);
        let o = z2i();
        let lat = order_ideal(&o, &[v(&g)]).unwrap();
        prop_assume!(lat.index() <= BigInt::from(4096));
        let q = order_quotient(&o, &lat, &l()).unwrap();
        let (x, y) = (v(&x), v(&y));
        let xy = o.mul(&x, &y);
        prop_assert_eq!(q.project(&xy), q.ring.mul(q.project(&x), q.project(&y)));
        let sum: Vec<BigInt> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        prop_assert_eq!(q.project(&sum), q.ring.add(q.project(&x), q.project(&y)));
        prop_assert_eq!(q.project(&q.lift(q.project(&x))), q.project(&x));
    }

    #[test]
    fn ideal_lattices_are_closed(g1 in small_vec(), g2 in small_vec()) {
        prop_assume!(g1 != vec![0, 0]);
        let o = z2i();
        let lat = order_ideal(&o, &[v(&g1), v(&g2)]).unwrap();
        for row in lat.basis().row_vecs() {
            for i in 0..2 {
                prop_assert!(lat.contains(&o.mul(&row, &o.basis_vector(i))));
            }
        }
        prop_assert!(lat.contains(&v(&g1)) && lat.contains(&v(&g2)));
    }

    #[test]
    fn intersection_is_contained_in_both(g1 in small_vec(), g2 in small_vec()) {
        prop_assume!(g1 != vec![0, 0] && g2 != vec![0, 0]);
        let o = z2i();
        let a = order_ideal(&o, &[v(&g1)]).unwrap();
        let b = order_ideal(&o, &[v(&g2)]).unwrap();
        let c = lattice_intersect(&a, &b);
        for row in c.basis().row_vecs() {
            prop_assert!(a.contains(&row) && b.contains(&row));
        }
        // [Z^2 : a n b] divides [Z^2 : a][Z^2 : b].
        prop_assert!((a.index() * b.index()) % c.index() == BigInt::from(0));
        prop_assert_eq!(lattice_intersect(&b, &a), c);
    }

    #[test]
    fn lattice_from_shuffled_rows_is_canonical(rows in prop::collection::vec(small_vec(), 2..5)) {
        let m = IntMatrix::from_i64_rows(&rows);
        let mut rev = rows.clone();
        rev.reverse();
        let a = IntegerLattice::from_rows(m.row_vecs(), 2);
        let b = IntegerLattice::from_rows(IntMatrix::from_i64_rows(&rev).row_vecs(), 2);
        prop_assert_eq!(a, b);
    }
}
