use num_rational::Ratio;
use proptest::prelude::*;

use rogers_core::sieve::{rogers_min_density, union_density, Progression};
use rogers_core::Limits;

fn progs(pairs: &[(i64, u64)]) -> Vec<Progression> {
    pairs.iter().map(|&(a, q)| Progression::new(a, q).unwrap()).collect()
}

/// Density by counting residues in a window of `period * mult` integers.
fn windowed(pairs: &[(i64, u64)], window: u64) -> Ratio<u64> {
    let hits = (0..window as i64)
        .filter(|&x| pairs.iter().any(|&(a, q)| (x - a).rem_euclid(q as i64) == 0))
        .count() as u64;
    Ratio::new(hits, window)
}

fn pairs() -> impl Strategy<Value = Vec<(i64, u64)>> {
    prop::collection::vec((-50i64..50, 1u64..=10), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn density_is_translation_invariant(ps in pairs(), t in -100i64..100) {
        let l = Limits::default();
        let moved: Vec<(i64, u64)> = ps.iter().map(|&(a, q)| (a + t, q)).collect();
        prop_assert_eq!(
            union_density(&progs(&ps), &l).unwrap().density,
            union_density(&progs(&moved), &l).unwrap().density
        );
    }

    #[test]
    fn density_agrees_on_multiples_of_the_period(ps in pairs(), mult in 1u64..4) {
        let l = Limits::default();
        let rep = union_density(&progs(&ps), &l).unwrap();
        prop_assert_eq!(rep.density, windowed(&ps, rep.period * mult));
        prop_assert_eq!(rep.density, Ratio::new(rep.residues, rep.period));
    }

    #[test]
    fn minimum_is_the_zero_shift_density(moduli in prop::collection::vec(1u64..=9, 1..4)) {
        let l = Limits::default();
        let rep = rogers_min_density(&moduli, &l).unwrap();
        prop_assert_eq!(rep.min_density, rep.density);
        let at: Vec<(i64, u64)> = rep.witness_shifts.iter().zip(&moduli).map(|(&a, &q)| (a as i64, q)).collect();
        prop_assert_eq!(union_density(&progs(&at), &l).unwrap().density, rep.min_density);
        prop_assert_eq!(rep.witness_shifts[0], 0);
    }
}
