//! Densities of unions of shifted arithmetic progressions in `Z`.

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::config::Limits;
use crate::error::{Error, Result};

/// The set `a + qZ`, with `a` reduced into `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Progression {
    shift: u64,
    modulus: u64,
}

impl Progression {
    pub fn new(shift: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::BadModulus);
        }
        Ok(Self {
            shift: shift.rem_euclid(modulus as i64) as u64,
            modulus,
        })
    }

    pub fn shift(&self) -> u64 {
        self.shift
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub density: Ratio<u64>,
    pub period: u64,
    pub residues: u64,
    pub min_density: Ratio<u64>,
    pub witness_shifts: Vec<u64>,
}

fn period(moduli: &[u64], limits: &Limits) -> Result<u64> {
    if moduli.is_empty() {
        return Err(Error::Dimension("at least one progression is required".into()));
    }
    if moduli.contains(&0) {
        return Err(Error::BadModulus);
    }
    let mut l: u128 = 1;
    for &q in moduli {
        l = l.lcm(&(q as u128));
        if l > limits.period_cap as u128 {
            return Err(Error::PeriodTooLarge {
                required: l,
                bound: limits.period_cap,
            });
        }
    }
    Ok(l as u64)
}

fn covered(period: u64, ps: &[Progression], mark: &mut [bool]) -> u64 {
    mark.fill(false);
    let mut count = 0;
    for p in ps {
        let mut x = p.shift;
        while x < period {
            if !mark[x as usize] {
                mark[x as usize] = true;
                count += 1;
            }
            x += p.modulus;
        }
    }
    count
}

/// Exact density of `U_j (a_j + q_j Z)`. The minimum fields repeat the density.
pub fn union_density(ps: &[Progression], limits: &Limits) -> Result<DensityReport> {
    let moduli: Vec<u64> = ps.iter().map(|p| p.modulus).collect();
    let l = period(&moduli, limits)?;
    let mut mark = vec![false; l as usize];
    let residues = covered(l, ps, &mut mark);
    let density = Ratio::new(residues, l);
    Ok(DensityReport {
        density,
        period: l,
        residues,
        min_density: density,
        witness_shifts: ps.iter().map(|p| p.shift).collect(),
    })
}

/// Minimum density over all shift tuples with `a_1 = 0`. The density fields
/// describe the zero-shift union; the first minimizer in mixed-radix order
/// (`a_2` fastest) is reported.
pub fn rogers_min_density(moduli: &[u64], limits: &Limits) -> Result<DensityReport> {
    let l = period(moduli, limits)?;
    let space: u128 = moduli[1..].iter().map(|&q| q as u128).product();
    if space > limits.tuple_cap as u128 {
        return Err(Error::SearchSpaceTooLarge {
            required: space,
            cap: limits.tuple_cap,
        });
    }
    let shifts_of = |mut t: u64| -> Vec<u64> {
        let mut s = vec![0];
        for &q in &moduli[1..] {
            s.push(t % q);
            t /= q;
        }
        s
    };
    let progressions = |s: &[u64]| -> Vec<Progression> {
        s.iter()
            .zip(moduli)
            .map(|(&a, &q)| Progression { shift: a, modulus: q })
            .collect()
    };
    let mut mark = vec![false; l as usize];
    let zero = covered(l, &progressions(&vec![0; moduli.len()]), &mut mark);

    let (min, t) = (0..space as u64)
        .into_par_iter()
        .map_init(
            || vec![false; l as usize],
            |m, t| (covered(l, &progressions(&shifts_of(t)), m), t),
        )
        .min()
        .expect("nonempty shift space");
    if min > zero {
        return Err(Error::Internal("minimum exceeds the zero-shift value".into()));
    }
    Ok(DensityReport {
        density: Ratio::new(zero, l),
        period: l,
        residues: zero,
        min_density: Ratio::new(min, l),
        witness_shifts: shifts_of(t),
    })
}
